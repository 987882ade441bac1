#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "snccc/types.hpp"

namespace snccc {

enum class CorrelationMode { aperiodic, periodic };

std::string_view to_string(CorrelationMode mode);
CorrelationMode parse_mode(std::string_view text);

// Sequence-level correlation.  Shifts follow the usual conventions:
// aperiodic values are defined for -L < tau < L and vanish outside;
// periodic values are L-periodic in tau.
//
// Both operands made only of {0, ±1, ±i} are accumulated in exact integer
// arithmetic; anything else falls back to double-precision complex sums.

/// sum_i a[i + tau] * conj(b[i]) over the overlap; 0 for |tau| >= L.
Complex acf_aperiodic(std::span<const Complex> a, std::span<const Complex> b, Shift tau);
Complex acf_aperiodic(const Sequence& a, const Sequence& b, Shift tau);

/// Cyclic sum_i a[(i + tau) mod L] * conj(b[i]).
Complex acf_periodic(std::span<const Complex> a, std::span<const Complex> b, Shift tau);
Complex acf_periodic(const Sequence& a, const Sequence& b, Shift tau);

/// Row-wise sum of sequence correlations between two codes of equal shape.
Complex code_xcorr(const Code& c1, const Code& c2, Shift tau, CorrelationMode mode);

/// Correlation values over every admissible shift: tau in (-L, L) for
/// aperiodic mode (2L - 1 points), tau in [0, L) for periodic mode.
class CorrelationProfile {
public:
    CorrelationProfile(CorrelationMode mode, std::size_t length, std::vector<Complex> values);

    CorrelationMode mode() const { return mode_; }
    std::size_t length() const { return length_; }
    std::size_t size() const { return values_.size(); }
    Shift first_shift() const { return mode_ == CorrelationMode::aperiodic ? 1 - static_cast<Shift>(length_) : 0; }
    Shift shift(std::size_t index) const { return first_shift() + static_cast<Shift>(index); }
    Complex operator[](std::size_t index) const { return values_[index]; }
    /// Value at shift `tau`; throws InvalidInput outside the profile range.
    Complex at(Shift tau) const;
    const std::vector<Complex>& values() const { return values_; }

private:
    CorrelationMode mode_;
    std::size_t length_;
    std::vector<Complex> values_;
};

CorrelationProfile correlation_profile(const Code& c1, const Code& c2, CorrelationMode mode);

/// |v| <= tolerance; a tolerance of 0 demands an exact zero.
inline bool is_zero(Complex v, double tolerance) {
    return tolerance == 0.0 ? (v.real() == 0.0 && v.imag() == 0.0) : std::abs(v) <= tolerance;
}

}  // namespace snccc
