#include "snccc/correlation.hpp"

#include <algorithm>

#include "snccc/error.hpp"

namespace snccc {

namespace {

GaussianInt to_gaussian(Complex v) {
    return {static_cast<std::int64_t>(v.real()), static_cast<std::int64_t>(v.imag())};
}

bool gaussian_span(std::span<const Complex> s) {
    return std::all_of(s.begin(), s.end(), is_gaussian_unit_or_zero);
}

void require_same_length(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw InvalidInput("sequence lengths differ: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
    }
    if (a.empty()) throw InvalidInput("sequences must be non-empty");
}

// Overlap of a shifted by tau against b: pairs (a[i + tau], b[i]).
template <typename Acc, typename Conv>
Acc aperiodic_sum(std::span<const Complex> a, std::span<const Complex> b, Shift tau, Conv conv) {
    const auto len = static_cast<Shift>(a.size());
    Acc acc{};
    if (tau >= len || tau <= -len) return acc;
    const Shift lo = std::max<Shift>(0, -tau);
    const Shift hi = std::min<Shift>(len, len - tau);
    for (Shift i = lo; i < hi; ++i) acc += conv(a[i + tau]) * conj(conv(b[i]));
    return acc;
}

template <typename Acc, typename Conv>
Acc periodic_sum(std::span<const Complex> a, std::span<const Complex> b, Shift tau, Conv conv) {
    const auto len = static_cast<Shift>(a.size());
    const Shift t = ((tau % len) + len) % len;
    Acc acc{};
    for (Shift i = 0; i < len; ++i) acc += conv(a[(i + t) % len]) * conj(conv(b[i]));
    return acc;
}

constexpr auto identity = [](Complex v) { return v; };

Complex aperiodic_dispatch(std::span<const Complex> a, std::span<const Complex> b, Shift tau, bool exact) {
    if (exact) return aperiodic_sum<GaussianInt>(a, b, tau, to_gaussian).to_complex();
    return aperiodic_sum<Complex>(a, b, tau, identity);
}

Complex periodic_dispatch(std::span<const Complex> a, std::span<const Complex> b, Shift tau, bool exact) {
    if (exact) return periodic_sum<GaussianInt>(a, b, tau, to_gaussian).to_complex();
    return periodic_sum<Complex>(a, b, tau, identity);
}

}  // namespace

std::string_view to_string(CorrelationMode mode) {
    return mode == CorrelationMode::aperiodic ? "aperiodic" : "periodic";
}

CorrelationMode parse_mode(std::string_view text) {
    if (text == "aperiodic") return CorrelationMode::aperiodic;
    if (text == "periodic") return CorrelationMode::periodic;
    throw InvalidInput("unknown correlation mode '" + std::string(text) + "'");
}

Complex acf_aperiodic(std::span<const Complex> a, std::span<const Complex> b, Shift tau) {
    require_same_length(a, b);
    return aperiodic_dispatch(a, b, tau, gaussian_span(a) && gaussian_span(b));
}

Complex acf_aperiodic(const Sequence& a, const Sequence& b, Shift tau) {
    require_same_length(a.entries(), b.entries());
    return aperiodic_dispatch(a.entries(), b.entries(), tau, a.integral() && b.integral());
}

Complex acf_periodic(std::span<const Complex> a, std::span<const Complex> b, Shift tau) {
    require_same_length(a, b);
    return periodic_dispatch(a, b, tau, gaussian_span(a) && gaussian_span(b));
}

Complex acf_periodic(const Sequence& a, const Sequence& b, Shift tau) {
    require_same_length(a.entries(), b.entries());
    return periodic_dispatch(a.entries(), b.entries(), tau, a.integral() && b.integral());
}

Complex code_xcorr(const Code& c1, const Code& c2, Shift tau, CorrelationMode mode) {
    if (c1.rows() != c2.rows() || c1.length() != c2.length()) {
        throw InvalidInput("code shapes differ: " + std::to_string(c1.rows()) + "x" + std::to_string(c1.length()) +
                           " vs " + std::to_string(c2.rows()) + "x" + std::to_string(c2.length()));
    }
    const bool exact = c1.integral() && c2.integral();
    Complex total{};
    for (std::size_t r = 0; r < c1.rows(); ++r) {
        total += mode == CorrelationMode::aperiodic ? aperiodic_dispatch(c1.row(r), c2.row(r), tau, exact)
                                                    : periodic_dispatch(c1.row(r), c2.row(r), tau, exact);
    }
    return total;
}

CorrelationProfile::CorrelationProfile(CorrelationMode mode, std::size_t length, std::vector<Complex> values)
    : mode_(mode), length_(length), values_(std::move(values)) {
    const std::size_t expected = mode == CorrelationMode::aperiodic ? 2 * length - 1 : length;
    if (length == 0 || values_.size() != expected) {
        throw InvalidInput("profile for length " + std::to_string(length) + " needs " + std::to_string(expected) +
                           " points, got " + std::to_string(values_.size()));
    }
}

Complex CorrelationProfile::at(Shift tau) const {
    const Shift index = tau - first_shift();
    if (index < 0 || index >= static_cast<Shift>(values_.size())) {
        throw InvalidInput("shift " + std::to_string(tau) + " outside the profile range");
    }
    return values_[static_cast<std::size_t>(index)];
}

CorrelationProfile correlation_profile(const Code& c1, const Code& c2, CorrelationMode mode) {
    const auto len = static_cast<Shift>(c1.length());
    std::vector<Complex> values;
    const Shift first = mode == CorrelationMode::aperiodic ? 1 - len : 0;
    for (Shift tau = first; tau < len; ++tau) values.push_back(code_xcorr(c1, c2, tau, mode));
    return CorrelationProfile(mode, c1.length(), std::move(values));
}

}  // namespace snccc
