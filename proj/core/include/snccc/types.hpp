#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace snccc {

using Complex = std::complex<double>;
using Shift = std::ptrdiff_t;

/// Distance from the unit circle (or from an alphabet point) still accepted
/// for floating-point entries.
inline constexpr double kEntryTolerance = 1e-9;

/// Exact accumulator for products of entries drawn from {0, ±1, ±i}.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend constexpr GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr GaussianInt conj(const GaussianInt& a) { return {a.re, -a.im}; }
    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;

    Complex to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

enum class AlphabetKind { ternary, qary };

/// Alphabet of a code: q-th roots of unity together with zero.  The ternary
/// alphabet {-1, 0, 1} is the real q = 2 case.
struct AlphabetSpec {
    AlphabetKind kind = AlphabetKind::ternary;
    int q = 2;

    static AlphabetSpec ternary() { return {AlphabetKind::ternary, 2}; }
    /// q <= 2 collapses to ternary.
    static AlphabetSpec qary(int q);

    bool contains(Complex v) const;
    /// Every alphabet point is a Gaussian integer (ternary, q = 1, 2, 4).
    bool exact() const { return kind == AlphabetKind::ternary || 4 % q == 0; }
    std::string name() const;

    friend bool operator==(const AlphabetSpec&, const AlphabetSpec&) = default;
};

/// Smallest alphabet containing every product of an entry from `a` with one from `b`.
AlphabetSpec promote(const AlphabetSpec& a, const AlphabetSpec& b);

/// Smallest alphabet (q up to `max_q`) containing all of `entries`; throws
/// ValidationError if none does.
AlphabetSpec infer_alphabet(std::span<const Complex> entries, int max_q = 1024);

/// True when v is 0 or has unit magnitude within kEntryTolerance.
bool is_valid_entry(Complex v);
/// True when v is exactly one of 0, ±1, ±i.
bool is_gaussian_unit_or_zero(Complex v);

class Sequence {
public:
    explicit Sequence(std::vector<Complex> entries);
    static Sequence from_ints(std::initializer_list<int> values);

    std::size_t size() const { return entries_.size(); }
    std::span<const Complex> entries() const { return entries_; }
    Complex operator[](std::size_t i) const { return entries_[i]; }
    bool integral() const { return integral_; }
    std::size_t zero_count() const;

    friend bool operator==(const Sequence& a, const Sequence& b) { return a.entries_ == b.entries_; }

private:
    std::vector<Complex> entries_;
    bool integral_ = true;
};

/// M x L matrix whose rows are sequences; stored row-major.
class Code {
public:
    Code(std::size_t rows, std::size_t length, std::vector<Complex> data);
    static Code from_rows(const std::vector<std::vector<Complex>>& rows);
    static Code from_ints(std::initializer_list<std::initializer_list<int>> rows);
    static Code zeros(std::size_t rows, std::size_t length);

    std::size_t rows() const { return rows_; }
    std::size_t length() const { return length_; }
    std::span<const Complex> row(std::size_t r) const {
        return std::span<const Complex>(data_).subspan(r * length_, length_);
    }
    Complex at(std::size_t r, std::size_t c) const { return data_[r * length_ + c]; }
    std::span<const Complex> data() const { return data_; }
    bool integral() const { return integral_; }
    std::size_t zero_count() const;

    Code scaled(Complex factor) const;
    Code with_entry(std::size_t r, std::size_t c, Complex value) const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.rows_ == b.rows_ && a.length_ == b.length_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t length_;
    std::vector<Complex> data_;
    bool integral_ = true;
};

/// K codes sharing one (M, L) geometry, all entries inside `alphabet`.
class CodeSet {
public:
    CodeSet(std::vector<Code> codes, AlphabetSpec alphabet);
    /// Alphabet inferred from the entries.
    explicit CodeSet(std::vector<Code> codes);

    std::size_t size() const { return codes_.size(); }
    std::size_t rows() const { return codes_.front().rows(); }
    std::size_t length() const { return codes_.front().length(); }
    const std::vector<Code>& codes() const { return codes_; }
    const Code& operator[](std::size_t k) const { return codes_[k]; }
    const AlphabetSpec& alphabet() const { return alphabet_; }
    bool integral() const;

    friend bool operator==(const CodeSet&, const CodeSet&) = default;

private:
    std::vector<Code> codes_;
    AlphabetSpec alphabet_;
};

}  // namespace snccc
