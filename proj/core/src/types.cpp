#include "snccc/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "snccc/error.hpp"

namespace snccc {

namespace {

bool is_zero_entry(Complex v) { return std::abs(v) <= kEntryTolerance; }

bool all_gaussian(std::span<const Complex> values) {
    return std::all_of(values.begin(), values.end(), is_gaussian_unit_or_zero);
}

std::size_t count_zeros(std::span<const Complex> values) {
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), is_zero_entry));
}

void require_valid_entries(std::span<const Complex> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!is_valid_entry(values[i])) {
            throw InvalidInput(std::string(what) + ": entry " + std::to_string(i) +
                               " is neither zero nor unimodular");
        }
    }
}

}  // namespace

AlphabetSpec AlphabetSpec::qary(int q) {
    if (q < 1) throw InvalidInput("alphabet order q must be positive");
    if (q <= 2) return ternary();
    return {AlphabetKind::qary, q};
}

bool AlphabetSpec::contains(Complex v) const {
    if (kind == AlphabetKind::ternary) {
        return v.imag() == 0.0 && (v.real() == 0.0 || v.real() == 1.0 || v.real() == -1.0);
    }
    if (is_zero_entry(v)) return true;
    const double turns = std::arg(v) * q / (2.0 * std::numbers::pi);
    const double k = std::round(turns);
    const Complex nearest = std::polar(1.0, 2.0 * std::numbers::pi * k / q);
    return std::abs(v - nearest) <= kEntryTolerance;
}

std::string AlphabetSpec::name() const {
    if (kind == AlphabetKind::ternary) return "ternary";
    return "qary:" + std::to_string(q);
}

AlphabetSpec promote(const AlphabetSpec& a, const AlphabetSpec& b) {
    return AlphabetSpec::qary(std::lcm(a.q, b.q));
}

AlphabetSpec infer_alphabet(std::span<const Complex> entries, int max_q) {
    const AlphabetSpec t = AlphabetSpec::ternary();
    if (std::all_of(entries.begin(), entries.end(), [&](Complex v) { return t.contains(v); })) {
        return t;
    }
    for (int q = 3; q <= max_q; ++q) {
        const AlphabetSpec a = AlphabetSpec::qary(q);
        if (std::all_of(entries.begin(), entries.end(), [&](Complex v) { return a.contains(v); })) {
            return a;
        }
    }
    throw ValidationError("entries do not lie in any roots-of-unity alphabet with q <= " +
                          std::to_string(max_q));
}

bool is_valid_entry(Complex v) {
    const double m = std::abs(v);
    return m <= kEntryTolerance || std::abs(m - 1.0) <= kEntryTolerance;
}

bool is_gaussian_unit_or_zero(Complex v) {
    const double re = v.real();
    const double im = v.imag();
    if (im == 0.0) return re == 0.0 || re == 1.0 || re == -1.0;
    return re == 0.0 && (im == 1.0 || im == -1.0);
}

Sequence::Sequence(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInput("sequence length must be at least 1");
    require_valid_entries(entries_, "sequence");
    integral_ = all_gaussian(entries_);
}

Sequence Sequence::from_ints(std::initializer_list<int> values) {
    std::vector<Complex> v;
    v.reserve(values.size());
    for (int x : values) v.emplace_back(static_cast<double>(x), 0.0);
    return Sequence(std::move(v));
}

std::size_t Sequence::zero_count() const { return count_zeros(entries_); }

Code::Code(std::size_t rows, std::size_t length, std::vector<Complex> data)
    : rows_(rows), length_(length), data_(std::move(data)) {
    if (rows_ == 0 || length_ == 0) throw InvalidInput("code must have at least one row and one column");
    if (data_.size() != rows_ * length_) {
        throw InvalidInput("code data holds " + std::to_string(data_.size()) + " entries, expected " +
                           std::to_string(rows_ * length_));
    }
    require_valid_entries(data_, "code");
    integral_ = all_gaussian(data_);
}

Code Code::from_rows(const std::vector<std::vector<Complex>>& rows) {
    if (rows.empty()) throw InvalidInput("code must have at least one row");
    const std::size_t length = rows.front().size();
    std::vector<Complex> data;
    data.reserve(rows.size() * length);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != length) {
            throw InvalidInput("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                               ", expected " + std::to_string(length));
        }
        data.insert(data.end(), rows[r].begin(), rows[r].end());
    }
    return Code(rows.size(), length, std::move(data));
}

Code Code::from_ints(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Complex>> converted;
    for (const auto& row : rows) {
        auto& out = converted.emplace_back();
        for (int x : row) out.emplace_back(static_cast<double>(x), 0.0);
    }
    return from_rows(converted);
}

Code Code::zeros(std::size_t rows, std::size_t length) {
    return Code(rows, length, std::vector<Complex>(rows * length, Complex{}));
}

std::size_t Code::zero_count() const { return count_zeros(data_); }

Code Code::scaled(Complex factor) const {
    std::vector<Complex> out(data_);
    for (auto& v : out) v *= factor;
    return Code(rows_, length_, std::move(out));
}

Code Code::with_entry(std::size_t r, std::size_t c, Complex value) const {
    if (r >= rows_ || c >= length_) throw InvalidInput("entry index out of range");
    std::vector<Complex> out(data_);
    out[r * length_ + c] = value;
    return Code(rows_, length_, std::move(out));
}

CodeSet::CodeSet(std::vector<Code> codes, AlphabetSpec alphabet)
    : codes_(std::move(codes)), alphabet_(alphabet) {
    if (codes_.empty()) throw InvalidInput("code set must contain at least one code");
    const std::size_t m = codes_.front().rows();
    const std::size_t l = codes_.front().length();
    for (std::size_t k = 0; k < codes_.size(); ++k) {
        const Code& c = codes_[k];
        if (c.rows() != m || c.length() != l) {
            throw InvalidInput("code " + std::to_string(k) + " has shape " + std::to_string(c.rows()) + "x" +
                               std::to_string(c.length()) + ", expected " + std::to_string(m) + "x" +
                               std::to_string(l));
        }
        const auto data = c.data();
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (!alphabet_.contains(data[i])) {
                throw ValidationError("code " + std::to_string(k) + " row " + std::to_string(i / l) +
                                      " column " + std::to_string(i % l) + ": entry outside the " +
                                      alphabet_.name() + " alphabet");
            }
        }
    }
}

CodeSet::CodeSet(std::vector<Code> codes)
    : CodeSet(codes, [&] {
          std::vector<Complex> all;
          for (const auto& c : codes) all.insert(all.end(), c.data().begin(), c.data().end());
          return infer_alphabet(all);
      }()) {}

bool CodeSet::integral() const {
    return std::all_of(codes_.begin(), codes_.end(), [](const Code& c) { return c.integral(); });
}

}  // namespace snccc
