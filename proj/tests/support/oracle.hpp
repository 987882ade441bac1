#pragma once

// Brute-force reference implementations used only by the tests.  They follow
// the textbook definitions with 1-based indices and share no code with the
// library's correlation kernels or permutation checker.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Value = std::complex<long double>;
using Seq = std::vector<std::complex<double>>;

// a_i, 1-based.
inline Value at1(const Seq& a, long i) { return Value(a[static_cast<std::size_t>(i - 1)]); }

/// Aperiodic cross-correlation, straight from the three-branch definition.
inline Value aperiodic(const Seq& a, const Seq& b, long tau) {
    const long L = static_cast<long>(a.size());
    Value s = 0;
    if (0 <= tau && tau < L) {
        for (long i = 1; i <= L - tau; ++i) s += at1(a, i + tau) * std::conj(at1(b, i));
    } else if (-L < tau && tau < 0) {
        for (long i = 1; i <= L + tau; ++i) s += at1(a, i) * std::conj(at1(b, i - tau));
    }
    return s;
}

/// Periodic correlation by explicit wrap-around of a copy of `a`.
inline Value periodic(const Seq& a, const Seq& b, long tau) {
    const long L = static_cast<long>(a.size());
    const long t = ((tau % L) + L) % L;
    Seq rotated(a.size());
    for (long i = 0; i < L; ++i) rotated[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>((i + t) % L)];
    Value s = 0;
    for (long i = 0; i < L; ++i) s += Value(rotated[static_cast<std::size_t>(i)]) * std::conj(Value(b[static_cast<std::size_t>(i)]));
    return s;
}

/// Code as a list of rows.
using Matrix = std::vector<Seq>;

inline Value code_aperiodic(const Matrix& c1, const Matrix& c2, long tau) {
    Value s = 0;
    for (std::size_t r = 0; r < c1.size(); ++r) s += aperiodic(c1[r], c2[r], tau);
    return s;
}

inline Value code_periodic(const Matrix& c1, const Matrix& c2, long tau) {
    Value s = 0;
    for (std::size_t r = 0; r < c1.size(); ++r) s += periodic(c1[r], c2[r], tau);
    return s;
}

/// Column condition evaluated over every index tuple, 1-based as written.
inline bool column_condition(const std::vector<std::vector<int>>& pi, int M, int P, int mu_max) {
    auto at = [&](std::size_t j, int pos) { return pi[j][static_cast<std::size_t>(pos - 1)]; };
    for (std::size_t j1 = 0; j1 < pi.size(); ++j1)
        for (std::size_t j2 = 0; j2 < pi.size(); ++j2) {
            if (j1 == j2) continue;
            for (int i1 = 0; i1 < M / P; ++i1)
                for (int i2 = 0; i2 < M / P; ++i2)
                    for (int mu = 1; mu <= mu_max; ++mu)
                        if (at(j1, i1 * P + mu) == at(j2, i2 * P + mu)) return false;
        }
    return true;
}

/// Offset-uniqueness condition evaluated over every index tuple.
inline bool offset_condition(const std::vector<std::vector<int>>& pi, int M, int P) {
    auto at = [&](std::size_t j, int pos) { return pi[j][static_cast<std::size_t>(pos - 1)]; };
    for (std::size_t j1 = 0; j1 < pi.size(); ++j1)
        for (std::size_t j2 = 0; j2 < pi.size(); ++j2) {
            if (j1 == j2) continue;
            for (int i1 = 0; i1 < M / P; ++i1)
                for (int i2 = 0; i2 < M / P; ++i2)
                    for (int mu1 = 1; mu1 <= P; ++mu1)
                        for (int mu2 = 1; mu2 <= P; ++mu2) {
                            if (at(j1, i1 * P + mu1) != at(j2, i2 * P + mu2)) continue;
                            for (int alpha = -P; alpha <= P; ++alpha) {
                                if (alpha == 0) continue;
                                if (mu1 + alpha < 1 || mu1 + alpha > P || mu2 + alpha < 1 || mu2 + alpha > P) continue;
                                if (at(j1, i1 * P + mu1 + alpha) == at(j2, i2 * P + mu2 + alpha)) return false;
                            }
                        }
        }
    return true;
}

inline Seq random_ternary(std::mt19937& rng, std::size_t length) {
    std::uniform_int_distribution<int> d(-1, 1);
    Seq s(length);
    for (auto& v : s) v = {static_cast<double>(d(rng)), 0.0};
    return s;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int M) {
    std::vector<int> p(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    for (int i = M - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(d(rng))]);
    }
    return p;
}

}  // namespace oracle
