#include "snccc/mos.hpp"

#include <bit>
#include <numbers>
#include <string>

#include "snccc/error.hpp"

namespace snccc {

std::string_view to_string(MosKind kind) { return kind == MosKind::hadamard ? "hadamard" : "dft"; }

MosKind parse_mos_kind(std::string_view text) {
    if (text == "hadamard") return MosKind::hadamard;
    if (text == "dft") return MosKind::dft;
    throw InvalidInput("unknown MOS kind '" + std::string(text) + "'");
}

AlphabetSpec MosFamily::alphabet() const {
    if (kind == MosKind::hadamard) return AlphabetSpec::ternary();
    return AlphabetSpec::qary(static_cast<int>(vectors.size()));
}

Complex root_of_unity(long long k, long long q) {
    const long long r = ((k % q) + q) % q;
    if ((4 * r) % q == 0) {
        switch ((4 * r) / q) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
}

std::vector<std::vector<int>> sylvester_hadamard(std::size_t order) {
    if (order == 0 || !std::has_single_bit(order)) {
        throw Unsupported("Sylvester Hadamard matrices exist only for powers of two, got " +
                          std::to_string(order) + "; use the dft kind instead");
    }
    std::vector<std::vector<int>> h{{1}};
    while (h.size() < order) {
        const std::size_t n = h.size();
        std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next[i][j] = h[i][j];
                next[i][j + n] = h[i][j];
                next[i + n][j] = h[i][j];
                next[i + n][j + n] = -h[i][j];
            }
        }
        h = std::move(next);
    }
    return h;
}

MosFamily mos_generate(std::size_t P, MosKind kind) {
    if (P == 0) throw InvalidInput("MOS length P must be at least 1");
    MosFamily family{kind, {}};
    if (kind == MosKind::hadamard) {
        for (const auto& row : sylvester_hadamard(P)) {
            std::vector<Complex> v(row.begin(), row.end());
            family.vectors.emplace_back(std::move(v));
        }
        return family;
    }
    const auto q = static_cast<long long>(P);
    for (long long j = 0; j < q; ++j) {
        std::vector<Complex> v;
        for (long long k = 0; k < q; ++k) v.push_back(root_of_unity(j * k, q));
        family.vectors.emplace_back(std::move(v));
    }
    return family;
}

}  // namespace snccc
