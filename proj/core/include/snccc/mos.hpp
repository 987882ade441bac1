#pragma once

#include <string_view>
#include <vector>

#include "snccc/types.hpp"

namespace snccc {

enum class MosKind { hadamard, dft };

std::string_view to_string(MosKind kind);
MosKind parse_mos_kind(std::string_view text);

/// P mutually orthogonal sequences of length P; they supply the block scalars
/// of the concatenation operator.
struct MosFamily {
    MosKind kind = MosKind::hadamard;
    std::vector<Sequence> vectors;

    std::size_t size() const { return vectors.size(); }
    AlphabetSpec alphabet() const;
};

/// Rows of the order-P Sylvester Hadamard matrix (P a power of two) or of the
/// P-point DFT matrix.  DFT entries that are fourth roots of unity are stored
/// exactly.
MosFamily mos_generate(std::size_t P, MosKind kind);

/// Sylvester Hadamard matrix H_order, entries ±1; order must be a power of two.
std::vector<std::vector<int>> sylvester_hadamard(std::size_t order);

/// exp(2 pi i k / q), snapped to an exact value when it is one of ±1, ±i.
Complex root_of_unity(long long k, long long q);

}  // namespace snccc
