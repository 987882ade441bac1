#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snccc/mos.hpp"
#include "snccc/partition.hpp"
#include "snccc/permutation.hpp"
#include "snccc/types.hpp"

namespace snccc {

/// Everything needed to rebuild a family deterministically.
struct Provenance {
    std::string seed_id;
    std::size_t seed_length = 0;  ///< L of the seed codes
    GapPartition partition{std::vector<int>{0, 0}};
    MosKind mos = MosKind::hadamard;
    std::vector<Permutation> perms;  ///< empty for a single-set build
    MuRange mu_range = MuRange::strict;
};

/// P code sets of one geometry; a single-set family is a plain SNC-CCC.
struct CodeFamily {
    std::vector<CodeSet> sets;
    std::optional<Provenance> provenance;

    std::size_t size() const { return sets.size(); }
    /// All codes of all sets, set-major.
    std::vector<Code> flatten() const;
};

/// Zero-gap concatenation
///   [0^{n_1} | b_1 C_1 | 0^{n_2} | b_2 C_2 | ... | b_P C_P | 0^{n_{P+1}}]
/// of P equally shaped codes; the result is M x (P L + n).
Code r_operator(std::span<const Code> codes, const Sequence& b, const GapPartition& partition);

struct BuildOptions {
    /// Reject seeds that fail verify_ccc.  Disable only for experiments.
    bool verify_seed = true;
};

/// Code t = nu*P + mu (mu = 1..P) is r_operator(C_{nu P + 1}, ..., C_{(nu+1) P}; b^mu).
/// For an (M, L)-CCC seed with P | M the result is an (M, P L + n) SNC-CCC.
CodeSet build_snc_ccc(const CodeSet& seed, const MosFamily& mos, const GapPartition& partition,
                      BuildOptions options = {});

/// One set per permutation pi_j: code nu*P + mu of set j is
/// r_operator(C_{pi_j(nu P + 1)}, ..., C_{pi_j((nu+1) P)}; b^mu).
/// The permutation family must satisfy the column-disjointness condition and
/// hold at most P permutations.
CodeFamily build_multiple_snc_ccc(const CodeSet& seed, const MosFamily& mos, const GapPartition& partition,
                                  const PermutationFamily& perms, BuildOptions options = {});

}  // namespace snccc
