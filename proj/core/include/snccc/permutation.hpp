#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace snccc {

/// Permutation of {1..M} in one-line notation: perm[pos - 1] is the image of pos.
using Permutation = std::vector<int>;

/// Block-position range for the column-disjointness condition.  `strict`
/// constrains positions 1 <= mu < P of every block; `extended` also
/// constrains mu = P.
enum class MuRange { strict, extended };

struct PermutationCheck {
    bool column_disjoint = false;  ///< equal images never share a block position
    bool offset_unique = false;    ///< a shared image never shares a neighbour at the same in-block offset
};

struct PermutationFamily {
    std::vector<Permutation> perms;
    bool column_disjoint = false;
    bool offset_unique = false;
    MuRange mu_range = MuRange::strict;

    std::size_t size() const { return perms.size(); }
};

/// Throws InvalidInput unless `perm` is a bijection on {1..M}.
void validate_permutation(const Permutation& perm, std::size_t M);

/// Exhaustive check of both family conditions.  With M positions split into
/// M/P blocks of P, positions i*P + mu (i = 0..M/P-1, mu = 1..P):
///
///  column_disjoint: pi_j1(i1*P + mu) != pi_j2(i2*P + mu) for every j1 != j2,
///                   every i1, i2 and every mu in the chosen range;
///  offset_unique:   whenever pi_j1(i1*P + mu1) == pi_j2(i2*P + mu2), then
///                   pi_j1(i1*P + mu1 + a) != pi_j2(i2*P + mu2 + a) for every
///                   a != 0 keeping both positions inside their blocks.
///
/// Requires P | M.
PermutationCheck check_perm_family(const std::vector<Permutation>& perms, std::size_t M, std::size_t P,
                                   MuRange range = MuRange::strict);

/// Validates and checks `perms`, packaging the verdicts.
PermutationFamily make_perm_family(std::vector<Permutation> perms, std::size_t M, std::size_t P,
                                   MuRange range = MuRange::strict);

/// Backtracking search for P permutations satisfying column_disjoint (and
/// offset_unique when `require_offset_unique`).  pi_0 is the identity; later
/// permutations are filled position by position trying candidate images in
/// ascending order (seed 0) or in a seed-derived order.  Deterministic for a
/// fixed seed.  Throws NotFound when the space is exhausted.
PermutationFamily search_perm_family(std::size_t M, std::size_t P, bool require_offset_unique,
                                     std::uint64_t seed = 0, MuRange range = MuRange::strict);

std::string format_permutation(const Permutation& perm);
/// Parses "1,2,3,4"; families as "1,2,3,4;2,1,4,3".
Permutation parse_permutation(const std::string& text);
std::vector<Permutation> parse_permutation_list(const std::string& text);

}  // namespace snccc
