#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snccc/construction.hpp"
#include "snccc/mos.hpp"
#include "snccc/partition.hpp"
#include "snccc/permutation.hpp"

namespace snccc {

enum class PermSource { none, explicit_list, search };

/// A construction recipe.  Replaying the same recipe yields a bit-identical family.
struct Recipe {
    std::string seed = "example1";
    std::size_t blocks = 1;                      ///< P
    std::optional<int> n;                        ///< total gap length when no explicit partition
    std::optional<std::vector<int>> partition;   ///< explicit gaps, P + 1 of them
    PartitionStrategy strategy = PartitionStrategy::front;
    MosKind mos = MosKind::hadamard;
    PermSource perm_source = PermSource::none;
    std::vector<Permutation> perms;              ///< for PermSource::explicit_list
    std::uint64_t search_seed = 0;
    bool require_offset_unique = false;
    MuRange mu_range = MuRange::strict;

    friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// Resolves the partition a recipe describes for seed length L.
GapPartition resolve_partition(const Recipe& recipe, std::size_t seed_length);

/// Runs a recipe.  Without permutations the family holds the single set of
/// build_snc_ccc; otherwise one set per permutation.
CodeFamily generate(const Recipe& recipe);

}  // namespace snccc
