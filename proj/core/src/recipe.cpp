#include "snccc/recipe.hpp"

#include "snccc/error.hpp"
#include "snccc/seeds.hpp"

namespace snccc {

GapPartition resolve_partition(const Recipe& recipe, std::size_t seed_length) {
    if (recipe.partition) {
        GapPartition part(*recipe.partition);
        if (part.blocks() != recipe.blocks) {
            throw InvalidInput("partition has " + std::to_string(part.gaps().size()) + " gaps, expected P + 1 = " +
                               std::to_string(recipe.blocks + 1));
        }
        if (recipe.n && *recipe.n != part.total()) {
            throw InvalidInput("partition sums to " + std::to_string(part.total()) + " but n = " +
                               std::to_string(*recipe.n));
        }
        return part;
    }
    return make_partition(recipe.n.value_or(0), recipe.blocks, recipe.strategy, seed_length);
}

CodeFamily generate(const Recipe& recipe) {
    if (recipe.blocks == 0) throw InvalidInput("P must be at least 1");
    const CodeSet seed = seed_ccc(recipe.seed);
    const GapPartition part = resolve_partition(recipe, seed.length());
    const MosFamily mos = mos_generate(recipe.blocks, recipe.mos);
    const std::size_t M = seed.size();

    CodeFamily family;
    if (recipe.perm_source == PermSource::none) {
        family.sets.push_back(build_snc_ccc(seed, mos, part));
        family.provenance = Provenance{recipe.seed, seed.length(), part, recipe.mos, {}, recipe.mu_range};
        return family;
    }

    if (M % recipe.blocks != 0) {
        throw InvalidInput("P = " + std::to_string(recipe.blocks) + " does not divide M = " + std::to_string(M));
    }
    const PermutationFamily perms =
        recipe.perm_source == PermSource::search
            ? search_perm_family(M, recipe.blocks, recipe.require_offset_unique, recipe.search_seed, recipe.mu_range)
            : make_perm_family(recipe.perms, M, recipe.blocks, recipe.mu_range);
    if (recipe.require_offset_unique && !perms.offset_unique) {
        throw InvalidInput("permutation family violates the offset-uniqueness condition");
    }
    family = build_multiple_snc_ccc(seed, mos, part, perms);
    family.provenance->seed_id = recipe.seed;
    return family;
}

}  // namespace snccc
