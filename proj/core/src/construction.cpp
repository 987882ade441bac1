#include "snccc/construction.hpp"

#include "snccc/error.hpp"
#include "snccc/verification.hpp"

namespace snccc {

std::vector<Code> CodeFamily::flatten() const {
    std::vector<Code> out;
    for (const auto& set : sets) out.insert(out.end(), set.codes().begin(), set.codes().end());
    return out;
}

Code r_operator(std::span<const Code> codes, const Sequence& b, const GapPartition& partition) {
    const std::size_t blocks = codes.size();
    if (blocks == 0) throw InvalidInput("r_operator needs at least one code");
    if (b.size() != blocks) {
        throw InvalidInput("scalar sequence has length " + std::to_string(b.size()) + ", expected " +
                           std::to_string(blocks));
    }
    if (partition.blocks() != blocks) {
        throw InvalidInput("partition has " + std::to_string(partition.gaps().size()) + " gaps, expected " +
                           std::to_string(blocks + 1));
    }
    const std::size_t rows = codes.front().rows();
    const std::size_t length = codes.front().length();
    for (std::size_t p = 0; p < blocks; ++p) {
        if (codes[p].rows() != rows || codes[p].length() != length) {
            throw InvalidInput("code " + std::to_string(p) + " does not share the " + std::to_string(rows) + "x" +
                               std::to_string(length) + " shape");
        }
        if (std::abs(std::abs(b[p]) - 1.0) > kEntryTolerance) {
            throw InvalidInput("scalar b[" + std::to_string(p) + "] is not unimodular");
        }
    }

    const std::size_t width = blocks * length + static_cast<std::size_t>(partition.total());
    std::vector<Complex> data(rows * width, Complex{});
    for (std::size_t p = 0; p < blocks; ++p) {
        const std::size_t start = partition.block_start(p, length);
        for (std::size_t r = 0; r < rows; ++r) {
            const auto src = codes[p].row(r);
            for (std::size_t c = 0; c < length; ++c) data[r * width + start + c] = b[p] * src[c];
        }
    }
    return Code(rows, width, std::move(data));
}

namespace {

void check_build_inputs(const CodeSet& seed, const MosFamily& mos, const GapPartition& partition,
                        const BuildOptions& options) {
    const std::size_t M = seed.size();
    const std::size_t P = mos.size();
    if (P == 0) throw InvalidInput("MOS family is empty");
    if (M % P != 0) {
        throw InvalidInput("P = " + std::to_string(P) + " does not divide M = " + std::to_string(M));
    }
    for (const auto& v : mos.vectors) {
        if (v.size() != P) throw InvalidInput("MOS vectors must have length P = " + std::to_string(P));
    }
    if (partition.blocks() != P) {
        throw InvalidInput("partition has " + std::to_string(partition.gaps().size()) + " gaps, expected P + 1 = " +
                           std::to_string(P + 1));
    }
    if (seed.rows() != M) {
        throw InvalidInput("seed codes have " + std::to_string(seed.rows()) + " rows but the seed holds " +
                           std::to_string(M) + " codes");
    }
    if (options.verify_seed) {
        const auto report = verify_ccc(seed);
        if (!report.verdict) throw InvalidInput("seed is not a CCC: " + describe_first_issue(report));
    }
}

CodeSet build_set(const CodeSet& seed, const MosFamily& mos, const GapPartition& partition,
                  const Permutation& order) {
    const std::size_t M = seed.size();
    const std::size_t P = mos.size();
    std::vector<Code> out;
    out.reserve(M);
    for (std::size_t nu = 0; nu < M / P; ++nu) {
        std::vector<Code> group;
        group.reserve(P);
        for (std::size_t i = 0; i < P; ++i) {
            group.push_back(seed[static_cast<std::size_t>(order[nu * P + i] - 1)]);
        }
        for (std::size_t mu = 0; mu < P; ++mu) out.push_back(r_operator(group, mos.vectors[mu], partition));
    }
    return CodeSet(std::move(out), promote(seed.alphabet(), mos.alphabet()));
}

}  // namespace

CodeSet build_snc_ccc(const CodeSet& seed, const MosFamily& mos, const GapPartition& partition,
                      BuildOptions options) {
    check_build_inputs(seed, mos, partition, options);
    Permutation identity(seed.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i) + 1;
    return build_set(seed, mos, partition, identity);
}

CodeFamily build_multiple_snc_ccc(const CodeSet& seed, const MosFamily& mos, const GapPartition& partition,
                                  const PermutationFamily& perms, BuildOptions options) {
    check_build_inputs(seed, mos, partition, options);
    const std::size_t M = seed.size();
    const std::size_t P = mos.size();
    if (perms.perms.empty()) throw InvalidInput("permutation family is empty");
    if (perms.size() > P) {
        throw InvalidInput("at most P = " + std::to_string(P) + " permutations are allowed, got " +
                           std::to_string(perms.size()));
    }
    const auto check = check_perm_family(perms.perms, M, P, perms.mu_range);
    if (!check.column_disjoint) {
        throw InvalidInput("permutation family violates the column-disjointness condition; construction refused");
    }

    CodeFamily family;
    for (const auto& pi : perms.perms) family.sets.push_back(build_set(seed, mos, partition, pi));
    family.provenance = Provenance{"", seed.length(), partition, mos.kind, perms.perms, perms.mu_range};
    return family;
}

}  // namespace snccc
