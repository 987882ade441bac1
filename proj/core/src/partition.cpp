#include "snccc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "snccc/error.hpp"

namespace snccc {

GapPartition::GapPartition(std::vector<int> gaps) : gaps_(std::move(gaps)) {
    if (gaps_.size() < 2) throw InvalidInput("a gap partition needs at least two gaps (P >= 1)");
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
        if (gaps_[i] < 0) throw InvalidInput("gap " + std::to_string(i + 1) + " is negative");
    }
    total_ = std::accumulate(gaps_.begin(), gaps_.end(), 0);
}

std::vector<int> GapPartition::interior() const {
    return {gaps_.begin() + 1, gaps_.end() - 1};
}

std::optional<int> GapPartition::interior_min() const {
    if (blocks() < 2) return std::nullopt;
    return *std::min_element(gaps_.begin() + 1, gaps_.end() - 1);
}

std::size_t GapPartition::block_start(std::size_t p, std::size_t length) const {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p; ++i) start += static_cast<std::size_t>(gaps_[i]);
    return start + p * length;
}

std::string_view to_string(PartitionStrategy s) {
    switch (s) {
        case PartitionStrategy::front: return "front";
        case PartitionStrategy::even: return "even";
        case PartitionStrategy::distinct: return "distinct";
        case PartitionStrategy::distinct_mod_length: return "distinct-mod-L";
    }
    return "?";
}

PartitionStrategy parse_strategy(std::string_view text) {
    if (text == "front") return PartitionStrategy::front;
    if (text == "even") return PartitionStrategy::even;
    if (text == "distinct") return PartitionStrategy::distinct;
    if (text == "distinct-mod-L" || text == "distinct-mod-l") return PartitionStrategy::distinct_mod_length;
    throw InvalidInput("unknown partition strategy '" + std::string(text) + "'");
}

namespace {

bool residues_distinct(const std::vector<int>& gaps, std::size_t first, std::size_t last, int modulus) {
    std::set<int> seen;
    for (std::size_t i = first; i < last; ++i) {
        if (!seen.insert(gaps[i] % modulus).second) return false;
    }
    return true;
}

}  // namespace

GapPartition make_partition(int n, std::size_t blocks, PartitionStrategy strategy, std::size_t length) {
    if (n < 0) throw InvalidInput("n must be non-negative");
    if (blocks == 0) throw InvalidInput("P must be at least 1");
    if (length == 0) throw InvalidInput("L must be at least 1");

    std::vector<int> gaps(blocks + 1, 0);
    const std::size_t interior_count = blocks - 1;
    if (interior_count == 0) {
        gaps.back() = n;
        return GapPartition(std::move(gaps));
    }

    switch (strategy) {
        case PartitionStrategy::front:
            gaps[1] = n;
            break;
        case PartitionStrategy::even: {
            const int count = static_cast<int>(interior_count);
            for (std::size_t i = 0; i < interior_count; ++i) {
                gaps[i + 1] = n / count + (static_cast<int>(i) < n % count ? 1 : 0);
            }
            break;
        }
        case PartitionStrategy::distinct:
        case PartitionStrategy::distinct_mod_length: {
            const int p = static_cast<int>(blocks);
            const int bound = p * (p - 1) / 2;
            if (n < bound) {
                throw Infeasible("distinct interior gaps need n >= P(P-1)/2 = " + std::to_string(bound) +
                                 ", got n = " + std::to_string(n));
            }
            if (strategy == PartitionStrategy::distinct_mod_length && interior_count > length) {
                throw Infeasible("distinct residues mod L need P - 1 <= L, got P - 1 = " +
                                 std::to_string(interior_count) + ", L = " + std::to_string(length));
            }
            for (std::size_t i = 0; i < interior_count; ++i) gaps[i + 1] = static_cast<int>(i) + 1;
            const int remainder = n - bound;
            if (strategy == PartitionStrategy::distinct) {
                gaps[interior_count] += remainder;
                break;
            }
            const int modulus = static_cast<int>(length);
            gaps[interior_count] += (remainder / modulus) * modulus;
            const int rest = remainder % modulus;
            if (rest == 0) break;
            bool placed = false;
            for (std::size_t i = interior_count; i >= 1 && !placed; --i) {
                gaps[i] += rest;
                if (residues_distinct(gaps, 1, blocks, modulus)) {
                    placed = true;
                } else {
                    gaps[i] -= rest;
                }
            }
            if (!placed) gaps.back() += rest;
            break;
        }
    }
    return GapPartition(std::move(gaps));
}

}  // namespace snccc
