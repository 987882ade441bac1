#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace snccc {

/// Zero-run lengths (n_1, ..., n_{P+1}) placed before, between and after the
/// P blocks of the concatenation operator.  Gap 0 leads, gap P trails; gaps
/// 1..P-1 are the interior gaps that separate consecutive blocks.
class GapPartition {
public:
    explicit GapPartition(std::vector<int> gaps);

    /// Number of blocks P (= gap count - 1).
    std::size_t blocks() const { return gaps_.size() - 1; }
    int total() const { return total_; }
    const std::vector<int>& gaps() const { return gaps_; }
    int gap(std::size_t i) const { return gaps_.at(i); }
    std::vector<int> interior() const;
    /// Smallest interior gap; empty when P < 2.
    std::optional<int> interior_min() const;
    /// Column where block p (0-based) starts when each block is `length` wide.
    std::size_t block_start(std::size_t p, std::size_t length) const;

    friend bool operator==(const GapPartition&, const GapPartition&) = default;

private:
    std::vector<int> gaps_;
    int total_ = 0;
};

enum class PartitionStrategy { front, even, distinct, distinct_mod_length };

std::string_view to_string(PartitionStrategy s);
PartitionStrategy parse_strategy(std::string_view text);

/// Builds a partition of n into blocks + 1 gaps.
///
///   front               (0, n, 0, ..., 0)
///   even                interior gaps as equal as possible, extra units to the earliest
///   distinct            interior gaps 1, 2, ..., P-1; the remainder goes to the last one
///   distinct_mod_length interior gaps with pairwise distinct residues mod `length`
///
/// The distinct strategies need n >= P(P-1)/2 (and P - 1 <= length for the
/// residue variant); otherwise Infeasible is thrown naming the bound.
GapPartition make_partition(int n, std::size_t blocks, PartitionStrategy strategy, std::size_t length = 1);

}  // namespace snccc
