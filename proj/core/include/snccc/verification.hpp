#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snccc/construction.hpp"
#include "snccc/correlation.hpp"
#include "snccc/mos.hpp"
#include "snccc/types.hpp"

namespace snccc {

/// One correlation cell that disagrees with the property being checked.
/// Set indices are 0 for single-set checks.
struct Violation {
    std::size_t set_a = 0;
    std::size_t set_b = 0;
    std::size_t code_a = 0;
    std::size_t code_b = 0;
    Shift tau = 0;
    CorrelationMode mode = CorrelationMode::aperiodic;
    Complex value;
    Complex expected;
};

enum class CodeClass { none, traditional_ccc, snc_ccc };

std::string_view to_string(CodeClass c);

struct Measurements {
    std::optional<std::size_t> zccz;
    std::optional<std::size_t> predicted_zccz;
    std::optional<int> lambda;
    std::optional<double> delta;
    std::optional<double> delta_auto;
    std::optional<double> delta_cross;
    std::optional<double> normalized_delta;  ///< delta / (M L - epsilon)
};

struct VerificationReport {
    std::string subject;
    std::string property;
    bool verdict = false;
    double peak = 0.0;          ///< M L - epsilon
    std::size_t epsilon = 0;    ///< zero count per code
    CodeClass classification = CodeClass::none;
    std::vector<Violation> violations;     ///< sorted by (set pair, code pair, tau)
    std::vector<std::string> structural;   ///< shape or zero-count problems
    Measurements measured;
};

/// Zero threshold used for a code collection: exact for Gaussian-integer
/// entries, 1e-9 * M L otherwise.
double zero_tolerance(std::span<const Code> codes);

/// Complete-complementary check over every ordered pair and every shift:
/// sum-correlation equals M L - eps at (k, k, 0) and vanishes elsewhere.
/// Codes with differing zero counts are reported as a structural violation.
VerificationReport verify_ccc(const CodeSet& set, std::optional<double> tolerance = std::nullopt);

/// Zero-correlation-zone check with zone width Z (1 <= Z <= L).
VerificationReport verify_zccs(const CodeSet& set, std::size_t Z, CorrelationMode mode);

struct ZcczMeasurement {
    std::size_t width = 0;
    VerificationReport report;
};

/// Largest Z such that every inter-set code pair correlates to zero for all
/// |tau| < Z.  Periodic shifts count by cyclic distance min(t, L' - t).
/// When the family carries provenance, the report flags a measured width
/// below L + lambda (lambda = smallest interior gap) as a failure and lists
/// the offending cells.  Throws InvalidInput for families with fewer than two sets.
ZcczMeasurement measure_zccz(const CodeFamily& family, CorrelationMode mode);

struct QccsDelta {
    double delta = 0.0;
    double delta_auto = 0.0;   ///< max |auto| over 1 <= |tau| <= L-1
    double delta_cross = 0.0;  ///< max |cross| over k1 != k2, 0 <= |tau| <= L-1
};

QccsDelta qccs_delta(std::span<const Code> codes, CorrelationMode mode);

/// Side-lobe census of one inter-set code pair.
struct PairCensus {
    std::size_t set_a = 0;
    std::size_t set_b = 0;
    std::size_t code_a = 0;
    std::size_t code_b = 0;
    std::size_t nonzero_shifts = 0;
    double max_magnitude = 0.0;
    std::vector<Shift> shifts;
};

/// Every ordered pair of codes drawn from two different sets.
std::vector<PairCensus> interset_census(const CodeFamily& family, CorrelationMode mode);

/// Largest inter-set correlation magnitude over all shifts.
double interset_max_sidelobe(const CodeFamily& family, CorrelationMode mode);

VerificationReport verify_mos(const MosFamily& mos);

/// True iff some sequence of some code holds a zero entry.
bool verify_snc(const CodeSet& set);

/// Human-readable summary of the first violation or structural issue.
std::string describe_first_issue(const VerificationReport& report);

}  // namespace snccc
