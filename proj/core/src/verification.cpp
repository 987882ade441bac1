#include "snccc/verification.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "snccc/error.hpp"

namespace snccc {

std::string_view to_string(CodeClass c) {
    switch (c) {
        case CodeClass::traditional_ccc: return "traditional-ccc";
        case CodeClass::snc_ccc: return "snc-ccc";
        case CodeClass::none: break;
    }
    return "none";
}

double zero_tolerance(std::span<const Code> codes) {
    if (codes.empty()) return 0.0;
    const bool exact = std::all_of(codes.begin(), codes.end(), [](const Code& c) { return c.integral(); });
    if (exact) return 0.0;
    return 1e-9 * static_cast<double>(codes.front().rows() * codes.front().length());
}

namespace {

// Shifts covered by |tau| <= reach, as profile indices of the given mode.
std::vector<Shift> shifts_within(std::size_t length, std::size_t reach, CorrelationMode mode) {
    const auto len = static_cast<Shift>(length);
    const auto r = static_cast<Shift>(std::min(reach, length - 1));
    std::vector<Shift> out;
    if (mode == CorrelationMode::aperiodic) {
        for (Shift t = -r; t <= r; ++t) out.push_back(t);
        return out;
    }
    std::set<Shift> cyclic;
    for (Shift t = -r; t <= r; ++t) cyclic.insert(((t % len) + len) % len);
    return {cyclic.begin(), cyclic.end()};
}

std::size_t cyclic_distance(Shift tau, std::size_t length, CorrelationMode mode) {
    const auto a = static_cast<std::size_t>(tau < 0 ? -tau : tau);
    if (mode == CorrelationMode::aperiodic) return a;
    return std::min(a, length - a);
}

struct ZeroCounts {
    std::size_t epsilon = 0;
    bool uniform = true;
};

ZeroCounts zero_counts(const CodeSet& set) {
    ZeroCounts z{set[0].zero_count(), true};
    for (const auto& c : set.codes()) z.uniform = z.uniform && c.zero_count() == z.epsilon;
    return z;
}

// Shared sweep for the CCC and ZCCS checks: auto shifts with 1 <= |tau| <= reach
// and cross shifts with |tau| <= reach must vanish; the zero shift of each auto
// correlation must equal its energy.
VerificationReport sweep_set(const CodeSet& set, std::size_t reach, CorrelationMode mode, double tol,
                             std::string property) {
    VerificationReport report;
    report.property = std::move(property);
    const std::size_t M = set.rows();
    const std::size_t L = set.length();
    const auto zc = zero_counts(set);
    report.epsilon = zc.epsilon;
    report.peak = static_cast<double>(M * L) - static_cast<double>(zc.epsilon);
    if (!zc.uniform) {
        std::ostringstream os;
        os << "codes have differing zero counts:";
        for (const auto& c : set.codes()) os << ' ' << c.zero_count();
        report.structural.push_back(os.str());
    }

    const auto shifts = shifts_within(L, reach, mode);
    for (std::size_t k1 = 0; k1 < set.size(); ++k1) {
        for (std::size_t k2 = 0; k2 < set.size(); ++k2) {
            const Complex peak(static_cast<double>(M * L - set[k1].zero_count()), 0.0);
            for (Shift tau : shifts) {
                const Complex v = code_xcorr(set[k1], set[k2], tau, mode);
                const bool on_peak = k1 == k2 && tau == 0;
                const Complex expected = on_peak ? peak : Complex{};
                if (!is_zero(v - expected, tol)) {
                    report.violations.push_back({0, 0, k1, k2, tau, mode, v, expected});
                }
            }
        }
    }
    report.verdict = report.violations.empty() && report.structural.empty();
    return report;
}

}  // namespace

VerificationReport verify_ccc(const CodeSet& set, std::optional<double> tolerance) {
    const double tol = tolerance.value_or(zero_tolerance(set.codes()));
    auto report = sweep_set(set, set.length() - 1, CorrelationMode::aperiodic, tol, "ccc");
    if (set.size() != set.rows()) {
        report.structural.push_back("a CCC holds M = " + std::to_string(set.rows()) + " codes, found " +
                                    std::to_string(set.size()));
        report.verdict = false;
    }
    if (report.verdict) {
        report.classification = report.epsilon == 0 ? CodeClass::traditional_ccc : CodeClass::snc_ccc;
    }
    return report;
}

VerificationReport verify_zccs(const CodeSet& set, std::size_t Z, CorrelationMode mode) {
    if (Z < 1 || Z > set.length()) {
        throw InvalidInput("zone width Z = " + std::to_string(Z) + " outside [1, " + std::to_string(set.length()) +
                           "]");
    }
    return sweep_set(set, Z - 1, mode, zero_tolerance(set.codes()),
                     std::string("zccs-") + std::string(to_string(mode)) + ":" + std::to_string(Z));
}

ZcczMeasurement measure_zccz(const CodeFamily& family, CorrelationMode mode) {
    if (family.size() < 2) throw InvalidInput("inter-set ZCCZ needs a family of at least two sets");
    const auto flat = family.flatten();
    const double tol = zero_tolerance(flat);
    const std::size_t length = family.sets.front().length();

    struct Cell {
        Violation v;
        std::size_t distance;
    };
    std::vector<Cell> nonzero;
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = 0; b < family.size(); ++b) {
            if (a == b) continue;
            const auto& sa = family.sets[a];
            const auto& sb = family.sets[b];
            for (std::size_t k1 = 0; k1 < sa.size(); ++k1) {
                for (std::size_t k2 = 0; k2 < sb.size(); ++k2) {
                    const auto profile = correlation_profile(sa[k1], sb[k2], mode);
                    for (std::size_t i = 0; i < profile.size(); ++i) {
                        if (is_zero(profile[i], tol)) continue;
                        const Shift tau = profile.shift(i);
                        nonzero.push_back({{a, b, k1, k2, tau, mode, profile[i], Complex{}},
                                           cyclic_distance(tau, length, mode)});
                    }
                }
            }
        }
    }

    ZcczMeasurement out;
    out.width = length;
    for (const auto& c : nonzero) out.width = std::min(out.width, c.distance);

    auto& report = out.report;
    report.property = std::string("zccz-") + std::string(to_string(mode));
    report.measured.zccz = out.width;
    report.verdict = true;
    if (family.provenance) {
        if (const auto lambda = family.provenance->partition.interior_min()) {
            const std::size_t predicted = family.provenance->seed_length + static_cast<std::size_t>(*lambda);
            report.measured.lambda = *lambda;
            report.measured.predicted_zccz = predicted;
            for (const auto& c : nonzero) {
                if (c.distance < predicted) report.violations.push_back(c.v);
            }
            report.verdict = report.violations.empty();
        }
    }
    return out;
}

QccsDelta qccs_delta(std::span<const Code> codes, CorrelationMode mode) {
    if (codes.empty()) throw InvalidInput("qccs_delta needs at least one code");
    QccsDelta d;
    for (std::size_t k1 = 0; k1 < codes.size(); ++k1) {
        for (std::size_t k2 = 0; k2 < codes.size(); ++k2) {
            const auto profile = correlation_profile(codes[k1], codes[k2], mode);
            for (std::size_t i = 0; i < profile.size(); ++i) {
                const double mag = std::abs(profile[i]);
                if (k1 == k2) {
                    if (profile.shift(i) != 0) d.delta_auto = std::max(d.delta_auto, mag);
                } else {
                    d.delta_cross = std::max(d.delta_cross, mag);
                }
            }
        }
    }
    d.delta = std::max(d.delta_auto, d.delta_cross);
    return d;
}

std::vector<PairCensus> interset_census(const CodeFamily& family, CorrelationMode mode) {
    const double tol = zero_tolerance(family.flatten());
    std::vector<PairCensus> out;
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            const auto& sa = family.sets[a];
            const auto& sb = family.sets[b];
            for (std::size_t k1 = 0; k1 < sa.size(); ++k1) {
                for (std::size_t k2 = 0; k2 < sb.size(); ++k2) {
                    PairCensus c{a, b, k1, k2, 0, 0.0, {}};
                    const auto profile = correlation_profile(sa[k1], sb[k2], mode);
                    for (std::size_t i = 0; i < profile.size(); ++i) {
                        if (is_zero(profile[i], tol)) continue;
                        ++c.nonzero_shifts;
                        c.shifts.push_back(profile.shift(i));
                        c.max_magnitude = std::max(c.max_magnitude, std::abs(profile[i]));
                    }
                    out.push_back(std::move(c));
                }
            }
        }
    }
    return out;
}

double interset_max_sidelobe(const CodeFamily& family, CorrelationMode mode) {
    double best = 0.0;
    for (const auto& c : interset_census(family, mode)) best = std::max(best, c.max_magnitude);
    return best;
}

VerificationReport verify_mos(const MosFamily& mos) {
    VerificationReport report;
    report.property = "mos";
    if (mos.vectors.empty()) {
        report.structural.push_back("empty MOS family");
        return report;
    }
    const std::size_t P = mos.vectors.front().size();
    for (const auto& v : mos.vectors) {
        if (v.size() != P) report.structural.push_back("MOS vectors have differing lengths");
    }
    if (!report.structural.empty()) return report;

    bool exact = true;
    for (const auto& v : mos.vectors) exact = exact && v.integral();
    const double tol = exact ? 0.0 : 1e-9 * static_cast<double>(P);
    for (std::size_t i = 0; i < mos.size(); ++i) {
        for (std::size_t j = 0; j < mos.size(); ++j) {
            if (i == j) continue;
            // Zero-shift aperiodic correlation is the dot product a . conj(b).
            const Complex dot = acf_aperiodic(mos.vectors[i], mos.vectors[j], 0);
            if (!is_zero(dot, tol)) report.violations.push_back({0, 0, i, j, 0, CorrelationMode::aperiodic, dot, {}});
        }
    }
    report.verdict = report.violations.empty();
    return report;
}

bool verify_snc(const CodeSet& set) {
    return std::any_of(set.codes().begin(), set.codes().end(), [](const Code& c) { return c.zero_count() > 0; });
}

std::string describe_first_issue(const VerificationReport& report) {
    if (!report.structural.empty()) return report.structural.front();
    if (report.violations.empty()) return "no violations";
    const auto& v = report.violations.front();
    std::ostringstream os;
    os << "sets (" << v.set_a << ", " << v.set_b << ") codes (" << v.code_a << ", " << v.code_b << ") tau " << v.tau
       << " " << to_string(v.mode) << ": got " << v.value.real();
    if (v.value.imag() != 0.0) os << (v.value.imag() < 0 ? "-" : "+") << std::abs(v.value.imag()) << "i";
    os << ", expected " << v.expected.real();
    return os.str();
}

}  // namespace snccc
