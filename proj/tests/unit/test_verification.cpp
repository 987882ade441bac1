#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "snccc/construction.hpp"
#include "snccc/error.hpp"
#include "snccc/mos.hpp"
#include "snccc/seeds.hpp"
#include "snccc/verification.hpp"

using namespace snccc;

namespace {

CodeSet example_set() { return CodeSet(fixtures::example1_outputs()); }

CodeFamily example_family(const GapPartition& part, std::vector<Permutation> perms) {
    return build_multiple_snc_ccc(example1_seed(), mos_generate(2, MosKind::hadamard), part,
                                  make_perm_family(std::move(perms), 4, 2));
}

// Brute-force inter-set zone: smallest |tau| (cyclic distance for periodic) with a non-zero value.
std::size_t oracle_zone(const CodeFamily& f, bool periodic) {
    const long L = static_cast<long>(f.sets[0].length());
    std::size_t zone = static_cast<std::size_t>(L);
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b) {
            if (a == b) continue;
            for (const auto& x : f.sets[a].codes())
                for (const auto& y : f.sets[b].codes()) {
                    const auto mx = fixtures::matrix(x);
                    const auto my = fixtures::matrix(y);
                    for (long t = 1 - L; t < L; ++t) {
                        const auto v = periodic ? oracle::code_periodic(mx, my, t) : oracle::code_aperiodic(mx, my, t);
                        if (v == oracle::Value(0)) continue;
                        const long d = periodic ? std::min((t % L + L) % L, L - (t % L + L) % L) : std::abs(t);
                        zone = std::min(zone, static_cast<std::size_t>(d));
                    }
                }
        }
    return zone;
}

}  // namespace

TEST_CASE("complete complementary check on the worked example") {
    const auto r = verify_ccc(example_set());
    CHECK(r.verdict);
    CHECK(r.peak == 24);
    CHECK(r.epsilon == 12);
    CHECK(r.classification == CodeClass::snc_ccc);
    CHECK(r.violations.empty());
    CHECK(r.structural.empty());
    CHECK(verify_snc(example_set()));
    CHECK_FALSE(verify_snc(seed_ccc("hadamard:4")));

    const auto h = verify_ccc(seed_ccc("hadamard:2"));
    CHECK(h.classification == CodeClass::traditional_ccc);
    CHECK(h.epsilon == 0);
}

TEST_CASE("mutations are located") {
    std::mt19937 rng(31337);
    const auto base = fixtures::example1_outputs();
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> k(0, 3), r(0, 3), c(0, 8);
        const std::size_t ki = k(rng), ri = r(rng), ci = c(rng);
        auto codes = base;
        const Complex old = codes[ki].at(ri, ci);
        // Flip a non-zero entry's sign, or fill a zero.
        codes[ki] = codes[ki].with_entry(ri, ci, old == Complex(0, 0) ? Complex(1, 0) : -old);
        const CodeSet mutated(codes);
        const auto a = verify_ccc(mutated);
        const auto b = verify_ccc(mutated);
        CHECK_FALSE(a.verdict);
        REQUIRE((!a.violations.empty() || !a.structural.empty()));
        if (!a.violations.empty()) {
            const auto& v = a.violations.front();
            CHECK(v.tau == b.violations.front().tau);
            CHECK(v.code_a == b.violations.front().code_a);
            CHECK(v.code_b == b.violations.front().code_b);
            // The reported value is the true correlation at that cell.
            const auto ref = oracle::code_aperiodic(fixtures::matrix(mutated[v.code_a]),
                                                    fixtures::matrix(mutated[v.code_b]), v.tau);
            CHECK(v.value == Complex(static_cast<double>(ref.real()), static_cast<double>(ref.imag())));
        }
        CHECK_FALSE(describe_first_issue(a).empty());
    }
}

TEST_CASE("structural problems") {
    auto codes = seed_ccc("hadamard:4").codes();
    codes.pop_back();
    const auto r = verify_ccc(CodeSet(codes));
    CHECK_FALSE(r.verdict);
    CHECK_FALSE(r.structural.empty());
}

TEST_CASE("zero-correlation-zone check") {
    const auto set = example_set();
    CHECK(verify_zccs(set, 9, CorrelationMode::aperiodic).verdict);
    CHECK(verify_zccs(set, 9, CorrelationMode::periodic).verdict);
    CHECK(verify_zccs(set, 1, CorrelationMode::aperiodic).verdict);
    CHECK_THROWS_AS(verify_zccs(set, 0, CorrelationMode::aperiodic), InvalidInput);
    CHECK_THROWS_AS(verify_zccs(set, 10, CorrelationMode::aperiodic), InvalidInput);

    const auto twin = Code::from_ints({{1, 1}, {1, -1}});
    const auto r = verify_zccs(CodeSet(std::vector<Code>{twin, twin}), 1, CorrelationMode::aperiodic);
    CHECK_FALSE(r.verdict);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().tau == 0);

    SUBCASE("every complete complementary set is a zone set for any width") {
        for (const char* id : {"example1", "hadamard:2", "hadamard:4", "dft:3"}) {
            const auto s = seed_ccc(id);
            for (std::size_t Z = 1; Z <= s.length(); ++Z) {
                CHECK(verify_zccs(s, Z, CorrelationMode::aperiodic).verdict);
                CHECK(verify_zccs(s, Z, CorrelationMode::periodic).verdict);
            }
        }
    }
}

TEST_CASE("inter-set zone measurement") {
    SUBCASE("worked example family") {
        const auto f = example_family(GapPartition({0, 3, 0}), {{1, 2, 3, 4}, {2, 1, 4, 3}});
        const auto a = measure_zccz(f, CorrelationMode::aperiodic);
        CHECK(a.width == oracle_zone(f, false));
        CHECK(a.width >= 6);
        CHECK(a.report.measured.predicted_zccz == 6);
        CHECK(a.report.measured.lambda == 3);
        CHECK(a.report.verdict);

        // Periodically the largest block offset folds back to L + n_1 + n_3 = 3.
        const auto p = measure_zccz(f, CorrelationMode::periodic);
        CHECK(p.width == oracle_zone(f, true));
        CHECK(p.width == 3);
        CHECK_FALSE(p.report.verdict);
        CHECK_FALSE(p.report.violations.empty());
    }
    SUBCASE("periodic zone reaches the prediction when the outer gaps are wide enough") {
        const auto f = example_family(GapPartition({2, 3, 1}), {{1, 2, 3, 4}, {2, 1, 4, 3}});
        const auto p = measure_zccz(f, CorrelationMode::periodic);
        CHECK(p.width == oracle_zone(f, true));
        CHECK(p.width >= 6);
        CHECK(p.report.verdict);
    }
    SUBCASE("random partitions agree with the oracle") {
        std::mt19937 rng(8);
        std::uniform_int_distribution<int> g(0, 3);
        for (int t = 0; t < 10; ++t) {
            const GapPartition part({g(rng), g(rng), g(rng)});
            const auto f = example_family(part, {{1, 2, 3, 4}, {2, 1, 4, 3}});
            const auto a = measure_zccz(f, CorrelationMode::aperiodic);
            CHECK(a.width == oracle_zone(f, false));
            CHECK(a.width >= 3 + static_cast<std::size_t>(part.gap(1)));
            CHECK(measure_zccz(f, CorrelationMode::periodic).width == oracle_zone(f, true));
        }
    }
    SUBCASE("no gaps gives a zone of L") {
        const auto f = example_family(GapPartition({0, 0, 0}), {{1, 2, 3, 4}, {2, 1, 4, 3}});
        CHECK(measure_zccz(f, CorrelationMode::aperiodic).width == 3);
    }
    SUBCASE("disjoint supports never correlate") {
        const CodeSet a(std::vector<Code>{Code::from_ints({{1, 0}}), Code::from_ints({{1, 0}})}, AlphabetSpec::ternary());
        const CodeSet b(std::vector<Code>{Code::from_ints({{0, 1}}), Code::from_ints({{0, -1}})}, AlphabetSpec::ternary());
        CodeFamily f{{a, b}, std::nullopt};
        // Shift 1 lines the supports up, so only the zero shift is clear.
        CHECK(measure_zccz(f, CorrelationMode::aperiodic).width == 1);
        CHECK(measure_zccz(f, CorrelationMode::aperiodic).report.verdict);
    }
    SUBCASE("single set is rejected") {
        CodeFamily f{{example_set()}, std::nullopt};
        CHECK_THROWS_AS(measure_zccz(f, CorrelationMode::aperiodic), InvalidInput);
    }
}

TEST_CASE("quasi-complementary deltas") {
    const auto set = example_set();
    const auto d = qccs_delta(set.codes(), CorrelationMode::aperiodic);
    CHECK(d.delta == 0);
    CHECK(d.delta_auto == 0);
    CHECK(d.delta_cross == 0);

    const auto twin = Code::from_ints({{1, 1}, {1, -1}});
    const std::vector<Code> codes{twin, twin};
    const auto t = qccs_delta(codes, CorrelationMode::aperiodic);
    CHECK(t.delta_auto == 0);
    CHECK(t.delta_cross == 4);
    CHECK(t.delta == 4);

    const std::vector<Code> single{Code::from_ints({{1, 1}})};
    const auto s = qccs_delta(single, CorrelationMode::periodic);
    CHECK(s.delta_auto == 2);
    CHECK(s.delta_cross == 0);
}

TEST_CASE("side-lobe magnitude of the four-set family") {
    // M = P = 4, no gaps, offset-unique permutations: every non-zero aperiodic
    // inter-set value has magnitude L M, one per seed code.
    const auto family = build_multiple_snc_ccc(
        example1_seed(), mos_generate(4, MosKind::hadamard), GapPartition({0, 0, 0, 0, 0}),
        make_perm_family({{1, 2, 3, 4}, {4, 3, 2, 1}, {3, 1, 4, 2}, {2, 4, 1, 3}}, 4, 4));
    const auto census = interset_census(family, CorrelationMode::aperiodic);
    CHECK(census.size() == 6 * 16);
    for (const auto& c : census) {
        CHECK(c.nonzero_shifts == 4);
        CHECK(c.max_magnitude == 12);
        for (const Shift s : c.shifts) {
            const auto v = code_xcorr(family.sets[c.set_a][c.code_a], family.sets[c.set_b][c.code_b], s,
                                      CorrelationMode::aperiodic);
            CHECK(std::abs(v) == 12);
        }
    }
    CHECK(interset_max_sidelobe(family, CorrelationMode::aperiodic) == 12);
}

TEST_CASE("orthogonal scalar families") {
    for (std::size_t P : {1u, 2u, 4u, 8u}) CHECK(verify_mos(mos_generate(P, MosKind::hadamard)).verdict);
    for (std::size_t P : {1u, 2u, 3u, 5u, 6u}) CHECK(verify_mos(mos_generate(P, MosKind::dft)).verdict);
    MosFamily bad{MosKind::hadamard, {Sequence::from_ints({1, 1}), Sequence::from_ints({1, 1})}};
    const auto r = verify_mos(bad);
    CHECK_FALSE(r.verdict);
}
