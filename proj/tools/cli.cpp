#include "cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "snccc/error.hpp"
#include "snccc/io.hpp"
#include "snccc/recipe.hpp"
#include "snccc/verification.hpp"

namespace snccc::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput("bad integer '" + item + "' in '" + text + "'");
        }
    }
    return out;
}

std::vector<CorrelationMode> parse_modes(const std::string& text) {
    if (text == "both") return {CorrelationMode::aperiodic, CorrelationMode::periodic};
    return {parse_mode(text)};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

struct GenOptions {
    std::string recipe_path;
    std::string save_recipe_path;
    std::string seed = "example1";
    std::size_t blocks = 1;
    std::optional<int> n;
    std::string partition;
    std::string strategy = "front";
    std::string mos = "hadamard";
    std::string perms;
    std::uint64_t search_seed = 0;
    bool require_14 = false;
    bool strict_mu = true;
    std::string out;
};

int run_gen(const GenOptions& o, std::ostream& out) {
    Recipe recipe;
    if (!o.recipe_path.empty()) {
        recipe = load_recipe(o.recipe_path);
    } else {
        recipe.seed = o.seed;
        recipe.blocks = o.blocks;
        recipe.n = o.n;
        if (!o.partition.empty()) recipe.partition = parse_int_list(o.partition);
        recipe.strategy = parse_strategy(o.strategy);
        recipe.mos = parse_mos_kind(o.mos);
        if (o.perms.empty()) {
            recipe.perm_source = PermSource::none;
        } else if (o.perms == "auto") {
            recipe.perm_source = PermSource::search;
        } else {
            recipe.perm_source = PermSource::explicit_list;
            recipe.perms = parse_permutation_list(o.perms);
        }
        recipe.search_seed = o.search_seed;
        recipe.require_offset_unique = o.require_14;
        recipe.mu_range = o.strict_mu ? MuRange::strict : MuRange::extended;
    }
    const CodeFamily family = generate(recipe);
    if (!o.save_recipe_path.empty()) save_recipe(recipe, o.save_recipe_path);
    emit(family_to_string(family), o.out, out);
    return kSuccess;
}

struct VerifyOptions {
    std::string input;
    std::string mode = "both";
    std::size_t zccs = 0;
    std::string report;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
    const CodeFamily family = load_family(o.input);
    const auto modes = parse_modes(o.mode);
    std::vector<VerificationReport> reports;

    for (std::size_t j = 0; j < family.size(); ++j) {
        const CodeSet& set = family.sets[j];
        const std::string subject = "set " + std::to_string(j);
        for (const auto mode : modes) {
            // Aperiodic mode is the CCC definition itself; periodic mode checks
            // the full-width periodic zone.
            auto r = mode == CorrelationMode::aperiodic ? verify_ccc(set)
                                                        : verify_zccs(set, set.length(), CorrelationMode::periodic);
            r.subject = subject;
            reports.push_back(std::move(r));
            if (o.zccs > 0) {
                auto z = verify_zccs(set, o.zccs, mode);
                z.subject = subject;
                reports.push_back(std::move(z));
            }
        }
    }
    if (family.size() >= 2) {
        for (const auto mode : modes) {
            auto m = measure_zccz(family, mode);
            m.report.subject = "family";
            reports.push_back(std::move(m.report));
        }
    }

    bool verdict = true;
    for (const auto& r : reports) {
        verdict = verdict && r.verdict;
        out << r.subject << ": " << r.property << ' ' << (r.verdict ? "PASS" : "FAIL");
        if (r.property == "ccc" || r.property.starts_with("zccs")) {
            out << " peak " << fmt(r.peak) << " epsilon " << r.epsilon;
        }
        if (r.classification != CodeClass::none) out << " (" << to_string(r.classification) << ")";
        if (r.measured.zccz) out << " Z " << *r.measured.zccz;
        if (r.measured.predicted_zccz) out << " predicted " << *r.measured.predicted_zccz;
        if (!r.verdict) out << " [" << r.violations.size() << " violations; first: " << describe_first_issue(r) << "]";
        out << '\n';
    }
    out << "verdict: " << (verdict ? "PASS" : "FAIL") << '\n';
    if (!o.report.empty()) write_text_file(o.report, reports_to_json(reports));
    return verdict ? kSuccess : kVerificationFailed;
}

struct ProfileOptions {
    std::string input;
    std::size_t set_a = 0;
    std::size_t code_a = 0;
    std::optional<std::size_t> set_b;
    std::optional<std::size_t> code_b;
    std::string mode = "aperiodic";
    std::string out;
};

const Code& pick(const CodeFamily& family, std::size_t set, std::size_t code) {
    if (set >= family.size()) throw InvalidInput("set index " + std::to_string(set) + " out of range");
    if (code >= family.sets[set].size()) throw InvalidInput("code index " + std::to_string(code) + " out of range");
    return family.sets[set][code];
}

int run_profile(const ProfileOptions& o, std::ostream& out) {
    const CodeFamily family = load_family(o.input);
    const Code& a = pick(family, o.set_a, o.code_a);
    const Code& b = pick(family, o.set_b.value_or(o.set_a), o.code_b.value_or(o.code_a));
    const auto profile = correlation_profile(a, b, parse_mode(o.mode));
    emit(profile_to_csv(profile), o.out, out);
    return kSuccess;
}

struct SearchOptions {
    std::size_t M = 0;
    std::size_t P = 0;
    bool require_14 = false;
    std::uint64_t search_seed = 0;
    bool strict_mu = true;
};

int run_search(const SearchOptions& o, std::ostream& out) {
    const auto family = search_perm_family(o.M, o.P, o.require_14, o.search_seed,
                                           o.strict_mu ? MuRange::strict : MuRange::extended);
    for (const auto& p : family.perms) out << format_permutation(p) << '\n';
    out << "column_disjoint: " << (family.column_disjoint ? "true" : "false") << '\n';
    out << "offset_unique: " << (family.offset_unique ? "true" : "false") << '\n';
    return kSuccess;
}

struct MeasureOptions {
    std::string input;
    std::string mode = "both";
    std::string report;
};

int run_measure(const MeasureOptions& o, std::ostream& out) {
    const CodeFamily family = load_family(o.input);
    const auto codes = family.flatten();
    std::vector<VerificationReport> reports;
    for (const auto mode : parse_modes(o.mode)) {
        VerificationReport r;
        if (family.size() >= 2) {
            r = measure_zccz(family, mode).report;
        } else {
            r.property = std::string("zccz-") + std::string(to_string(mode));
            r.verdict = true;
        }
        r.subject = "family";
        const auto d = qccs_delta(codes, mode);
        const auto& first = codes.front();
        const double peak = static_cast<double>(first.rows() * first.length() - first.zero_count());
        r.measured.delta = d.delta;
        r.measured.delta_auto = d.delta_auto;
        r.measured.delta_cross = d.delta_cross;
        if (peak > 0) r.measured.normalized_delta = d.delta / peak;

        out << to_string(mode) << ':';
        if (r.measured.zccz) out << " Z " << *r.measured.zccz;
        if (r.measured.predicted_zccz) out << " (predicted " << *r.measured.predicted_zccz << ")";
        out << " delta " << fmt(d.delta) << " delta_A " << fmt(d.delta_auto) << " delta_C " << fmt(d.delta_cross)
            << '\n';
        reports.push_back(std::move(r));
    }
    if (!o.report.empty()) write_text_file(o.report, reports_to_json(reports));
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify spectrally-null-constrained complete complementary codes", "snccc"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Build a code family from a recipe or flags");
    gen_cmd->add_option("--recipe", gen.recipe_path, "Recipe document to replay");
    gen_cmd->add_option("--save-recipe", gen.save_recipe_path, "Write the recipe used");
    gen_cmd->add_option("--seed", gen.seed, "example1 | hadamard:M | dft:M | <code-set file>");
    gen_cmd->add_option("--P", gen.blocks, "Blocks per code (MOS length)");
    gen_cmd->add_option("--n", gen.n, "Total number of zero columns");
    gen_cmd->add_option("--partition", gen.partition, "Explicit gaps a,b,c,... (P + 1 values)");
    gen_cmd->add_option("--strategy", gen.strategy, "front | even | distinct | distinct-mod-L");
    gen_cmd->add_option("--mos", gen.mos, "hadamard | dft");
    gen_cmd->add_option("--perms", gen.perms, "auto | 1,2,3,4;2,1,4,3");
    gen_cmd->add_option("--search-seed", gen.search_seed, "Candidate order seed for --perms auto");
    gen_cmd->add_flag("--require-14", gen.require_14, "Require offset-unique permutations");
    gen_cmd->add_flag("--strict-mu,!--no-strict-mu", gen.strict_mu,
                      "Column condition over positions 1..P-1 only (default); --no-strict-mu adds position P");
    gen_cmd->add_option("--out", gen.out, "Output family document (default stdout)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Verify every set of a family; exit 0 iff all checks pass");
    verify_cmd->add_option("input", verify.input, "Family or code-set document")->required();
    verify_cmd->add_option("--mode", verify.mode, "aperiodic | periodic | both");
    verify_cmd->add_option("--zccs", verify.zccs, "Also check a zero-correlation zone of this width");
    verify_cmd->add_option("--report", verify.report, "Write a JSON report");

    ProfileOptions profile;
    std::size_t set_b = 0;
    std::size_t code_b = 0;
    auto* profile_cmd = app.add_subcommand("profile", "Export a correlation profile as CSV");
    profile_cmd->add_option("input", profile.input, "Family or code-set document")->required();
    profile_cmd->add_option("--set", profile.set_a, "Set of the first code");
    profile_cmd->add_option("--code", profile.code_a, "Index of the first code");
    auto* set_b_opt = profile_cmd->add_option("--with-set", set_b, "Set of the second code (default: --set)");
    auto* code_b_opt = profile_cmd->add_option("--with-code", code_b, "Index of the second code (default: --code)");
    profile_cmd->add_option("--mode", profile.mode, "aperiodic | periodic");
    profile_cmd->add_option("--out", profile.out, "CSV output (default stdout)");

    SearchOptions search;
    auto* search_cmd = app.add_subcommand("search-perms", "Search for a permutation family");
    search_cmd->add_option("--M", search.M, "Permutation size")->required();
    search_cmd->add_option("--P", search.P, "Block length and family size")->required();
    search_cmd->add_flag("--require-14", search.require_14, "Require offset-unique permutations");
    search_cmd->add_option("--search-seed", search.search_seed, "Candidate order seed (0 = lexicographic)");
    search_cmd->add_flag("--strict-mu,!--no-strict-mu", search.strict_mu, "Column condition range");

    MeasureOptions measure;
    auto* measure_cmd = app.add_subcommand("measure", "Measure ZCCZ width and correlation maxima");
    measure_cmd->add_option("input", measure.input, "Family or code-set document")->required();
    measure_cmd->add_option("--mode", measure.mode, "aperiodic | periodic | both");
    measure_cmd->add_option("--report", measure.report, "Write a JSON report");

    std::vector<const char*> argv{"snccc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }
    if (*set_b_opt) profile.set_b = set_b;
    if (*code_b_opt) profile.code_b = code_b;

    try {
        if (*gen_cmd) return run_gen(gen, out);
        if (*verify_cmd) return run_verify(verify, out);
        if (*profile_cmd) return run_profile(profile, out);
        if (*search_cmd) return run_search(search, out);
        if (*measure_cmd) return run_measure(measure, out);
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const NotFound& e) {
        err << "not found: " << e.what() << '\n';
        return kInfeasible;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace snccc::cli
