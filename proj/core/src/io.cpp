#include "snccc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "snccc/error.hpp"

namespace snccc {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1";

// Shortest round-trip text; integral values print without a fraction.
std::string number(double v) {
    if (v == 0.0) return "0";
    if (std::abs(v) < 9.0e15 && v == std::trunc(v)) return std::to_string(static_cast<long long>(v));
    return json(v).dump();
}

void write_entry(std::ostream& os, Complex v, bool ternary) {
    if (ternary) {
        os << static_cast<int>(v.real());
    } else {
        os << '[' << number(v.real()) << ", " << number(v.imag()) << ']';
    }
}

void write_codes(std::ostream& os, const std::vector<Code>& codes, bool ternary, const std::string& indent) {
    os << "[\n";
    for (std::size_t k = 0; k < codes.size(); ++k) {
        os << indent << "  [\n";
        const Code& c = codes[k];
        for (std::size_t r = 0; r < c.rows(); ++r) {
            os << indent << "    [";
            const auto row = c.row(r);
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ", ";
                write_entry(os, row[i], ternary);
            }
            os << ']' << (r + 1 < c.rows() ? "," : "") << '\n';
        }
        os << indent << "  ]" << (k + 1 < codes.size() ? "," : "") << '\n';
    }
    os << indent << ']';
}

json params_json(const CodeSet& set) {
    json p = json::object();
    p["K"] = set.size();
    p["M"] = set.rows();
    p["L"] = set.length();
    p["alphabet"] = set.alphabet().kind == AlphabetKind::ternary ? "ternary" : "qary";
    p["q"] = set.alphabet().q;
    return p;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path + ": expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
    return *it;
}

template <typename T>
T get_as(const json& obj, const std::string& key, const std::string& path) {
    const json& v = field(obj, key, path);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw ParseError(path + "." + key + ": wrong type");
    }
}

std::size_t get_count(const json& obj, const std::string& key, const std::string& path) {
    const json& v = field(obj, key, path);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(path + "." + key + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

void check_format(const json& doc, const std::string& expected) {
    const auto format = get_as<std::string>(doc, "format", "document");
    if (format != expected) throw ParseError("document: format is '" + format + "', expected '" + expected + "'");
    const auto version = get_as<std::string>(doc, "version", "document");
    if (version != kVersion) throw ParseError("document: unsupported version '" + version + "'");
}

AlphabetSpec parse_alphabet(const json& params) {
    const auto kind = get_as<std::string>(params, "alphabet", "params");
    const int q = get_as<int>(params, "q", "params");
    if (kind == "ternary") {
        if (q != 2) throw ValidationError("params.q: ternary alphabet requires q = 2");
        return AlphabetSpec::ternary();
    }
    if (kind == "qary") {
        if (q < 1) throw ValidationError("params.q: must be positive");
        return AlphabetSpec::qary(q);
    }
    throw ValidationError("params.alphabet: unknown kind '" + kind + "'");
}

Complex parse_entry(const json& e, bool ternary, const std::string& path) {
    if (ternary) {
        if (!e.is_number_integer()) throw ValidationError(path + ": ternary entries must be integers");
        const auto v = e.get<long long>();
        if (v < -1 || v > 1) {
            throw ValidationError(path + ": entry " + std::to_string(v) + " outside the ternary alphabet {-1, 0, 1}");
        }
        return {static_cast<double>(v), 0.0};
    }
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ValidationError(path + ": q-ary entries must be [re, im] pairs");
    }
    return {e[0].get<double>(), e[1].get<double>()};
}

struct Geometry {
    std::size_t K, M, L;
    AlphabetSpec alphabet;
};

Geometry parse_geometry(const json& params) {
    return {get_count(params, "K", "params"), get_count(params, "M", "params"), get_count(params, "L", "params"),
            parse_alphabet(params)};
}

CodeSet parse_codes(const json& codes, const Geometry& g, const std::string& path) {
    if (!codes.is_array()) throw ParseError(path + ": expected an array of codes");
    if (codes.size() != g.K) {
        throw ValidationError(path + ": declared K = " + std::to_string(g.K) + " but found " +
                              std::to_string(codes.size()) + " codes");
    }
    const bool ternary = g.alphabet.kind == AlphabetKind::ternary;
    std::vector<Code> out;
    for (std::size_t k = 0; k < codes.size(); ++k) {
        const std::string cpath = path + "[" + std::to_string(k) + "]";
        const json& code = codes[k];
        if (!code.is_array() || code.size() != g.M) {
            throw ValidationError(cpath + ": declared M = " + std::to_string(g.M) + " rows, found " +
                                  std::to_string(code.is_array() ? code.size() : 0));
        }
        std::vector<Complex> data;
        for (std::size_t r = 0; r < g.M; ++r) {
            const std::string rpath = cpath + "[" + std::to_string(r) + "]";
            const json& row = code[r];
            if (!row.is_array() || row.size() != g.L) {
                throw ValidationError(rpath + ": declared L = " + std::to_string(g.L) + " entries, found " +
                                      std::to_string(row.is_array() ? row.size() : 0));
            }
            for (std::size_t i = 0; i < g.L; ++i) {
                data.push_back(parse_entry(row[i], ternary, rpath + "[" + std::to_string(i) + "]"));
            }
        }
        try {
            out.emplace_back(g.M, g.L, std::move(data));
        } catch (const InvalidInput& e) {
            throw ValidationError(cpath + ": " + e.what());
        }
    }
    try {
        return CodeSet(std::move(out), g.alphabet);
    } catch (const InvalidInput& e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string_view to_string(MuRange r) { return r == MuRange::strict ? "strict" : "extended"; }

MuRange parse_mu_range(const std::string& s) {
    if (s == "strict") return MuRange::strict;
    if (s == "extended") return MuRange::extended;
    throw ValidationError("provenance.mu_range: unknown value '" + s + "'");
}

json provenance_json(const Provenance& p) {
    json j = json::object();
    j["seed"] = p.seed_id;
    j["seed_length"] = p.seed_length;
    j["partition"] = p.partition.gaps();
    j["mos"] = std::string(to_string(p.mos));
    j["perms"] = p.perms;
    j["mu_range"] = std::string(to_string(p.mu_range));
    return j;
}

Provenance parse_provenance(const json& j) {
    const std::string path = "provenance";
    Provenance p;
    p.seed_id = get_as<std::string>(j, "seed", path);
    p.seed_length = get_count(j, "seed_length", path);
    try {
        p.partition = GapPartition(get_as<std::vector<int>>(j, "partition", path));
        p.mos = parse_mos_kind(get_as<std::string>(j, "mos", path));
    } catch (const InvalidInput& e) {
        throw ValidationError(path + ": " + e.what());
    }
    p.perms = get_as<std::vector<Permutation>>(j, "perms", path);
    p.mu_range = parse_mu_range(get_as<std::string>(j, "mu_range", path));
    return p;
}

json complex_json(Complex v) { return json::array({v.real(), v.imag()}); }

json measured_json(const Measurements& m) {
    json j = json::object();
    if (m.zccz) j["zccz"] = *m.zccz;
    if (m.predicted_zccz) j["predicted_zccz"] = *m.predicted_zccz;
    if (m.lambda) j["lambda"] = *m.lambda;
    if (m.delta) j["delta"] = *m.delta;
    if (m.delta_auto) j["delta_auto"] = *m.delta_auto;
    if (m.delta_cross) j["delta_cross"] = *m.delta_cross;
    if (m.normalized_delta) j["normalized_delta"] = *m.normalized_delta;
    return j;
}

json report_json(const VerificationReport& r) {
    json j = json::object();
    j["subject"] = r.subject;
    j["property"] = r.property;
    j["verdict"] = r.verdict;
    j["peak"] = r.peak;
    j["epsilon"] = r.epsilon;
    j["classification"] = std::string(to_string(r.classification));
    j["structural"] = r.structural;
    json v = json::array();
    for (const auto& x : r.violations) {
        v.push_back({{"sets", {x.set_a, x.set_b}},
                     {"codes", {x.code_a, x.code_b}},
                     {"tau", x.tau},
                     {"mode", std::string(to_string(x.mode))},
                     {"value", complex_json(x.value)},
                     {"expected", complex_json(x.expected)}});
    }
    j["violations"] = std::move(v);
    j["measured"] = measured_json(r.measured);
    return j;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw InvalidInput("write to '" + path.string() + "' failed");
}

std::string codeset_to_string(const CodeSet& set) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"format\": \"snccc-codeset\",\n";
    os << "  \"version\": \"" << kVersion << "\",\n";
    os << "  \"params\": " << params_json(set).dump() << ",\n";
    os << "  \"codes\": ";
    write_codes(os, set.codes(), set.alphabet().kind == AlphabetKind::ternary, "  ");
    os << "\n}\n";
    return os.str();
}

CodeSet codeset_from_string(const std::string& text) {
    const json doc = parse_json(text);
    check_format(doc, "snccc-codeset");
    const Geometry g = parse_geometry(field(doc, "params", "document"));
    return parse_codes(field(doc, "codes", "document"), g, "codes");
}

void save_codeset(const CodeSet& set, const std::filesystem::path& path) {
    write_text_file(path, codeset_to_string(set));
}

CodeSet load_codeset(const std::filesystem::path& path) { return codeset_from_string(read_text_file(path)); }

std::string family_to_string(const CodeFamily& family) {
    if (family.sets.empty()) throw InvalidInput("cannot save an empty family");
    const CodeSet& first = family.sets.front();
    for (const auto& s : family.sets) {
        if (s.size() != first.size() || s.rows() != first.rows() || s.length() != first.length() ||
            !(s.alphabet() == first.alphabet())) {
            throw InvalidInput("family sets do not share geometry and alphabet");
        }
    }
    json params = params_json(first);
    params["sets"] = family.size();

    std::ostringstream os;
    os << "{\n";
    os << "  \"format\": \"snccc-family\",\n";
    os << "  \"version\": \"" << kVersion << "\",\n";
    os << "  \"params\": " << params.dump() << ",\n";
    if (family.provenance) os << "  \"provenance\": " << provenance_json(*family.provenance).dump() << ",\n";
    os << "  \"sets\": [\n";
    const bool ternary = first.alphabet().kind == AlphabetKind::ternary;
    for (std::size_t j = 0; j < family.size(); ++j) {
        os << "    ";
        write_codes(os, family.sets[j].codes(), ternary, "    ");
        os << (j + 1 < family.size() ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
    return os.str();
}

CodeFamily family_from_string(const std::string& text) {
    const json doc = parse_json(text);
    const auto format = get_as<std::string>(doc, "format", "document");
    if (format == "snccc-codeset") {
        CodeFamily f;
        f.sets.push_back(codeset_from_string(text));
        return f;
    }
    check_format(doc, "snccc-family");
    const json& params = field(doc, "params", "document");
    const Geometry g = parse_geometry(params);
    const std::size_t count = get_count(params, "sets", "params");
    const json& sets = field(doc, "sets", "document");
    if (!sets.is_array()) throw ParseError("sets: expected an array");
    if (sets.size() != count) {
        throw ValidationError("sets: declared " + std::to_string(count) + " sets, found " +
                              std::to_string(sets.size()));
    }
    CodeFamily f;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        f.sets.push_back(parse_codes(sets[j], g, "sets[" + std::to_string(j) + "]"));
    }
    if (doc.contains("provenance")) f.provenance = parse_provenance(doc["provenance"]);
    return f;
}

void save_family(const CodeFamily& family, const std::filesystem::path& path) {
    write_text_file(path, family_to_string(family));
}

CodeFamily load_family(const std::filesystem::path& path) { return family_from_string(read_text_file(path)); }

std::string recipe_to_string(const Recipe& r) {
    json j = json::object();
    j["format"] = "snccc-recipe";
    j["version"] = kVersion;
    j["seed"] = r.seed;
    j["P"] = r.blocks;
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["partition"] = r.partition ? json(*r.partition) : json(nullptr);
    j["strategy"] = std::string(to_string(r.strategy));
    j["mos"] = std::string(to_string(r.mos));
    switch (r.perm_source) {
        case PermSource::none: j["perms"] = "none"; break;
        case PermSource::search: j["perms"] = "auto"; break;
        case PermSource::explicit_list: j["perms"] = r.perms; break;
    }
    j["search_seed"] = r.search_seed;
    j["require_14"] = r.require_offset_unique;
    j["strict_mu"] = r.mu_range == MuRange::strict;
    return j.dump(2) + "\n";
}

Recipe recipe_from_string(const std::string& text) {
    const json doc = parse_json(text);
    check_format(doc, "snccc-recipe");
    const std::string path = "recipe";
    Recipe r;
    r.seed = get_as<std::string>(doc, "seed", path);
    r.blocks = get_count(doc, "P", path);
    if (const json& n = field(doc, "n", path); !n.is_null()) r.n = get_as<int>(doc, "n", path);
    if (const json& p = field(doc, "partition", path); !p.is_null()) {
        r.partition = get_as<std::vector<int>>(doc, "partition", path);
    }
    try {
        r.strategy = parse_strategy(get_as<std::string>(doc, "strategy", path));
        r.mos = parse_mos_kind(get_as<std::string>(doc, "mos", path));
    } catch (const InvalidInput& e) {
        throw ValidationError(path + ": " + e.what());
    }
    const json& perms = field(doc, "perms", path);
    if (perms.is_string()) {
        const auto s = perms.get<std::string>();
        if (s == "none") {
            r.perm_source = PermSource::none;
        } else if (s == "auto") {
            r.perm_source = PermSource::search;
        } else {
            throw ValidationError(path + ".perms: expected \"none\", \"auto\" or a list of permutations");
        }
    } else {
        r.perm_source = PermSource::explicit_list;
        r.perms = get_as<std::vector<Permutation>>(doc, "perms", path);
    }
    r.search_seed = get_as<std::uint64_t>(doc, "search_seed", path);
    r.require_offset_unique = get_as<bool>(doc, "require_14", path);
    r.mu_range = get_as<bool>(doc, "strict_mu", path) ? MuRange::strict : MuRange::extended;
    return r;
}

void save_recipe(const Recipe& recipe, const std::filesystem::path& path) {
    write_text_file(path, recipe_to_string(recipe));
}

Recipe load_recipe(const std::filesystem::path& path) { return recipe_from_string(read_text_file(path)); }

std::string profile_to_csv(const CorrelationProfile& profile) {
    std::ostringstream os;
    os << "tau,re,im,abs\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const Complex v = profile[i];
        os << profile.shift(i) << ',' << number(v.real()) << ',' << number(v.imag()) << ',' << number(std::abs(v))
           << '\n';
    }
    return os.str();
}

void export_profile_csv(const CorrelationProfile& profile, const std::filesystem::path& path) {
    write_text_file(path, profile_to_csv(profile));
}

CorrelationProfile profile_from_csv(const std::string& text, CorrelationMode mode) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "tau,re,im,abs") throw ParseError("line 1: expected header tau,re,im,abs");
    std::vector<Shift> shifts;
    std::vector<Complex> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell[4];
        for (auto& c : cell) {
            if (!std::getline(row, c, ',')) throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields");
        }
        try {
            shifts.push_back(std::stoll(cell[0]));
            values.emplace_back(std::stod(cell[1]), std::stod(cell[2]));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed number");
        }
    }
    if (values.empty()) throw ParseError("profile CSV has no rows");
    const std::size_t length = mode == CorrelationMode::aperiodic ? (values.size() + 1) / 2 : values.size();
    CorrelationProfile profile(mode, length, std::move(values));
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (shifts[i] != profile.shift(i)) {
            throw ParseError("line " + std::to_string(i + 2) + ": shift " + std::to_string(shifts[i]) +
                             " out of order");
        }
    }
    return profile;
}

std::string report_to_json(const VerificationReport& report) { return report_json(report).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    json j = json::object();
    bool verdict = true;
    json list = json::array();
    for (const auto& r : reports) {
        verdict = verdict && r.verdict;
        list.push_back(report_json(r));
    }
    j["verdict"] = verdict;
    j["reports"] = std::move(list);
    return j.dump(2) + "\n";
}

}  // namespace snccc
