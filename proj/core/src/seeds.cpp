#include "snccc/seeds.hpp"

#include <charconv>
#include <string>

#include "snccc/error.hpp"
#include "snccc/io.hpp"
#include "snccc/mos.hpp"
#include "snccc/verification.hpp"

namespace snccc {

CodeSet example1_seed() {
    return CodeSet({
        Code::from_ints({{1, 1, 1}, {1, 1, -1}, {1, 1, -1}, {-1, 1, -1}}),
        Code::from_ints({{1, -1, 1}, {1, 1, -1}, {-1, -1, 1}, {1, 1, 1}}),
        Code::from_ints({{1, -1, -1}, {1, 1, 1}, {-1, 1, -1}, {1, -1, -1}}),
        Code::from_ints({{1, -1, -1}, {1, -1, 1}, {1, 1, 1}, {-1, 1, 1}}),
    }, AlphabetSpec::ternary());
}

CodeSet hadamard_seed(std::size_t M) {
    const auto h = sylvester_hadamard(M);
    std::vector<Code> codes;
    for (std::size_t k = 0; k < M; ++k) {
        std::vector<Complex> column;
        for (std::size_t r = 0; r < M; ++r) column.emplace_back(static_cast<double>(h[r][k]), 0.0);
        codes.emplace_back(M, 1, std::move(column));
    }
    return CodeSet(std::move(codes), AlphabetSpec::ternary());
}

CodeSet dft_seed(std::size_t M) {
    if (M == 0) throw InvalidInput("seed order M must be at least 1");
    std::vector<Code> codes;
    const auto q = static_cast<long long>(M);
    for (long long k = 0; k < q; ++k) {
        std::vector<Complex> column;
        for (long long r = 0; r < q; ++r) column.push_back(root_of_unity(r * k, q));
        codes.emplace_back(M, 1, std::move(column));
    }
    return CodeSet(std::move(codes), AlphabetSpec::qary(static_cast<int>(M)));
}

namespace {

std::size_t parse_order(std::string_view id, std::string_view text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw InvalidInput("bad seed order in '" + std::string(id) + "'");
    }
    return value;
}

}  // namespace

CodeSet seed_ccc(std::string_view id) {
    const auto seed = [&] {
        if (id == "example1") return example1_seed();
        if (id.starts_with("hadamard:")) return hadamard_seed(parse_order(id, id.substr(9)));
        if (id.starts_with("dft:")) return dft_seed(parse_order(id, id.substr(4)));
        return load_codeset(std::string(id));
    }();
    const auto report = verify_ccc(seed);
    if (!report.verdict) {
        throw ValidationError("seed '" + std::string(id) + "' is not a CCC: " + describe_first_issue(report));
    }
    return seed;
}

}  // namespace snccc
