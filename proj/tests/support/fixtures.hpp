#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "snccc/types.hpp"

namespace fixtures {

/// Row written with '+', '-', '0'.
inline std::vector<snccc::Complex> signs(const std::string& row) {
    std::vector<snccc::Complex> out;
    for (char ch : row) out.emplace_back(ch == '+' ? 1.0 : ch == '-' ? -1.0 : 0.0, 0.0);
    return out;
}

inline snccc::Code code(const std::vector<std::string>& rows) {
    std::vector<std::vector<snccc::Complex>> m;
    for (const auto& r : rows) m.push_back(signs(r));
    return snccc::Code::from_rows(m);
}

// The four 4x9 output codes of the worked example, as printed.
inline std::vector<snccc::Code> example1_outputs() {
    return {
        code({"+++000+-+", "++-000++-", "++-000--+", "-+-000+++"}),
        code({"+++000-+-", "++-000--+", "++-000++-", "-+-000---"}),
        code({"+--000+--", "+++000+-+", "-+-000+++", "+--000-++"}),
        code({"+--000-++", "+++000-+-", "-+-000---", "+--000+--"}),
    };
}

inline oracle::Matrix matrix(const snccc::Code& c) {
    oracle::Matrix m;
    for (std::size_t r = 0; r < c.rows(); ++r) m.emplace_back(c.row(r).begin(), c.row(r).end());
    return m;
}

inline oracle::Seq seq(const snccc::Sequence& s) { return {s.entries().begin(), s.entries().end()}; }

}  // namespace fixtures
