#pragma once

#include <string_view>

#include "snccc/types.hpp"

namespace snccc {

/// The (4, 3)-CCC used as the worked-example seed.  The first code's third
/// row is (+, +, -), the row embedded in the worked example's output blocks.
CodeSet example1_seed();

/// (M, 1)-CCC whose k-th code is the k-th column of the Sylvester Hadamard
/// matrix of order M (a power of two).
CodeSet hadamard_seed(std::size_t M);

/// (M, 1)-CCC from the columns of the M-point DFT matrix (q = M alphabet).
CodeSet dft_seed(std::size_t M);

/// Resolves a seed identifier: "example1", "hadamard:M", "dft:M", or a path
/// to a code-set document.  Every seed is checked with verify_ccc before it
/// is returned; a failing seed is rejected with its first violated cell.
CodeSet seed_ccc(std::string_view id);

}  // namespace snccc
