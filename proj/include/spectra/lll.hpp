#pragma once

#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

// In-place LLL reduction (delta = 99/100) of the lattice spanned by the rows.
// Exact rational Gram-Schmidt bookkeeping; rows must be linearly independent.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

}  // namespace spectra
