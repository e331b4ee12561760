#pragma once

#include <vector>

namespace borbit {

using IntMat = std::vector<std::vector<long long>>;

// Elementary divisors d_1 | d_2 | ... (nonnegative, zeros trailing).
std::vector<long long> smith_normal_form(IntMat a);

// Order of the torsion subgroup of Z^cols / <rows>. The rows are expected to
// be linearly independent, so every divisor is positive.
long long lattice_torsion_order(const IntMat& rows);

}  // namespace borbit
