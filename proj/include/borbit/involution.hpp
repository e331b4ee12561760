#pragma once

#include <vector>

#include "borbit/weyl.hpp"

namespace borbit {

bool is_involution(const WeylElement& w);

// Twisted action of a simple reflection on involutions: s_i sigma when the
// two commute, s_i sigma s_i otherwise. Throws on non-involution input.
WeylElement circ(const RootSystem& sys, int i, const WeylElement& sigma);

// Dimension of the (-1)-eigenspace, exact integer rank computation.
int eigenspace_minus_one_dim(const WeylElement& w);

// L(sigma) = (l(sigma) + lambda(sigma)) / 2.
int involution_length(const RootSystem& sys, const WeylElement& sigma);

// Product of the reflections of a pairwise orthogonal set of roots.
WeylElement sigma_of_set(const RootSystem& sys, const std::vector<int>& roots);

// All roots negated by sigma.
std::vector<int> real_descent_set(const RootSystem& sys, const WeylElement& sigma);

// Word a_1..a_L of length exactly L(sigma) whose left-to-right circ
// composition from the identity yields sigma. Greedy smallest descent.
std::vector<int> circ_reduced_word(const RootSystem& sys, const WeylElement& sigma);

}  // namespace borbit
