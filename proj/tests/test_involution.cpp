#include <stdexcept>
#include <set>

#include "borbit/involution.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace borbit;
using testutil::root_from_euclid;
using testutil::sys;

namespace {

std::vector<WeylElement> involutions(const RootSystem& s) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : enumerate_weyl_group(s))
    if (is_involution(w)) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("circ action basics") {
  const RootSystem& a2 = sys('A', 2);
  WeylElement id = weyl_identity(2);
  WeylElement s1 = simple_reflection(a2, 0);
  CHECK(circ(a2, 0, id) == s1);
  CHECK(circ(a2, 0, s1) == id);
  // non-commuting case conjugates: the result is the reflection of a1+a2
  CHECK(circ(a2, 1, s1) == root_reflection(a2, a2.index_of(Coeffs{1, 1})));
  CHECK_THROWS_AS(circ(a2, 0, weyl_multiply(s1, simple_reflection(a2, 1))),
                  std::invalid_argument);
}

TEST_CASE("involution length") {
  const RootSystem& b3 = sys('B', 3);
  CHECK(involution_length(b3, weyl_identity(3)) == 0);
  for (int i = 0; i < 3; ++i) CHECK(involution_length(b3, simple_reflection(b3, i)) == 1);

  // L(sigma_S) = (l + #S)/2 and the (-1)-eigenspace is spanned by S, over
  // every orthogonal subset of Psi
  ParabolicData par = parabolic(b3, 0);
  std::vector<std::vector<int>> subsets = {{}};
  for (size_t i = 0; i < par.psi.size(); ++i)
    for (size_t j = 0; j < subsets.size(); ++j) {
      std::vector<int> cand = subsets[j];
      cand.push_back(par.psi[i]);
      if (is_orthogonal_set(b3, cand)) subsets.push_back(cand);
    }
  for (const std::vector<int>& roots : subsets) {
    WeylElement sigma = sigma_of_set(b3, roots);
    CHECK(eigenspace_minus_one_dim(sigma) == (int)roots.size());
    CHECK(involution_length(b3, sigma) ==
          (weyl_length(b3, sigma) + (int)roots.size()) / 2);
  }

  std::vector<int> rank2 = {root_from_euclid(b3, {1, 0, -1}), root_from_euclid(b3, {1, 0, 1})};
  CHECK(eigenspace_minus_one_dim(sigma_of_set(b3, rank2)) == 2);
  CHECK_THROWS_AS(sigma_of_set(b3, std::vector<int>{root_from_euclid(b3, {1, 0, 0}),
                                                    root_from_euclid(b3, {1, 0, 1})}),
                  std::invalid_argument);
}

TEST_CASE("real descent sets") {
  const RootSystem& b3 = sys('B', 3);
  CHECK(real_descent_set(b3, weyl_identity(3)).empty());
  int a1 = b3.simple(0);
  std::vector<int> expect = {a1, b3.negate(a1)};
  std::sort(expect.begin(), expect.end());
  CHECK(real_descent_set(b3, simple_reflection(b3, 0)) == expect);

  int e1 = root_from_euclid(b3, {1, 0, 0});
  std::vector<int> got = real_descent_set(b3, sigma_of_set(b3, {e1}));
  CHECK(std::set<int>(got.begin(), got.end()) == std::set<int>{e1, b3.negate(e1)});
}

TEST_CASE("circ words recompose and have length L") {
  for (char t : {'A', 'B'}) {
    const RootSystem& s = sys(t, 3);
    for (const WeylElement& sigma : involutions(s)) {
      std::vector<int> word = circ_reduced_word(s, sigma);
      CHECK((int)word.size() == involution_length(s, sigma));
      WeylElement acc = weyl_identity(s.rank);
      for (int a : word) acc = circ(s, a, acc);
      CHECK(acc == sigma);
    }
  }
  CHECK(circ_reduced_word(sys('A', 3), weyl_identity(3)).empty());
  CHECK(circ_reduced_word(sys('A', 3), simple_reflection(sys('A', 3), 1)) ==
        std::vector<int>{1});
}

TEST_CASE("circ steps, comparability, and the non-commuting chain") {
  const RootSystem& s = sys('A', 3);
  WeylContext wc(s);
  for (const WeylElement& sigma : involutions(s))
    for (int a = 0; a < s.rank; ++a) {
      WeylElement c = circ(s, a, sigma);
      int dl = involution_length(s, c) - involution_length(s, sigma);
      CHECK((dl == 1 || dl == -1));
      CHECK((wc.bruhat_leq(sigma, c) || wc.bruhat_leq(c, sigma)));
      // up for circ exactly when up for plain left multiplication
      WeylElement ls = weyl_multiply(simple_reflection(s, a), sigma);
      bool plain_up = weyl_length(s, ls) > weyl_length(s, sigma);
      CHECK((dl == 1) == plain_up);
      if (!(ls == weyl_multiply(sigma, simple_reflection(s, a)))) {
        WeylElement conj = weyl_multiply(ls, simple_reflection(s, a));
        if (plain_up) {
          CHECK(wc.bruhat_leq(ls, conj));
          CHECK(wc.bruhat_leq(sigma, ls));
        }
      }
    }
}

TEST_CASE("sigma of the minimal max-rank A3:2 orbit is a product of simple reflections") {
  const PairContext& pc = testutil::ctx('A', 3, 1);
  int bottom = pc.minimal_max_rank();
  const WeylElement& sigma = pc.sigma(bottom);
  // expect s_{a1} s_{a3}, two orthogonal simple reflections
  const RootSystem& s = pc.sys();
  CHECK(sigma == weyl_multiply(simple_reflection(s, 0), simple_reflection(s, 2)));
  std::vector<int> word = circ_reduced_word(s, sigma);
  CHECK(word.size() == 2);
}
