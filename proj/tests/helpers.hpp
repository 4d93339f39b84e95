#pragma once

#include <algorithm>
#include <vector>

#include "daff/bruhat.hpp"
#include "daff/element_io.hpp"

namespace daff::test {

inline const RootSystem& A1() { return *RootSystem::build('A', 1); }
inline const RootSystem& A2() { return *RootSystem::build('A', 2); }

inline AffineWeight weight(const RootSystem& sys, IntVec mu_root, Int m, Int l) {
  return {FiniteWeight::from_root_vector(sys, mu_root), m, l};
}

inline AffineWeylElement affine(const RootSystem& sys, IntVec lambda, std::vector<int> word = {}) {
  return {std::move(lambda), FiniteWeylElement::from_word(sys, word)};
}

inline SemigroupElement element(const RootSystem& sys, IntVec mu_root, Int m, Int l,
                                IntVec lambda, std::vector<int> word = {}) {
  return {weight(sys, std::move(mu_root), m, l), affine(sys, std::move(lambda), std::move(word))};
}

inline DoubleAffineRoot root(const RootSystem& sys, IntVec nu, Int r, Int j) {
  return {FiniteRoot::from_coords(sys, nu), r, j};
}

/// The running A2 example: X^{alpha_1 + alpha_2 + delta + Lambda_0} Y^{alpha_2}.
inline SemigroupElement a2_example() { return element(A2(), {1, 1}, 1, 1, {0, 1}); }
inline DoubleAffineRoot a2_alpha() { return root(A2(), {1, 0}, -2, 1); }

/// The A1 example: X^{14 alpha_1 - 23 delta + 8 Lambda_0}.
inline SemigroupElement a1_example() { return element(A1(), {14}, -23, 8, {0}); }

template <class T>
std::vector<IntVec> keys(const std::vector<T>& elements) {
  std::vector<IntVec> out;
  for (const auto& e : elements) {
    if constexpr (requires { e.y; })
      out.push_back(e.y.key());
    else
      out.push_back(e.key());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace daff::test
