#include "daff/sampling.hpp"

namespace daff::sampling {

Int uniform(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

AffineWeylElement random_affine(const RootSystem& system, Rng& rng, int max_word) {
  std::vector<int> word(uniform(rng, 0, max_word));
  for (int& i : word) i = static_cast<int>(uniform(rng, 0, system.rank()));
  return AffineWeylElement::from_word(system, word);
}

AffineWeight random_dominant(const RootSystem& system, Rng& rng, Int min_pair, Int max_pair) {
  const int n = system.rank();
  IntVec mu(n);
  for (Int& c : mu) c = uniform(rng, min_pair, max_pair);
  // <zeta, alpha_0> = l - <mu, theta>
  Int l = uniform(rng, min_pair, max_pair) +
          RootSystem::pair_weight_vector(mu, system.coords(system.theta()));
  return {FiniteWeight(&system, mu), uniform(rng, -3, 3), l};
}

SemigroupElement random_element(const RootSystem& system, Rng& rng, const ElementShape& shape) {
  AffineWeight zeta;
  do {
    zeta = random_dominant(system, rng, shape.min_pair, shape.max_pair);
  } while (zeta.l <= 0);
  AffineWeylElement v = random_affine(system, rng, shape.max_v);
  AffineWeylElement w = random_affine(system, rng, shape.max_w);
  return SemigroupElement(v.apply(zeta), w);
}

std::optional<DoubleAffineRoot> random_reflection_root(const SemigroupElement& x, Rng& rng,
                                                       bool upward) {
  const RootSystem& sys = x.system();
  ExtendedElement inv = x.inverse();
  for (int attempt = 0; attempt < 2000; ++attempt) {
    DoubleAffineRoot a{FiniteRoot(&sys, static_cast<int>(uniform(rng, 0, sys.num_roots() - 1))),
                       uniform(rng, -6, 6), uniform(rng, 0, 12)};
    if (!a.is_positive()) continue;
    if (inv.apply(a).is_positive() == upward) return a;
  }
  return std::nullopt;
}

}  // namespace daff::sampling
