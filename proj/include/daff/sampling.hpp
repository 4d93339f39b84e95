#pragma once

#include <optional>
#include <random>

#include "daff/double_affine.hpp"

// Seeded random generators for property checks and the self-test.
namespace daff::sampling {

using Rng = std::mt19937_64;

Int uniform(Rng& rng, Int lo, Int hi);

/// Product of a uniformly random word over s_0..s_n of length <= max_word.
AffineWeylElement random_affine(const RootSystem& system, Rng& rng, int max_word);

/// Dominant weight with <zeta, alpha_i> drawn from [min_pair, max_pair] for
/// i = 0..n and delta-coefficient from [-3, 3].
AffineWeight random_dominant(const RootSystem& system, Rng& rng, Int min_pair, Int max_pair);

struct ElementShape {
  Int min_pair = 0;
  Int max_pair = 3;
  int max_v = 3;
  int max_w = 3;
};

/// X^{v zeta_plus} w with zeta_plus from random_dominant and v, w random.
SemigroupElement random_element(const RootSystem& system, Rng& rng, const ElementShape& shape);

/// A root alpha > 0 with x^-1 alpha < 0 (or > 0 when upward), drawn from a
/// small window around the origin; nullopt if none was hit.
std::optional<DoubleAffineRoot> random_reflection_root(const SemigroupElement& x, Rng& rng,
                                                       bool upward);

}  // namespace daff::sampling
