#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daff/double_affine.hpp"

namespace daff {

struct BruhatOptions {
  /// Upper bound on lattice points visited by one enumeration. Reaching it
  /// raises InternalError rather than truncating.
  Int cap = 1'000'000;
};

/*
  Lattice-point picture of {nu + r delta + j pi > 0 : x^-1(...) < 0} for a
  fixed finite root nu, in the (r, j) plane. With x = X^{mu' + m' delta +
  l Lambda_0} Y^lambda w the region is bounded below by j = 0 and above by the
  line j = boundary(r) = b - l r where b = -<mu', nu>.
*/
struct LowerGraph {
  enum class Lower { kL1, kL1Star, kL2, kL3, kL4, kL4Star };
  enum class Upper { kU1, kU2, kU3, kU4 };

  FiniteRoot nu;
  Int b = 0;
  Int level = 0;
  /// -<lambda, nu>: last r allowed on the upper edge (inclusive iff w^-1 nu < 0).
  Int r_lambda = 0;
  bool endpoint_included = false;
  /// Integer r of the intersection of j = 0 with the boundary line, if any.
  std::optional<Int> intersection_r;
  /// Closed r-range of graph points on j = 0.
  std::optional<std::pair<Int, Int>> lower_edge;
  /// Largest r of a graph point on the boundary line.
  Int upper_r_max = 0;
  Lower lower = Lower::kL1Star;
  Upper upper = Upper::kU3;

  Int boundary(Int r) const { return b - level * r; }
  std::string shape_name() const;
};

bool gamma_contains(const SemigroupElement& x, const FiniteRoot& nu, Int r, Int j);
LowerGraph gamma_shape(const SemigroupElement& x, const FiniteRoot& nu);

/// Rotation of beta by 180 degrees about alpha in the (r, j) plane.
DoubleAffineRoot rotate180(const DoubleAffineRoot& beta, const DoubleAffineRoot& alpha);

bool is_corner(const SemigroupElement& x, const DoubleAffineRoot& alpha);
std::vector<DoubleAffineRoot> corners(const SemigroupElement& x, const FiniteRoot& nu);

/// {beta > 0 : x^-1 beta < 0, s_alpha beta < 0, x^-1 s_alpha beta > 0}
std::vector<DoubleAffineRoot> length_diff_set(const SemigroupElement& x,
                                              const DoubleAffineRoot& alpha,
                                              const BruhatOptions& options = {});
/// {gamma > 0 : x^-1 gamma > 0, s_beta gamma < 0, x^-1 s_beta gamma < 0}
std::vector<DoubleAffineRoot> cover_diff_set(const SemigroupElement& x,
                                             const DoubleAffineRoot& beta,
                                             const BruhatOptions& options = {});

/// Whether s_alpha x is covered by x; alpha > 0 with x^-1 alpha < 0.
bool is_cocover(const SemigroupElement& x, const DoubleAffineRoot& alpha);
/// Whether s_beta x covers x; beta > 0 with x^-1 beta > 0.
bool is_cover(const SemigroupElement& x, const DoubleAffineRoot& beta);

/// One family of the regular-dominant classification: alpha = -v a + j pi.
struct CocoverDescriptor {
  int case_id = 0;
  AffineRoot alpha_tilde;
  Int j = 0;
};

/// Which of the four families (alpha_tilde, j) belongs to, if any. Needs a
/// regular decomposition.
std::optional<CocoverDescriptor> classify_root(const Decomposition& d,
                                               const DoubleAffineRoot& alpha);

struct Cocover {
  DoubleAffineRoot alpha;
  SemigroupElement y;
  std::optional<CocoverDescriptor> descriptor;
};

struct Cover {
  DoubleAffineRoot beta;
  SemigroupElement y;
};

enum class CocoverStrategy { kAuto, kClassification, kCorners };

/// True when decompose(x) is regular with <zeta, alpha_i> > 2 for all i.
bool is_deep_dominant(const SemigroupElement& x);

/// All cocovers s_alpha x, sorted by alpha.
std::vector<Cocover> cocovers(const SemigroupElement& x,
                              CocoverStrategy strategy = CocoverStrategy::kAuto);

/// Cocovers from the bounded classification; throws HypothesisError naming
/// the failing bound. Only roots with l(s_{v a} w) <= M are reported.
std::vector<Cocover> classify_cocovers_qbg(const SemigroupElement& x, Int M);

/// All covers s_beta x, sorted by beta.
std::vector<Cover> covers(const SemigroupElement& x, const BruhatOptions& options = {});

struct HasseEdge {
  std::size_t upper;
  std::size_t lower;
  DoubleAffineRoot alpha;  // lower = s_alpha upper
};

struct Interval {
  std::vector<SemigroupElement> elements;  // sorted by (length, key)
  std::vector<Int> lengths;
  std::vector<HasseEdge> edges;
};

bool is_leq(const SemigroupElement& y, const SemigroupElement& x);
Interval interval(const SemigroupElement& y, const SemigroupElement& x,
                  const BruhatOptions& options = {});

}  // namespace daff
