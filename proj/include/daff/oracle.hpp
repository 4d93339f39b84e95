#pragma once

#include <optional>
#include <vector>

#include "daff/bruhat.hpp"

// Brute-force reference implementations for cross-checking. They evaluate
// definitions directly inside explicit windows and are deliberately slow.
namespace daff::oracle {

struct ScanWindow {
  Int r_min = -10;
  Int r_max = 10;
  Int j_min = 0;
  Int j_max = 10;
  Int cap = 10'000'000;
};

/// Shortest word over s_0..s_n equal to w, or nullopt if longer than max_len.
std::optional<Int> aff_length_bfs(const AffineWeylElement& w, int max_len);

/// Positive affine roots nu + r delta, r in [r_min, r_max], with w(a) < 0.
std::vector<AffineRoot> inversions_scan(const AffineWeylElement& w, Int r_min, Int r_max);

/// Lower-graph membership from the closed-form inequalities (strip, bottom
/// segment, boundary ray with its tiebreaks) rather than from the action.
bool gamma_inequalities(const SemigroupElement& x, const FiniteRoot& nu, Int r, Int j);

/// Points of the lower graph inside the window.
std::vector<DoubleAffineRoot> gamma_scan(const SemigroupElement& x, const FiniteRoot& nu,
                                         const ScanWindow& window);

/// Corners found by testing every window point against every partner in the
/// window. Points within one step in r, or level + 1 steps in j, of the
/// window's edge are skipped since their neighbourhood is cut off.
std::vector<DoubleAffineRoot> corners_scan(const SemigroupElement& x, const FiniteRoot& nu,
                                           const ScanWindow& window);

/// The four defining conditions of the length difference set, in a window.
std::vector<DoubleAffineRoot> length_diff_scan(const SemigroupElement& x,
                                               const DoubleAffineRoot& alpha,
                                               const ScanWindow& window);
std::vector<DoubleAffineRoot> cover_diff_scan(const SemigroupElement& x,
                                              const DoubleAffineRoot& beta,
                                              const ScanWindow& window);

/// Roots alpha in the window with l(s_alpha x) = l(x) - 1 (resp. + 1).
std::vector<DoubleAffineRoot> cocovers_scan(const SemigroupElement& x, const ScanWindow& window);
std::vector<DoubleAffineRoot> covers_scan(const SemigroupElement& x, const ScanWindow& window);

/// Elements on saturated chains from y up to x, found by climbing with covers().
std::vector<SemigroupElement> interval_chains(const SemigroupElement& y,
                                              const SemigroupElement& x, int max_depth);

}  // namespace daff::oracle
