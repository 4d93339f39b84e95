#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "daff/root_system.hpp"

namespace daff {

/// Affine root nu + r delta.
struct AffineRoot {
  FiniteRoot nu;
  Int r = 0;

  const RootSystem& system() const { return nu.system(); }
  bool is_positive() const {
    return nu.is_positive() ? r >= 0 : r > 0;
  }
  /// ht(nu) + r h; positive exactly for positive roots.
  Int height() const {
    return nu.height() + r * nu.system().coxeter_number();
  }
  AffineRoot operator-() const { return {-nu, -r}; }
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot& a, const AffineRoot& b) {
    if (auto c = a.nu <=> b.nu; c != 0) return c;
    return a.r <=> b.r;
  }
};

/// alpha_i as an affine root: alpha_0 = delta - theta, alpha_i for i >= 1.
AffineRoot simple_affine_root(const RootSystem& system, int i);

/*
  Element mu + m delta + l Lambda_0 of the affine weight lattice X.

  Pairing with affine roots: <mu + m delta + l Lambda_0, nu + r delta> =
  <mu, nu> + l r, i.e. <Lambda_0, delta> = 1 and delta is otherwise
  isotropic.
*/
struct AffineWeight {
  FiniteWeight mu;
  Int m = 0;
  Int l = 0;

  static AffineWeight zero(const RootSystem& system) {
    return {FiniteWeight::zero(system), 0, 0};
  }
  /// An affine root viewed as a level-0 element of X.
  static AffineWeight of_root(const AffineRoot& root) {
    return {FiniteWeight::of_root(root.nu), root.r, 0};
  }

  const RootSystem& system() const { return mu.system(); }
  Int level() const { return l; }
  Int pair(const AffineRoot& root) const;
  /// <zeta, alpha_i> for i in [0, rank].
  Int pair_simple(int i) const;
  /// <zeta, 2 rho> with 2 rho = 2 rho_fin + 2 h Lambda_0.
  Int pair_two_rho() const;
  bool is_dominant() const;
  bool is_regular_dominant() const;

  AffineWeight& operator+=(const AffineWeight& o) {
    mu += o.mu;
    m += o.m;
    l += o.l;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    mu -= o.mu;
    m -= o.m;
    l -= o.l;
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  AffineWeight operator-() const { return {-mu, -m, -l}; }
  friend AffineWeight operator*(Int k, const AffineWeight& a) {
    return {k * a.mu, k * a.m, k * a.l};
  }
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

/// Y^lambda w with lambda in Q (simple-root coordinates) and w in W_fin.
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(IntVec lambda, FiniteWeylElement w);

  static AffineWeylElement identity(const RootSystem& system);
  static AffineWeylElement translation(const RootSystem& system, IntVec lambda);
  /// s_i for i in [0, rank]; s_0 = Y^theta s_theta.
  static AffineWeylElement simple_reflection(const RootSystem& system, int i);
  static AffineWeylElement from_word(const RootSystem& system,
                                     const std::vector<int>& word);

  const RootSystem& system() const { return w_.system(); }
  const IntVec& lambda() const { return lambda_; }
  const FiniteWeylElement& finite_part() const { return w_; }

  AffineRoot apply(const AffineRoot& root) const;
  AffineWeight apply(const AffineWeight& weight) const;

  AffineWeylElement inverse() const;
  friend AffineWeylElement operator*(const AffineWeylElement& a,
                                     const AffineWeylElement& b);
  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.lambda_ == b.lambda_ && a.w_ == b.w_;
  }

  bool is_identity() const;
  /// Lexicographically first reduced word over s_0..s_n.
  std::vector<int> reduced_word() const;
  /// Canonical key for ordered containers.
  IntVec key() const;

 private:
  IntVec lambda_;
  FiniteWeylElement w_;
};

/// Inversions with finite part nu: {nu + r delta : r_min <= r <= r_max}.
struct InversionRun {
  FiniteRoot nu;
  Int r_min;
  Int r_max;
  Int size() const { return r_max - r_min + 1; }
};

enum class QbgKind { kBruhat, kQuantum };

/// Edge source -> target of the quantum Bruhat graph, source = target s_label.
struct QbgEdge {
  AffineWeylElement source;
  AffineWeylElement target;
  AffineRoot label;
  QbgKind kind;
};

AffineRoot aff_act_on_affine_root(const AffineWeylElement& w, const AffineRoot& root);
AffineWeight aff_act_on_weight(const AffineWeylElement& w, const AffineWeight& zeta);

/// Inv(w) = {a > 0 : w(a) < 0}, grouped by finite part (nonempty runs only).
std::vector<InversionRun> inversion_runs(const AffineWeylElement& w);
std::vector<AffineRoot> inversions(const AffineWeylElement& w);
Int aff_length(const AffineWeylElement& w);
/// |Inv(x) cap Inv(y)|
Int inversion_overlap(const AffineWeylElement& x, const AffineWeylElement& y);
bool aff_length_product_identity_check(const AffineWeylElement& x,
                                       const AffineWeylElement& y);

Int pairing_2rho(const AffineRoot& root);
AffineWeylElement affine_reflection(const AffineRoot& root);

/// Tits cone of X: positive level, or level 0 with mu = 0.
bool in_tits_cone(const AffineWeight& zeta);

struct Dominantization {
  AffineWeight dominant;
  AffineWeylElement v;  // minimal length, v(dominant) = zeta
};
Dominantization dominantize(const AffineWeight& zeta);

std::optional<QbgEdge> qbg_edge(const AffineWeylElement& target,
                                const AffineRoot& root);

/// Positive affine roots a with l(s_a) = <a, 2 rho> - 1; the only labels that
/// can carry quantum edges. Finite.
std::vector<AffineRoot> quantum_capable_roots(const RootSystem& system);
/// All QBG edges ending at target.
std::vector<QbgEdge> qbg_edges_into(const AffineWeylElement& target);
/// All QBG edges starting at source.
std::vector<QbgEdge> qbg_edges_from(const AffineWeylElement& source);

/// All elements of length <= radius, sorted by (length, reduced word).
std::vector<AffineWeylElement> affine_ball(const RootSystem& system, int radius);
/// QBG edges with both endpoints in the ball of the given radius.
std::vector<QbgEdge> local_qbg(const RootSystem& system, int radius);

}  // namespace daff
