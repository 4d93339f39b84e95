#pragma once

#include "daff/affine_weyl.hpp"

namespace daff {

/// Double affine root nu + r delta + j pi. pi is a formal coordinate parallel
/// to delta and contributes nothing to root-root pairings.
struct DoubleAffineRoot {
  FiniteRoot nu;
  Int r = 0;
  Int j = 0;

  static DoubleAffineRoot of(const AffineRoot& a, Int j) { return {a.nu, a.r, j}; }

  const RootSystem& system() const { return nu.system(); }
  AffineRoot affine_part() const { return {nu, r}; }
  bool is_positive() const {
    return affine_part().is_positive() ? j >= 0 : j > 0;
  }
  DoubleAffineRoot operator-() const { return {-nu, -r, -j}; }
  friend bool operator==(const DoubleAffineRoot&, const DoubleAffineRoot&) = default;
  friend auto operator<=>(const DoubleAffineRoot& a, const DoubleAffineRoot& b) {
    if (auto c = a.nu <=> b.nu; c != 0) return c;
    if (auto c = a.r <=> b.r; c != 0) return c;
    return a.j <=> b.j;
  }
};

/// X^zeta w~ in the group X x| W_aff.
class ExtendedElement {
 public:
  ExtendedElement() = default;
  ExtendedElement(AffineWeight zeta, AffineWeylElement wtilde);
  static ExtendedElement identity(const RootSystem& system);

  const RootSystem& system() const { return wtilde_.system(); }
  const AffineWeight& zeta() const { return zeta_; }
  const AffineWeylElement& wtilde() const { return wtilde_; }
  Int level() const { return zeta_.l; }

  DoubleAffineRoot apply(const DoubleAffineRoot& root) const;
  ExtendedElement inverse() const;
  friend ExtendedElement operator*(const ExtendedElement& a, const ExtendedElement& b);
  friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;

  /// Canonical key: weight coordinates, m, l, lambda, finite matrix.
  IntVec key() const;

 private:
  AffineWeight zeta_;
  AffineWeylElement wtilde_;
};

/// Element of the double affine Weyl semigroup: an ExtendedElement whose
/// X-weight lies in the Tits cone (checked on construction).
class SemigroupElement {
 public:
  explicit SemigroupElement(ExtendedElement element);
  SemigroupElement(AffineWeight zeta, AffineWeylElement wtilde)
      : SemigroupElement(ExtendedElement(std::move(zeta), std::move(wtilde))) {}

  const ExtendedElement& element() const { return element_; }
  const RootSystem& system() const { return element_.system(); }
  const AffineWeight& zeta() const { return element_.zeta(); }
  const AffineWeylElement& wtilde() const { return element_.wtilde(); }
  Int level() const { return element_.level(); }
  DoubleAffineRoot apply(const DoubleAffineRoot& root) const { return element_.apply(root); }
  ExtendedElement inverse() const { return element_.inverse(); }
  IntVec key() const { return element_.key(); }

  friend SemigroupElement operator*(const SemigroupElement& a, const SemigroupElement& b) {
    return SemigroupElement(a.element_ * b.element_);
  }
  friend bool operator==(const SemigroupElement&, const SemigroupElement&) = default;

 private:
  ExtendedElement element_;
};

bool daff_is_positive(const DoubleAffineRoot& root);
/// s_{a + j pi} = X^{-j a} s_a.
ExtendedElement daff_reflection(const DoubleAffineRoot& root);
DoubleAffineRoot daff_act_on_root(const ExtendedElement& g, const DoubleAffineRoot& root);
/// s_alpha(beta) = beta - <fin alpha, fin beta> alpha.
DoubleAffineRoot daff_reflect_root(const DoubleAffineRoot& alpha, const DoubleAffineRoot& beta);

struct LengthBreakdown {
  Int big = 0;
  Int small = 0;
  Int total() const { return big + small; }
};
/// l(X^zeta w~) = <zeta_+, 2 rho> + #{a in Inv(w~^-1) : <zeta, a> <= 0}
///                               - #{a in Inv(w~^-1) : <zeta, a> > 0}.
LengthBreakdown daff_length_breakdown(const SemigroupElement& x);
Int daff_length(const SemigroupElement& x);
/// <zeta_+, 2 rho> - l(w~^-1 v~) + l(v~); requires zeta_+ regular dominant.
Int daff_length_split(const AffineWeight& zeta_plus, const AffineWeylElement& v,
                      const AffineWeylElement& w);

/// x = X^{v zeta_plus} w with zeta_plus dominant and v minimal.
struct Decomposition {
  AffineWeight zeta_plus;
  AffineWeylElement v;
  AffineWeylElement w;
  bool regular = false;
};
Decomposition decompose(const SemigroupElement& x);

/// s_alpha x for positive alpha and level(x) > 0.
SemigroupElement apply_reflection_left(const DoubleAffineRoot& alpha, const SemigroupElement& x);

/// f(j) = l(X^{v(zeta - j a)}), the profile whose convexity drives the
/// first classification.
Int translation_profile(const AffineWeight& zeta, const AffineWeylElement& v,
                        const AffineRoot& a, Int j);

}  // namespace daff
