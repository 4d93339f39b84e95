#include "daff/double_affine.hpp"

#include "daff/error.hpp"
#include "int_math.hpp"

namespace daff {

ExtendedElement::ExtendedElement(AffineWeight zeta, AffineWeylElement wtilde)
    : zeta_(std::move(zeta)), wtilde_(std::move(wtilde)) {
  require_same_system(zeta_.mu.system_ptr(), &wtilde_.system());
}

ExtendedElement ExtendedElement::identity(const RootSystem& system) {
  return {AffineWeight::zero(system), AffineWeylElement::identity(system)};
}

DoubleAffineRoot ExtendedElement::apply(const DoubleAffineRoot& root) const {
  AffineRoot moved = wtilde_.apply(root.affine_part());
  return DoubleAffineRoot::of(moved, root.j - zeta_.pair(moved));
}

ExtendedElement ExtendedElement::inverse() const {
  AffineWeylElement winv = wtilde_.inverse();
  return {-winv.apply(zeta_), winv};
}

ExtendedElement operator*(const ExtendedElement& a, const ExtendedElement& b) {
  return {a.zeta_ + a.wtilde_.apply(b.zeta_), a.wtilde_ * b.wtilde_};
}

IntVec ExtendedElement::key() const {
  IntVec k = zeta_.mu.coords();
  k.push_back(zeta_.m);
  k.push_back(zeta_.l);
  IntVec w = wtilde_.key();
  k.insert(k.end(), w.begin(), w.end());
  return k;
}

SemigroupElement::SemigroupElement(ExtendedElement element) : element_(std::move(element)) {
  if (!in_tits_cone(element_.zeta()))
    throw DomainError("X-weight lies outside the Tits cone");
}

// ---------------------------------------------------------------------------

bool daff_is_positive(const DoubleAffineRoot& root) { return root.is_positive(); }

ExtendedElement daff_reflection(const DoubleAffineRoot& root) {
  AffineRoot a = root.affine_part();
  return {(-root.j) * AffineWeight::of_root(a), affine_reflection(a)};
}

DoubleAffineRoot daff_act_on_root(const ExtendedElement& g, const DoubleAffineRoot& root) {
  require_same_system(&g.system(), root.nu.system_ptr());
  return g.apply(root);
}

DoubleAffineRoot daff_reflect_root(const DoubleAffineRoot& alpha, const DoubleAffineRoot& beta) {
  require_same_system(alpha.nu.system_ptr(), beta.nu.system_ptr());
  Int c = pairing_root_root(alpha.nu, beta.nu);
  if (c == 0) return beta;
  IntVec v = beta.nu.coords();
  const IntVec& a = alpha.nu.coords();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * a[k];
  return {FiniteRoot::from_coords(alpha.system(), v), beta.r - c * alpha.r, beta.j - c * alpha.j};
}

LengthBreakdown daff_length_breakdown(const SemigroupElement& x) {
  const AffineWeight& zeta = x.zeta();
  LengthBreakdown out;
  out.big = dominantize(zeta).dominant.pair_two_rho();
  const Int l = zeta.l;
  for (const InversionRun& run : inversion_runs(x.wtilde().inverse())) {
    // <zeta, nu + r delta> = p + l r
    Int p = zeta.pair({run.nu, 0});
    Int nonpos;
    if (l == 0) {
      nonpos = p <= 0 ? run.size() : 0;
    } else {
      Int hi = std::min(run.r_max, detail::floor_div(-p, l));
      nonpos = hi >= run.r_min ? hi - run.r_min + 1 : 0;
    }
    out.small += nonpos - (run.size() - nonpos);
  }
  return out;
}

Int daff_length(const SemigroupElement& x) { return daff_length_breakdown(x).total(); }

Int daff_length_split(const AffineWeight& zeta_plus, const AffineWeylElement& v,
                      const AffineWeylElement& w) {
  if (!zeta_plus.is_regular_dominant())
    throw DomainError("length splitting needs a regular dominant weight");
  return zeta_plus.pair_two_rho() - aff_length(w.inverse() * v) + aff_length(v);
}

Decomposition decompose(const SemigroupElement& x) {
  if (x.level() <= 0) throw DomainError("decomposition needs an element of positive level");
  Dominantization d = dominantize(x.zeta());
  bool regular = d.dominant.is_regular_dominant();
  return {std::move(d.dominant), std::move(d.v), x.wtilde(), regular};
}

SemigroupElement apply_reflection_left(const DoubleAffineRoot& alpha, const SemigroupElement& x) {
  if (x.level() <= 0) throw DomainError("left reflection needs an element of positive level");
  if (!alpha.is_positive()) throw DomainError("reflection root must be positive");
  ExtendedElement y = daff_reflection(alpha) * x.element();
  if (!in_tits_cone(y.zeta())) throw InternalError("reflected element left the Tits cone");
  return SemigroupElement(std::move(y));
}

Int translation_profile(const AffineWeight& zeta, const AffineWeylElement& v,
                        const AffineRoot& a, Int j) {
  AffineWeight shifted = v.apply(zeta - j * AffineWeight::of_root(a));
  return daff_length(SemigroupElement(shifted, AffineWeylElement::identity(zeta.system())));
}

}  // namespace daff
