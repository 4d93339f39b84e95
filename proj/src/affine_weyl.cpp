#include "daff/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "daff/error.hpp"
#include "int_math.hpp"

namespace daff {

namespace {

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

AffineRoot simple_affine_root(const RootSystem& system, int i) {
  if (i == 0) return {-FiniteRoot(&system, system.theta()), 1};
  return {FiniteRoot::simple(system, i), 0};
}

Int AffineWeight::pair(const AffineRoot& root) const {
  require_same_system(mu.system_ptr(), root.nu.system_ptr());
  return dot(mu.coords(), root.nu.coords()) + l * root.r;
}

Int AffineWeight::pair_simple(int i) const {
  return pair(simple_affine_root(system(), i));
}

Int AffineWeight::pair_two_rho() const {
  return dot(mu.coords(), system().two_rho()) + 2 * system().coxeter_number() * m;
}

bool AffineWeight::is_dominant() const {
  for (int i = 0; i <= system().rank(); ++i)
    if (pair_simple(i) < 0) return false;
  return true;
}

bool AffineWeight::is_regular_dominant() const {
  for (int i = 0; i <= system().rank(); ++i)
    if (pair_simple(i) <= 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

AffineWeylElement::AffineWeylElement(IntVec lambda, FiniteWeylElement w)
    : lambda_(std::move(lambda)), w_(std::move(w)) {
  if (static_cast<int>(lambda_.size()) != w_.system().rank())
    throw DomainError("translation has wrong number of coordinates");
}

AffineWeylElement AffineWeylElement::identity(const RootSystem& system) {
  return {IntVec(system.rank(), 0), FiniteWeylElement::identity(system)};
}

AffineWeylElement AffineWeylElement::translation(const RootSystem& system, IntVec lambda) {
  return {std::move(lambda), FiniteWeylElement::identity(system)};
}

AffineWeylElement AffineWeylElement::simple_reflection(const RootSystem& system, int i) {
  if (i < 0 || i > system.rank())
    throw DomainError("affine simple reflection index out of range: s" + std::to_string(i));
  return affine_reflection(simple_affine_root(system, i));
}

AffineWeylElement AffineWeylElement::from_word(const RootSystem& system,
                                               const std::vector<int>& word) {
  AffineWeylElement out = identity(system);
  for (int i : word) out = out * simple_reflection(system, i);
  return out;
}

AffineRoot AffineWeylElement::apply(const AffineRoot& root) const {
  // Y^lambda w (nu + r delta) = w(nu) + (r - <lambda, w nu>) delta
  FiniteRoot wnu = w_.apply(root.nu);
  Int shift = dot(system().weight_coords(wnu.id()), lambda_);
  return {wnu, root.r - shift};
}

AffineWeight AffineWeylElement::apply(const AffineWeight& zeta) const {
  require_same_system(w_.system_ptr(), zeta.mu.system_ptr());
  const RootSystem& sys = system();
  IntVec wmu = w_.apply_weight_vector(zeta.mu.coords());
  IntVec lambda_w = sys.root_vector_to_weight(lambda_);
  Int wmu_lambda = dot(wmu, lambda_);
  Int lambda_sq = dot(lambda_w, lambda_);
  // <lambda, lambda> is even on Q.
  IntVec mu(wmu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) mu[k] = wmu[k] + zeta.l * lambda_w[k];
  return {FiniteWeight(&sys, std::move(mu)),
          zeta.m - wmu_lambda - zeta.l * (lambda_sq / 2), zeta.l};
}

AffineWeylElement AffineWeylElement::inverse() const {
  FiniteWeylElement winv = w_.inverse();
  IntVec lam = winv.apply_root_vector(lambda_);
  for (auto& c : lam) c = -c;
  return {std::move(lam), std::move(winv)};
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
  IntVec lam = a.w_.apply_root_vector(b.lambda_);
  for (std::size_t k = 0; k < lam.size(); ++k) lam[k] += a.lambda_[k];
  return {std::move(lam), a.w_ * b.w_};
}

bool AffineWeylElement::is_identity() const {
  return w_.is_identity() &&
         std::all_of(lambda_.begin(), lambda_.end(), [](Int c) { return c == 0; });
}

std::vector<int> AffineWeylElement::reduced_word() const {
  const RootSystem& sys = system();
  std::vector<int> word;
  AffineWeylElement cur = *this;
  while (!cur.is_identity()) {
    AffineWeylElement inv = cur.inverse();
    for (int i = 0; i <= sys.rank(); ++i) {
      if (!inv.apply(simple_affine_root(sys, i)).is_positive()) {
        word.push_back(i);
        cur = simple_reflection(sys, i) * cur;
        break;
      }
    }
  }
  return word;
}

IntVec AffineWeylElement::key() const {
  IntVec k = lambda_;
  k.insert(k.end(), w_.matrix().begin(), w_.matrix().end());
  return k;
}

// ---------------------------------------------------------------------------

AffineRoot aff_act_on_affine_root(const AffineWeylElement& w, const AffineRoot& root) {
  require_same_system(&w.system(), root.nu.system_ptr());
  return w.apply(root);
}

AffineWeight aff_act_on_weight(const AffineWeylElement& w, const AffineWeight& zeta) {
  return w.apply(zeta);
}

std::vector<InversionRun> inversion_runs(const AffineWeylElement& w) {
  const RootSystem& sys = w.system();
  std::vector<InversionRun> runs;
  for (int id = 0; id < sys.num_roots(); ++id) {
    // w(nu + r delta) = w nu + (r - k) delta is negative iff r < k, or r = k
    // with w nu < 0.
    int wnu = w.finite_part().apply(id);
    Int k = dot(sys.weight_coords(wnu), w.lambda());
    Int r_min = sys.is_positive(id) ? 0 : 1;
    Int r_max = sys.is_positive(wnu) ? k - 1 : k;
    if (r_max >= r_min) runs.push_back({FiniteRoot(&sys, id), r_min, r_max});
  }
  return runs;
}

std::vector<AffineRoot> inversions(const AffineWeylElement& w) {
  std::vector<AffineRoot> out;
  for (const auto& run : inversion_runs(w))
    for (Int r = run.r_min; r <= run.r_max; ++r) out.push_back({run.nu, r});
  std::sort(out.begin(), out.end());
  return out;
}

Int aff_length(const AffineWeylElement& w) {
  Int total = 0;
  for (const auto& run : inversion_runs(w)) total += run.size();
  return total;
}

Int inversion_overlap(const AffineWeylElement& x, const AffineWeylElement& y) {
  std::map<int, std::pair<Int, Int>> ys;
  for (const auto& run : inversion_runs(y)) ys[run.nu.id()] = {run.r_min, run.r_max};
  Int total = 0;
  for (const auto& run : inversion_runs(x)) {
    auto it = ys.find(run.nu.id());
    if (it == ys.end()) continue;
    Int lo = std::max(run.r_min, it->second.first);
    Int hi = std::min(run.r_max, it->second.second);
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

bool aff_length_product_identity_check(const AffineWeylElement& x,
                                       const AffineWeylElement& y) {
  return aff_length(x * y) ==
         aff_length(x) + aff_length(y) - 2 * inversion_overlap(x, y.inverse());
}

Int pairing_2rho(const AffineRoot& root) { return 2 * root.height(); }

AffineWeylElement affine_reflection(const AffineRoot& root) {
  // s_{nu + r delta} = Y^{-r nu} s_nu
  IntVec lam = root.nu.coords();
  for (auto& c : lam) c *= -root.r;
  return {std::move(lam), FiniteWeylElement::reflection(root.nu)};
}

bool in_tits_cone(const AffineWeight& zeta) {
  return zeta.l > 0 || (zeta.l == 0 && zeta.mu.is_zero());
}

Dominantization dominantize(const AffineWeight& zeta) {
  const RootSystem& sys = zeta.system();
  if (!in_tits_cone(zeta))
    throw DomainError("weight lies outside the Tits cone");
  AffineWeylElement v = AffineWeylElement::identity(sys);
  if (zeta.l == 0) return {zeta, v};

  // Each step adds one to l(v); l(v) counts the positive affine roots on
  // which zeta is negative, at most |<mu, nu>| / l + 1 per finite root.
  Int cap = 1;
  for (int id = 0; id < sys.num_roots(); ++id) {
    Int p = dot(zeta.mu.coords(), sys.coords(id));
    cap += (p < 0 ? -p : p) / zeta.l + 1;
  }
  AffineWeight cur = zeta;
  for (Int step = 0;; ++step) {
    int neg = -1;
    for (int i = 0; i <= sys.rank(); ++i) {
      if (cur.pair_simple(i) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    if (step >= cap) throw InternalError("dominantize exceeded its iteration cap");
    Int p = cur.pair_simple(neg);
    cur -= p * AffineWeight::of_root(simple_affine_root(sys, neg));
    v = v * AffineWeylElement::simple_reflection(sys, neg);
  }
  return {cur, v};
}

std::optional<QbgEdge> qbg_edge(const AffineWeylElement& target, const AffineRoot& root) {
  if (!root.is_positive()) throw DomainError("QBG edge label must be a positive affine root");
  AffineWeylElement source = target * affine_reflection(root);
  Int lt = aff_length(target);
  Int ls = aff_length(source);
  if (lt == ls + 1) return QbgEdge{source, target, root, QbgKind::kBruhat};
  if (lt == ls - pairing_2rho(root) + 1) return QbgEdge{source, target, root, QbgKind::kQuantum};
  return std::nullopt;
}

std::vector<AffineRoot> quantum_capable_roots(const RootSystem& system) {
  // l(s_{nu + r delta}) <= 2(h - 1) r + N while <a, 2 rho> - 1 grows like
  // 2 h r, so r <= (N + 2h) / 2 bounds every solution.
  const Int n_pos = system.num_positive();
  const Int h = system.coxeter_number();
  const Int r_bound = n_pos + h;
  std::vector<AffineRoot> out;
  for (int id = 0; id < system.num_roots(); ++id) {
    for (Int r = system.is_positive(id) ? 0 : 1; r <= r_bound; ++r) {
      AffineRoot a{FiniteRoot(&system, id), r};
      if (aff_length(affine_reflection(a)) == pairing_2rho(a) - 1) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QbgEdge> qbg_edges_into(const AffineWeylElement& target) {
  std::vector<QbgEdge> out;
  const Int lt = aff_length(target);
  for (const AffineRoot& a : inversions(target)) {
    AffineWeylElement source = target * affine_reflection(a);
    if (aff_length(source) == lt - 1) out.push_back({source, target, a, QbgKind::kBruhat});
  }
  for (const AffineRoot& a : quantum_capable_roots(target.system())) {
    AffineWeylElement source = target * affine_reflection(a);
    if (aff_length(source) == lt + pairing_2rho(a) - 1)
      out.push_back({source, target, a, QbgKind::kQuantum});
  }
  return out;
}

std::vector<QbgEdge> qbg_edges_from(const AffineWeylElement& source) {
  const RootSystem& sys = source.system();
  std::vector<QbgEdge> out;
  const Int ls = aff_length(source);
  // Bruhat: l(s_a) <= 2 l(source) + 1 and l(s_{nu + r delta}) >= 2(h - 1) r - N.
  const Int r_bound =
      (2 * ls + 1 + sys.num_positive()) / (2 * (sys.coxeter_number() - 1)) + 1;
  for (int id = 0; id < sys.num_roots(); ++id) {
    for (Int r = sys.is_positive(id) ? 0 : 1; r <= r_bound; ++r) {
      AffineRoot a{FiniteRoot(&sys, id), r};
      AffineWeylElement target = source * affine_reflection(a);
      if (aff_length(target) == ls + 1) out.push_back({source, target, a, QbgKind::kBruhat});
    }
  }
  for (const AffineRoot& a : quantum_capable_roots(sys)) {
    AffineWeylElement target = source * affine_reflection(a);
    if (aff_length(target) == ls + 1 - pairing_2rho(a))
      out.push_back({source, target, a, QbgKind::kQuantum});
  }
  return out;
}

std::vector<AffineWeylElement> affine_ball(const RootSystem& system, int radius) {
  std::map<IntVec, AffineWeylElement> seen;
  std::deque<AffineWeylElement> queue;
  AffineWeylElement id = AffineWeylElement::identity(system);
  seen.emplace(id.key(), id);
  queue.push_back(id);
  while (!queue.empty()) {
    AffineWeylElement cur = queue.front();
    queue.pop_front();
    if (aff_length(cur) >= radius) continue;
    for (int i = 0; i <= system.rank(); ++i) {
      AffineWeylElement next = cur * AffineWeylElement::simple_reflection(system, i);
      if (aff_length(next) > radius) continue;
      if (seen.emplace(next.key(), next).second) queue.push_back(next);
    }
  }
  std::vector<std::pair<std::pair<Int, std::vector<int>>, AffineWeylElement>> keyed;
  for (auto& [k, e] : seen) keyed.push_back({{aff_length(e), e.reduced_word()}, e});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AffineWeylElement> out;
  for (auto& [k, e] : keyed) out.push_back(e);
  return out;
}

std::vector<QbgEdge> local_qbg(const RootSystem& system, int radius) {
  std::vector<AffineWeylElement> ball = affine_ball(system, radius);
  std::map<IntVec, bool> in_ball;
  for (const auto& e : ball) in_ball[e.key()] = true;
  std::vector<QbgEdge> out;
  for (const auto& target : ball)
    for (auto& edge : qbg_edges_into(target))
      if (in_ball.count(edge.source.key())) out.push_back(std::move(edge));
  return out;
}

}  // namespace daff
