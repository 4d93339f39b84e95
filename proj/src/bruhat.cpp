#include "daff/bruhat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "daff/error.hpp"
#include "int_math.hpp"

namespace daff {

using detail::ceil_div;
using detail::floor_div;

namespace {

void require_positive_level(const SemigroupElement& x) {
  if (x.level() <= 0)
    throw DomainError("Bruhat operations need an element of positive level");
}

// Point tests for a fixed x, sharing one inverse.
class Region {
 public:
  explicit Region(const SemigroupElement& x) : x_(x), inv_(x.inverse()) {}

  bool in_gamma(const DoubleAffineRoot& a) const {
    return a.is_positive() && !inv_.apply(a).is_positive();
  }
  bool in_gamma(const FiniteRoot& nu, Int r, Int j) const { return in_gamma({nu, r, j}); }
  bool in_complement(const DoubleAffineRoot& a) const {
    return a.is_positive() && inv_.apply(a).is_positive();
  }
  bool in_complement(const FiniteRoot& nu, Int r, Int j) const {
    return in_complement({nu, r, j});
  }

  /// -<mu', nu>, the boundary height at r = 0.
  Int b(const FiniteRoot& nu) const { return -x_.zeta().pair({nu, 0}); }
  Int level() const { return x_.level(); }
  const ExtendedElement& inverse() const { return inv_; }

 private:
  const SemigroupElement& x_;
  ExtendedElement inv_;
};

class Budget {
 public:
  explicit Budget(Int cap) : cap_(cap) {}
  void spend(const char* what) {
    if (++used_ > cap_)
      throw InternalError(std::string(what) + " exceeded the safety cap of " +
                          std::to_string(cap_) + " points");
  }

 private:
  Int cap_;
  Int used_ = 0;
};

constexpr int kRayScanLimit = 16;

// The `count` members with largest r on the line j = line(r), scanning down
// from `start`.
template <class Line, class Member>
void top_of_ray(const FiniteRoot& nu, Int start, Line line, Member member, int count,
                std::set<DoubleAffineRoot>& out) {
  int found = 0;
  for (int step = 0; step < kRayScanLimit && found < count; ++step) {
    Int r = start - step;
    Int j = line(r);
    if (member(nu, r, j)) {
      out.insert({nu, r, j});
      ++found;
    } else if (found > 0) {
      break;
    }
  }
  if (found == 0) throw InternalError("ray scan found no member near its expected end");
}

template <class Line, class Member>
void bottom_of_ray(const FiniteRoot& nu, Int start, Line line, Member member, int count,
                   std::set<DoubleAffineRoot>& out) {
  int found = 0;
  for (int step = 0; step < kRayScanLimit && found < count; ++step) {
    Int r = start + step;
    Int j = line(r);
    if (member(nu, r, j)) {
      out.insert({nu, r, j});
      ++found;
    } else if (found > 0) {
      break;
    }
  }
  if (found == 0) throw InternalError("ray scan found no member near its expected end");
}

FiniteRoot combine(const FiniteRoot& gamma, Int c, const FiniteRoot& nu) {
  // -gamma + c nu
  IntVec v = gamma.coords();
  const IntVec& n = nu.coords();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = -v[k] + c * n[k];
  return FiniteRoot::from_coords(gamma.system(), v);
}

bool corner_in(const Region& region, const DoubleAffineRoot& alpha, Budget* budget) {
  const FiniteRoot& nu = alpha.nu;
  const Int l = region.level();
  const Int b = region.b(nu);
  const Int r = alpha.r;
  const Int j = alpha.j;
  for (Int q = 0; q <= 2 * j; ++q) {
    Int p_lo = ceil_div(2 * j - q - b + 2 * l * r, l);
    Int p_hi = floor_div(b - q, l);
    for (Int p = p_lo; p <= p_hi; ++p) {
      if (budget) budget->spend("corner test");
      if (p == r && q == j) continue;
      if (region.in_gamma(nu, p, q) && region.in_gamma(nu, 2 * r - p, 2 * j - q)) return false;
    }
  }
  return true;
}

std::vector<DoubleAffineRoot> corners_in(const Region& region, const FiniteRoot& nu) {
  const Int l = region.level();
  const Int b = region.b(nu);
  auto member = [&](const FiniteRoot& n, Int r, Int j) { return region.in_gamma(n, r, j); };
  auto boundary = [&](Int r) { return b - l * r; };
  std::set<DoubleAffineRoot> candidates;
  for (Int r = 0; r <= floor_div(b, l); ++r)
    if (region.in_gamma(nu, r, 0)) candidates.insert({nu, r, 0});
  top_of_ray(nu, floor_div(b - 1, l) + 1, [](Int) { return Int{1}; }, member, 2, candidates);
  top_of_ray(nu, floor_div(b, l) + 1, boundary, member, 2, candidates);
  top_of_ray(nu, floor_div(b - 1, l) + 1, [&](Int r) { return boundary(r) - 1; }, member, 2,
             candidates);
  std::vector<DoubleAffineRoot> out;
  for (const auto& a : candidates)
    if (corner_in(region, a, nullptr)) out.push_back(a);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string LowerGraph::shape_name() const {
  static const char* lower_names[] = {"L1", "L1*", "L2", "L3", "L4", "L4*"};
  static const char* upper_names[] = {"U1", "U2", "U3", "U4"};
  return std::string(lower_names[static_cast<int>(lower)]) + "+" +
         upper_names[static_cast<int>(upper)];
}

bool gamma_contains(const SemigroupElement& x, const FiniteRoot& nu, Int r, Int j) {
  require_positive_level(x);
  require_same_system(&x.system(), nu.system_ptr());
  return Region(x).in_gamma(nu, r, j);
}

LowerGraph gamma_shape(const SemigroupElement& x, const FiniteRoot& nu) {
  require_positive_level(x);
  require_same_system(&x.system(), nu.system_ptr());
  const RootSystem& sys = x.system();
  Region region(x);
  LowerGraph g;
  g.nu = nu;
  g.level = x.level();
  g.b = region.b(nu);
  const Int l = g.level;
  const Int b = g.b;
  g.r_lambda = -RootSystem::pair_weight_vector(sys.weight_coords(nu.id()), x.wtilde().lambda());
  g.endpoint_included = !sys.is_positive(x.wtilde().finite_part().apply_inverse(nu.id()));
  if (b % l == 0) g.intersection_r = b / l;

  Int lo = 0, hi = -1;
  bool any = false;
  for (Int r = 0; r <= floor_div(b, l); ++r) {
    if (!region.in_gamma(nu, r, 0)) continue;
    if (!any) lo = r;
    hi = r;
    any = true;
  }
  if (any) g.lower_edge = {lo, hi};

  std::set<DoubleAffineRoot> top;
  top_of_ray(
      nu, std::min(floor_div(b, l), g.r_lambda) + 1, [&](Int r) { return b - l * r; },
      [&](const FiniteRoot& n, Int r, Int j) { return region.in_gamma(n, r, j); }, 1, top);
  g.upper_r_max = top.begin()->r;

  const bool left = region.in_gamma(nu, 0, 0);
  const bool right = g.intersection_r && region.in_gamma(nu, *g.intersection_r, 0);
  const bool interior = ceil_div(b, l) - 1 >= 1;
  using L = LowerGraph::Lower;
  using U = LowerGraph::Upper;
  if (left && right)
    g.lower = (interior && *g.intersection_r > 0) ? L::kL4 : L::kL4Star;
  else if (left)
    g.lower = L::kL2;
  else if (right)
    g.lower = L::kL3;
  else
    g.lower = interior ? L::kL1 : L::kL1Star;

  if (g.r_lambda * l < b)
    g.upper = g.endpoint_included ? U::kU2 : U::kU1;
  else
    g.upper = right ? U::kU4 : U::kU3;
  return g;
}

DoubleAffineRoot rotate180(const DoubleAffineRoot& beta, const DoubleAffineRoot& alpha) {
  if (!(beta.nu == alpha.nu)) throw DomainError("rotation needs equal finite parts");
  return {beta.nu, 2 * alpha.r - beta.r, 2 * alpha.j - beta.j};
}

bool is_corner(const SemigroupElement& x, const DoubleAffineRoot& alpha) {
  require_positive_level(x);
  require_same_system(&x.system(), alpha.nu.system_ptr());
  Region region(x);
  if (!region.in_gamma(alpha)) throw DomainError("root is not a point of its lower graph");
  return corner_in(region, alpha, nullptr);
}

std::vector<DoubleAffineRoot> corners(const SemigroupElement& x, const FiniteRoot& nu) {
  require_positive_level(x);
  require_same_system(&x.system(), nu.system_ptr());
  return corners_in(Region(x), nu);
}

std::vector<DoubleAffineRoot> length_diff_set(const SemigroupElement& x,
                                              const DoubleAffineRoot& alpha,
                                              const BruhatOptions& options) {
  require_positive_level(x);
  require_same_system(&x.system(), alpha.nu.system_ptr());
  Region region(x);
  if (!region.in_gamma(alpha)) throw DomainError("not a downward reflection");
  const RootSystem& sys = x.system();
  const Int l = x.level();
  const Int r = alpha.r;
  const Int j = alpha.j;
  Budget budget(options.cap);
  std::vector<DoubleAffineRoot> out;
  for (int id = 0; id < sys.num_roots(); ++id) {
    FiniteRoot gamma(&sys, id);
    Int c = sys.pairing(alpha.nu.id(), id);
    if (c == 0) continue;
    FiniteRoot partner = combine(gamma, c, alpha.nu);
    Int bg = region.b(gamma);
    Int bp = region.b(partner);
    // beta and -s_alpha(beta) both lie in their lower graphs.
    for (Int p = ceil_div(l * c * r - bp, l); p <= floor_div(bg, l); ++p) {
      Int q_lo = std::max<Int>(0, c * j - bp + l * (c * r - p));
      Int q_hi = std::min(bg - l * p, c * j);
      for (Int q = q_lo; q <= q_hi; ++q) {
        budget.spend("length difference set");
        DoubleAffineRoot beta{gamma, p, q};
        if (!region.in_gamma(beta)) continue;
        DoubleAffineRoot reflected = daff_reflect_root(alpha, beta);
        if (reflected.is_positive()) continue;
        if (!region.inverse().apply(reflected).is_positive()) continue;
        out.push_back(beta);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DoubleAffineRoot> cover_diff_set(const SemigroupElement& x,
                                             const DoubleAffineRoot& beta,
                                             const BruhatOptions& options) {
  require_positive_level(x);
  require_same_system(&x.system(), beta.nu.system_ptr());
  Region region(x);
  if (!region.in_complement(beta)) throw DomainError("not an upward reflection");
  const RootSystem& sys = x.system();
  const Int l = x.level();
  const Int r = beta.r;
  const Int j = beta.j;
  Budget budget(options.cap);
  std::vector<DoubleAffineRoot> out;
  for (int id = 0; id < sys.num_roots(); ++id) {
    FiniteRoot tau(&sys, id);
    Int c = sys.pairing(beta.nu.id(), id);
    if (c == 0) continue;
    FiniteRoot partner = combine(tau, c, beta.nu);
    Int bt = region.b(tau);
    Int bp = region.b(partner);
    // gamma and -s_beta(gamma) both lie above their boundary lines.
    for (Int p = ceil_div(bt - c * j, l); p <= floor_div(c * j - bp + l * c * r, l); ++p) {
      Int q_lo = std::max<Int>(0, bt - l * p);
      Int q_hi = std::min(c * j, c * j - bp + l * (c * r - p));
      for (Int q = q_lo; q <= q_hi; ++q) {
        budget.spend("cover difference set");
        DoubleAffineRoot gamma{tau, p, q};
        if (!region.in_complement(gamma)) continue;
        DoubleAffineRoot reflected = daff_reflect_root(beta, gamma);
        if (reflected.is_positive()) continue;
        if (region.inverse().apply(reflected).is_positive()) continue;
        out.push_back(gamma);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cocover(const SemigroupElement& x, const DoubleAffineRoot& alpha) {
  require_positive_level(x);
  require_same_system(&x.system(), alpha.nu.system_ptr());
  if (!Region(x).in_gamma(alpha)) throw DomainError("not a downward reflection");
  return daff_length(x) - daff_length(apply_reflection_left(alpha, x)) == 1;
}

bool is_cover(const SemigroupElement& x, const DoubleAffineRoot& beta) {
  require_positive_level(x);
  require_same_system(&x.system(), beta.nu.system_ptr());
  if (!Region(x).in_complement(beta)) throw DomainError("not an upward reflection");
  return daff_length(apply_reflection_left(beta, x)) - daff_length(x) == 1;
}

std::optional<CocoverDescriptor> classify_root(const Decomposition& d,
                                               const DoubleAffineRoot& alpha) {
  if (!d.regular) throw HypothesisError(HypothesisError::Bound::kRegular,
                                        "classification needs a regular dominant weight");
  // alpha = -v(a) + j pi
  AffineRoot a = d.v.inverse().apply(-alpha.affine_part());
  const Int j = alpha.j;
  const Int k = d.zeta_plus.pair(a);
  const Int two_ht = pairing_2rho(a);
  AffineWeylElement s = affine_reflection(a);
  const Int lv = aff_length(d.v);
  const Int lvs = aff_length(d.v * s);
  AffineWeylElement u = d.w.inverse() * d.v;
  const Int lu = aff_length(u);
  const Int lus = aff_length(u * s);
  if (j == 0 && lv == lvs + 1) return CocoverDescriptor{1, a, j};
  if (j == 1 && lv == lvs + 1 - two_ht) return CocoverDescriptor{2, a, j};
  if (j == k && lus == lu + 1) return CocoverDescriptor{3, a, j};
  if (j == k - 1 && lus == lu + 1 - two_ht) return CocoverDescriptor{4, a, j};
  return std::nullopt;
}

bool is_deep_dominant(const SemigroupElement& x) {
  if (x.level() <= 0) return false;
  Decomposition d = decompose(x);
  if (!d.regular) return false;
  for (int i = 0; i <= x.system().rank(); ++i)
    if (d.zeta_plus.pair_simple(i) <= 2) return false;
  return true;
}

namespace {

// The four families, each read off a quantum Bruhat graph neighbourhood.
std::vector<Cocover> classification_candidates(const SemigroupElement& x, const Decomposition& d) {
  std::vector<Cocover> out;
  auto add = [&](int case_id, const AffineRoot& a, Int j) {
    DoubleAffineRoot alpha = DoubleAffineRoot::of(-d.v.apply(a), j);
    if (!alpha.is_positive()) return;
    out.push_back({alpha, apply_reflection_left(alpha, x), CocoverDescriptor{case_id, a, j}});
  };
  for (const QbgEdge& e : qbg_edges_into(d.v))
    add(e.kind == QbgKind::kBruhat ? 1 : 2, e.label, e.kind == QbgKind::kBruhat ? 0 : 1);
  AffineWeylElement u = d.w.inverse() * d.v;
  for (const QbgEdge& e : qbg_edges_from(u)) {
    Int k = d.zeta_plus.pair(e.label);
    add(e.kind == QbgKind::kBruhat ? 3 : 4, e.label, e.kind == QbgKind::kBruhat ? k : k - 1);
  }
  std::sort(out.begin(), out.end(),
            [](const Cocover& a, const Cocover& b) { return a.alpha < b.alpha; });
  return out;
}

std::vector<Cocover> corner_cocovers(const SemigroupElement& x) {
  const RootSystem& sys = x.system();
  Region region(x);
  std::optional<Decomposition> d;
  Decomposition dec = decompose(x);
  if (dec.regular) d = std::move(dec);
  const Int lx = daff_length(x);
  std::vector<Cocover> out;
  for (int id = 0; id < sys.num_roots(); ++id) {
    for (const DoubleAffineRoot& alpha : corners_in(region, FiniteRoot(&sys, id))) {
      SemigroupElement y = apply_reflection_left(alpha, x);
      if (lx - daff_length(y) != 1) continue;
      out.push_back({alpha, y, d ? classify_root(*d, alpha) : std::nullopt});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Cocover& a, const Cocover& b) { return a.alpha < b.alpha; });
  return out;
}

}  // namespace

std::vector<Cocover> cocovers(const SemigroupElement& x, CocoverStrategy strategy) {
  require_positive_level(x);
  if (strategy == CocoverStrategy::kAuto)
    strategy = is_deep_dominant(x) ? CocoverStrategy::kClassification : CocoverStrategy::kCorners;
  if (strategy == CocoverStrategy::kCorners) return corner_cocovers(x);
  if (!is_deep_dominant(x))
    throw HypothesisError(HypothesisError::Bound::kDominantPairing,
                          "classification needs a regular weight with <zeta, alpha_i> > 2");
  return classification_candidates(x, decompose(x));
}

std::vector<Cocover> classify_cocovers_qbg(const SemigroupElement& x, Int M) {
  require_positive_level(x);
  Decomposition d = decompose(x);
  using B = HypothesisError::Bound;
  if (!d.regular) throw HypothesisError(B::kRegular, "dominant weight is not regular");
  for (int i = 0; i <= x.system().rank(); ++i)
    if (d.zeta_plus.pair_simple(i) < 2 * (M + 1))
      throw HypothesisError(B::kDominantPairing, "<zeta, alpha_" + std::to_string(i) +
                                                     "> is below 2(M + 1)");
  if (aff_length(d.w) > M) throw HypothesisError(B::kAffineLength, "l(w) exceeds M");
  std::vector<Cocover> out;
  for (Cocover& c : classification_candidates(x, d)) {
    AffineWeylElement moved = affine_reflection(d.v.apply(c.descriptor->alpha_tilde)) * d.w;
    if (aff_length(moved) <= M) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cover> covers(const SemigroupElement& x, const BruhatOptions& options) {
  require_positive_level(x);
  const RootSystem& sys = x.system();
  Region region(x);
  const Int l = x.level();
  const Int lx = daff_length(x);
  Budget budget(options.cap);
  auto member = [&](const FiniteRoot& n, Int r, Int j) { return region.in_complement(n, r, j); };
  std::vector<Cover> out;
  for (int id = 0; id < sys.num_roots(); ++id) {
    FiniteRoot nu(&sys, id);
    const Int b = region.b(nu);
    auto boundary = [&](Int r) { return b - l * r; };
    std::set<DoubleAffineRoot> candidates;
    bottom_of_ray(nu, std::max<Int>(0, ceil_div(b, l)) - 1, [](Int) { return Int{0}; }, member,
                  2, candidates);
    bottom_of_ray(nu, ceil_div(b - 1, l) - 1, [](Int) { return Int{1}; }, member, 2, candidates);
    const Int r_lambda =
        -RootSystem::pair_weight_vector(sys.weight_coords(id), x.wtilde().lambda());
    for (Int r = r_lambda; r <= floor_div(b, l); ++r) {
      budget.spend("cover candidates");
      if (member(nu, r, boundary(r))) candidates.insert({nu, r, boundary(r)});
    }
    top_of_ray(nu, floor_div(b + 1, l) + 1, [&](Int r) { return boundary(r) + 1; }, member, 2,
               candidates);
    for (const DoubleAffineRoot& beta : candidates) {
      budget.spend("cover candidates");
      SemigroupElement y = apply_reflection_left(beta, x);
      if (daff_length(y) - lx == 1) out.push_back({beta, std::move(y)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.beta < b.beta; });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Descent {
  std::vector<SemigroupElement> nodes;
  std::vector<Int> lengths;
  std::vector<std::vector<std::pair<std::size_t, DoubleAffineRoot>>> children;
  std::vector<bool> reaches;
};

// All elements below x down to length l_min that lie above y.
Descent descend(const SemigroupElement& y, const SemigroupElement& x, Int cap) {
  Descent out;
  std::map<IntVec, std::size_t> index;
  const Int ly = daff_length(y);
  const Int lx = daff_length(x);
  out.nodes.push_back(x);
  out.lengths.push_back(lx);
  out.children.emplace_back();
  index.emplace(x.key(), 0);
  std::vector<std::size_t> frontier{0};
  for (Int len = lx; len > ly; --len) {
    std::vector<std::size_t> next;
    for (std::size_t n : frontier) {
      for (Cocover& c : cocovers(out.nodes[n])) {
        auto [it, inserted] = index.emplace(c.y.key(), out.nodes.size());
        if (inserted) {
          if (static_cast<Int>(out.nodes.size()) >= cap)
            throw InternalError("interval enumeration exceeded the safety cap");
          out.nodes.push_back(std::move(c.y));
          out.lengths.push_back(len - 1);
          out.children.emplace_back();
          next.push_back(it->second);
        }
        out.children[n].push_back({it->second, c.alpha});
      }
    }
    frontier = std::move(next);
  }
  // Nodes were appended in decreasing length, so a reverse sweep sees
  // children before parents.
  out.reaches.assign(out.nodes.size(), false);
  const IntVec target = y.key();
  for (std::size_t k = out.nodes.size(); k-- > 0;) {
    if (out.lengths[k] == ly) {
      out.reaches[k] = out.nodes[k].key() == target;
      continue;
    }
    for (const auto& [child, alpha] : out.children[k])
      if (out.reaches[child]) out.reaches[k] = true;
  }
  return out;
}

bool comparable_shape(const SemigroupElement& y, const SemigroupElement& x) {
  require_positive_level(x);
  require_positive_level(y);
  require_same_system(&x.system(), &y.system());
  return x.level() == y.level() && daff_length(y) <= daff_length(x);
}

}  // namespace

bool is_leq(const SemigroupElement& y, const SemigroupElement& x) {
  if (!comparable_shape(y, x)) return false;
  if (daff_length(y) == daff_length(x)) return y == x;
  return descend(y, x, BruhatOptions{}.cap).reaches[0];
}

Interval interval(const SemigroupElement& y, const SemigroupElement& x,
                  const BruhatOptions& options) {
  Interval out;
  if (!comparable_shape(y, x)) return out;
  Descent d = descend(y, x, options.cap);
  if (!d.reaches[0]) return out;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < d.nodes.size(); ++k)
    if (d.reaches[k]) kept.push_back(k);
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    if (d.lengths[a] != d.lengths[b]) return d.lengths[a] < d.lengths[b];
    return d.nodes[a].key() < d.nodes[b].key();
  });
  std::vector<std::size_t> position(d.nodes.size(), 0);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    position[kept[k]] = k;
    out.elements.push_back(d.nodes[kept[k]]);
    out.lengths.push_back(d.lengths[kept[k]]);
  }
  for (std::size_t k : kept)
    for (const auto& [child, alpha] : d.children[k])
      if (d.reaches[child]) out.edges.push_back({position[k], position[child], alpha});
  std::sort(out.edges.begin(), out.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
    return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower);
  });
  return out;
}

}  // namespace daff
