#include "daff/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "daff/error.hpp"

namespace daff::oracle {

namespace {

class Counter {
 public:
  explicit Counter(Int cap) : cap_(cap) {}
  void tick() {
    if (++n_ > cap_) throw InternalError("oracle scan exceeded its cap");
  }

 private:
  Int cap_;
  Int n_ = 0;
};

std::vector<DoubleAffineRoot> window_roots(const RootSystem& sys, const ScanWindow& w,
                                           Counter& counter) {
  std::vector<DoubleAffineRoot> out;
  for (int id = 0; id < sys.num_roots(); ++id)
    for (Int r = w.r_min; r <= w.r_max; ++r)
      for (Int j = w.j_min; j <= w.j_max; ++j) {
        counter.tick();
        DoubleAffineRoot a{FiniteRoot(&sys, id), r, j};
        if (a.is_positive()) out.push_back(a);
      }
  return out;
}

bool negative_under_inverse(const SemigroupElement& x, const DoubleAffineRoot& a) {
  return !x.inverse().apply(a).is_positive();
}

}  // namespace

std::optional<Int> aff_length_bfs(const AffineWeylElement& w, int max_len) {
  const RootSystem& sys = w.system();
  std::map<IntVec, Int> dist;
  std::deque<AffineWeylElement> queue;
  AffineWeylElement id = AffineWeylElement::identity(sys);
  dist[id.key()] = 0;
  queue.push_back(id);
  const IntVec target = w.key();
  while (!queue.empty()) {
    AffineWeylElement cur = queue.front();
    queue.pop_front();
    Int d = dist[cur.key()];
    if (cur.key() == target) return d;
    if (d >= max_len) continue;
    for (int i = 0; i <= sys.rank(); ++i) {
      AffineWeylElement next = cur * AffineWeylElement::simple_reflection(sys, i);
      if (dist.emplace(next.key(), d + 1).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::vector<AffineRoot> inversions_scan(const AffineWeylElement& w, Int r_min, Int r_max) {
  const RootSystem& sys = w.system();
  std::vector<AffineRoot> out;
  for (int id = 0; id < sys.num_roots(); ++id)
    for (Int r = r_min; r <= r_max; ++r) {
      AffineRoot a{FiniteRoot(&sys, id), r};
      if (a.is_positive() && !w.apply(a).is_positive()) out.push_back(a);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool gamma_inequalities(const SemigroupElement& x, const FiniteRoot& nu, Int r, Int j) {
  const RootSystem& sys = x.system();
  const Int l = x.level();
  // Everything in integers: <mu', nu> + l r is the negated boundary height.
  const Int top = -RootSystem::pair_weight_vector(x.zeta().mu.coords(), nu.coords()) - l * r;
  const Int lambda_nu =
      RootSystem::pair_weight_vector(sys.weight_coords(nu.id()), x.wtilde().lambda());
  const bool winv_negative = !sys.is_positive(x.wtilde().finite_part().apply_inverse(nu.id()));
  const bool on_ray = j == top && (r < -lambda_nu || (r == -lambda_nu && winv_negative));
  if (j > 0) return j < top || on_ray;
  if (j < 0) return false;
  const bool bottom = r >= 0 && (r > 0 || nu.is_positive());
  if (!bottom) return false;
  return top > 0 || on_ray;
}

std::vector<DoubleAffineRoot> gamma_scan(const SemigroupElement& x, const FiniteRoot& nu,
                                         const ScanWindow& window) {
  Counter counter(window.cap);
  std::vector<DoubleAffineRoot> out;
  for (Int r = window.r_min; r <= window.r_max; ++r)
    for (Int j = window.j_min; j <= window.j_max; ++j) {
      counter.tick();
      if (gamma_inequalities(x, nu, r, j)) out.push_back({nu, r, j});
    }
  return out;
}

std::vector<DoubleAffineRoot> corners_scan(const SemigroupElement& x, const FiniteRoot& nu,
                                           const ScanWindow& window) {
  std::vector<DoubleAffineRoot> points = gamma_scan(x, nu, window);
  std::map<std::pair<Int, Int>, bool> member;
  for (const auto& p : points) member[{p.r, p.j}] = true;
  Counter counter(window.cap);
  std::vector<DoubleAffineRoot> out;
  // A point near the window's edge has a truncated neighbourhood and may look
  // like a corner. Edge directions of the graph are (1, 0), (0, 1) and
  // (-1, l), so only points whose (1, l + 1) box fits are judged.
  const Int reach = x.level() + 1;
  auto interior = [&](const DoubleAffineRoot& a) {
    return a.r - 1 >= window.r_min && a.r + 1 <= window.r_max && a.j + reach <= window.j_max &&
           (window.j_min <= 0 || a.j - reach >= window.j_min);
  };
  for (const auto& a : points) {
    if (!interior(a)) continue;
    bool corner = true;
    for (const auto& b : points) {
      counter.tick();
      if (b == a) continue;
      if (member.count({2 * a.r - b.r, 2 * a.j - b.j})) {
        corner = false;
        break;
      }
    }
    if (corner) out.push_back(a);
  }
  return out;
}

std::vector<DoubleAffineRoot> length_diff_scan(const SemigroupElement& x,
                                               const DoubleAffineRoot& alpha,
                                               const ScanWindow& window) {
  Counter counter(window.cap);
  std::vector<DoubleAffineRoot> out;
  for (const auto& beta : window_roots(x.system(), window, counter)) {
    if (!negative_under_inverse(x, beta)) continue;
    DoubleAffineRoot s = daff_act_on_root(daff_reflection(alpha), beta);
    if (s.is_positive()) continue;
    if (negative_under_inverse(x, s)) continue;
    out.push_back(beta);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DoubleAffineRoot> cover_diff_scan(const SemigroupElement& x,
                                              const DoubleAffineRoot& beta,
                                              const ScanWindow& window) {
  Counter counter(window.cap);
  std::vector<DoubleAffineRoot> out;
  for (const auto& gamma : window_roots(x.system(), window, counter)) {
    if (negative_under_inverse(x, gamma)) continue;
    DoubleAffineRoot s = daff_act_on_root(daff_reflection(beta), gamma);
    if (s.is_positive()) continue;
    if (!negative_under_inverse(x, s)) continue;
    out.push_back(gamma);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DoubleAffineRoot> cocovers_scan(const SemigroupElement& x, const ScanWindow& window) {
  Counter counter(window.cap);
  const Int lx = daff_length(x);
  std::vector<DoubleAffineRoot> out;
  for (const auto& a : window_roots(x.system(), window, counter)) {
    SemigroupElement y(daff_reflection(a) * x.element());
    if (daff_length(y) == lx - 1 && negative_under_inverse(x, a)) out.push_back(a);
  }
  return out;
}

std::vector<DoubleAffineRoot> covers_scan(const SemigroupElement& x, const ScanWindow& window) {
  Counter counter(window.cap);
  const Int lx = daff_length(x);
  std::vector<DoubleAffineRoot> out;
  for (const auto& a : window_roots(x.system(), window, counter)) {
    SemigroupElement y(daff_reflection(a) * x.element());
    if (daff_length(y) == lx + 1 && !negative_under_inverse(x, a)) out.push_back(a);
  }
  return out;
}

std::vector<SemigroupElement> interval_chains(const SemigroupElement& y,
                                              const SemigroupElement& x, int max_depth) {
  const Int ly = daff_length(y);
  const Int lx = daff_length(x);
  if (lx - ly > max_depth) throw DomainError("interval depth exceeds the oracle limit");
  if (lx < ly) return {};
  // Climb from y, one length at a time.
  std::vector<std::vector<SemigroupElement>> layers{{y}};
  std::vector<std::map<IntVec, std::vector<IntVec>>> up_edges(1);
  for (Int len = ly; len < lx; ++len) {
    std::map<IntVec, SemigroupElement> next;
    std::map<IntVec, std::vector<IntVec>> edges;
    for (const auto& z : layers.back())
      for (auto& c : covers(z)) {
        edges[z.key()].push_back(c.y.key());
        next.emplace(c.y.key(), c.y);
      }
    up_edges.back() = std::move(edges);
    std::vector<SemigroupElement> layer;
    for (auto& [k, e] : next) layer.push_back(e);
    layers.push_back(std::move(layer));
    up_edges.emplace_back();
  }
  // Keep what reaches x.
  std::map<IntVec, bool> good{{x.key(), true}};
  std::vector<SemigroupElement> out;
  for (std::size_t level = layers.size(); level-- > 0;) {
    for (const auto& z : layers[level]) {
      bool ok = false;
      if (level + 1 == layers.size()) {
        ok = z.key() == x.key();
      } else {
        auto it = up_edges[level].find(z.key());
        if (it != up_edges[level].end())
          for (const auto& k : it->second)
            if (good.count(k)) ok = true;
      }
      if (ok) {
        good[z.key()] = true;
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SemigroupElement& a, const SemigroupElement& b) {
    Int la = daff_length(a), lb = daff_length(b);
    if (la != lb) return la < lb;
    return a.key() < b.key();
  });
  return out;
}

}  // namespace daff::oracle
