#include "daff/root_system.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

#include <boost/rational.hpp>

#include "daff/error.hpp"

namespace daff {

namespace {

// Bourbaki labelling. Returns the list of edges (0-based) of the Dynkin
// diagram, or nothing if the type/rank pair is not simply laced.
std::optional<std::vector<std::pair<int, int>>> dynkin_edges(char type,
                                                             int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case 'A':
      if (rank < 1) return std::nullopt;
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      return edges;
    case 'D':
      if (rank < 4) return std::nullopt;
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      return edges;
    case 'E':
      if (rank < 6 || rank > 8) return std::nullopt;
      // 1-3-4-5-6-7-8 with 2 attached to 4.
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      return edges;
    default:
      return std::nullopt;
  }
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(char type, int rank) {
  auto edges = dynkin_edges(type, rank);
  if (!edges) {
    throw DomainError(std::string("not a simply-laced Dynkin type: ") + type +
                      std::to_string(rank));
  }
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>>
      registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{type, rank}];
  if (!slot) {
    std::vector<Int> cartan(rank * rank, 0);
    for (int i = 0; i < rank; ++i) cartan[i * rank + i] = 2;
    for (auto [a, b] : *edges) {
      cartan[a * rank + b] = -1;
      cartan[b * rank + a] = -1;
    }
    slot = std::make_shared<const RootSystem>(type, rank, std::move(cartan));
  }
  return slot;
}

RootSystem::RootSystem(char type, int rank, std::vector<Int> cartan_matrix)
    : type_(type), rank_(rank), cartan_(std::move(cartan_matrix)) {
  const int n = rank_;
  auto reflect_vec = [&](int i, const IntVec& v) {
    Int p = 0;
    for (int k = 0; k < n; ++k) p += cartan(i, k) * v[k];
    IntVec out = v;
    out[i] -= p;
    return out;
  };

  // Positive roots by reflection closure from the simple roots.
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVec u = reflect_vec(i, v);
      bool positive = std::all_of(u.begin(), u.end(), [](Int c) { return c >= 0; });
      if (positive && seen.insert(u).second) queue.push_back(u);
    }
  }
  std::vector<IntVec> positive(seen.begin(), seen.end());
  auto ht = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
  std::sort(positive.begin(), positive.end(), [&](const IntVec& a, const IntVec& b) {
    Int ha = ht(a), hb = ht(b);
    return ha != hb ? ha < hb : a < b;
  });

  num_positive_ = static_cast<int>(positive.size());
  const int total = 2 * num_positive_;
  coords_.resize(total);
  for (int k = 0; k < num_positive_; ++k) {
    coords_[k] = positive[k];
    IntVec neg = positive[k];
    for (auto& c : neg) c = -c;
    coords_[k + num_positive_] = neg;
  }
  heights_.resize(total);
  weight_coords_.resize(total);
  for (int id = 0; id < total; ++id) {
    heights_[id] = static_cast<int>(ht(coords_[id]));
    index_[coords_[id]] = id;
    weight_coords_[id] = root_vector_to_weight(coords_[id]);
  }
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    simple_ids_.push_back(index_.at(e));
  }
  theta_ = num_positive_ - 1;
  coxeter_number_ = heights_[theta_] + 1;
  two_rho_.assign(n, 0);
  for (int k = 0; k < num_positive_; ++k)
    for (int c = 0; c < n; ++c) two_rho_[c] += coords_[k][c];

  pairing_.resize(static_cast<std::size_t>(total) * total);
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b)
      pairing_[a * total + b] = static_cast<int>(dot(weight_coords_[a], coords_[b]));

  simple_reflection_.resize(static_cast<std::size_t>(n) * total);
  for (int i = 0; i < n; ++i)
    for (int id = 0; id < total; ++id)
      simple_reflection_[i * total + id] = index_.at(reflect_vec(i, coords_[id]));
}

std::string RootSystem::label() const {
  return std::string(1, type_) + std::to_string(rank_);
}

std::optional<int> RootSystem::find(const IntVec& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Int RootSystem::pair_root_vectors(const IntVec& u, const IntVec& v) const {
  return dot(root_vector_to_weight(u), v);
}

Int RootSystem::pair_weight_vector(const IntVec& mu, const IntVec& v) {
  return dot(mu, v);
}

IntVec RootSystem::root_vector_to_weight(const IntVec& v) const {
  IntVec out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) out[i] += cartan(i, k) * v[k];
  return out;
}

std::optional<IntVec> RootSystem::weight_to_root_vector(const IntVec& mu) const {
  using Q = boost::rational<Int>;
  const int n = rank_;
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m[i][k] = cartan(i, k);
    m[i][n] = mu[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (m[pivot][col] == Q(0)) ++pivot;  // Cartan matrices are nonsingular
    std::swap(m[pivot], m[col]);
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Q(0)) continue;
      Q f = m[row][col] / m[col][col];
      for (int k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  IntVec out(n);
  for (int i = 0; i < n; ++i) {
    Q v = m[i][n] / m[i][i];
    if (v.denominator() != 1) return std::nullopt;
    out[i] = v.numerator();
  }
  return out;
}

void require_same_system(const RootSystem* a, const RootSystem* b) {
  if (a != b) throw DomainError("operands belong to different root systems");
}

// ---------------------------------------------------------------------------

FiniteRoot FiniteRoot::from_coords(const RootSystem& system, const IntVec& coords) {
  if (static_cast<int>(coords.size()) != system.rank())
    throw DomainError("root has wrong number of coordinates for " + system.label());
  auto id = system.find(coords);
  if (!id) throw DomainError("vector is not a root of " + system.label());
  return {&system, *id};
}

FiniteWeight::FiniteWeight(const RootSystem* system, IntVec coords)
    : system_(system), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != system_->rank())
    throw DomainError("weight has wrong number of coordinates for " + system_->label());
}

FiniteWeight FiniteWeight::zero(const RootSystem& system) {
  return {&system, IntVec(system.rank(), 0)};
}

FiniteWeight FiniteWeight::from_root_vector(const RootSystem& system,
                                            const IntVec& root_coords) {
  if (static_cast<int>(root_coords.size()) != system.rank())
    throw DomainError("vector has wrong number of coordinates for " + system.label());
  return {&system, system.root_vector_to_weight(root_coords)};
}

FiniteWeight FiniteWeight::of_root(const FiniteRoot& root) {
  return {root.system_ptr(), root.system().weight_coords(root.id())};
}

bool FiniteWeight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

FiniteWeight& FiniteWeight::operator+=(const FiniteWeight& o) {
  require_same_system(system_, o.system_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

FiniteWeight& FiniteWeight::operator-=(const FiniteWeight& o) {
  require_same_system(system_, o.system_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

FiniteWeight FiniteWeight::operator-() const {
  FiniteWeight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FiniteWeight operator*(Int k, FiniteWeight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

// ---------------------------------------------------------------------------

FiniteWeylElement::FiniteWeylElement(const RootSystem* system, std::vector<int> perm)
    : system_(system), perm_(std::move(perm)) {
  const int n = system_->rank();
  inverse_perm_.assign(perm_.size(), 0);
  for (std::size_t k = 0; k < perm_.size(); ++k) inverse_perm_[perm_[k]] = static_cast<int>(k);
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) {
    const IntVec& col = system_->coords(perm_[system_->simple(j + 1)]);
    for (int i = 0; i < n; ++i) matrix_[i * n + j] = col[i];
  }
}

FiniteWeylElement FiniteWeylElement::identity(const RootSystem& system) {
  std::vector<int> perm(system.num_roots());
  std::iota(perm.begin(), perm.end(), 0);
  return {&system, std::move(perm)};
}

FiniteWeylElement FiniteWeylElement::simple_reflection(const RootSystem& system, int i) {
  if (i < 1 || i > system.rank())
    throw DomainError("simple reflection index out of range: s" + std::to_string(i));
  std::vector<int> perm(system.num_roots());
  for (int id = 0; id < system.num_roots(); ++id) perm[id] = system.reflect(i, id);
  return {&system, std::move(perm)};
}

FiniteWeylElement FiniteWeylElement::reflection(const FiniteRoot& root) {
  const RootSystem& sys = root.system();
  const IntVec& nu = root.coords();
  std::vector<int> perm(sys.num_roots());
  for (int id = 0; id < sys.num_roots(); ++id) {
    Int p = sys.pairing(root.id(), id);
    IntVec v = sys.coords(id);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= p * nu[k];
    perm[id] = *sys.find(v);
  }
  return {&sys, std::move(perm)};
}

FiniteWeylElement FiniteWeylElement::from_word(const RootSystem& system,
                                               const std::vector<int>& word) {
  FiniteWeylElement w = identity(system);
  for (int i : word) w = w * simple_reflection(system, i);
  return w;
}

FiniteRoot FiniteWeylElement::apply(const FiniteRoot& root) const {
  require_same_system(system_, root.system_ptr());
  return {system_, perm_[root.id()]};
}

FiniteWeight FiniteWeylElement::apply(const FiniteWeight& weight) const {
  require_same_system(system_, weight.system_ptr());
  return {system_, apply_weight_vector(weight.coords())};
}

IntVec FiniteWeylElement::apply_root_vector(const IntVec& v) const {
  const int n = system_->rank();
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out[i] += matrix_[i * n + k] * v[k];
  return out;
}

IntVec FiniteWeylElement::apply_weight_vector(const IntVec& mu) const {
  // <w mu, alpha_i> = <mu, w^{-1} alpha_i>
  const int n = system_->rank();
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i)
    out[i] = dot(mu, system_->coords(inverse_perm_[system_->simple(i + 1)]));
  return out;
}

FiniteWeylElement FiniteWeylElement::inverse() const {
  return {system_, inverse_perm_};
}

FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  require_same_system(a.system_, b.system_);
  std::vector<int> perm(a.perm_.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = a.perm_[b.perm_[k]];
  return {a.system_, std::move(perm)};
}

bool FiniteWeylElement::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != static_cast<int>(k)) return false;
  return true;
}

int FiniteWeylElement::length() const {
  int count = 0;
  for (int k = 0; k < system_->num_positive(); ++k)
    if (!system_->is_positive(perm_[k])) ++count;
  return count;
}

std::vector<int> FiniteWeylElement::reduced_word() const {
  std::vector<int> word;
  FiniteWeylElement w = *this;
  const int n = system_->rank();
  while (!w.is_identity()) {
    for (int i = 1; i <= n; ++i) {
      if (!system_->is_positive(w.apply_inverse(system_->simple(i)))) {
        word.push_back(i);
        w = simple_reflection(*system_, i) * w;
        break;
      }
    }
  }
  return word;
}

Int pairing_root_root(const FiniteRoot& a, const FiniteRoot& b) {
  require_same_system(a.system_ptr(), b.system_ptr());
  return a.system().pairing(a.id(), b.id());
}

Int pairing_weight_root(const FiniteWeight& mu, const FiniteRoot& nu) {
  require_same_system(mu.system_ptr(), nu.system_ptr());
  return dot(mu.coords(), nu.coords());
}

}  // namespace daff
