#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace daff {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

/*
  An irreducible simply-laced finite root system of type A_n, D_n (n >= 4)
  or E_6, E_7, E_8.

  Roots are stored in simple-root coordinates and weights in
  fundamental-weight coordinates, so every pairing is integer arithmetic:
  <root, root> = a^T C b and <weight, root> = mu . a.

  Roots are addressed by a dense id. Ids [0, N) are the positive roots ordered
  by (height, lexicographic coordinates); id N + k is the negative of id k.
  Instances are interned: build() returns the same object for the same
  (type, rank), so pointer equality is system equality.
*/
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  Int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }

  const IntVec& coords(int id) const { return coords_[id]; }
  /// Fundamental-weight coordinates of a root, i.e. C * coords.
  const IntVec& weight_coords(int id) const { return weight_coords_[id]; }
  bool is_positive(int id) const { return id < num_positive_; }
  int negate(int id) const {
    return id < num_positive_ ? id + num_positive_ : id - num_positive_;
  }
  int height(int id) const { return heights_[id]; }
  std::optional<int> find(const IntVec& coords) const;

  /// Id of the simple root alpha_i, i in [1, rank].
  int simple(int i) const { return simple_ids_[i - 1]; }
  int theta() const { return theta_; }
  int coxeter_number() const { return coxeter_number_; }
  const IntVec& two_rho() const { return two_rho_; }

  int pairing(int a, int b) const { return pairing_[a * num_roots() + b]; }
  /// s_i applied to root id, i in [1, rank].
  int reflect(int i, int id) const {
    return simple_reflection_[(i - 1) * num_roots() + id];
  }

  /// <u, v> for u, v in Q given in simple-root coordinates.
  Int pair_root_vectors(const IntVec& u, const IntVec& v) const;
  /// <mu, v> for mu in P (fundamental-weight coords), v in Q (root coords).
  static Int pair_weight_vector(const IntVec& mu, const IntVec& v);
  IntVec root_vector_to_weight(const IntVec& v) const;
  /// Simple-root coordinates of a weight, if it lies in Q.
  std::optional<IntVec> weight_to_root_vector(const IntVec& mu) const;

  RootSystem(char type, int rank, std::vector<Int> cartan);

 private:
  char type_;
  int rank_;
  std::vector<Int> cartan_;
  int num_positive_ = 0;
  std::vector<IntVec> coords_;
  std::vector<IntVec> weight_coords_;
  std::vector<int> heights_;
  std::map<IntVec, int> index_;
  std::vector<int> simple_ids_;
  int theta_ = 0;
  int coxeter_number_ = 0;
  IntVec two_rho_;
  std::vector<int> pairing_;
  std::vector<int> simple_reflection_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Throws DomainError unless a and b refer to the same root system.
void require_same_system(const RootSystem* a, const RootSystem* b);

class FiniteRoot {
 public:
  FiniteRoot() = default;
  FiniteRoot(const RootSystem* system, int id) : system_(system), id_(id) {}
  static FiniteRoot from_coords(const RootSystem& system, const IntVec& coords);
  static FiniteRoot simple(const RootSystem& system, int i) {
    return {&system, system.simple(i)};
  }

  const RootSystem& system() const { return *system_; }
  const RootSystem* system_ptr() const { return system_; }
  int id() const { return id_; }
  const IntVec& coords() const { return system_->coords(id_); }
  bool is_positive() const { return system_->is_positive(id_); }
  int height() const { return system_->height(id_); }

  FiniteRoot operator-() const { return {system_, system_->negate(id_)}; }
  friend bool operator==(const FiniteRoot& a, const FiniteRoot& b) {
    return a.system_ == b.system_ && a.id_ == b.id_;
  }
  friend auto operator<=>(const FiniteRoot& a, const FiniteRoot& b) {
    return a.id_ <=> b.id_;
  }

 private:
  const RootSystem* system_ = nullptr;
  int id_ = 0;
};

class FiniteWeight {
 public:
  FiniteWeight() = default;
  FiniteWeight(const RootSystem* system, IntVec coords);
  static FiniteWeight zero(const RootSystem& system);
  static FiniteWeight from_root_vector(const RootSystem& system,
                                       const IntVec& root_coords);
  static FiniteWeight of_root(const FiniteRoot& root);

  const RootSystem& system() const { return *system_; }
  const RootSystem* system_ptr() const { return system_; }
  const IntVec& coords() const { return coords_; }
  bool is_zero() const;

  FiniteWeight& operator+=(const FiniteWeight& o);
  FiniteWeight& operator-=(const FiniteWeight& o);
  friend FiniteWeight operator+(FiniteWeight a, const FiniteWeight& b) {
    return a += b;
  }
  friend FiniteWeight operator-(FiniteWeight a, const FiniteWeight& b) {
    return a -= b;
  }
  FiniteWeight operator-() const;
  friend FiniteWeight operator*(Int k, FiniteWeight a);
  friend bool operator==(const FiniteWeight& a, const FiniteWeight& b) {
    return a.system_ == b.system_ && a.coords_ == b.coords_;
  }

 private:
  const RootSystem* system_ = nullptr;
  IntVec coords_;
};

/*
  Element of the finite Weyl group, held as its integer action matrix on
  simple-root coordinates together with the induced permutation of root ids
  (and its inverse) so that acting on a root is a table lookup.
*/
class FiniteWeylElement {
 public:
  FiniteWeylElement() = default;
  static FiniteWeylElement identity(const RootSystem& system);
  /// s_i, i in [1, rank].
  static FiniteWeylElement simple_reflection(const RootSystem& system, int i);
  static FiniteWeylElement reflection(const FiniteRoot& root);
  /// Product s_{i1} s_{i2} ... of simple reflections, indices in [1, rank].
  static FiniteWeylElement from_word(const RootSystem& system,
                                     const std::vector<int>& word);

  const RootSystem& system() const { return *system_; }
  const RootSystem* system_ptr() const { return system_; }
  /// Row-major n x n action matrix on simple-root coordinates.
  const IntVec& matrix() const { return matrix_; }

  int apply(int root_id) const { return perm_[root_id]; }
  int apply_inverse(int root_id) const { return inverse_perm_[root_id]; }
  FiniteRoot apply(const FiniteRoot& root) const;
  FiniteWeight apply(const FiniteWeight& weight) const;
  IntVec apply_root_vector(const IntVec& v) const;
  IntVec apply_weight_vector(const IntVec& mu) const;

  FiniteWeylElement inverse() const;
  friend FiniteWeylElement operator*(const FiniteWeylElement& a,
                                     const FiniteWeylElement& b);
  friend bool operator==(const FiniteWeylElement& a,
                         const FiniteWeylElement& b) {
    return a.system_ == b.system_ && a.matrix_ == b.matrix_;
  }

  bool is_identity() const;
  int length() const;
  /// Lexicographically first reduced word (indices in [1, rank]).
  std::vector<int> reduced_word() const;

 private:
  FiniteWeylElement(const RootSystem* system, std::vector<int> perm);

  const RootSystem* system_ = nullptr;
  IntVec matrix_;
  std::vector<int> perm_;
  std::vector<int> inverse_perm_;
};

// Free-function forms of the basic pairings and actions.
Int pairing_root_root(const FiniteRoot& a, const FiniteRoot& b);
Int pairing_weight_root(const FiniteWeight& mu, const FiniteRoot& nu);
inline FiniteRoot finite_act(const FiniteWeylElement& w, const FiniteRoot& v) {
  return w.apply(v);
}
inline FiniteWeight finite_act(const FiniteWeylElement& w,
                               const FiniteWeight& v) {
  return w.apply(v);
}

}  // namespace daff
