#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tqdh {

using Permutation = std::vector<int>;  // 0-based image array

inline constexpr int kDefaultGroupCap = 2048;

/// (a∘b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& p);
/// 0 for even, 1 for odd.
int signature(const Permutation& p);
/// Cycles of length >= 2, each starting at its least point, sorted by that point.
std::vector<std::vector<int>> cycles(const Permutation& p);
/// Cycle notation on 1-based points, "()" for the identity.
std::string cycle_string(const Permutation& p);

/// Finite group with elements 0..size-1, element 0 the identity.
class FiniteGroup {
 public:
  enum class Kind { Table, Permutation, CyclicProduct };

  /// table[a][b] = index of a*b. Row and column 0 must be the identity.
  static std::shared_ptr<const FiniteGroup> from_table(const std::vector<std::vector<int>>& table,
                                                       std::vector<int> generators = {});
  /// Closure of the generators in S_degree, sorted by image array.
  static std::shared_ptr<const FiniteGroup> from_permutations(int degree, const std::vector<Permutation>& gens,
                                                              int cap = kDefaultGroupCap);
  static std::shared_ptr<const FiniteGroup> symmetric(int n, int cap = kDefaultGroupCap);
  /// Z/m1 x ... x Z/mk in mixed-radix lexicographic order.
  static std::shared_ptr<const FiniteGroup> cyclic_product(const std::vector<int>& orders,
                                                           int cap = kDefaultGroupCap);

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
  [[nodiscard]] int inv(int a) const { return inv_[a]; }
  /// h g h^-1
  [[nodiscard]] int conj(int h, int g) const { return mul(mul(h, g), inv_[h]); }
  [[nodiscard]] bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  [[nodiscard]] int element_order(int a) const;

  /// Generators used to build actions; every element is a word in them.
  [[nodiscard]] const std::vector<int>& generators() const { return gens_; }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const Permutation& permutation(int a) const { return perms_.at(a); }
  /// Index of a permutation, or -1.
  [[nodiscard]] int find_permutation(const Permutation& p) const;
  [[nodiscard]] const std::vector<int>& cyclic_orders() const { return orders_; }
  [[nodiscard]] std::vector<int> cyclic_digits(int a) const;

  [[nodiscard]] std::string label(int a) const;
  /// Accepts a label as printed by label() or a decimal element index.
  /// Throws ValidationError.
  [[nodiscard]] int find(const std::string& label) const;

  /// Classes sorted by least element, each sorted.
  [[nodiscard]] std::vector<std::vector<int>> conjugacy_classes() const;
  [[nodiscard]] std::vector<int> centralizer(int a) const;

 private:
  FiniteGroup() = default;
  void finish();

  Kind kind_ = Kind::Table;
  int size_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  int degree_ = 0;
  std::vector<Permutation> perms_;
  std::map<Permutation, int> perm_index_;
  std::vector<int> orders_;
  std::map<std::string, int> label_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace tqdh
