#pragma once

// The three group families (dihedral D_m, dicyclic T_4n, semidihedral SD_8n)
// as permutation groups. Elements are kept in normal form refl^f * rot^i and
// addressed by a dense index f * rotation_order + i; the permutation image of
// every element is computed once at construction.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcls {

enum class FamilyKind { Dihedral, Dicyclic, Semidihedral };

struct GroupFamily {
  FamilyKind kind = FamilyKind::Dihedral;
  int param = 3;  // m for D_m, n for T_4n and SD_8n

  static GroupFamily dihedral(int m) { return {FamilyKind::Dihedral, m}; }
  static GroupFamily dicyclic(int n) { return {FamilyKind::Dicyclic, n}; }
  static GroupFamily semidihedral(int n) { return {FamilyKind::Semidihedral, n}; }

  int order() const;
  /// Order of the cyclic rotation subgroup <r> (resp. <a>): m, 2n or 4n.
  int rotation_order() const;
  /// Degree of the permutation embedding: m, 4n or 4n.
  int degree() const;
  /// Minimum admissible parameter: 3 for D_m, 2 otherwise.
  int min_param() const;

  /// "D_6", "T_8", "SD_16".
  std::string name() const;
  /// "dihedral", "dicyclic", "semidihedral".
  std::string kind_name() const;

  auto operator<=>(const GroupFamily&) const = default;
};

std::optional<FamilyKind> parse_family_kind(std::string_view text);
std::string_view family_kind_name(FamilyKind kind);

struct GroupElement {
  int reflect = 0;   // 0 for rot^i, 1 for refl * rot^i
  int exponent = 0;  // in [0, rotation_order)

  auto operator<=>(const GroupElement&) const = default;
};

/// 0-based point images.
using Permutation = std::vector<int>;
/// Entries in [1, k]; length equals the group degree.
using IndexSequence = std::vector<int>;

/// Subset of a group, by element index.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t group_order, std::vector<int> members);

  bool contains(int g) const { return mask_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t group_order() const { return mask_.size(); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.members_ == b.members_; }

 private:
  std::vector<bool> mask_;
  std::vector<int> members_;  // sorted
};

using Subgroup = ElementSet;

class FiniteGroup {
 public:
  explicit FiniteGroup(GroupFamily family);

  const GroupFamily& family() const { return family_; }
  int order() const { return order_; }
  int degree() const { return degree_; }
  int rotation_order() const { return rot_order_; }
  int identity() const { return 0; }

  GroupElement element(int g) const;
  int index(GroupElement e) const;
  int rotation(long long k) const;
  int reflection(long long k) const;
  bool is_rotation(int g) const { return g < rot_order_; }
  /// Exponent i of rot^i, for rotations.
  int rotation_exponent(int g) const { return g % rot_order_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long long k) const;
  /// x^-1 g x.
  int conjugate(int g, int x) const { return mul(inv(x), mul(g, x)); }

  const Permutation& perm(int g) const { return perms_[static_cast<std::size_t>(g)]; }

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& class_map() const { return class_of_; }

  /// Readable word, e.g. "e", "r^3", "s*r^2", "b*a".
  std::string element_name(int g) const;

  /// The right action (alpha g)_x = alpha_{g(x)}.
  IndexSequence act(const IndexSequence& alpha, int g) const;

 private:
  int mul_normal_form(int a, int b) const;
  Permutation image_of(GroupElement e) const;

  GroupFamily family_;
  int order_ = 0;
  int degree_ = 0;
  int rot_order_ = 0;
  int twist_ = -1;       // rot^i * refl = refl * rot^(twist * i)
  int refl_square_ = 0;  // refl^2 = rot^refl_square
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// Throws Error(ParameterOutOfRange) below the family minimum.
FiniteGroup build_group(GroupFamily family);

int element_order(const FiniteGroup& g, int element);

bool is_prime(int p);

/// value = l * p^t with p not dividing l.
struct PrimeSplit {
  int p = 2;
  int t = 0;
  int l = 1;
  int pt = 1;  // p^t
};
PrimeSplit split_prime(int value, int p);

ElementSet p_regular_elements(const FiniteGroup& g, int p);
/// Conjugacy classes made of p-regular elements, in class order.
std::vector<std::vector<int>> p_regular_classes(const FiniteGroup& g, int p);

/// G_alpha. Throws Error(LengthMismatch) when alpha.size() != degree.
Subgroup stabilizer(const FiniteGroup& g, const IndexSequence& alpha);

Subgroup cyclic_subgroup(const FiniteGroup& g, int generator);
/// <rot^step>.
Subgroup rotation_subgroup(const FiniteGroup& g, int step);
ElementSet intersect(const ElementSet& a, const ElementSet& b);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

/// Lexicographically least member of each orbit of Gamma_k^m, enumerated in
/// lexicographic order and truncated after `cap` representatives.
std::vector<IndexSequence> orbit_representatives(const FiniteGroup& g, int k, std::size_t cap);

/// True when alpha is lexicographically <= alpha sigma for every sigma.
bool is_orbit_representative(const FiniteGroup& g, const IndexSequence& alpha);

/// A sequence gamma with C cap G_gamma == target, where c and target are
/// rotation subgroups with target <= c. The result is a (1,2,...,2) pattern
/// of length |rot|/|target| repeated along the first rotation cycle, or the
/// constant sequence when target == c. Checked with stabilizer() before
/// returning; throws Error(ConstructionFailure) when k is too small.
IndexSequence construct_sequence_with_stabilizer(const FiniteGroup& g, int k, const Subgroup& c,
                                                 const Subgroup& target);

std::string to_string(const IndexSequence& alpha);

}  // namespace symcls
