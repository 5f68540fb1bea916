#include "symcls/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symcls/error.hpp"

namespace symcls {

namespace {

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

// Smallest positive rotation exponent in a rotation subgroup (or the
// rotation order when the subgroup is trivial).
int rotation_step(const FiniteGroup& g, const Subgroup& s) {
  int step = g.rotation_order();
  for (int x : s.members()) {
    if (!g.is_rotation(x)) {
      throw Error(ErrorKind::ParameterOutOfRange, "subgroup is not contained in <rot>");
    }
    const int e = g.rotation_exponent(x);
    if (e > 0) step = std::min(step, e);
  }
  return step;
}

}  // namespace

int GroupFamily::order() const {
  switch (kind) {
    case FamilyKind::Dihedral: return 2 * param;
    case FamilyKind::Dicyclic: return 4 * param;
    case FamilyKind::Semidihedral: return 8 * param;
  }
  return 0;
}

int GroupFamily::rotation_order() const { return order() / 2; }

int GroupFamily::degree() const {
  return kind == FamilyKind::Dihedral ? param : 4 * param;
}

int GroupFamily::min_param() const { return kind == FamilyKind::Dihedral ? 3 : 2; }

std::string GroupFamily::name() const {
  switch (kind) {
    case FamilyKind::Dihedral: return "D_" + std::to_string(param);
    case FamilyKind::Dicyclic: return "T_" + std::to_string(4 * param);
    case FamilyKind::Semidihedral: return "SD_" + std::to_string(8 * param);
  }
  return "?";
}

std::string GroupFamily::kind_name() const { return std::string(family_kind_name(kind)); }

std::string_view family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Dihedral: return "dihedral";
    case FamilyKind::Dicyclic: return "dicyclic";
    case FamilyKind::Semidihedral: return "semidihedral";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  if (text == "dihedral" || text == "D") return FamilyKind::Dihedral;
  if (text == "dicyclic" || text == "T") return FamilyKind::Dicyclic;
  if (text == "semidihedral" || text == "SD") return FamilyKind::Semidihedral;
  return std::nullopt;
}

ElementSet::ElementSet(std::size_t group_order, std::vector<int> members)
    : mask_(group_order, false), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int g : members_) mask_[static_cast<std::size_t>(g)] = true;
}

FiniteGroup::FiniteGroup(GroupFamily family) : family_(family) {
  if (family.param < family.min_param()) {
    throw Error(ErrorKind::ParameterOutOfRange,
                family.kind_name() + " parameter must be >= " + std::to_string(family.min_param()));
  }
  order_ = family.order();
  degree_ = family.degree();
  rot_order_ = family.rotation_order();
  switch (family.kind) {
    case FamilyKind::Dihedral:
      twist_ = -1;
      refl_square_ = 0;
      break;
    case FamilyKind::Dicyclic:
      twist_ = -1;
      refl_square_ = family.param;
      break;
    case FamilyKind::Semidihedral:
      twist_ = 2 * family.param - 1;
      refl_square_ = 0;
      break;
  }

  const auto n = static_cast<std::size_t>(order_);
  table_.resize(n * n);
  inverse_.resize(n);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int c = mul_normal_form(a, b);
      table_[static_cast<std::size_t>(a * order_ + b)] = c;
      if (c == 0) inverse_[static_cast<std::size_t>(a)] = b;
    }
  }

  perms_.reserve(n);
  for (int g = 0; g < order_; ++g) perms_.push_back(image_of(element(g)));

  class_of_.assign(n, -1);
  for (int g = 0; g < order_; ++g) {
    if (class_of_[static_cast<std::size_t>(g)] >= 0) continue;
    std::vector<int> cls;
    for (int x = 0; x < order_; ++x) cls.push_back(conjugate(g, x));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int y : cls) class_of_[static_cast<std::size_t>(y)] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(cls));
  }
}

GroupElement FiniteGroup::element(int g) const { return {g / rot_order_, g % rot_order_}; }

int FiniteGroup::index(GroupElement e) const {
  return e.reflect * rot_order_ + mod(e.exponent, rot_order_);
}

int FiniteGroup::rotation(long long k) const { return mod(k, rot_order_); }

int FiniteGroup::reflection(long long k) const { return rot_order_ + mod(k, rot_order_); }

int FiniteGroup::pow(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int result = identity();
  for (long long i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

// (refl^f1 rot^i)(refl^f2 rot^j) using rot^i refl = refl rot^(twist i) and
// refl^2 = rot^refl_square.
int FiniteGroup::mul_normal_form(int a, int b) const {
  const GroupElement x = element(a);
  const GroupElement y = element(b);
  const long long i = x.exponent;
  const long long j = y.exponent;
  if (y.reflect == 0) return index({x.reflect, mod(i + j, rot_order_)});
  if (x.reflect == 0) return index({1, mod(twist_ * i + j, rot_order_)});
  return index({0, mod(refl_square_ + twist_ * i + j, rot_order_)});
}

// Images of generators, composed as refl^f o rot^i.
Permutation FiniteGroup::image_of(GroupElement e) const {
  const int deg = degree_;
  const int param = family_.param;
  Permutation rot(static_cast<std::size_t>(deg));
  Permutation refl(static_cast<std::size_t>(deg));
  switch (family_.kind) {
    case FamilyKind::Dihedral:
      for (int x = 0; x < deg; ++x) {
        rot[static_cast<std::size_t>(x)] = mod(x + 1, deg);
        refl[static_cast<std::size_t>(x)] = mod(-x, deg);
      }
      break;
    case FamilyKind::Dicyclic: {
      // Points 1..2n form the first r-cycle (offset u), 2n+1..4n the second
      // (offset v). s sends u to v = -u and v to u = n - v, which reproduces
      // s = (1 2n+1 n+1 3n+1)(2 4n n+2 3n)...(n 3n+2 2n 2n+2).
      const int half = 2 * param;
      for (int u = 0; u < half; ++u) {
        rot[static_cast<std::size_t>(u)] = mod(u + 1, half);
        rot[static_cast<std::size_t>(half + u)] = half + mod(u + 1, half);
        refl[static_cast<std::size_t>(u)] = half + mod(-u, half);
        refl[static_cast<std::size_t>(half + u)] = mod(param - u, half);
      }
      break;
    }
    case FamilyKind::Semidihedral: {
      // Point index x carries the residue x + 1 mod 4n (representatives 1..4n).
      // a: t -> t + 1, b: t -> (2n - 1) t.
      for (int x = 0; x < deg; ++x) {
        const long long t = x + 1;
        rot[static_cast<std::size_t>(x)] = mod(t + 1 - 1, deg);
        refl[static_cast<std::size_t>(x)] = mod(static_cast<long long>(2 * param - 1) * t - 1, deg);
      }
      break;
    }
  }
  Permutation img(static_cast<std::size_t>(deg));
  std::iota(img.begin(), img.end(), 0);
  for (int k = 0; k < e.exponent; ++k) {
    for (auto& v : img) v = rot[static_cast<std::size_t>(v)];
  }
  if (e.reflect) {
    for (auto& v : img) v = refl[static_cast<std::size_t>(v)];
  }
  return img;
}

std::string FiniteGroup::element_name(int g) const {
  const GroupElement e = element(g);
  const bool sd = family_.kind == FamilyKind::Semidihedral;
  const std::string r = sd ? "a" : "r";
  const std::string s = sd ? "b" : "s";
  if (e.reflect == 0 && e.exponent == 0) return "e";
  std::string out;
  if (e.reflect) out = s;
  if (e.exponent > 0) {
    if (!out.empty()) out += "*";
    out += r;
    if (e.exponent > 1) out += "^" + std::to_string(e.exponent);
  }
  return out;
}

IndexSequence FiniteGroup::act(const IndexSequence& alpha, int g) const {
  const Permutation& p = perm(g);
  IndexSequence out(alpha.size());
  for (std::size_t x = 0; x < alpha.size(); ++x) out[x] = alpha[static_cast<std::size_t>(p[x])];
  return out;
}

FiniteGroup build_group(GroupFamily family) { return FiniteGroup(family); }

int element_order(const FiniteGroup& g, int element) {
  int k = 1;
  for (int x = element; x != g.identity(); x = g.mul(x, element)) ++k;
  return k;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeSplit split_prime(int value, int p) {
  if (!is_prime(p)) throw Error(ErrorKind::ParameterOutOfRange, std::to_string(p) + " is not prime");
  PrimeSplit s;
  s.p = p;
  s.l = value;
  while (s.l % p == 0) {
    s.l /= p;
    s.pt *= p;
    ++s.t;
  }
  return s;
}

ElementSet p_regular_elements(const FiniteGroup& g, int p) {
  if (!is_prime(p)) throw Error(ErrorKind::ParameterOutOfRange, std::to_string(p) + " is not prime");
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x) {
    if (element_order(g, x) % p != 0) members.push_back(x);
  }
  return ElementSet(static_cast<std::size_t>(g.order()), std::move(members));
}

std::vector<std::vector<int>> p_regular_classes(const FiniteGroup& g, int p) {
  const ElementSet regular = p_regular_elements(g, p);
  std::vector<std::vector<int>> out;
  for (const auto& cls : g.conjugacy_classes()) {
    if (regular.contains(cls.front())) out.push_back(cls);
  }
  return out;
}

Subgroup stabilizer(const FiniteGroup& g, const IndexSequence& alpha) {
  if (static_cast<int>(alpha.size()) != g.degree()) {
    throw Error(ErrorKind::LengthMismatch, "sequence length " + std::to_string(alpha.size()) +
                                               " != degree " + std::to_string(g.degree()));
  }
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x) {
    const Permutation& p = g.perm(x);
    bool fixes = true;
    for (std::size_t i = 0; i < alpha.size() && fixes; ++i) {
      fixes = alpha[static_cast<std::size_t>(p[i])] == alpha[i];
    }
    if (fixes) members.push_back(x);
  }
  return Subgroup(static_cast<std::size_t>(g.order()), std::move(members));
}

Subgroup cyclic_subgroup(const FiniteGroup& g, int generator) {
  std::vector<int> members{g.identity()};
  for (int x = generator; x != g.identity(); x = g.mul(x, generator)) members.push_back(x);
  return Subgroup(static_cast<std::size_t>(g.order()), std::move(members));
}

Subgroup rotation_subgroup(const FiniteGroup& g, int step) {
  return cyclic_subgroup(g, g.rotation(step));
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  std::vector<int> members;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(members));
  return ElementSet(std::max(a.group_order(), b.group_order()), std::move(members));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.empty() || !s.contains(g.identity())) return false;
  for (int x : s.members()) {
    if (!s.contains(g.inv(x))) return false;
    for (int y : s.members()) {
      if (!s.contains(g.mul(x, y))) return false;
    }
  }
  return true;
}

bool is_orbit_representative(const FiniteGroup& g, const IndexSequence& alpha) {
  for (int x = 1; x < g.order(); ++x) {
    const Permutation& p = g.perm(x);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const int moved = alpha[static_cast<std::size_t>(p[i])];
      if (moved < alpha[i]) return false;
      if (moved > alpha[i]) break;
    }
  }
  return true;
}

std::vector<IndexSequence> orbit_representatives(const FiniteGroup& g, int k, std::size_t cap) {
  if (k < 1) throw Error(ErrorKind::ParameterOutOfRange, "k must be >= 1");
  std::vector<IndexSequence> out;
  IndexSequence alpha(static_cast<std::size_t>(g.degree()), 1);
  while (out.size() < cap) {
    if (is_orbit_representative(g, alpha)) out.push_back(alpha);
    // odometer, last position least significant
    std::size_t i = alpha.size();
    while (i > 0 && alpha[i - 1] == k) alpha[--i] = 1;
    if (i == 0) break;
    ++alpha[i - 1];
  }
  return out;
}

IndexSequence construct_sequence_with_stabilizer(const FiniteGroup& g, int k, const Subgroup& c,
                                                 const Subgroup& target) {
  if (!std::includes(c.members().begin(), c.members().end(), target.members().begin(),
                     target.members().end())) {
    throw Error(ErrorKind::ParameterOutOfRange, "target is not a subgroup of C");
  }
  const int c_step = rotation_step(g, c);
  const int period = rotation_step(g, target);
  IndexSequence gamma(static_cast<std::size_t>(g.degree()), 1);
  if (period != c_step) {
    if (k < 2) {
      throw Error(ErrorKind::ConstructionFailure,
                  "k = " + std::to_string(k) + " cannot break rotation symmetry of period " +
                      std::to_string(period));
    }
    // First rotation cycle: points 0 .. rotation_order-1 in rotation order for
    // every family; remaining points (second cycle of T_4n) are set to 2.
    const int rot = g.rotation_order();
    for (int x = 0; x < g.degree(); ++x) {
      gamma[static_cast<std::size_t>(x)] = (x < rot && x % period == 0) ? 1 : 2;
    }
  }
  const Subgroup got = intersect(c, stabilizer(g, gamma));
  if (!(got == target)) {
    throw Error(ErrorKind::ConstructionFailure,
                "constructed sequence " + to_string(gamma) + " has the wrong stabilizer in C");
  }
  return gamma;
}

std::string to_string(const IndexSequence& alpha) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << ")";
  return os.str();
}

}  // namespace symcls
