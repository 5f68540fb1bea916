#include "symcls/brauer.hpp"

#include <algorithm>

#include "symcls/error.hpp"

namespace symcls {

namespace {

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

// rot^i refl = refl rot^(twist i)
long long twist(const GroupFamily& f) {
  return f.kind == FamilyKind::Semidihedral ? 2LL * f.param - 1 : -1;
}

bool primed_table(const GroupFamily& f) {
  return f.kind != FamilyKind::Dihedral && f.param % 2 == 1;
}

CharacterSpec linear(const GroupFamily& f, int index, int rot_q, int refl_q) {
  CharacterSpec s;
  s.family = f;
  s.kind = CharacterKind::Linear;
  s.index = index;
  s.primed = primed_table(f);
  s.rot_quarter = rot_q;
  s.refl_quarter = refl_q;
  return s;
}

CharacterSpec two_dim(const GroupFamily& f, int index) {
  CharacterSpec s;
  s.family = f;
  s.kind = CharacterKind::TwoDim;
  s.index = index;
  s.primed = primed_table(f);
  return s;
}

// Linear characters in table order, as (value on rot, value on refl) in
// powers of i.
std::vector<CharacterSpec> linear_specs(const GroupFamily& f) {
  std::vector<CharacterSpec> out;
  switch (f.kind) {
    case FamilyKind::Dihedral:
      out = {linear(f, 0, 0, 0), linear(f, 1, 0, 2)};
      if (f.param % 2 == 0) {
        out.push_back(linear(f, 2, 2, 0));
        out.push_back(linear(f, 3, 2, 2));
      }
      break;
    case FamilyKind::Dicyclic:
      if (f.param % 2 == 0) {
        out = {linear(f, 0, 0, 0), linear(f, 1, 2, 0), linear(f, 2, 0, 2), linear(f, 3, 2, 2)};
      } else {
        out = {linear(f, 0, 0, 0), linear(f, 1, 2, 1), linear(f, 2, 0, 2), linear(f, 3, 2, 3)};
      }
      break;
    case FamilyKind::Semidihedral:
      out = {linear(f, 0, 0, 0), linear(f, 1, 0, 2), linear(f, 2, 2, 0), linear(f, 3, 2, 2)};
      if (f.param % 2 == 1) {
        out.push_back(linear(f, 4, 1, 0));
        out.push_back(linear(f, 5, 1, 2));
        out.push_back(linear(f, 6, 3, 0));
        out.push_back(linear(f, 7, 3, 2));
      }
      break;
  }
  return out;
}

std::vector<int> ordinary_two_dim_indices(const GroupFamily& f) {
  std::vector<int> out;
  const int n = f.param;
  switch (f.kind) {
    case FamilyKind::Dihedral:
      for (int h = 1; 2 * h < n; ++h) out.push_back(h);
      break;
    case FamilyKind::Dicyclic:
      for (int j = 1; j <= n - 1; ++j) out.push_back(j);
      break;
    case FamilyKind::Semidihedral: {
      for (int h = 2; h <= 2 * n - 2; h += 2) out.push_back(h);
      const int top = n % 2 == 0 ? n - 1 : n - 2;
      for (int h = 1; h <= top; h += 2) out.push_back(h);
      for (int h = 2 * n + 1; h <= 2 * n + top; h += 2) out.push_back(h);
      break;
    }
  }
  return out;
}

// Two-dimensional characters are induced from rot -> zeta_R^h; h and
// h * twist label the same character.
bool same_two_dim(const GroupFamily& f, long long h1, long long h2) {
  const int r = f.rotation_order();
  return mod(h1, r) == mod(h2, r) || mod(h1 * twist(f), r) == mod(h2, r);
}

}  // namespace

std::string CharacterSpec::label(bool hat) const {
  std::string symbol;
  std::string var;
  const bool lin = kind == CharacterKind::Linear;
  switch (family.kind) {
    case FamilyKind::Dihedral:
      symbol = lin ? "psi" : "chi";
      var = lin ? "j" : "h";
      break;
    case FamilyKind::Dicyclic:
      symbol = lin ? "chi" : "psi";
      var = lin ? "h" : "b";
      break;
    case FamilyKind::Semidihedral:
      symbol = lin ? "chi" : "psi";
      var = lin ? "k" : "h";
      break;
  }
  if (hat) symbol += "_hat";
  if (primed) symbol += "'";
  return symbol + "[" + var + "=" + std::to_string(index) + "]";
}

int value_conductor(const FiniteGroup& g) {
  return static_cast<int>(lcm_ll(g.rotation_order(), 4));
}

CycNum character_value(const FiniteGroup& g, const CharacterSpec& spec, int element) {
  const int n = value_conductor(g);
  const GroupElement e = g.element(element);
  if (spec.kind == CharacterKind::Linear) {
    const long long q = static_cast<long long>(e.reflect) * spec.refl_quarter +
                        static_cast<long long>(e.exponent) * spec.rot_quarter;
    return CycNum::root_of_unity(n, (n / 4) * mod(q, 4));
  }
  if (e.reflect) return CycNum(0).embed(n);
  const int r = g.rotation_order();
  const long long step = n / r;
  const long long a = mod(static_cast<long long>(spec.index) * e.exponent, r);
  const long long b = mod(static_cast<long long>(spec.index) * e.exponent * twist(spec.family), r);
  return CycNum::root_of_unity(n, step * a) + CycNum::root_of_unity(n, step * b);
}

std::vector<OrdinaryCharacter> ordinary_table(const FiniteGroup& g) {
  std::vector<CharacterSpec> specs = linear_specs(g.family());
  for (int h : ordinary_two_dim_indices(g.family())) specs.push_back(two_dim(g.family(), h));
  std::vector<OrdinaryCharacter> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    OrdinaryCharacter chi{s, {}};
    for (const auto& cls : g.conjugacy_classes()) chi.class_values.push_back(character_value(g, s, cls.front()));
    out.push_back(std::move(chi));
  }
  return out;
}

CycNum character_inner_product(const FiniteGroup& g, const OrdinaryCharacter& a,
                               const OrdinaryCharacter& b) {
  CycNum sum;
  const auto& classes = g.conjugacy_classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += CycNum(static_cast<long long>(classes[c].size())) * a.class_values[c] * b.class_values[c].conj();
  }
  return sum * CycNum(Rational(1, g.order()));
}

CycNum evaluate(const BrauerCharacter& phi, int element) {
  if (element < 0 || static_cast<std::size_t>(element) >= phi.class_of.size() ||
      !phi.domain.contains(element)) {
    throw Error(ErrorKind::ElementNotPRegular,
                "element " + std::to_string(element) + " is not " + std::to_string(phi.p) + "-regular");
  }
  return phi.class_values[static_cast<std::size_t>(phi.class_of[static_cast<std::size_t>(element)])];
}

std::vector<int> semidihedral_two_dim_indices(int n, int p) {
  const PrimeSplit s = split_prime(4 * n, p);
  const int l = s.l;
  std::vector<int> js;
  if (p == 2) {
    for (int j = 1; 2 * j <= l - 1; ++j) js.push_back(j);
  } else {
    const int eps = n % 2 == 0 ? 1 : 2;
    for (int j = 2; j <= l / 2 - 2; j += 2) js.push_back(j);
    for (int j = 1; j <= l / 4 - eps; j += 2) js.push_back(j);
    for (int j = l / 2 + 1; j <= l / 2 + l / 4 - eps; j += 2) js.push_back(j);
  }
  for (int& j : js) j *= s.pt;
  return js;
}

std::vector<BrauerCharacter> irreducible_brauer_characters(const FiniteGroup& g, int p) {
  const GroupFamily& f = g.family();
  const PrimeSplit split = split_prime(g.rotation_order(), p);
  const int l = split.l;

  int epsilon = 0;
  std::vector<int> two_dim_indices;
  switch (f.kind) {
    case FamilyKind::Dihedral:
      epsilon = p == 2 ? 1 : (l % 2 == 0 ? 4 : 2);
      for (int h = 1; 2 * h < l; ++h) two_dim_indices.push_back(h);
      break;
    case FamilyKind::Dicyclic:
      epsilon = p == 2 ? 1 : 4;
      for (int b = 1; 2 * b < l; ++b) two_dim_indices.push_back(b);
      break;
    case FamilyKind::Semidihedral:
      epsilon = p == 2 ? 1 : (f.param % 2 == 0 ? 4 : 8);
      two_dim_indices = semidihedral_two_dim_indices(f.param, p);
      break;
  }

  const std::vector<OrdinaryCharacter> table = ordinary_table(g);
  const ElementSet domain = p_regular_elements(g, p);
  const int conductor = value_conductor(g);

  auto restrict = [&](const CharacterSpec& spec, int ordinary) {
    BrauerCharacter phi;
    phi.spec = spec;
    phi.spec.epsilon = epsilon;
    phi.p = p;
    phi.split = split;
    phi.domain = domain;
    phi.class_of = g.class_map();
    phi.ordinary_index = ordinary;
    const auto& classes = g.conjugacy_classes();
    phi.class_values.assign(classes.size(), CycNum(0).embed(conductor));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (domain.contains(classes[c].front())) {
        phi.class_values[c] = character_value(g, phi.spec, classes[c].front());
      }
    }
    phi.degree = CycNum(spec.degree());
    return phi;
  };

  std::vector<BrauerCharacter> out;
  int count = 0;
  for (std::size_t i = 0; i < table.size() && count < epsilon; ++i) {
    if (table[i].spec.kind != CharacterKind::Linear) continue;
    out.push_back(restrict(table[i].spec, static_cast<int>(i)));
    ++count;
  }
  for (int h : two_dim_indices) {
    int source = -1;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i].spec.kind == CharacterKind::TwoDim && same_two_dim(f, table[i].spec.index, h)) {
        source = static_cast<int>(i);
        break;
      }
    }
    if (source < 0) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "no ordinary two-dimensional character of " + f.name() + " with index " + std::to_string(h));
    }
    out.push_back(restrict(two_dim(f, h), source));
  }
  return out;
}

SupportInfo cyclic_support(const FiniteGroup& g, const BrauerCharacter& phi) {
  SupportInfo info;
  info.generator = g.rotation(phi.split.pt);
  info.c = rotation_subgroup(g, phi.split.pt);
  info.vanishes_off_c = true;
  info.nonzero_on_c = true;
  for (int x : phi.domain.members()) {
    const bool zero = evaluate(phi, x).is_zero();
    if (info.c.contains(x)) {
      info.nonzero_on_c = info.nonzero_on_c && !zero;
    } else {
      info.vanishes_off_c = info.vanishes_off_c && zero;
    }
  }
  return info;
}

}  // namespace symcls
