#include "symcls/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "symcls/error.hpp"

namespace symcls {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParameterOutOfRange: return "parameter-out-of-range";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::ConstructionFailure: return "construction-failure";
    case ErrorKind::ElementNotPRegular: return "element-not-p-regular";
    case ErrorKind::SupportNotCyclic: return "support-not-cyclic";
    case ErrorKind::ZeroInput: return "zero-input";
    case ErrorKind::CharacterNotLinear: return "character-not-linear";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::NotInvertible: return "not-invertible";
  }
  return "unknown";
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

namespace {

using IntPoly = std::vector<long long>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of a by the monic polynomial b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long long c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(q);
  return q;
}

IntPoly compute_phi(int n, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), compute_phi(d, memo));
  }
  memo[n] = p;
  return p;
}

struct Table {
  int n = 1;
  int deg = 1;
  IntPoly phi;
  // power[k] = x^k mod Phi_n for k in [0, n), each of length deg.
  std::vector<IntPoly> power;
};

std::unique_ptr<Table> build_table(int n) {
  auto t = std::make_unique<Table>();
  std::map<int, IntPoly> memo;
  t->n = n;
  t->phi = compute_phi(n, memo);
  t->deg = static_cast<int>(t->phi.size()) - 1;
  const auto deg = static_cast<std::size_t>(t->deg);
  t->power.reserve(static_cast<std::size_t>(n));
  IntPoly cur(deg, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      // multiply by x and reduce by the monic Phi_n
      const long long top = cur[deg - 1];
      for (std::size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * t->phi[j];
      }
    }
    t->power.push_back(cur);
  }
  return t;
}

const Table& table(int n) {
  thread_local int last_n = 0;
  thread_local const Table* last = nullptr;
  if (last_n == n && last != nullptr) return *last;

  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Table>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  last_n = n;
  last = slot.get();
  return *slot;
}

void add_scaled_power(std::vector<Rational>& out, const Table& t, long long k, const Rational& c) {
  const auto& row = t.power[static_cast<std::size_t>(((k % t.n) + t.n) % t.n)];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) out[j] += c * static_cast<long>(row[j]);
  }
}

// Dense polynomials over Q, used only for inversion.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "cyclotomic index must be >= 1");
  return table(n).phi;
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycNum::CycNum() : conductor_(1), coeffs_(1, Rational(0)) {}

CycNum::CycNum(long long value) : conductor_(1), coeffs_(1, Rational(static_cast<long>(value))) {}

CycNum::CycNum(const Rational& value) : conductor_(1), coeffs_(1, value) { coeffs_.front().canonicalize(); }

CycNum::CycNum(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycNum CycNum::root_of_unity(int n, long long k) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "root_of_unity: N must be >= 1");
  const Table& t = table(n);
  std::vector<Rational> c(static_cast<std::size_t>(t.deg), Rational(0));
  add_scaled_power(c, t, k, Rational(1));
  return CycNum(n, std::move(c));
}

CycNum CycNum::two_cos(long long numer, long long denom) {
  if (denom < 1) throw Error(ErrorKind::ParameterOutOfRange, "two_cos: denominator must be >= 1");
  const int n = static_cast<int>(2 * denom);
  return root_of_unity(n, numer) + root_of_unity(n, -numer);
}

CycNum CycNum::from_powers(int n, std::span<const Rational> coeffs) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "from_powers: N must be >= 1");
  const Table& t = table(n);
  std::vector<Rational> c(static_cast<std::size_t>(t.deg), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Rational q = coeffs[k];
    q.canonicalize();
    if (q != 0) add_scaled_power(c, t, static_cast<long long>(k), q);
  }
  return CycNum(n, std::move(c));
}

void CycNum::lift_to(int n) {
  if (n == conductor_) return;
  if (n % conductor_ != 0) {
    throw Error(ErrorKind::ParameterOutOfRange, "embed: target conductor must be a multiple");
  }
  const Table& t = table(n);
  const long long step = n / conductor_;
  std::vector<Rational> c(static_cast<std::size_t>(t.deg), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) add_scaled_power(c, t, static_cast<long long>(k) * step, coeffs_[k]);
  }
  conductor_ = n;
  coeffs_ = std::move(c);
}

CycNum CycNum::embed(int n) const {
  CycNum out = *this;
  out.lift_to(n);
  return out;
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return q == 0; });
}

Rational CycNum::rational_value() const { return coeffs_.front(); }

CycNum CycNum::conj() const {
  if (conductor_ <= 2) return *this;
  const Table& t = table(conductor_);
  std::vector<Rational> c(coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) add_scaled_power(c, t, -static_cast<long long>(k), coeffs_[k]);
  }
  return CycNum(conductor_, std::move(c));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotInvertible, "inverse of zero");
  if (is_rational()) return CycNum(conductor_, [&] {
      std::vector<Rational> c(coeffs_.size(), Rational(0));
      c[0] = 1 / coeffs_[0];
      return c;
    }());
  const Table& t = table(conductor_);
  RatPoly modulus(t.phi.size());
  for (std::size_t j = 0; j < t.phi.size(); ++j) modulus[j] = Rational(static_cast<long>(t.phi[j]));
  RatPoly r0 = modulus;
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;  // coefficient of a in r0
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  const Rational c = r0.front();
  RatPoly q, rem;
  divmod(s0, modulus, q, rem);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < rem.size(); ++j) out[j] = rem[j] / c;
  return CycNum(conductor_, std::move(out));
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string CycNum::to_string() const {
  if (is_rational()) return coeffs_.front().get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << conductor_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (rhs.conductor_ == conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  const int n = static_cast<int>(lcm_ll(conductor_, rhs.conductor_));
  lift_to(n);
  if (rhs.conductor_ == n) return *this += rhs;
  return *this += rhs.embed(n);
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  if (rhs.conductor_ == 1 || rhs.is_rational()) {
    const Rational s = rhs.coeffs_.front();
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (conductor_ != rhs.conductor_) {
    const int n = static_cast<int>(lcm_ll(conductor_, rhs.conductor_));
    lift_to(n);
    if (rhs.conductor_ != n) return *this *= rhs.embed(n);
  }
  const Table& t = table(conductor_);
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] != 0) add_scaled_power(out, t, static_cast<long long>(k), prod[k]);
  }
  coeffs_ = std::move(out);
  return *this;
}

bool operator==(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.conductor_ == rhs.conductor_) return lhs.coeffs_ == rhs.coeffs_;
  const int n = static_cast<int>(lcm_ll(lhs.conductor_, rhs.conductor_));
  return lhs.embed(n).coeffs_ == rhs.embed(n).coeffs_;
}

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
  return m;
}

int CycMatrix::conductor() const {
  long long n = 1;
  for (const auto& e : entries_) n = lcm_ll(n, e.conductor());
  return static_cast<int>(n);
}

bool CycMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
    }
  }
  return true;
}

namespace {

// Scales a row by a positive rational so that all coefficients are coprime
// integers. Rank is unchanged.
void make_primitive(std::vector<CycNum>& row) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& x : row) {
    for (const auto& c : x.coeffs()) {
      if (c == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  const CycNum factor(scale);
  for (auto& x : row) {
    if (!x.is_zero()) x *= factor;
  }
}

}  // namespace

// Division-free elimination: row_r <- p * row_r - f * row_pivot, then the
// row content is removed. Avoids inverses, whose extended Euclid steps over
// Q blow up for large conductors.
std::size_t rank(const CycMatrix& m) {
  const int n = m.conductor();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<CycNum>> a(rows, std::vector<CycNum>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).embed(n);
    make_primitive(a[i]);
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    const CycNum p = a[row][col];
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      const CycNum f = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        CycNum next = p * a[r][c];
        if (!a[row][c].is_zero()) next -= f * a[row][c];
        a[r][c] = std::move(next);
      }
      a[r][col] = CycNum(0).embed(n);
      make_primitive(a[r]);
    }
    ++row;
  }
  return row;
}

CycMatrix circulant(std::span<const CycNum> v) {
  const std::size_t t = v.size();
  CycMatrix m(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) m(i, j) = v[(j + t - i) % t];
  }
  return m;
}

std::size_t circulant_nullity(std::span<const CycNum> v) {
  const auto t = static_cast<long long>(v.size());
  if (t == 0) return 0;
  long long n = t;
  for (const auto& x : v) n = lcm_ll(n, x.conductor());
  std::vector<CycNum> lifted;
  lifted.reserve(v.size());
  for (const auto& x : v) lifted.push_back(x.embed(static_cast<int>(n)));
  std::size_t zeros = 0;
  for (long long s = 0; s < t; ++s) {
    CycNum sum = CycNum(0).embed(static_cast<int>(n));
    for (long long j = 0; j < t; ++j) {
      if (lifted[static_cast<std::size_t>(j)].is_zero()) continue;
      sum += lifted[static_cast<std::size_t>(j)] *
             CycNum::root_of_unity(static_cast<int>(n), (n / t) * ((s * j) % t));
    }
    if (sum.is_zero()) ++zeros;
  }
  return zeros;
}

}  // namespace symcls
