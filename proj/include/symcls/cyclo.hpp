#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N) and exact linear algebra
// over them. Every zero test in the library goes through CycNum::is_zero.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symcls {

using Rational = mpq_class;

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Euler's totient, i.e. deg(Phi_n).
int totient(int n);

/// An element of Q(zeta_N), stored as a polynomial in zeta_N of degree
/// < phi(N) reduced modulo Phi_N. Reduction is canonical, so two values of
/// the same conductor are equal iff their coefficient vectors are.
class CycNum {
 public:
  CycNum();
  CycNum(long long value);  // NOLINT(google-explicit-constructor)
  explicit CycNum(const Rational& value);

  /// zeta_n^k.
  static CycNum root_of_unity(int n, long long k);
  /// 2cos(pi * numer / denom) = zeta_{2 denom}^numer + zeta_{2 denom}^-numer.
  static CycNum two_cos(long long numer, long long denom);
  /// Builds sum_k coeffs[k] zeta_n^k for arbitrary length, reducing mod Phi_n.
  static CycNum from_powers(int n, std::span<const Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value expressed in conductor n; n must be a multiple of conductor().
  CycNum embed(int n) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Rational value; only valid when is_rational().
  Rational rational_value() const;

  /// Complex conjugation, the automorphism zeta -> zeta^-1.
  CycNum conj() const;
  /// Multiplicative inverse; throws Error(NotInvertible) on zero.
  CycNum inverse() const;

  /// Floating-point image under zeta_N -> exp(2 pi i / N). Display only.
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(CycNum lhs, const CycNum& rhs) { return lhs *= rhs; }
  friend CycNum operator/(CycNum lhs, const CycNum& rhs) { return lhs /= rhs; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& lhs, const CycNum& rhs);

 private:
  CycNum(int conductor, std::vector<Rational> coeffs);
  void lift_to(int n);

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Dense matrix of CycNum, row-major.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static CycMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// lcm of entry conductors.
  int conductor() const;
  bool is_hermitian() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> entries_;
};

/// Rank over Q(zeta_N) by Gaussian elimination with exact pivot tests.
std::size_t rank(const CycMatrix& m);

/// Circulant with first row v: entry (i, j) = v[(j - i) mod t].
CycMatrix circulant(std::span<const CycNum> v);

/// Number of s in [0, t) with sum_j v_j zeta_t^(s j) = 0, t = v.size().
/// Equals the nullity of circulant(v).
std::size_t circulant_nullity(std::span<const CycNum> v);

long long lcm_ll(long long a, long long b);

}  // namespace symcls
