/**
 * @file scalars.hpp
 * @brief Exact arithmetic: rationals and cyclotomic fields Q(zeta_m).
 *
 * Rational keeps numerator and denominator in machine words and switches
 * to GMP only when an intermediate result overflows.  Scalar is a residue
 * modulo the m-th cyclotomic polynomial with rational coefficients; a
 * scalar whose higher coefficients vanish never touches the polynomial
 * machinery, so pure-rational workloads stay cheap.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gsym {

/** @brief Exact rational number with a small-integer fast path. */
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  Rational inv() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  /** @brief Value as a GMP rational (always valid). */
  mpq_class to_mpq() const;
  /** @brief Value as an int64 when it is an integer that fits; throws otherwise. */
  long long to_int() const;
  /** @brief Canonical rendering "p" or "p/q". */
  std::string str() const;

 private:
  void set_from_mpq(const mpq_class& q);
  long long n_ = 0;
  long long d_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/** @brief Cyclotomic field context Q(zeta_m); instances are interned. */
struct FieldCtx {
  int m = 1;
  int degree = 1;
  /** Monic m-th cyclotomic polynomial, coefficients low to high (size degree+1). */
  std::vector<Rational> minpoly;
  /** zeta_m^k reduced modulo the minimal polynomial, for 0 <= k < max(m, 2*degree). */
  std::vector<std::vector<Rational>> powers;
};

/**
 * @brief Returns the interned context of conductor @p m.
 * @throws Error "invalid-conductor" when m < 1.
 */
const FieldCtx* make_field(int m);

/** @brief Euler's totient. */
int euler_phi(int m);

/** @brief Element of Q(zeta_m); a null field pointer means "rational". */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v) : c0_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : c0_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long n, long long d) : c0_(n, d) {}
  /** @brief Builds sum_k coeffs[k] zeta_m^k and reduces it. */
  Scalar(const FieldCtx* f, std::vector<Rational> coeffs);

  Scalar(const Scalar& o);
  Scalar(Scalar&& o) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&& o) noexcept = default;

  bool is_zero() const { return c0_.is_zero() && !hi_; }
  bool is_one() const { return c0_.is_one() && !hi_; }
  bool is_rational() const { return !hi_; }
  /** @brief Rational value; requires is_rational(). */
  const Rational& rational() const;
  const FieldCtx* field() const { return f_; }
  /** @brief Coefficient of zeta_m^k (0 beyond the stored range). */
  Rational coeff(int k) const;
  /** @brief Number of stored coefficients (1 for rationals). */
  int length() const { return 1 + (hi_ ? static_cast<int>(hi_->size()) : 0); }

  Scalar operator-() const;
  Scalar inv() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  /** @brief this += a*b without building the temporary when both are rational. */
  void add_mul(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /** @brief Canonical literal: rationals as "p/q", otherwise sums of "c*zeta(m)^k". */
  std::string str() const;

 private:
  static Scalar from_poly(const FieldCtx* f, std::vector<Rational> poly);
  void trim();
  const FieldCtx* f_ = nullptr;
  Rational c0_;
  std::unique_ptr<std::vector<Rational>> hi_;
};

/**
 * @brief zeta_k^j inside @p f.
 * @throws Error "root-not-in-field" unless k divides f->m.
 */
Scalar root_of_unity(const FieldCtx* f, int k, long long j);

/** @brief Integer power (negative exponents invert). */
Scalar pow(const Scalar& a, long long e);

}  // namespace gsym
