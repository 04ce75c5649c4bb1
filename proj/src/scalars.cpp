/**
 * @file scalars.cpp
 * @brief Rational and cyclotomic arithmetic.
 */
#include "gsym/scalars.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gsym/error.hpp"

namespace gsym {

namespace {

using i128 = __int128;

constexpr long long kLimit = 1LL << 62;

bool fits(i128 v) { return v > -static_cast<i128>(kLimit) && v < static_cast<i128>(kLimit); }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(long long n) {
  if (fits(n)) {
    n_ = n;
  } else {
    set_from_mpq(mpq_class(mpz_class(std::to_string(n))));
  }
}

Rational::Rational(long long n, long long d) {
  require(d != 0, "internal-error", "rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  if (fits(nn) && fits(dd)) {
    n_ = static_cast<long long>(nn);
    d_ = static_cast<long long>(dd);
  } else {
    mpq_class q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
    q.canonicalize();
    set_from_mpq(q);
  }
}

Rational::Rational(const mpq_class& q) { set_from_mpq(q); }

Rational::Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    n_ = o.n_;
    d_ = o.d_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

void Rational::set_from_mpq(const mpq_class& q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (num.fits_slong_p() && den.fits_slong_p() && fits(num.get_si()) && fits(den.get_si())) {
    n_ = num.get_si();
    d_ = den.get_si();
    big_.reset();
  } else {
    n_ = 0;
    d_ = 1;
    big_ = std::make_unique<mpq_class>(q);
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
  return q;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

long long Rational::to_int() const {
  require(is_integer(), "internal-error", "rational " + str() + " is not an integer");
  require(!big_, "internal-error", "integer " + str() + " exceeds machine range");
  return n_;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.set_from_mpq(-*big_);
  } else {
    r.n_ = -n_;
    r.d_ = d_;
  }
  return r;
}

Rational Rational::inv() const {
  require(!is_zero(), "internal-error", "division by zero");
  if (big_) {
    Rational r;
    r.set_from_mpq(1 / *big_);
    return r;
  }
  Rational r;
  r.n_ = n_ < 0 ? -d_ : d_;
  r.d_ = n_ < 0 ? -n_ : n_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      i128 s = static_cast<i128>(a.n_) + b.n_;
      if (fits(s)) {
        Rational r;
        r.n_ = static_cast<long long>(s);
        return r;
      }
    } else {
      i128 num = static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_;
      i128 den = static_cast<i128>(a.d_) * b.d_;
      i128 g = gcd128(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
      if (num == 0) return Rational();
      if (fits(num) && fits(den)) {
        Rational r;
        r.n_ = static_cast<long long>(num);
        r.d_ = static_cast<long long>(den);
        return r;
      }
    }
  }
  Rational r;
  r.set_from_mpq(a.to_mpq() + b.to_mpq());
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.n_ == 0 || b.n_ == 0) return Rational();
    i128 g1 = gcd128(a.n_, b.d_);
    i128 g2 = gcd128(b.n_, a.d_);
    i128 num = (static_cast<i128>(a.n_) / g1) * (static_cast<i128>(b.n_) / g2);
    i128 den = (static_cast<i128>(a.d_) / g2) * (static_cast<i128>(b.d_) / g1);
    if (fits(num) && fits(den)) {
      Rational r;
      r.n_ = static_cast<long long>(num);
      r.d_ = static_cast<long long>(den);
      return r;
    }
  }
  Rational r;
  r.set_from_mpq(a.to_mpq() * b.to_mpq());
  return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
  return a.to_mpq() < b.to_mpq();
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

// ---------------------------------------------------------------- fields

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/** Exact division of polynomials where the divisor is monic. */
Poly poly_div_monic(Poly num, const Poly& den) {
  poly_trim(num);
  const int dn = static_cast<int>(den.size()) - 1;
  if (static_cast<int>(num.size()) - 1 < dn) return {};
  Poly q(num.size() - den.size() + 1);
  for (int k = static_cast<int>(num.size()) - 1; k >= dn; --k) {
    Rational c = num[k];
    if (c.is_zero()) continue;
    q[k - dn] = c;
    for (int i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

Poly cyclotomic_poly(int m, std::map<int, Poly>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  Poly p(m + 1);
  p[0] = Rational(-1);
  p[m] = Rational(1);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_div_monic(p, cyclotomic_poly(d, memo));
  }
  poly_trim(p);
  memo[m] = p;
  return p;
}

/** Reduces a polynomial modulo the monic minimal polynomial in place. */
void reduce_mod(Poly& p, const FieldCtx& f) {
  const int deg = f.degree;
  for (int k = static_cast<int>(p.size()) - 1; k >= deg; --k) {
    if (p[k].is_zero()) continue;
    Rational c = p[k];
    for (int i = 0; i <= deg; ++i) p[k - deg + i] -= c * f.minpoly[i];
  }
  if (static_cast<int>(p.size()) > deg) p.resize(deg);
  poly_trim(p);
}

}  // namespace

const FieldCtx* make_field(int m) {
  require(m >= 1, "invalid-conductor", "conductor must be a positive integer, got " + std::to_string(m));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(m);
  if (it != registry.end()) return it->second.get();
  auto f = std::make_unique<FieldCtx>();
  f->m = m;
  f->degree = euler_phi(m);
  std::map<int, Poly> memo;
  f->minpoly = cyclotomic_poly(m, memo);
  const int count = std::max(m, 2 * f->degree);
  for (int k = 0; k < count; ++k) {
    Poly p(k + 1);
    p[k] = Rational(1);
    reduce_mod(p, *f);
    f->powers.push_back(p);
  }
  const FieldCtx* out = f.get();
  registry[m] = std::move(f);
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Scalar& o) : f_(o.f_), c0_(o.c0_) {
  if (o.hi_) hi_ = std::make_unique<std::vector<Rational>>(*o.hi_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this != &o) {
    f_ = o.f_;
    c0_ = o.c0_;
    hi_ = o.hi_ ? std::make_unique<std::vector<Rational>>(*o.hi_) : nullptr;
  }
  return *this;
}

Scalar::Scalar(const FieldCtx* f, std::vector<Rational> coeffs) { *this = from_poly(f, std::move(coeffs)); }

Scalar Scalar::from_poly(const FieldCtx* f, std::vector<Rational> poly) {
  if (f) reduce_mod(poly, *f);
  poly_trim(poly);
  Scalar s;
  s.f_ = f;
  if (!poly.empty()) s.c0_ = poly[0];
  if (poly.size() > 1) {
    require(f != nullptr, "internal-error", "polynomial scalar without a field context");
    s.hi_ = std::make_unique<std::vector<Rational>>(poly.begin() + 1, poly.end());
  }
  return s;
}

void Scalar::trim() {
  if (!hi_) return;
  while (!hi_->empty() && hi_->back().is_zero()) hi_->pop_back();
  if (hi_->empty()) hi_.reset();
}

const Rational& Scalar::rational() const {
  require(!hi_, "internal-error", "scalar " + str() + " is not rational");
  return c0_;
}

Rational Scalar::coeff(int k) const {
  if (k == 0) return c0_;
  if (!hi_ || k - 1 >= static_cast<int>(hi_->size())) return Rational();
  return (*hi_)[k - 1];
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.f_ = f_;
  r.c0_ = -c0_;
  if (hi_) {
    r.hi_ = std::make_unique<std::vector<Rational>>(*hi_);
    for (auto& c : *r.hi_) c = -c;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  c0_ += b.c0_;
  if (b.hi_) {
    if (!f_) f_ = b.f_;
    if (!hi_) hi_ = std::make_unique<std::vector<Rational>>();
    if (hi_->size() < b.hi_->size()) hi_->resize(b.hi_->size());
    for (size_t i = 0; i < b.hi_->size(); ++i) (*hi_)[i] += (*b.hi_)[i];
    trim();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  c0_ -= b.c0_;
  if (b.hi_) {
    if (!f_) f_ = b.f_;
    if (!hi_) hi_ = std::make_unique<std::vector<Rational>>();
    if (hi_->size() < b.hi_->size()) hi_->resize(b.hi_->size());
    for (size_t i = 0; i < b.hi_->size(); ++i) (*hi_)[i] -= (*b.hi_)[i];
    trim();
  }
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r(a);
  r += b;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r(a);
  r -= b;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.hi_ && !b.hi_) {
    Scalar r(a.c0_ * b.c0_);
    r.f_ = a.f_ ? a.f_ : b.f_;
    return r;
  }
  if (!a.hi_ || !b.hi_) {
    const Scalar& poly = a.hi_ ? a : b;
    const Rational& c = a.hi_ ? b.c0_ : a.c0_;
    if (c.is_zero()) return Scalar();
    Scalar r(poly);
    r.c0_ *= c;
    for (auto& x : *r.hi_) x *= c;
    return r;
  }
  const FieldCtx* f = a.f_ ? a.f_ : b.f_;
  require(a.f_ == b.f_ || !a.f_ || !b.f_, "internal-error", "mixing scalars of different cyclotomic fields");
  const int la = a.length(), lb = b.length();
  std::vector<Rational> prod(la + lb - 1);
  for (int i = 0; i < la; ++i) {
    Rational ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (int j = 0; j < lb; ++j) {
      Rational bj = b.coeff(j);
      if (!bj.is_zero()) prod[i + j] += ai * bj;
    }
  }
  return Scalar::from_poly(f, std::move(prod));
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (!a.hi_ && !b.hi_) {
    if (a.c0_.is_zero() || b.c0_.is_zero()) return;
    c0_ += a.c0_ * b.c0_;
    if (!f_) f_ = a.f_ ? a.f_ : b.f_;
    return;
  }
  *this += a * b;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.c0_ == b.c0_)) return false;
  if (!a.hi_ || !b.hi_) return !a.hi_ && !b.hi_;
  return *a.hi_ == *b.hi_;
}

Scalar Scalar::inv() const {
  require(!is_zero(), "internal-error", "inverse of zero scalar");
  if (!hi_) {
    Scalar r(c0_.inv());
    r.f_ = f_;
    return r;
  }
  // Solve (this * x) = 1 via the multiplication matrix in the power basis.
  const int d = f_->degree;
  std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d + 1));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> basis(j + 1);
    basis[j] = Rational(1);
    Scalar col = *this * from_poly(f_, basis);
    for (int i = 0; i < d; ++i) mat[i][j] = col.coeff(i);
  }
  mat[0][d] = Rational(1);
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r = c; r < d; ++r) {
      if (!mat[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    require(piv >= 0, "internal-error", "singular multiplication matrix in cyclotomic inverse");
    std::swap(mat[piv], mat[c]);
    Rational iv = mat[c][c].inv();
    for (auto& x : mat[c]) x *= iv;
    for (int r = 0; r < d; ++r) {
      if (r == c || mat[r][c].is_zero()) continue;
      Rational fct = mat[r][c];
      for (int k = c; k <= d; ++k) mat[r][k] -= fct * mat[c][k];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = mat[i][d];
  return from_poly(f_, std::move(x));
}

std::string Scalar::str() const {
  if (!hi_) return c0_.str();
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < length(); ++k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << "zeta(" << f_->m << ")^" << k;
    }
  }
  return os.str();
}

Scalar root_of_unity(const FieldCtx* f, int k, long long j) {
  require(f != nullptr, "internal-error", "missing field context");
  require(k >= 1 && f->m % k == 0, "root-not-in-field",
          "zeta(" + std::to_string(k) + ") is not in Q(zeta(" + std::to_string(f->m) + "))");
  long long e = ((j % k) + k) % k;
  e *= f->m / k;
  return Scalar(f, f->powers[static_cast<size_t>(e)]);
}

Scalar pow(const Scalar& a, long long e) {
  if (e < 0) return pow(a.inv(), -e);
  Scalar result(1);
  Scalar base(a);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace gsym
