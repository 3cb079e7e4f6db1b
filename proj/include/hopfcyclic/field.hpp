#pragma once

// Coefficient fields: the rationals and cyclotomic extensions Q(zeta_N).
// Every field here has characteristic zero.

#include <algorithm>
#include <concepts>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hopfcyclic {

struct FieldSpec {
  enum class Kind { rationals, cyclotomic };
  Kind kind = Kind::rationals;
  int order = 1;  // N for Q(zeta_N); 1 for Q

  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(int n) { return {Kind::cyclotomic, n}; }

  std::string str() const { return kind == Kind::rationals ? "Q" : "cyclotomic:" + std::to_string(order); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// ---------------------------------------------------------------------------
// Polynomials over Q, coefficient vectors from the constant term upwards.

using RatPoly = std::vector<Rational>;

inline void poly_trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

/// Long division; returns {quotient, remainder}.
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly num, RatPoly den) {
  poly_trim(num);
  poly_trim(den);
  if (den.empty()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
  if (num.size() < den.size()) return {{}, num};
  RatPoly quot(num.size() - den.size() + 1);
  Rational lead_inv = den.back().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = num[k + den.size() - 1] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  poly_trim(quot);
  poly_trim(num);
  return {quot, num};
}

/// Phi_N, obtained by dividing x^N - 1 by Phi_d for every proper divisor d of N.
inline RatPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::shape_mismatch, "cyclotomic order must be positive");
  RatPoly p(static_cast<std::size_t>(n) + 1);
  p[0] = Rational(-1);
  p[static_cast<std::size_t>(n)] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly_divmod(p, cyclotomic_polynomial(d));
    if (!r.empty()) throw Error(ErrorCode::defect, "inexact cyclotomic division");
    p = std::move(q);
  }
  return p;
}

inline int euler_totient(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

// ---------------------------------------------------------------------------

class RationalField {
 public:
  using value_type = Rational;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  Rational zero() const { return {}; }
  Rational one() const { return Rational(1); }
  Rational from_int(long long v) const { return Rational(v); }

  /// Every root of unity contained in Q.
  std::vector<Rational> roots_of_unity() const { return {Rational(1), Rational(-1)}; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

namespace detail {

struct CyclotomicContext {
  int order = 1;
  int degree = 1;
  RatPoly modulus;
  // powers[k] = x^k mod Phi_N for 0 <= k <= 2*degree - 2
  std::vector<RatPoly> powers;

  explicit CyclotomicContext(int n) : order(n), modulus(cyclotomic_polynomial(n)) {
    degree = static_cast<int>(modulus.size()) - 1;
    std::size_t count = static_cast<std::size_t>(std::max(1, 2 * degree - 1));
    powers.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      RatPoly mono(k + 1);
      mono[k] = Rational(1);
      auto rem = poly_divmod(mono, modulus).second;
      rem.resize(static_cast<std::size_t>(degree));
      powers.push_back(std::move(rem));
    }
  }
};

}  // namespace detail

class CyclotomicField;

/// Element of Q(zeta_N) as a residue modulo Phi_N. A value without a context is a
/// plain rational constant (what `Cyclotomic(3)` produces) and combines with any field.
class Cyclotomic {
 public:
  using field_type = CyclotomicField;

  Cyclotomic() = default;
  Cyclotomic(long long v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) c_.push_back(Rational(v));
  }
  Cyclotomic(int v) : Cyclotomic(static_cast<long long>(v)) {}  // NOLINT
  Cyclotomic(Rational v) {  // NOLINT
    if (!v.is_zero()) c_.push_back(std::move(v));
  }
  Cyclotomic(std::shared_ptr<const detail::CyclotomicContext> ctx, RatPoly coeffs)
      : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (ctx_ && static_cast<int>(c_.size()) > ctx_->degree) c_ = reduce(c_, *ctx_);
    poly_trim(c_);
  }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_rational() const noexcept { return c_.size() <= 1; }
  int order() const noexcept { return ctx_ ? ctx_->order : 0; }
  const std::shared_ptr<const detail::CyclotomicContext>& context() const noexcept { return ctx_; }

  /// Coefficient of zeta^k.
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  const RatPoly& coeffs() const noexcept { return c_; }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto ctx = merge(a, b);
    RatPoly out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    poly_trim(out);
    Cyclotomic r;
    r.ctx_ = std::move(ctx);
    r.c_ = std::move(out);
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto ctx = merge(a, b);
    if (a.is_zero() || b.is_zero()) return Cyclotomic(ctx, {});
    if (a.is_rational() || b.is_rational()) {
      const Cyclotomic& s = a.is_rational() ? a : b;
      const Cyclotomic& v = a.is_rational() ? b : a;
      RatPoly out = v.c_;
      for (auto& x : out) x *= s.c_[0];
      return Cyclotomic(ctx, std::move(out));
    }
    RatPoly prod = poly_mul(a.c_, b.c_);
    return Cyclotomic(ctx, reduce(prod, *ctx));
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
    if (is_rational()) return Cyclotomic(ctx_, {c_[0].inverse()});
    // Solve (multiplication by *this) * x = 1 over Q.
    const int d = ctx_->degree;
    std::vector<RatPoly> rows(static_cast<std::size_t>(d), RatPoly(static_cast<std::size_t>(d) + 1));
    for (int j = 0; j < d; ++j) {
      RatPoly mono(static_cast<std::size_t>(j) + 1);
      mono[static_cast<std::size_t>(j)] = Rational(1);
      RatPoly col = reduce(poly_mul(c_, mono), *ctx_);
      col.resize(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    }
    rows[0][static_cast<std::size_t>(d)] = Rational(1);
    for (int col = 0; col < d; ++col) {
      int piv = -1;
      for (int r = col; r < d; ++r)
        if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) throw Error(ErrorCode::defect, "singular multiplication map in cyclotomic field");
      std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(piv)]);
      auto& prow = rows[static_cast<std::size_t>(col)];
      Rational inv = prow[static_cast<std::size_t>(col)].inverse();
      for (auto& x : prow) x *= inv;
      for (int r = 0; r < d; ++r) {
        if (r == col) continue;
        auto& row = rows[static_cast<std::size_t>(r)];
        Rational f = row[static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int k = 0; k <= d; ++k) row[static_cast<std::size_t>(k)] -= f * prow[static_cast<std::size_t>(k)];
      }
    }
    RatPoly x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
    return Cyclotomic(ctx_, std::move(x));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (!a.is_rational() && !b.is_rational()) merge(a, b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    if (is_rational()) return c_[0].str();
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      std::string term = c_[k].str();
      std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
      if (k > 0 && term == "1") term = mono;
      else if (k > 0 && term == "-1") term = "-" + mono;
      else if (k > 0) term += "*" + mono;
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

 private:
  static std::shared_ptr<const detail::CyclotomicContext> merge(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && a.ctx_->order != b.ctx_->order)
      throw Error(ErrorCode::field_mismatch, "Q(zeta_" + std::to_string(a.ctx_->order) + ") vs Q(zeta_" +
                                                 std::to_string(b.ctx_->order) + ")");
    return a.ctx_ ? a.ctx_ : b.ctx_;
  }

  static RatPoly reduce(const RatPoly& p, const detail::CyclotomicContext& ctx) {
    RatPoly out(static_cast<std::size_t>(ctx.degree));
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k].is_zero()) continue;
      if (k < ctx.powers.size()) {
        const auto& pw = ctx.powers[k];
        for (std::size_t i = 0; i < pw.size(); ++i)
          if (!pw[i].is_zero()) out[i] += p[k] * pw[i];
      } else {
        RatPoly mono(k + 1);
        mono[k] = p[k];
        auto rem = poly_divmod(mono, ctx.modulus).second;
        for (std::size_t i = 0; i < rem.size(); ++i) out[i] += rem[i];
      }
    }
    poly_trim(out);
    return out;
  }

  std::shared_ptr<const detail::CyclotomicContext> ctx_;
  RatPoly c_;
};

class CyclotomicField {
 public:
  using value_type = Cyclotomic;

  explicit CyclotomicField(int n) : ctx_(std::make_shared<const detail::CyclotomicContext>(n)) {
    if (n < 1) throw Error(ErrorCode::shape_mismatch, "cyclotomic order must be positive");
  }

  FieldSpec spec() const { return FieldSpec::cyclotomic(ctx_->order); }
  int order() const { return ctx_->order; }
  int degree() const { return ctx_->degree; }
  const RatPoly& modulus() const { return ctx_->modulus; }

  Cyclotomic zero() const { return Cyclotomic(ctx_, {}); }
  Cyclotomic one() const { return Cyclotomic(ctx_, {Rational(1)}); }
  Cyclotomic from_int(long long v) const { return Cyclotomic(ctx_, {Rational(v)}); }
  Cyclotomic from_coeffs(RatPoly coeffs) const { return Cyclotomic(ctx_, std::move(coeffs)); }

  /// zeta_N^k (k may be negative).
  Cyclotomic root_of_unity(long long k) const {
    long long n = ctx_->order;
    long long e = ((k % n) + n) % n;
    RatPoly mono(static_cast<std::size_t>(e) + 1);
    mono[static_cast<std::size_t>(e)] = Rational(1);
    return Cyclotomic(ctx_, std::move(mono));
  }
  Cyclotomic zeta() const { return root_of_unity(1); }

  /// Every root of unity in Q(zeta_N): the powers of zeta_N and their negatives.
  std::vector<Cyclotomic> roots_of_unity() const {
    std::vector<Cyclotomic> out;
    for (int sign : {1, -1})
      for (int k = 0; k < ctx_->order; ++k) {
        Cyclotomic z = root_of_unity(k);
        if (sign < 0) z = -z;
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
      }
    return out;
  }

  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) { return a.order() == b.order(); }

 private:
  std::shared_ptr<const detail::CyclotomicContext> ctx_;
};

/// Requirements on a coefficient type used throughout the library.
template <class F>
concept ExactScalar = requires(F a, F b) {
  typename F::field_type;
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<F>;
  { a.str() } -> std::convertible_to<std::string>;
  F(1);
};

}  // namespace hopfcyclic
