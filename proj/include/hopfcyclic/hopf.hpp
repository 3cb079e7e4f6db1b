#pragma once

// Finite-dimensional Hopf algebras given by structure constants, with axiom checks,
// antipode inversion, op/cop variants, duals, characters and grouplikes.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "check_report.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "sparse.hpp"

namespace hopfcyclic {

template <class F>
using Vec = SparseVec<F>;

template <class F>
struct AlgebraData {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Vec<F>> mult;  // e_i e_j at i * dim + j
  Vec<F> unit;
};

template <class F>
struct CoalgebraData {
  std::size_t dim = 0;
  std::vector<Vec<F>> comult;  // Delta(e_k) over pair index i * dim + j
  std::vector<F> counit;
};

template <class F>
struct HopfData {
  using Field = typename F::field_type;

  Field field;
  AlgebraData<F> algebra;
  CoalgebraData<F> coalgebra;
  Matrix<F> antipode;
  std::optional<Matrix<F>> antipode_inverse;

  std::size_t dim() const { return algebra.dim; }
  const std::vector<std::string>& labels() const { return algebra.labels; }
  const Vec<F>& unit() const { return algebra.unit; }

  const Vec<F>& mul_basis(std::size_t i, std::size_t j) const { return algebra.mult[i * dim() + j]; }

  Vec<F> mul(const Vec<F>& a, const Vec<F>& b) const {
    std::vector<typename Vec<F>::Entry> t;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) {
        F s = x * y;
        for (const auto& [k, c] : mul_basis(i, j)) t.emplace_back(k, s * c);
      }
    return Vec<F>::from_terms(std::move(t));
  }

  Vec<F> basis(std::size_t i) const { return Vec<F>::unit(i); }

  /// Delta(a) as a vector on H (x) H.
  Vec<F> comult(const Vec<F>& a) const {
    std::vector<typename Vec<F>::Entry> t;
    for (const auto& [k, x] : a)
      for (const auto& [ij, c] : coalgebra.comult[k]) t.emplace_back(ij, x * c);
    return Vec<F>::from_terms(std::move(t));
  }

  F counit(const Vec<F>& a) const {
    F s(0);
    for (const auto& [k, x] : a) s += x * coalgebra.counit[k];
    return s;
  }

  Vec<F> S(const Vec<F>& a) const { return antipode.apply(a); }
  Vec<F> Sinv(const Vec<F>& a) const {
    if (!antipode_inverse) throw Error(ErrorCode::unchecked_prereq, "antipode inverse not computed");
    return antipode_inverse->apply(a);
  }

  /// Delta(e_k) as (i, j, coefficient) triples.
  std::vector<std::tuple<std::size_t, std::size_t, F>> delta(std::size_t k) const {
    std::vector<std::tuple<std::size_t, std::size_t, F>> out;
    for (const auto& [ij, c] : coalgebra.comult[k]) out.emplace_back(ij / dim(), ij % dim(), c);
    return out;
  }

  /// (Delta (x) id) Delta(e_k) as (i, j, l, coefficient).
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, F>> delta2(std::size_t k) const {
    std::vector<typename Vec<F>::Entry> t;
    const std::size_t d = dim();
    for (const auto& [a, b, c] : delta(k))
      for (const auto& [ij, c2] : coalgebra.comult[a]) t.emplace_back(ij * d + b, c * c2);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, F>> out;
    const Vec<F> summed = Vec<F>::from_terms(std::move(t));
    for (const auto& [idx, c] : summed)
      out.emplace_back(idx / (d * d), (idx / d) % d, idx % d, c);
    return out;
  }

  /// Left multiplication by a, as a dim x dim matrix.
  Matrix<F> left_mult(const Vec<F>& a) const {
    Matrix<F> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(a, basis(j)));
    return m;
  }
  Matrix<F> right_mult(const Vec<F>& a) const {
    Matrix<F> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(basis(j), a));
    return m;
  }

  HopfData& ensure_antipode_inverse();
};

// ---------------------------------------------------------------------------
// Structure checks

enum class StructureKind { algebra, coalgebra, bialgebra, hopf };

namespace detail {

inline std::string tuple_str(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += idx[k] < labels.size() ? labels[idx[k]] : std::to_string(idx[k]);
  }
  return s + ")";
}

template <class F>
void check_vec_shape(const Vec<F>& v, std::size_t bound, const char* what) {
  if (!v.empty() && v.entries().back().first >= bound)
    throw Error(ErrorCode::shape_mismatch, std::string(what) + " index out of range");
}

template <class F>
void validate_shape(const HopfData<F>& h, StructureKind kind) {
  const std::size_t d = h.algebra.dim;
  bool need_alg = kind != StructureKind::coalgebra;
  bool need_coalg = kind != StructureKind::algebra;
  if (d == 0) throw Error(ErrorCode::shape_mismatch, "dimension zero");
  if (!h.algebra.labels.empty() && h.algebra.labels.size() != d)
    throw Error(ErrorCode::shape_mismatch, "label count differs from dimension");
  if (need_alg) {
    if (h.algebra.mult.size() != d * d) throw Error(ErrorCode::shape_mismatch, "multiplication table size");
    for (const auto& v : h.algebra.mult) check_vec_shape(v, d, "multiplication");
    check_vec_shape(h.algebra.unit, d, "unit");
  }
  if (need_coalg) {
    if (h.coalgebra.dim != d) throw Error(ErrorCode::shape_mismatch, "coalgebra dimension differs");
    if (h.coalgebra.comult.size() != d) throw Error(ErrorCode::shape_mismatch, "comultiplication table size");
    for (const auto& v : h.coalgebra.comult) check_vec_shape(v, d * d, "comultiplication");
    if (h.coalgebra.counit.size() != d) throw Error(ErrorCode::shape_mismatch, "counit length");
  }
  if (kind == StructureKind::hopf && (h.antipode.rows() != d || h.antipode.cols() != d))
    throw Error(ErrorCode::shape_mismatch, "antipode is not dim x dim");
}

template <class F>
Vec<F> tensor_mul(const HopfData<F>& h, const Vec<F>& x, const Vec<F>& y) {
  const std::size_t d = h.dim();
  std::vector<typename Vec<F>::Entry> t;
  for (const auto& [ab, s] : x)
    for (const auto& [ce, r] : y) {
      const auto& p = h.mul_basis(ab / d, ce / d);
      const auto& q = h.mul_basis(ab % d, ce % d);
      F sr = s * r;
      for (const auto& [i, u] : p)
        for (const auto& [j, v] : q) t.emplace_back(i * d + j, sr * u * v);
    }
  return Vec<F>::from_terms(std::move(t));
}

}  // namespace detail

template <class F>
CheckReport check_structure(StructureKind kind, const HopfData<F>& h) {
  detail::validate_shape(h, kind);
  CheckReport rep;
  const std::size_t d = h.dim();
  const auto& L = h.algebra.labels;
  using detail::tuple_str;

  if (kind != StructureKind::coalgebra) {
    auto& assoc = rep.add("associativity");
    for (std::size_t i = 0; i < d && assoc.pass; ++i)
      for (std::size_t j = 0; j < d && assoc.pass; ++j)
        for (std::size_t k = 0; k < d && assoc.pass; ++k) {
          Vec<F> lhs = h.mul(h.mul_basis(i, j), h.basis(k));
          Vec<F> rhs = h.mul(h.basis(i), h.mul_basis(j, k));
          if (lhs != rhs) rep.fail(assoc, {i, j, k}, tuple_str(L, {i, j, k}) + ": " + lhs.str() + " vs " + rhs.str());
        }
    auto& lu = rep.add("left_unit");
    auto& ru = rep.add("right_unit");
    for (std::size_t i = 0; i < d; ++i) {
      Vec<F> l = h.mul(h.unit(), h.basis(i));
      Vec<F> r = h.mul(h.basis(i), h.unit());
      if (l != h.basis(i)) rep.fail(lu, {i}, tuple_str(L, {i}) + ": " + l.str());
      if (r != h.basis(i)) rep.fail(ru, {i}, tuple_str(L, {i}) + ": " + r.str());
    }
  }

  if (kind != StructureKind::algebra) {
    auto& coassoc = rep.add("coassociativity");
    for (std::size_t k = 0; k < d && coassoc.pass; ++k) {
      std::vector<typename Vec<F>::Entry> lt, rt;
      for (const auto& [a, b, c] : h.delta(k)) {
        for (const auto& [ij, c2] : h.coalgebra.comult[a]) lt.emplace_back(ij * d + b, c * c2);
        for (const auto& [ij, c2] : h.coalgebra.comult[b]) rt.emplace_back(a * d * d + ij, c * c2);
      }
      Vec<F> l = Vec<F>::from_terms(std::move(lt));
      Vec<F> r = Vec<F>::from_terms(std::move(rt));
      if (l != r) rep.fail(coassoc, {k}, tuple_str(L, {k}) + ": " + l.str() + " vs " + r.str());
    }
    auto& lc = rep.add("left_counit");
    auto& rc = rep.add("right_counit");
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<typename Vec<F>::Entry> lt, rt;
      for (const auto& [a, b, c] : h.delta(k)) {
        lt.emplace_back(b, c * h.coalgebra.counit[a]);
        rt.emplace_back(a, c * h.coalgebra.counit[b]);
      }
      Vec<F> l = Vec<F>::from_terms(std::move(lt));
      Vec<F> r = Vec<F>::from_terms(std::move(rt));
      if (l != h.basis(k)) rep.fail(lc, {k}, tuple_str(L, {k}) + ": " + l.str());
      if (r != h.basis(k)) rep.fail(rc, {k}, tuple_str(L, {k}) + ": " + r.str());
    }
  }

  if (kind == StructureKind::bialgebra || kind == StructureKind::hopf) {
    auto& cm = rep.add("comult_multiplicative");
    auto& em = rep.add("counit_multiplicative");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (cm.pass) {
          Vec<F> l = h.comult(h.mul_basis(i, j));
          Vec<F> r = detail::tensor_mul(h, h.coalgebra.comult[i], h.coalgebra.comult[j]);
          if (l != r) rep.fail(cm, {i, j}, tuple_str(L, {i, j}) + ": " + l.str() + " vs " + r.str());
        }
        if (em.pass) {
          F l = h.counit(h.mul_basis(i, j));
          F r = h.coalgebra.counit[i] * h.coalgebra.counit[j];
          if (l != r) rep.fail(em, {i, j}, tuple_str(L, {i, j}) + ": " + l.str() + " vs " + r.str());
        }
      }
    auto& cu = rep.add("comult_unit");
    {
      Vec<F> l = h.comult(h.unit());
      std::vector<typename Vec<F>::Entry> t;
      for (const auto& [i, a] : h.unit())
        for (const auto& [j, b] : h.unit()) t.emplace_back(i * d + j, a * b);
      Vec<F> r = Vec<F>::from_terms(std::move(t));
      if (l != r) rep.fail(cu, {}, l.str() + " vs " + r.str());
    }
    auto& eu = rep.add("counit_unit");
    if (!h.counit(h.unit()).is_one()) rep.fail(eu, {}, h.counit(h.unit()).str());
  }

  if (kind == StructureKind::hopf) {
    auto& al = rep.add("antipode_left");
    auto& ar = rep.add("antipode_right");
    for (std::size_t k = 0; k < d; ++k) {
      Vec<F> l, r;
      for (const auto& [a, b, c] : h.delta(k)) {
        l.axpy(c, h.mul(h.S(h.basis(a)), h.basis(b)));
        r.axpy(c, h.mul(h.basis(a), h.S(h.basis(b))));
      }
      Vec<F> expect = h.unit();
      expect.scale(h.coalgebra.counit[k]);
      if (l != expect) rep.fail(al, {k}, tuple_str(L, {k}) + ": " + l.str() + " vs " + expect.str());
      if (r != expect) rep.fail(ar, {k}, tuple_str(L, {k}) + ": " + r.str() + " vs " + expect.str());
    }
    auto& bij = rep.add("antipode_bijective");
    std::size_t rk = rank(h.antipode);
    if (rk != d) rep.fail(bij, {rk}, "rank " + std::to_string(rk) + " < " + std::to_string(d));
    if (h.antipode_inverse) {
      auto& inv = rep.add("antipode_inverse");
      if (*h.antipode_inverse * h.antipode != Matrix<F>::identity(d) ||
          h.antipode * *h.antipode_inverse != Matrix<F>::identity(d))
        rep.fail(inv, {}, "cached inverse is wrong");
    }
  }
  return rep;
}

template <class F>
Matrix<F> invert_antipode(const HopfData<F>& h) {
  auto inv = inverse(h.antipode);
  if (!inv) throw Error(ErrorCode::antipode_not_bijective, "antipode is singular");
  return *inv;
}

template <class F>
HopfData<F>& HopfData<F>::ensure_antipode_inverse() {
  if (!antipode_inverse) antipode_inverse = invert_antipode(*this);
  return *this;
}

/// Convenience: fill the cached inverse and return the data.
template <class F>
HopfData<F> with_antipode_inverse(HopfData<F> h) {
  h.ensure_antipode_inverse();
  return h;
}

enum class Variant { op, cop, opcop };

template <class F>
HopfData<F> variant(const HopfData<F>& h, Variant which) {
  const std::size_t d = h.dim();
  HopfData<F> out = h;
  Matrix<F> S = h.antipode;
  Matrix<F> Si = h.antipode_inverse ? *h.antipode_inverse : invert_antipode(h);
  if (which != Variant::cop) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out.algebra.mult[i * d + j] = h.algebra.mult[j * d + i];
  }
  if (which != Variant::op) {
    for (std::size_t k = 0; k < d; ++k)
      out.coalgebra.comult[k] = h.coalgebra.comult[k].remap([d](std::size_t ij) { return (ij % d) * d + ij / d; });
  }
  if (which == Variant::opcop) {
    out.antipode = S;
    out.antipode_inverse = Si;
  } else {
    out.antipode = Si;
    out.antipode_inverse = S;
  }
  return out;
}

/// H*: product dual to Delta, coproduct dual to the product, antipode transposed.
template <class F>
HopfData<F> dual_hopf(const HopfData<F>& h) {
  const std::size_t d = h.dim();
  HopfData<F> out{h.field, {}, {}, {}, {}};
  out.algebra.dim = d;
  out.coalgebra.dim = d;
  for (std::size_t i = 0; i < d; ++i)
    out.algebra.labels.push_back(i < h.labels().size() ? "p_" + h.labels()[i] : "p_" + std::to_string(i));
  std::vector<std::vector<typename Vec<F>::Entry>> mt(d * d), ct(d);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& [ij, c] : h.coalgebra.comult[k]) mt[ij].emplace_back(k, c);
  for (std::size_t ij = 0; ij < d * d; ++ij)
    for (const auto& [k, c] : h.algebra.mult[ij]) ct[k].emplace_back(ij, c);
  for (auto& t : mt) out.algebra.mult.push_back(Vec<F>::from_terms(std::move(t)));
  for (auto& t : ct) out.coalgebra.comult.push_back(Vec<F>::from_terms(std::move(t)));
  out.algebra.unit = Vec<F>::from_dense(h.coalgebra.counit);
  out.coalgebra.counit = h.algebra.unit.to_dense(d);
  out.antipode = h.antipode.transpose();
  if (h.antipode_inverse) out.antipode_inverse = h.antipode_inverse->transpose();
  return out;
}

// ---------------------------------------------------------------------------
// Characters and grouplikes

/// Characteristic polynomial (low to high degree) by the Faddeev-LeVerrier recursion.
template <class F>
std::vector<F> characteristic_polynomial(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> m = Matrix<F>::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * Matrix<F>::identity(n);
    Matrix<F> am = a * m;
    F tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
    c[n - k] = -tr / F(static_cast<long long>(k));
  }
  return c;
}

/// Divides p by (x - r) while r is a root; returns how many times it divided.
template <class F>
int strip_root(std::vector<F>& p, const F& r) {
  int count = 0;
  while (p.size() > 1) {
    std::vector<F> q(p.size() - 1, F(0));
    F carry(0);
    for (std::size_t k = p.size(); k-- > 1;) {
      carry = p[k] + carry * r;
      q[k - 1] = carry;
    }
    F rem = p[0] + carry * r;
    if (!rem.is_zero()) break;
    p = std::move(q);
    ++count;
  }
  return count;
}

template <class F>
struct Enumeration {
  std::vector<std::vector<F>> items;  // values on the basis (characters) or coordinates (grouplikes)
  bool complete = false;
};

template <class F>
Enumeration<F> enumerate_characters(const HopfData<F>& h) {
  const std::size_t d = h.dim();
  std::vector<F> pool{F(0)};
  for (const auto& r : h.field.roots_of_unity()) pool.push_back(r);

  // delta(e_i) is an eigenvalue of left multiplication by e_i.
  bool complete = true;
  std::vector<std::vector<F>> cand(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto p = characteristic_polynomial(h.left_mult(h.basis(i)));
    for (const auto& v : pool)
      if (strip_root(p, v) > 0) cand[i].push_back(v);
    if (p.size() > 1) complete = false;
  }

  Enumeration<F> out;
  out.complete = complete;
  std::vector<F> val(d, F(0));
  auto eval = [&](const Vec<F>& v, std::size_t upto, bool& known) {
    F s(0);
    known = true;
    for (const auto& [k, c] : v) {
      if (k > upto) {
        known = false;
        return s;
      }
      s += c * val[k];
    }
    return s;
  };
  auto consistent = [&](std::size_t upto) {
    bool known = false;
    F u = eval(h.unit(), upto, known);
    if (known && !u.is_one()) return false;
    for (std::size_t i = 0; i <= upto; ++i)
      for (std::size_t j = 0; j <= upto; ++j) {
        if (i != upto && j != upto) continue;
        F lhs = eval(h.mul_basis(i, j), upto, known);
        if (known && lhs != val[i] * val[j]) return false;
      }
    // products whose result is known but one factor index exceeds upto are checked later
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      // final full check, including products with larger support indices
      bool known = true;
      if (!eval(h.unit(), d - 1, known).is_one()) return;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (eval(h.mul_basis(a, b), d - 1, known) != val[a] * val[b]) return;
      out.items.push_back(val);
      return;
    }
    for (const auto& v : cand[i]) {
      val[i] = v;
      if (consistent(i)) self(self, i + 1);
    }
    val[i] = F(0);
  };
  rec(rec, 0);
  return out;
}

template <class F>
Enumeration<F> enumerate_grouplikes(const HopfData<F>& h) {
  return enumerate_characters(dual_hopf(h));
}

template <class F>
bool is_character(const HopfData<F>& h, const std::vector<F>& delta) {
  const std::size_t d = h.dim();
  if (delta.size() != d) throw Error(ErrorCode::shape_mismatch, "character length");
  auto ev = [&](const Vec<F>& v) {
    F s(0);
    for (const auto& [k, c] : v) s += c * delta[k];
    return s;
  };
  if (!ev(h.unit()).is_one()) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (ev(h.mul_basis(i, j)) != delta[i] * delta[j]) return false;
  return true;
}

template <class F>
bool is_grouplike(const HopfData<F>& h, const Vec<F>& sigma) {
  if (h.counit(sigma) != F(1)) return false;
  const std::size_t d = h.dim();
  std::vector<typename Vec<F>::Entry> t;
  for (const auto& [i, a] : sigma)
    for (const auto& [j, b] : sigma) t.emplace_back(i * d + j, a * b);
  return h.comult(sigma) == Vec<F>::from_terms(std::move(t));
}

/// Apply a character to an element.
template <class F>
F apply_functional(const std::vector<F>& f, const Vec<F>& v) {
  F s(0);
  for (const auto& [k, c] : v) s += c * f.at(k);
  return s;
}

/// A minimal set of basis elements generating H as an algebra, chosen greedily in
/// basis order.
template <class F>
std::vector<std::size_t> algebra_generators(const HopfData<F>& h) {
  const std::size_t d = h.dim();
  std::vector<std::size_t> gens;
  auto closure_dim = [&](const std::vector<std::size_t>& g) {
    EchelonBuilder<F> eb(d);
    std::vector<Vec<F>> span{h.unit()};
    eb.insert(h.unit());
    for (std::size_t k = 0; k < span.size(); ++k)
      for (std::size_t x : g) {
        Vec<F> p = h.mul(span[k], h.basis(x));
        if (eb.insert(p)) span.push_back(p);
      }
    return eb.rank();
  };
  std::size_t current = closure_dim(gens);
  for (std::size_t i = 0; i < d && current < d; ++i) {
    auto trial = gens;
    trial.push_back(i);
    std::size_t c = closure_dim(trial);
    if (c > current) {
      gens = std::move(trial);
      current = c;
    }
  }
  return gens;
}

/// The ground field as a one-dimensional Hopf algebra.
template <class F>
HopfData<F> make_ground_hopf(typename F::field_type field = {}) {
  HopfData<F> h{field, {}, {}, {}, {}};
  h.algebra.dim = h.coalgebra.dim = 1;
  h.algebra.labels = {"1"};
  h.algebra.mult = {Vec<F>::unit(0)};
  h.algebra.unit = Vec<F>::unit(0);
  h.coalgebra.comult = {Vec<F>::unit(0)};
  h.coalgebra.counit = {F(1)};
  h.antipode = Matrix<F>::identity(1);
  h.antipode_inverse = Matrix<F>::identity(1);
  return h;
}

}  // namespace hopfcyclic
