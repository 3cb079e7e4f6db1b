#pragma once

// Independent reference computations for the test suites. Everything here works on
// dense arrays with GMP rationals or on raw structure constants, never through the
// library's sparse elimination, charts or complex builders.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hopfcyclic/hopf.hpp"
#include "hopfcyclic/rational.hpp"

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;  // row-major

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<Q>(c, Q(0))); }

inline Dense identity(std::size_t n) {
  Dense m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline std::size_t cols_of(const Dense& m, std::size_t fallback = 0) { return m.empty() ? fallback : m[0].size(); }

inline Dense mul(const Dense& a, const Dense& b, std::size_t inner) {
  const std::size_t r = a.size(), c = cols_of(b);
  Dense out = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline Dense transpose(const Dense& a, std::size_t cols) {
  Dense t = zeros(cols, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Dense& m) {
  std::vector<std::size_t> piv;
  const std::size_t rows = m.size(), cols = cols_of(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t rank(Dense m) { return rref(m).size(); }

/// Kernel basis as columns of a cols x k matrix.
inline Dense kernel(Dense m, std::size_t cols) {
  auto piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_piv[c]) free.push_back(c);
  Dense k = zeros(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k[free[f]][f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) k[piv[r]][f] = -m[r][free[f]];
  }
  return k;
}

// ---------------------------------------------------------------------------
// The cocyclic module of an algebra: C^n = functionals on A^{(x)(n+1)}, with
//   delta_i f(a_0..a_n) = f(.., a_i a_{i+1}, ..)   (i < n)
//   delta_n f(a_0..a_n) = f(a_n a_0, a_1, .., a_{n-1})
//   sigma_i f(a_0..a_n) = f(a_0, .., a_i, 1, a_{i+1}, .., a_n)
//   tau_n  f(a_0..a_n) = f(a_n, a_0, .., a_{n-1})
// Functionals are coordinate vectors in the dual basis; the first tensor factor is the
// most significant digit.

/// Sparse library matrix as a dense GMP matrix.
inline Dense dense(const hopfcyclic::Matrix<hopfcyclic::Rational>& m) {
  Dense d = zeros(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, v] : m.col(j)) d[i][j] = v.to_mpq();
  return d;
}

struct DenseAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<Q>> mult;  // mult[i*dim+j][k]: coefficient of e_k in e_i e_j
  std::vector<Q> unit;
};

inline DenseAlgebra to_dense(const hopfcyclic::AlgebraData<hopfcyclic::Rational>& a) {
  DenseAlgebra d;
  d.dim = a.dim;
  for (const auto& v : a.mult) {
    std::vector<Q> row(a.dim, Q(0));
    for (const auto& [k, c] : v) row[k] = c.to_mpq();
    d.mult.push_back(row);
  }
  d.unit.assign(a.dim, Q(0));
  for (const auto& [k, c] : a.unit) d.unit[k] = c.to_mpq();
  return d;
}

inline std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

inline std::vector<std::size_t> digits(std::size_t x, std::size_t len, std::size_t base) {
  std::vector<std::size_t> d(len);
  for (std::size_t i = len; i-- > 0;) {
    d[i] = x % base;
    x /= base;
  }
  return d;
}

inline std::size_t undigits(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t x = 0;
  for (auto v : d) x = x * base + v;
  return x;
}

/// Matrix of the linear map A^{(x) src_len} -> A^{(x) tgt_len} given on basis tuples.
using TupleMap = std::function<std::vector<std::pair<std::vector<std::size_t>, Q>>(const std::vector<std::size_t>&)>;

inline Dense tensor_matrix(const DenseAlgebra& a, std::size_t src_len, std::size_t tgt_len, const TupleMap& f) {
  const std::size_t rows = power(a.dim, tgt_len), cols = power(a.dim, src_len);
  Dense m = zeros(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [t, v] : f(digits(c, src_len, a.dim))) m[undigits(t, a.dim)][c] += v;
  return m;
}

/// Precomposition with P: A^{(x) n+1} -> A^{(x) n} acting on functionals, i.e. P^T.
struct CocyclicOracle {
  DenseAlgebra a;

  std::size_t dim(std::size_t n) const { return power(a.dim, n + 1); }

  Dense face(std::size_t n, std::size_t i) const {  // C^{n-1} -> C^n
    auto p = tensor_matrix(a, n + 1, n, [&](const std::vector<std::size_t>& t) {
      std::vector<std::pair<std::vector<std::size_t>, Q>> out;
      if (i < n) {
        for (std::size_t k = 0; k < a.dim; ++k) {
          const Q& c = a.mult[t[i] * a.dim + t[i + 1]][k];
          if (c == 0) continue;
          std::vector<std::size_t> u(t.begin(), t.begin() + static_cast<long>(i));
          u.push_back(k);
          u.insert(u.end(), t.begin() + static_cast<long>(i) + 2, t.end());
          out.emplace_back(u, c);
        }
      } else {
        for (std::size_t k = 0; k < a.dim; ++k) {
          const Q& c = a.mult[t[n] * a.dim + t[0]][k];
          if (c == 0) continue;
          std::vector<std::size_t> u{k};
          u.insert(u.end(), t.begin() + 1, t.begin() + static_cast<long>(n));
          out.emplace_back(u, c);
        }
      }
      return out;
    });
    return transpose(p, power(a.dim, n + 1));
  }

  Dense degeneracy(std::size_t n, std::size_t i) const {  // C^{n+1} -> C^n
    auto p = tensor_matrix(a, n + 1, n + 2, [&](const std::vector<std::size_t>& t) {
      std::vector<std::pair<std::vector<std::size_t>, Q>> out;
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (a.unit[k] == 0) continue;
        std::vector<std::size_t> u(t.begin(), t.begin() + static_cast<long>(i) + 1);
        u.push_back(k);
        u.insert(u.end(), t.begin() + static_cast<long>(i) + 1, t.end());
        out.emplace_back(u, a.unit[k]);
      }
      return out;
    });
    return transpose(p, power(a.dim, n + 1));
  }

  Dense cyclic(std::size_t n) const {
    auto p = tensor_matrix(a, n + 1, n + 1, [&](const std::vector<std::size_t>& t) {
      std::vector<std::size_t> u{t[n]};
      u.insert(u.end(), t.begin(), t.begin() + static_cast<long>(n));
      return std::vector<std::pair<std::vector<std::size_t>, Q>>{{u, Q(1)}};
    });
    return transpose(p, power(a.dim, n + 1));
  }

  /// b: C^n -> C^{n+1}.
  Dense b(std::size_t n) const {
    Dense out = zeros(dim(n + 1), dim(n));
    for (std::size_t i = 0; i <= n + 1; ++i) {
      Dense f = face(n + 1, i);
      Q s = i % 2 == 0 ? 1 : -1;
      for (std::size_t r = 0; r < out.size(); ++r)
        for (std::size_t c = 0; c < dim(n); ++c) out[r][c] += s * f[r][c];
    }
    return out;
  }

  /// dim Ker(b_n) cap Ker(1 - lambda_n) minus dim b(Ker(1 - lambda_{n-1})).
  std::size_t hc(std::size_t n) const {
    auto one_minus_lambda = [&](std::size_t m) {
      Dense t = cyclic(m);
      Q s = m % 2 == 0 ? 1 : -1;
      Dense out = identity(dim(m));
      for (std::size_t r = 0; r < dim(m); ++r)
        for (std::size_t c = 0; c < dim(m); ++c) out[r][c] -= s * t[r][c];
      return out;
    };
    Dense stacked = b(n);
    for (auto& row : one_minus_lambda(n)) stacked.push_back(row);
    std::size_t z = dim(n) - rank(stacked);
    if (n == 0) return z;
    Dense k = kernel(one_minus_lambda(n - 1), dim(n - 1));
    std::size_t bdim = rank(mul(b(n - 1), k, dim(n - 1)));
    return z - bdim;
  }
};

// ---------------------------------------------------------------------------
// Modular pairs in involution from raw structure constants: delta(sigma) = 1 and
// (S_delta)^2 = Ad_sigma with S_delta(h) = delta(h1) S(h2).

template <class F>
bool is_mpi(const hopfcyclic::HopfData<F>& h, const std::vector<F>& delta, const std::vector<F>& sigma) {
  const std::size_t d = h.dim();
  F ds(0);
  for (std::size_t i = 0; i < d; ++i) ds += delta[i] * sigma[i];
  if (!(ds == F(1))) return false;
  // product of dense vectors through the structure constants
  auto prod = [&](const std::vector<F>& x, const std::vector<F>& y) {
    std::vector<F> out(d, F(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        for (const auto& [k, c] : h.algebra.mult[i * d + j]) out[k] += x[i] * y[j] * c;
      }
    }
    return out;
  };
  auto S = [&](const std::vector<F>& x) {
    std::vector<F> out(d, F(0));
    for (std::size_t j = 0; j < d; ++j)
      if (!x[j].is_zero())
        for (const auto& [k, c] : h.antipode.col(j)) out[k] += x[j] * c;
    return out;
  };
  auto S_delta = [&](const std::vector<F>& x) {
    std::vector<F> out(d, F(0));
    for (std::size_t k = 0; k < d; ++k) {
      if (x[k].is_zero()) continue;
      for (const auto& [ij, c] : h.coalgebra.comult[k]) {
        std::vector<F> e(d, F(0));
        e[ij % d] = F(1);
        auto s = S(e);
        for (std::size_t t = 0; t < d; ++t) out[t] += x[k] * c * delta[ij / d] * s[t];
      }
    }
    return out;
  };
  const auto sigma_inv = S(sigma);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<F> e(d, F(0));
    e[k] = F(1);
    auto lhs = S_delta(S_delta(e));
    auto rhs = prod(prod(sigma, e), sigma_inv);
    for (std::size_t t = 0; t < d; ++t)
      if (!(lhs[t] == rhs[t])) return false;
  }
  return true;
}

}  // namespace oracle
