#pragma once

// Exact elimination: kernels, images, solving, quotients and maps induced on them.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "sparse.hpp"

namespace hopfcyclic {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// An Error that also carries a vector exhibiting the failure.
template <class F>
class WitnessedError : public Error {
 public:
  WitnessedError(ErrorCode code, const std::string& what, SparseVec<F> witness, int degree = -1,
                 std::vector<std::size_t> tuple = {})
      : Error(code, what), witness_(std::move(witness)), degree_(degree), tuple_(std::move(tuple)) {}
  const SparseVec<F>& witness() const noexcept { return witness_; }
  int degree() const noexcept { return degree_; }
  /// Basis digits describing the witness, when the thrower knows them.
  const std::vector<std::size_t>& tuple() const noexcept { return tuple_; }

 private:
  SparseVec<F> witness_;
  int degree_;
  std::vector<std::size_t> tuple_;
};

/// Incremental row reduction. Rows are kept with leading coefficient 1 and no entry
/// at an earlier row's pivot; finish() brings them to fully reduced form.
template <class F>
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : n_(ambient), row_of_(ambient, npos) {}

  std::size_t ambient() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  SparseVec<F> reduce(SparseVec<F> v) const {
    std::size_t pos = 0;
    for (;;) {
      const auto& e = v.entries();
      std::size_t p = npos;
      F c;
      for (auto it = std::lower_bound(e.begin(), e.end(), pos,
                                      [](const auto& a, std::size_t k) { return a.first < k; });
           it != e.end(); ++it) {
        if (row_of_[it->first] != npos) {
          p = it->first;
          c = it->second;
          break;
        }
      }
      if (p == npos) return v;
      v.axpy(-c, rows_[row_of_[p]]);
      pos = p + 1;
    }
  }

  /// Returns true when v was independent of the rows so far.
  bool insert(const SparseVec<F>& v) {
    if (!v.empty() && v.entries().back().first >= n_) throw Error(ErrorCode::shape_mismatch, "row longer than ambient");
    SparseVec<F> r = reduce(v);
    if (r.empty()) return false;
    F inv = r.lead_coeff().inverse();
    r.scale(inv);
    row_of_[r.lead()] = rows_.size();
    pivots_.push_back(r.lead());
    rows_.push_back(std::move(r));
    reduced_ = false;
    return true;
  }

  bool in_span(const SparseVec<F>& v) const { return reduce(v).empty(); }

  /// Back-substitution; afterwards each row is zero at every other pivot. Rows are
  /// returned sorted by pivot.
  std::vector<SparseVec<F>> finish() {
    std::vector<std::size_t> order(pivots_.begin(), pivots_.end());
    std::sort(order.begin(), order.end());
    if (!reduced_) {
      for (auto k = order.size(); k-- > 0;) {
        std::size_t p = order[k];
        SparseVec<F>& row = rows_[row_of_[p]];
        std::size_t pos = p + 1;
        for (;;) {
          const auto& e = row.entries();
          std::size_t q = npos;
          F c;
          for (auto it = std::lower_bound(e.begin(), e.end(), pos,
                                          [](const auto& a, std::size_t i) { return a.first < i; });
               it != e.end(); ++it) {
            if (row_of_[it->first] != npos) {
              q = it->first;
              c = it->second;
              break;
            }
          }
          if (q == npos) break;
          row.axpy(-c, rows_[row_of_[q]]);
          pos = q + 1;
        }
      }
      reduced_ = true;
    }
    std::vector<SparseVec<F>> out;
    out.reserve(order.size());
    for (std::size_t p : order) out.push_back(rows_[row_of_[p]]);
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> row_of_;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVec<F>> rows_;
  bool reduced_ = true;
};

/// A subspace of F^n given by a basis reduced on its pivot set: basis vector k has
/// coefficient 1 at pivot k and 0 at every other pivot. Pivots increase.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient), slot_(ambient, npos) {}

  /// Caller guarantees the reduced-on-pivots shape.
  static Subspace from_reduced(std::size_t ambient, std::vector<SparseVec<F>> basis, std::vector<std::size_t> pivots) {
    Subspace s(ambient);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (k && pivots[k] <= pivots[k - 1]) throw Error(ErrorCode::defect, "subspace pivots must increase");
      s.slot_[pivots[k]] = k;
    }
    s.basis_ = std::move(basis);
    s.piv_ = std::move(pivots);
    return s;
  }

  /// Span of arbitrary vectors.
  static Subspace span(std::size_t ambient, const std::vector<SparseVec<F>>& vectors) {
    EchelonBuilder<F> eb(ambient);
    for (const auto& v : vectors) eb.insert(v);
    return from_builder(eb);
  }

  static Subspace from_builder(EchelonBuilder<F>& eb) {
    auto rows = eb.finish();
    std::vector<std::size_t> piv;
    piv.reserve(rows.size());
    for (const auto& r : rows) piv.push_back(r.lead());
    return from_reduced(eb.ambient(), std::move(rows), std::move(piv));
  }

  static Subspace full(std::size_t ambient) {
    std::vector<SparseVec<F>> b;
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < ambient; ++i) {
      b.push_back(SparseVec<F>::unit(i));
      p.push_back(i);
    }
    return from_reduced(ambient, std::move(b), std::move(p));
  }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SparseVec<F>>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return piv_; }
  bool is_pivot(std::size_t i) const { return slot_.at(i) != npos; }
  std::size_t slot(std::size_t i) const { return slot_.at(i); }

  /// Coordinates of v in the basis, or nullopt when v lies outside.
  std::optional<SparseVec<F>> coordinates(const SparseVec<F>& v) const {
    std::vector<typename SparseVec<F>::Entry> coords;
    SparseVec<F> r = v;
    for (const auto& [i, a] : v) {
      if (i >= n_) throw Error(ErrorCode::shape_mismatch, "vector outside ambient space");
      if (slot_[i] != npos) coords.emplace_back(slot_[i], a);
    }
    for (const auto& [k, a] : coords) r.axpy(-a, basis_[k]);
    if (!r.empty()) return std::nullopt;
    return SparseVec<F>::from_terms(std::move(coords));
  }

  bool contains(const SparseVec<F>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  /// Basis as the columns of an ambient x dim matrix.
  Matrix<F> inclusion() const { return Matrix<F>::from_columns(n_, basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.piv_ == b.piv_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<SparseVec<F>> basis_;
  std::vector<std::size_t> piv_;
  std::vector<std::size_t> slot_;
};

template <class F>
Subspace<F> row_space(const Matrix<F>& a) {
  Matrix<F> t = a.transpose();
  EchelonBuilder<F> eb(a.cols());
  for (std::size_t i = 0; i < t.cols(); ++i) eb.insert(t.col(i));
  return Subspace<F>::from_builder(eb);
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  EchelonBuilder<F> eb(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) eb.insert(a.col(j));
  return eb.rank();
}

/// Null space from the fully reduced rows of a: one basis vector per free column.
template <class F>
Subspace<F> kernel_from_rows(std::size_t cols, const std::vector<SparseVec<F>>& rref_rows) {
  std::vector<char> is_piv(cols, 0);
  for (const auto& r : rref_rows) is_piv[r.lead()] = 1;
  std::vector<std::size_t> free_slot(cols, npos);
  std::vector<std::size_t> frees;
  for (std::size_t q = 0; q < cols; ++q)
    if (!is_piv[q]) {
      free_slot[q] = frees.size();
      frees.push_back(q);
    }
  std::vector<std::vector<typename SparseVec<F>::Entry>> terms(frees.size());
  for (std::size_t k = 0; k < frees.size(); ++k) terms[k].emplace_back(frees[k], F(1));
  for (const auto& r : rref_rows) {
    std::size_t p = r.lead();
    for (const auto& [q, a] : r) {
      if (q == p) continue;
      terms[free_slot[q]].emplace_back(p, -a);
    }
  }
  std::vector<SparseVec<F>> basis;
  basis.reserve(frees.size());
  for (auto& t : terms) basis.push_back(SparseVec<F>::from_terms(std::move(t)));
  return Subspace<F>::from_reduced(cols, std::move(basis), std::move(frees));
}

template <class F>
Subspace<F> kernel(const Matrix<F>& a) {
  Matrix<F> t = a.transpose();
  EchelonBuilder<F> eb(a.cols());
  for (std::size_t i = 0; i < t.cols(); ++i) eb.insert(t.col(i));
  return kernel_from_rows<F>(a.cols(), eb.finish());
}

/// Null space of the linear conditions given as rows (each a vector on F^cols).
template <class F>
Subspace<F> kernel_of_rows(std::size_t cols, const std::vector<SparseVec<F>>& rows) {
  EchelonBuilder<F> eb(cols);
  for (const auto& r : rows) eb.insert(r);
  return kernel_from_rows<F>(cols, eb.finish());
}

template <class F>
Subspace<F> image(const Matrix<F>& a) {
  EchelonBuilder<F> eb(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) eb.insert(a.col(j));
  return Subspace<F>::from_builder(eb);
}

/// Some x with a x = b. Free variables are set to zero.
template <class F>
SparseVec<F> solve(const Matrix<F>& a, const SparseVec<F>& b) {
  std::size_t n = a.cols();
  Matrix<F> t = a.transpose();
  std::vector<std::vector<typename SparseVec<F>::Entry>> aug(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) aug[i].assign(t.col(i).begin(), t.col(i).end());
  for (const auto& [i, v] : b) {
    if (i >= a.rows()) throw Error(ErrorCode::shape_mismatch, "right-hand side longer than matrix");
    aug[i].emplace_back(n, v);
  }
  EchelonBuilder<F> eb(n + 1);
  for (auto& r : aug) eb.insert(SparseVec<F>::from_terms(std::move(r)));
  std::vector<typename SparseVec<F>::Entry> x;
  for (const auto& r : eb.finish()) {
    if (r.lead() == n) throw Error(ErrorCode::no_solution, "right-hand side is not in the image");
    F c = r.at(n);
    if (!c.is_zero()) x.emplace_back(r.lead(), c);
  }
  return SparseVec<F>::from_terms(std::move(x));
}

/// V / U with the complement spanned by the non-pivot coordinates of U.
template <class F>
class QuotientChart {
 public:
  QuotientChart() = default;
  explicit QuotientChart(Subspace<F> u) : u_(std::move(u)), qidx_(u_.ambient_dim(), npos) {
    for (std::size_t j = 0; j < u_.ambient_dim(); ++j)
      if (!u_.is_pivot(j)) {
        qidx_[j] = reps_.size();
        reps_.push_back(j);
      }
  }

  std::size_t ambient_dim() const noexcept { return u_.ambient_dim(); }
  std::size_t dim() const noexcept { return reps_.size(); }
  const Subspace<F>& killed() const noexcept { return u_; }
  /// Ambient index represented by quotient coordinate k.
  const std::vector<std::size_t>& representatives() const noexcept { return reps_; }

  SparseVec<F> project(const SparseVec<F>& v) const {
    std::vector<typename SparseVec<F>::Entry> t;
    for (const auto& [j, a] : v) {
      if (j >= qidx_.size()) throw Error(ErrorCode::shape_mismatch, "vector outside ambient space");
      if (qidx_[j] != npos) {
        t.emplace_back(qidx_[j], a);
      } else {
        for (const auto& [q, r] : u_.basis()[u_.slot(j)])
          if (q != j) t.emplace_back(qidx_[q], -a * r);
      }
    }
    return SparseVec<F>::from_terms(std::move(t));
  }

  SparseVec<F> lift(const SparseVec<F>& w) const {
    return w.remap([this](std::size_t k) { return reps_.at(k); });
  }

  Matrix<F> projection() const {
    Matrix<F> m(dim(), ambient_dim());
    for (std::size_t j = 0; j < ambient_dim(); ++j) m.set_col(j, project(SparseVec<F>::unit(j)));
    return m;
  }

  Matrix<F> section() const {
    Matrix<F> m(ambient_dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) m.set_col(k, SparseVec<F>::unit(reps_[k]));
    return m;
  }

 private:
  Subspace<F> u_;
  std::vector<std::size_t> qidx_;
  std::vector<std::size_t> reps_;
};

template <class F>
QuotientChart<F> quotient(std::size_t ambient, const Subspace<F>& u) {
  if (u.ambient_dim() != ambient) throw Error(ErrorCode::shape_mismatch, "subspace lives in another space");
  return QuotientChart<F>(u);
}

/// The map V/U -> V'/U' induced by f. Throws NOT_WELL_DEFINED with a vector u in U
/// whose image leaves U'. When `probes` is given (vectors spanning U) the witness is
/// taken from it.
template <class F>
Matrix<F> induced_map(const Matrix<F>& f, const QuotientChart<F>& src, const QuotientChart<F>& tgt,
                      const std::vector<SparseVec<F>>* probes = nullptr) {
  if (f.cols() != src.ambient_dim() || f.rows() != tgt.ambient_dim())
    throw Error(ErrorCode::shape_mismatch, "map does not fit the charts");
  const auto& test = probes ? *probes : src.killed().basis();
  for (const auto& u : test) {
    if (!tgt.project(f.apply(u)).empty())
      throw WitnessedError<F>(ErrorCode::not_well_defined, "map does not preserve the killed subspace", u);
  }
  Matrix<F> m(tgt.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) m.set_col(k, tgt.project(f.col(src.representatives()[k])));
  return m;
}

/// f restricted to W -> W', in the bases of the two subspaces.
template <class F>
Matrix<F> restrict_map(const Matrix<F>& f, const Subspace<F>& src, const Subspace<F>& tgt) {
  if (f.cols() != src.ambient_dim() || f.rows() != tgt.ambient_dim())
    throw Error(ErrorCode::shape_mismatch, "map does not fit the subspaces");
  Matrix<F> m(tgt.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    auto c = tgt.coordinates(f.apply(src.basis()[k]));
    if (!c)
      throw WitnessedError<F>(ErrorCode::operator_escapes_subspace, "operator leaves the invariant subspace",
                              src.basis()[k]);
    m.set_col(k, std::move(*c));
  }
  return m;
}

/// Inverse of a square matrix; nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::shape_mismatch, "inverse of a non-square matrix");
  Matrix<F> t = a.transpose();
  EchelonBuilder<F> eb(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename SparseVec<F>::Entry> r(t.col(i).begin(), t.col(i).end());
    r.emplace_back(n + i, F(1));
    eb.insert(SparseVec<F>::from_terms(std::move(r)));
  }
  auto rows = eb.finish();
  std::vector<std::vector<typename SparseVec<F>::Entry>> cols(n);
  for (const auto& r : rows) {
    if (r.lead() >= n) return std::nullopt;
    for (const auto& [k, v] : r)
      if (k >= n) cols[k - n].emplace_back(r.lead(), v);
  }
  std::vector<SparseVec<F>> c;
  for (auto& t2 : cols) c.push_back(SparseVec<F>::from_terms(std::move(t2)));
  return Matrix<F>::from_columns(n, std::move(c));
}

}  // namespace hopfcyclic
