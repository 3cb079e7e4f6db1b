#pragma once

// (Co)cyclic modules stored as operator matrices per degree, the identity verifier,
// Hochschild b, and cyclic (co)homology by kernels and images with a bicomplex oracle.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "check_report.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "sparse.hpp"

namespace hopfcyclic {

enum class Direction { cosimplicial, simplicial };

inline const char* to_string(Direction d) { return d == Direction::cosimplicial ? "cosimplicial" : "simplicial"; }

/// How a level sits relative to its ambient tensor space.
template <class F>
struct LevelCarrier {
  enum class Kind { plain, quotient, subspace };
  Kind kind = Kind::plain;
  std::size_t ambient = 0;
  std::optional<QuotientChart<F>> chart;  // quotient levels
  std::optional<Subspace<F>> sub;         // invariant or cotensor levels
};

/// Levels 0..n_max. Cosimplicial: faces[n][i] is delta_i from level n-1 to n (n >= 1,
/// 0 <= i <= n), degens[n][i] is sigma_i from level n+1 to n (n < n_max, 0 <= i <= n).
/// Simplicial: faces[n][i] is d_i from level n to n-1, degens[n][i] is s_i from level n
/// to n+1. cyclic[n] is tau_n (or t_n) on level n.
template <class F>
struct CyclicModule {
  std::string name;
  Direction direction = Direction::cosimplicial;
  std::vector<std::size_t> dims;
  std::vector<LevelCarrier<F>> carriers;
  std::vector<std::vector<Matrix<F>>> faces;
  std::vector<std::vector<Matrix<F>>> degens;
  std::vector<Matrix<F>> cyclic;

  std::size_t n_max() const { return dims.empty() ? 0 : dims.size() - 1; }
  std::size_t levels() const { return dims.size(); }

  /// Checks that every operator has the shape its level dimensions demand.
  void validate_shapes() const {
    auto fail = [&](const std::string& what) { throw Error(ErrorCode::shape_mismatch, name + ": " + what); };
    const std::size_t L = dims.size();
    if (faces.size() != L || degens.size() != L || cyclic.size() != L) fail("operator lists must have one entry per level");
    bool co = direction == Direction::cosimplicial;
    for (std::size_t n = 0; n < L; ++n) {
      if (cyclic[n].rows() != dims[n] || cyclic[n].cols() != dims[n]) fail("cyclic operator at level " + std::to_string(n));
      if (n == 0 ? !faces[0].empty() : faces[n].size() != n + 1) fail("face count at level " + std::to_string(n));
      for (const auto& m : faces[n]) {
        std::size_t r = co ? dims[n] : dims[n - 1], c = co ? dims[n - 1] : dims[n];
        if (m.rows() != r || m.cols() != c) fail("face shape at level " + std::to_string(n));
      }
      if (n + 1 < L ? degens[n].size() != n + 1 : !degens[n].empty()) fail("degeneracy count at level " + std::to_string(n));
      for (const auto& m : degens[n]) {
        std::size_t r = co ? dims[n] : dims[n + 1], c = co ? dims[n + 1] : dims[n];
        if (m.rows() != r || m.cols() != c) fail("degeneracy shape at level " + std::to_string(n));
      }
    }
  }
};

/// The dual module: every operator transposed, direction flipped.
template <class F>
CyclicModule<F> transpose(const CyclicModule<F>& x) {
  CyclicModule<F> y;
  y.name = x.name + "^T";
  y.direction = x.direction == Direction::cosimplicial ? Direction::simplicial : Direction::cosimplicial;
  y.dims = x.dims;
  y.carriers = x.carriers;
  for (const auto& fs : x.faces) {
    y.faces.emplace_back();
    for (const auto& m : fs) y.faces.back().push_back(m.transpose());
  }
  for (const auto& ds : x.degens) {
    y.degens.emplace_back();
    for (const auto& m : ds) y.degens.back().push_back(m.transpose());
  }
  for (const auto& t : x.cyclic) y.cyclic.push_back(t.transpose());
  return y;
}

/// Truncation to levels 0..n.
template <class F>
CyclicModule<F> truncate(const CyclicModule<F>& x, std::size_t n) {
  if (n >= x.levels()) return x;
  CyclicModule<F> y = x;
  y.dims.resize(n + 1);
  y.carriers.resize(std::min(y.carriers.size(), n + 1));
  y.faces.resize(n + 1);
  y.degens.resize(n + 1);
  y.degens[n].clear();
  y.cyclic.resize(n + 1);
  return y;
}

// ---------------------------------------------------------------------------
// Identity verification

enum class CyclicStatus { cyclic, paracyclic, failed };

inline const char* to_string(CyclicStatus s) {
  switch (s) {
    case CyclicStatus::cyclic: return "cyclic";
    case CyclicStatus::paracyclic: return "paracyclic only";
    case CyclicStatus::failed: return "failed";
  }
  return "?";
}

/// Item names are "<identity> n=<degree>"; witnesses read {i, j, row, column}.
struct IdentityVerdict {
  CyclicStatus status = CyclicStatus::cyclic;
  CheckReport report;
  std::string first_identity;  // empty when cyclic
  std::size_t degree = 0;
  std::vector<std::size_t> witness;
};

namespace detail {

template <class F>
struct CosimplicialView {
  const CyclicModule<F>& x;
  // delta_i into level n, sigma_i onto level n
  const Matrix<F>& d(std::size_t n, std::size_t i) const { return x.faces[n][i]; }
  const Matrix<F>& s(std::size_t n, std::size_t i) const { return x.degens[n][i]; }
  const Matrix<F>& t(std::size_t n) const { return x.cyclic[n]; }
};

template <class F>
void compare(CheckReport& r, CheckItem& item, const Matrix<F>& lhs, const Matrix<F>& rhs, std::size_t i, std::size_t j) {
  if (lhs == rhs) return;
  auto [row, col] = first_difference(lhs, rhs);
  r.fail(item, {i, j, row, col}, "i=" + std::to_string(i) + " j=" + std::to_string(j) + " differs at row " +
                                     std::to_string(row) + ", column " + std::to_string(col));
}

template <class F>
CheckReport cosimplicial_identities(const CyclicModule<F>& x) {
  CosimplicialView<F> v{x};
  const std::size_t N = x.n_max();
  CheckReport r;
  auto tag = [](const char* name, std::size_t n) { return std::string(name) + " n=" + std::to_string(n); };

  for (std::size_t n = 1; n + 1 <= N; ++n) {  // C^{n-1} -> C^{n+1}
    auto& it = r.add(tag("face_face", n + 1));
    for (std::size_t j = 1; j <= n + 1; ++j)
      for (std::size_t i = 0; i < j; ++i) compare(r, it, v.d(n + 1, j) * v.d(n, i), v.d(n + 1, i) * v.d(n, j - 1), i, j);
  }
  for (std::size_t n = 0; n + 2 <= N; ++n) {  // C^{n+2} -> C^n
    auto& it = r.add(tag("degeneracy_degeneracy", n));
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i) compare(r, it, v.s(n, j) * v.s(n + 1, i), v.s(n, i) * v.s(n + 1, j + 1), i, j);
  }
  for (std::size_t n = 0; n + 1 <= N; ++n) {  // sigma_j delta_i on C^n
    auto& it = r.add(tag("degeneracy_face", n));
    const auto id = Matrix<F>::identity(x.dims[n]);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        Matrix<F> lhs = v.s(n, j) * v.d(n + 1, i);
        if (i == j || i == j + 1) compare(r, it, lhs, id, i, j);
        else if (i < j) compare(r, it, lhs, v.d(n, i) * v.s(n - 1, j - 1), i, j);
        else compare(r, it, lhs, v.d(n, i - 1) * v.s(n - 1, j), i, j);
      }
  }
  for (std::size_t n = 1; n <= N; ++n) {
    auto& it = r.add(tag("cyclic_face", n));
    compare(r, it, v.t(n) * v.d(n, 0), v.d(n, n), 0, 0);
    for (std::size_t i = 1; i <= n; ++i) compare(r, it, v.t(n) * v.d(n, i), v.d(n, i - 1) * v.t(n - 1), i, 0);
  }
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    auto& it = r.add(tag("cyclic_degeneracy", n));
    compare(r, it, v.t(n) * v.s(n, 0), v.s(n, n) * v.t(n + 1) * v.t(n + 1), 0, 0);
    for (std::size_t i = 1; i <= n; ++i) compare(r, it, v.t(n) * v.s(n, i), v.s(n, i - 1) * v.t(n + 1), i, 0);
  }
  for (std::size_t n = 0; n <= N; ++n) {
    auto& it = r.add(tag("cyclic_power", n));
    compare(r, it, v.t(n).pow(static_cast<unsigned>(n + 1)), Matrix<F>::identity(x.dims[n]), n + 1, 0);
  }
  return r;
}

}  // namespace detail

/// Checks the (co)simplicial, mixed and cyclic identities at every degree the stored
/// levels allow. Simplicial input is checked through its transpose, where each identity
/// becomes the cosimplicial identity of the same name.
template <class F>
IdentityVerdict verify_identities(const CyclicModule<F>& x) {
  x.validate_shapes();
  IdentityVerdict v;
  v.report = x.direction == Direction::cosimplicial ? detail::cosimplicial_identities(x)
                                                     : detail::cosimplicial_identities(transpose(x));
  bool only_power = true;
  for (const auto& item : v.report.items) {
    if (item.pass) continue;
    if (v.first_identity.empty()) {
      auto cut = item.name.find(" n=");
      v.first_identity = item.name.substr(0, cut);
      v.degree = std::stoul(item.name.substr(cut + 3));
      v.witness = item.witness;
    }
    if (item.name.rfind("cyclic_power", 0) != 0) only_power = false;
  }
  if (v.first_identity.empty()) v.status = CyclicStatus::cyclic;
  else v.status = only_power ? CyclicStatus::paracyclic : CyclicStatus::failed;
  if (v.status == CyclicStatus::paracyclic) {
    // report the first failing power, not the first item
    for (const auto& item : v.report.items)
      if (!item.pass) {
        v.first_identity = "cyclic_power";
        v.degree = std::stoul(item.name.substr(item.name.find(" n=") + 3));
        v.witness = item.witness;
        break;
      }
  }
  return v;
}

inline void require_cyclic(const IdentityVerdict& v, const std::string& name) {
  if (v.status != CyclicStatus::cyclic)
    throw Error(ErrorCode::not_cyclic, name + " is " + to_string(v.status) +
                                           (v.first_identity.empty() ? "" : ": " + v.first_identity + " fails at n=" +
                                                                                std::to_string(v.degree)));
}

// ---------------------------------------------------------------------------
// Hochschild boundary

/// Cosimplicial: b_n = sum_{i=0}^{n+1} (-1)^i delta_i from level n to n+1.
/// Simplicial: b_n = sum_{i=0}^{n} (-1)^i d_i from level n to n-1; b_0 is the map to zero.
template <class F>
Matrix<F> hochschild_b(const CyclicModule<F>& x, std::size_t n) {
  if (n >= x.levels()) throw Error(ErrorCode::requires_degrees, "level " + std::to_string(n) + " not built");
  if (x.direction == Direction::cosimplicial) {
    if (n + 1 >= x.levels()) throw Error(ErrorCode::requires_degrees, "b_" + std::to_string(n) + " needs level " + std::to_string(n + 1));
    Matrix<F> b(x.dims[n + 1], x.dims[n]);
    for (std::size_t i = 0; i <= n + 1; ++i) b = b + F(i % 2 ? -1 : 1) * x.faces[n + 1][i];
    return b;
  }
  if (n == 0) return Matrix<F>(0, x.dims[0]);
  Matrix<F> b(x.dims[n - 1], x.dims[n]);
  for (std::size_t i = 0; i <= n; ++i) b = b + F(i % 2 ? -1 : 1) * x.faces[n][i];
  return b;
}

/// b' = sum_{i=0}^{n-1} (-1)^i d_i on a simplicial module (the last face dropped).
template <class F>
Matrix<F> hochschild_b_prime(const CyclicModule<F>& x, std::size_t n) {
  if (n == 0) return Matrix<F>(0, x.dims[0]);
  Matrix<F> b(x.dims[n - 1], x.dims[n]);
  for (std::size_t i = 0; i < n; ++i) b = b + F(i % 2 ? -1 : 1) * x.faces[n][i];
  return b;
}

// ---------------------------------------------------------------------------
// Cyclic (co)homology

template <class F>
struct DegreeHomology {
  std::size_t n = 0;
  std::size_t dim_z = 0, dim_b = 0, dim_hc = 0;
  std::vector<SparseVec<F>> representatives;  // level-n vectors whose classes form a basis
  std::vector<SparseVec<F>> cycles;           // basis of Z
  std::vector<SparseVec<F>> boundaries;       // basis of B
};

template <class F>
struct HomologyResult {
  std::vector<DegreeHomology<F>> degrees;
  const DegreeHomology<F>* at(std::size_t n) const {
    for (const auto& d : degrees)
      if (d.n == n) return &d;
    return nullptr;
  }
};

namespace detail {

template <class F>
Matrix<F> shifted_identity_difference(const Matrix<F>& t, std::size_t n) {
  // tau - (-1)^n
  return t - F(n % 2 ? -1 : 1) * Matrix<F>::identity(t.rows());
}

/// Z / B inside an ambient space, with B checked to lie in Z.
template <class F>
DegreeHomology<F> quotient_homology(std::size_t n, const Subspace<F>& z, const Subspace<F>& b) {
  DegreeHomology<F> out;
  out.n = n;
  out.dim_z = z.dim();
  out.dim_b = b.dim();
  std::vector<SparseVec<F>> bz;
  for (const auto& v : b.basis()) {
    auto c = z.coordinates(v);
    if (!c) throw WitnessedError<F>(ErrorCode::defect, "boundary outside the cycles at n=" + std::to_string(n), v, n);
    bz.push_back(std::move(*c));
  }
  QuotientChart<F> chart(Subspace<F>::span(z.dim(), bz));
  out.dim_hc = chart.dim();
  for (std::size_t k : chart.representatives()) out.representatives.push_back(z.basis()[k]);
  out.cycles = z.basis();
  out.boundaries = b.basis();
  return out;
}

template <class F>
void require_level(const CyclicModule<F>& x, std::size_t n) {
  if (n >= x.levels())
    throw Error(ErrorCode::requires_degrees, "REQUIRES_DEGREES(" + std::to_string(n) + "): module stops at level " +
                                                 std::to_string(x.n_max()));
}

template <class F>
DegreeHomology<F> cohomology_unchecked(const CyclicModule<F>& x, std::size_t n) {
  require_level(x, n + 1);
  Matrix<F> bn = hochschild_b(x, n);
  Matrix<F> tn = shifted_identity_difference(x.cyclic[n], n);
  Subspace<F> z = kernel(vstack<F>({&bn, &tn}));
  Subspace<F> b(x.dims[n]);
  if (n > 0) {
    Subspace<F> k = kernel(shifted_identity_difference(x.cyclic[n - 1], n - 1));
    b = image(hochschild_b(x, n - 1) * k.inclusion());
  }
  return quotient_homology(n, z, b);
}

template <class F>
QuotientChart<F> lambda_chart(const CyclicModule<F>& x, std::size_t n) {
  return QuotientChart<F>(image(shifted_identity_difference(x.cyclic[n], n)));
}

template <class F>
DegreeHomology<F> homology_unchecked(const CyclicModule<F>& x, std::size_t n) {
  require_level(x, n + 1);
  auto cn = lambda_chart(x, n);
  auto cn1 = lambda_chart(x, n + 1);
  Matrix<F> bn = n == 0 ? Matrix<F>(0, cn.dim()) : induced_map(hochschild_b(x, n), cn, lambda_chart(x, n - 1));
  Matrix<F> bn1 = induced_map(hochschild_b(x, n + 1), cn1, cn);
  auto out = quotient_homology(n, kernel(bn), image(bn1));
  for (auto* vs : {&out.representatives, &out.cycles, &out.boundaries})
    for (auto& r : *vs) r = cn.lift(r);
  return out;
}

}  // namespace detail

/// HC^n = Ker b_n on Ker(tau_n - (-1)^n), modulo b_{n-1} of Ker(tau_{n-1} - (-1)^{n-1}).
/// Needs level n + 1.
template <class F>
DegreeHomology<F> cyclic_cohomology(const CyclicModule<F>& x, std::size_t n) {
  if (x.direction != Direction::cosimplicial) throw Error(ErrorCode::shape_mismatch, "cyclic cohomology needs a cosimplicial module");
  require_cyclic(verify_identities(x), x.name);
  return detail::cohomology_unchecked(x, n);
}

/// HC^0..HC^top, verifying once.
template <class F>
HomologyResult<F> cyclic_cohomology_range(const CyclicModule<F>& x, std::size_t top) {
  if (x.direction != Direction::cosimplicial) throw Error(ErrorCode::shape_mismatch, "cyclic cohomology needs a cosimplicial module");
  require_cyclic(verify_identities(x), x.name);
  HomologyResult<F> r;
  for (std::size_t n = 0; n <= top; ++n) r.degrees.push_back(detail::cohomology_unchecked(x, n));
  return r;
}

/// Homology of C_n / Im(1 - (-1)^n t_n) with the induced b. Needs level n + 1.
template <class F>
DegreeHomology<F> cyclic_homology(const CyclicModule<F>& x, std::size_t n) {
  if (x.direction != Direction::simplicial) throw Error(ErrorCode::shape_mismatch, "cyclic homology needs a simplicial module");
  require_cyclic(verify_identities(x), x.name);
  return detail::homology_unchecked(x, n);
}

template <class F>
HomologyResult<F> cyclic_homology_range(const CyclicModule<F>& x, std::size_t top) {
  if (x.direction != Direction::simplicial) throw Error(ErrorCode::shape_mismatch, "cyclic homology needs a simplicial module");
  require_cyclic(verify_identities(x), x.name);
  HomologyResult<F> r;
  for (std::size_t n = 0; n <= top; ++n) r.degrees.push_back(detail::homology_unchecked(x, n));
  return r;
}

namespace detail {

/// Total differential Tot_n -> Tot_{n-1} of the cyclic bicomplex of a simplicial module.
/// Column p holds C_q with b for even p and -b' for odd p; horizontal maps are 1 - lambda
/// out of odd columns and N out of even columns p >= 2, with lambda = (-1)^q t_q.
template <class F>
Matrix<F> bicomplex_differential(const CyclicModule<F>& x, std::size_t n) {
  auto offsets = [&](std::size_t tot) {
    std::vector<std::size_t> off{0};
    for (std::size_t p = 0; p <= tot; ++p) off.push_back(off.back() + x.dims[tot - p]);
    return off;
  };
  auto src = offsets(n);
  if (n == 0) return Matrix<F>(0, src.back());
  auto tgt = offsets(n - 1);
  std::vector<std::vector<typename SparseVec<F>::Entry>> cols(src.back());
  auto place = [&](const Matrix<F>& m, std::size_t row_off, std::size_t col_off) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [i, a] : m.col(j)) cols[col_off + j].emplace_back(row_off + i, a);
  };
  for (std::size_t p = 0; p <= n; ++p) {
    std::size_t q = n - p;
    if (q > 0) {  // vertical to (p, q-1)
      Matrix<F> v = p % 2 == 0 ? hochschild_b(x, q) : F(-1) * hochschild_b_prime(x, q);
      place(v, tgt[p], src[p]);
    }
    if (p > 0) {  // horizontal to (p-1, q)
      Matrix<F> lambda = F(q % 2 ? -1 : 1) * x.cyclic[q];
      Matrix<F> h;
      if (p % 2 == 1) {
        h = Matrix<F>::identity(x.dims[q]) - lambda;
      } else {
        h = Matrix<F>(x.dims[q], x.dims[q]);
        Matrix<F> pw = Matrix<F>::identity(x.dims[q]);
        for (std::size_t k = 0; k <= q; ++k) {
          h = h + pw;
          pw = lambda * pw;
        }
      }
      place(h, tgt[p - 1], src[p]);
    }
  }
  std::vector<SparseVec<F>> out;
  for (auto& c : cols) out.push_back(SparseVec<F>::from_terms(std::move(c)));
  return Matrix<F>::from_columns(tgt.back(), std::move(out));
}

}  // namespace detail

/// Total (co)homology of the cyclic bicomplex in degree n. Cosimplicial input is handled
/// through its transpose, whose chain bicomplex is dual to the cochain bicomplex.
template <class F>
DegreeHomology<F> bicomplex_oracle(const CyclicModule<F>& x, std::size_t n) {
  require_cyclic(verify_identities(x), x.name);
  detail::require_level(x, n + 1);
  CyclicModule<F> s = x.direction == Direction::simplicial ? truncate(x, n + 1) : transpose(truncate(x, n + 1));
  Matrix<F> dn = detail::bicomplex_differential(s, n);
  Matrix<F> dn1 = detail::bicomplex_differential(s, n + 1);
  if (!(dn * dn1).is_zero()) throw Error(ErrorCode::defect, "bicomplex differential does not square to zero at n=" + std::to_string(n + 1));
  DegreeHomology<F> out;
  out.n = n;
  out.dim_b = rank(dn1);
  out.dim_z = dn.cols() - rank(dn);
  out.dim_hc = out.dim_z - out.dim_b;
  return out;
}

}  // namespace hopfcyclic
