#pragma once

// The four Hopf-cyclic complexes: module coalgebra (quotient M (x)_H C^{n+1}), module
// algebra (H-invariant functionals on M (x) A^{n+1}), comodule algebra cohomology
// (colinear maps A^{n+1} -> M) and comodule algebra homology (A^{n+1} cotensor M).

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "errors.hpp"
#include "hopf.hpp"
#include "linalg.hpp"
#include "sayd.hpp"
#include "tensor.hpp"

namespace hopfcyclic {

enum class ComplexKind { coalgebra, module_algebra, comodule_algebra_coh, comodule_algebra_hom };

inline const char* to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::coalgebra: return "coalgebra";
    case ComplexKind::module_algebra: return "module_algebra";
    case ComplexKind::comodule_algebra_coh: return "comodule_algebra_coh";
    case ComplexKind::comodule_algebra_hom: return "comodule_algebra_hom";
  }
  return "?";
}

inline ComplexKind complex_kind_from_string(const std::string& s) {
  for (auto k : {ComplexKind::coalgebra, ComplexKind::module_algebra, ComplexKind::comodule_algebra_coh,
                 ComplexKind::comodule_algebra_hom})
    if (s == to_string(k)) return k;
  throw Error(ErrorCode::parse_error, "unknown complex kind '" + s + "'");
}

inline constexpr std::size_t default_n_max = 3;
inline constexpr std::size_t max_degree = 4;
inline constexpr std::size_t default_ambient_cap = 10000;

template <class F>
struct ComplexSpec {
  ComplexKind kind = ComplexKind::coalgebra;
  HopfData<F> hopf;
  Carrier<F> carrier;
  SaydCandidate<F> module;
  std::size_t n_max = default_n_max;  // top level built; cohomology in degree n needs level n + 1
  std::size_t ambient_cap = default_ambient_cap;
};

/// The module version each complex expects.
inline Version required_version(ComplexKind k) {
  switch (k) {
    case ComplexKind::coalgebra:
    case ComplexKind::module_algebra: return Version::right_left;
    case ComplexKind::comodule_algebra_coh: return Version::right_right;
    case ComplexKind::comodule_algebra_hom: return Version::left_left;
  }
  return Version::right_left;
}

/// Dimension of the largest ambient space the builder would allocate.
template <class F>
std::size_t ambient_dimension(const ComplexSpec<F>& s, std::size_t n) {
  std::size_t d = s.module.dim;
  for (std::size_t k = 0; k <= n; ++k) d *= s.carrier.dim;
  return d;
}

namespace detail {

template <class F>
using Entries = std::vector<typename SparseVec<F>::Entry>;

using Digits = std::vector<std::size_t>;

/// Matrix of a map between tensor spaces given on basis digit tuples.
template <class F, class Fn>
Matrix<F> tensor_map(const Digits& src_dims, const Digits& tgt_dims, Fn&& fn) {
  const std::size_t S = tensor_dim(src_dims), T = tensor_dim(tgt_dims);
  Matrix<F> m(T, S);
  Entries<F> out;
  for (std::size_t j = 0; j < S; ++j) {
    out.clear();
    Digits dg = decode(j, src_dims);
    fn(dg, [&](const Digits& t, const F& c) { out.emplace_back(encode(t, tgt_dims), c); });
    m.set_col(j, SparseVec<F>::from_terms(out));
  }
  return m;
}

template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
    for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
      Entries<F> t;
      for (const auto& [i1, x] : a.col(j1))
        for (const auto& [i2, y] : b.col(j2)) t.emplace_back(i1 * b.rows() + i2, x * y);
      m.set_col(j1 * b.cols() + j2, SparseVec<F>::from_terms(std::move(t)));
    }
  return m;
}

template <class F>
Matrix<F> combination(const std::vector<Matrix<F>>& mats, const Vec<F>& v, std::size_t dim) {
  Matrix<F> out(dim, dim);
  for (const auto& [k, c] : v) out = out + c * mats.at(k);
  return out;
}

/// Matrices of h acting diagonally on X^{(x) count}, for every basis h.
template <class F>
std::vector<Matrix<F>> diagonal_action(const HopfData<F>& h, const std::vector<Matrix<F>>& act, std::size_t count) {
  std::vector<Matrix<F>> cur = act;
  for (std::size_t k = 1; k < count; ++k) {
    std::vector<Matrix<F>> next;
    for (std::size_t hi = 0; hi < h.dim(); ++hi) {
      const std::size_t dim = act[0].rows() * cur[0].rows();
      Matrix<F> m(dim, dim);
      for (const auto& [a, b, c] : h.delta(hi)) m = m + c * kron(act[a], cur[b]);
      next.push_back(std::move(m));
    }
    cur = std::move(next);
  }
  return cur;
}

/// Diagonal right coaction X^{(x) count} -> X^{(x) count} (x) H of a right comodule algebra.
template <class F>
Matrix<F> diagonal_right_coaction(const HopfData<F>& h, const Carrier<F>& a, std::size_t count) {
  const std::size_t dh = h.dim(), da = a.dim;
  Matrix<F> cur = a.coaction->map;
  std::size_t dx = da;
  for (std::size_t k = 1; k < count; ++k) {
    Matrix<F> next(dx * da * dh, dx * da);
    for (std::size_t x = 0; x < dx; ++x)
      for (std::size_t y = 0; y < da; ++y) {
        Entries<F> t;
        for (const auto& [h1, x1, c1] : split_coaction(cur.col(x), Side::right, dh, dx))
          for (const auto& [h2, y1, c2] : split_coaction(a.coaction->map.col(y), Side::right, dh, da))
            for (const auto& [hk, c3] : h.mul_basis(h1, h2)) t.emplace_back((x1 * da + y1) * dh + hk, c1 * c2 * c3);
        next.set_col(x * da + y, SparseVec<F>::from_terms(std::move(t)));
      }
    cur = std::move(next);
    dx *= da;
  }
  return cur;
}

inline Digits digits_of(std::size_t head, const Digits& tail) {
  Digits d{head};
  d.insert(d.end(), tail.begin(), tail.end());
  return d;
}

template <class F>
Matrix<F> restrict_or_throw(const Matrix<F>& f, const Subspace<F>& src, const Subspace<F>& tgt, const std::string& op,
                            std::size_t degree) {
  try {
    return restrict_map(f, src, tgt);
  } catch (const WitnessedError<F>& e) {
    throw WitnessedError<F>(ErrorCode::operator_escapes_subspace,
                            op + " at n=" + std::to_string(degree) + " leaves the invariant subspace; witness " +
                                e.witness().str(),
                            e.witness(), static_cast<int>(degree));
  }
}

template <class F>
void check_module_comodule(const HopfData<F>& h, const SaydCandidate<F>& m) {
  validate_candidate(h, m);
  auto mod = check_module(h, m);
  if (!mod.ok()) throw Error(ErrorCode::hypothesis_failed, "coefficients are not a module: " + mod.first_failure()->name);
  auto com = check_comodule(h, m);
  if (!com.ok()) throw Error(ErrorCode::hypothesis_failed, "coefficients are not a comodule: " + com.first_failure()->name);
}

template <class F>
void require_compat(CompatKind k, const Carrier<F>& c, const HopfData<F>& h, const char* what) {
  auto r = check_compat(k, c, h);
  if (!r.ok())
    throw Error(ErrorCode::hypothesis_failed, c.name + " is not a " + std::string(what) + ": " + r.first_failure()->name +
                                                  (r.first_failure()->detail.empty() ? "" : " " + r.first_failure()->detail));
}

}  // namespace detail

/// Checks versions, hypotheses on the carrier and coefficients, and resource limits.
template <class F>
void validate_spec(const ComplexSpec<F>& s) {
  if (s.n_max > max_degree + 1)
    throw Error(ErrorCode::resource_cap, "n_max " + std::to_string(s.n_max) + " exceeds the level cap " +
                                             std::to_string(max_degree + 1));
  if (s.module.version() != required_version(s.kind))
    throw Error(ErrorCode::version_mismatch, std::string(to_string(s.kind)) + " needs a " +
                                                 to_string(required_version(s.kind)) + " module, got " +
                                                 to_string(s.module.version()));
  detail::check_module_comodule(s.hopf, s.module);
  switch (s.kind) {
    case ComplexKind::coalgebra: detail::require_compat(CompatKind::module_coalgebra, s.carrier, s.hopf, "module coalgebra"); break;
    case ComplexKind::module_algebra: detail::require_compat(CompatKind::module_algebra, s.carrier, s.hopf, "module algebra"); break;
    default:
      if (!s.carrier.coaction || s.carrier.coaction->side != Side::right)
        throw Error(ErrorCode::hypothesis_failed, s.carrier.name + " needs a right coaction");
      detail::require_compat(CompatKind::comodule_algebra, s.carrier, s.hopf, "comodule algebra");
  }
  std::size_t amb = ambient_dimension(s, s.n_max);
  if (amb > s.ambient_cap)
    throw Error(ErrorCode::resource_cap, "level " + std::to_string(s.n_max) + " has ambient dimension " +
                                             std::to_string(amb) + " > cap " + std::to_string(s.ambient_cap));
}

// ---------------------------------------------------------------------------
// Module coalgebra complex

namespace detail {

template <class F>
struct CoalgebraAmbient {
  const ComplexSpec<F>& s;
  std::size_t dm, dc, dh;

  explicit CoalgebraAmbient(const ComplexSpec<F>& spec)
      : s(spec), dm(spec.module.dim), dc(spec.carrier.dim), dh(spec.hopf.dim()) {}

  Digits dims(std::size_t n) const { return power_dims(dm, dc, n + 1); }

  auto coact(std::size_t m) const { return split_coaction(s.module.coaction.map.col(m), Side::left, dh, dm); }
  const Vec<F>& act_c(std::size_t h, std::size_t c) const { return s.carrier.action->mats[h].col(c); }

  /// delta_i from level n-1 to n, 0 <= i < n: comultiply c_i.
  Matrix<F> face(std::size_t n, std::size_t i) const {
    return tensor_map<F>(dims(n - 1), dims(n), [&](const Digits& x, auto emit) {
      for (const auto& [ij, c] : s.carrier.coalgebra->comult[x[i + 1]]) {
        Digits t = x;
        t[i + 1] = ij / dc;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i + 2), ij % dc);
        emit(t, c);
      }
    });
  }

  /// delta_n: m (x) c_0 ... c_{n-1} -> m0 (x) c_0(2) (x) c_1 ... c_{n-1} (x) m(-1) c_0(1).
  Matrix<F> flip_face(std::size_t n) const {
    return tensor_map<F>(dims(n - 1), dims(n), [&](const Digits& x, auto emit) {
      for (const auto& [ij, c] : s.carrier.coalgebra->comult[x[1]])
        for (const auto& [h, m0, a] : coact(x[0]))
          for (const auto& [k, b] : act_c(h, ij / dc)) {
            Digits t{m0, ij % dc};
            t.insert(t.end(), x.begin() + 2, x.end());
            t.push_back(k);
            emit(t, c * a * b);
          }
    });
  }

  /// sigma_i from level n+1 to n: apply the counit to c_{i+1}.
  Matrix<F> degeneracy(std::size_t n, std::size_t i) const {
    return tensor_map<F>(dims(n + 1), dims(n), [&](const Digits& x, auto emit) {
      const F& e = s.carrier.coalgebra->counit[x[i + 2]];
      if (e.is_zero()) return;
      Digits t = x;
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i + 2));
      emit(t, e);
    });
  }

  /// tau_n: m (x) c_0 ... c_n -> m0 (x) c_1 ... c_n (x) m(-1) c_0.
  Matrix<F> cyclic(std::size_t n) const {
    return tensor_map<F>(dims(n), dims(n), [&](const Digits& x, auto emit) {
      for (const auto& [h, m0, a] : coact(x[0]))
        for (const auto& [k, b] : act_c(h, x[1])) {
          Digits t{m0};
          t.insert(t.end(), x.begin() + 2, x.end());
          t.push_back(k);
          emit(t, a * b);
        }
    });
  }

  /// Spanning vectors m h (x) x - m (x) h x of the killed subspace, with their (m, h, x)
  /// labels, ordered by x first so that tuples starting with low basis indices come first.
  std::pair<std::vector<Vec<F>>, std::vector<Digits>> probes(std::size_t n, const std::vector<std::size_t>& gens) const {
    std::vector<Matrix<F>> act = s.carrier.action->mats;
    auto diag = diagonal_action(s.hopf, act, n + 1);
    const std::size_t D = diag[0].rows();
    std::vector<Vec<F>> out;
    std::vector<Digits> labels;
    for (std::size_t x = 0; x < D; ++x)
      for (std::size_t h : gens)
        for (std::size_t m = 0; m < dm; ++m) {
          Entries<F> t;
          for (const auto& [mm, c] : s.module.action.mats[h].col(m)) t.emplace_back(mm * D + x, c);
          for (const auto& [y, c] : diag[h].col(x)) t.emplace_back(m * D + y, -c);
          Vec<F> v = Vec<F>::from_terms(std::move(t));
          if (v.empty()) continue;
          out.push_back(std::move(v));
          Digits lab{m, h};
          Digits xd = decode(x, Digits(n + 1, dc));
          lab.insert(lab.end(), xd.begin(), xd.end());
          labels.push_back(std::move(lab));
        }
    return {std::move(out), std::move(labels)};
  }
};

template <class F>
std::string label_tuple(const Digits& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

/// Quotient chart of level n together with the probes that span its killed subspace.
template <class F>
struct CoalgebraLevel {
  QuotientChart<F> chart;
  std::vector<Vec<F>> probes;
  std::vector<Digits> labels;
};

template <class F>
CoalgebraLevel<F> coalgebra_level(const CoalgebraAmbient<F>& amb, std::size_t n, const std::vector<std::size_t>& gens) {
  CoalgebraLevel<F> lv;
  auto [p, l] = amb.probes(n, gens);
  lv.chart = QuotientChart<F>(Subspace<F>::span(tensor_dim(amb.dims(n)), p));
  lv.probes = std::move(p);
  lv.labels = std::move(l);
  return lv;
}

/// Throws TAU_NOT_WELL_DEFINED when f sends a probe of `src` outside the killed subspace of `tgt`.
template <class F>
Matrix<F> descend_or_throw(const Matrix<F>& f, const CoalgebraLevel<F>& src, const CoalgebraLevel<F>& tgt,
                           const std::string& op, std::size_t degree, ErrorCode code) {
  for (std::size_t k = 0; k < src.probes.size(); ++k) {
    if (tgt.chart.project(f.apply(src.probes[k])).empty()) continue;
    throw WitnessedError<F>(code,
                            op + " is not well defined at n=" + std::to_string(degree) + ": the relation m h (x) x = m (x) h x"
                                 " with (m, h, c_0..c_n) = " + label_tuple<F>(src.labels[k]) + " is not preserved",
                            src.probes[k], static_cast<int>(degree), src.labels[k]);
  }
  return induced_map(f, src.chart, tgt.chart, &src.probes);
}

}  // namespace detail

/// Checks that tau_n descends to M (x)_H C^{n+1} at one level, without building the rest.
/// Throws TAU_NOT_WELL_DEFINED with the offending (m, h, c_0..c_n) tuple.
template <class F>
void probe_tau_descent(const ComplexSpec<F>& s, std::size_t n) {
  detail::CoalgebraAmbient<F> amb(s);
  auto gens = algebra_generators(s.hopf);
  auto lv = detail::coalgebra_level(amb, n, gens);
  detail::descend_or_throw(amb.cyclic(n), lv, lv, "tau", n, ErrorCode::tau_not_well_defined);
}

/// The cocyclic module M (x)_H C^{n+1}, n = 0..n_max. M needs to be a module and a
/// comodule; tau and the last face descend exactly when M is anti-Yetter-Drinfeld.
template <class F>
CyclicModule<F> build_coalgebra_complex(const ComplexSpec<F>& s) {
  if (s.kind != ComplexKind::coalgebra) throw Error(ErrorCode::shape_mismatch, "spec is not a coalgebra complex");
  validate_spec(s);
  detail::CoalgebraAmbient<F> amb(s);
  auto gens = algebra_generators(s.hopf);
  const std::size_t N = s.n_max;
  std::vector<detail::CoalgebraLevel<F>> lv;
  for (std::size_t n = 0; n <= N; ++n) lv.push_back(detail::coalgebra_level(amb, n, gens));

  CyclicModule<F> x;
  x.name = "coalgebra(" + s.carrier.name + ", " + s.module.name + ")";
  x.direction = Direction::cosimplicial;
  x.faces.resize(N + 1);
  x.degens.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    x.dims.push_back(lv[n].chart.dim());
    LevelCarrier<F> c;
    c.kind = LevelCarrier<F>::Kind::quotient;
    c.ambient = lv[n].chart.ambient_dim();
    c.chart = lv[n].chart;
    x.carriers.push_back(std::move(c));
    x.cyclic.push_back(detail::descend_or_throw(amb.cyclic(n), lv[n], lv[n], "tau", n, ErrorCode::tau_not_well_defined));
  }
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t i = 0; i < n; ++i)
      x.faces[n].push_back(detail::descend_or_throw(amb.face(n, i), lv[n - 1], lv[n], "delta_" + std::to_string(i), n,
                                                    ErrorCode::not_well_defined));
    x.faces[n].push_back(detail::descend_or_throw(amb.flip_face(n), lv[n - 1], lv[n], "flip-over face delta_" + std::to_string(n),
                                                  n, ErrorCode::tau_not_well_defined));
  }
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      x.degens[n].push_back(detail::descend_or_throw(amb.degeneracy(n, i), lv[n + 1], lv[n], "sigma_" + std::to_string(i), n,
                                                     ErrorCode::not_well_defined));
  return x;
}

/// Ambient (pre-quotient) operators of the coalgebra complex, for cross-checks in tests.
template <class F>
struct CoalgebraAmbientOps {
  Matrix<F> flip_face;    // delta_n from level n-1 to n
  Matrix<F> first_face;   // delta_0 from level n-1 to n
  Matrix<F> cyclic;       // tau_n on level n
};

template <class F>
CoalgebraAmbientOps<F> coalgebra_ambient_ops(const ComplexSpec<F>& s, std::size_t n) {
  detail::CoalgebraAmbient<F> amb(s);
  return {amb.flip_face(n), amb.face(n, 0), amb.cyclic(n)};
}

// ---------------------------------------------------------------------------
// Module algebra complex

namespace detail {

template <class F>
struct ModuleAlgebraAmbient {
  const ComplexSpec<F>& s;
  std::size_t dm, da, dh;
  std::vector<Matrix<F>> act_sinv;  // a -> S^{-1}(e_h) a

  explicit ModuleAlgebraAmbient(const ComplexSpec<F>& spec, const HopfData<F>& h)
      : s(spec), dm(spec.module.dim), da(spec.carrier.dim), dh(h.dim()) {
    for (std::size_t k = 0; k < dh; ++k) act_sinv.push_back(combination(s.carrier.action->mats, h.Sinv(h.basis(k)), da));
  }

  Digits dims(std::size_t n) const { return power_dims(dm, da, n + 1); }
  auto coact(std::size_t m) const { return split_coaction(s.module.coaction.map.col(m), Side::left, dh, dm); }

  /// D_i: V_n -> V_{n-1}, multiply a_i a_{i+1}.
  Matrix<F> face(std::size_t n, std::size_t i) const {
    return tensor_map<F>(dims(n), dims(n - 1), [&](const Digits& x, auto emit) {
      for (const auto& [k, c] : s.carrier.mul_basis(x[i + 1], x[i + 2])) {
        Digits t = x;
        t[i + 1] = k;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i + 2));
        emit(t, c);
      }
    });
  }

  /// D_n: m (x) a_0 ... a_n -> m0 (x) (S^{-1}(m(-1)) a_n) a_0 (x) a_1 ... a_{n-1}.
  Matrix<F> flip_face(std::size_t n) const {
    return tensor_map<F>(dims(n), dims(n - 1), [&](const Digits& x, auto emit) {
      for (const auto& [h, m0, a] : coact(x[0]))
        for (const auto& [b, c] : act_sinv[h].col(x[n + 1]))
          for (const auto& [k, e] : s.carrier.mul_basis(b, x[1])) {
            Digits t{m0, k};
            t.insert(t.end(), x.begin() + 2, x.begin() + static_cast<std::ptrdiff_t>(n + 1));
            emit(t, a * c * e);
          }
    });
  }

  /// S_i: V_n -> V_{n+1}, insert 1 after a_i.
  Matrix<F> degeneracy(std::size_t n, std::size_t i) const {
    return tensor_map<F>(dims(n), dims(n + 1), [&](const Digits& x, auto emit) {
      for (const auto& [u, c] : s.carrier.unit()) {
        Digits t = x;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i + 2), u);
        emit(t, c);
      }
    });
  }

  /// T_n: m (x) a_0 ... a_n -> m0 (x) S^{-1}(m(-1)) a_n (x) a_0 ... a_{n-1}.
  Matrix<F> cyclic(std::size_t n) const {
    return tensor_map<F>(dims(n), dims(n), [&](const Digits& x, auto emit) {
      for (const auto& [h, m0, a] : coact(x[0]))
        for (const auto& [b, c] : act_sinv[h].col(x[n + 1])) {
          Digits t{m0, b};
          t.insert(t.end(), x.begin() + 1, x.begin() + static_cast<std::ptrdiff_t>(n + 1));
          emit(t, a * c);
        }
    });
  }

  /// Functionals f with f(v h) = eps(h) f(v), where (m (x) a) h = m h1 (x) S(h2) a.
  Subspace<F> invariants(std::size_t n, const HopfData<F>& h, const std::vector<std::size_t>& gens) const {
    auto diag = diagonal_action(h, s.carrier.action->mats, n + 1);
    const std::size_t D = diag[0].rows(), V = dm * D;
    std::vector<Matrix<F>> blocks;
    for (std::size_t g : gens) {
      Matrix<F> r(V, V);
      for (const auto& [a, b, c] : h.delta(g))
        r = r + c * kron(s.module.action.mats[a], combination(diag, h.S(h.basis(b)), D));
      blocks.push_back(r.transpose() - h.coalgebra.counit[g] * Matrix<F>::identity(V));
    }
    if (blocks.empty()) return Subspace<F>::full(V);
    std::vector<const Matrix<F>*> ptrs;
    for (const auto& b : blocks) ptrs.push_back(&b);
    return kernel(vstack<F>(ptrs));
  }
};

}  // namespace detail

/// H-invariant functionals on M (x) A^{n+1} with the transposed operators.
template <class F>
CyclicModule<F> build_module_algebra_complex(const ComplexSpec<F>& s) {
  if (s.kind != ComplexKind::module_algebra) throw Error(ErrorCode::shape_mismatch, "spec is not a module algebra complex");
  validate_spec(s);
  HopfData<F> h = s.hopf;
  h.ensure_antipode_inverse();
  detail::ModuleAlgebraAmbient<F> amb(s, h);
  auto gens = algebra_generators(h);
  const std::size_t N = s.n_max;
  std::vector<Subspace<F>> w;
  for (std::size_t n = 0; n <= N; ++n) w.push_back(amb.invariants(n, h, gens));

  CyclicModule<F> x;
  x.name = "module_algebra(" + s.carrier.name + ", " + s.module.name + ")";
  x.direction = Direction::cosimplicial;
  x.faces.resize(N + 1);
  x.degens.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    x.dims.push_back(w[n].dim());
    LevelCarrier<F> c;
    c.kind = LevelCarrier<F>::Kind::subspace;
    c.ambient = w[n].ambient_dim();
    c.sub = w[n];
    x.carriers.push_back(std::move(c));
    x.cyclic.push_back(detail::restrict_or_throw(amb.cyclic(n).transpose(), w[n], w[n], "tau", n));
  }
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t i = 0; i < n; ++i)
      x.faces[n].push_back(detail::restrict_or_throw(amb.face(n, i).transpose(), w[n - 1], w[n], "delta_" + std::to_string(i), n));
    x.faces[n].push_back(detail::restrict_or_throw(amb.flip_face(n).transpose(), w[n - 1], w[n], "delta_" + std::to_string(n), n));
  }
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      x.degens[n].push_back(detail::restrict_or_throw(amb.degeneracy(n, i).transpose(), w[n + 1], w[n], "sigma_" + std::to_string(i), n));
  return x;
}

// ---------------------------------------------------------------------------
// Comodule algebra cohomology: colinear maps A^{n+1} -> M, stored with index x * dim M + m.

namespace detail {

template <class F>
struct ComoduleAmbient {
  const ComplexSpec<F>& s;
  std::size_t dm, da, dh;

  explicit ComoduleAmbient(const ComplexSpec<F>& spec) : s(spec), dm(spec.module.dim), da(spec.carrier.dim), dh(spec.hopf.dim()) {}

  Digits xdims(std::size_t n) const { return Digits(n + 1, da); }
  auto coact_a(std::size_t a) const { return split_coaction(s.carrier.coaction->map.col(a), Side::right, dh, da); }

  /// Multiply a_i a_{i+1}: X_n -> X_{n-1}.
  Matrix<F> mult(std::size_t n, std::size_t i) const {
    return tensor_map<F>(xdims(n), xdims(n - 1), [&](const Digits& x, auto emit) {
      for (const auto& [k, c] : s.carrier.mul_basis(x[i], x[i + 1])) {
        Digits t = x;
        t[i] = k;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i + 1));
        emit(t, c);
      }
    });
  }

  /// Insert 1 after a_i: X_n -> X_{n+1}.
  Matrix<F> insert_unit(std::size_t n, std::size_t i) const {
    return tensor_map<F>(xdims(n), xdims(n + 1), [&](const Digits& x, auto emit) {
      for (const auto& [u, c] : s.carrier.unit()) {
        Digits t = x;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i + 1), u);
        emit(t, c);
      }
    });
  }

  /// a_0 ... a_n -> a_n0 a_0 (x) a_1 ... a_{n-1} (x) a_n1, into X_{n-1} (x) H.
  Matrix<F> wrap_multiply(std::size_t n) const {
    Digits tgt = xdims(n - 1);
    tgt.push_back(dh);
    return tensor_map<F>(xdims(n), tgt, [&](const Digits& x, auto emit) {
      for (const auto& [h, a0, c] : coact_a(x[n]))
        for (const auto& [k, e] : s.carrier.mul_basis(a0, x[0])) {
          Digits t{k};
          t.insert(t.end(), x.begin() + 1, x.begin() + static_cast<std::ptrdiff_t>(n));
          t.push_back(h);
          emit(t, c * e);
        }
    });
  }

  /// a_0 ... a_n -> a_n0 (x) a_0 ... a_{n-1} (x) a_n1, into X_n (x) H.
  Matrix<F> wrap_rotate(std::size_t n) const {
    Digits tgt = xdims(n);
    tgt.push_back(dh);
    return tensor_map<F>(xdims(n), tgt, [&](const Digits& x, auto emit) {
      for (const auto& [h, a0, c] : coact_a(x[n])) {
        Digits t{a0};
        t.insert(t.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
        t.push_back(h);
        emit(t, c);
      }
    });
  }

  /// f -> f o D on Hom(X_tgt, M) -> Hom(X_src, M), for D: X_src -> X_tgt.
  Matrix<F> pullback(const Matrix<F>& d) const {
    Matrix<F> dt = d.transpose();
    Matrix<F> out(d.cols() * dm, d.rows() * dm);
    for (std::size_t y = 0; y < d.rows(); ++y)
      for (std::size_t m = 0; m < dm; ++m) {
        Entries<F> t;
        for (const auto& [x, c] : dt.col(y)) t.emplace_back(x * dm + m, c);
        out.set_col(y * dm + m, SparseVec<F>::from_terms(std::move(t)));
      }
    return out;
  }

  /// f -> (x -> sum f(y) h) for E: X_src -> X_tgt (x) H with E(x) = sum y (x) h.
  Matrix<F> pullback_acting(const Matrix<F>& e, std::size_t tgt_dim) const {
    Matrix<F> et = e.transpose();
    Matrix<F> out(e.cols() * dm, tgt_dim * dm);
    for (std::size_t y = 0; y < tgt_dim; ++y)
      for (std::size_t m = 0; m < dm; ++m) {
        Entries<F> t;
        for (std::size_t h = 0; h < dh; ++h)
          for (const auto& [x, c] : et.col(y * dh + h))
            for (const auto& [mm, a] : s.module.action.mats[h].col(m)) t.emplace_back(x * dm + mm, c * a);
        out.set_col(y * dm + m, SparseVec<F>::from_terms(std::move(t)));
      }
    return out;
  }

  /// Colinear maps: rho_M(f(x)) = (f (x) id) rho_X(x) for every basis x.
  Subspace<F> colinear(std::size_t n) const {
    Matrix<F> rx = diagonal_right_coaction(s.hopf, s.carrier, n + 1);
    const std::size_t X = rx.cols();
    // For each y: the (x, h, c) with rho_X(x) containing c y (x) h.
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, F>>> back(X);
    for (std::size_t x = 0; x < X; ++x)
      for (const auto& [yh, c] : rx.col(x)) back[yh / dh].emplace_back(x, yh % dh, c);
    Matrix<F> l(X * dm * dh, X * dm);
    for (std::size_t x0 = 0; x0 < X; ++x0)
      for (std::size_t m0 = 0; m0 < dm; ++m0) {
        Entries<F> t;
        for (const auto& [mh, c] : s.module.coaction.map.col(m0)) t.emplace_back(x0 * dm * dh + mh, c);  // m' * dh + h
        for (const auto& [x, h, c] : back[x0]) t.emplace_back(x * dm * dh + m0 * dh + h, -c);
        l.set_col(x0 * dm + m0, SparseVec<F>::from_terms(std::move(t)));
      }
    return kernel(l);
  }
};

}  // namespace detail

/// Colinear maps A^{n+1} -> M with (co)faces, codegeneracies (0 <= i <= n) and tau.
template <class F>
CyclicModule<F> build_comodule_algebra_coh(const ComplexSpec<F>& s) {
  if (s.kind != ComplexKind::comodule_algebra_coh) throw Error(ErrorCode::shape_mismatch, "spec is not a comodule algebra cohomology complex");
  validate_spec(s);
  detail::ComoduleAmbient<F> amb(s);
  const std::size_t N = s.n_max;
  std::vector<Subspace<F>> w;
  for (std::size_t n = 0; n <= N; ++n) w.push_back(amb.colinear(n));
  auto xdim = [&](std::size_t n) { return tensor_dim(amb.xdims(n)); };

  CyclicModule<F> x;
  x.name = "comodule_algebra_coh(" + s.carrier.name + ", " + s.module.name + ")";
  x.direction = Direction::cosimplicial;
  x.faces.resize(N + 1);
  x.degens.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    x.dims.push_back(w[n].dim());
    LevelCarrier<F> c;
    c.kind = LevelCarrier<F>::Kind::subspace;
    c.ambient = w[n].ambient_dim();
    c.sub = w[n];
    x.carriers.push_back(std::move(c));
    x.cyclic.push_back(detail::restrict_or_throw(amb.pullback_acting(amb.wrap_rotate(n), xdim(n)), w[n], w[n], "tau", n));
  }
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t i = 0; i < n; ++i)
      x.faces[n].push_back(detail::restrict_or_throw(amb.pullback(amb.mult(n, i)), w[n - 1], w[n], "delta_" + std::to_string(i), n));
    x.faces[n].push_back(detail::restrict_or_throw(amb.pullback_acting(amb.wrap_multiply(n), xdim(n - 1)), w[n - 1], w[n],
                                                   "delta_" + std::to_string(n), n));
  }
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      x.degens[n].push_back(detail::restrict_or_throw(amb.pullback(amb.insert_unit(n, i)), w[n + 1], w[n], "sigma_" + std::to_string(i), n));
  return x;
}

// ---------------------------------------------------------------------------
// Comodule algebra homology: A^{n+1} cotensor M inside A^{n+1} (x) M, index x * dim M + m.

namespace detail {

template <class F>
struct CotensorAmbient {
  const ComplexSpec<F>& s;
  std::size_t dm, da, dh;

  explicit CotensorAmbient(const ComplexSpec<F>& spec) : s(spec), dm(spec.module.dim), da(spec.carrier.dim), dh(spec.hopf.dim()) {}

  Digits dims(std::size_t n) const {
    Digits d(n + 1, da);
    d.push_back(dm);
    return d;
  }
  auto coact_a(std::size_t a) const { return split_coaction(s.carrier.coaction->map.col(a), Side::right, dh, da); }
  const Vec<F>& act(std::size_t h, std::size_t m) const { return s.module.action.mats[h].col(m); }

  Matrix<F> face(std::size_t n, std::size_t i) const {
    return tensor_map<F>(dims(n), dims(n - 1), [&](const Digits& x, auto emit) {
      for (const auto& [k, c] : s.carrier.mul_basis(x[i], x[i + 1])) {
        Digits t = x;
        t[i] = k;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i + 1));
        emit(t, c);
      }
    });
  }

  /// d_n: a_0 ... a_n (x) m -> a_n0 a_0 (x) a_1 ... a_{n-1} (x) a_n1 m.
  Matrix<F> last_face(std::size_t n) const {
    return tensor_map<F>(dims(n), dims(n - 1), [&](const Digits& x, auto emit) {
      for (const auto& [h, a0, c] : coact_a(x[n]))
        for (const auto& [k, e] : s.carrier.mul_basis(a0, x[0]))
          for (const auto& [mm, f] : act(h, x[n + 1])) {
            Digits t{k};
            t.insert(t.end(), x.begin() + 1, x.begin() + static_cast<std::ptrdiff_t>(n));
            t.push_back(mm);
            emit(t, c * e * f);
          }
    });
  }

  Matrix<F> degeneracy(std::size_t n, std::size_t i) const {
    return tensor_map<F>(dims(n), dims(n + 1), [&](const Digits& x, auto emit) {
      for (const auto& [u, c] : s.carrier.unit()) {
        Digits t = x;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i + 1), u);
        emit(t, c);
      }
    });
  }

  /// t_n: a_0 ... a_n (x) m -> a_n0 (x) a_0 ... a_{n-1} (x) a_n1 m.
  Matrix<F> cyclic(std::size_t n) const {
    return tensor_map<F>(dims(n), dims(n), [&](const Digits& x, auto emit) {
      for (const auto& [h, a0, c] : coact_a(x[n]))
        for (const auto& [mm, f] : act(h, x[n + 1])) {
          Digits t{a0};
          t.insert(t.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
          t.push_back(mm);
          emit(t, c * f);
        }
    });
  }

  /// Ker(rho_X (x) id - id (x) lambda_M) inside X (x) M.
  Subspace<F> cotensor(std::size_t n) const {
    Matrix<F> rx = diagonal_right_coaction(s.hopf, s.carrier, n + 1);
    const std::size_t X = rx.cols();
    Matrix<F> l(X * dh * dm, X * dm);
    for (std::size_t x = 0; x < X; ++x)
      for (std::size_t m = 0; m < dm; ++m) {
        Entries<F> t;
        for (const auto& [yh, c] : rx.col(x)) t.emplace_back(yh * dm + m, c);
        for (const auto& [hm, c] : s.module.coaction.map.col(m)) t.emplace_back(x * dh * dm + hm, -c);  // h * dm + m'
        l.set_col(x * dm + m, SparseVec<F>::from_terms(std::move(t)));
      }
    return kernel(l);
  }
};

}  // namespace detail

/// The cyclic module A^{n+1} cotensor M with faces, degeneracies and t_n restricted.
template <class F>
CyclicModule<F> build_comodule_algebra_hom(const ComplexSpec<F>& s) {
  if (s.kind != ComplexKind::comodule_algebra_hom) throw Error(ErrorCode::shape_mismatch, "spec is not a comodule algebra homology complex");
  validate_spec(s);
  detail::CotensorAmbient<F> amb(s);
  const std::size_t N = s.n_max;
  std::vector<Subspace<F>> w;
  for (std::size_t n = 0; n <= N; ++n) w.push_back(amb.cotensor(n));

  CyclicModule<F> x;
  x.name = "comodule_algebra_hom(" + s.carrier.name + ", " + s.module.name + ")";
  x.direction = Direction::simplicial;
  x.faces.resize(N + 1);
  x.degens.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    x.dims.push_back(w[n].dim());
    LevelCarrier<F> c;
    c.kind = LevelCarrier<F>::Kind::subspace;
    c.ambient = w[n].ambient_dim();
    c.sub = w[n];
    x.carriers.push_back(std::move(c));
    x.cyclic.push_back(detail::restrict_or_throw(amb.cyclic(n), w[n], w[n], "t", n));
  }
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t i = 0; i < n; ++i)
      x.faces[n].push_back(detail::restrict_or_throw(amb.face(n, i), w[n], w[n - 1], "d_" + std::to_string(i), n));
    x.faces[n].push_back(detail::restrict_or_throw(amb.last_face(n), w[n], w[n - 1], "d_" + std::to_string(n), n));
  }
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      x.degens[n].push_back(detail::restrict_or_throw(amb.degeneracy(n, i), w[n], w[n + 1], "s_" + std::to_string(i), n));
  return x;
}

/// Dispatch on the spec kind.
template <class F>
CyclicModule<F> build_complex(const ComplexSpec<F>& s) {
  switch (s.kind) {
    case ComplexKind::coalgebra: return build_coalgebra_complex(s);
    case ComplexKind::module_algebra: return build_module_algebra_complex(s);
    case ComplexKind::comodule_algebra_coh: return build_comodule_algebra_coh(s);
    case ComplexKind::comodule_algebra_hom: return build_comodule_algebra_hom(s);
  }
  throw Error(ErrorCode::defect, "unknown complex kind");
}

// ---------------------------------------------------------------------------
// Named specializations

/// C = H with left multiplication and M the one-dimensional module from (delta, sigma).
template <class F>
ComplexSpec<F> connes_moscovici(const HopfData<F>& h, const std::vector<F>& delta, const Vec<F>& sigma,
                                std::size_t n_max = default_n_max) {
  auto m = one_dim(h, OneDimData<F>{delta, sigma}, Version::right_left);
  m.name = "k_delta^sigma";
  return ComplexSpec<F>{ComplexKind::coalgebra, h, regular_module_carrier(h), std::move(m), n_max};
}

/// H = k = M: the ordinary cocyclic module of the algebra A.
template <class F>
ComplexSpec<F> usual_cyclic(const AlgebraData<F>& a, typename F::field_type field = {}, std::size_t n_max = default_n_max,
                             std::string name = "A") {
  auto k = make_ground_hopf<F>(field);
  auto m = one_dim(k, OneDimData<F>{{field.one()}, Vec<F>::unit(0, field.one())}, Version::right_left);
  m.name = "k";
  auto c = with_trivial_action(k, algebra_carrier(a, std::move(name)));
  return ComplexSpec<F>{ComplexKind::module_algebra, std::move(k), std::move(c), std::move(m), n_max};
}

/// H acting on A (e.g. kZ/N through an automorphism) with M = k_eps^sigma.
template <class F>
ComplexSpec<F> twisted(const HopfData<F>& h, const Carrier<F>& a, const Vec<F>& sigma, std::size_t n_max = default_n_max) {
  auto m = one_dim(h, OneDimData<F>{h.coalgebra.counit, sigma}, Version::right_left);
  m.name = "k_eps^sigma";
  return ComplexSpec<F>{ComplexKind::module_algebra, h, a, std::move(m), n_max};
}

/// K with coaction Delta and action k h = S(h2) k h1 as coefficients for a K-module algebra.
template <class F>
ComplexSpec<F> hopf_coefficients_spec(const HopfData<F>& k, const Carrier<F>& a, std::size_t n_max = default_n_max) {
  return ComplexSpec<F>{ComplexKind::module_algebra, k, a, hopf_coefficients(k), n_max};
}

}  // namespace hopfcyclic
