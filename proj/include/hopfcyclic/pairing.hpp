#pragma once

// Pairings of Hopf-cyclic classes of a module coalgebra C and a module algebra A into the
// ordinary cyclic cohomology of A, for C acting on A.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "check_report.hpp"
#include "complexes.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "sayd.hpp"

namespace hopfcyclic {

/// C (x) A -> A, column c * dim A + a holding c a.
template <class F>
struct CoalgebraActionOnAlgebra {
  Matrix<F> map;

  Vec<F> act(std::size_t c, const Vec<F>& a, std::size_t da) const {
    Vec<F> out;
    for (const auto& [i, s] : a) out.axpy(s, map.col(c * da + i));
    return out;
  }
};

/// c(ab) = (c1 a)(c2 b), c 1 = eps(c) 1 and h(c a) = (h c) a on basis tuples.
template <class F>
CheckReport check_c_action(const CoalgebraActionOnAlgebra<F>& action, const Carrier<F>& c, const Carrier<F>& a,
                           const HopfData<F>& h) {
  const std::size_t dc = c.dim, da = a.dim, dh = h.dim();
  if (action.map.rows() != da || action.map.cols() != dc * da)
    throw Error(ErrorCode::shape_mismatch, "coalgebra action must be dim A x (dim C * dim A)");
  if (!c.coalgebra || !a.algebra || !c.action || !a.action)
    throw Error(ErrorCode::shape_mismatch, "need a module coalgebra and a module algebra");
  CheckReport rep;
  auto& mult = rep.add("multiplicative");
  for (std::size_t ci = 0; ci < dc && mult.pass; ++ci)
    for (std::size_t x = 0; x < da && mult.pass; ++x)
      for (std::size_t y = 0; y < da && mult.pass; ++y) {
        Vec<F> lhs = action.act(ci, a.mul_basis(x, y), da);
        Vec<F> rhs;
        for (const auto& [ij, s] : c.coalgebra->comult[ci])
          rhs.axpy(s, a.mul(action.map.col((ij / dc) * da + x), action.map.col((ij % dc) * da + y)));
        if (lhs != rhs)
          rep.fail(mult, {ci, x, y}, "(c,a,b)=(" + std::to_string(ci) + "," + std::to_string(x) + "," + std::to_string(y) +
                                         "): " + lhs.str() + " vs " + rhs.str());
      }
  auto& unit = rep.add("unital");
  for (std::size_t ci = 0; ci < dc && unit.pass; ++ci) {
    Vec<F> lhs = action.act(ci, a.unit(), da);
    Vec<F> rhs = a.unit();
    rhs.scale(c.coalgebra->counit[ci]);
    if (lhs != rhs) rep.fail(unit, {ci}, "c=" + std::to_string(ci) + ": " + lhs.str() + " vs " + rhs.str());
  }
  auto& lin = rep.add("h_linear");
  for (std::size_t hi = 0; hi < dh && lin.pass; ++hi)
    for (std::size_t ci = 0; ci < dc && lin.pass; ++ci)
      for (std::size_t x = 0; x < da && lin.pass; ++x) {
        Vec<F> lhs = a.act_basis(hi, action.map.col(ci * da + x));
        Vec<F> rhs;
        for (const auto& [k, s] : c.act_basis(hi, Vec<F>::unit(ci))) rhs.axpy(s, action.map.col(k * da + x));
        if (lhs != rhs)
          rep.fail(lin, {hi, ci, x}, "(h,c,a)=(" + std::to_string(hi) + "," + std::to_string(ci) + "," + std::to_string(x) +
                                         "): " + lhs.str() + " vs " + rhs.str());
      }
  return rep;
}

/// The adjoint action c a = c1 a S(c2) of H on itself, as C = H acting on A = H.
template <class F>
CoalgebraActionOnAlgebra<F> adjoint_coalgebra_action(const HopfData<F>& h) {
  const std::size_t d = h.dim();
  CoalgebraActionOnAlgebra<F> out{Matrix<F>(d, d * d)};
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t a = 0; a < d; ++a) {
      Vec<F> col;
      for (const auto& [x, y, s] : h.delta(c)) col.axpy(s, h.mul(h.mul(h.basis(x), h.basis(a)), h.S(h.basis(y))));
      out.map.set_col(c * d + a, col);
    }
  return out;
}

/// Verdict on a functional on M (x) A as a closed 0-cocycle of the module algebra complex.
template <class F>
struct ZeroCocycleVerdict {
  bool closed = false;
  CheckReport report;  // items delta_invariant (H-invariance) and sigma_trace (b_0 f = 0)
  SparseVec<F> coordinates;
};

/// f is given on the ambient basis m * dim A + a of M (x) A.
template <class F>
ZeroCocycleVerdict<F> is_closed_zero_cocycle(const SparseVec<F>& f, const ComplexSpec<F>& spec, const CyclicModule<F>& x) {
  if (spec.kind != ComplexKind::module_algebra) throw Error(ErrorCode::shape_mismatch, "need a module algebra complex");
  if (x.levels() < 2 || !x.carriers[0].sub) throw Error(ErrorCode::requires_degrees, "complex must be built at levels 0 and 1");
  ZeroCocycleVerdict<F> v;
  auto& inv = v.report.add("delta_invariant");
  auto& tr = v.report.add("sigma_trace");
  auto c = x.carriers[0].sub->coordinates(f);
  if (!c) {
    v.report.fail(inv, {}, "f((m (x) a) h) != eps(h) f(m (x) a) for some basis h");
    v.report.fail(tr, {}, "not evaluated");
    return v;
  }
  v.coordinates = *c;
  // b_0 f on M (x) A (x) A: f(m (x) a0 a1) - f(m0 (x) (S^{-1}(m(-1)) a1) a0)
  HopfData<F> h = spec.hopf;
  h.ensure_antipode_inverse();
  detail::ModuleAlgebraAmbient<F> amb(spec, h);
  SparseVec<F> b0 = amb.face(1, 0).transpose().apply(f) - amb.flip_face(1).transpose().apply(f);
  if (!b0.empty()) {
    auto d = decode(b0.lead(), amb.dims(1));
    v.report.fail(tr, d, "fails at (m, a0, a1) = " + detail::label_tuple<F>(d));
  }
  v.closed = v.report.ok();
  return v;
}

/// Pairing output: a cochain on A^{n+1} (index in the tensor basis) checked against the
/// ordinary cyclic complex of A.
template <class F>
struct PairingResult {
  std::size_t n = 0;
  SparseVec<F> cochain;
  bool cocycle = false;    // b phi = 0 and tau phi = (-1)^n phi
  bool coboundary = false; // phi in B^n(A)
  CheckReport report;
};

namespace detail {

/// The ordinary cyclic complex of the algebra underlying `a`, built to level n + 1.
template <class F>
CyclicModule<F> ordinary_complex(const Carrier<F>& a, const typename F::field_type& field, std::size_t n) {
  auto s = usual_cyclic<F>(*a.algebra, field, n + 1, a.name);
  s.ambient_cap = static_cast<std::size_t>(-1);
  return build_complex(s);
}

template <class F>
PairingResult<F> classify_output(std::size_t n, SparseVec<F> phi, const CyclicModule<F>& ord) {
  PairingResult<F> r;
  r.n = n;
  r.cochain = std::move(phi);
  auto& cz = r.report.add("output_closed");
  auto& cc = r.report.add("output_cyclic");
  SparseVec<F> bphi = hochschild_b(ord, n).apply(r.cochain);
  if (!bphi.empty()) r.report.fail(cz, {bphi.lead()}, "b phi != 0 at " + std::to_string(bphi.lead()));
  SparseVec<F> tphi = ord.cyclic[n].apply(r.cochain);
  SparseVec<F> want = r.cochain;
  want.scale(F(n % 2 ? -1 : 1));
  if (tphi != want) r.report.fail(cc, {}, "tau phi != (-1)^n phi");
  r.cocycle = r.report.ok();
  if (!r.cocycle)
    throw WitnessedError<F>(ErrorCode::output_not_cocycle,
                            "pairing output is not a cyclic cocycle at n=" + std::to_string(n) + ": " +
                                r.report.first_failure()->name + " " + r.report.first_failure()->detail,
                            r.cochain, static_cast<int>(n));
  Subspace<F> b(ord.dims[n]);
  if (n > 0) {
    Subspace<F> k = kernel(shifted_identity_difference(ord.cyclic[n - 1], n - 1));
    b = image(hochschild_b(ord, n - 1) * k.inclusion());
  }
  r.coboundary = b.contains(r.cochain);
  return r;
}

template <class F>
bool is_cyclic_cocycle(const CyclicModule<F>& x, std::size_t n, const SparseVec<F>& v) {
  if (!hochschild_b(x, n).apply(v).empty()) return false;
  SparseVec<F> want = v;
  want.scale(F(n % 2 ? -1 : 1));
  return x.cyclic[n].apply(v) == want;
}

}  // namespace detail

/// Inputs shared by both pairings: C with its coalgebra complex, A with its module
/// algebra complex, the action of C on A. Both complexes need levels up to n + 1.
template <class F>
struct PairingSetup {
  ComplexSpec<F> coalgebra_spec;   // C and M
  ComplexSpec<F> algebra_spec;     // A and M
  CyclicModule<F> coalgebra_complex;
  CyclicModule<F> algebra_complex;
  CoalgebraActionOnAlgebra<F> action;
};

template <class F>
PairingSetup<F> make_pairing_setup(ComplexSpec<F> cs, ComplexSpec<F> as, CoalgebraActionOnAlgebra<F> action) {
  auto rep = check_c_action(action, cs.carrier, as.carrier, cs.hopf);
  if (!rep.ok())
    throw Error(ErrorCode::hypothesis_failed, "C does not act on A: " + rep.first_failure()->name + " " + rep.first_failure()->detail);
  auto sayd = check_sayd(cs.hopf, cs.module);
  if (!sayd_ok(sayd)) throw Error(ErrorCode::hypothesis_failed, "coefficients are not stable anti-Yetter-Drinfeld: " + first_non_yd_failure(sayd));
  PairingSetup<F> p{std::move(cs), std::move(as), {}, {}, std::move(action)};
  p.coalgebra_complex = build_complex(p.coalgebra_spec);
  p.algebra_complex = build_complex(p.algebra_spec);
  return p;
}

/// [m (x)_H (c_0 ... c_n)] # f : a_0 ... a_n -> f(m (x) (c_0 a_0) ... (c_n a_n)).
/// z is a level-n vector of the coalgebra complex (quotient coordinates) and f a functional
/// on M (x) A (ambient coordinates).
template <class F>
PairingResult<F> pair_n0(const PairingSetup<F>& p, std::size_t n, const SparseVec<F>& z, const SparseVec<F>& f) {
  const auto& xc = p.coalgebra_complex;
  if (n + 1 >= xc.levels() || p.algebra_complex.levels() < 2)
    throw Error(ErrorCode::requires_degrees, "pairing in degree " + std::to_string(n) + " needs level " + std::to_string(n + 1));
  if (!detail::is_cyclic_cocycle(xc, n, z))
    throw WitnessedError<F>(ErrorCode::representative_invalid, "coalgebra class representative is not in Z^" + std::to_string(n), z,
                            static_cast<int>(n));
  auto zc = is_closed_zero_cocycle(f, p.algebra_spec, p.algebra_complex);
  if (!zc.closed)
    throw WitnessedError<F>(ErrorCode::representative_invalid, "f is not a closed 0-cocycle: " + zc.report.first_failure()->name, f, 0);

  const auto& c = p.coalgebra_spec.carrier;
  const auto& a = p.algebra_spec.carrier;
  const std::size_t dc = c.dim, da = a.dim;
  SparseVec<F> zamb = xc.carriers[n].chart->lift(z);
  const detail::Digits zdims = power_dims(p.coalgebra_spec.module.dim, dc, n + 1);
  const detail::Digits adims(n + 1, da);
  const std::size_t A = tensor_dim(adims);
  std::vector<detail::Digits> zterms;
  for (const auto& [idx, s] : zamb) zterms.push_back(decode(idx, zdims));

  detail::Entries<F> out;
  for (std::size_t t = 0; t < A; ++t) {
    auto as = decode(t, adims);
    F val(0);
    std::size_t k = 0;
    for (const auto& [idx, s] : zamb) {
      const auto& zd = zterms[k++];
      Vec<F> prod = p.action.map.col(zd[1] * da + as[0]);
      for (std::size_t i = 1; i <= n && !prod.empty(); ++i) prod = a.mul(prod, p.action.map.col(zd[i + 1] * da + as[i]));
      for (const auto& [ai, e] : prod) val += s * e * f.at(zd[0] * da + ai);
    }
    if (!val.is_zero()) out.emplace_back(t, val);
  }
  auto ord = detail::ordinary_complex(a, p.algebra_spec.hopf.field, n);
  return detail::classify_output(n, SparseVec<F>::from_terms(std::move(out)), ord);
}

/// (m (x)_H c) # [f] : a_0 ... a_n -> f(m (x) c(1) a_0 (x) ... (x) c(n+1) a_n).
/// z is a level-0 vector of the coalgebra complex and f a level-n vector of the module
/// algebra complex (subspace coordinates).
template <class F>
PairingResult<F> pair_0n(const PairingSetup<F>& p, std::size_t n, const SparseVec<F>& z, const SparseVec<F>& f) {
  const auto& xc = p.coalgebra_complex;
  const auto& xa = p.algebra_complex;
  if (xc.levels() < 2 || n + 1 >= xa.levels())
    throw Error(ErrorCode::requires_degrees, "pairing in degree " + std::to_string(n) + " needs level " + std::to_string(n + 1));
  if (!detail::is_cyclic_cocycle(xc, 0, z))
    throw WitnessedError<F>(ErrorCode::representative_invalid, "coalgebra 0-cocycle representative is not closed", z, 0);
  if (!detail::is_cyclic_cocycle(xa, n, f))
    throw WitnessedError<F>(ErrorCode::representative_invalid, "algebra class representative is not in Z^" + std::to_string(n), f,
                            static_cast<int>(n));

  const auto& c = p.coalgebra_spec.carrier;
  const auto& a = p.algebra_spec.carrier;
  const std::size_t dc = c.dim, da = a.dim;
  SparseVec<F> zamb = xc.carriers[0].chart->lift(z);
  SparseVec<F> famb = xa.carriers[n].sub->inclusion().apply(f);
  const detail::Digits adims(n + 1, da);
  const std::size_t A = tensor_dim(adims);

  // iterated coproduct c(1) (x) ... (x) c(n+1) of each basis c
  std::vector<Vec<F>> iter(dc);
  for (std::size_t ci = 0; ci < dc; ++ci) {
    Vec<F> cur = Vec<F>::unit(ci);
    for (std::size_t k = 0; k < n; ++k) {
      detail::Entries<F> t;
      for (const auto& [idx, s] : cur)
        for (const auto& [ij, e] : c.coalgebra->comult[idx % dc]) t.emplace_back(((idx / dc) * dc + ij / dc) * dc + ij % dc, s * e);
      cur = Vec<F>::from_terms(std::move(t));
    }
    iter[ci] = std::move(cur);
  }

  detail::Entries<F> out;
  for (std::size_t t = 0; t < A; ++t) {
    auto as = decode(t, adims);
    F val(0);
    for (const auto& [idx, s] : zamb) {
      std::size_t m = idx / dc, ci = idx % dc;
      for (const auto& [cidx, e] : iter[ci]) {
        auto cs = decode(cidx, detail::Digits(n + 1, dc));
        // expand (c_1 a_0) (x) ... (x) (c_{n+1} a_n) and evaluate f
        std::vector<std::pair<std::size_t, F>> acc{{m, s * e}};
        for (std::size_t i = 0; i <= n && !acc.empty(); ++i) {
          std::vector<std::pair<std::size_t, F>> next;
          for (const auto& [pre, w] : acc)
            for (const auto& [ai, g] : p.action.map.col(cs[i] * da + as[i])) next.emplace_back(pre * da + ai, w * g);
          acc = std::move(next);
        }
        for (const auto& [idx2, w] : acc) val += w * famb.at(idx2);
      }
    }
    if (!val.is_zero()) out.emplace_back(t, val);
  }
  auto ord = detail::ordinary_complex(a, p.algebra_spec.hopf.field, n);
  return detail::classify_output(n, SparseVec<F>::from_terms(std::move(out)), ord);
}

}  // namespace hopfcyclic
