#pragma once

// Built-in Hopf algebras and modules: group algebras of small groups, function
// algebras, Sweedler's algebra and Taft algebras, and the standard coefficient modules.

#include <array>
#include <optional>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "hopf.hpp"
#include "sayd.hpp"

namespace hopfcyclic {

struct FiniteGroup {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::size_t> table;  // product of i and j at i * order + j
  std::size_t identity = 0;

  std::size_t order() const { return labels.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order() + b]; }
  std::size_t inv(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
      if (mul(a, b) == identity) return b;
    throw Error(ErrorCode::defect, "group element without inverse");
  }
  std::size_t conj(std::size_t h, std::size_t g) const { return mul(mul(h, g), inv(h)); }  // h g h^{-1}
};

inline FiniteGroup cyclic_group(std::size_t n) {
  FiniteGroup g;
  g.name = "Z" + std::to_string(n);
  for (std::size_t k = 0; k < n; ++k) g.labels.push_back(k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table.push_back((a + b) % n);
  return g;
}

/// Permutations of {1,2,3}; composition (st)(i) = s(t(i)).
inline FiniteGroup symmetric_group_3() {
  using P = std::array<int, 3>;
  const std::vector<P> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup g;
  g.name = "S3";
  g.labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  for (const auto& s : perms)
    for (const auto& t : perms) {
      P st{s[t[0]], s[t[1]], s[t[2]]};
      for (std::size_t k = 0; k < perms.size(); ++k)
        if (perms[k] == st) g.table.push_back(k);
    }
  return g;
}

/// Symmetries of the square, r^i s^j at index i + 4 j, with s r = r^{-1} s.
inline FiniteGroup dihedral_group_4() {
  FiniteGroup g;
  g.name = "D4";
  g.labels = {"1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"};
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
      std::size_t rot = (b == 0 ? a + c : a + 4 - c) % 4;
      g.table.push_back(rot + 4 * ((b + d) % 2));
    }
  return g;
}

template <class F>
HopfData<F> make_group_algebra(const FiniteGroup& grp, typename F::field_type field = {}) {
  const std::size_t n = grp.order();
  HopfData<F> h{field, {}, {}, {}, {}};
  h.algebra.dim = h.coalgebra.dim = n;
  h.algebra.labels = grp.labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.algebra.mult.push_back(Vec<F>::unit(grp.mul(a, b)));
  h.algebra.unit = Vec<F>::unit(grp.identity);
  h.antipode = Matrix<F>(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.coalgebra.comult.push_back(Vec<F>::unit(a * n + a));
    h.coalgebra.counit.push_back(F(1));
    h.antipode.set_col(a, Vec<F>::unit(grp.inv(a)));
  }
  h.ensure_antipode_inverse();
  return h;
}

/// Taft algebra: g^N = 1, x^N = 0, x g = q g x, Delta x = x (x) 1 + g (x) x, with q a
/// primitive N-th root of unity. Basis g^i x^j at index i + N j.
template <class F>
HopfData<F> make_taft_with_root(std::size_t n, const F& q, typename F::field_type field) {
  const std::size_t d = n * n;
  HopfData<F> h{field, {}, {}, {}, {}};
  h.algebra.dim = h.coalgebra.dim = d;
  std::vector<F> qpow{F(1)};
  for (std::size_t k = 1; k < n * n; ++k) qpow.push_back(qpow.back() * q);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string g = i == 0 ? "" : i == 1 ? "g" : "g^" + std::to_string(i);
      std::string x = j == 0 ? "" : j == 1 ? "x" : "x^" + std::to_string(j);
      h.algebra.labels.push_back(g.empty() && x.empty() ? "1" : g + x);
    }
  // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      std::size_t a = u % n, b = u / n, c = v % n, e = v / n;
      if (b + e >= n) h.algebra.mult.emplace_back();
      else h.algebra.mult.push_back(Vec<F>::unit((a + c) % n + n * (b + e), qpow[(b * c) % n]));
    }
  h.algebra.unit = Vec<F>::unit(0);

  // Extend Delta multiplicatively and S anti-multiplicatively from the generators.
  const std::size_t gi = 1 % d, xi = n;
  Vec<F> dg = Vec<F>::unit(gi * d + gi);
  Vec<F> dx = Vec<F>::unit(xi * d + 0) + Vec<F>::unit(gi * d + xi);
  Vec<F> ginv = Vec<F>::unit(n - 1);
  Vec<F> sx = h.mul(ginv, Vec<F>::unit(xi));
  sx.scale(F(-1));
  h.antipode = Matrix<F>(d, d);
  for (std::size_t u = 0; u < d; ++u) {
    std::size_t a = u % n, b = u / n;
    Vec<F> delta = Vec<F>::unit(0);  // 1 (x) 1
    Vec<F> s = Vec<F>::unit(0);
    for (std::size_t k = 0; k < a; ++k) {
      delta = detail::tensor_mul(h, delta, dg);
      s = h.mul(ginv, s);
    }
    for (std::size_t k = 0; k < b; ++k) {
      delta = detail::tensor_mul(h, delta, dx);
      s = h.mul(sx, s);
    }
    h.coalgebra.comult.push_back(std::move(delta));
    h.coalgebra.counit.push_back(u == 0 ? F(1) : (b == 0 ? F(1) : F(0)));
    h.antipode.set_col(u, s);
  }
  h.ensure_antipode_inverse();
  return h;
}

inline HopfData<Rational> make_sweedler() { return make_taft_with_root<Rational>(2, Rational(-1), RationalField{}); }

inline HopfData<Cyclotomic> make_taft(std::size_t n, const CyclotomicField& field) {
  if (static_cast<std::size_t>(field.order()) % n != 0)
    throw Error(ErrorCode::field_required, "Taft algebra of order " + std::to_string(n) + " needs cyclotomic:" +
                                               std::to_string(n));
  return make_taft_with_root<Cyclotomic>(n, field.root_of_unity(field.order() / static_cast<long long>(n)), field);
}

inline HopfData<Cyclotomic> make_taft(std::size_t n) { return make_taft(n, CyclotomicField(static_cast<int>(n))); }

/// O(G), the dual of the group algebra; basis p_g of point functions.
template <class F>
HopfData<F> make_function_algebra(const FiniteGroup& grp, typename F::field_type field = {}) {
  return dual_hopf(make_group_algebra<F>(grp, field));
}

// ---------------------------------------------------------------------------
// Modules

/// kG graded by g with the conjugation action, in any side convention.
template <class F>
SaydCandidate<F> conjugation_module(const HopfData<F>& h, const FiniteGroup& grp, Version v) {
  const std::size_t n = grp.order();
  SaydCandidate<F> m;
  m.name = "conj(" + grp.name + ")";
  m.dim = n;
  m.labels = grp.labels;
  m.action.side = action_side(v);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix<F> mat(n, n);
    for (std::size_t g = 0; g < n; ++g)
      mat.set_col(g, Vec<F>::unit(m.action.side == Side::left ? grp.conj(a, g) : grp.conj(grp.inv(a), g)));
    m.action.mats.push_back(std::move(mat));
  }
  m.coaction.side = coaction_side(v);
  m.coaction.map = Matrix<F>(n * n, n);
  for (std::size_t g = 0; g < n; ++g)
    m.coaction.map.set_col(g, Vec<F>::unit(g * n + g));  // g (x) m_g and m_g (x) g share an index
  m.verify(h);
  return m;
}

/// The trivial one-dimensional module: action by the counit, coaction by the unit.
template <class F>
SaydCandidate<F> trivial_module(const HopfData<F>& h, Version v) {
  auto m = one_dim(h, OneDimData<F>{h.coalgebra.counit, h.unit()}, v);
  m.name = "k";
  m.verify(h);
  return m;
}

template <class F>
SaydCandidate<F> twisted_module(const HopfData<F>& h, const std::vector<F>& delta, const Vec<F>& sigma, Version v,
                                std::string name) {
  auto m = one_dim(h, OneDimData<F>{delta, sigma}, v);
  m.name = std::move(name);
  m.verify(h);
  return m;
}

/// Character of kZ/N sending g to `root`.
template <class F>
std::vector<F> cyclic_character(std::size_t n, const F& root) {
  std::vector<F> d{F(1)};
  for (std::size_t k = 1; k < n; ++k) d.push_back(d.back() * root);
  return d;
}

/// The algebra H with coaction Delta on the chosen side, as a comodule algebra.
template <class F>
Carrier<F> regular_comodule_algebra(const HopfData<F>& h, Side side = Side::right) {
  Carrier<F> c = carrier_of(h, "H");
  c.coaction = CoactionData<F>{side, Matrix<F>(h.dim() * h.dim(), h.dim())};
  for (std::size_t k = 0; k < h.dim(); ++k) {
    c.coaction->map.set_col(k, h.coalgebra.comult[k]);  // both index layouts read Delta directly
  }
  return c;
}

/// Carrier O(C) with left O(G)-coaction pulled back from conjugation, and the
/// restriction map O(G) -> O(C). C need not be closed under conjugation.
template <class F>
struct FunctionAlgebraScenario {
  Carrier<F> carrier;
  Matrix<F> restriction;
};

template <class F>
FunctionAlgebraScenario<F> conjugation_orbit_scenario(const FiniteGroup& grp, const std::vector<std::size_t>& subset) {
  const std::size_t n = grp.order(), m = subset.size();
  FunctionAlgebraScenario<F> s;
  auto& c = s.carrier;
  c.name = "O(C)";
  c.dim = m;
  for (auto x : subset) c.labels.push_back("q_" + grp.labels[x]);
  AlgebraData<F> alg;
  alg.dim = m;
  alg.labels = c.labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) alg.mult.push_back(i == j ? Vec<F>::unit(i) : Vec<F>{});
  std::vector<typename Vec<F>::Entry> u;
  for (std::size_t i = 0; i < m; ++i) u.emplace_back(i, F(1));
  alg.unit = Vec<F>::from_terms(std::move(u));
  c.algebra = alg;
  auto pos = [&](std::size_t g) -> std::size_t {
    for (std::size_t k = 0; k < m; ++k)
      if (subset[k] == g) return k;
    return npos;
  };
  // lambda(q_d) = sum over g in G, c in C with g c g^{-1} = d of p_g (x) q_c
  Matrix<F> co(n * m, m);
  for (std::size_t di = 0; di < m; ++di) {
    std::vector<typename Vec<F>::Entry> t;
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t ci = 0; ci < m; ++ci)
        if (grp.conj(g, subset[ci]) == subset[di]) t.emplace_back(g * m + ci, F(1));
    co.set_col(di, Vec<F>::from_terms(std::move(t)));
  }
  c.coaction = CoactionData<F>{Side::left, std::move(co)};
  s.restriction = Matrix<F>(m, n);
  for (std::size_t g = 0; g < n; ++g)
    if (pos(g) != npos) s.restriction.set_col(g, Vec<F>::unit(pos(g)));
  return s;
}

/// Conjugacy class of g.
inline std::vector<std::size_t> conjugacy_class(const FiniteGroup& grp, std::size_t g) {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < grp.order(); ++h) out.push_back(grp.conj(h, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// kZ/N (N even) acting on A = k[u]/(u^2 - 1) by g^k u = (-1)^k u.
inline Carrier<Rational> sign_module_algebra(const HopfData<Rational>& h) {
  AlgebraData<Rational> a;
  a.dim = 2;
  a.labels = {"1", "u"};
  a.mult = {Vec<Rational>::unit(0), Vec<Rational>::unit(1), Vec<Rational>::unit(1), Vec<Rational>::unit(0)};
  a.unit = Vec<Rational>::unit(0);
  Carrier<Rational> c = algebra_carrier(a, "k[u]/(u^2-1)");
  c.action = ActionData<Rational>{Side::left, {}};
  for (std::size_t k = 0; k < h.dim(); ++k) {
    Matrix<Rational> m(2, 2);
    m.set_col(0, Vec<Rational>::unit(0));
    m.set_col(1, Vec<Rational>::unit(1, Rational(k % 2 == 0 ? 1 : -1)));
    c.action->mats.push_back(std::move(m));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Named entries

template <class F>
struct NamedModule {
  std::string name;
  SaydCandidate<F> module;
  std::optional<Carrier<F>> module_algebra = std::nullopt;  // replaces the adjoint action in module-algebra scenarios
};

template <class F>
struct CatalogEntry {
  std::string name;
  HopfData<F> hopf;
  std::vector<NamedModule<F>> modules;
};

inline CatalogEntry<Rational> catalog_group_algebra(const FiniteGroup& grp) {
  CatalogEntry<Rational> e{"k" + grp.name, make_group_algebra<Rational>(grp), {}};
  for (Version v : {Version::left_left, Version::left_right, Version::right_left, Version::right_right})
    e.modules.push_back({std::string("conj_") + to_string(v), conjugation_module(e.hopf, grp, v)});
  for (Version v : {Version::right_left, Version::right_right, Version::left_left})
    e.modules.push_back({std::string("trivial_") + to_string(v), trivial_module(e.hopf, v)});
  if (grp.name.rfind("Z", 0) == 0 && grp.order() % 2 == 0) {
    // g -> -1 with sigma = g: anti-Yetter-Drinfeld but not stable
    auto delta = cyclic_character<Rational>(grp.order(), Rational(-1));
    for (Version v : {Version::right_left, Version::right_right, Version::left_left})
      e.modules.push_back({std::string("twisted_unstable_") + to_string(v),
                           twisted_module(e.hopf, delta, Vec<Rational>::unit(1), v, "k_delta^g"),
                           sign_module_algebra(e.hopf)});
  }
  return e;
}

inline CatalogEntry<Rational> catalog_sweedler() {
  CatalogEntry<Rational> e{"sweedler", make_sweedler(), {}};
  const auto& h = e.hopf;
  e.modules.push_back({"k_eps^g", twisted_module(h, h.coalgebra.counit, Vec<Rational>::unit(1), Version::right_left, "k_eps^g")});
  e.modules.push_back({"trivial_right-left", trivial_module(h, Version::right_left)});
  e.modules.push_back({"trivial_left-left", trivial_module(h, Version::left_left)});
  e.modules.push_back({"coefficients", hopf_coefficients(h)});
  return e;
}

inline CatalogEntry<Rational> catalog_function_algebra_s3() {
  FiniteGroup grp = symmetric_group_3();
  CatalogEntry<Rational> e{"O(S3)", make_function_algebra<Rational>(grp), {}};
  auto s = conjugation_orbit_scenario<Rational>(grp, conjugacy_class(grp, 1));
  e.modules.push_back({"O(transpositions)", induced_from_epimorphism(e.hopf, s.carrier, s.restriction)});
  auto t = conjugation_orbit_scenario<Rational>(grp, {grp.identity});
  e.modules.push_back({"O(e)", induced_from_epimorphism(e.hopf, t.carrier, t.restriction)});
  return e;
}

inline CatalogEntry<Rational> catalog_function_algebra_z2() {
  FiniteGroup grp = cyclic_group(2);
  CatalogEntry<Rational> e{"O(Z2)", make_function_algebra<Rational>(grp), {}};
  auto s = conjugation_orbit_scenario<Rational>(grp, {0, 1});
  e.modules.push_back({"O(Z2)", induced_from_epimorphism(e.hopf, s.carrier, s.restriction)});
  return e;
}

inline CatalogEntry<Cyclotomic> catalog_taft(std::size_t n) {
  CatalogEntry<Cyclotomic> e{"taft" + std::to_string(n), make_taft(n), {}};
  const auto& h = e.hopf;
  // S^2 is conjugation by g^{-1}, so (eps, g^{-1}) is a modular pair in involution
  e.modules.push_back({"k_eps^g^-1", twisted_module(h, h.coalgebra.counit, Vec<Cyclotomic>::unit(n - 1, h.field.one()),
                                                    Version::right_left, "k_eps^g^-1")});
  e.modules.push_back({"trivial_right-left", trivial_module(h, Version::right_left)});
  return e;
}


/// Names accepted by the CLI `catalog` command.
inline std::vector<std::string> catalog_names() {
  return {"Z2", "Z3", "Z4", "Z6", "S3", "D4", "O(S3)", "O(Z2)", "sweedler", "taft3"};
}

inline FiniteGroup group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name == "D4") return dihedral_group_4();
  if (name.size() > 1 && name.size() < 5 && name[0] == 'Z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos && std::stoul(name.substr(1)) >= 1)
    return cyclic_group(std::stoul(name.substr(1)));
  throw Error(ErrorCode::parse_error, "unknown group '" + name + "'");
}

/// Entries over Q by catalog name; nullopt for entries that need a cyclotomic field.
inline std::optional<CatalogEntry<Rational>> rational_catalog_entry(const std::string& name) {
  if (name == "sweedler") return catalog_sweedler();
  if (name == "O(S3)") return catalog_function_algebra_s3();
  if (name == "O(Z2)") return catalog_function_algebra_z2();
  if (name.rfind("taft", 0) == 0) return std::nullopt;
  return catalog_group_algebra(group_by_name(name));
}

/// Entries that need Q(zeta_N): "taftN".
inline CatalogEntry<Cyclotomic> cyclotomic_catalog_entry(const std::string& name) {
  const std::string digits = name.substr(4);
  if (name.rfind("taft", 0) != 0 || digits.empty() || digits.size() > 2 ||
      digits.find_first_not_of("0123456789") != std::string::npos || std::stoul(digits) < 2)
    throw Error(ErrorCode::parse_error, "unknown catalog entry '" + name + "'");
  return catalog_taft(std::stoul(digits));
}

}  // namespace hopfcyclic
