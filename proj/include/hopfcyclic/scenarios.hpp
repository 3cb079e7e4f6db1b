#pragma once

// Ready-made complex specifications for the catalog: every anti-Yetter-Drinfeld
// module is paired with the carriers its version can feed.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "complexes.hpp"
#include "pairing.hpp"

namespace hopfcyclic {

template <class F>
struct Scenario {
  std::string name;  // "<entry>/<module>/<kind>"
  ComplexSpec<F> spec;
  bool stable = true;  // advertised: cyclic when stable, paracyclic otherwise
};

template <class F>
ComplexSpec<F> make_spec(ComplexKind kind, const HopfData<F>& h, const Carrier<F>& carrier, const SaydCandidate<F>& m,
                         std::size_t n_max, std::size_t cap = default_ambient_cap) {
  return ComplexSpec<F>{kind, h, carrier, m, n_max, cap};
}

/// The carrier used for `kind` when none is given: H acting on itself by left
/// multiplication, the adjoint action, or H coacting on itself from the right.
template <class F>
Carrier<F> default_carrier(ComplexKind kind, const HopfData<F>& h) {
  switch (kind) {
    case ComplexKind::coalgebra: return regular_module_carrier(h);
    case ComplexKind::module_algebra: return adjoint_module_carrier(h);
    default: return regular_comodule_algebra(h, Side::right);
  }
}

/// One scenario per (anti-Yetter-Drinfeld module, applicable builder).
/// The ambient cap is lifted to what n_max needs.
template <class F>
std::vector<Scenario<F>> scenarios(const CatalogEntry<F>& e, std::size_t n_max = default_n_max) {
  std::vector<Scenario<F>> out;
  for (const auto& nm : e.modules) {
    if (!nm.module.is_ayd.passed()) continue;
    std::vector<ComplexKind> kinds;
    for (ComplexKind k : {ComplexKind::coalgebra, ComplexKind::module_algebra, ComplexKind::comodule_algebra_coh,
                          ComplexKind::comodule_algebra_hom})
      if (required_version(k) == nm.module.version()) kinds.push_back(k);
    for (ComplexKind k : kinds) {
      Carrier<F> c = k == ComplexKind::module_algebra && nm.module_algebra ? *nm.module_algebra : default_carrier(k, e.hopf);
      std::size_t need = nm.module.dim;
      for (std::size_t i = 0; i <= n_max; ++i) need *= c.dim;
      auto spec = make_spec(k, e.hopf, c, nm.module, n_max, std::max(default_ambient_cap, need));
      out.push_back({e.name + "/" + nm.name + "/" + to_string(k), std::move(spec), nm.module.is_stable.passed()});
    }
  }
  return out;
}

/// Sweedler's algebra with the trivial module in the right-left version: Yetter-Drinfeld
/// but not anti-Yetter-Drinfeld.
inline ComplexSpec<Rational> sweedler_yd_not_ayd_spec(std::size_t n_max = 2) {
  auto e = catalog_sweedler();
  const auto& m = e.modules.at(1).module;
  return make_spec(ComplexKind::coalgebra, e.hopf, regular_module_carrier(e.hopf), m, n_max);
}

template <class F>
struct PairingScenario {
  std::string name;
  ComplexSpec<F> coalgebra;
  ComplexSpec<F> algebra;
  CoalgebraActionOnAlgebra<F> action;
};

/// C = A = H = kS3 with the conjugation module: C acts on itself by left
/// multiplication, A carries the adjoint action, and C acts on A adjointly.
inline PairingScenario<Rational> ks3_adjoint_pairing(std::size_t n_max = 3) {
  auto grp = symmetric_group_3();
  auto h = make_group_algebra<Rational>(grp);
  auto m = conjugation_module(h, grp, Version::right_left);
  return {"kS3 adjoint", make_spec(ComplexKind::coalgebra, h, regular_module_carrier(h), m, n_max),
          make_spec(ComplexKind::module_algebra, h, adjoint_module_carrier(h), m, n_max), adjoint_coalgebra_action(h)};
}

}  // namespace hopfcyclic
