#include <gtest/gtest.h>

#include "hopfcyclic/catalog.hpp"
#include "hopfcyclic/complexes.hpp"
#include "hopfcyclic/scenarios.hpp"
#include "oracles.hpp"

using namespace hopfcyclic;

namespace {

// incl_tgt * op == oracle * incl_src, all dense.
bool same_operator(const oracle::Dense& o, const Matrix<Rational>& op, const Matrix<Rational>& incl_src,
                   const Matrix<Rational>& incl_tgt) {
  auto lhs = oracle::dense(incl_tgt * op);
  auto rhs = oracle::mul(o, oracle::dense(incl_src), incl_src.rows());
  return lhs == rhs;
}

}  // namespace

// H = k = M reproduces the textbook cocyclic module of A operator by operator.
TEST(Complexes, UsualCyclicMatchesDenseOperators) {
  std::vector<AlgebraData<Rational>> algebras{make_ground_hopf<Rational>().algebra,
                                              make_group_algebra<Rational>(cyclic_group(2)).algebra,
                                              make_sweedler().algebra};
  for (const auto& a : algebras) {
    oracle::CocyclicOracle o{oracle::to_dense(a)};
    auto x = build_complex(usual_cyclic<Rational>(a, {}, 2));
    std::vector<Matrix<Rational>> incl;
    for (std::size_t n = 0; n <= 2; ++n) {
      ASSERT_TRUE(x.carriers[n].sub.has_value());
      incl.push_back(x.carriers[n].sub->inclusion());
      EXPECT_EQ(x.dims[n], o.dim(n));
    }
    for (std::size_t n = 0; n <= 2; ++n) {
      EXPECT_TRUE(same_operator(o.cyclic(n), x.cyclic[n], incl[n], incl[n])) << a.dim << " tau_" << n;
      if (n >= 1) {
        for (std::size_t i = 0; i <= n; ++i) {
          EXPECT_TRUE(same_operator(o.face(n, i), x.faces[n][i], incl[n - 1], incl[n])) << a.dim << " delta_" << i << " n=" << n;
        }
      }
      if (n < 2) {
        for (std::size_t i = 0; i <= n; ++i) {
          EXPECT_TRUE(same_operator(o.degeneracy(n, i), x.degens[n][i], incl[n + 1], incl[n]))
              << a.dim << " sigma_" << i << " n=" << n;
        }
      }
    }
  }
}

TEST(Complexes, ConnesMoscoviciLevelsOfGroupAlgebra) {
  for (std::size_t order : {2u, 3u}) {
    auto h = make_group_algebra<Rational>(cyclic_group(order));
    auto x = build_complex(connes_moscovici(h, h.coalgebra.counit, h.unit(), 3));
    std::vector<std::size_t> want{1, order, order * order, order * order * order};
    EXPECT_EQ(x.dims, want);
    EXPECT_EQ(verify_identities(x).status, CyclicStatus::cyclic);
  }
}

// The last face is tau_n delta_0 on the ambient tensor space.
TEST(Complexes, FlipFaceIsCyclicAfterFirstFace) {
  for (const char* name : {"Z3", "S3", "sweedler"}) {
    auto e = *rational_catalog_entry(name);
    for (const auto& sc : scenarios(e, 2)) {
      if (sc.spec.kind != ComplexKind::coalgebra) continue;
      for (std::size_t n = 1; n <= 2; ++n) {
        auto ops = coalgebra_ambient_ops(sc.spec, n);
        EXPECT_EQ(ops.flip_face, ops.cyclic * ops.first_face) << sc.name << " n=" << n;
      }
    }
  }
}

TEST(Complexes, CoalgebraComplexNeedsAntiYetterDrinfeld) {
  auto spec = sweedler_yd_not_ayd_spec(2);
  try {
    build_complex(spec);
    FAIL();
  } catch (const WitnessedError<Rational>& err) {
    EXPECT_EQ(err.code(), ErrorCode::tau_not_well_defined);
    EXPECT_FALSE(err.tuple().empty());
  }
  try {
    probe_tau_descent(spec, 2);
    FAIL();
  } catch (const WitnessedError<Rational>& err) {
    EXPECT_EQ(err.code(), ErrorCode::tau_not_well_defined);
    EXPECT_EQ(err.degree(), 2);
    // (m, h, c_0, c_1, c_2): the unit in every C slot, x acting on m
    EXPECT_EQ(err.tuple(), (std::vector<std::size_t>{0, 2, 0, 0, 0}));
  }
}

TEST(Complexes, UnstableModuleHasMinusIdentityTau0) {
  for (const char* name : {"Z2", "Z4", "Z6"}) {
    auto e = *rational_catalog_entry(name);
    std::size_t seen = 0;
    for (const auto& sc : scenarios(e, 2)) {
      if (sc.stable) continue;
      ++seen;
      auto x = build_complex(sc.spec);
      EXPECT_EQ(x.cyclic[0], Rational(-1) * Matrix<Rational>::identity(x.dims[0])) << sc.name;
      auto v = verify_identities(x);
      EXPECT_EQ(v.status, CyclicStatus::paracyclic) << sc.name;
      EXPECT_EQ(v.degree, 0u) << sc.name;
    }
    EXPECT_EQ(seen, 4u) << name;
  }
}

TEST(Complexes, CatalogScenariosAreCyclic) {
  for (const char* name : {"Z2", "S3", "O(S3)", "O(Z2)", "sweedler"}) {
    auto e = *rational_catalog_entry(name);
    for (const auto& sc : scenarios(e, 2)) {
      if (!sc.stable) continue;
      auto x = build_complex(sc.spec);
      EXPECT_EQ(verify_identities(x).status, CyclicStatus::cyclic) << sc.name;
    }
  }
  auto t = catalog_taft(3);
  for (const auto& sc : scenarios(t, 2)) {
    auto x = build_complex(sc.spec);
    EXPECT_EQ(verify_identities(x).status, CyclicStatus::cyclic) << sc.name;
  }
}

TEST(Complexes, TaftModularPairCohomology) {
  auto t = catalog_taft(3);
  for (const auto& sc : scenarios(t, 3)) {
    if (sc.spec.kind != ComplexKind::coalgebra) continue;
    auto x = build_complex(sc.spec);
    std::vector<std::size_t> hc;
    for (std::size_t n = 0; n <= 2; ++n) hc.push_back(cyclic_cohomology(x, n).dim_hc);
    EXPECT_EQ(hc, (std::vector<std::size_t>{0, 1, 0})) << sc.name;
  }
}

TEST(Complexes, HopfCoefficientsSpecialization) {
  auto h = make_sweedler();
  auto x = build_complex(hopf_coefficients_spec(h, adjoint_module_carrier(h), 2));
  EXPECT_EQ(verify_identities(x).status, CyclicStatus::cyclic);
}

TEST(Complexes, TwistedSpecializationOfGroupAction) {
  auto h = make_group_algebra<Rational>(cyclic_group(2));
  auto x = build_complex(twisted(h, adjoint_module_carrier(h), h.unit(), 3));
  EXPECT_EQ(verify_identities(x).status, CyclicStatus::cyclic);
  EXPECT_EQ(cyclic_cohomology(x, 0).dim_hc, bicomplex_oracle(x, 0).dim_hc);
}

TEST(Complexes, AmbientCapIsEnforced) {
  auto e = *rational_catalog_entry("D4");
  const auto& m = e.modules.at(2).module;  // conj right-left
  auto spec = make_spec(ComplexKind::coalgebra, e.hopf, regular_module_carrier(e.hopf), m, 3);
  EXPECT_GT(ambient_dimension(spec, 3), default_ambient_cap);
  try {
    build_complex(spec);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::resource_cap);
  }
}

TEST(Complexes, VersionIsChecked) {
  auto e = catalog_sweedler();
  const auto& ll = e.modules.at(2).module;  // trivial left-left
  auto spec = make_spec(ComplexKind::coalgebra, e.hopf, regular_module_carrier(e.hopf), ll, 2);
  try {
    build_complex(spec);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::version_mismatch);
  }
}

TEST(Complexes, LevelLimit) {
  auto h = make_group_algebra<Rational>(cyclic_group(1));
  auto spec = usual_cyclic<Rational>(h.algebra, {}, max_degree + 2);
  EXPECT_THROW(build_complex(spec), Error);
}

TEST(Complexes, KindNamesRoundTrip) {
  for (ComplexKind k : {ComplexKind::coalgebra, ComplexKind::module_algebra, ComplexKind::comodule_algebra_coh,
                        ComplexKind::comodule_algebra_hom})
    EXPECT_EQ(complex_kind_from_string(to_string(k)), k);
  EXPECT_THROW(complex_kind_from_string("bogus"), Error);
}

// Invariant-subspace levels of the module-algebra complex are preserved by every operator:
// building succeeds, and each level sits inside the ambient space with the stated dimension.
TEST(Complexes, InvariantLevelsAreSubspaces) {
  auto e = *rational_catalog_entry("S3");
  for (const auto& sc : scenarios(e, 2)) {
    if (sc.spec.kind != ComplexKind::module_algebra) continue;
    auto x = build_complex(sc.spec);
    for (std::size_t n = 0; n <= 2; ++n) {
      ASSERT_TRUE(x.carriers[n].sub.has_value());
      EXPECT_EQ(x.carriers[n].sub->dim(), x.dims[n]);
      EXPECT_EQ(x.carriers[n].ambient, ambient_dimension(sc.spec, n));
    }
  }
}
