#include <gtest/gtest.h>

#include "hopfcyclic/catalog.hpp"
#include "hopfcyclic/complexes.hpp"
#include "hopfcyclic/cyclic.hpp"
#include "hopfcyclic/scenarios.hpp"
#include "oracles.hpp"

using namespace hopfcyclic;

namespace {

CyclicModule<Rational> ground_field_module(std::size_t n_max) {
  auto k = make_ground_hopf<Rational>();
  return build_complex(usual_cyclic<Rational>(k.algebra, {}, n_max, "k"));
}

CyclicModule<Rational> group_algebra_module(std::size_t order, std::size_t n_max) {
  auto h = make_group_algebra<Rational>(cyclic_group(order));
  return build_complex(usual_cyclic<Rational>(h.algebra, {}, n_max, "kZ" + std::to_string(order)));
}

}  // namespace

// k: every level is one-dimensional, tau_n = 1, faces are 1: HC^n = k in even degrees.
TEST(Cyclic, GroundFieldPeriodicity) {
  auto x = ground_field_module(5);
  EXPECT_EQ(x.dims, (std::vector<std::size_t>{1, 1, 1, 1, 1, 1}));
  std::vector<std::size_t> hc;
  for (std::size_t n = 0; n <= 4; ++n) hc.push_back(cyclic_cohomology(x, n).dim_hc);
  EXPECT_EQ(hc, (std::vector<std::size_t>{1, 0, 1, 0, 1}));
}

TEST(Cyclic, RangeMatchesSingleDegrees) {
  auto x = group_algebra_module(3, 3);
  auto r = cyclic_cohomology_range(x, 2);
  for (std::size_t n = 0; n <= 2; ++n) {
    ASSERT_NE(r.at(n), nullptr);
    EXPECT_EQ(r.at(n)->dim_hc, cyclic_cohomology(x, n).dim_hc);
  }
}

TEST(Cyclic, HochschildBoundarySquaresToZero) {
  for (const char* name : {"Z2", "S3", "sweedler", "O(S3)"}) {
    auto e = *rational_catalog_entry(name);
    for (const auto& sc : scenarios(e, 3)) {
      if (!sc.stable) continue;
      auto x = build_complex(sc.spec);
      for (std::size_t n = 0; n + 2 <= x.n_max(); ++n) {
        if (x.direction == Direction::cosimplicial) {
          EXPECT_TRUE((hochschild_b(x, n + 1) * hochschild_b(x, n)).is_zero()) << sc.name << " n=" << n;
        } else {
          EXPECT_TRUE((hochschild_b(x, n + 1) * hochschild_b(x, n + 2)).is_zero()) << sc.name << " n=" << n;
        }
      }
    }
  }
}

TEST(Cyclic, IdentitySuiteNamesAndWitnesses) {
  auto x = group_algebra_module(2, 3);
  auto v = verify_identities(x);
  EXPECT_EQ(v.status, CyclicStatus::cyclic);
  EXPECT_NE(v.report.find("cyclic_power n=2"), nullptr);
  // break tau_1
  x.cyclic[1] = Rational(2) * x.cyclic[1];
  auto w = verify_identities(x);
  EXPECT_EQ(w.status, CyclicStatus::failed);
  EXPECT_FALSE(w.first_identity.empty());
  EXPECT_FALSE(w.witness.empty());
}

TEST(Cyclic, BrokenFaceIsReported) {
  auto x = group_algebra_module(2, 2);
  x.faces[2][1] = x.faces[2][0];
  auto v = verify_identities(x);
  EXPECT_EQ(v.status, CyclicStatus::failed);
  // the first identity touching level 2 may be indexed by the lower level
  EXPECT_GE(v.degree, 1u);
  EXPECT_LE(v.degree, 2u);
}

TEST(Cyclic, ParacyclicInputIsRefused) {
  auto e = *rational_catalog_entry("Z4");
  for (const auto& sc : scenarios(e, 2)) {
    if (sc.stable) continue;
    auto x = build_complex(sc.spec);
    auto v = verify_identities(x);
    EXPECT_EQ(v.status, CyclicStatus::paracyclic) << sc.name;
    EXPECT_EQ(v.first_identity, "cyclic_power");
    try {
      if (x.direction == Direction::cosimplicial) cyclic_cohomology(x, 0);
      else cyclic_homology(x, 0);
      ADD_FAILURE() << sc.name;
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::not_cyclic) << sc.name;
    }
  }
}

TEST(Cyclic, TopLevelNeedsOneMore) {
  auto x = group_algebra_module(2, 2);
  try {
    cyclic_cohomology(x, 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::requires_degrees);
  }
}

TEST(Cyclic, DirectionIsChecked) {
  auto x = group_algebra_module(2, 2);
  EXPECT_THROW(cyclic_homology(x, 0), Error);
  EXPECT_THROW(cyclic_cohomology(transpose(x), 0), Error);
}

// Over a field, the dual of a cyclic module has HC_n equal to HC^n of the original.
TEST(Cyclic, TransposeDualizes) {
  for (std::size_t order : {1u, 2u, 3u}) {
    auto x = group_algebra_module(order, 3);
    auto t = transpose(x);
    EXPECT_EQ(verify_identities(t).status, CyclicStatus::cyclic);
    for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(cyclic_homology(t, n).dim_hc, cyclic_cohomology(x, n).dim_hc);
  }
}

TEST(Cyclic, RepresentativesAreCocyclesOutsideB) {
  auto x = group_algebra_module(3, 3);
  for (std::size_t n = 0; n <= 2; ++n) {
    auto r = cyclic_cohomology(x, n);
    EXPECT_EQ(r.dim_hc, r.dim_z - r.dim_b);
    EXPECT_EQ(r.representatives.size(), r.dim_hc);
    Subspace<Rational> b = Subspace<Rational>::span(x.dims[n], r.boundaries);
    for (const auto& v : r.representatives) {
      EXPECT_TRUE(hochschild_b(x, n).apply(v).empty());
      EXPECT_FALSE(b.contains(v));
    }
  }
}

// Both the lambda-quotient and the bicomplex agree with the dense Connes complex.
TEST(Cyclic, AgreesWithDenseOracle) {
  std::vector<AlgebraData<Rational>> algebras{make_ground_hopf<Rational>().algebra,
                                              make_group_algebra<Rational>(cyclic_group(2)).algebra,
                                              make_group_algebra<Rational>(cyclic_group(3)).algebra,
                                              make_sweedler().algebra};
  for (const auto& a : algebras) {
    oracle::CocyclicOracle o{oracle::to_dense(a)};
    auto x = build_complex(usual_cyclic<Rational>(a, {}, 3));
    for (std::size_t n = 0; n <= 2; ++n) {
      EXPECT_EQ(cyclic_cohomology(x, n).dim_hc, o.hc(n)) << a.dim << " n=" << n;
      EXPECT_EQ(bicomplex_oracle(x, n).dim_hc, o.hc(n)) << a.dim << " n=" << n;
    }
  }
}

// Traces on kZ_N are all functionals: HC^0 = N.
TEST(Cyclic, GroupAlgebraTraces) {
  for (std::size_t order : {2u, 3u, 4u}) EXPECT_EQ(cyclic_cohomology(group_algebra_module(order, 1), 0).dim_hc, order);
}

TEST(Cyclic, TruncationKeepsLowerLevels) {
  auto x = group_algebra_module(2, 3);
  auto t = truncate(x, 2);
  EXPECT_EQ(t.n_max(), 2u);
  EXPECT_NO_THROW(t.validate_shapes());
  EXPECT_EQ(cyclic_cohomology(t, 1).dim_hc, cyclic_cohomology(x, 1).dim_hc);
}

TEST(Cyclic, ShapeValidation) {
  auto x = group_algebra_module(2, 2);
  x.degens[0].clear();
  EXPECT_THROW(x.validate_shapes(), Error);
}
