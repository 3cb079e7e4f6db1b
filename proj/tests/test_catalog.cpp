#include <gtest/gtest.h>

#include <chrono>
#include <map>
#include <set>

#include "hopfcyclic/catalog.hpp"
#include "hopfcyclic/scenarios.hpp"

using namespace hopfcyclic;

namespace {

template <class Fn>
void each_entry(Fn&& fn) {
  for (const auto& name : catalog_names()) {
    if (auto e = rational_catalog_entry(name)) fn(*e);
    else fn(cyclotomic_catalog_entry(name));
  }
}

}  // namespace

TEST(Catalog, NamesResolve) {
  std::set<std::string> seen;
  each_entry([&](const auto& e) {
    EXPECT_TRUE(seen.insert(e.name).second) << e.name;
    EXPECT_FALSE(e.modules.empty()) << e.name;
  });
  EXPECT_EQ(seen.size(), catalog_names().size());
  EXPECT_THROW(rational_catalog_entry("Q8"), Error);
  EXPECT_THROW(cyclotomic_catalog_entry("taft"), Error);
  EXPECT_FALSE(rational_catalog_entry("taft3").has_value());
}

TEST(Catalog, Dimensions) {
  std::map<std::string, std::size_t> want{{"Z2", 2}, {"Z3", 3}, {"Z4", 4},       {"Z6", 6},       {"S3", 6},
                                          {"D4", 8}, {"O(S3)", 6}, {"O(Z2)", 2}, {"sweedler", 4}, {"taft3", 9}};
  for (const auto& name : catalog_names()) {
    std::size_t d = rational_catalog_entry(name) ? rational_catalog_entry(name)->hopf.dim()
                                                 : cyclotomic_catalog_entry(name).hopf.dim();
    EXPECT_EQ(d, want.at(name)) << name;
  }
}

TEST(Catalog, GroupsAreGroups) {
  for (const char* n : {"Z1", "Z5", "S3", "D4"}) {
    auto g = group_by_name(n);
    for (std::size_t a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.mul(a, g.inv(a)), g.identity);
      for (std::size_t b = 0; b < g.order(); ++b)
        for (std::size_t c = 0; c < g.order(); ++c) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
  }
  EXPECT_EQ(conjugacy_class(symmetric_group_3(), 1).size(), 3u);
  EXPECT_EQ(conjugacy_class(dihedral_group_4(), 0).size(), 1u);
}

// Stored flags are what the checkers say now.
TEST(Catalog, AdvertisedFlagsAreCurrent) {
  each_entry([](const auto& e) {
    for (const auto& nm : e.modules) {
      auto fresh = verified(e.hopf, nm.module);
      EXPECT_EQ(fresh.is_yd.passed(), nm.module.is_yd.passed()) << e.name << "/" << nm.name;
      EXPECT_EQ(fresh.is_ayd.passed(), nm.module.is_ayd.passed()) << e.name << "/" << nm.name;
      EXPECT_EQ(fresh.is_stable.passed(), nm.module.is_stable.passed()) << e.name << "/" << nm.name;
    }
  });
}

TEST(Catalog, ModuleAlgebraOverride) {
  auto e = *rational_catalog_entry("Z4");
  for (const auto& nm : e.modules) {
    if (nm.name.rfind("twisted_unstable", 0) != 0) continue;
    ASSERT_TRUE(nm.module_algebra.has_value()) << nm.name;
    EXPECT_TRUE(check_compat(CompatKind::module_algebra, *nm.module_algebra, e.hopf).ok());
  }
  for (const auto& sc : scenarios(e, 3))
    if (!sc.stable && sc.spec.kind == ComplexKind::module_algebra) {
      auto x = build_complex(sc.spec);
      EXPECT_EQ(x.dims, (std::vector<std::size_t>{1, 2, 4, 8}));
    }
}

TEST(Catalog, ScenarioNamesAndKinds) {
  auto e = *rational_catalog_entry("Z2");
  auto sc = scenarios(e, 2);
  std::set<std::string> names;
  for (const auto& s : sc) {
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
    EXPECT_EQ(required_version(s.spec.kind), s.spec.module.version()) << s.name;
    EXPECT_EQ(s.name.rfind("kZ2/", 0), 0u) << s.name;
  }
  // right-left feeds two builders, right-right and left-left one each, left-right none:
  // 4 for conj, 4 for trivial, 4 for twisted
  EXPECT_EQ(sc.size(), 12u);
}

TEST(Catalog, EveryScenarioBuildsQuickly) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t built = 0;
  each_entry([&](const auto& e) {
    for (const auto& sc : scenarios(e, 2)) {
      auto x = build_complex(sc.spec);
      auto v = verify_identities(x);
      EXPECT_EQ(v.status, sc.stable ? CyclicStatus::cyclic : CyclicStatus::paracyclic) << sc.name;
      ++built;
    }
  });
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_GT(built, 50u);
  EXPECT_LT(s, 60.0);
}

TEST(Catalog, SpecialScenarios) {
  auto neg = sweedler_yd_not_ayd_spec();
  EXPECT_EQ(neg.kind, ComplexKind::coalgebra);
  EXPECT_TRUE(neg.module.is_yd.passed());
  EXPECT_FALSE(neg.module.is_ayd.passed());
  auto p = ks3_adjoint_pairing(2);
  EXPECT_EQ(p.coalgebra.carrier.dim, 6u);
  EXPECT_EQ(p.algebra.carrier.dim, 6u);
  EXPECT_TRUE(check_c_action(p.action, p.coalgebra.carrier, p.algebra.carrier, p.coalgebra.hopf).ok());
}
