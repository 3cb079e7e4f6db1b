#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hopfcyclic/catalog.hpp"
#include "hopfcyclic/io.hpp"

using namespace hopfcyclic;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HOPFCYCLIC_SAMPLES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
void expect_same_hopf(const HopfData<F>& a, const HopfData<F>& b, const std::string& name) {
  EXPECT_EQ(a.algebra.mult, b.algebra.mult) << name;
  EXPECT_EQ(a.algebra.unit, b.algebra.unit) << name;
  EXPECT_EQ(a.coalgebra.comult, b.coalgebra.comult) << name;
  EXPECT_EQ(a.coalgebra.counit, b.coalgebra.counit) << name;
  EXPECT_EQ(a.antipode, b.antipode) << name;
  EXPECT_EQ(a.labels(), b.labels()) << name;
}

template <class F>
void round_trip(const CatalogEntry<F>& e) {
  for (const auto& nm : e.modules) {
    Json j = document_to_json(e.hopf, &nm.module);
    Json reparsed = parse_json_text(j.dump(2));
    auto doc = document_from_json<F>(reparsed);
    expect_same_hopf(doc.hopf, e.hopf, e.name);
    ASSERT_TRUE(doc.module.has_value());
    EXPECT_EQ(doc.module->version(), nm.module.version()) << e.name << "/" << nm.name;
    EXPECT_EQ(doc.module->action.mats, nm.module.action.mats) << e.name << "/" << nm.name;
    EXPECT_EQ(doc.module->coaction.map, nm.module.coaction.map) << e.name << "/" << nm.name;
    // serialization is a fixed point
    EXPECT_EQ(document_to_json(doc.hopf, &*doc.module).dump(), j.dump()) << e.name << "/" << nm.name;
  }
}

template <class Fn>
void expect_code(ErrorCode code, Fn&& fn, const std::string& fragment = "") {
  try {
    fn();
    ADD_FAILURE() << "no error, wanted " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    if (!fragment.empty()) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  }
}

}  // namespace

TEST(Io, EveryCatalogEntryRoundTrips) {
  for (const auto& name : catalog_names()) {
    if (auto e = rational_catalog_entry(name)) round_trip(*e);
    else round_trip(cyclotomic_catalog_entry(name));
  }
}

TEST(Io, FieldFlags) {
  EXPECT_EQ(parse_field_flag("Q").kind, FieldSpec::Kind::rationals);
  auto c = parse_field_flag("cyclotomic:12");
  EXPECT_EQ(c.kind, FieldSpec::Kind::cyclotomic);
  EXPECT_EQ(c.order, 12);
  for (const char* bad : {"", "R", "cyclotomic:", "cyclotomic:0", "cyclotomic:x", "cyclotomic:-3"})
    expect_code(ErrorCode::parse_error, [&] { parse_field_flag(bad); });
}

TEST(Io, FieldJson) {
  EXPECT_EQ(field_to_json(field_from_json(Json{{"kind", "cyclotomic"}, {"n", 3}})).dump(), R"({"kind":"cyclotomic","n":3})");
  expect_code(ErrorCode::parse_error, [] { field_from_json(Json{{"kind", "cyclotomic"}}); });
  expect_code(ErrorCode::parse_error, [] { field_from_json(Json{{"kind", "R"}}); });
}

TEST(Io, ScalarsParse) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  expect_code(ErrorCode::parse_error, [] { parse_rational("1/0"); });
  CyclotomicField k(3);
  EXPECT_TRUE(parse_scalar("z^2 + z + 1", k).is_zero());
  EXPECT_TRUE(parse_scalar("2*z", k) == k.from_int(2) * k.zeta());
  expect_code(ErrorCode::parse_error, [&] { parse_scalar("z^^2", k); });
}

TEST(Io, ZeroDenominatorSampleIsParseError) {
  auto j = parse_json_text(slurp("bad_scalar.json"));
  expect_code(ErrorCode::parse_error, [&] { document_from_json<Rational>(j); }, "hopf.mult");
}

TEST(Io, RaggedAntipodeSampleIsParseError) {
  auto j = parse_json_text(slurp("bad_antipode.json"));
  expect_code(ErrorCode::parse_error, [&] { document_from_json<Rational>(j); }, "antipode");
}

TEST(Io, SyntaxErrorsCarryLineNumbers) {
  expect_code(ErrorCode::parse_error, [] { parse_json_text("{\n  \"a\": 1,\n  \"b\": ]\n}"); }, "line 3");
}

TEST(Io, MissingKeysAreNamed) {
  auto j = parse_json_text(slurp("sweedler.json"));
  j["hopf"].erase("counit");
  expect_code(ErrorCode::parse_error, [&] { document_from_json<Rational>(j); }, "counit");
}

TEST(Io, IndicesOutOfRangeAreRejected) {
  auto j = parse_json_text(slurp("sweedler.json"));
  j["hopf"]["mult"].push_back(Json::array({0, 9, 0, "1"}));
  expect_code(ErrorCode::parse_error, [&] { document_from_json<Rational>(j); });
}

TEST(Io, SamplesLoad) {
  for (const char* s : {"sweedler.json", "sweedler_trivial_rl.json", "sweedler_mpi.json", "kS3_conj_rl.json",
                        "kZ4_twisted_unstable.json", "kD4_conj_rl.json", "OS3_transpositions.json", "ground_field.json"}) {
    auto j = parse_json_text(slurp(s));
    ASSERT_EQ(document_field(j).kind, FieldSpec::Kind::rationals) << s;
    auto doc = document_from_json<Rational>(j);
    EXPECT_TRUE(check_structure(StructureKind::hopf, doc.hopf).ok()) << s;
  }
  for (const char* s : {"taft3_mpi.json", "sweedler_over_q_zeta4.json"}) {
    auto j = parse_json_text(slurp(s));
    ASSERT_EQ(document_field(j).kind, FieldSpec::Kind::cyclotomic) << s;
    auto doc = document_from_json<Cyclotomic>(j);
    EXPECT_TRUE(check_structure(StructureKind::hopf, doc.hopf).ok()) << s;
  }
}

TEST(Io, CarrierPresetsAndExplicitBlocks) {
  auto h = make_sweedler();
  for (const auto& p : carrier_presets()) {
    auto c = carrier_from_json(Json(p), h);
    EXPECT_EQ(c.dim, 4u) << p;
    auto back = carrier_from_json(carrier_to_json(c, h.dim()), h);
    EXPECT_EQ(back.dim, c.dim) << p;
    EXPECT_EQ(back.algebra.has_value(), c.algebra.has_value()) << p;
    EXPECT_EQ(back.action.has_value(), c.action.has_value()) << p;
    EXPECT_EQ(back.coaction.has_value(), c.coaction.has_value()) << p;
    if (c.action) {
      EXPECT_EQ(back.action->mats, c.action->mats) << p;
    }
    if (c.coaction) {
      EXPECT_EQ(back.coaction->map, c.coaction->map) << p;
    }
  }
  expect_code(ErrorCode::parse_error, [&] { carrier_from_json(Json("nonsense"), h); });
}

TEST(Io, AdjointCoalgebraActionPreset) {
  auto h = make_group_algebra<Rational>(symmetric_group_3());
  auto a = c_action_from_json(Json("adjoint"), h, 6, 6);
  EXPECT_EQ(a.map, adjoint_coalgebra_action(h).map);
}
