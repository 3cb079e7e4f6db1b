#include <gtest/gtest.h>

#include <random>

#include "hopfcyclic/field.hpp"
#include "hopfcyclic/io.hpp"
#include "hopfcyclic/linalg.hpp"
#include "oracles.hpp"

using namespace hopfcyclic;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density_pct) {
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  Matrix<Rational> m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<SparseVec<Rational>::Entry> t;
    for (std::size_t i = 0; i < r; ++i)
      if (pct(rng) < density_pct) t.emplace_back(i, Rational(val(rng)));
    m.set_col(j, SparseVec<Rational>::from_terms(std::move(t)));
  }
  return m;
}

oracle::Dense to_oracle(const Matrix<Rational>& m) {
  oracle::Dense d = oracle::zeros(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, v] : m.col(j)) d[i][j] = v.to_mpq();
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rationals

TEST(Rational, NormalizesSignAndGcd) {
  EXPECT_EQ(q(-6, 8).str(), "-3/4");
  EXPECT_EQ(q(6, -8).str(), "-3/4");
  EXPECT_EQ(q(0, -5).str(), "0");
  EXPECT_TRUE(q(4, 4).is_one());
}

TEST(Rational, ParsesPrintedForms) {
  EXPECT_EQ(Rational::parse("3/4"), q(3, 4));
  EXPECT_EQ(Rational::parse(" -10/4 "), q(-5, 2));
  EXPECT_EQ(Rational::parse("+7"), q(7));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1.5", "abc", "1/2/3", "--1"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::parse_error) << bad;
    }
  }
  try {
    Rational::parse("1/0");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::division_by_zero);
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(q(0).inverse(), Error);
  EXPECT_THROW(q(1) / q(0), Error);
  EXPECT_THROW(Rational(1, 0), Error);
}

// Every operation agrees with GMP on operands that straddle the 64-bit boundary.
TEST(Rational, AgreesWithGmpAcrossOverflow) {
  std::mt19937_64 rng(20240601);
  std::vector<long long> seeds{0, 1, -1, 2, 3, 7, 1LL << 31, (1LL << 62) - 1, -(1LL << 62), 999999937};
  for (int trial = 0; trial < 2000; ++trial) {
    long long a = seeds[rng() % seeds.size()] + static_cast<long long>(rng() % 1000) - 500;
    long long b = seeds[rng() % seeds.size()] + static_cast<long long>(rng() % 1000) + 1;
    long long c = seeds[rng() % seeds.size()] - static_cast<long long>(rng() % 1000);
    long long d = seeds[rng() % seeds.size()] + static_cast<long long>(rng() % 1000) + 1;
    if (b == 0 || d == 0) continue;
    Rational x(a, b), y(c, d);
    mpq_class X(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
    mpq_class Y(mpz_class(static_cast<long>(c)), mpz_class(static_cast<long>(d)));
    X.canonicalize();
    Y.canonicalize();
    ASSERT_EQ((x + y).to_mpq(), X + Y);
    ASSERT_EQ((x - y).to_mpq(), X - Y);
    ASSERT_EQ((x * y).to_mpq(), X * Y);
    if (c != 0) {
      ASSERT_EQ((x / y).to_mpq(), X / Y);
    }
    ASSERT_EQ(x == y, X == Y);
    ASSERT_EQ(x < y, X < Y);
  }
}

TEST(Rational, BigValuesShrinkBackToCanonicalForm) {
  Rational big = Rational::parse("340282366920938463463374607431768211456");  // 2^128
  Rational back = big / big;
  EXPECT_TRUE(back.is_one());
  EXPECT_EQ(back, q(1));
}

// ---------------------------------------------------------------------------
// Cyclotomic fields

TEST(Cyclotomic, PolynomialsForSmallOrders) {
  auto str = [](const RatPoly& p) {
    std::string s;
    for (const auto& c : p) s += c.str() + " ";
    return s;
  };
  EXPECT_EQ(str(cyclotomic_polynomial(1)), "-1 1 ");
  EXPECT_EQ(str(cyclotomic_polynomial(2)), "1 1 ");
  EXPECT_EQ(str(cyclotomic_polynomial(3)), "1 1 1 ");
  EXPECT_EQ(str(cyclotomic_polynomial(4)), "1 0 1 ");
  EXPECT_EQ(str(cyclotomic_polynomial(6)), "1 -1 1 ");
  EXPECT_EQ(str(cyclotomic_polynomial(8)), "1 0 0 0 1 ");
  EXPECT_EQ(str(cyclotomic_polynomial(12)), "1 0 -1 0 1 ");
}

TEST(Cyclotomic, DegreeIsTotient) {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15}) EXPECT_EQ(CyclotomicField(n).degree(), euler_totient(n)) << n;
}

TEST(Cyclotomic, RootOfUnityHasExactOrder) {
  for (int n : {3, 4, 5, 6, 8}) {
    CyclotomicField k(n);
    Cyclotomic z = k.zeta(), p = k.one();
    for (int e = 1; e < n; ++e) {
      p = p * z;
      EXPECT_FALSE(p == k.one()) << n << " " << e;
    }
    EXPECT_TRUE(p * z == k.one()) << n;
  }
}

TEST(Cyclotomic, ImaginaryUnitSquaresToMinusOne) {
  CyclotomicField k(4);
  EXPECT_TRUE(k.zeta() * k.zeta() == k.from_int(-1));
}

TEST(Cyclotomic, InversesAreExact) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> v(-4, 4);
  for (int n : {3, 5, 8, 12}) {
    CyclotomicField k(n);
    for (int t = 0; t < 40; ++t) {
      RatPoly c;
      for (int i = 0; i < k.degree(); ++i) c.push_back(Rational(v(rng)));
      Cyclotomic a = k.from_coeffs(c);
      if (a.is_zero()) continue;
      EXPECT_TRUE(a * a.inverse() == k.one());
    }
  }
}

TEST(Cyclotomic, MixingFieldsIsRejected) {
  CyclotomicField a(3), b(5);
  try {
    auto s = a.zeta() + b.zeta();
    (void)s;
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::field_mismatch);
  }
}

TEST(Cyclotomic, PrintedFormParsesBack) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> v(-5, 5);
  for (int n : {3, 4, 7, 12}) {
    CyclotomicField k(n);
    for (int t = 0; t < 30; ++t) {
      RatPoly c;
      for (int i = 0; i < k.degree(); ++i) c.push_back(Rational(v(rng), 1 + std::abs(v(rng))));
      Cyclotomic a = k.from_coeffs(c);
      EXPECT_TRUE(parse_scalar(a.str(), k) == a) << a.str();
    }
  }
  CyclotomicField k3(3);
  EXPECT_TRUE(parse_scalar("z^3", k3) == k3.one());
  EXPECT_TRUE(parse_scalar("-1/2*z + 1/2*z", k3).is_zero());
}

// ---------------------------------------------------------------------------
// Linear algebra, against a dense GMP elimination

TEST(LinearAlgebra, RankMatchesDenseOracle) {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    auto m = random_matrix(rng, r, c, 35);
    EXPECT_EQ(rank(m), oracle::rank(to_oracle(m)));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(LinearAlgebra, KernelAndImageSatisfyRankNullity) {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    auto m = random_matrix(rng, r, c, 40);
    auto k = kernel(m);
    auto im = image(m);
    EXPECT_EQ(k.dim() + im.dim(), c);
    for (const auto& v : k.basis()) EXPECT_TRUE(m.apply(v).empty());
    for (std::size_t j = 0; j < c; ++j) EXPECT_TRUE(im.contains(m.col(j)));
  }
}

TEST(LinearAlgebra, SolveReturnsPreimage) {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    auto m = random_matrix(rng, r, c, 50);
    auto x = random_matrix(rng, c, 1, 60).col(0);
    auto b = m.apply(x);
    auto y = solve(m, b);
    EXPECT_EQ(m.apply(y), b);
  }
  auto zero = Matrix<Rational>(2, 2);
  try {
    solve(zero, SparseVec<Rational>::unit(0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_solution);
  }
}

TEST(LinearAlgebra, InverseOfInvertibleMatrices) {
  std::mt19937 rng(13);
  int tested = 0;
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + rng() % 6;
    auto m = random_matrix(rng, n, n, 70);
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), oracle::rank(to_oracle(m)) == n);
    if (inv) {
      ++tested;
      EXPECT_EQ(m * *inv, Matrix<Rational>::identity(n));
    }
  }
  EXPECT_GT(tested, 10);
}

TEST(LinearAlgebra, QuotientChartProjectsAndLifts) {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + rng() % 7;
    auto gens = random_matrix(rng, n, 1 + rng() % n, 50);
    std::vector<SparseVec<Rational>> cols;
    for (std::size_t j = 0; j < gens.cols(); ++j) cols.push_back(gens.col(j));
    auto u = Subspace<Rational>::span(n, cols);
    auto chart = quotient(n, u);
    EXPECT_EQ(chart.dim() + u.dim(), n);
    for (const auto& v : cols) EXPECT_TRUE(chart.project(v).empty());
    for (std::size_t k = 0; k < chart.dim(); ++k) {
      auto e = SparseVec<Rational>::unit(k);
      EXPECT_EQ(chart.project(chart.lift(e)), e);
    }
    // v - lift(project(v)) lies in U
    auto v = random_matrix(rng, n, 1, 80).col(0);
    auto d = v;
    d.axpy(Rational(-1), chart.lift(chart.project(v)));
    EXPECT_TRUE(u.contains(d));
  }
}

TEST(LinearAlgebra, InducedMapRejectsMapsThatDoNotDescend) {
  // U = span(e0) in k^2; the swap sends e0 to e1, which is not in U.
  auto u = Subspace<Rational>::span(2, {SparseVec<Rational>::unit(0)});
  auto chart = quotient(2, u);
  Matrix<Rational> swap(2, 2);
  swap.set_col(0, SparseVec<Rational>::unit(1));
  swap.set_col(1, SparseVec<Rational>::unit(0));
  try {
    induced_map(swap, chart, chart);
    ADD_FAILURE();
  } catch (const WitnessedError<Rational>& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_well_defined);
    EXPECT_EQ(e.witness(), SparseVec<Rational>::unit(0));
  }
  auto id = induced_map(Matrix<Rational>::identity(2), chart, chart);
  EXPECT_EQ(id, Matrix<Rational>::identity(1));
}

TEST(LinearAlgebra, RestrictionRejectsEscapingOperators) {
  auto w = Subspace<Rational>::span(2, {SparseVec<Rational>::unit(0)});
  Matrix<Rational> swap(2, 2);
  swap.set_col(0, SparseVec<Rational>::unit(1));
  swap.set_col(1, SparseVec<Rational>::unit(0));
  try {
    restrict_map(swap, w, w);
    ADD_FAILURE();
  } catch (const WitnessedError<Rational>& e) {
    EXPECT_EQ(e.code(), ErrorCode::operator_escapes_subspace);
  }
}

TEST(LinearAlgebra, WorksOverCyclotomicFields) {
  CyclotomicField k(3);
  Cyclotomic z = k.zeta();
  // [[1, z], [z^2, 1]] has determinant 1 - z^3 = 0
  auto m = Matrix<Cyclotomic>::from_dense({{k.one(), z}, {z * z, k.one()}});
  EXPECT_EQ(rank(m), 1u);
  auto ker = kernel(m);
  ASSERT_EQ(ker.dim(), 1u);
  EXPECT_TRUE(m.apply(ker.basis()[0]).empty());
}
