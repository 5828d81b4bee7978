#include <doctest.h>

#include <algorithm>

#include "ie/errors.hpp"
#include "ie/factor.hpp"
#include "ie/linalg.hpp"
#include "ie/poly.hpp"
#include "ie/rational.hpp"
#include "oracles.hpp"

using namespace ie;
using ie::testing::SplitMix64;

TEST_SUITE("rational") {
  TEST_CASE("normalization keeps lowest terms and positive denominator") {
    Rational r(BigInt(2), BigInt(4));
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);
    Rational s(BigInt(3), BigInt(-6));
    CHECK(s.num() == -1);
    CHECK(s.den() == 2);
    CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
  }

  TEST_CASE("arithmetic") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(1), BigInt(3));
    CHECK((half + third) == Rational(BigInt(5), BigInt(6)));
    CHECK((half - third) == Rational(BigInt(1), BigInt(6)));
    CHECK((half * third) == Rational(BigInt(1), BigInt(6)));
    CHECK((half / third) == Rational(BigInt(3), BigInt(2)));
    CHECK_THROWS_AS(half / Rational(0), DomainError);
    CHECK(third < half);
    CHECK(Rational(-1) < Rational(BigInt(-1), BigInt(2)));
  }

  TEST_CASE("text round trip") {
    CHECK(Rational::from_string("3/2").to_string() == "3/2");
    CHECK(Rational::from_string("-3/2").to_string() == "-3/2");
    CHECK(Rational::from_string("4/2").to_string() == "2");
    CHECK(Rational::from_string(" 7 ").to_string() == "7");
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("x"), ParseError);
  }
}

TEST_SUITE("lambda_poly") {
  TEST_CASE("rendering") {
    CHECK(LambdaPoly().to_string() == "0");
    CHECK(LambdaPoly(7).to_string() == "7");
    LambdaPoly two_sq = LambdaPoly(2) * LambdaPoly::lam() * LambdaPoly::lam();
    CHECK(two_sq.to_string() == "2*lam^2");
    LambdaPoly affine = LambdaPoly(3) * LambdaPoly::lam() + LambdaPoly(1);
    CHECK(affine.to_string() == "3*lam + 1");
    CHECK(affine.to_string(false) == "3*lam+1");
    LambdaPoly mixed = LambdaPoly::lam() * LambdaPoly::lam() - LambdaPoly(2) * LambdaPoly::lam();
    CHECK(mixed.to_string() == "lam^2 - 2*lam");
    CHECK((-mixed).to_string() == "-lam^2 + 2*lam");
  }

  TEST_CASE("evaluation and arithmetic") {
    LambdaPoly p = LambdaPoly::linear(BigInt(1), BigInt(2));  // 2*lam + 1
    CHECK(p.eval(Rational(3)) == Rational(7));
    CHECK(p.eval(Rational(BigInt(-1), BigInt(2))) == Rational(0));
    CHECK((p * p).degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(5) == 0);
  }

  TEST_CASE("exact division") {
    LambdaPoly p = LambdaPoly::linear(BigInt(-1), BigInt(1));   // lam - 1
    LambdaPoly q = LambdaPoly::linear(BigInt(3), BigInt(2));    // 2*lam + 3
    CHECK(exact_div(p * q, q) == p);
    CHECK(exact_div(p * q, p) == q);
    CHECK_THROWS_AS(exact_div(p, q), DomainError);
    CHECK_THROWS_AS(exact_div(p, LambdaPoly()), DomainError);
    CHECK(exact_div(LambdaPoly(), q).is_zero());
  }
}

TEST_SUITE("factor") {
  TEST_CASE("small factorizations") {
    auto f = factorize(BigInt(360));
    CHECK(f[BigInt(2)] == 3);
    CHECK(f[BigInt(3)] == 2);
    CHECK(f[BigInt(5)] == 1);
    CHECK(factorize(BigInt(1)).empty());
    auto d = divisors(BigInt(12));
    CHECK(d == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
  }

  TEST_CASE("primality") {
    CHECK(is_probable_prime(BigInt(2)));
    CHECK(is_probable_prime(BigInt("2305843009213693951")));  // 2^61 - 1
    CHECK_FALSE(is_probable_prime(BigInt(1)));
    CHECK_FALSE(is_probable_prime(BigInt("147573952589676412927")));  // 2^67 - 1
  }

  TEST_CASE("large semiprime splits") {
    BigInt p("2147483647");
    BigInt q("2305843009213693951");
    auto f = factorize(p * q);
    CHECK(f[p] == 1);
    CHECK(f[q] == 1);
  }
}

TEST_SUITE("rank_kernel") {
  TEST_CASE("identity has trivial kernel") {
    auto r = rank_kernel(RationalMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.kernel.empty());
  }

  TEST_CASE("degenerate 2x2 pencil at weight zero") {
    RationalMatrix m(2, 2);
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    auto r = rank_kernel(m);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel.size() == 1);
    CHECK(r.kernel[0] == std::vector<Rational>{1, -1});
  }

  TEST_CASE("zero matrix has full kernel") {
    auto r = rank_kernel(RationalMatrix(2, 3));
    CHECK(r.rank == 0);
    REQUIRE(r.kernel.size() == 3);
    CHECK(r.kernel[0] == std::vector<Rational>{1, 0, 0});
    CHECK(r.kernel[1] == std::vector<Rational>{0, 1, 0});
    CHECK(r.kernel[2] == std::vector<Rational>{0, 0, 1});
  }

  TEST_CASE("kernel vectors satisfy m v = 0 and rank survives row shuffles") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 20; ++iter) {
      std::size_t rows = 2 + rng.below(4);
      std::size_t cols = 2 + rng.below(4);
      RationalMatrix m(rows, cols);
      for (auto& e : m.entries) e = Rational(rng.range(-3, 3));
      auto rk = rank_kernel(m);
      CHECK(rk.rank + rk.kernel.size() == cols);
      for (const auto& v : rk.kernel) {
        for (std::size_t i = 0; i < rows; ++i) {
          Rational dot = 0;
          for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
          CHECK(dot.is_zero());
        }
      }
      // shuffle rows
      std::vector<std::size_t> perm(rows);
      for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
      for (std::size_t i = rows; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      RationalMatrix shuffled(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) shuffled.at(i, j) = m.at(perm[i], j);
      CHECK(rank_kernel(shuffled).rank == rk.rank);
    }
  }
}

TEST_SUITE("bareiss") {
  TEST_CASE("fixed determinants") {
    CHECK(bareiss_det(PolyMatrix::identity(4)) == LambdaPoly(1));

    PolyMatrix single(1, 1);
    single.at(0, 0) = LambdaPoly::lam();
    CHECK(bareiss_det(single) == LambdaPoly::lam());

    // [[lam, lam], [1, 2*lam+1]]
    PolyMatrix m(2, 2);
    m.at(0, 0) = LambdaPoly::lam();
    m.at(0, 1) = LambdaPoly::lam();
    m.at(1, 0) = LambdaPoly(1);
    m.at(1, 1) = LambdaPoly::linear(BigInt(1), BigInt(2));
    LambdaPoly expected = LambdaPoly(2) * LambdaPoly::lam() * LambdaPoly::lam();
    CHECK(bareiss_det(m) == expected);

    CHECK_THROWS_AS(bareiss_det(PolyMatrix(2, 3)), DomainError);
  }

  TEST_CASE("zero-pivot column needs a row swap") {
    PolyMatrix m(2, 2);
    m.at(0, 1) = LambdaPoly(1);
    m.at(1, 0) = LambdaPoly(1);
    CHECK(bareiss_det(m) == LambdaPoly(-1));
  }

  TEST_CASE("agrees with cofactor expansion on random integer matrices") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
      std::size_t n = 1 + rng.below(4);
      PolyMatrix m(n, n);
      for (auto& e : m.entries) e = LambdaPoly(rng.range(-5, 5));
      CHECK(bareiss_det(m) == ie::testing::cofactor_det(m));
    }
  }

  TEST_CASE("agrees with cofactor expansion on affine entries") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 25; ++iter) {
      std::size_t n = 1 + rng.below(3);
      PolyMatrix m(n, n);
      for (auto& e : m.entries)
        e = LambdaPoly::linear(BigInt(rng.range(-3, 3)), BigInt(rng.range(-2, 2)));
      CHECK(bareiss_det(m) == ie::testing::cofactor_det(m));
    }
  }

  TEST_CASE("scaling rows drives intermediates far past 64 bits") {
    SplitMix64 rng(13);
    const std::size_t n = 8;
    PolyMatrix m(n, n);
    for (auto& e : m.entries) e = LambdaPoly(rng.range(-9, 9));
    LambdaPoly det = bareiss_det(m);

    BigInt big("1000000007000000000");  // ~2^60 per row
    PolyMatrix scaled = m;
    for (auto& e : scaled.entries) e *= LambdaPoly(big);
    BigInt factor = 1;
    for (std::size_t i = 0; i < n; ++i) factor *= big;
    CHECK(bareiss_det(scaled) == det * LambdaPoly(factor));
  }
}

TEST_SUITE("poly_pivots") {
  TEST_CASE("dependent rows are skipped") {
    // rows: (1, lam), (lam, lam^2) = lam * row 0, (0, 1)
    PolyMatrix m(3, 2);
    m.at(0, 0) = LambdaPoly(1);
    m.at(0, 1) = LambdaPoly::lam();
    m.at(1, 0) = LambdaPoly::lam();
    m.at(1, 1) = LambdaPoly::lam() * LambdaPoly::lam();
    m.at(2, 1) = LambdaPoly(1);
    auto piv = poly_row_pivots(m);
    CHECK(piv.rank == 2);
    CHECK(piv.pivot_rows == std::vector<std::size_t>{0, 2});
  }

  TEST_CASE("zero matrix has rank 0") {
    CHECK(poly_row_pivots(PolyMatrix(3, 2)).rank == 0);
  }
}

TEST_SUITE("rational_roots") {
  TEST_CASE("double root at zero with constant residual") {
    LambdaPoly p = LambdaPoly(2) * LambdaPoly::lam() * LambdaPoly::lam();
    auto r = rational_roots(p);
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].first == Rational(0));
    CHECK(r.roots[0].second == 2);
    CHECK(r.residual == LambdaPoly(2));
  }

  TEST_CASE("irreducible quadratic is reported verbatim") {
    LambdaPoly p = LambdaPoly::lam() * LambdaPoly::lam() + LambdaPoly(1);
    auto r = rational_roots(p);
    CHECK(r.roots.empty());
    CHECK(r.residual == p);
  }

  TEST_CASE("mixed rational roots, sorted ascending") {
    // (lam - 1)(2*lam + 3) = 2*lam^2 + lam - 3
    LambdaPoly p = LambdaPoly::from_coeffs({BigInt(-3), BigInt(1), BigInt(2)});
    auto r = rational_roots(p);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].first == Rational(BigInt(-3), BigInt(2)));
    CHECK(r.roots[0].second == 1);
    CHECK(r.roots[1].first == Rational(1));
    CHECK(r.roots[1].second == 1);
    CHECK(r.residual.is_constant());
  }

  TEST_CASE("every reported root satisfies p(root) = 0") {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
      LambdaPoly p(BigInt(rng.range(1, 4)));
      int factors = static_cast<int>(1 + rng.below(4));
      for (int i = 0; i < factors; ++i) {
        long long den = rng.range(1, 3);
        long long num = rng.range(-4, 4);
        p *= LambdaPoly::linear(BigInt(-num), BigInt(den));
      }
      auto r = rational_roots(p);
      int total_mult = 0;
      for (const auto& [root, mult] : r.roots) {
        CHECK(p.eval(root).is_zero());
        total_mult += mult;
      }
      CHECK(total_mult + r.residual.degree() == p.degree());
      CHECK_FALSE(r.residual.is_zero());
    }
    CHECK_THROWS_AS(rational_roots(LambdaPoly()), DomainError);
  }
}
