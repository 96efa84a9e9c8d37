#include "gkm/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace gkm;

namespace {

// Independent oracle: dense cubic-array multiplication, no sharing with the
// sparse implementation.
Poly dense_mul(const Poly& p, const Poly& q) {
  const int dp = std::max(p.degree(), 0);
  const int dq = std::max(q.degree(), 0);
  const int d = dp + dq + 1;
  std::vector<Int> box(static_cast<std::size_t>(d) * d * d);
  auto at = [&](int a, int b, int c) -> Int& {
    return box[(static_cast<std::size_t>(a) * d + b) * d + c];
  };
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms())
      at(ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2]) += cp * cq;
  Poly out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (box[(static_cast<std::size_t>(a) * d + b) * d + c] != 0)
          out.add_term({a, b, c}, at(a, b, c));
  return out;
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  Poly p;
  const int nterms = static_cast<int>(rng() % 5);
  for (int t = 0; t < nterms; ++t) {
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    int e1 = static_cast<int>(rng() % static_cast<std::uint64_t>(d + 1));
    int e2 = static_cast<int>(rng() % static_cast<std::uint64_t>(d - e1 + 1));
    p.add_term({e1, e2, d - e1 - e2}, Int(static_cast<long>(rng() % 21) - 10));
  }
  return p;
}

const std::array<LinearForm, 6> g2_labels = {
    LinearForm::canonical({1, -1, 0}),  LinearForm::canonical({0, 1, -1}),
    LinearForm::canonical({1, 0, -1}),  LinearForm::canonical({1, -2, 1}),
    LinearForm::canonical({1, 1, -2}),  LinearForm::canonical({2, -1, -1})};

}  // namespace

TEST_CASE("addition") {
  const Poly t1 = Poly::variable(1);
  const Poly t2 = Poly::variable(2);
  CHECK((t1 + (-t1)).is_zero());
  CHECK((s_poly(1) + s_poly(2) + s_poly(3)).is_zero());
  const Poly sum = t1 + t2;
  CHECK(sum.terms().size() == 2);
  for (const auto& [e, c] : sum.terms()) CHECK(c == 1);
}

TEST_CASE("multiplication against the dense oracle") {
  const Poly prod = s_poly(1) * s_poly(2) * s_poly(3);
  const Poly expected = dense_mul(dense_mul(s_poly(1), s_poly(2)), s_poly(3));
  CHECK(prod == expected);
  // Frozen expansion of (t1-t2)(t2-t3)(t3-t1): six terms, the t1 t2 t3 terms
  // cancel.
  Poly frozen;
  frozen.add_term({2, 1, 0}, Int(1));
  frozen.add_term({2, 0, 1}, Int(-1));
  frozen.add_term({1, 2, 0}, Int(-1));
  frozen.add_term({0, 2, 1}, Int(1));
  frozen.add_term({1, 0, 2}, Int(1));
  frozen.add_term({0, 1, 2}, Int(-1));
  CHECK(prod == -frozen);
  CHECK(prod.terms().size() == 6);

  const Poly one(Int(1));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Poly p = random_poly(rng, 4);
    CHECK(p * one == p);
    CHECK((p * Poly()).is_zero());
    const Poly q = random_poly(rng, 4);
    CHECK(p * q == dense_mul(p, q));
  }
}

TEST_CASE("elementary symmetric polynomials") {
  const std::array<Poly, 3> s{s_poly(1), s_poly(2), s_poly(3)};
  CHECK(elementary_symmetric(1, s).is_zero());
  CHECK(elementary_symmetric(3, s) == s_poly(1) * s_poly(2) * s_poly(3));
  const std::array<Poly, 3> t{Poly::variable(1), Poly::variable(2), Poly::variable(3)};
  Poly e2t;
  e2t.add_term({1, 1, 0}, Int(1));
  e2t.add_term({1, 0, 1}, Int(1));
  e2t.add_term({0, 1, 1}, Int(1));
  CHECK(elementary_symmetric(2, t) == e2t);
}

TEST_CASE("exact division by a linear form") {
  const Poly prod = s_poly(1) * s_poly(2) * s_poly(3);
  const auto q = div_exact_linear(prod, LinearForm::canonical(s_weight(2)));
  REQUIRE(q.has_value());
  CHECK(*q == s_poly(1) * s_poly(3));

  CHECK_FALSE(div_exact_linear(Poly::variable(1), LinearForm::canonical(s_weight(1))).has_value());

  const Poly t1 = Poly::variable(1), t2 = Poly::variable(2);
  const auto sq = div_exact_linear(t1 * t1 - t2 * t2, LinearForm::canonical(s_weight(1)));
  REQUIRE(sq.has_value());
  CHECK(*sq == t1 + t2);
}

TEST_CASE("division handles sign and content of the form") {
  const Poly h = s_poly(1) * s_poly(2);
  const auto q1 = div_exact_weight(h, -s_weight(1));
  REQUIRE(q1.has_value());
  CHECK(*q1 == -s_poly(2));
  const auto q2 = div_exact_weight(Int(2) * h, 2 * s_weight(1));
  REQUIRE(q2.has_value());
  CHECK(*q2 == s_poly(2));
  CHECK_FALSE(div_exact_weight(h, 2 * s_weight(1)).has_value());
}

TEST_CASE("substitution along a hyperplane") {
  const LinearForm s1 = LinearForm::canonical(s_weight(1));
  CHECK(substitute_eliminating(s_poly(1), s1).is_zero());
  CHECK(substitute_eliminating(Poly::variable(1), s1) == Poly::variable(2));

  // s2 - s3 has no factor in common with s1 s2 s3, so the residue is a
  // nonzero two-variable cubic and exact division fails (the two oracles
  // agree).
  const LinearForm l = LinearForm::canonical(s_weight(2) - s_weight(3));
  const Poly prod = s_poly(1) * s_poly(2) * s_poly(3);
  const Poly res = substitute_eliminating(prod, l);
  CHECK_FALSE(res.is_zero());
  CHECK(res.degree() == 3);
  CHECK_FALSE(div_exact_linear(prod, l).has_value());

  CHECK_THROWS_AS(substitute_eliminating(prod, LinearForm{{2, 3, 5}}), NoUnitCoefficientError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Poly a = random_poly(rng, 4);
    const Poly b = random_poly(rng, 4);
    const Poly c = random_poly(rng, 4);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("grading of products") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const int dp = static_cast<int>(rng() % 4);
    const int dq = static_cast<int>(rng() % 4);
    Poly p, q;
    for (int t = 0; t < 3; ++t) {
      int e1 = static_cast<int>(rng() % static_cast<std::uint64_t>(dp + 1));
      int e2 = static_cast<int>(rng() % static_cast<std::uint64_t>(dp - e1 + 1));
      p.add_term({e1, e2, dp - e1 - e2}, Int(static_cast<long>(rng() % 9) + 1));
      e1 = static_cast<int>(rng() % static_cast<std::uint64_t>(dq + 1));
      e2 = static_cast<int>(rng() % static_cast<std::uint64_t>(dq - e1 + 1));
      q.add_term({e1, e2, dq - e1 - e2}, Int(static_cast<long>(rng() % 9) + 1));
    }
    REQUIRE(p.is_homogeneous());
    REQUIRE(q.is_homogeneous());
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("divisibility oracles agree on all small monomials and G2 labels") {
  for (int d = 0; d <= 4; ++d)
    for (int e1 = 0; e1 <= d; ++e1)
      for (int e2 = 0; e1 + e2 <= d; ++e2) {
        const Poly mon = Poly::monomial({e1, e2, d - e1 - e2}, Int(1));
        for (const auto& l : g2_labels) {
          const auto quot = div_exact_linear(mon, l);
          const bool substituted_zero = substitute_eliminating(mon, l).is_zero();
          CHECK(quot.has_value() == substituted_zero);
          if (quot) CHECK(Poly::linear(l.weight()) * *quot == mon);
        }
      }
}

TEST_CASE("linear form canonicalization") {
  const auto f = LinearForm::canonical({-2, 4, -2});
  CHECK(f.c == std::array<int, 3>{1, -2, 1});
  const auto g = LinearForm::canonical({0, -3, 3});
  CHECK(g.c == std::array<int, 3>{0, 1, -1});
  CHECK_THROWS_AS(LinearForm::canonical({0, 0, 0}), std::invalid_argument);
}
