#include "gkm/cohomology.hpp"
#include "gkm/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gkm;

namespace {

const LabeledGraph& g2() {
  static const LabeledGraph g = build_g2_combinatorial();
  return g;
}

const LabeledGraph& a2() {
  static const LabeledGraph g = build_from_root_system(RootSystem::A2);
  return g;
}

const GeneratorSet& gens() {
  static const GeneratorSet gs = make_generators(g2());
  return gs;
}

}  // namespace

TEST_CASE("gkm check") {
  CHECK_FALSE(gkm_check(CohomologyClass::constant(g2(), s_poly(1) * s_poly(2))).has_value());

  const auto& gs = gens();
  for (int i = 0; i < 3; ++i) {
    CHECK_FALSE(gkm_check(gs.tau[i]).has_value());
    CHECK_FALSE(gkm_check(gs.t[i]).has_value());
  }
  CHECK_FALSE(gkm_check(gs.f).has_value());

  // t1 at (123,+) and 0 elsewhere: already the first edge in the
  // deterministic order, {123:+, 132:+} with label s2 - s3, fails.
  std::vector<Poly> v(12);
  v[0] = Poly::variable(1);
  const auto h = CohomologyClass::make(g2(), std::move(v));
  const auto violation = gkm_check(h);
  REQUIRE(violation.has_value());
  CHECK(violation->edge == 0);
  const auto& e = g2().edges[0];
  CHECK(g2().vertices[e.u].id() == "123:+");
  CHECK(g2().vertices[e.v].id() == "132:+");
  CHECK(violation->difference == Poly::variable(1));
  // The edge toward 213:+ (label s1 - s2) fails as well.
  const auto l = g2().edge_label(0, g2().vertex_index({Perm::from_string("213"), Sign::plus}));
  REQUIRE(l.has_value());
  CHECK_FALSE(div_exact_linear(Poly::variable(1), *l).has_value());
}

TEST_CASE("generator values") {
  const auto& gs = gens();
  const int p213 = g2().vertex_index({Perm::from_string("213"), Sign::plus});
  const int m213 = g2().vertex_index({Perm::from_string("213"), Sign::minus});
  CHECK(gs.tau[0].values[p213] == s_poly(2));
  CHECK(gs.tau[0].values[m213] == -s_poly(2));
  for (int v = 0; v < 12; ++v) {
    if (g2().vertices[v].sign == Sign::minus) CHECK(gs.f.values[v].is_zero());
    if (g2().vertices[v].sign == Sign::plus) CHECK(gs.f.values[v] == e3_s());
    CHECK(gs.t[0].values[v] == Poly::variable(1));
  }
  CHECK(gs.f.degree == 3);
  CHECK(gs.tau[0].degree == 1);
}

TEST_CASE("relations") {
  CHECK(check_relations(gens()).all());

  // e3(tau) + e3(s) = 2f pointwise.
  const auto& gs = gens();
  const auto e3tau = gs.tau[0] * gs.tau[1] * gs.tau[2];
  const auto lhs = e3tau + CohomologyClass::constant(g2(), e3_s());
  CHECK(lhs == Poly(Int(2)) * gs.f);

  // Corrupt one value: relations or membership break.
  GeneratorSet bad = gens();
  bad.tau[0].values[0] += Poly::variable(1);
  const bool gkm_ok = !gkm_check(bad.tau[0]).has_value();
  CHECK((!gkm_ok || !check_relations(bad).all()));
}

TEST_CASE("a2 relations") {
  const auto gs = make_a2_generators(a2());
  for (int i = 0; i < 3; ++i) CHECK_FALSE(gkm_check(gs.tau[i]).has_value());
  CHECK(check_a2_relations(gs).all());
}

TEST_CASE("normal form of the rewriting rules") {
  const auto nf_tau3 = normal_form(SymbolPoly::tau(3));
  CHECK(nf_tau3.at({1, 0, 0}) == Poly(Int(-1)));
  CHECK(nf_tau3.at({0, 1, 0}) == Poly(Int(-1)));
  CHECK(nf_tau3.at({0, 0, 1}).is_zero());

  // tau1^3 = -e2(s) tau1 + 2 f - e3(s)
  const auto nf_tau1 = normal_form(SymbolPoly::tau(1).pow(3));
  CHECK(nf_tau1.at({0, 0, 1}) == Poly(Int(2)));
  CHECK(nf_tau1.at({0, 0, 0}) == -e3_s());
  CHECK(nf_tau1.at({1, 0, 0}) == -e2_s());

  // tau2^2 = -tau1^2 - tau1 tau2 - e2(s)
  const auto nf_tau2 = normal_form(SymbolPoly::tau(2).pow(2));
  CHECK(nf_tau2.at({2, 0, 0}) == Poly(Int(-1)));
  CHECK(nf_tau2.at({1, 1, 0}) == Poly(Int(-1)));
  CHECK(nf_tau2.at({0, 0, 0}) == -e2_s());

  // f^2 = e3(s) f
  const auto nf_f2 = normal_form(SymbolPoly::f().pow(2));
  CHECK(nf_f2.at({0, 0, 1}) == e3_s());

  CHECK(normal_form(SymbolPoly::tau(1) + SymbolPoly::tau(2) + SymbolPoly::tau(3)).is_zero());

  // Every rewrite preserves the value of the expression as a class.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto sp = random_symbol_poly(rng, static_cast<int>(rng() % 7));
    const auto before = evaluate_symbol_poly(sp, g2());
    const auto after = evaluate_certificate(normal_form(sp), gens());
    CHECK(before == after);
  }
}

TEST_CASE("reduction") {
  const auto zero = reduce_class(CohomologyClass::zero(g2()));
  CHECK(zero.is_zero());

  const auto f2 = gens().f * gens().f;
  const auto cert = reduce_class(f2);
  CHECK(cert.at({0, 0, 1}) == e3_s());
  for (const auto& m : g2_basis_monomials())
    if (!(m == BasisMonomial{0, 0, 1})) CHECK(cert.at(m).is_zero());

  const auto t1t2 = gens().tau[0] * gens().tau[1];
  const auto cert2 = reduce_class(t1t2);
  CHECK(evaluate_certificate(cert2, gens()) == t1t2);

  std::vector<Poly> v(12);
  v[0] = Poly::variable(1);
  CHECK_THROWS_AS(reduce_class(CohomologyClass::make(g2(), std::move(v))), NotGkmError);
}

TEST_CASE("reduction round trip and agreement with normal form") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int degree = static_cast<int>(rng() % 6);
    const auto sp = random_symbol_poly(rng, degree);
    const auto h = evaluate_symbol_poly(sp, g2());
    REQUIRE_FALSE(gkm_check(h).has_value());  // subring property
    const auto cert = reduce_class(h);
    CHECK(evaluate_certificate(cert, gens()) == h);
    CHECK(cert == normal_form(sp));
  }
}

TEST_CASE("sums and products of classes stay classes") {
  std::mt19937_64 rng(12);
  const auto& gs = gens();
  std::vector<CohomologyClass> pool{gs.tau[0], gs.tau[1], gs.tau[2],
                                    gs.t[0],   gs.t[1],   gs.t[2],   gs.f};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    CHECK_FALSE(gkm_check(a * b).has_value());
    if (a.degree == b.degree) CHECK_FALSE(gkm_check(a + b).has_value());
  }
}

TEST_CASE("evaluate certificate") {
  ReductionCertificate one;
  one.at({0, 0, 0}) = Poly(Int(1));
  CHECK(evaluate_certificate(one, gens()) == CohomologyClass::constant(g2(), Poly(Int(1))));

  ReductionCertificate ef;
  ef.at({0, 0, 1}) = e3_s();
  CHECK(evaluate_certificate(ef, gens()) == gens().f * gens().f);
}

TEST_CASE("graded ranks at small degrees") {
  CHECK(graded_rank(g2(), 0) == 1);
  CHECK(graded_rank(g2(), 1) == 5);
  CHECK(graded_rank(a2(), 0) == 1);
  CHECK(graded_rank(a2(), 1) == 5);
  const auto table = rank_table(g2(), 3);
  CHECK(table.entries.at(0) == 1);
  CHECK(table.entries.at(2) == 14);
  CHECK(table.entries.at(3) == 30);
}

TEST_CASE("closed-form hilbert series") {
  CHECK(hilbert_closed_form(0) == 1);
  CHECK(hilbert_closed_form(1) == 5);
  CHECK(hilbert_closed_form(6) == 139);
  const std::array<int, 11> expected{1, 5, 14, 30, 55, 91, 139, 199, 271, 355, 451};
  for (int k = 0; k <= 10; ++k) CHECK(hilbert_closed_form(k) == expected[k]);

  const std::array<int, 9> a2_expected{1, 5, 14, 29, 50, 77, 110, 149, 194};
  for (int k = 0; k <= 8; ++k) CHECK(hilbert_closed_form(RootSystem::A2, k) == a2_expected[k]);
}

TEST_CASE("presentation verification") {
  const auto rep = verify_presentation(g2(), 5);
  CHECK(rep.ok());
  CHECK(rep.determinant_nonzero);
  for (const auto& row : rep.rows) {
    CHECK(row.graded == row.closed);
    CHECK(row.span == row.closed);
  }

  // A mutated label is caught at low degree.
  auto mutated = g2();
  mutated.edges[0].label = LinearForm::canonical({1, 0, -1});
  const auto bad = verify_presentation(mutated, 3);
  CHECK_FALSE(bad.ok());
  CHECK(bad.failed_k <= 3);
}

TEST_CASE("a2 presentation verification") {
  const auto rep = verify_a2_presentation(a2(), 5);
  CHECK(rep.ok());
  CHECK(rep.determinant_nonzero);
}

TEST_CASE("restriction to the sign subgraphs") {
  CHECK(restriction_matches_a2(g2(), a2()));
}

TEST_CASE("basis monomial degrees") {
  const auto& basis = g2_basis_monomials();
  CHECK(basis.size() == 12);
  std::array<int, 7> counts{};
  for (const auto& m : basis) counts[m.degree()] += 1;
  CHECK(counts == std::array<int, 7>{1, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("class json round trip") {
  const auto& gs = gens();
  const json j = to_json(gs.tau[0]);
  CHECK(j.at("graph") == "g2");
  CHECK(j.at("degree") == 1);
  const auto back = class_from_json(j, g2());
  CHECK(back == gs.tau[0]);
  CHECK(to_json(back) == j);

  json missing = j;
  missing["values"].erase("123:+");
  CHECK_THROWS_AS(class_from_json(missing, g2()), std::invalid_argument);

  json inhomogeneous = j;
  inhomogeneous["values"]["123:+"] = to_json(Poly::variable(1) * Poly::variable(1));
  CHECK_THROWS_AS(class_from_json(inhomogeneous, g2()), std::invalid_argument);
}

TEST_CASE("certificate json round trip") {
  const auto cert = reduce_class(gens().f * gens().f);
  const json j = to_json(cert);
  CHECK(j.at("coeffs").contains("tau1^0 tau2^0 f^1"));
  const auto back = certificate_from_json(j);
  CHECK(back == cert);
}

TEST_CASE("class construction rejects degenerate input") {
  std::vector<Poly> mixed(12);
  mixed[0] = Poly::variable(1);
  mixed[1] = Poly::variable(1) * Poly::variable(2);
  CHECK_THROWS_AS(CohomologyClass::make(g2(), std::move(mixed)), std::invalid_argument);

  std::vector<Poly> inhom(12, Poly::variable(1) + Poly(Int(1)));
  CHECK_THROWS_AS(CohomologyClass::make(g2(), std::move(inhom)), std::invalid_argument);

  CHECK_THROWS_AS(CohomologyClass::make(g2(), std::vector<Poly>(5)), std::invalid_argument);
}
