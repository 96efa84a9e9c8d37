#pragma once

// Graph cohomology of the A2 and G2 labeled graphs: the GKM membership test,
// the generator classes tau_i / t_i / f, relation verification, reduction of
// an arbitrary class to the 12-monomial module basis, graded ranks and the
// closed-form Hilbert series they must reproduce.

#include "gkm/exactla.hpp"
#include "gkm/graph.hpp"
#include "gkm/poly.hpp"
#include "gkm/rootsys.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gkm {

struct NotGkmError : std::runtime_error {
  explicit NotGkmError(const std::string& m) : std::runtime_error(m) {}
};

// A division the reduction algorithm is entitled to assume exact has failed;
// this is an implementation bug or a precondition violation, never a normal
// outcome, so it is surfaced loudly.
struct InternalDivisionError : std::logic_error {
  explicit InternalDivisionError(const std::string& m) : std::logic_error(m) {}
};

// Total map from graph vertices to homogeneous polynomials of one common
// degree (polynomial degree k; cohomological degree 2k).
struct CohomologyClass {
  const LabeledGraph* graph = nullptr;
  int degree = 0;
  std::vector<Poly> values;

  static CohomologyClass make(const LabeledGraph& g, std::vector<Poly> values) {
    if (values.size() != g.vertices.size())
      throw std::invalid_argument("CohomologyClass: value count != vertex count");
    int deg = -1;
    for (const auto& p : values) {
      if (p.is_zero()) continue;
      if (!p.is_homogeneous())
        throw std::invalid_argument("CohomologyClass: non-homogeneous value");
      if (deg == -1)
        deg = p.degree();
      else if (p.degree() != deg)
        throw std::invalid_argument("CohomologyClass: mixed degrees");
    }
    CohomologyClass h;
    h.graph = &g;
    h.degree = deg < 0 ? 0 : deg;
    h.values = std::move(values);
    return h;
  }

  static CohomologyClass zero(const LabeledGraph& g) {
    return make(g, std::vector<Poly>(g.vertices.size()));
  }

  static CohomologyClass constant(const LabeledGraph& g, const Poly& p) {
    return make(g, std::vector<Poly>(g.vertices.size(), p));
  }

  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Poly& p) { return p.is_zero(); });
  }

  friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    std::vector<Poly> v(a.values);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values[i];
    return make(*a.graph, std::move(v));
  }
  friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
    std::vector<Poly> v(a.values);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values[i];
    return make(*a.graph, std::move(v));
  }
  friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
    std::vector<Poly> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] * b.values[i];
    return make(*a.graph, std::move(v));
  }
  friend CohomologyClass operator*(const Poly& p, const CohomologyClass& a) {
    std::vector<Poly> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p * a.values[i];
    return make(*a.graph, std::move(v));
  }

  // Equality of the value maps; the graphs are assumed to agree.
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.values == b.values;
  }
};

struct GkmViolation {
  int edge = 0;     // index into graph.edges, deterministic order
  Poly difference;  // h(u) - h(v), not divisible by the label
};

// The GKM condition: h(u) - h(v) divisible by the edge label, every edge.
// Returns the first violation in edge order, or nullopt when h is a class.
inline std::optional<GkmViolation> gkm_check(const CohomologyClass& h) {
  const auto& g = *h.graph;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    const Poly diff = h.values[e.u] - h.values[e.v];
    if (diff.is_zero()) continue;
    if (!div_exact_linear(diff, e.label))
      return GkmViolation{static_cast<int>(i), diff};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators

struct GeneratorSet {
  std::array<CohomologyClass, 3> tau;
  std::array<CohomologyClass, 3> t;
  CohomologyClass f;
};

namespace detail {

inline void require_g2_vertex_set(const LabeledGraph& g) {
  if (g.vertices.size() != 12)
    throw std::invalid_argument("expected the 12-vertex G2 graph");
  std::size_t k = 0;
  for (const auto& p : all_perms())
    for (Sign s : {Sign::plus, Sign::minus})
      if (!(g.vertices[k++] == WeylElement{p, s}))
        throw std::invalid_argument("expected the S3 x {+,-} vertex set");
}

}  // namespace detail

// tau_i(v,eps) = eps * s_{v(i)},  t_i(w) = t_i,  f = s1 s2 s3 on V+ and 0 on V-.
inline GeneratorSet make_generators(const LabeledGraph& g) {
  detail::require_g2_vertex_set(g);
  const auto n = g.vertices.size();
  auto tau_values = [&](int i) {
    std::vector<Poly> v(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& w = g.vertices[k];
      v[k] = Poly::linear(value(w.sign) * s_weight(w.perm(i)));
    }
    return v;
  };
  GeneratorSet gs{
      {CohomologyClass::make(g, tau_values(1)), CohomologyClass::make(g, tau_values(2)),
       CohomologyClass::make(g, tau_values(3))},
      {CohomologyClass::constant(g, Poly::variable(1)),
       CohomologyClass::constant(g, Poly::variable(2)),
       CohomologyClass::constant(g, Poly::variable(3))},
      CohomologyClass::zero(g)};
  std::vector<Poly> fv(n);
  for (std::size_t k = 0; k < n; ++k)
    if (g.vertices[k].sign == Sign::plus) fv[k] = e3_s();
  gs.f = CohomologyClass::make(g, std::move(fv));
  return gs;
}

struct A2GeneratorSet {
  std::array<CohomologyClass, 3> tau;  // tau_i(v) = t_{v(i)}
  std::array<CohomologyClass, 3> t;
};

inline A2GeneratorSet make_a2_generators(const LabeledGraph& g) {
  if (g.vertices.size() != 6)
    throw std::invalid_argument("expected the 6-vertex A2 graph");
  auto tau_values = [&](int i) {
    std::vector<Poly> v(6);
    for (std::size_t k = 0; k < 6; ++k) v[k] = Poly::variable(g.vertices[k].perm(i));
    return v;
  };
  return A2GeneratorSet{
      {CohomologyClass::make(g, tau_values(1)), CohomologyClass::make(g, tau_values(2)),
       CohomologyClass::make(g, tau_values(3))},
      {CohomologyClass::constant(g, Poly::variable(1)),
       CohomologyClass::constant(g, Poly::variable(2)),
       CohomologyClass::constant(g, Poly::variable(3))}};
}

// ---------------------------------------------------------------------------
// Relations

struct RelationReport {
  // e1(tau),  e2(tau) - e2(s),  2f - e3(tau) - e3(s),  f^2 - f e3(s)
  std::array<bool, 4> holds{false, false, false, false};
  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

inline RelationReport check_relations(const GeneratorSet& gs) {
  const auto& g = *gs.f.graph;
  auto esym = [&](int i, const std::array<CohomologyClass, 3>& a) {
    if (i == 1) return a[0] + a[1] + a[2];
    if (i == 2) return a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
    return a[0] * a[1] * a[2];
  };
  const auto two = Poly(Int(2));
  RelationReport rep;
  rep.holds[0] = esym(1, gs.tau).is_zero();
  rep.holds[1] = (esym(2, gs.tau) - CohomologyClass::constant(g, e2_s())).is_zero();
  rep.holds[2] = (two * gs.f - esym(3, gs.tau) - CohomologyClass::constant(g, e3_s())).is_zero();
  rep.holds[3] = (gs.f * gs.f - e3_s() * gs.f).is_zero();
  return rep;
}

struct A2RelationReport {
  std::array<bool, 3> holds{false, false, false};  // e_i(tau) - e_i(t), i = 1..3
  bool all() const { return holds[0] && holds[1] && holds[2]; }
};

inline A2RelationReport check_a2_relations(const A2GeneratorSet& gs) {
  auto esym = [&](int i, const std::array<CohomologyClass, 3>& a) {
    if (i == 1) return a[0] + a[1] + a[2];
    if (i == 2) return a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
    return a[0] * a[1] * a[2];
  };
  A2RelationReport rep;
  for (int i = 1; i <= 3; ++i)
    rep.holds[i - 1] = (esym(i, gs.tau) - esym(i, gs.t)).is_zero();
  return rep;
}

// ---------------------------------------------------------------------------
// Polynomials in the abstract generator symbols

// Monomial exponents in the order tau1, tau2, tau3, t1, t2, t3, f.
using SymbolExpo = std::array<int, 7>;

class SymbolPoly {
 public:
  using TermMap = std::map<SymbolExpo, Int>;

  SymbolPoly() = default;
  explicit SymbolPoly(Int c) {
    if (c != 0) terms_[SymbolExpo{}] = std::move(c);
  }

  static SymbolPoly tau(int i) { return symbol(i - 1); }
  static SymbolPoly t(int i) { return symbol(3 + i - 1); }
  static SymbolPoly f() { return symbol(6); }

  // Embed a polynomial in Z[t1,t2,t3].
  static SymbolPoly from_poly(const Poly& p) {
    SymbolPoly s;
    for (const auto& [e, c] : p.terms()) s.terms_[{0, 0, 0, e[0], e[1], e[2], 0}] = c;
    return s;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // deg tau_i = deg t_i = 1, deg f = 3 (polynomial degrees).
  static int term_degree(const SymbolExpo& e) {
    return e[0] + e[1] + e[2] + e[3] + e[4] + e[5] + 3 * e[6];
  }
  bool is_homogeneous(int k) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return term_degree(t.first) == k; });
  }

  void add_term(const SymbolExpo& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymbolPoly& operator+=(const SymbolPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SymbolPoly& operator-=(const SymbolPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator-(const SymbolPoly& a) {
    SymbolPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        SymbolExpo e;
        for (int i = 0; i < 7; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend SymbolPoly operator*(const Int& k, SymbolPoly p) {
    if (k == 0) return SymbolPoly();
    for (auto& [e, c] : p.terms_) c *= k;
    return p;
  }
  friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

  SymbolPoly pow(int n) const {
    SymbolPoly r(Int(1));
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
  }

 private:
  static SymbolPoly symbol(int idx) {
    SymbolPoly s;
    SymbolExpo e{};
    e[idx] = 1;
    s.terms_[e] = 1;
    return s;
  }

  TermMap terms_;
};

// Pointwise values of the seven generator symbols at one G2 vertex.
inline std::array<Poly, 7> symbol_values_at(const WeylElement& w) {
  std::array<Poly, 7> v;
  for (int i = 1; i <= 3; ++i) v[i - 1] = Poly::linear(value(w.sign) * s_weight(w.perm(i)));
  for (int i = 1; i <= 3; ++i) v[3 + i - 1] = Poly::variable(i);
  v[6] = (w.sign == Sign::plus) ? e3_s() : Poly();
  return v;
}

inline Poly evaluate_symbols(const SymbolPoly& s, const std::array<Poly, 7>& vals) {
  Poly out;
  for (const auto& [e, c] : s.terms()) {
    Poly term(c);
    for (int i = 0; i < 7; ++i)
      if (e[i] > 0) term = term * vals[i].pow(e[i]);
    out += term;
  }
  return out;
}

// Pointwise evaluation of a symbol polynomial through the generators.
inline CohomologyClass evaluate_symbol_poly(const SymbolPoly& s, const LabeledGraph& g) {
  detail::require_g2_vertex_set(g);
  std::vector<Poly> values(g.vertices.size());
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    values[k] = evaluate_symbols(s, symbol_values_at(g.vertices[k]));
  return CohomologyClass::make(g, std::move(values));
}

// ---------------------------------------------------------------------------
// Module basis and reduction certificates

struct BasisMonomial {
  int tau1 = 0, tau2 = 0, f = 0;

  int degree() const { return tau1 + tau2 + 3 * f; }
  std::string name() const {
    return "tau1^" + std::to_string(tau1) + " tau2^" + std::to_string(tau2) + " f^" +
           std::to_string(f);
  }
  SymbolPoly symbol() const {
    return SymbolPoly::tau(1).pow(tau1) * SymbolPoly::tau(2).pow(tau2) * SymbolPoly::f().pow(f);
  }
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

// tau1^{i1} tau2^{i2} f^j, i1 <= 2, i2 <= 1, j <= 1; index i1 + 3 i2 + 6 j.
inline const std::vector<BasisMonomial>& g2_basis_monomials() {
  static const std::vector<BasisMonomial> basis = [] {
    std::vector<BasisMonomial> b;
    for (int j = 0; j <= 1; ++j)
      for (int i2 = 0; i2 <= 1; ++i2)
        for (int i1 = 0; i1 <= 2; ++i1) b.push_back({i1, i2, j});
    return b;
  }();
  return basis;
}

inline const std::vector<BasisMonomial>& a2_basis_monomials() {
  static const std::vector<BasisMonomial> basis = [] {
    std::vector<BasisMonomial> b;
    for (int i2 = 0; i2 <= 1; ++i2)
      for (int i1 = 0; i1 <= 2; ++i1) b.push_back({i1, i2, 0});
    return b;
  }();
  return basis;
}

inline int basis_index(const BasisMonomial& m) { return m.tau1 + 3 * m.tau2 + 6 * m.f; }

// Z[t]-coefficients on the 12 basis monomials.
struct ReductionCertificate {
  std::array<Poly, 12> coeffs;

  const Poly& at(const BasisMonomial& m) const { return coeffs[basis_index(m)]; }
  Poly& at(const BasisMonomial& m) { return coeffs[basis_index(m)]; }

  SymbolPoly symbol() const {
    SymbolPoly s;
    for (const auto& m : g2_basis_monomials())
      s += SymbolPoly::from_poly(at(m)) * m.symbol();
    return s;
  }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
  }

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

inline CohomologyClass evaluate_certificate(const ReductionCertificate& c, const GeneratorSet& gs) {
  return evaluate_symbol_poly(c.symbol(), *gs.f.graph);
}

// Confluent rewriting to the 12-monomial basis:
//   tau3   -> -tau1 - tau2
//   tau2^2 -> -tau1^2 - tau1 tau2 - e2(s)
//   tau1^3 -> -e2(s) tau1 + 2 f - e3(s)
//   f^2    -> e3(s) f
// Each rule strictly decreases (deg tau3, deg tau2, deg tau1, deg f) in
// lexicographic order, so the loop terminates.
inline ReductionCertificate normal_form(const SymbolPoly& expr) {
  SymbolPoly work = expr;
  const SymbolPoly e2s = SymbolPoly::from_poly(e2_s());
  const SymbolPoly e3s = SymbolPoly::from_poly(e3_s());
  const SymbolPoly tau1 = SymbolPoly::tau(1), tau2 = SymbolPoly::tau(2);
  const SymbolPoly r_tau3 = -tau1 - tau2;
  const SymbolPoly r_tau2 = -(tau1 * tau1) - tau1 * tau2 - e2s;
  const SymbolPoly r_tau1 = -(e2s * tau1) + Int(2) * SymbolPoly::f() - e3s;
  const SymbolPoly r_f = e3s * SymbolPoly::f();

  for (;;) {
    const SymbolExpo* bad = nullptr;
    Int coeff;
    for (const auto& [e, c] : work.terms())
      if (e[2] > 0 || e[1] > 1 || e[0] > 2 || e[6] > 1) {
        bad = &e;
        coeff = c;
        break;
      }
    if (!bad) break;
    SymbolExpo rest = *bad;
    SymbolPoly repl;
    if (rest[2] > 0) {
      const int p = rest[2];
      rest[2] = 0;
      repl = r_tau3.pow(p);
    } else if (rest[1] > 1) {
      rest[1] -= 2;
      repl = r_tau2;
    } else if (rest[0] > 2) {
      rest[0] -= 3;
      repl = r_tau1;
    } else {
      rest[6] -= 2;
      repl = r_f;
    }
    SymbolPoly restm;
    restm.add_term(rest, coeff);
    const SymbolExpo key = *bad;
    work.add_term(key, -coeff);  // remove the offending term
    work += restm * repl;
  }

  ReductionCertificate cert;
  for (const auto& [e, c] : work.terms()) {
    BasisMonomial m{e[0], e[1], e[6]};
    cert.at(m).add_term({e[3], e[4], e[5]}, c);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// The reduction algorithm (surjectivity made effective)

namespace detail {

inline Poly div_or_throw(const Poly& h, const Weight& w, const char* where) {
  auto q = div_exact_weight(h, w);
  if (!q) throw InternalDivisionError(std::string("reduce_class: division failed in ") + where);
  return *q;
}

// Produces a polynomial S in the tau_i and t_i symbols whose evaluation under
// tau_i -> eps * s_{v(i)} matches `values` on all six permutations.  This is
// the elimination over V_q = { v : v(q) = 3 } for q = 1, 2, 3: the first
// vertex of V_q is matched by a multiple of prod_{i<q}(tau_i - eps s3), the
// second by the same product times a correcting factor tau_j - eps s_{v(j)}
// that vanishes at the first vertex and restores +-(s1 - s2) at the second.
inline SymbolPoly fit_tau_polynomial(std::array<Poly, 6> values, int eps) {
  const auto perms = all_perms();
  auto eval_at = [&](const SymbolPoly& s, const Perm& v) {
    std::array<Poly, 7> sv;
    for (int i = 1; i <= 3; ++i) sv[i - 1] = Poly::linear(eps * s_weight(v(i)));
    for (int i = 1; i <= 3; ++i) sv[3 + i - 1] = Poly::variable(i);
    sv[6] = Poly();  // f does not occur here
    return evaluate_symbols(s, sv);
  };
  auto subtract = [&](const SymbolPoly& term) {
    for (std::size_t k = 0; k < 6; ++k) values[k] -= eval_at(term, perms[k]);
  };

  SymbolPoly total;
  for (int q = 1; q <= 3; ++q) {
    std::vector<int> vq;
    for (int k = 0; k < 6; ++k)
      if (perms[k](q) == 3) vq.push_back(k);
    const Perm v = perms[vq[0]];
    const Perm v2 = perms[vq[1]];

    SymbolPoly product(Int(1));
    for (int i = 1; i < q; ++i)
      product = product * (SymbolPoly::tau(i) - SymbolPoly::from_poly(Poly::linear(eps * s_weight(3))));

    if (!values[vq[0]].is_zero()) {
      Poly g = values[vq[0]];
      for (int i = 1; i < q; ++i)
        g = div_or_throw(g, eps * (s_weight(v(i)) - s_weight(3)), "first vertex of V_q");
      const SymbolPoly term = SymbolPoly::from_poly(g) * product;
      total += term;
      subtract(term);
    }

    if (!values[vq[1]].is_zero()) {
      Poly g = values[vq[1]];
      for (int i = 1; i < q; ++i)
        g = div_or_throw(g, eps * (s_weight(v2(i)) - s_weight(3)), "second vertex of V_q");
      g = div_or_throw(g, s_weight(1) - s_weight(2), "edge inside V_q");

      const int j = (q == 1) ? 2 : 1;  // smallest index in [3] \ {q}
      const Weight u = eps * (s_weight(v2(j)) - s_weight(v(j)));
      int delta;
      if (u == s_weight(1) - s_weight(2))
        delta = 1;
      else if (u == s_weight(2) - s_weight(1))
        delta = -1;
      else
        throw InternalDivisionError("reduce_class: correcting factor is not +-(s1 - s2)");

      const SymbolPoly corr =
          SymbolPoly::tau(j) - SymbolPoly::from_poly(Poly::linear(eps * s_weight(v(j))));
      const SymbolPoly term = Int(delta) * (SymbolPoly::from_poly(g) * corr * product);
      total += term;
      subtract(term);
    }

    if (!values[vq[0]].is_zero() || !values[vq[1]].is_zero())
      throw InternalDivisionError("reduce_class: V_q values not annihilated");
  }
  return total;
}

}  // namespace detail

// Expresses a GKM class as a Z[t]-combination of the 12 basis monomials.
// Stage 1 annihilates the class on V- by subtracting a polynomial in the
// tau_i and t_i; the residue on V+ is then divisible by s1 s2 s3 pointwise,
// and stage 2 applies the same elimination to the quotient and subtracts the
// result times f.  The accumulated symbol polynomial is put in normal form.
inline ReductionCertificate reduce_class(const CohomologyClass& h) {
  const auto& g = *h.graph;
  detail::require_g2_vertex_set(g);
  if (gkm_check(h)) throw NotGkmError("reduce_class: input violates the GKM condition");

  const auto perms = all_perms();
  std::vector<Poly> residual = h.values;
  auto vertex = [&](const Perm& p, Sign s) { return g.vertex_index({p, s}); };

  std::array<Poly, 6> minus_values;
  for (int k = 0; k < 6; ++k) minus_values[k] = residual[vertex(perms[k], Sign::minus)];
  const SymbolPoly s1 = detail::fit_tau_polynomial(minus_values, -1);

  {
    const CohomologyClass sub = evaluate_symbol_poly(s1, g);
    for (std::size_t k = 0; k < residual.size(); ++k) residual[k] -= sub.values[k];
  }
  for (int k = 0; k < 6; ++k)
    if (!residual[vertex(perms[k], Sign::minus)].is_zero())
      throw InternalDivisionError("reduce_class: V- residue nonzero after stage 1");

  std::array<Poly, 6> quotients;
  for (int k = 0; k < 6; ++k) {
    Poly p = residual[vertex(perms[k], Sign::plus)];
    if (!p.is_zero())
      for (int i = 1; i <= 3; ++i) p = detail::div_or_throw(p, s_weight(i), "stage 2 quotient");
    quotients[k] = std::move(p);
  }
  const SymbolPoly s2 = detail::fit_tau_polynomial(quotients, +1);

  const SymbolPoly total = s1 + s2 * SymbolPoly::f();
  const CohomologyClass recombined = evaluate_symbol_poly(total, g);
  for (std::size_t k = 0; k < residual.size(); ++k)
    if (!(recombined.values[k] == h.values[k]))
      throw InternalDivisionError("reduce_class: residue nonzero after stage 2");

  return normal_form(total);
}

// ---------------------------------------------------------------------------
// Graded ranks and the Hilbert series

// rank of Z[t1,t2,t3] in polynomial degree k.
inline int monomial_count(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

// Exponent triples of total degree k in lexicographic order (matches the
// polynomial term order).
inline std::vector<Poly::Expo> monomials_of_degree(int k) {
  std::vector<Poly::Expo> out;
  for (int e1 = 0; e1 <= k; ++e1)
    for (int e2 = 0; e2 + e1 <= k; ++e2) out.push_back({e1, e2, k - e1 - e2});
  return out;
}

// Numerator of the closed-form Hilbert series, coefficients of x^{2j}:
// (1+x^2)(1+x^2+x^4)(1+x^6) for G2 and (1+x^2)(1+x^2+x^4) for A2.
inline const std::vector<int>& hilbert_numerator(RootSystem s) {
  static const std::vector<int> g2{1, 2, 2, 2, 2, 2, 1};
  static const std::vector<int> a2{1, 2, 2, 1};
  return s == RootSystem::G2 ? g2 : a2;
}

inline int hilbert_closed_form(RootSystem s, int k) {
  const auto& num = hilbert_numerator(s);
  int d = 0;
  for (std::size_t j = 0; j < num.size(); ++j) d += num[j] * monomial_count(k - static_cast<int>(j));
  return d;
}

inline int hilbert_closed_form(int k) { return hilbert_closed_form(RootSystem::G2, k); }

// Constraint matrix of the degree-k GKM conditions: one column per
// (vertex, degree-k monomial), and for each edge the k+1 coefficients of
// substitute_eliminating(h(u) - h(v), label) as rows.
inline IntMatrix gkm_constraint_matrix(const LabeledGraph& g, int k) {
  const auto mons = monomials_of_degree(k);
  const int nm = static_cast<int>(mons.size());
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());
  IntMatrix m(ne * (k + 1), nv * nm);

  // Row coordinates of the two-variable residue of one monomial, per label.
  std::map<LinearForm, std::vector<std::vector<Int>>> cache;
  for (const auto& e : g.edges) {
    if (cache.contains(e.label)) continue;
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
      if (e.label.c[i] == 1 || e.label.c[i] == -1) {
        pivot = i;
        break;
      }
    const int o1 = (pivot == 0) ? 1 : 0;
    auto& rows = cache[e.label];
    rows.resize(nm, std::vector<Int>(k + 1));
    for (int j = 0; j < nm; ++j) {
      const Poly res = substitute_eliminating(Poly::monomial(mons[j], Int(1)), e.label);
      for (const auto& [ex, c] : res.terms()) rows[j][ex[o1]] = c;
    }
  }

  for (int ei = 0; ei < ne; ++ei) {
    const auto& e = g.edges[ei];
    const auto& rows = cache[e.label];
    for (int j = 0; j < nm; ++j)
      for (int a = 0; a <= k; ++a) {
        const Int& c = rows[j][a];
        if (c == 0) continue;
        m.at(ei * (k + 1) + a, e.u * nm + j) = c;
        m.at(ei * (k + 1) + a, e.v * nm + j) = -c;
      }
  }
  return m;
}

// d(k) = rank of the degree-k part of the graph cohomology: the kernel
// dimension of the linearized GKM conditions.
inline int graded_rank(const LabeledGraph& g, int k) {
  return kernel_dimension(gkm_constraint_matrix(g, k));
}

struct RankTable {
  std::map<int, int> entries;  // k -> d(k)
};

inline RankTable rank_table(const LabeledGraph& g, int k_max) {
  RankTable t;
  for (int k = 0; k <= k_max; ++k) t.entries[k] = graded_rank(g, k);
  return t;
}

// ---------------------------------------------------------------------------
// Presentation verification

struct PresentationRow {
  int k = 0;
  int graded = 0;   // linear-algebra rank d(k)
  int closed = 0;   // closed-form Hilbert coefficient
  int span = 0;     // rank of the Z[t]-span of the basis monomials in degree k
  bool ok() const { return graded == closed && span == closed; }
};

struct PresentationReport {
  std::vector<PresentationRow> rows;
  bool determinant_nonzero = false;
  int failed_k = -1;    // first failing degree, -1 if none
  char failed_item = 0; // 'a' rank, 'b' span, 'c' determinant

  bool ok() const { return failed_k == -1 && failed_item == 0; }
};

namespace detail {

// Coordinates of a class in the (vertex, degree-k monomial) basis.
inline void write_coordinates(IntMatrix& m, int row, const CohomologyClass& h,
                              const std::vector<Poly::Expo>& mons) {
  const int nm = static_cast<int>(mons.size());
  std::map<Poly::Expo, int> index;
  for (int j = 0; j < nm; ++j) index[mons[j]] = j;
  for (std::size_t v = 0; v < h.values.size(); ++v)
    for (const auto& [e, c] : h.values[v].terms())
      m.at(row, static_cast<int>(v) * nm + index.at(e)) = c;
}

inline PresentationReport verify_presentation_impl(const LabeledGraph& g,
                                                   const std::vector<CohomologyClass>& basis,
                                                   RootSystem system, int k_max,
                                                   std::uint64_t seed) {
  PresentationReport rep;

  const int n = static_cast<int>(g.vertices.size());
  PolyMatrix eval(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < n; ++b) eval.at(v, b) = basis[b].values[v];
  rep.determinant_nonzero = nonzero_determinant(eval, seed);

  for (int k = 0; k <= k_max; ++k) {
    PresentationRow row;
    row.k = k;
    row.closed = hilbert_closed_form(system, k);
    row.graded = graded_rank(g, k);

    const auto mons = monomials_of_degree(k);
    const int nm = static_cast<int>(mons.size());
    int nrows = 0;
    for (const auto& b : basis) nrows += monomial_count(k - b.degree);
    IntMatrix span(nrows, n * nm);
    int at = 0;
    for (const auto& b : basis) {
      const int rem = k - b.degree;
      if (rem < 0) continue;
      for (const auto& q : monomials_of_degree(rem))
        write_coordinates(span, at++, Poly::monomial(q, Int(1)) * b, mons);
    }
    row.span = rank(std::move(span));
    rep.rows.push_back(row);

    if (rep.failed_k == -1) {
      if (row.graded != row.closed) {
        rep.failed_k = k;
        rep.failed_item = 'a';
      } else if (row.span != row.closed) {
        rep.failed_k = k;
        rep.failed_item = 'b';
      }
    }
  }
  if (rep.failed_k == -1 && !rep.determinant_nonzero) rep.failed_item = 'c';
  return rep;
}

}  // namespace detail

// G2: checks, for 0 <= k <= k_max, that (a) the linear-algebra rank equals
// the closed form, (b) the Z[t]-span of the 12 basis monomials has full rank
// in each degree, and (c) the 12x12 evaluation matrix of the monomials at the
// vertices has nonzero determinant.
inline PresentationReport verify_presentation(const LabeledGraph& g, int k_max,
                                              std::uint64_t seed = 12345) {
  std::vector<CohomologyClass> basis;
  for (const auto& m : g2_basis_monomials())
    basis.push_back(evaluate_symbol_poly(m.symbol(), g));
  return detail::verify_presentation_impl(g, basis, RootSystem::G2, k_max, seed);
}

// A2 analog with basis tau1^{i1} tau2^{i2}, i1 <= 2, i2 <= 1.
inline PresentationReport verify_a2_presentation(const LabeledGraph& g, int k_max,
                                                 std::uint64_t seed = 12345) {
  const auto gs = make_a2_generators(g);
  std::vector<CohomologyClass> basis;
  for (const auto& m : a2_basis_monomials()) {
    CohomologyClass c = CohomologyClass::constant(g, Poly(Int(1)));
    for (int i = 0; i < m.tau1; ++i) c = c * gs.tau[0];
    for (int i = 0; i < m.tau2; ++i) c = c * gs.tau[1];
    basis.push_back(c);
  }
  return detail::verify_presentation_impl(g, basis, RootSystem::A2, k_max, seed);
}

// ---------------------------------------------------------------------------
// Restriction to the sign subgraphs

// The restriction of the G2 generator tau_i to V+ (resp. V-) must agree with
// the A2 generator tau_i (resp. its negative) after the label substitution
// t_i -> s_i; together with the label isomorphism of the sign subgraphs this
// realizes the A2 graph cohomology inside the G2 one.
inline bool restriction_matches_a2(const LabeledGraph& g2graph, const LabeledGraph& a2graph) {
  const auto gs = make_generators(g2graph);
  const auto ags = make_a2_generators(a2graph);
  const std::array<Poly, 3> s_images{s_poly(1), s_poly(2), s_poly(3)};
  for (int i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < a2graph.vertices.size(); ++k) {
      const Perm v = a2graph.vertices[k].perm;
      const Poly expected = substitute_variables(ags.tau[i].values[k], s_images);
      const Poly on_plus = gs.tau[i].values[g2graph.vertex_index({v, Sign::plus})];
      const Poly on_minus = gs.tau[i].values[g2graph.vertex_index({v, Sign::minus})];
      if (!(on_plus == expected) || !(on_minus == -expected)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Seeded sampling of symbol polynomials (property tests, shipped fixtures)

inline SymbolPoly random_symbol_poly(std::mt19937_64& rng, int degree, int max_terms = 4) {
  SymbolPoly p;
  const int nterms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  for (int t = 0; t < nterms; ++t) {
    SymbolExpo e{};
    int remaining = degree;
    while (remaining > 0) {
      const int sym = static_cast<int>(rng() % 7);
      if (sym == 6) {
        if (remaining < 3) continue;
        e[6] += 1;
        remaining -= 3;
      } else {
        e[sym] += 1;
        remaining -= 1;
      }
    }
    const long c = static_cast<long>(rng() % 19) - 9;
    p.add_term(e, Int(c == 0 ? 1 : c));
  }
  return p;
}

}  // namespace gkm
