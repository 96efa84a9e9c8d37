#pragma once

// JSON and DOT interchange.  The JSON shapes are stable contracts: polynomial
// terms are sorted lexicographically by exponent triple, graph vertices by
// (permutation, sign with + < -) and edges by (u, v), so equal values always
// serialize to identical bytes.

#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"
#include "gkm/poly.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace gkm {

using nlohmann::json;

// --- Polynomial: [{"e":[e1,e2,e3],"c":"<decimal-string>"}, ...]

inline json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"e", {e[0], e[1], e[2]}}, {"c", c.get_str()}});
  return terms;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected array");
  Poly p;
  for (const auto& term : j) {
    const auto& e = term.at("e");
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("polynomial: bad exponent triple");
    Poly::Expo expo{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
    for (int x : expo)
      if (x < 0) throw std::invalid_argument("polynomial: negative exponent");
    p.add_term(expo, Int(term.at("c").get<std::string>()));
  }
  return p;
}

// --- Labeled graph

inline json to_json(const LabeledGraph& g) {
  json verts = json::array();
  for (const auto& w : g.vertices)
    verts.push_back(json{{"perm", w.perm.one_line()}, {"sign", std::string(1, to_char(w.sign))}});
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"u", e.u}, {"v", e.v}, {"label", {e.label.c[0], e.label.c[1], e.label.c[2]}}});
  return json{{"vertices", verts}, {"edges", edges}};
}

inline LabeledGraph graph_from_json(const json& j, const std::string& name) {
  std::vector<WeylElement> verts;
  for (const auto& v : j.at("vertices")) {
    const auto sign = v.at("sign").get<std::string>();
    if (sign.size() != 1) throw std::invalid_argument("graph: bad sign");
    verts.push_back({Perm::from_string(v.at("perm").get<std::string>()), sign_from_char(sign[0])});
  }
  std::vector<std::tuple<WeylElement, WeylElement, LinearForm>> raw;
  for (const auto& e : j.at("edges")) {
    const int u = e.at("u").get<int>();
    const int v = e.at("v").get<int>();
    if (u < 0 || v < 0 || u >= static_cast<int>(verts.size()) || v >= static_cast<int>(verts.size()))
      throw std::invalid_argument("graph: edge endpoint out of range");
    const auto& l = e.at("label");
    if (!l.is_array() || l.size() != 3) throw std::invalid_argument("graph: bad label");
    const Weight w{l[0].get<int>(), l[1].get<int>(), l[2].get<int>()};
    raw.emplace_back(verts[u], verts[v], LinearForm::canonical(w));
  }
  auto sorted = verts;
  return LabeledGraph::make(name, std::move(sorted), std::move(raw));
}

// --- Cohomology class: {"graph":"g2","degree":k,"values":{"213:-":poly,...}}

inline json to_json(const CohomologyClass& h) {
  json values = json::object();
  for (std::size_t i = 0; i < h.values.size(); ++i)
    values[h.graph->vertices[i].id()] = to_json(h.values[i]);
  return json{{"graph", h.graph->name}, {"degree", h.degree}, {"values", values}};
}

inline CohomologyClass class_from_json(const json& j, const LabeledGraph& g) {
  if (j.at("graph").get<std::string>() != g.name)
    throw std::invalid_argument("class: graph mismatch (expected " + g.name + ")");
  const auto& values = j.at("values");
  std::vector<Poly> v(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto id = g.vertices[i].id();
    if (!values.contains(id)) throw std::invalid_argument("class: missing vertex " + id);
    v[i] = poly_from_json(values.at(id));
  }
  if (values.size() != g.vertices.size())
    throw std::invalid_argument("class: unknown vertex keys present");
  auto h = CohomologyClass::make(g, std::move(v));
  const int declared = j.at("degree").get<int>();
  if (!h.is_zero() && declared != h.degree)
    throw std::invalid_argument("class: declared degree does not match the values");
  h.degree = declared;
  return h;
}

// --- Reduction certificate: {"coeffs":{"tau1^i1 tau2^i2 f^j":poly,...}}

inline json to_json(const ReductionCertificate& c) {
  json coeffs = json::object();
  for (const auto& m : g2_basis_monomials()) coeffs[m.name()] = to_json(c.at(m));
  return json{{"coeffs", coeffs}};
}

inline ReductionCertificate certificate_from_json(const json& j) {
  ReductionCertificate c;
  const auto& coeffs = j.at("coeffs");
  for (const auto& m : g2_basis_monomials())
    if (coeffs.contains(m.name())) c.at(m) = poly_from_json(coeffs.at(m.name()));
  return c;
}

// --- DOT (display only, never parsed back)

inline std::string label_display(const LinearForm& l) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    const int c = l.c[i];
    if (c == 0) continue;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << "t" << (i + 1);
    first = false;
  }
  return os.str();
}

inline std::string to_dot(const LabeledGraph& g) {
  const bool signs = g.name != "a2";
  auto vname = [&](const WeylElement& w) {
    return signs ? w.perm.one_line() + "," + to_char(w.sign) : w.perm.one_line();
  };
  std::ostringstream os;
  os << "graph " << g.name << " {\n";
  for (const auto& w : g.vertices) os << "  \"" << vname(w) << "\";\n";
  for (const auto& e : g.edges)
    os << "  \"" << vname(g.vertices[e.u]) << "\" -- \"" << vname(g.vertices[e.v])
       << "\" [label=\"" << label_display(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace gkm
