#pragma once

// Labeled graphs on Weyl-group vertex sets: the generic builder from a root
// system, the combinatorial S3 x {+,-} description of the G2 graph, and
// label-aware isomorphism testing.

#include "gkm/poly.hpp"
#include "gkm/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gkm {

struct Edge {
  int u = 0, v = 0;  // vertex indices, u < v
  LinearForm label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Vertices are kept sorted lexicographically on (one-line permutation, sign
// with + < -) and edges on (u, v); every serialization and every "first
// violating edge" report relies on this order.
struct LabeledGraph {
  std::string name;  // "a2" or "g2"
  std::vector<WeylElement> vertices;
  std::vector<Edge> edges;

  static LabeledGraph make(std::string name, std::vector<WeylElement> verts,
                           std::vector<std::tuple<WeylElement, WeylElement, LinearForm>> raw_edges) {
    LabeledGraph g;
    g.name = std::move(name);
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw std::invalid_argument("LabeledGraph: duplicate vertex");
    g.vertices = std::move(verts);
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b, label] : raw_edges) {
      int u = g.vertex_index(a);
      int v = g.vertex_index(b);
      if (u == v) throw std::invalid_argument("LabeledGraph: self loop");
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) continue;  // same unordered pair listed twice
      g.edges.push_back(Edge{u, v, label});
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return g;
  }

  int vertex_index(const WeylElement& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || !(*it == w))
      throw std::invalid_argument("LabeledGraph: unknown vertex " + w.id());
    return static_cast<int>(it - vertices.begin());
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == v || e.v == v);
    return d;
  }

  std::optional<LinearForm> edge_label(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges)
      if (e.u == u && e.v == v) return e.label;
    return std::nullopt;
  }

  bool is_connected() const {
    if (vertices.empty()) return true;
    std::vector<char> seen(vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        int w = -1;
        if (e.u == v) w = e.v;
        if (e.v == v) w = e.u;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

// Definition-level builder: vertices are the Weyl group elements, w and
// w.sigma_alpha are joined for every positive root alpha, and the edge is
// labeled by (the sign-normalization of) w(alpha).
inline LabeledGraph build_from_root_system(RootSystem s) {
  const auto group = enumerate_weyl_group(s);
  std::vector<WeylElement> verts;
  std::vector<WeylElement> encoded(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    encoded[i] = (s == RootSystem::G2) ? psi_encode(group[i]) : a2_encode(group[i]);
    verts.push_back(encoded[i]);
  }
  std::vector<std::tuple<WeylElement, WeylElement, LinearForm>> raw;
  for (std::size_t i = 0; i < group.size(); ++i)
    for (const auto& alpha : positive_roots(s)) {
      const auto partner = group[i] * reflection_in(s, alpha);
      const auto it = std::find(group.begin(), group.end(), partner);
      if (it == group.end()) throw std::logic_error("build_from_root_system: not closed");
      const auto j = static_cast<std::size_t>(it - group.begin());
      const Weight label = apply_to_weight(s, group[i], alpha);
      raw.emplace_back(encoded[i], encoded[j], LinearForm::canonical(label));
    }
  return LabeledGraph::make(name(s), std::move(verts), std::move(raw));
}

// The explicit S3 x {+,-} description of the G2 graph: (v1,e1) and (v2,e2)
// are adjacent when v1 = v2.(i,j); the label is s_{v1(i)} - s_{v1(j)} when
// the signs agree and s_{v1(k)} (k the fixed position) when they differ.
inline LabeledGraph build_g2_combinatorial() {
  std::vector<WeylElement> verts;
  for (const auto& p : all_perms())
    for (Sign s : {Sign::plus, Sign::minus}) verts.push_back({p, s});

  std::vector<std::tuple<WeylElement, WeylElement, LinearForm>> raw;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const auto& w1 = verts[a];
      const auto& w2 = verts[b];
      const auto tr = transposition_between(w1.perm, w2.perm);
      if (!tr) continue;
      const auto [i, j] = *tr;
      Weight label;
      if (w1.sign == w2.sign) {
        label = s_weight(w1.perm(i)) - s_weight(w1.perm(j));
      } else {
        const int k = 6 - i - j;
        label = s_weight(w1.perm(k));
      }
      raw.emplace_back(w1, w2, LinearForm::canonical(label));
    }
  return LabeledGraph::make("g2", std::move(verts), std::move(raw));
}

// Full subgraph on the vertices selected by `keep`, with labels carried over.
inline LabeledGraph full_subgraph(const LabeledGraph& g, const std::function<bool(const WeylElement&)>& keep,
                                  std::string name) {
  std::vector<WeylElement> verts;
  for (const auto& w : g.vertices)
    if (keep(w)) verts.push_back(w);
  std::vector<std::tuple<WeylElement, WeylElement, LinearForm>> raw;
  for (const auto& e : g.edges) {
    const auto& a = g.vertices[e.u];
    const auto& b = g.vertices[e.v];
    if (keep(a) && keep(b)) raw.emplace_back(a, b, e.label);
  }
  return LabeledGraph::make(std::move(name), std::move(verts), std::move(raw));
}

// Linear change of label coordinates, t_i -> images[i-1]; used to compare an
// A2 graph with t-labels against a subgraph carrying s-labels.
struct LabelSubstitution {
  std::array<Weight, 3> images;

  LinearForm operator()(const LinearForm& l) const {
    const Weight w = l.c[0] * images[0] + l.c[1] * images[1] + l.c[2] * images[2];
    return LinearForm::canonical(w);
  }
};

inline LabelSubstitution t_to_s_substitution() {
  return LabelSubstitution{{s_weight(1), s_weight(2), s_weight(3)}};
}

// Label-preserving isomorphism from g to h by backtracking; the result maps
// g-vertex indices to h-vertex indices.  An optional substitution is applied
// to g's labels before comparison.
inline std::optional<std::vector<int>> label_isomorphic(
    const LabeledGraph& g, const LabeledGraph& h,
    const std::optional<LabelSubstitution>& subst = std::nullopt) {
  const int n = static_cast<int>(g.vertices.size());
  if (h.vertices.size() != g.vertices.size() || h.edges.size() != g.edges.size())
    return std::nullopt;

  // Adjacency with transformed labels on the g side.
  auto adj = [&](const LabeledGraph& gr, bool transform) {
    std::map<std::pair<int, int>, LinearForm> m;
    for (const auto& e : gr.edges) {
      LinearForm l = (transform && subst) ? (*subst)(e.label) : e.label;
      m[{e.u, e.v}] = l;
      m[{e.v, e.u}] = l;
    }
    return m;
  };
  const auto ga = adj(g, true);
  const auto ha = adj(h, false);

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);

  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int prev = 0; prev < v && ok; ++prev) {
        const auto git = ga.find({v, prev});
        const auto hit = ha.find({cand, image[prev]});
        const bool ge = git != ga.end();
        const bool he = hit != ha.end();
        if (ge != he || (ge && !(git->second == hit->second))) ok = false;
      }
      if (!ok) continue;
      image[v] = cand;
      used[cand] = 1;
      if (place(v + 1)) return true;
      used[cand] = 0;
      image[v] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

// Checks that a vertex involution carries every edge to an edge with the same
// label.  `translate` maps vertex index to vertex index.
inline bool translation_preserves_labels(const LabeledGraph& g,
                                         const std::function<int(int)>& translate) {
  for (const auto& e : g.edges) {
    const auto l = g.edge_label(translate(e.u), translate(e.v));
    if (!l || !(*l == e.label)) return false;
  }
  return true;
}

// The "parallel edges share labels" symmetry of the drawn G2 graph, read
// combinatorially: translating every vertex by rho ((v,e) -> (v,-e)) must
// carry edges to equally-labeled edges.
inline bool parallel_edges_share_labels(const LabeledGraph& g) {
  return translation_preserves_labels(g, [&](int v) {
    WeylElement w = g.vertices[v];
    w.sign = flip(w.sign);
    return g.vertex_index(w);
  });
}

// A2 analog via the antipodal map v -> v.w0 (reversal of the one-line word).
inline bool antipodal_edges_share_labels(const LabeledGraph& g) {
  return translation_preserves_labels(g, [&](int v) {
    WeylElement w = g.vertices[v];
    std::swap(w.perm.img[0], w.perm.img[2]);
    return g.vertex_index(w);
  });
}

}  // namespace gkm
