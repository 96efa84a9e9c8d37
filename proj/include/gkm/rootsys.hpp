#pragma once

// Root systems A2 and G2 in t-coordinates, their Weyl groups as 2x2 integer
// matrices on simple-root coordinates, and the encoding of W(G2) as
// S3 x {+,-}.  Reflections of G2 are not integral on the t-lattice, so group
// elements act on the root lattice and are converted back to t-coordinates
// only when a weight is needed.

#include "gkm/poly.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

enum class RootSystem { A2, G2 };

inline std::string name(RootSystem s) { return s == RootSystem::A2 ? "a2" : "g2"; }

// Permutation of {1,2,3} in one-line notation: img[i-1] = v(i).
struct Perm {
  std::array<int, 3> img{1, 2, 3};

  static Perm identity() { return Perm{}; }
  static Perm from_string(const std::string& s) {
    if (s.size() != 3) throw std::invalid_argument("Perm: bad one-line string");
    Perm p;
    bool seen[4] = {false, false, false, false};
    for (int i = 0; i < 3; ++i) {
      int v = s[i] - '0';
      if (v < 1 || v > 3 || seen[v]) throw std::invalid_argument("Perm: bad one-line string");
      seen[v] = true;
      p.img[i] = v;
    }
    return p;
  }

  int operator()(int i) const { return img[i - 1]; }

  Perm inverse() const {
    Perm r;
    for (int i = 1; i <= 3; ++i) r.img[(*this)(i)-1] = i;
    return r;
  }

  // (a*b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    for (int i = 1; i <= 3; ++i) r.img[i - 1] = a(b(i));
    return r;
  }

  // Swap the entries at positions i and j (v -> v.(i,j)).
  Perm swap_positions(int i, int j) const {
    Perm r = *this;
    std::swap(r.img[i - 1], r.img[j - 1]);
    return r;
  }

  std::string one_line() const {
    std::string s;
    for (int v : img) s += static_cast<char>('0' + v);
    return s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

inline std::array<Perm, 6> all_perms() {
  std::array<Perm, 6> out;
  std::array<int, 3> v{1, 2, 3};
  for (int k = 0;; ++k) {
    out[k].img = v;
    if (!std::next_permutation(v.begin(), v.end())) break;
  }
  return out;
}

// Positions i < j with a = b.(i,j), when the two permutations differ by a
// position transposition.
inline std::optional<std::pair<int, int>> transposition_between(const Perm& a, const Perm& b) {
  std::vector<int> diff;
  for (int i = 1; i <= 3; ++i)
    if (a(i) != b(i)) diff.push_back(i);
  if (diff.size() != 2) return std::nullopt;
  int i = diff[0], j = diff[1];
  if (a(i) == b(j) && a(j) == b(i)) return std::make_pair(i, j);
  return std::nullopt;
}

enum class Sign : int { plus = +1, minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
inline Sign sign_from_char(char c) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  throw std::invalid_argument("sign_from_char");
}

// Vertex of a labeled graph: (permutation, sign).  A2 vertices carry a fixed
// '+' sign.
struct WeylElement {
  Perm perm;
  Sign sign = Sign::plus;

  std::string id() const { return perm.one_line() + ":" + to_char(sign); }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return value(a.sign) > value(b.sign);  // '+' before '-'
  }
};

// 2x2 integer matrix acting on coordinates in the simple-root basis.
struct RootLatticeMatrix {
  // row-major: m[0] m[1] / m[2] m[3]
  std::array<int, 4> m{1, 0, 0, 1};

  static RootLatticeMatrix identity() { return RootLatticeMatrix{}; }

  std::array<int, 2> apply(const std::array<int, 2>& v) const {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
  }

  friend RootLatticeMatrix operator*(const RootLatticeMatrix& a, const RootLatticeMatrix& b) {
    RootLatticeMatrix r;
    r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return r;
  }

  int det() const { return m[0] * m[3] - m[1] * m[2]; }

  friend bool operator==(const RootLatticeMatrix&, const RootLatticeMatrix&) = default;
  friend auto operator<=>(const RootLatticeMatrix&, const RootLatticeMatrix&) = default;
};

struct NonIntegralReflectionError : std::runtime_error {
  explicit NonIntegralReflectionError(const std::string& m) : std::runtime_error(m) {}
};

// sigma_beta(gamma) = gamma - 2 (beta.gamma)/(beta.beta) beta, with the
// orthonormal t-basis inner product.  Integrality of the result is checked;
// a failure signals the formula was applied to a weight outside the lattice
// the reflection preserves.
inline Weight reflect(const Weight& beta, const Weight& gamma) {
  const int bb = dot(beta, beta);
  const int bg = dot(beta, gamma);
  if (bb == 0) throw std::invalid_argument("reflect: zero root");
  if ((2 * bg) % bb != 0)
    throw NonIntegralReflectionError("reflect: non-integral image for weight");
  return gamma - (2 * bg / bb) * beta;
}

namespace detail {

struct SystemData {
  RootSystem tag;
  std::array<Weight, 2> simple;         // t-coordinates of alpha1, alpha2
  std::vector<Weight> roots;            // all roots, t-coordinates
  std::vector<Weight> positive;         // canonical-sign representatives
  RootLatticeMatrix sigma1, sigma2;     // simple reflections on lattice coords
};

inline std::array<int, 2> lattice_coords(RootSystem s, const Weight& w) {
  // Invert (a,b) -> a*alpha1 + b*alpha2.
  int a, b;
  if (s == RootSystem::A2) {
    // alpha1 = (1,-1,0), alpha2 = (0,1,-1): t = (a, b-a, -b)
    a = w[0];
    b = -w[2];
  } else {
    // alpha1 = (1,-1,0), alpha2 = (-2,1,1): t = (a-2b, -a+b, b)
    b = w[2];
    a = w[0] + 2 * b;
  }
  const Weight alpha1{1, -1, 0};
  const Weight alpha2 = (s == RootSystem::A2) ? Weight{0, 1, -1} : Weight{-2, 1, 1};
  if (a * alpha1 + b * alpha2 != w)
    throw std::invalid_argument("lattice_coords: weight not in the root lattice");
  return {a, b};
}

inline Weight t_coords(RootSystem s, const std::array<int, 2>& ab) {
  const Weight alpha1{1, -1, 0};
  const Weight alpha2 = (s == RootSystem::A2) ? Weight{0, 1, -1} : Weight{-2, 1, 1};
  return ab[0] * alpha1 + ab[1] * alpha2;
}

// Reflection by the root `alpha` as a matrix on simple-root coordinates.
inline RootLatticeMatrix reflection_matrix(RootSystem s, const Weight& alpha) {
  RootLatticeMatrix r;
  for (int col = 0; col < 2; ++col) {
    const Weight basis = (col == 0) ? t_coords(s, {1, 0}) : t_coords(s, {0, 1});
    const auto image = lattice_coords(s, reflect(alpha, basis));
    r.m[0 + col] = image[0];
    r.m[2 + col] = image[1];
  }
  return r;
}

inline const SystemData& system_data(RootSystem s) {
  static const SystemData a2 = [] {
    SystemData d;
    d.tag = RootSystem::A2;
    d.simple = {Weight{1, -1, 0}, Weight{0, 1, -1}};
    d.positive = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
    for (const auto& p : d.positive) {
      d.roots.push_back(p);
      d.roots.push_back(-p);
    }
    d.sigma1 = reflection_matrix(RootSystem::A2, d.simple[0]);
    d.sigma2 = reflection_matrix(RootSystem::A2, d.simple[1]);
    return d;
  }();
  static const SystemData g2 = [] {
    SystemData d;
    d.tag = RootSystem::G2;
    d.simple = {Weight{1, -1, 0}, Weight{-2, 1, 1}};
    // short: +-(t_i - t_j); long: +-(2t_i - t_j - t_k)
    d.positive = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1},
                  {1, -2, 1}, {1, 1, -2}, {2, -1, -1}};
    for (const auto& p : d.positive) {
      d.roots.push_back(p);
      d.roots.push_back(-p);
    }
    d.sigma1 = reflection_matrix(RootSystem::G2, d.simple[0]);
    d.sigma2 = reflection_matrix(RootSystem::G2, d.simple[1]);
    return d;
  }();
  return s == RootSystem::A2 ? a2 : g2;
}

}  // namespace detail

inline const std::vector<Weight>& roots(RootSystem s) { return detail::system_data(s).roots; }
inline const std::vector<Weight>& positive_roots(RootSystem s) {
  return detail::system_data(s).positive;
}
inline std::array<Weight, 2> simple_roots(RootSystem s) { return detail::system_data(s).simple; }

inline bool is_root(RootSystem s, const Weight& w) {
  const auto& r = roots(s);
  return std::find(r.begin(), r.end(), w) != r.end();
}

// Root constrained to one of the two systems; membership checked on
// construction.
struct Root {
  RootSystem system;
  Weight weight;

  Root(RootSystem s, const Weight& w) : system(s), weight(w) {
    if (!is_root(s, w)) throw std::invalid_argument("Root: not a root of the system");
  }
};

// Closure of the simple reflections; 6 elements for A2, 12 for G2, identity
// first, deterministic BFS order.
inline std::vector<RootLatticeMatrix> enumerate_weyl_group(RootSystem s) {
  const auto& d = detail::system_data(s);
  std::vector<RootLatticeMatrix> elems{RootLatticeMatrix::identity()};
  const std::array<RootLatticeMatrix, 2> gens{d.sigma1, d.sigma2};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      const auto next = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(next);
    }
  return elems;
}

inline RootLatticeMatrix simple_reflection(RootSystem s, int i) {
  const auto& d = detail::system_data(s);
  if (i == 1) return d.sigma1;
  if (i == 2) return d.sigma2;
  throw std::invalid_argument("simple_reflection: index");
}

inline RootLatticeMatrix reflection_in(RootSystem s, const Weight& alpha) {
  if (!is_root(s, alpha)) throw std::invalid_argument("reflection_in: not a root");
  return detail::reflection_matrix(s, alpha);
}

// Image of a root-lattice weight under a Weyl element, in t-coordinates.
inline Weight apply_to_weight(RootSystem s, const RootLatticeMatrix& w, const Weight& gamma) {
  return detail::t_coords(s, w.apply(detail::lattice_coords(s, gamma)));
}

namespace detail {

// W(Phi) = <sigma1 sigma2 sigma1, sigma2>, the subgroup fixing the long-root
// A2 subsystem Phi = {+-(s_i - s_j)}.
inline const std::vector<RootLatticeMatrix>& w_phi_elements() {
  static const std::vector<RootLatticeMatrix> elems = [] {
    const auto& d = system_data(RootSystem::G2);
    std::vector<RootLatticeMatrix> out{RootLatticeMatrix::identity()};
    const std::array<RootLatticeMatrix, 2> gens{d.sigma1 * d.sigma2 * d.sigma1, d.sigma2};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto& g : gens) {
        const auto next = out[i] * g;
        if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(next);
      }
    return out;
  }();
  return elems;
}

}  // namespace detail

inline bool in_w_phi(const RootLatticeMatrix& w) {
  const auto& phi = detail::w_phi_elements();
  return std::find(phi.begin(), phi.end(), w) != phi.end();
}

// rho = (sigma1 sigma2)^3, minus identity on the root lattice.
inline RootLatticeMatrix rho_element() {
  const auto s1 = simple_reflection(RootSystem::G2, 1);
  const auto s2 = simple_reflection(RootSystem::G2, 2);
  const auto p = s1 * s2;
  return p * p * p;
}

// The bijection W(G2) -> S3 x {+,-}.  The permutation is read off from the
// action on the long roots s_i - s_j (w(s_i - s_j) = +-(s_{pi(i)} - s_{pi(j)}));
// the sign records membership in W(Phi).
inline WeylElement psi_encode(const RootLatticeMatrix& w) {
  // s_i - s_j in t-coordinates.
  auto s_diff = [](int i, int j) { return s_weight(i) - s_weight(j); };

  std::array<int, 4> pi{0, 0, 0, 0};  // pi[k] for k = 1..3
  for (int k = 1; k <= 3; ++k) {
    // {i,j} = [3] \ {k}
    int i = (k == 1) ? 2 : 1;
    int j = (k == 3) ? 2 : 3;
    const Weight image = apply_to_weight(RootSystem::G2, w, s_diff(i, j));
    int a = -1, b = -1;
    for (int p = 1; p <= 3 && a < 0; ++p)
      for (int q = 1; q <= 3; ++q) {
        if (p == q) continue;
        if (image == s_diff(p, q)) {
          a = p;
          b = q;
          break;
        }
      }
    if (a < 0) throw std::logic_error("psi_encode: image is not a long root");
    pi[k] = 6 - a - b;  // the index not in {a,b}
  }
  Perm perm;
  perm.img = {pi[1], pi[2], pi[3]};
  bool seen[4] = {false, false, false, false};
  for (int v : perm.img) {
    if (v < 1 || v > 3 || seen[v]) throw std::logic_error("psi_encode: inconsistent action");
    seen[v] = true;
  }
  return WeylElement{perm, in_w_phi(w) ? Sign::plus : Sign::minus};
}

// Permutation of the A2 Weyl element: w(t_i - t_j) = t_{pi(i)} - t_{pi(j)}
// exactly, so pi is read off from the images of the simple roots.
inline WeylElement a2_encode(const RootLatticeMatrix& w) {
  auto read = [&](const Weight& alpha) {
    const Weight im = apply_to_weight(RootSystem::A2, w, alpha);
    int plus = -1, minus = -1;
    for (int i = 0; i < 3; ++i) {
      if (im[i] == 1) plus = i + 1;
      if (im[i] == -1) minus = i + 1;
    }
    if (plus < 0 || minus < 0) throw std::logic_error("a2_encode: image not of t_a - t_b shape");
    return std::make_pair(plus, minus);
  };
  const auto [p1, p2] = read({1, -1, 0});   // w(t1 - t2)
  const auto [q2, q3] = read({0, 1, -1});   // w(t2 - t3)
  if (p2 != q2) throw std::logic_error("a2_encode: inconsistent images");
  Perm perm;
  perm.img = {p1, p2, q3};
  return WeylElement{perm, Sign::plus};
}

}  // namespace gkm
