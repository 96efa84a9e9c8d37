#pragma once

// Exact sparse polynomial arithmetic over Z in the three variables t1, t2, t3,
// together with the linear-form primitives (exact division, hyperplane
// substitution) that the GKM divisibility condition is built on.

#include <gmpxx.h>

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

using Int = mpz_class;

// Raw integer vector in the t-basis of H^2(BT).  Roots, labels and the
// forms s_i = t_i - t_{i+1} all live here.
using Weight = std::array<int, 3>;

inline Weight operator+(const Weight& a, const Weight& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Weight operator-(const Weight& a, const Weight& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Weight operator-(const Weight& a) { return {-a[0], -a[1], -a[2]}; }
inline Weight operator*(int k, const Weight& a) {
  return {k * a[0], k * a[1], k * a[2]};
}
inline int dot(const Weight& a, const Weight& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline bool is_zero(const Weight& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

// s1 = t1-t2, s2 = t2-t3, s3 = t3-t1.  They sum to zero.
inline Weight s_weight(int i) {
  switch (i) {
    case 1: return {1, -1, 0};
    case 2: return {0, 1, -1};
    case 3: return {-1, 0, 1};
  }
  throw std::invalid_argument("s_weight: index must be 1, 2 or 3");
}

// Nonzero primitive integer linear form with canonical sign (first nonzero
// coefficient positive).  Edge labels are stored in this shape; per the
// sign-insensitivity of graph cohomology nothing downstream depends on the
// discarded sign.
struct LinearForm {
  std::array<int, 3> c{0, 0, 0};

  static LinearForm canonical(const Weight& w) {
    if (is_zero(w)) throw std::invalid_argument("LinearForm: zero weight");
    int g = 0;
    for (int x : w) g = gcd_int(g, x < 0 ? -x : x);
    Weight v{w[0] / g, w[1] / g, w[2] / g};
    for (int x : v) {
      if (x > 0) break;
      if (x < 0) {
        v = -v;
        break;
      }
    }
    LinearForm f;
    f.c = {v[0], v[1], v[2]};
    return f;
  }

  Weight weight() const { return {c[0], c[1], c[2]}; }

  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
  friend auto operator<=>(const LinearForm& a, const LinearForm& b) = default;

 private:
  static int gcd_int(int a, int b) {
    while (b) {
      int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

class Poly;
Poly operator*(const Poly& p, const Poly& q);

// Sparse polynomial in Z[t1,t2,t3].  The term map is the canonical form:
// no zero coefficients are ever stored, so operator== is structural.
class Poly {
 public:
  using Expo = std::array<int, 3>;
  using TermMap = std::map<Expo, Int>;

  Poly() = default;
  explicit Poly(Int c) {
    if (c != 0) terms_[{0, 0, 0}] = std::move(c);
  }
  explicit Poly(long c) : Poly(Int(c)) {}

  static Poly variable(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("Poly::variable: index");
    Poly p;
    Expo e{0, 0, 0};
    e[i - 1] = 1;
    p.terms_[e] = 1;
    return p;
  }

  // c1*t1 + c2*t2 + c3*t3
  static Poly linear(const Weight& w) {
    Poly p;
    for (int i = 0; i < 3; ++i) {
      if (w[i] == 0) continue;
      Expo e{0, 0, 0};
      e[i] = 1;
      p.terms_[e] = w[i];
    }
    return p;
  }

  static Poly monomial(const Expo& e, Int c) {
    Poly p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }

  bool is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      int t = e[0] + e[1] + e[2];
      if (d == -2)
        d = t;
      else if (t != d)
        return false;
    }
    return true;
  }

  Int coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  Poly& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend Poly operator*(Poly p, const Int& k) { return p *= k; }
  friend Poly operator*(const Int& k, Poly p) { return p *= k; }

  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(int n) const {
    if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r(Int(1));
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
  }

  Int evaluate(const std::array<Int, 3>& x) const {
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
      Int t = c;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < e[i]; ++j) t *= x[i];
      acc += t;
    }
    return acc;
  }

  void add_term(const Expo& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int a = c;
      if (a < 0) {
        os << (first ? "-" : " - ");
        a = -a;
      } else if (!first) {
        os << " + ";
      }
      bool unit = (a == 1) && (e[0] + e[1] + e[2] > 0);
      if (!unit) os << a.get_str();
      bool any = false;
      for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (any || !unit) os << "*";
        os << "t" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        any = true;
      }
      first = false;
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

inline Poly operator*(const Poly& p, const Poly& q) {
  Poly r;
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms())
      r.add_term({ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2]}, cp * cq);
  return r;
}

// t_i -> images[i-1], applied to every term.
inline Poly substitute_variables(const Poly& p, const std::array<Poly, 3>& images) {
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    Poly term(c);
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

inline Poly elementary_symmetric(int i, const std::array<Poly, 3>& a) {
  switch (i) {
    case 1: return a[0] + a[1] + a[2];
    case 2: return a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
    case 3: return a[0] * a[1] * a[2];
  }
  throw std::invalid_argument("elementary_symmetric: index must be 1, 2 or 3");
}

inline Poly s_poly(int i) { return Poly::linear(s_weight(i)); }

// e2(s) and e3(s) in Z[t]; the constants appearing in the G2 relations.
inline Poly e2_s() {
  return elementary_symmetric(2, {s_poly(1), s_poly(2), s_poly(3)});
}
inline Poly e3_s() {
  return elementary_symmetric(3, {s_poly(1), s_poly(2), s_poly(3)});
}

struct NoUnitCoefficientError : std::runtime_error {
  explicit NoUnitCoefficientError(const std::string& m) : std::runtime_error(m) {}
};

namespace detail {

// h split by the exponent of variable `var` (0-based): result[d] collects the
// terms of x_var-degree d with that variable removed.
inline std::vector<Poly> split_by_var(const Poly& h, int var) {
  int dmax = 0;
  for (const auto& [e, c] : h.terms()) dmax = std::max(dmax, e[var]);
  std::vector<Poly> out(dmax + 1);
  for (const auto& [e, c] : h.terms()) {
    Poly::Expo r = e;
    r[var] = 0;
    out[e[var]].add_term(r, c);
  }
  return out;
}

inline Poly times_var_pow(const Poly& p, int var, int d) {
  Poly r;
  for (const auto& [e, c] : p.terms()) {
    Poly::Expo x = e;
    x[var] += d;
    r.add_term(x, c);
  }
  return r;
}

// p / k with every coefficient exactly divisible, else nullopt.
inline std::optional<Poly> div_exact_int(const Poly& p, const Int& k) {
  Poly r;
  for (const auto& [e, c] : p.terms()) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    if (rem != 0) return std::nullopt;
    r.add_term(e, q);
  }
  return r;
}

}  // namespace detail

// Exact division of h by the integer linear form w (not necessarily primitive
// or sign-normalized).  Returns g with w*g == h, or nullopt when no such g
// exists over Q.  For primitive w an integral quotient is automatic (Gauss),
// so synthetic division in one variable with exact integer steps decides both
// questions at once: any non-exact interior division already certifies
// non-divisibility.
inline std::optional<Poly> div_exact_weight(const Poly& h, const Weight& w) {
  if (is_zero(w)) throw std::invalid_argument("div_exact_weight: zero form");
  if (h.is_zero()) return Poly();

  int content = 0;
  for (int x : w) content = std::gcd(content, x < 0 ? -x : x);
  Poly hh = h;
  Weight v = w;
  if (content > 1) {
    auto d = detail::div_exact_int(h, Int(content));
    if (!d) return std::nullopt;
    hh = *d;
    v = {w[0] / content, w[1] / content, w[2] / content};
  }

  // Prefer a +-1 pivot so every interior step is a no-op division.
  int pivot = -1;
  for (int i = 0; i < 3; ++i)
    if (v[i] == 1 || v[i] == -1) {
      pivot = i;
      break;
    }
  if (pivot < 0)
    for (int i = 0; i < 3; ++i)
      if (v[i] != 0) {
        pivot = i;
        break;
      }

  const Int c(v[pivot]);
  Weight rest = v;
  rest[pivot] = 0;
  const Poly lambda = Poly::linear(rest);

  auto a = detail::split_by_var(hh, pivot);
  const int top = static_cast<int>(a.size()) - 1;
  if (top == 0) {
    // No pivot variable present: divisible only if h == 0, handled above.
    return std::nullopt;
  }
  std::vector<Poly> b(top);  // quotient coefficients by pivot degree
  Poly carry = a[top];
  for (int d = top - 1; d >= 0; --d) {
    auto q = detail::div_exact_int(carry, c);
    if (!q) return std::nullopt;
    b[d] = std::move(*q);
    carry = a[d] - lambda * b[d];
  }
  if (!carry.is_zero()) return std::nullopt;

  Poly g;
  for (int d = 0; d < top; ++d) g += detail::times_var_pow(b[d], pivot, d);
  return g;
}

// The GKM divisibility primitive: h / l over Z, or NotDivisible (nullopt).
inline std::optional<Poly> div_exact_linear(const Poly& h, const LinearForm& l) {
  return div_exact_weight(h, l.weight());
}

// Substitute away the hyperplane l = 0: the variable carrying a +-1
// coefficient is replaced by the integral solution of l = 0, leaving a
// polynomial in the two remaining variables.  Zero result iff l divides h.
inline Poly substitute_eliminating(const Poly& h, const LinearForm& l) {
  int pivot = -1;
  for (int i = 0; i < 3; ++i)
    if (l.c[i] == 1 || l.c[i] == -1) {
      pivot = i;
      break;
    }
  if (pivot < 0)
    throw NoUnitCoefficientError("substitute_eliminating: no unit coefficient in label");

  // l = c_p x_p + rest = 0  =>  x_p = -c_p * rest  (c_p^2 = 1).
  Weight rest = l.weight();
  rest[pivot] = 0;
  const Poly repl = Poly::linear((-l.c[pivot]) * rest);

  auto parts = detail::split_by_var(h, pivot);
  Poly out;
  Poly rp(Int(1));
  for (int d = 0; d < static_cast<int>(parts.size()); ++d) {
    out += parts[d] * rp;
    rp = rp * repl;
  }
  return out;
}

}  // namespace gkm
