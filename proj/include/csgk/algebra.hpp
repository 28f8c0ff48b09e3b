#ifndef CSGK_ALGEBRA_HPP
#define CSGK_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csgk/words.hpp"

namespace csgk {

// Closed-form product in C. Writing x = b^k (ab)^l a^m and y = b^n (ab)^p a^q:
//   m < n      -> b^{k+n-m} (ab)^p a^q
//   m = n != 0 -> b^k (ab)^{l+p+1} a^q
//   m = n = 0  -> b^k (ab)^{l+p} a^q
//   m > n      -> b^k (ab)^l a^{q+m-n}
inline CanonC mul_c(const CanonC& x, const CanonC& y) {
  const Exp m = x.a_exp;
  const Exp n = y.b_exp;
  if (m < n) {
    return CanonC{checked_add(x.b_exp, n - m), y.ab_exp, y.a_exp};
  }
  if (m == n && m != 0) {
    return CanonC{x.b_exp, checked_add(checked_add(x.ab_exp, y.ab_exp), 1),
                  y.a_exp};
  }
  if (m == n) {  // m = n = 0
    return CanonC{x.b_exp, checked_add(x.ab_exp, y.ab_exp), y.a_exp};
  }
  return CanonC{x.b_exp, x.ab_exp, checked_add(y.a_exp, m - n)};
}

// Product in the bicyclic monoid: <i,j><n,q> = <i+n-t, q+j-t>, t = min(j,n).
inline BicyclicNF mul_b(const BicyclicNF& x, const BicyclicNF& y) {
  const Exp t = x.a_exp < y.b_exp ? x.a_exp : y.b_exp;
  return BicyclicNF{checked_add(x.b_exp, y.b_exp - t),
                    checked_add(y.a_exp, x.a_exp - t)};
}

// n-fold product of x with itself; n = 0 is rejected (C has no identity).
CanonC pow_c(const CanonC& x, Exp n);

// The continuous homomorphism C -> B(a,b): b^k (ab)^l a^m |-> b^k a^m.
BicyclicNF hom_h(const CanonC& x);

// x |-> b^i * x * a^j; the identity map when i = j = 0.
CanonC phi(Exp i, Exp j, const CanonC& x);

std::vector<CanonC> enumerate_region(const Region& r);

// Specialized product formulas, each a closed case table of its own. They
// are cross-checked against mul_c on parameter grids by the formulas suite.

// (b^m (ab)^l a^m) * y  -- left factor with balanced outer exponents.
CanonC mul_balanced_left(Exp m, Exp l, const CanonC& y);
// x * (b^n (ab)^p a^n)  -- right factor with balanced outer exponents.
CanonC mul_balanced_right(const CanonC& x, Exp n, Exp p);
// a * x * b, the nine-case table split by (b_exp, a_exp) of x.
CanonC conj_ab(const CanonC& x);
// x * b, three cases on a_exp.
CanonC mul_right_b(const CanonC& x);
// a * x, three cases on b_exp.
CanonC mul_left_a(const CanonC& x);

// Equation in one unknown X over C. Kinds:
//   axb: a * X * b = rhs      xb: X * b = rhs      ax: a * X = rhs
//   lx:  coeff * X = rhs      xr: X * coeff = rhs
struct EquationShape {
  enum class Kind { axb, xb, ax, lx, xr };
  Kind kind = Kind::axb;
  std::optional<CanonC> coeff;  // lx / xr only

  friend bool operator==(const EquationShape&, const EquationShape&) = default;
};

// Text forms: "axb", "xb", "ax", "lx:k,l,m", "xr:k,l,m".
EquationShape parse_shape(std::string_view text);
std::string to_string(const EquationShape& shape);

// Exact solution set within the region, by exhaustive search; sorted
// lexicographically. The empty set is a valid result.
std::vector<CanonC> solve_equation(const EquationShape& shape,
                                   const CanonC& rhs, const Region& r);

enum class Side { left, right };
enum class GreenSide { r, l };

struct WitnessPair {
  FreeWord u;
  FreeWord v;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// All irreducible C-words of length 1..maxlen, ordered by length then
// lexicographically (a < b). Witness searches run over these: any reducible
// word is preceded by its shorter normal form, so nothing is missed.
std::vector<FreeWord> irreducible_words_up_to(std::size_t maxlen);

// Bounded semi-decision for Green's R / L. For side r, looks for words u, v
// of length <= maxlen with x*u = y and y*v = x (side l: u*x = y, v*y = x).
// Each component is the first word in (length, lex) order; absence within
// the bound proves nothing.
std::optional<WitnessPair> green_witness(GreenSide side, const CanonC& x,
                                         const CanonC& y, std::size_t maxlen);

// True iff x = y or both R- and L-witnesses exist within the bound.
bool h_related(const CanonC& x, const CanonC& y, std::size_t maxlen);

// First pair (u, v) of nonempty words, |u|,|v| <= maxlen, with u*x*v = y,
// ordered by (|u|+|v|, |u|, u, v). The returned pair is re-verified through
// the word oracle before being handed out.
std::optional<WitnessPair> simple_witness(const CanonC& x, const CanonC& y,
                                          std::size_t maxlen);

// Heuristic search bound: 2 * (sum of all six exponents) + 4. A miss at
// this bound means "not found within bound", never "not related".
std::size_t default_simple_witness_bound(const CanonC& x, const CanonC& y);

CanonC apply_translation(Side side, const CanonC& c, const CanonC& x);
bool is_fixed(Side side, const CanonC& c, const CanonC& x);
bool is_idempotent(const CanonC& x);

}  // namespace csgk

#endif  // CSGK_ALGEBRA_HPP
