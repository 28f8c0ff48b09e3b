#ifndef CSGK_EXTENSIONS_HPP
#define CSGK_EXTENSIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "csgk/algebra.hpp"
#include "csgk/report.hpp"

namespace csgk {

// Element of S = C ⊔ B(a,b). The bicyclic identity <0,0> is a legal B-part.
struct ExtElem {
  std::variant<CanonC, BicyclicNF> value;

  bool is_c() const { return std::holds_alternative<CanonC>(value); }
  bool is_b() const { return std::holds_alternative<BicyclicNF>(value); }
  const CanonC& c() const { return std::get<CanonC>(value); }
  const BicyclicNF& b() const { return std::get<BicyclicNF>(value); }

  friend bool operator==(const ExtElem&, const ExtElem&) = default;
  friend auto operator<=>(const ExtElem& x, const ExtElem& y) {
    if (auto cmp = x.value.index() <=> y.value.index(); cmp != 0) return cmp;
    if (x.is_c()) return x.c() <=> y.c();
    return x.b() <=> y.b();
  }
};

ExtElem ext_c(const CanonC& x);
ExtElem ext_b(const BicyclicNF& x);
std::string to_string(const ExtElem& x);   // "C:k,l,m" / "B:i,j"
ExtElem parse_ext(std::string_view text);

// Element of S^0 = C with adjoined zero; empty optional is the zero.
struct ExtZeroElem {
  std::optional<CanonC> value;

  bool is_zero() const { return !value.has_value(); }

  friend bool operator==(const ExtZeroElem&, const ExtZeroElem&) = default;
};

ExtZeroElem ext_zero();
ExtZeroElem ext_zero_c(const CanonC& x);
std::string to_string(const ExtZeroElem& x);  // "C:k,l,m" / "0"
ExtZeroElem parse_ext_zero(std::string_view text);

// The operation ★ on C ⊔ B(a,b). C★C and B★B restrict to the two semigroup
// products; the mixed products compare the inner exponents a_exp / b_exp
// and land in whichever carrier the case table dictates.
ExtElem star_mul(const ExtElem& x, const ExtElem& y);

// Product on C ∪ {0}: zero absorbs, otherwise mul_c.
ExtZeroElem zero_mul(const ExtZeroElem& x, const ExtZeroElem& y);

using StarFn = std::function<ExtElem(const ExtElem&, const ExtElem&)>;

// Exhaustive associativity check of ★ over {C-part of r} ∪ {B<i,j> : i,j <=
// bicyclic_cap}. Tracks coverage of the 8 tag combinations and the 3+3 case
// branches of the two mixed products. `op` defaults to star_mul; test
// fixtures pass corrupted operations through it.
Report check_star_associativity(const Region& r, Exp bicyclic_cap,
                                const StarFn& op = {});

using HomFn = std::function<BicyclicNF(const CanonC&)>;

// Checks hom(x*y) = hom(x)*hom(y) on all pairs of r, plus the mixed
// compatibility: whenever C(x) ★ B(hom(y)) or B(hom(x)) ★ C(y) lands in the
// B-part, it agrees with hom of the C-product.
Report check_pi_homomorphism(const Region& r, const HomFn& hom = {});

}  // namespace csgk

#endif  // CSGK_EXTENSIONS_HPP
