#ifndef CSGK_TOPOLOGY_HPP
#define CSGK_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csgk/extensions.hpp"

namespace csgk {

bool is_prime(Exp n);

// Largest t with p^t dividing n (n > 0, p >= 2).
Exp p_adic_valuation(Exp p, Exp n);

// Parameters of the p-adic-flavoured topology on C: basic set index alpha
// and the truncation of the lambda range.
struct TauPParams {
  Exp prime = 2;
  Exp alpha = 1;
  Exp lambda_max = 1;
};

void validate(const TauPParams& params);  // prime, alpha >= 1, lambda_max >= 1

// Exact metric value: 0 or 2^(-s). s = 0 encodes the "otherwise" value 1.
struct MetricValue {
  enum class Kind { zero, dyadic };
  Kind kind = Kind::zero;
  Exp s = 0;

  static MetricValue zero() { return {Kind::zero, 0}; }
  static MetricValue dyadic(Exp s) { return {Kind::dyadic, s}; }
  bool is_zero() const { return kind == Kind::zero; }

  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

bool metric_less_equal(const MetricValue& x, const MetricValue& y);
// Exact test of d_xz <= d_xy + d_yz.
bool triangle_holds(const MetricValue& d_xz, const MetricValue& d_xy,
                    const MetricValue& d_yz);
std::string to_string(const MetricValue& v);  // "0", "1", "2^-s"

// Truncated basic set {(k, l + lambda * p^alpha, m) : 0 <= lambda <=
// lambda_max}. The index ranges over lambda >= 0, so the set contains its
// center; reports carry this as an explicit convention note.
std::vector<CanonC> nbhd_tau_p(const CanonC& x, const TauPParams& params);

// d(x, y): 0 when equal; 2^(-s) with s the p-adic valuation of the
// ab-exponent gap when only that coordinate differs; 1 otherwise.
MetricValue metric_tau_p(const CanonC& x, const CanonC& y, Exp prime);

// Membership in the untruncated basic set around `center`.
bool in_tau_p_nbhd(const CanonC& candidate, const CanonC& center, Exp prime,
                   Exp alpha);

// For the applicable product condition (split on a_exp vs b_exp of the
// factors), multiplies the two truncated basic sets pointwise and asserts
// every product lies in the basic set around mul_c(x, y).
Report check_tau_p_product(const CanonC& x, const CanonC& y,
                           const TauPParams& params);

// Metric-side checks around one center: every basic-set member is within
// 2^(-alpha); identity/symmetry/triangle (and the ultrametric form on
// common-(k,m) slices) on the sampled set; basic sets have >= 2 points.
Report check_tau_p_metric_base(const CanonC& x, const TauPParams& params);

// Topology on C ⊔ B(a,b): C-parts are isolated; around B<i,j> the basic set
// U_n collects the C-elements of cell (i,j) with ab-exponent >= n.
std::vector<ExtElem> nbhd_ext(const ExtElem& x, Exp n, Exp kcap);
bool in_ext_nbhd(const ExtElem& candidate, const BicyclicNF& center, Exp n);

// The three continuity cases around B-points: B★B, B★C and C★B. Sub-cases
// split on the sign of the inner exponent difference.
struct ExtCase1 {
  Exp i = 0, k = 0, m = 0, p = 0;  // B<i,k> ★ B<m,p>
};
struct ExtCase2 {
  Exp i = 0, k = 0;  // B<i,k> ★ y
  CanonC y;
};
struct ExtCase3 {
  CanonC x;  // x ★ B<m,p>
  Exp m = 0, p = 0;
};
using ExtContinuityCase = std::variant<ExtCase1, ExtCase2, ExtCase3>;

Report check_ext_continuity(const ExtContinuityCase& c, Exp u, Exp kcap);

// Topology on C ∪ {0}: C-parts isolated; U_n(0) = {0} ∪ {x : b_exp >= n and
// a_exp >= n}.
std::vector<ExtZeroElem> nbhd_zero(Exp n, const Region& r);
bool in_zero_nbhd(const ExtZeroElem& candidate, Exp n);

// Verifies U_i(0)·U_i(0) ⊆ U_i(0) and, when x is given,
// U_{i+m}(0)·{x} ⊆ U_i(0) and {x}·U_{i+p}(0) ⊆ U_i(0) with m = x.b_exp,
// p = x.a_exp.
Report check_zero_continuity(const std::optional<CanonC>& x, Exp i,
                             const Region& r);

// Fixed-point families of the translations by ab and by b^n a^n:
//   a_exp >= 1   fixed by right-mult by ab;   b_exp >= 1   by left-mult;
//   a_exp >= n+1 fixed by right-mult b^n a^n; b_exp >= n+1 by left-mult.
Report check_fix_inclusions(Exp n, const Region& r);

// For c = b^k (ab)^l a^k: asserts image/fixed-point facts of the two
// translations (image of the left one has b_exp >= k, elements with
// b_exp >= k+1 are fixed; mirrored on the right), and records -- without
// asserting either way -- where the translations fail f(f(x)) = f(x).
Report check_translation_retract(Exp k, Exp l, const Region& r);

}  // namespace csgk

#endif  // CSGK_TOPOLOGY_HPP
