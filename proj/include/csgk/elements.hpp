#ifndef CSGK_ELEMENTS_HPP
#define CSGK_ELEMENTS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csgk {

enum class ErrorCode {
  invalid_character,
  empty_word,
  shape_violation,
  zero_exponent,
  integer_overflow,
  length_limit,
  invalid_argument,
  io_error,
  parse_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Exponents are exact nonnegative integers; arithmetic that could wrap is
// routed through the checked helpers below and fails loudly instead.
using Exp = std::uint64_t;

[[noreturn]] void throw_overflow(const char* op);

inline Exp checked_add(Exp a, Exp b) {
  Exp r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("addition");
  return r;
}

inline Exp checked_mul(Exp a, Exp b) {
  Exp r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("multiplication");
  return r;
}

Exp checked_pow(Exp base, Exp exponent);

// Element b^k (ab)^l a^m of C = <a,b | a^2 b = a, a b^2 = b>.
// The triple (b_exp, ab_exp, a_exp) must not be all zero: C has no identity.
struct CanonC {
  Exp b_exp = 0;
  Exp ab_exp = 0;
  Exp a_exp = 0;

  friend constexpr auto operator<=>(const CanonC&, const CanonC&) = default;
};

CanonC make_canon(Exp b_exp, Exp ab_exp, Exp a_exp);
bool is_valid(const CanonC& x);
std::string to_string(const CanonC& x);        // "k,l,m"
CanonC parse_canon(std::string_view text);     // inverse of to_string

// Element b^i a^j of the bicyclic monoid B(a,b) = <a,b | ab = 1>.
// (0,0) is the identity.
struct BicyclicNF {
  Exp b_exp = 0;
  Exp a_exp = 0;

  friend constexpr auto operator<=>(const BicyclicNF&, const BicyclicNF&) = default;
};

std::string to_string(const BicyclicNF& x);    // "i,j"
BicyclicNF parse_bicyclic(std::string_view text);

// Cell C_{i,j} = { b^i (ab)^p a^j : p >= 0, valid elements only }.
struct Cell {
  Exp b_exp = 0;
  Exp a_exp = 0;

  bool contains(const CanonC& x) const {
    return x.b_exp == b_exp && x.a_exp == a_exp;
  }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Finite truncation {(k,l,m) : k <= b_cap, l <= ab_cap, m <= a_cap, k+l+m > 0}.
// Caps are inclusive; the degenerate Region(0,0,0) is empty.
struct Region {
  Exp b_cap = 0;
  Exp ab_cap = 0;
  Exp a_cap = 0;

  std::size_t size() const;
  bool contains(const CanonC& x) const;
  // Lexicographic (b_exp, ab_exp, a_exp) order, no duplicates.
  std::vector<CanonC> elements() const;

  friend constexpr auto operator<=>(const Region&, const Region&) = default;
};

std::string to_string(const Region& r);        // "K,L,M"
Region parse_region(std::string_view text);

}  // namespace csgk

#endif  // CSGK_ELEMENTS_HPP
