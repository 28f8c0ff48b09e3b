#include "csgk/algebra.hpp"

#include <algorithm>

namespace csgk {

CanonC pow_c(const CanonC& x, Exp n) {
  if (n == 0) {
    throw Error(ErrorCode::zero_exponent, "C has no identity element");
  }
  CanonC r = x;
  for (Exp i = 1; i < n; ++i) r = mul_c(r, x);
  return r;
}

BicyclicNF hom_h(const CanonC& x) { return BicyclicNF{x.b_exp, x.a_exp}; }

CanonC phi(Exp i, Exp j, const CanonC& x) {
  CanonC r = x;
  if (i > 0) r = mul_c(CanonC{i, 0, 0}, r);
  if (j > 0) r = mul_c(r, CanonC{0, 0, j});
  return r;
}

std::vector<CanonC> enumerate_region(const Region& r) { return r.elements(); }

CanonC mul_balanced_left(Exp m, Exp l, const CanonC& y) {
  const Exp n = y.b_exp;
  if (m < n) return CanonC{n, y.ab_exp, y.a_exp};
  if (m == n && m != 0) {
    return CanonC{n, checked_add(checked_add(l, y.ab_exp), 1), y.a_exp};
  }
  if (m == n) return CanonC{0, checked_add(l, y.ab_exp), y.a_exp};
  return CanonC{m, l, checked_add(y.a_exp, m - n)};
}

CanonC mul_balanced_right(const CanonC& x, Exp n, Exp p) {
  const Exp m = x.a_exp;
  if (m < n) return CanonC{checked_add(x.b_exp, n - m), p, n};
  if (m == n && m != 0) {
    return CanonC{x.b_exp, checked_add(checked_add(x.ab_exp, p), 1), n};
  }
  if (m == n) return CanonC{x.b_exp, checked_add(x.ab_exp, p), 0};
  return CanonC{x.b_exp, x.ab_exp, m};
}

CanonC conj_ab(const CanonC& x) {
  const Exp n = x.b_exp;
  const Exp p = x.ab_exp;
  const Exp q = x.a_exp;
  if (n > 1) {
    if (q == 0) return CanonC{n, 0, 0};
    if (q == 1) return CanonC{n - 1, checked_add(p, 1), 0};
    return CanonC{n - 1, p, q - 1};
  }
  if (n == 1) {
    if (q == 0) return CanonC{1, 0, 0};
    if (q == 1) return CanonC{0, checked_add(p, 2), 0};
    return CanonC{0, checked_add(p, 1), q - 1};
  }
  if (q == 0) return CanonC{0, 1, 0};
  if (q == 1) return CanonC{0, 0, 1};
  return CanonC{0, 0, q};
}

CanonC mul_right_b(const CanonC& x) {
  if (x.a_exp == 0) return CanonC{checked_add(x.b_exp, 1), 0, 0};
  if (x.a_exp == 1) return CanonC{x.b_exp, checked_add(x.ab_exp, 1), 0};
  return CanonC{x.b_exp, x.ab_exp, x.a_exp - 1};
}

CanonC mul_left_a(const CanonC& x) {
  if (x.b_exp > 1) return CanonC{x.b_exp - 1, x.ab_exp, x.a_exp};
  if (x.b_exp == 1) return CanonC{0, checked_add(x.ab_exp, 1), x.a_exp};
  return CanonC{0, 0, checked_add(x.a_exp, 1)};
}

EquationShape parse_shape(std::string_view text) {
  if (text == "axb") return {EquationShape::Kind::axb, std::nullopt};
  if (text == "xb") return {EquationShape::Kind::xb, std::nullopt};
  if (text == "ax") return {EquationShape::Kind::ax, std::nullopt};
  if (text.rfind("lx:", 0) == 0) {
    return {EquationShape::Kind::lx, parse_canon(text.substr(3))};
  }
  if (text.rfind("xr:", 0) == 0) {
    return {EquationShape::Kind::xr, parse_canon(text.substr(3))};
  }
  throw Error(ErrorCode::parse_error,
              "unknown equation shape '" + std::string(text) + "'");
}

std::string to_string(const EquationShape& shape) {
  switch (shape.kind) {
    case EquationShape::Kind::axb: return "axb";
    case EquationShape::Kind::xb: return "xb";
    case EquationShape::Kind::ax: return "ax";
    case EquationShape::Kind::lx: return "lx:" + to_string(*shape.coeff);
    case EquationShape::Kind::xr: return "xr:" + to_string(*shape.coeff);
  }
  return "?";
}

std::vector<CanonC> solve_equation(const EquationShape& shape,
                                   const CanonC& rhs, const Region& r) {
  static const CanonC gen_a{0, 0, 1};
  static const CanonC gen_b{1, 0, 0};
  std::vector<CanonC> solutions;
  for (const CanonC& x : r.elements()) {
    CanonC lhs = x;
    switch (shape.kind) {
      case EquationShape::Kind::axb:
        lhs = mul_c(mul_c(gen_a, x), gen_b);
        break;
      case EquationShape::Kind::xb:
        lhs = mul_c(x, gen_b);
        break;
      case EquationShape::Kind::ax:
        lhs = mul_c(gen_a, x);
        break;
      case EquationShape::Kind::lx:
        lhs = mul_c(*shape.coeff, x);
        break;
      case EquationShape::Kind::xr:
        lhs = mul_c(x, *shape.coeff);
        break;
    }
    if (lhs == rhs) solutions.push_back(x);
  }
  return solutions;  // region order is already lexicographic
}

std::vector<FreeWord> irreducible_words_up_to(std::size_t maxlen) {
  std::vector<FreeWord> out;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<FreeWord> of_len;
    for (Exp l = 0; 2 * l <= len; ++l) {
      const std::size_t rest = len - 2 * static_cast<std::size_t>(l);
      for (Exp k = 0; k <= rest; ++k) {
        of_len.push_back(
            from_normal_c(CanonC{k, l, static_cast<Exp>(rest - k)}));
      }
    }
    std::sort(of_len.begin(), of_len.end());
    out.insert(out.end(), of_len.begin(), of_len.end());
  }
  return out;
}

namespace {

// First word w in (length, lex) order with product(w) == target, or none.
std::optional<FreeWord> first_word_with(
    const std::vector<FreeWord>& candidates, const CanonC& other,
    const CanonC& target, bool multiply_on_right) {
  for (const FreeWord& w : candidates) {
    const CanonC elem = to_normal_c(w);
    const CanonC product =
        multiply_on_right ? mul_c(other, elem) : mul_c(elem, other);
    if (product == target) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessPair> green_witness(GreenSide side, const CanonC& x,
                                         const CanonC& y, std::size_t maxlen) {
  if (maxlen == 0) {
    throw Error(ErrorCode::invalid_argument, "maxlen must be positive");
  }
  const auto candidates = irreducible_words_up_to(maxlen);
  std::optional<FreeWord> u;
  std::optional<FreeWord> v;
  if (side == GreenSide::r) {
    u = first_word_with(candidates, x, y, /*multiply_on_right=*/true);
    v = first_word_with(candidates, y, x, /*multiply_on_right=*/true);
  } else {
    u = first_word_with(candidates, x, y, /*multiply_on_right=*/false);
    v = first_word_with(candidates, y, x, /*multiply_on_right=*/false);
  }
  if (!u || !v) return std::nullopt;
  return WitnessPair{*u, *v};
}

bool h_related(const CanonC& x, const CanonC& y, std::size_t maxlen) {
  if (x == y) return true;
  return green_witness(GreenSide::r, x, y, maxlen).has_value() &&
         green_witness(GreenSide::l, x, y, maxlen).has_value();
}

std::optional<WitnessPair> simple_witness(const CanonC& x, const CanonC& y,
                                          std::size_t maxlen) {
  if (maxlen == 0) {
    throw Error(ErrorCode::invalid_argument, "maxlen must be positive");
  }
  // Candidates bucketed by length, each bucket lex-sorted.
  std::vector<std::vector<FreeWord>> by_len(maxlen + 1);
  std::vector<std::vector<CanonC>> elems(maxlen + 1);
  for (const FreeWord& w : irreducible_words_up_to(maxlen)) {
    by_len[w.size()].push_back(w);
    elems[w.size()].push_back(to_normal_c(w));
  }
  for (std::size_t total = 2; total <= 2 * maxlen; ++total) {
    const std::size_t lo = total > maxlen ? total - maxlen : 1;
    for (std::size_t lu = lo; lu + 1 <= total && lu <= maxlen; ++lu) {
      const std::size_t lv = total - lu;
      for (std::size_t iu = 0; iu < by_len[lu].size(); ++iu) {
        const CanonC ux = mul_c(elems[lu][iu], x);
        for (std::size_t iv = 0; iv < by_len[lv].size(); ++iv) {
          if (mul_c(ux, elems[lv][iv]) != y) continue;
          WitnessPair pair{by_len[lu][iu], by_len[lv][iv]};
          // Confirm through the word oracle before handing the pair out.
          const FreeWord sandwich =
              pair.u.concat(from_normal_c(x)).concat(pair.v);
          if (to_normal_c(sandwich) != y) {
            throw Error(ErrorCode::shape_violation,
                        "witness failed oracle confirmation");
          }
          return pair;
        }
      }
    }
  }
  return std::nullopt;
}

std::size_t default_simple_witness_bound(const CanonC& x, const CanonC& y) {
  Exp sum = checked_add(checked_add(x.b_exp, x.ab_exp), x.a_exp);
  sum = checked_add(sum, checked_add(checked_add(y.b_exp, y.ab_exp), y.a_exp));
  return static_cast<std::size_t>(checked_add(checked_mul(2, sum), 4));
}

CanonC apply_translation(Side side, const CanonC& c, const CanonC& x) {
  return side == Side::left ? mul_c(c, x) : mul_c(x, c);
}

bool is_fixed(Side side, const CanonC& c, const CanonC& x) {
  return apply_translation(side, c, x) == x;
}

bool is_idempotent(const CanonC& x) { return mul_c(x, x) == x; }

}  // namespace csgk
