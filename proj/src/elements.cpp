#include "csgk/elements.hpp"

#include <array>
#include <charconv>

namespace csgk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_character: return "INVALID_CHARACTER";
    case ErrorCode::empty_word: return "EMPTY_WORD";
    case ErrorCode::shape_violation: return "SHAPE_VIOLATION";
    case ErrorCode::zero_exponent: return "ZERO_EXPONENT";
    case ErrorCode::integer_overflow: return "INTEGER_OVERFLOW";
    case ErrorCode::length_limit: return "LENGTH_LIMIT";
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::io_error: return "IO_ERROR";
    case ErrorCode::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

void throw_overflow(const char* op) {
  throw Error(ErrorCode::integer_overflow, std::string(op) + " wrapped");
}

Exp checked_pow(Exp base, Exp exponent) {
  Exp r = 1;
  for (Exp i = 0; i < exponent; ++i) {
    r = checked_mul(r, base);
  }
  return r;
}

bool is_valid(const CanonC& x) {
  return x.b_exp > 0 || x.ab_exp > 0 || x.a_exp > 0;
}

CanonC make_canon(Exp b_exp, Exp ab_exp, Exp a_exp) {
  CanonC x{b_exp, ab_exp, a_exp};
  if (!is_valid(x)) {
    throw Error(ErrorCode::invalid_argument,
                "0,0,0 does not denote an element");
  }
  return x;
}

namespace {

Exp parse_exp_field(std::string_view text) {
  Exp value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::parse_error,
                "expected a nonnegative integer, got '" + std::string(text) +
                    "'");
  }
  return value;
}

template <std::size_t N>
std::array<Exp, N> parse_csv(std::string_view text) {
  std::array<Exp, N> out{};
  std::size_t field = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      if (field >= N) {
        throw Error(ErrorCode::parse_error,
                    "too many fields in '" + std::string(text) + "'");
      }
      out[field++] = parse_exp_field(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (field != N) {
    throw Error(ErrorCode::parse_error,
                "expected " + std::to_string(N) + " fields in '" +
                    std::string(text) + "'");
  }
  return out;
}

}  // namespace

std::string to_string(const CanonC& x) {
  return std::to_string(x.b_exp) + "," + std::to_string(x.ab_exp) + "," +
         std::to_string(x.a_exp);
}

CanonC parse_canon(std::string_view text) {
  auto f = parse_csv<3>(text);
  return make_canon(f[0], f[1], f[2]);
}

std::string to_string(const BicyclicNF& x) {
  return std::to_string(x.b_exp) + "," + std::to_string(x.a_exp);
}

BicyclicNF parse_bicyclic(std::string_view text) {
  auto f = parse_csv<2>(text);
  return BicyclicNF{f[0], f[1]};
}

std::size_t Region::size() const {
  return static_cast<std::size_t>(
      checked_mul(checked_mul(b_cap + 1, ab_cap + 1), a_cap + 1) - 1);
}

bool Region::contains(const CanonC& x) const {
  return x.b_exp <= b_cap && x.ab_exp <= ab_cap && x.a_exp <= a_cap;
}

std::vector<CanonC> Region::elements() const {
  std::vector<CanonC> out;
  out.reserve(size());
  for (Exp k = 0; k <= b_cap; ++k) {
    for (Exp l = 0; l <= ab_cap; ++l) {
      for (Exp m = 0; m <= a_cap; ++m) {
        if (k + l + m == 0) continue;
        out.push_back(CanonC{k, l, m});
      }
    }
  }
  return out;
}

std::string to_string(const Region& r) {
  return std::to_string(r.b_cap) + "," + std::to_string(r.ab_cap) + "," +
         std::to_string(r.a_cap);
}

Region parse_region(std::string_view text) {
  auto f = parse_csv<3>(text);
  return Region{f[0], f[1], f[2]};
}

}  // namespace csgk
