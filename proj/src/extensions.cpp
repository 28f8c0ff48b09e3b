#include "csgk/extensions.hpp"

#include <array>

namespace csgk {

ExtElem ext_c(const CanonC& x) { return ExtElem{x}; }
ExtElem ext_b(const BicyclicNF& x) { return ExtElem{x}; }

std::string to_string(const ExtElem& x) {
  return x.is_c() ? "C:" + to_string(x.c()) : "B:" + to_string(x.b());
}

ExtElem parse_ext(std::string_view text) {
  if (text.rfind("C:", 0) == 0) return ext_c(parse_canon(text.substr(2)));
  if (text.rfind("B:", 0) == 0) return ext_b(parse_bicyclic(text.substr(2)));
  throw Error(ErrorCode::parse_error,
              "expected 'C:k,l,m' or 'B:i,j', got '" + std::string(text) +
                  "'");
}

ExtZeroElem ext_zero() { return ExtZeroElem{std::nullopt}; }
ExtZeroElem ext_zero_c(const CanonC& x) { return ExtZeroElem{x}; }

std::string to_string(const ExtZeroElem& x) {
  return x.is_zero() ? "0" : "C:" + to_string(*x.value);
}

ExtZeroElem parse_ext_zero(std::string_view text) {
  if (text == "0") return ext_zero();
  if (text.rfind("C:", 0) == 0) return ext_zero_c(parse_canon(text.substr(2)));
  throw Error(ErrorCode::parse_error,
              "expected 'C:k,l,m' or '0', got '" + std::string(text) + "'");
}

ExtElem star_mul(const ExtElem& x, const ExtElem& y) {
  if (x.is_c() && y.is_c()) return ext_c(mul_c(x.c(), y.c()));
  if (x.is_b() && y.is_b()) return ext_b(mul_b(x.b(), y.b()));
  if (x.is_c()) {
    // b^k (ab)^l a^m ★ <n,q>
    const CanonC& c = x.c();
    const BicyclicNF& d = y.b();
    const Exp m = c.a_exp;
    const Exp n = d.b_exp;
    if (m < n) {
      return ext_b(BicyclicNF{checked_add(c.b_exp, n - m), d.a_exp});
    }
    if (m == n) return ext_b(BicyclicNF{c.b_exp, d.a_exp});
    return ext_c(CanonC{c.b_exp, c.ab_exp, checked_add(d.a_exp, m - n)});
  }
  // <k,m> ★ b^n (ab)^p a^q
  const BicyclicNF& d = x.b();
  const CanonC& c = y.c();
  const Exp m = d.a_exp;
  const Exp n = c.b_exp;
  if (m < n) {
    return ext_c(CanonC{checked_add(d.b_exp, n - m), c.ab_exp, c.a_exp});
  }
  if (m == n) return ext_b(BicyclicNF{d.b_exp, c.a_exp});
  return ext_b(BicyclicNF{d.b_exp, checked_add(c.a_exp, m - n)});
}

ExtZeroElem zero_mul(const ExtZeroElem& x, const ExtZeroElem& y) {
  if (x.is_zero() || y.is_zero()) return ext_zero();
  return ext_zero_c(mul_c(*x.value, *y.value));
}

namespace {

// Which branch of the two mixed case tables a product exercises, judged
// from the operands alone (independent of the operation under test).
enum MixedBranch {
  cb_less,
  cb_equal,
  cb_greater,
  bc_less,
  bc_equal,
  bc_greater,
  mixed_branch_count,
};

std::optional<MixedBranch> mixed_branch(const ExtElem& x, const ExtElem& y) {
  if (x.is_c() && y.is_b()) {
    const Exp m = x.c().a_exp;
    const Exp n = y.b().b_exp;
    return m < n ? cb_less : (m == n ? cb_equal : cb_greater);
  }
  if (x.is_b() && y.is_c()) {
    const Exp m = x.b().a_exp;
    const Exp n = y.c().b_exp;
    return m < n ? bc_less : (m == n ? bc_equal : bc_greater);
  }
  return std::nullopt;
}

const char* mixed_branch_name(MixedBranch b) {
  switch (b) {
    case cb_less: return "c_star_b:m<n";
    case cb_equal: return "c_star_b:m=n";
    case cb_greater: return "c_star_b:m>n";
    case bc_less: return "b_star_c:m<n";
    case bc_equal: return "b_star_c:m=n";
    case bc_greater: return "b_star_c:m>n";
    default: return "?";
  }
}

std::vector<ExtElem> star_carrier(const Region& r, Exp bicyclic_cap) {
  std::vector<ExtElem> carrier;
  for (const CanonC& x : r.elements()) carrier.push_back(ext_c(x));
  for (Exp i = 0; i <= bicyclic_cap; ++i) {
    for (Exp j = 0; j <= bicyclic_cap; ++j) {
      carrier.push_back(ext_b(BicyclicNF{i, j}));
    }
  }
  return carrier;
}

}  // namespace

Report check_star_associativity(const Region& r, Exp bicyclic_cap,
                                const StarFn& op) {
  const StarFn& star = op ? op : StarFn(star_mul);
  Report report;
  report.check = "star-associativity";
  report.params = {{"region", to_string(r)},
                   {"bicyclic_cap", bicyclic_cap}};
  report.convention_notes.push_back(
      "bicyclic identity B:0,0 is included in the enumeration");

  const auto carrier = star_carrier(r, bicyclic_cap);
  std::array<std::uint64_t, 8> tag_hits{};
  std::array<std::uint64_t, mixed_branch_count> branch_hits{};
  auto mark = [&branch_hits](const ExtElem& x, const ExtElem& y) {
    if (auto b = mixed_branch(x, y)) ++branch_hits[*b];
  };

  for (const ExtElem& x : carrier) {
    for (const ExtElem& y : carrier) {
      const ExtElem xy = star(x, y);
      mark(x, y);
      for (const ExtElem& z : carrier) {
        const ExtElem yz = star(y, z);
        const ExtElem left = star(xy, z);
        const ExtElem right = star(x, yz);
        mark(y, z);
        mark(xy, z);
        mark(x, yz);
        ++report.items_tested;
        const std::size_t tag = (x.is_b() ? 4u : 0u) | (y.is_b() ? 2u : 0u) |
                                (z.is_b() ? 1u : 0u);
        ++tag_hits[tag];
        if (left != right) {
          report.add_failure({{"x", to_string(x)},
                              {"y", to_string(y)},
                              {"z", to_string(z)},
                              {"left", to_string(left)},
                              {"right", to_string(right)}});
        }
      }
    }
  }

  nlohmann::json coverage;
  std::uint64_t tags_covered = 0;
  for (std::size_t tag = 0; tag < tag_hits.size(); ++tag) {
    std::string name;
    name += (tag & 4) ? 'B' : 'C';
    name += (tag & 2) ? 'B' : 'C';
    name += (tag & 1) ? 'B' : 'C';
    coverage["tags"][name] = tag_hits[tag];
    if (tag_hits[tag] > 0) ++tags_covered;
  }
  std::uint64_t branches_covered = 0;
  for (std::size_t b = 0; b < branch_hits.size(); ++b) {
    coverage["branches"][mixed_branch_name(static_cast<MixedBranch>(b))] =
        branch_hits[b];
    if (branch_hits[b] > 0) ++branches_covered;
  }
  const bool full = tags_covered == 8 && branches_covered == 6;
  report.details["coverage"] = coverage;
  report.details["full_branch_coverage"] = full;
  if (!full) {
    report.details["coverage_warning"] =
        "some tag combination or mixed-case branch was not exercised";
  }
  return report;
}

Report check_pi_homomorphism(const Region& r, const HomFn& hom_arg) {
  const HomFn& hom = hom_arg ? hom_arg : HomFn(hom_h);
  Report report;
  report.check = "pi-homomorphism";
  report.params = {{"region", to_string(r)}};

  const auto elements = r.elements();
  for (const CanonC& x : elements) {
    for (const CanonC& y : elements) {
      const CanonC xy = mul_c(x, y);
      ++report.items_tested;
      if (hom(xy) != mul_b(hom(x), hom(y))) {
        report.add_failure({{"kind", "product"},
                            {"x", to_string(x)},
                            {"y", to_string(y)},
                            {"hom_of_product", to_string(hom(xy))},
                            {"product_of_homs",
                             to_string(mul_b(hom(x), hom(y)))}});
        continue;
      }
      // Mixed compatibility: whenever the ★-product with a projected
      // factor lands in the B-part it must agree with hom of the
      // C-product.
      const ExtElem right_proj = star_mul(ext_c(x), ext_b(hom(y)));
      if (right_proj.is_b() && right_proj.b() != hom(xy)) {
        report.add_failure({{"kind", "mixed_right"},
                            {"x", to_string(x)},
                            {"y", to_string(y)},
                            {"star", to_string(right_proj)},
                            {"hom_of_product", to_string(hom(xy))}});
        continue;
      }
      const ExtElem left_proj = star_mul(ext_b(hom(x)), ext_c(y));
      if (left_proj.is_b() && left_proj.b() != hom(xy)) {
        report.add_failure({{"kind", "mixed_left"},
                            {"x", to_string(x)},
                            {"y", to_string(y)},
                            {"star", to_string(left_proj)},
                            {"hom_of_product", to_string(hom(xy))}});
      }
    }
  }
  return report;
}

}  // namespace csgk
