#include "csgk/topology.hpp"

#include <algorithm>

namespace csgk {

bool is_prime(Exp n) {
  if (n < 2) return false;
  for (Exp d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Exp p_adic_valuation(Exp p, Exp n) {
  if (p < 2 || n == 0) {
    throw Error(ErrorCode::invalid_argument,
                "valuation needs p >= 2 and n > 0");
  }
  Exp s = 0;
  while (n % p == 0) {
    n /= p;
    ++s;
  }
  return s;
}

void validate(const TauPParams& params) {
  if (!is_prime(params.prime)) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(params.prime) + " is not prime");
  }
  if (params.alpha == 0 || params.lambda_max == 0) {
    throw Error(ErrorCode::invalid_argument,
                "alpha and lambda_max must be positive");
  }
}

bool metric_less_equal(const MetricValue& x, const MetricValue& y) {
  if (x.is_zero()) return true;
  if (y.is_zero()) return false;
  return x.s >= y.s;
}

bool triangle_holds(const MetricValue& d_xz, const MetricValue& d_xy,
                    const MetricValue& d_yz) {
  if (d_xz.is_zero()) return true;
  if (d_xy.is_zero()) return metric_less_equal(d_xz, d_yz);
  if (d_yz.is_zero()) return metric_less_equal(d_xz, d_xy);
  if (d_xy.s <= d_xz.s || d_yz.s <= d_xz.s) return true;
  // Both summands are strictly below 2^(-s); the sum reaches it only as
  // 2^(-s-1) + 2^(-s-1).
  return d_xy.s == d_xz.s + 1 && d_yz.s == d_xz.s + 1;
}

std::string to_string(const MetricValue& v) {
  if (v.is_zero()) return "0";
  if (v.s == 0) return "1";
  return "2^-" + std::to_string(v.s);
}

static const char* kLambdaNote =
    "convention: the basic-set index lambda ranges over 0..lambda_max, so "
    "every basic set contains its center";
static const char* kMetricNote =
    "convention: metric values are 2^(-s) with s the p-adic valuation of "
    "the ab-exponent difference";

std::vector<CanonC> nbhd_tau_p(const CanonC& x, const TauPParams& params) {
  validate(params);
  const Exp stride = checked_pow(params.prime, params.alpha);
  std::vector<CanonC> out;
  out.reserve(params.lambda_max + 1);
  for (Exp lambda = 0; lambda <= params.lambda_max; ++lambda) {
    out.push_back(CanonC{x.b_exp,
                         checked_add(x.ab_exp, checked_mul(lambda, stride)),
                         x.a_exp});
  }
  return out;
}

MetricValue metric_tau_p(const CanonC& x, const CanonC& y, Exp prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(prime) + " is not prime");
  }
  if (x == y) return MetricValue::zero();
  if (x.b_exp == y.b_exp && x.a_exp == y.a_exp) {
    const Exp gap =
        x.ab_exp > y.ab_exp ? x.ab_exp - y.ab_exp : y.ab_exp - x.ab_exp;
    return MetricValue::dyadic(p_adic_valuation(prime, gap));
  }
  return MetricValue::dyadic(0);  // value 1
}

bool in_tau_p_nbhd(const CanonC& candidate, const CanonC& center, Exp prime,
                   Exp alpha) {
  if (candidate.b_exp != center.b_exp || candidate.a_exp != center.a_exp ||
      candidate.ab_exp < center.ab_exp) {
    return false;
  }
  return (candidate.ab_exp - center.ab_exp) %
             checked_pow(prime, alpha) ==
         0;
}

Report check_tau_p_product(const CanonC& x, const CanonC& y,
                           const TauPParams& params) {
  validate(params);
  Report report;
  report.check = "tau-p-product";
  report.params = {{"x", to_string(x)},
                   {"y", to_string(y)},
                   {"p", params.prime},
                   {"alpha", params.alpha},
                   {"lambda_max", params.lambda_max}};
  report.convention_notes.push_back(kLambdaNote);

  const char* condition = nullptr;
  if (x.a_exp < y.b_exp) {
    condition = "i";
  } else if (x.a_exp == y.b_exp) {
    condition = x.a_exp != 0 ? "ii" : "iii";
  } else {
    condition = "iv";
  }
  const CanonC target = mul_c(x, y);
  report.details["condition"] = condition;
  report.details["target"] = to_string(target);

  const Exp stride = checked_pow(params.prime, params.alpha);
  CanonC u = x;
  for (Exp l1 = 0; l1 <= params.lambda_max; ++l1) {
    CanonC v = y;
    for (Exp l2 = 0; l2 <= params.lambda_max; ++l2) {
      const CanonC product = mul_c(u, v);
      ++report.items_tested;
      const bool inside =
          product.b_exp == target.b_exp && product.a_exp == target.a_exp &&
          product.ab_exp >= target.ab_exp &&
          (product.ab_exp - target.ab_exp) % stride == 0;
      if (!inside) {
        report.add_failure({{"u", to_string(u)},
                            {"v", to_string(v)},
                            {"product", to_string(product)},
                            {"target", to_string(target)}});
      }
      v.ab_exp = checked_add(v.ab_exp, stride);
    }
    u.ab_exp = checked_add(u.ab_exp, stride);
  }
  return report;
}

namespace {

std::vector<CanonC> metric_sample(const CanonC& x, const TauPParams& params) {
  std::vector<CanonC> sample = nbhd_tau_p(x, params);
  auto push = [&sample](CanonC y) {
    if (is_valid(y)) sample.push_back(y);
  };
  push(CanonC{checked_add(x.b_exp, 1), x.ab_exp, x.a_exp});
  if (x.b_exp > 0) push(CanonC{x.b_exp - 1, x.ab_exp, x.a_exp});
  push(CanonC{x.b_exp, x.ab_exp, checked_add(x.a_exp, 1)});
  if (x.a_exp > 0) push(CanonC{x.b_exp, x.ab_exp, x.a_exp - 1});
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  return sample;
}

}  // namespace

Report check_tau_p_metric_base(const CanonC& x, const TauPParams& params) {
  validate(params);
  Report report;
  report.check = "tau-p-metric-base";
  report.params = {{"x", to_string(x)},
                   {"p", params.prime},
                   {"alpha", params.alpha},
                   {"lambda_max", params.lambda_max}};
  report.convention_notes.push_back(kLambdaNote);
  report.convention_notes.push_back(kMetricNote);

  const auto nbhd = nbhd_tau_p(x, params);
  const MetricValue radius = MetricValue::dyadic(params.alpha);
  for (const CanonC& y : nbhd) {
    ++report.items_tested;
    if (!metric_less_equal(metric_tau_p(x, y, params.prime), radius)) {
      report.add_failure({{"axiom", "base_radius"},
                          {"y", to_string(y)},
                          {"d", to_string(metric_tau_p(x, y, params.prime))}});
    }
  }
  ++report.items_tested;
  if (nbhd.size() < 2) {
    report.add_failure({{"axiom", "no_isolated_points"},
                        {"size", nbhd.size()}});
  }

  const auto sample = metric_sample(x, params);
  report.details["sample_size"] = sample.size();
  for (const CanonC& s : sample) {
    for (const CanonC& t : sample) {
      const MetricValue d_st = metric_tau_p(s, t, params.prime);
      ++report.items_tested;
      if (d_st.is_zero() != (s == t)) {
        report.add_failure({{"axiom", "identity"},
                            {"s", to_string(s)},
                            {"t", to_string(t)}});
      }
      ++report.items_tested;
      if (d_st != metric_tau_p(t, s, params.prime)) {
        report.add_failure({{"axiom", "symmetry"},
                            {"s", to_string(s)},
                            {"t", to_string(t)}});
      }
      for (const CanonC& w : sample) {
        const MetricValue d_sw = metric_tau_p(s, w, params.prime);
        const MetricValue d_tw = metric_tau_p(t, w, params.prime);
        ++report.items_tested;
        if (!triangle_holds(d_sw, d_st, d_tw)) {
          report.add_failure({{"axiom", "triangle"},
                              {"s", to_string(s)},
                              {"t", to_string(t)},
                              {"w", to_string(w)}});
        }
        const bool common_slice = s.b_exp == t.b_exp &&
                                  t.b_exp == w.b_exp &&
                                  s.a_exp == t.a_exp && t.a_exp == w.a_exp;
        if (common_slice) {
          ++report.items_tested;
          const MetricValue bound = metric_less_equal(d_st, d_tw) ? d_tw : d_st;
          if (!metric_less_equal(d_sw, bound)) {
            report.add_failure({{"axiom", "ultrametric"},
                                {"s", to_string(s)},
                                {"t", to_string(t)},
                                {"w", to_string(w)}});
          }
        }
      }
    }
  }
  return report;
}

std::vector<ExtElem> nbhd_ext(const ExtElem& x, Exp n, Exp kcap) {
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "n must be positive");
  }
  if (x.is_c()) return {x};  // C-elements are isolated
  std::vector<ExtElem> out{x};
  const BicyclicNF& center = x.b();
  for (Exp k = n; k <= kcap; ++k) {
    out.push_back(ext_c(CanonC{center.b_exp, k, center.a_exp}));
  }
  return out;
}

bool in_ext_nbhd(const ExtElem& candidate, const BicyclicNF& center, Exp n) {
  if (candidate.is_b()) return candidate.b() == center;
  const CanonC& c = candidate.c();
  return c.b_exp == center.b_exp && c.a_exp == center.a_exp && c.ab_exp >= n;
}

namespace {

const char* subcase_name(Exp lhs, Exp rhs) {
  return lhs < rhs ? "a" : (lhs == rhs ? "b" : "c");
}

void check_product_set(Report& report, const std::vector<ExtElem>& left,
                       const std::vector<ExtElem>& right,
                       const ExtElem& target, Exp u) {
  // A C-part target means the product set must be exactly that singleton;
  // a B-part target means containment in its basic set.
  for (const ExtElem& s : left) {
    for (const ExtElem& t : right) {
      const ExtElem product = star_mul(s, t);
      ++report.items_tested;
      const bool inside = target.is_c()
                              ? product == target
                              : in_ext_nbhd(product, target.b(), u);
      if (!inside) {
        report.add_failure({{"left", to_string(s)},
                            {"right", to_string(t)},
                            {"product", to_string(product)},
                            {"target", to_string(target)}});
      }
    }
  }
}

}  // namespace

Report check_ext_continuity(const ExtContinuityCase& c, Exp u, Exp kcap) {
  if (u == 0) {
    throw Error(ErrorCode::invalid_argument, "u must be positive");
  }
  Report report;
  report.check = "ext-continuity";
  report.params = {{"u", u}, {"kcap", kcap}};

  if (const auto* c1 = std::get_if<ExtCase1>(&c)) {
    const ExtElem x = ext_b(BicyclicNF{c1->i, c1->k});
    const ExtElem y = ext_b(BicyclicNF{c1->m, c1->p});
    const ExtElem target = star_mul(x, y);
    report.params["case"] = 1;
    report.params["x"] = to_string(x);
    report.params["y"] = to_string(y);
    report.details["subcase"] = subcase_name(c1->k, c1->m);
    report.details["target"] = to_string(target);
    check_product_set(report, nbhd_ext(x, u, kcap), nbhd_ext(y, u, kcap),
                      target, u);
  } else if (const auto* c2 = std::get_if<ExtCase2>(&c)) {
    const ExtElem x = ext_b(BicyclicNF{c2->i, c2->k});
    const ExtElem y = ext_c(c2->y);
    const ExtElem target = star_mul(x, y);
    report.params["case"] = 2;
    report.params["x"] = to_string(x);
    report.params["y"] = to_string(y);
    report.details["subcase"] = subcase_name(c2->k, c2->y.b_exp);
    report.details["target"] = to_string(target);
    check_product_set(report, nbhd_ext(x, u, kcap), {y}, target, u);
  } else {
    const auto& c3 = std::get<ExtCase3>(c);
    const ExtElem x = ext_c(c3.x);
    const ExtElem y = ext_b(BicyclicNF{c3.m, c3.p});
    const ExtElem target = star_mul(x, y);
    report.params["case"] = 3;
    report.params["x"] = to_string(x);
    report.params["y"] = to_string(y);
    report.details["subcase"] = subcase_name(c3.x.a_exp, c3.m);
    report.details["target"] = to_string(target);
    check_product_set(report, {x}, nbhd_ext(y, u, kcap), target, u);
  }
  return report;
}

std::vector<ExtZeroElem> nbhd_zero(Exp n, const Region& r) {
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "n must be positive");
  }
  std::vector<ExtZeroElem> out{ext_zero()};
  for (const CanonC& x : r.elements()) {
    if (x.b_exp >= n && x.a_exp >= n) out.push_back(ext_zero_c(x));
  }
  return out;
}

bool in_zero_nbhd(const ExtZeroElem& candidate, Exp n) {
  if (candidate.is_zero()) return true;
  return candidate.value->b_exp >= n && candidate.value->a_exp >= n;
}

Report check_zero_continuity(const std::optional<CanonC>& x, Exp i,
                             const Region& r) {
  if (i == 0) {
    throw Error(ErrorCode::invalid_argument, "i must be positive");
  }
  Report report;
  report.check = "zero-continuity";
  report.params = {{"i", i}, {"region", to_string(r)}};
  if (x) report.params["x"] = to_string(*x);

  std::vector<std::string> conditions;
  const auto base = nbhd_zero(i, r);
  conditions.push_back("i");
  for (const ExtZeroElem& u : base) {
    for (const ExtZeroElem& v : base) {
      ++report.items_tested;
      if (!in_zero_nbhd(zero_mul(u, v), i)) {
        report.add_failure({{"condition", "i"},
                            {"u", to_string(u)},
                            {"v", to_string(v)}});
      }
    }
  }
  if (x) {
    const ExtZeroElem elem = ext_zero_c(*x);
    conditions.push_back("ii");
    for (const ExtZeroElem& u : nbhd_zero(checked_add(i, x->b_exp), r)) {
      ++report.items_tested;
      if (!in_zero_nbhd(zero_mul(u, elem), i)) {
        report.add_failure({{"condition", "ii"}, {"u", to_string(u)}});
      }
    }
    conditions.push_back("iii");
    for (const ExtZeroElem& u : nbhd_zero(checked_add(i, x->a_exp), r)) {
      ++report.items_tested;
      if (!in_zero_nbhd(zero_mul(elem, u), i)) {
        report.add_failure({{"condition", "iii"}, {"u", to_string(u)}});
      }
    }
  }
  report.details["conditions"] = conditions;
  return report;
}

Report check_fix_inclusions(Exp n, const Region& r) {
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "n must be positive");
  }
  Report report;
  report.check = "fix-inclusions";
  report.params = {{"n", n}, {"region", to_string(r)}};

  const CanonC ab{0, 1, 0};
  const CanonC balanced{n, 0, n};
  struct Family {
    const char* name;
    Side side;
    CanonC c;
    Exp threshold;
    bool on_a_exp;
  };
  const Family families[] = {
      {"right_ab", Side::right, ab, 1, true},
      {"left_ab", Side::left, ab, 1, false},
      {"right_bnan", Side::right, balanced, checked_add(n, 1), true},
      {"left_bnan", Side::left, balanced, checked_add(n, 1), false},
  };
  for (const auto& family : families) {
    for (const CanonC& x : r.elements()) {
      const Exp exp = family.on_a_exp ? x.a_exp : x.b_exp;
      if (exp < family.threshold) continue;
      ++report.items_tested;
      if (!is_fixed(family.side, family.c, x)) {
        report.add_failure({{"family", family.name}, {"x", to_string(x)}});
      }
    }
  }
  report.details["families"] = 4;
  return report;
}

Report check_translation_retract(Exp k, Exp l, const Region& r) {
  if (k == 0) {
    throw Error(ErrorCode::invalid_argument, "k must be positive");
  }
  Report report;
  report.check = "translation-retract";
  report.params = {{"k", k}, {"l", l}, {"region", to_string(r)}};
  const CanonC c{k, l, k};
  report.params["c"] = to_string(c);

  std::vector<std::string> lambda_exceptions;
  std::vector<std::string> rho_exceptions;
  std::uint64_t lambda_exception_count = 0;
  std::uint64_t rho_exception_count = 0;
  std::uint64_t lambda_at_boundary = 0;
  std::uint64_t rho_at_boundary = 0;

  for (const CanonC& x : r.elements()) {
    const CanonC lx = mul_c(c, x);
    ++report.items_tested;
    if (lx.b_exp < k) {
      report.add_failure(
          {{"assert", "image_left"}, {"x", to_string(x)}, {"image", to_string(lx)}});
    }
    if (x.b_exp >= k + 1) {
      ++report.items_tested;
      if (lx != x) {
        report.add_failure({{"assert", "fix_left"}, {"x", to_string(x)}});
      }
    }
    if (mul_c(c, lx) != lx) {
      ++lambda_exception_count;
      if (lambda_exceptions.size() < Report::failure_cap) {
        lambda_exceptions.push_back(to_string(x));
      }
      if (x.b_exp == k) ++lambda_at_boundary;
    }

    const CanonC rx = mul_c(x, c);
    ++report.items_tested;
    if (rx.a_exp < k) {
      report.add_failure(
          {{"assert", "image_right"}, {"x", to_string(x)}, {"image", to_string(rx)}});
    }
    if (x.a_exp >= k + 1) {
      ++report.items_tested;
      if (rx != x) {
        report.add_failure({{"assert", "fix_right"}, {"x", to_string(x)}});
      }
    }
    if (mul_c(rx, c) != rx) {
      ++rho_exception_count;
      if (rho_exceptions.size() < Report::failure_cap) {
        rho_exceptions.push_back(to_string(x));
      }
      if (x.a_exp == k) ++rho_at_boundary;
    }
  }
  // The pointwise-idempotence exceptions are recorded, not asserted.
  report.details["lambda_idempotence_exceptions"] = lambda_exceptions;
  report.details["rho_idempotence_exceptions"] = rho_exceptions;
  report.details["lambda_exception_count"] = lambda_exception_count;
  report.details["rho_exception_count"] = rho_exception_count;
  report.details["lambda_exceptions_at_boundary"] = lambda_at_boundary;
  report.details["rho_exceptions_at_boundary"] = rho_at_boundary;
  return report;
}

}  // namespace csgk
