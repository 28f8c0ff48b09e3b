#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "csgk/algebra.hpp"

using namespace csgk;

namespace {
const CanonC a{0, 0, 1};
const CanonC b{1, 0, 0};
const CanonC ab{0, 1, 0};
}  // namespace

TEST_CASE("mul_c pinned cases, one per branch") {
  CHECK(mul_c(CanonC{1, 2, 3}, CanonC{2, 1, 1}) == CanonC{1, 2, 2});  // m>n
  CHECK(mul_c(ab, ab) == CanonC{0, 2, 0});                            // m=n=0
  CHECK(mul_c(CanonC{2, 0, 1}, CanonC{1, 3, 0}) == CanonC{2, 4, 0});  // m=n!=0
  CHECK(mul_c(CanonC{1, 1, 0}, CanonC{2, 1, 1}) == CanonC{3, 1, 1});  // m<n
}

TEST_CASE("mul_c agrees with the word oracle on region 2,2,2") {
  const auto elements = Region{2, 2, 2}.elements();
  for (const CanonC& x : elements) {
    for (const CanonC& y : elements) {
      REQUIRE(mul_c(x, y) == oracle_mul_c(x, y));
    }
  }
}

TEST_CASE("mul_c matches the oracle on random elements past the caps") {
  std::mt19937_64 rng(7151);
  std::uniform_int_distribution<std::size_t> len_dist(1, 30);
  std::uniform_int_distribution<int> bit(0, 1);
  auto random_element = [&] {
    std::vector<Generator> letters(len_dist(rng));
    for (auto& g : letters) g = bit(rng) ? Generator::b : Generator::a;
    return to_normal_c(FreeWord(std::move(letters)));
  };
  for (int i = 0; i < 3000; ++i) {
    const CanonC x = random_element();
    const CanonC y = random_element();
    REQUIRE(mul_c(x, y) == oracle_mul_c(x, y));
  }
}

TEST_CASE("mul_c is associative on region 2,2,2") {
  const auto elements = Region{2, 2, 2}.elements();
  for (const CanonC& x : elements) {
    for (const CanonC& y : elements) {
      const CanonC xy = mul_c(x, y);
      for (const CanonC& z : elements) {
        REQUIRE(mul_c(xy, z) == mul_c(x, mul_c(y, z)));
      }
    }
  }
}

TEST_CASE("mul_b") {
  CHECK(mul_b(BicyclicNF{0, 1}, BicyclicNF{1, 0}) == BicyclicNF{0, 0});
  CHECK(mul_b(BicyclicNF{1, 2}, BicyclicNF{3, 4}) == BicyclicNF{2, 4});
  CHECK(mul_b(BicyclicNF{0, 0}, BicyclicNF{5, 7}) == BicyclicNF{5, 7});
  // Concatenation route agrees.
  for (Exp i = 0; i <= 3; ++i) {
    for (Exp j = 0; j <= 3; ++j) {
      for (Exp n = 0; n <= 3; ++n) {
        for (Exp q = 0; q <= 3; ++q) {
          const BicyclicNF x{i, j};
          const BicyclicNF y{n, q};
          REQUIRE(mul_b(x, y) ==
                  to_normal_b(from_normal_b(x).concat(from_normal_b(y))));
        }
      }
    }
  }
}

TEST_CASE("pow_c") {
  CHECK(pow_c(ab, 3) == CanonC{0, 3, 0});
  CHECK(pow_c(CanonC{1, 0, 1}, 2) == CanonC{1, 1, 1});
  CHECK(pow_c(a, 1) == a);
  CHECK(pow_c(a, 7) == CanonC{0, 0, 7});
  CHECK(pow_c(b, 7) == CanonC{7, 0, 0});
  CHECK_THROWS_AS(pow_c(a, 0), Error);
}

TEST_CASE("cyclic subsemigroups stay distinct up to n = 50") {
  std::set<CanonC> seen;
  for (Exp n = 1; n <= 50; ++n) {
    CHECK(seen.insert(pow_c(ab, n)).second);
    CHECK(seen.insert(pow_c(a, n)).second);
    CHECK(seen.insert(pow_c(b, n)).second);
  }
}

TEST_CASE("hom_h") {
  CHECK(hom_h(CanonC{2, 3, 1}) == BicyclicNF{2, 1});
  CHECK(hom_h(CanonC{0, 5, 0}) == BicyclicNF{0, 0});
  CHECK(hom_h(mul_c(a, b)) == mul_b(hom_h(a), hom_h(b)));
  for (const CanonC& x : Region{2, 2, 2}.elements()) {
    for (const CanonC& y : Region{2, 2, 2}.elements()) {
      REQUIRE(hom_h(mul_c(x, y)) == mul_b(hom_h(x), hom_h(y)));
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(1, 1, ab) == CanonC{1, 1, 1});
  CHECK(phi(0, 0, CanonC{3, 2, 1}) == CanonC{3, 2, 1});
  CHECK(phi(2, 0, a) == CanonC{2, 0, 1});
}

TEST_CASE("phi is injective on region 2,2,2 for shifts up to 2") {
  const auto elements = Region{2, 2, 2}.elements();
  for (Exp i = 0; i <= 2; ++i) {
    for (Exp j = 0; j <= 2; ++j) {
      std::set<CanonC> images;
      for (const CanonC& x : elements) {
        REQUIRE(images.insert(phi(i, j, x)).second);
      }
    }
  }
}

TEST_CASE("specialized formulas agree with mul_c on small grids") {
  const auto elements = Region{3, 3, 3}.elements();
  for (Exp m = 0; m <= 3; ++m) {
    for (Exp l = 0; l <= 3; ++l) {
      if (m + l == 0) continue;
      for (const CanonC& y : elements) {
        REQUIRE(mul_balanced_left(m, l, y) == mul_c(CanonC{m, l, m}, y));
        REQUIRE(mul_balanced_right(y, m, l) == mul_c(y, CanonC{m, l, m}));
      }
    }
  }
  for (const CanonC& x : elements) {
    REQUIRE(conj_ab(x) == mul_c(mul_c(a, x), b));
    REQUIRE(mul_right_b(x) == mul_c(x, b));
    REQUIRE(mul_left_a(x) == mul_c(a, x));
  }
}

TEST_CASE("x*b has the three-case form") {
  CHECK(mul_right_b(CanonC{2, 3, 0}) == CanonC{3, 0, 0});  // drops (ab)^l
  CHECK(mul_right_b(CanonC{2, 3, 1}) == CanonC{2, 4, 0});
  CHECK(mul_right_b(CanonC{2, 3, 2}) == CanonC{2, 3, 1});
}

TEST_CASE("equation shapes parse and print") {
  CHECK(to_string(parse_shape("axb")) == "axb");
  CHECK(to_string(parse_shape("xb")) == "xb");
  CHECK(to_string(parse_shape("ax")) == "ax");
  CHECK(to_string(parse_shape("lx:1,0,1")) == "lx:1,0,1");
  CHECK(to_string(parse_shape("xr:0,2,0")) == "xr:0,2,0");
  CHECK_THROWS_AS(parse_shape("xa"), Error);
  CHECK_THROWS_AS(parse_shape("lx:0,0,0"), Error);
}

TEST_CASE("solve_equation pinned cases") {
  const Region r{3, 3, 3};
  CHECK(solve_equation(parse_shape("axb"), ab, r) ==
        std::vector<CanonC>{CanonC{0, 1, 0}, CanonC{0, 2, 0}, CanonC{0, 3, 0}});
  CHECK(solve_equation(parse_shape("axb"), CanonC{0, 2, 0}, r) ==
        std::vector<CanonC>{CanonC{1, 0, 1}});
  CHECK(solve_equation(parse_shape("xb"), CanonC{0, 2, 0}, r) ==
        std::vector<CanonC>{CanonC{0, 1, 1}});
}

TEST_CASE("solve_equation with general coefficients") {
  const Region r{3, 3, 3};
  // lx:c is c*X = rhs; with c = a it must match the ax shape.
  const EquationShape lx_a{EquationShape::Kind::lx, a};
  const EquationShape xr_b{EquationShape::Kind::xr, b};
  for (const CanonC& rhs : r.elements()) {
    REQUIRE(solve_equation(lx_a, rhs, r) ==
            solve_equation(parse_shape("ax"), rhs, r));
    REQUIRE(solve_equation(xr_b, rhs, r) ==
            solve_equation(parse_shape("xb"), rhs, r));
  }
  // Every solution the solver returns satisfies its equation.
  const auto sols = solve_equation(parse_shape("lx:1,0,1"), CanonC{1, 1, 1}, r);
  CHECK(!sols.empty());
  for (const CanonC& x : sols) {
    CHECK(mul_c(CanonC{1, 0, 1}, x) == CanonC{1, 1, 1});
  }
  // X*b = a is solved by a^2 (the defining relation).
  CHECK(solve_equation(parse_shape("xb"), a, r) ==
        std::vector<CanonC>{CanonC{0, 0, 2}});
  // The empty set is a legal answer: ab*X = ab has no solution at all,
  // and the unique solution of X*b = (ab)^6 lies outside this region.
  CHECK(solve_equation(EquationShape{EquationShape::Kind::lx, ab}, ab, r)
            .empty());
  CHECK(solve_equation(parse_shape("xb"), CanonC{0, 6, 0}, r).empty());
}

TEST_CASE("irreducible word enumeration is (length, lex) ordered") {
  const auto words = irreducible_words_up_to(4);
  REQUIRE(!words.empty());
  CHECK(words[0].str() == "a");
  CHECK(words[1].str() == "b");
  CHECK(words[2].str() == "aa");
  CHECK(words[3].str() == "ab");
  for (std::size_t i = 1; i < words.size(); ++i) {
    const bool ordered =
        words[i - 1].size() < words[i].size() ||
        (words[i - 1].size() == words[i].size() && words[i - 1] < words[i]);
    REQUIRE(ordered);
  }
  for (const auto& w : words) {
    REQUIRE(RewriteSystem::c_system().is_irreducible(w));
  }
}

TEST_CASE("green_witness pinned cases") {
  const auto r_pair = green_witness(GreenSide::r, a, CanonC{0, 0, 2}, 3);
  REQUIRE(r_pair.has_value());
  CHECK(r_pair->u.str() == "a");
  CHECK(r_pair->v.str() == "b");

  const auto l_pair = green_witness(GreenSide::l, b, CanonC{2, 0, 0}, 3);
  REQUIRE(l_pair.has_value());
  CHECK(l_pair->u.str() == "b");
  CHECK(l_pair->v.str() == "a");

  CHECK(!green_witness(GreenSide::r, ab, b, 4).has_value());
  CHECK_THROWS_AS(green_witness(GreenSide::r, a, b, 0), Error);
}

TEST_CASE("h_related") {
  CHECK(h_related(CanonC{1, 1, 1}, CanonC{1, 1, 1}, 2));
  CHECK(!h_related(a, CanonC{0, 0, 2}, 6));
}

TEST_CASE("simple_witness finds oracle-checked pairs") {
  const auto pair = simple_witness(ab, CanonC{0, 2, 0}, 4);
  REQUIRE(pair.has_value());
  CHECK(to_normal_c(pair->u.concat(from_normal_c(ab)).concat(pair->v)) ==
        CanonC{0, 2, 0});

  const auto self = simple_witness(a, a, 2);
  REQUIRE(self.has_value());
  CHECK(self->u.str() == "a");
  CHECK(self->v.str() == "b");
}

TEST_CASE("default simple witness bound") {
  CHECK(default_simple_witness_bound(CanonC{1, 2, 3}, CanonC{0, 0, 1}) ==
        2 * 7 + 4);
}

TEST_CASE("translations and fixed points") {
  CHECK(apply_translation(Side::left, ab, CanonC{2, 1, 0}) == CanonC{2, 1, 0});
  CHECK(apply_translation(Side::right, ab, CanonC{0, 1, 2}) ==
        CanonC{0, 1, 2});
  CHECK(apply_translation(Side::left, CanonC{1, 0, 1}, CanonC{1, 0, 1}) ==
        CanonC{1, 1, 1});
  CHECK(is_fixed(Side::right, ab, CanonC{0, 1, 2}));
  CHECK(is_fixed(Side::left, ab, CanonC{2, 1, 0}));
  CHECK(!is_fixed(Side::right, ab, ab));
}

TEST_CASE("no idempotents in small regions") {
  CHECK(!is_idempotent(ab));
  CHECK(!is_idempotent(CanonC{1, 0, 1}));
  for (const CanonC& x : Region{3, 3, 3}.elements()) {
    REQUIRE(!is_idempotent(x));
  }
}

TEST_CASE("telescoping products collapse to ab") {
  for (Exp n = 1; n <= 20; ++n) {
    REQUIRE(mul_c(CanonC{0, 0, n}, CanonC{n, 0, 0}) == ab);
  }
}

TEST_CASE("cells partition every region") {
  const Region r{3, 3, 3};
  std::map<std::pair<Exp, Exp>, std::size_t> counts;
  for (const CanonC& x : r.elements()) {
    const Cell cell{x.b_exp, x.a_exp};
    REQUIRE(cell.contains(x));
    REQUIRE(!Cell{x.b_exp + 1, x.a_exp}.contains(x));
    ++counts[{x.b_exp, x.a_exp}];
  }
  std::size_t total = 0;
  for (const auto& [key, count] : counts) total += count;
  CHECK(total == r.size());
}
