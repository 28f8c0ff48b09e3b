#include "csgk/words.hpp"

#include <algorithm>
#include <cctype>

namespace csgk {

char to_char(Generator g) { return g == Generator::a ? 'a' : 'b'; }

FreeWord::FreeWord(std::vector<Generator> letters)
    : letters_(std::move(letters)) {}

FreeWord FreeWord::parse(std::string_view text, std::size_t max_letters) {
  std::vector<Generator> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == 'a') {
      letters.push_back(Generator::a);
    } else if (ch == 'b') {
      letters.push_back(Generator::b);
    } else {
      throw Error(ErrorCode::invalid_character,
                  std::string("unexpected symbol '") + ch + "'");
    }
    if (letters.size() > max_letters) {
      throw Error(ErrorCode::length_limit,
                  "word exceeds " + std::to_string(max_letters) + " letters");
    }
  }
  return FreeWord(std::move(letters));
}

std::string FreeWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Generator g : letters_) out.push_back(to_char(g));
  return out;
}

FreeWord FreeWord::concat(const FreeWord& rhs) const {
  std::vector<Generator> letters;
  letters.reserve(letters_.size() + rhs.letters_.size());
  letters.insert(letters.end(), letters_.begin(), letters_.end());
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(std::move(letters));
}

FreeWord parse_word(std::string_view text, std::size_t max_letters) {
  return FreeWord::parse(text, max_letters);
}

RewriteSystem::RewriteSystem(std::string name, std::vector<RewriteRule> rules)
    : name_(std::move(name)), rules_(std::move(rules)) {
  for (const auto& rule : rules_) {
    if (rule.rhs.size() >= rule.lhs.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "rule '" + rule.lhs.str() + "' -> '" + rule.rhs.str() +
                      "' does not reduce length");
    }
    max_lhs_ = std::max(max_lhs_, rule.lhs.size());
  }
}

const RewriteSystem& RewriteSystem::c_system() {
  static const RewriteSystem system(
      "c", {{FreeWord::parse("aab"), FreeWord::parse("a")},
            {FreeWord::parse("abb"), FreeWord::parse("b")}});
  return system;
}

const RewriteSystem& RewriteSystem::b_system() {
  static const RewriteSystem system(
      "bicyclic", {{FreeWord::parse("ab"), FreeWord()}});
  return system;
}

namespace {

bool matches_at(const std::vector<Generator>& word, std::size_t pos,
                const FreeWord& lhs) {
  if (pos + lhs.size() > word.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (word[pos + i] != lhs[i]) return false;
  }
  return true;
}

void splice(std::vector<Generator>& word, std::size_t pos,
            std::size_t lhs_len, const FreeWord& rhs) {
  for (std::size_t i = 0; i < rhs.size(); ++i) word[pos + i] = rhs[i];
  word.erase(word.begin() + static_cast<std::ptrdiff_t>(pos + rhs.size()),
             word.begin() + static_cast<std::ptrdiff_t>(pos + lhs_len));
}

}  // namespace

FreeWord RewriteSystem::reduce(const FreeWord& w, Strategy strategy,
                               std::size_t* steps) const {
  std::vector<Generator> word = w.letters();
  std::size_t count = 0;
  if (strategy == Strategy::leftmost) {
    std::size_t pos = 0;
    while (pos < word.size()) {
      bool applied = false;
      for (const auto& rule : rules_) {
        if (matches_at(word, pos, rule.lhs)) {
          splice(word, pos, rule.lhs.size(), rule.rhs);
          ++count;
          // Nothing left of pos - max_lhs_ + 1 gained a new redex.
          pos = pos > max_lhs_ ? pos - max_lhs_ + 1 : 0;
          applied = true;
          break;
        }
      }
      if (!applied) ++pos;
    }
  } else {
    bool applied = true;
    while (applied) {
      applied = false;
      for (std::size_t back = word.size(); back-- > 0;) {
        for (const auto& rule : rules_) {
          if (matches_at(word, back, rule.lhs)) {
            splice(word, back, rule.lhs.size(), rule.rhs);
            ++count;
            applied = true;
            break;
          }
        }
        if (applied) break;
      }
    }
  }
  if (steps != nullptr) *steps = count;
  return FreeWord(std::move(word));
}

bool RewriteSystem::is_irreducible(const FreeWord& w) const {
  const auto& word = w.letters();
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    for (const auto& rule : rules_) {
      if (matches_at(word, pos, rule.lhs)) return false;
    }
  }
  return true;
}

CriticalPairReport critical_pairs_check(const RewriteSystem& system) {
  CriticalPairReport report;
  const auto rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const FreeWord& li = rules[i].lhs;
      const FreeWord& lj = rules[j].lhs;
      for (std::size_t offset = (i == j ? 1 : 0); offset < li.size();
           ++offset) {
        // lj starts at `offset` inside a word whose prefix is li.
        const std::size_t overlap = std::min(li.size() - offset, lj.size());
        bool agree = true;
        for (std::size_t t = 0; t < overlap; ++t) {
          if (li[offset + t] != lj[t]) {
            agree = false;
            break;
          }
        }
        if (!agree) continue;

        std::vector<Generator> letters = li.letters();
        for (std::size_t t = overlap; t < lj.size(); ++t) {
          letters.push_back(lj[t]);
        }
        FreeWord word(std::move(letters));

        std::vector<Generator> first = word.letters();
        splice(first, 0, li.size(), rules[i].rhs);
        std::vector<Generator> second = word.letters();
        splice(second, offset, lj.size(), rules[j].rhs);

        Superposition sp;
        sp.word = word;
        sp.first = i;
        sp.second = j;
        sp.offset = offset;
        sp.reduct_first = system.reduce(FreeWord(std::move(first)));
        sp.reduct_second = system.reduce(FreeWord(std::move(second)));
        sp.joined = sp.reduct_first == sp.reduct_second;
        if (!sp.joined) {
          report.ok = false;
          if (!report.counterexample) report.counterexample = word;
        }
        report.superpositions.push_back(std::move(sp));
      }
    }
  }
  return report;
}

FreeWord reduce_c(const FreeWord& w) {
  if (w.empty()) {
    throw Error(ErrorCode::empty_word, "C has no identity element");
  }
  return RewriteSystem::c_system().reduce(w);
}

std::optional<CanonC> normal_shape(const FreeWord& w) {
  const auto& letters = w.letters();
  std::size_t pos = 0;
  Exp k = 0;
  while (pos < letters.size() && letters[pos] == Generator::b) {
    ++k;
    ++pos;
  }
  Exp l = 0;
  while (pos + 1 < letters.size() && letters[pos] == Generator::a &&
         letters[pos + 1] == Generator::b) {
    ++l;
    pos += 2;
  }
  Exp m = 0;
  while (pos < letters.size() && letters[pos] == Generator::a) {
    ++m;
    ++pos;
  }
  if (pos != letters.size() || k + l + m == 0) return std::nullopt;
  return CanonC{k, l, m};
}

CanonC to_normal_c(const FreeWord& w) {
  FreeWord reduced = reduce_c(w);
  auto shape = normal_shape(reduced);
  if (!shape) {
    throw Error(ErrorCode::shape_violation,
                "irreducible word '" + reduced.str() +
                    "' is not of the form b^k (ab)^l a^m");
  }
  return *shape;
}

FreeWord from_normal_c(const CanonC& x) {
  if (!is_valid(x)) {
    throw Error(ErrorCode::invalid_argument, "0,0,0 has no word form");
  }
  std::vector<Generator> letters;
  letters.reserve(x.b_exp + 2 * x.ab_exp + x.a_exp);
  for (Exp i = 0; i < x.b_exp; ++i) letters.push_back(Generator::b);
  for (Exp i = 0; i < x.ab_exp; ++i) {
    letters.push_back(Generator::a);
    letters.push_back(Generator::b);
  }
  for (Exp i = 0; i < x.a_exp; ++i) letters.push_back(Generator::a);
  return FreeWord(std::move(letters));
}

BicyclicNF to_normal_b(const FreeWord& w) {
  FreeWord reduced = RewriteSystem::b_system().reduce(w);
  const auto& letters = reduced.letters();
  std::size_t pos = 0;
  Exp i = 0;
  while (pos < letters.size() && letters[pos] == Generator::b) {
    ++i;
    ++pos;
  }
  Exp j = 0;
  while (pos < letters.size() && letters[pos] == Generator::a) {
    ++j;
    ++pos;
  }
  if (pos != letters.size()) {
    throw Error(ErrorCode::shape_violation,
                "irreducible word '" + reduced.str() +
                    "' is not of the form b^i a^j");
  }
  return BicyclicNF{i, j};
}

FreeWord from_normal_b(const BicyclicNF& x) {
  std::vector<Generator> letters;
  letters.reserve(x.b_exp + x.a_exp);
  for (Exp i = 0; i < x.b_exp; ++i) letters.push_back(Generator::b);
  for (Exp i = 0; i < x.a_exp; ++i) letters.push_back(Generator::a);
  return FreeWord(std::move(letters));
}

CanonC oracle_mul_c(const CanonC& x, const CanonC& y) {
  return to_normal_c(from_normal_c(x).concat(from_normal_c(y)));
}

}  // namespace csgk
