#ifndef CSGK_WORDS_HPP
#define CSGK_WORDS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csgk/elements.hpp"

namespace csgk {

enum class Generator : unsigned char { a = 0, b = 1 };

char to_char(Generator g);

// A finite word over {a, b}. Words are immutable values; the empty word is
// permitted here and rejected by the C-specific operations below.
class FreeWord {
 public:
  static constexpr std::size_t default_parse_cap = 1'000'000;

  FreeWord() = default;
  explicit FreeWord(std::vector<Generator> letters);

  // Accepts 'a'/'b'; whitespace is ignored. Throws invalid_character on
  // anything else and length_limit past max_letters.
  static FreeWord parse(std::string_view text,
                        std::size_t max_letters = default_parse_cap);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::string str() const;

  FreeWord concat(const FreeWord& rhs) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  // Plain lexicographic order with a < b.
  friend auto operator<=>(const FreeWord& x, const FreeWord& y) {
    return x.letters_ <=> y.letters_;
  }

 private:
  std::vector<Generator> letters_;
};

struct RewriteRule {
  FreeWord lhs;
  FreeWord rhs;
};

enum class Strategy { leftmost, rightmost };

// A finite length-reducing string rewriting system. Only the two built-in
// systems and explicit test fixtures are ever constructed.
class RewriteSystem {
 public:
  RewriteSystem(std::string name, std::vector<RewriteRule> rules);

  static const RewriteSystem& c_system();  // aab -> a, abb -> b
  static const RewriteSystem& b_system();  // ab -> (empty)

  const std::string& name() const { return name_; }
  std::span<const RewriteRule> rules() const { return rules_; }

  // Applies rules until no left-hand side occurs as a factor. Terminates
  // because every rule strictly reduces length. `steps`, when given,
  // receives the number of rule applications.
  FreeWord reduce(const FreeWord& w, Strategy strategy = Strategy::leftmost,
                  std::size_t* steps = nullptr) const;
  bool is_irreducible(const FreeWord& w) const;

 private:
  std::string name_;
  std::vector<RewriteRule> rules_;
  std::size_t max_lhs_ = 0;
};

// One overlap between two left-hand sides: rule `first` matches the
// superposition word at offset 0 and rule `second` at `offset`.
struct Superposition {
  FreeWord word;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t offset = 0;
  FreeWord reduct_first;
  FreeWord reduct_second;
  bool joined = false;
};

struct CriticalPairReport {
  bool ok = true;
  std::vector<Superposition> superpositions;
  std::optional<FreeWord> counterexample;  // first non-joining superposition
};

// Enumerates every overlap among left-hand sides, reduces the superposition
// both ways and checks joinability.
CriticalPairReport critical_pairs_check(const RewriteSystem& system);

FreeWord parse_word(std::string_view text,
                    std::size_t max_letters = FreeWord::default_parse_cap);

// Unique irreducible word reachable from w under the C system.
// Throws empty_word on the empty word.
FreeWord reduce_c(const FreeWord& w);

// Matches the pattern b^k (ab)^l a^m against an arbitrary word; nullopt if
// the word is not literally of that shape (or is empty).
std::optional<CanonC> normal_shape(const FreeWord& w);

// reduce_c followed by the pattern match. A pattern failure on an
// irreducible word signals a broken engine and raises shape_violation.
CanonC to_normal_c(const FreeWord& w);
FreeWord from_normal_c(const CanonC& x);

// Bicyclic side: the empty word is the identity <0,0>.
BicyclicNF to_normal_b(const FreeWord& w);
FreeWord from_normal_b(const BicyclicNF& x);

// Ground-truth product in C: concatenate the normal-form words and rewrite.
// Kept deliberately independent of the closed-form product.
CanonC oracle_mul_c(const CanonC& x, const CanonC& y);

}  // namespace csgk

#endif  // CSGK_WORDS_HPP
