#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foxcalc {

// One maximal run x_gen^exp inside a reduced word; exp is never zero and
// adjacent syllables carry distinct generators.
struct Syllable {
  int gen = 0;            // 1-based generator index
  std::int64_t exp = 0;   // nonzero
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in a free group of fixed finite rank.  Immutable after
// construction; the empty syllable list is the identity.
class FreeWord {
public:
  explicit FreeWord(int rank);
  // Reduces the given syllable run into normal form.
  FreeWord(int rank, std::vector<Syllable> syllables);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::int64_t length() const;   // letter count

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.rank_ == b.rank_ && a.syllables_ == b.syllables_;
  }

private:
  int rank_;
  std::vector<Syllable> syllables_;
};

FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& a);
FreeWord power(const FreeWord& a, std::int64_t m);
FreeWord conjugate(const FreeWord& a, const FreeWord& b);   // b^-1 * a * b
FreeWord commutator(const FreeWord& a, const FreeWord& b);  // a^-1 * b^-1 * a * b

inline FreeWord operator*(const FreeWord& a, const FreeWord& b) { return multiply(a, b); }

// true iff some syllable of v uses generator k
bool occurs(const FreeWord& v, int k);

// v = conjugator * core * conjugator^-1 with core cyclically reduced and the
// conjugator the longest prefix peelable that way.
std::pair<FreeWord, FreeWord> cyclic_reduce(const FreeWord& v);
bool is_cyclically_reduced(const FreeWord& v);

// Canonical total order: length first, then letterwise with the alphabet
// x1 < x1^-1 < x2 < x2^-1 < ...
int shortlex_compare(const FreeWord& a, const FreeWord& b);
inline bool operator<(const FreeWord& a, const FreeWord& b) {
  return shortlex_compare(a, b) < 0;
}

// Grammar:  atom := "e" | "x" DIGITS | "(" expr ")" | "[" expr "," expr "]"
//           factor := atom ("^" SIGNED_INT)? ; expr := factor ("*" factor)*
// Whitespace is ignored between tokens; "[u,v]" denotes u^-1 v^-1 u v and the
// extra literal "e" denotes the identity.  Throws std::invalid_argument with
// the offending offset on syntax errors and out-of-range generators.
FreeWord parse_word(std::string_view text, int rank);

// "x1^2*x2^-1" form: exponent omitted when 1, "*"-separated; identity is "e".
std::string render(const FreeWord& w);

// Calls fn on every freely reduced word of letter length <= maxlen, in
// shortlex order starting with the identity.
void enumerate_reduced_words(int rank, int maxlen,
                             const std::function<void(const FreeWord&)>& fn);

}  // namespace foxcalc
