#include "foxcalc/freeword.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace foxcalc {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
}

void check_gen(int gen, int rank) {
  if (gen < 1 || gen > rank) {
    std::ostringstream os;
    os << "generator index " << gen << " out of range 1.." << rank;
    throw std::invalid_argument(os.str());
  }
}

// Appends x_gen^exp to a reduced syllable list, keeping it reduced.
void push_syllable(std::vector<Syllable>& out, int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(Syllable{gen, exp});
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord::FreeWord(int rank, std::vector<Syllable> syllables) : rank_(rank) {
  check_rank(rank);
  for (const Syllable& s : syllables) {
    check_gen(s.gen, rank);
    push_syllable(syllables_, s.gen, s.exp);
  }
}

std::int64_t FreeWord::length() const {
  std::int64_t n = 0;
  for (const Syllable& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<Syllable> out = a.syllables();
  for (const Syllable& s : b.syllables()) push_syllable(out, s.gen, s.exp);
  return FreeWord(a.rank(), std::move(out));
}

FreeWord inverse(const FreeWord& a) {
  std::vector<Syllable> out;
  out.reserve(a.syllables().size());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
    out.push_back(Syllable{it->gen, -it->exp});
  return FreeWord(a.rank(), std::move(out));
}

FreeWord power(const FreeWord& a, std::int64_t m) {
  if (m == 0) return FreeWord(a.rank());
  if (m < 0) return power(inverse(a), -m);
  if (a.syllables().size() <= 1) {
    std::vector<Syllable> out;
    if (!a.syllables().empty())
      out.push_back(Syllable{a.syllables()[0].gen, a.syllables()[0].exp * m});
    return FreeWord(a.rank(), std::move(out));
  }
  FreeWord acc(a.rank());
  FreeWord base = a;
  while (m > 0) {
    if (m & 1) acc = multiply(acc, base);
    m >>= 1;
    if (m > 0) base = multiply(base, base);
  }
  return acc;
}

FreeWord conjugate(const FreeWord& a, const FreeWord& b) {
  return multiply(multiply(inverse(b), a), b);
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

bool occurs(const FreeWord& v, int k) {
  check_gen(k, v.rank());
  for (const Syllable& s : v.syllables())
    if (s.gen == k) return true;
  return false;
}

std::pair<FreeWord, FreeWord> cyclic_reduce(const FreeWord& v) {
  std::vector<Syllable> conj;
  std::vector<Syllable> core = v.syllables();
  // Peel while the first and last letters of the core are mutual inverses.
  while (core.size() >= 2) {
    Syllable& f = core.front();
    Syllable& l = core.back();
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
    std::int64_t fa = f.exp < 0 ? -f.exp : f.exp;
    std::int64_t la = l.exp < 0 ? -l.exp : l.exp;
    if (fa <= la) {
      // whole front syllable moves into the conjugator
      push_syllable(conj, f.gen, f.exp);
      l.exp += f.exp;
      core.erase(core.begin());
      if (l.exp == 0) core.pop_back();
    } else {
      push_syllable(conj, f.gen, -l.exp);
      f.exp += l.exp;
      core.pop_back();
    }
  }
  return {FreeWord(v.rank(), std::move(conj)), FreeWord(v.rank(), std::move(core))};
}

bool is_cyclically_reduced(const FreeWord& v) {
  return cyclic_reduce(v).first.is_identity();
}

namespace {

// letter rank in the alphabet x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_key(const Syllable& s) {
  return 2 * (s.gen - 1) + (s.exp < 0 ? 1 : 0);
}

inline std::int64_t syl_abs(const Syllable& s) {
  return s.exp < 0 ? -s.exp : s.exp;
}

}  // namespace

int shortlex_compare(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  std::int64_t la = a.length(), lb = b.length();
  if (la != lb) return la < lb ? -1 : 1;
  std::size_t ia = 0, ib = 0;
  std::int64_t ra = 0, rb = 0;  // letters already consumed inside the syllable
  const auto& sa = a.syllables();
  const auto& sb = b.syllables();
  while (ia < sa.size() && ib < sb.size()) {
    int ka = letter_key(sa[ia]);
    int kb = letter_key(sb[ib]);
    if (ka != kb) return ka < kb ? -1 : 1;
    std::int64_t avail_a = syl_abs(sa[ia]) - ra;
    std::int64_t avail_b = syl_abs(sb[ib]) - rb;
    std::int64_t step = avail_a < avail_b ? avail_a : avail_b;
    ra += step;
    rb += step;
    if (ra == syl_abs(sa[ia])) { ++ia; ra = 0; }
    if (rb == syl_abs(sb[ib])) { ++ib; rb = 0; }
  }
  return 0;  // equal length and all letters matched
}

// ---------------------------------------------------------------------------
// parser

namespace {

class WordParser {
public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  FreeWord parse() {
    FreeWord w = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

private:
  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "word parse error at offset " << pos_ << ": " << what;
    throw std::invalid_argument(os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      std::ostringstream os;
      os << "expected '" << c << "'";
      fail(os.str());
    }
    ++pos_;
  }

  std::int64_t digits() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected digits");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail("integer too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::int64_t signed_int() {
    skip_ws();
    std::int64_t sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    return sign * digits();
  }

  FreeWord atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected word atom");
    char c = text_[pos_];
    if (c == 'e') {
      ++pos_;
      return FreeWord(rank_);
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      std::int64_t g = digits();
      if (g < 1 || g > rank_) {
        pos_ = at;
        std::ostringstream os;
        os << "generator index " << g << " out of range 1.." << rank_;
        fail(os.str());
      }
      return FreeWord(rank_, {Syllable{static_cast<int>(g), 1}});
    }
    if (c == '(') {
      ++pos_;
      FreeWord w = expr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      FreeWord u = expr();
      expect(',');
      FreeWord v = expr();
      expect(']');
      return commutator(u, v);
    }
    fail("expected word atom");
  }

  FreeWord factor() {
    FreeWord w = atom();
    if (peek_is('^')) {
      ++pos_;
      return power(w, signed_int());
    }
    return w;
  }

  FreeWord expr() {
    FreeWord w = factor();
    while (peek_is('*')) {
      ++pos_;
      w = multiply(w, factor());
    }
    return w;
  }
};

}  // namespace

FreeWord parse_word(std::string_view text, int rank) {
  check_rank(rank);
  return WordParser(text, rank).parse();
}

std::string render(const FreeWord& w) {
  if (w.is_identity()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) os << '*';
    first = false;
    os << 'x' << s.gen;
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

void enumerate_reduced_words(int rank, int maxlen,
                             const std::function<void(const FreeWord&)>& fn) {
  check_rank(rank);
  std::vector<int> letters;  // letter keys, see letter_key()
  std::function<void(int)> walk = [&](int target) {
    if (static_cast<int>(letters.size()) == target) {
      std::vector<Syllable> syls;
      for (int k : letters) push_syllable(syls, k / 2 + 1, (k % 2) ? -1 : 1);
      fn(FreeWord(rank, std::move(syls)));
      return;
    }
    for (int key = 0; key < 2 * rank; ++key) {
      if (!letters.empty() && (letters.back() ^ 1) == key) continue;  // would cancel
      letters.push_back(key);
      walk(target);
      letters.pop_back();
    }
  };
  for (int len = 0; len <= maxlen; ++len) walk(len);
}

}  // namespace foxcalc
