#pragma once

#include "foxcalc/freeword.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace foxcalc {

using Int = boost::multiprecision::cpp_int;

// Element of the integer group ring of a free group: a finite formal sum of
// words with nonzero integer coefficients.  Terms are keyed by words in
// shortlex order, so iteration (and therefore rendering) is canonical.
class RingElt {
public:
  explicit RingElt(int rank) : rank_(rank) {}

  static RingElt from_word(const FreeWord& w);
  static RingElt constant(int rank, const Int& c);   // c * identity

  int rank() const { return rank_; }
  const std::map<FreeWord, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // accumulate c * w, dropping the term if the coefficient cancels
  void add_term(const FreeWord& w, const Int& c);

  friend bool operator==(const RingElt& a, const RingElt& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

private:
  int rank_;
  std::map<FreeWord, Int> terms_;
};

RingElt add(const RingElt& a, const RingElt& b);
RingElt subtract(const RingElt& a, const RingElt& b);
RingElt negate(const RingElt& a);
RingElt scalar_mul(const Int& c, const RingElt& a);
RingElt mul(const RingElt& a, const RingElt& b);
Int augment(const RingElt& a);

inline RingElt operator+(const RingElt& a, const RingElt& b) { return add(a, b); }
inline RingElt operator-(const RingElt& a, const RingElt& b) { return subtract(a, b); }
inline RingElt operator-(const RingElt& a) { return negate(a); }
inline RingElt operator*(const RingElt& a, const RingElt& b) { return mul(a, b); }

// Terms in shortlex order, "c*word" with unit coefficients elided, joined by
// " + " / " - "; the zero element renders as "0" and the identity word as "e".
std::string render(const RingElt& a);

}  // namespace foxcalc
