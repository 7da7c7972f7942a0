#include "foxcalc/groupring.hpp"

#include <sstream>
#include <stdexcept>

namespace foxcalc {

namespace {

void check_ranks(const RingElt& a, const RingElt& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

}  // namespace

RingElt RingElt::from_word(const FreeWord& w) {
  RingElt r(w.rank());
  r.add_term(w, 1);
  return r;
}

RingElt RingElt::constant(int rank, const Int& c) {
  RingElt r(rank);
  r.add_term(FreeWord(rank), c);
  return r;
}

void RingElt::add_term(const FreeWord& w, const Int& c) {
  if (c == 0) return;
  if (w.rank() != rank_) throw std::invalid_argument("rank mismatch");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElt add(const RingElt& a, const RingElt& b) {
  check_ranks(a, b);
  RingElt r = a;
  for (const auto& [w, c] : b.terms()) r.add_term(w, c);
  return r;
}

RingElt subtract(const RingElt& a, const RingElt& b) {
  check_ranks(a, b);
  RingElt r = a;
  for (const auto& [w, c] : b.terms()) r.add_term(w, -c);
  return r;
}

RingElt negate(const RingElt& a) {
  RingElt r(a.rank());
  for (const auto& [w, c] : a.terms()) r.add_term(w, -c);
  return r;
}

RingElt scalar_mul(const Int& c, const RingElt& a) {
  RingElt r(a.rank());
  if (c == 0) return r;
  for (const auto& [w, cw] : a.terms()) r.add_term(w, c * cw);
  return r;
}

RingElt mul(const RingElt& a, const RingElt& b) {
  check_ranks(a, b);
  RingElt r(a.rank());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      r.add_term(multiply(wa, wb), ca * cb);
  return r;
}

Int augment(const RingElt& a) {
  Int s = 0;
  for (const auto& [w, c] : a.terms()) s += c;
  return s;
}

std::string render(const RingElt& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << '*';
    os << render(w);
  }
  return os.str();
}

}  // namespace foxcalc
