#include "foxcalc/fox.hpp"

#include <stdexcept>

namespace foxcalc {

namespace {

// D_k(x_k^m) in closed form:
//   m > 0:  e + x + ... + x^(m-1)
//   m < 0:  -(x^-1 + x^-2 + ... + x^m)
// both instances of the product and inverse rules applied to a power.
RingElt syllable_derivative(int rank, int gen, std::int64_t exp) {
  RingElt r(rank);
  if (exp > 0) {
    for (std::int64_t j = 0; j < exp; ++j)
      r.add_term(power(FreeWord(rank, {{gen, 1}}), j), Int(1));
  } else {
    for (std::int64_t j = -1; j >= exp; --j)
      r.add_term(power(FreeWord(rank, {{gen, 1}}), j), Int(-1));
  }
  return r;
}

}  // namespace

RingElt fox_derive(int k, const FreeWord& w) {
  if (k < 1 || k > w.rank())
    throw std::invalid_argument("derivative index out of range");
  // product rule over syllables: D(s_1...s_t) = sum_i D(s_i)*(s_(i+1)...s_t),
  // accumulating the suffix right to left
  RingElt out(w.rank());
  FreeWord suffix(w.rank());
  const auto& syls = w.syllables();
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    if (it->gen == k)
      out = out + mul(syllable_derivative(w.rank(), it->gen, it->exp),
                      RingElt::from_word(suffix));
    suffix = FreeWord(w.rank(), {*it}) * suffix;
  }
  return out;
}

RingElt fox_derive(int k, const RingElt& u) {
  RingElt out(u.rank());
  for (const auto& [w, c] : u.terms())
    out = out + scalar_mul(c, fox_derive(k, w));
  return out;
}

std::vector<RingElt> fundamental_decomposition(const RingElt& u) {
  std::vector<RingElt> ds;
  ds.reserve(u.rank());
  for (int k = 1; k <= u.rank(); ++k) ds.push_back(fox_derive(k, u));
  // re-check  u - augment(u)*e = sum_j (x_j - 1)*D_j(u)  exactly
  RingElt rhs(u.rank());
  for (int j = 1; j <= u.rank(); ++j) {
    RingElt gen_minus_one(u.rank());
    gen_minus_one.add_term(FreeWord(u.rank(), {{j, 1}}), Int(1));
    gen_minus_one.add_term(FreeWord(u.rank()), Int(-1));
    rhs = rhs + mul(gen_minus_one, ds[static_cast<std::size_t>(j) - 1]);
  }
  RingElt lhs = u;
  lhs.add_term(FreeWord(u.rank()), -augment(u));
  if (!(lhs == rhs))
    throw std::logic_error("fundamental decomposition identity failed");
  return ds;
}

bool conjugation_formula_check(int k, const FreeWord& f, const FreeWord& n,
                               const GroupHom& hom) {
  if (!hom.in_kernel(n))
    throw std::domain_error("word is not in the kernel");
  RingElt lhs = fox_derive(k, conjugate(n, f));
  RingElt rhs = mul(fox_derive(k, n), RingElt::from_word(f));
  return pi_reduce(lhs - rhs, hom, 0).is_zero();
}

}  // namespace foxcalc
