#include "foxcalc/finquot.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "foxcalc/fox.hpp"

namespace foxcalc {

int normalize_modulus(long long d) {
  if (d < 0) d = -d;
  if (d == 1) throw std::invalid_argument("modulus 1 is not allowed");
  if (d > std::numeric_limits<int>::max())
    throw std::invalid_argument("modulus too large");
  return static_cast<int>(d);
}

// ---------------------------------------------------------------------------
// GroupHom

GroupHom::GroupHom(int rank, GroupPtr target, std::vector<int> images)
    : rank_(rank), target_(std::move(target)), images_(std::move(images)) {
  if (rank_ < 1) throw std::invalid_argument("rank must be positive");
  if (!target_) throw std::invalid_argument("null target group");
  if (images_.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("image list length must equal the rank");
  for (int g : images_)
    if (g < 0 || g >= target_->order())
      throw std::invalid_argument("image index out of range");
  // closure of <images> by breadth-first products
  in_image_.assign(target_->order(), 0);
  in_image_[0] = 1;
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : images_) {
        int b = target_->mul(a, g);
        if (!in_image_[b]) {
          in_image_[b] = 1;
          next.push_back(b);
        }
        int c = target_->mul(a, target_->inv(g));
        if (!in_image_[c]) {
          in_image_[c] = 1;
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  for (int g = 0; g < target_->order(); ++g)
    if (in_image_[g]) image_elts_.push_back(g);
}

int GroupHom::image_of(int gen) const {
  if (gen < 1 || gen > rank_)
    throw std::invalid_argument("generator index out of range");
  return images_[gen - 1];
}

int GroupHom::apply(const FreeWord& w) const {
  if (w.rank() != rank_)
    throw std::invalid_argument("word rank does not match homomorphism rank");
  int acc = 0;
  for (const Syllable& s : w.syllables())
    acc = target_->mul(acc, target_->pow(images_[s.gen - 1], s.exp));
  return acc;
}

// ---------------------------------------------------------------------------
// QuotRingElt

namespace {

Int canonical_residue(const Int& c, int d) {
  if (d == 0) return c;
  Int r = c % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

QuotRingElt::QuotRingElt(GroupPtr target, int modulus)
    : modulus_(modulus), target_(std::move(target)) {
  if (!target_) throw std::invalid_argument("null target group");
  if (modulus_ < 0 || modulus_ == 1)
    throw std::invalid_argument("modulus must be 0 or at least 2");
  coeffs_.assign(target_->order(), Int(0));
}

void QuotRingElt::add_term(int g, const Int& c) {
  if (g < 0 || g >= target_->order())
    throw std::invalid_argument("element index out of range");
  coeffs_[g] = canonical_residue(coeffs_[g] + c, modulus_);
}

bool QuotRingElt::is_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool QuotRingElt::operator==(const QuotRingElt& o) const {
  return modulus_ == o.modulus_ && target_->table() == o.target_->table() &&
         coeffs_ == o.coeffs_;
}

QuotRingElt add(const QuotRingElt& a, const QuotRingElt& b) {
  if (a.modulus() != b.modulus() || a.target()->order() != b.target()->order())
    throw std::invalid_argument("mismatched quotient rings");
  QuotRingElt r = a;
  for (int g = 0; g < b.target()->order(); ++g) r.add_term(g, b.coeff(g));
  return r;
}

QuotRingElt subtract(const QuotRingElt& a, const QuotRingElt& b) {
  return add(a, negate(b));
}

QuotRingElt negate(const QuotRingElt& a) {
  QuotRingElt r(a.target(), a.modulus());
  for (int g = 0; g < a.target()->order(); ++g) r.add_term(g, -a.coeff(g));
  return r;
}

QuotRingElt mul(const QuotRingElt& a, const QuotRingElt& b) {
  if (a.modulus() != b.modulus() || a.target()->order() != b.target()->order())
    throw std::invalid_argument("mismatched quotient rings");
  const FiniteGroup& G = *a.target();
  QuotRingElt r(a.target(), a.modulus());
  for (int g = 0; g < G.order(); ++g) {
    if (a.coeff(g) == 0) continue;
    for (int h = 0; h < G.order(); ++h) {
      if (b.coeff(h) == 0) continue;
      r.add_term(G.mul(g, h), a.coeff(g) * b.coeff(h));
    }
  }
  return r;
}

std::string render(const QuotRingElt& u) {
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < u.target()->order(); ++g) {
    const Int& c = u.coeff(g);
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << '*';
    if (g == 0) os << 'e';
    else os << 'g' << g;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// reduction and the criterion

QuotRingElt pi_reduce(const RingElt& u, const GroupHom& hom, int d) {
  int m = normalize_modulus(d);
  if (u.rank() != hom.rank())
    throw std::invalid_argument("ring element rank does not match homomorphism");
  QuotRingElt r(hom.target(), m);
  for (const auto& [w, c] : u.terms()) r.add_term(hom.apply(w), c);
  return r;
}

bool criterion_holds(const FreeWord& v, const std::vector<int>& K,
                     const GroupHom& hom, int d) {
  int m = normalize_modulus(d);
  if (v.rank() != hom.rank())
    throw std::invalid_argument("word rank does not match homomorphism");
  for (int k = 1; k <= hom.rank(); ++k) {
    if (std::find(K.begin(), K.end(), k) != K.end()) continue;
    if (!pi_reduce(fox_derive(k, v), hom, m).is_zero()) return false;
  }
  return true;
}

void enumerate_homs(int rank, const GroupPtr& target,
                    const std::function<void(const GroupHom&)>& fn) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (!target) throw std::invalid_argument("null target group");
  std::vector<int> images(rank, 0);
  for (;;) {
    fn(GroupHom(rank, target, images));
    // odometer with the last generator fastest: lexicographic tuple order
    int i = rank - 1;
    while (i >= 0 && images[i] == target->order() - 1) {
      images[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++images[i];
  }
}

std::vector<GroupHom> all_homs(int rank, const GroupPtr& target) {
  std::vector<GroupHom> out;
  enumerate_homs(rank, target,
                 [&](const GroupHom& h) { out.push_back(h); });
  return out;
}

}  // namespace foxcalc
