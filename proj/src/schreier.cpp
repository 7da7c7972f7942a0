#include "foxcalc/schreier.hpp"

#include <algorithm>
#include <stdexcept>

namespace foxcalc {

SchreierSystem::SchreierSystem(const GroupHom& hom, std::vector<int> gens)
    : hom_(hom), gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    int g = gens_[i];
    if (g < 1 || g > hom_.rank())
      throw std::invalid_argument("generator index out of range");
    if (i > 0 && gens_[i] <= gens_[i - 1])
      throw std::invalid_argument("generator subset must be strictly ascending");
  }
  const FiniteGroup& G = *hom_.target();
  int rank = hom_.rank();

  // Breadth-first coset search in alphabet order x1 < x1^-1 < x2 < ...
  // (restricted to the allowed generators).  FIFO over slots enumerates
  // candidate representatives in shortlex order, so the first word reaching
  // a coset is its shortlex-minimal representative and the transversal is
  // prefix-closed.
  slot_of_.assign(G.order(), -1);
  slot_of_[0] = 0;
  elts_.push_back(0);
  reps_.push_back(FreeWord(rank));
  for (std::size_t q = 0; q < elts_.size(); ++q) {
    int e = elts_[q];
    for (int x : gens_)
      for (int sign : {+1, -1}) {
        int img = hom_.image_of(x);
        int e2 = G.mul(e, sign > 0 ? img : G.inv(img));
        if (slot_of_[e2] >= 0) continue;
        slot_of_[e2] = static_cast<int>(elts_.size());
        elts_.push_back(e2);
        reps_.push_back(reps_[q] * FreeWord(rank, {{x, sign}}));
      }
  }

  // full pair table, row-major by (slot, generator column)
  gen_col_.assign(rank + 1, -1);
  for (std::size_t i = 0; i < gens_.size(); ++i) gen_col_[gens_[i]] = static_cast<int>(i);
  for (int s = 0; s < index(); ++s)
    for (int x : gens_) {
      int e2 = G.mul(elts_[s], hom_.image_of(x));
      FreeWord w = reps_[s] * FreeWord(rank, {{x, 1}}) * inverse(reps_[slot_of_[e2]]);
      pairs_.push_back({s, x, w, w.is_identity()});
    }

  // free basis: non-tree pairs in shortlex order of their words
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (!pairs_[i].tree) free_pairs_.push_back(static_cast<int>(i));
  std::sort(free_pairs_.begin(), free_pairs_.end(), [&](int a, int b) {
    return pairs_[a].word < pairs_[b].word;
  });
  free_pos_.assign(pairs_.size(), -1);
  for (std::size_t p = 0; p < free_pairs_.size(); ++p)
    free_pos_[free_pairs_[p]] = static_cast<int>(p);
}

SchreierSystem SchreierSystem::build(const GroupHom& hom) {
  std::vector<int> all(hom.rank());
  for (int i = 0; i < hom.rank(); ++i) all[i] = i + 1;
  return SchreierSystem(hom, std::move(all));
}

SchreierSystem SchreierSystem::build(const GroupHom& hom, std::vector<int> gens) {
  return SchreierSystem(hom, std::move(gens));
}

const FreeWord& SchreierSystem::rep_of_element(int g) const {
  if (g < 0 || g >= static_cast<int>(slot_of_.size()) || slot_of_[g] < 0)
    throw std::invalid_argument("element is outside the covered subgroup");
  return reps_[slot_of_[g]];
}

const FreeWord& SchreierSystem::free_gen(int pos) const {
  return pairs_[free_pairs_[pos]].word;
}

std::vector<FreeWord> SchreierSystem::free_gens() const {
  std::vector<FreeWord> out;
  out.reserve(free_pairs_.size());
  for (int i : free_pairs_) out.push_back(pairs_[i].word);
  return out;
}

std::vector<std::pair<int, int>> SchreierSystem::rewrite(const FreeWord& w) const {
  if (w.rank() != hom_.rank())
    throw std::invalid_argument("word rank does not match the system");
  if (!hom_.in_kernel(w))
    throw std::domain_error("word is not in the kernel");
  const FiniteGroup& G = *hom_.target();
  std::vector<std::pair<int, int>> out;
  int e = 0;
  for (const Syllable& s : w.syllables()) {
    if (gen_col_[s.gen] < 0)
      throw std::domain_error("word leaves the generator subset");
    int img = hom_.image_of(s.gen);
    for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) {
      if (s.exp > 0) {
        // crossing pair (slot(e), x) forwards
        int pair = slot_of_[e] * static_cast<int>(gens_.size()) + gen_col_[s.gen];
        if (!pairs_[pair].tree) out.emplace_back(free_pos_[pair], +1);
        e = G.mul(e, img);
      } else {
        // crossing pair (slot(e * x^-1), x) backwards
        int e2 = G.mul(e, G.inv(img));
        int pair = slot_of_[e2] * static_cast<int>(gens_.size()) + gen_col_[s.gen];
        if (!pairs_[pair].tree) out.emplace_back(free_pos_[pair], -1);
        e = e2;
      }
    }
  }
  // the scan must reproduce w exactly as a product of basis words
  FreeWord check(w.rank());
  for (const auto& [pos, sign] : out)
    check = check * (sign > 0 ? free_gen(pos) : inverse(free_gen(pos)));
  if (!(check == w))
    throw std::logic_error("rewriting failed to reconstruct the word");
  return out;
}

std::vector<Int> SchreierSystem::abelianized_vector(const FreeWord& w, int d) const {
  int m = normalize_modulus(d);
  std::vector<Int> v(free_pairs_.size(), Int(0));
  for (const auto& [pos, sign] : rewrite(w)) v[pos] += sign;
  if (m != 0)
    for (Int& c : v) {
      c %= m;
      if (c < 0) c += m;
    }
  return v;
}

SchreierSystem subgroup_schreier(const GroupHom& hom, const std::vector<int>& K) {
  std::vector<int> gens = K;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return SchreierSystem::build(hom, std::move(gens));
}

}  // namespace foxcalc
