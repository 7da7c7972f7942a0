#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foxcalc/finquot.hpp"
#include "foxcalc/freeword.hpp"
#include "foxcalc/groupring.hpp"

namespace foxcalc {

// One Schreier pair (s, x): coset slot s crossed with positive generator x,
// carrying the subgroup element rep(s)*x*rep(s*phi(x))^-1.  Pairs whose word
// reduces to the identity are exactly the spanning-tree edges of the coset
// graph; the remaining words freely generate the kernel.
struct SchreierPair {
  int slot = 0;        // transversal slot of s
  int gen = 0;         // 1-based generator index
  FreeWord word;       // rep(s) * x * rep(s*phi(x))^-1, freely reduced
  bool tree = false;   // identity pair (spanning-tree edge)
};

// Coset system of a finite-index subgroup kernel: shortlex-minimal
// prefix-closed right transversal (breadth-first over the image subgroup),
// the full Schreier pair table, and the free generator basis.  With a
// generator subset the same machinery runs inside the subgroup F_K, giving
// the system of F_K intersect N in F_K; all words still live in the ambient
// free group.  Immutable after construction.
class SchreierSystem {
public:
  // gens = ascending subset of {1..rank}; the full alphabet by default
  static SchreierSystem build(const GroupHom& hom);
  static SchreierSystem build(const GroupHom& hom, std::vector<int> gens);

  const GroupHom& hom() const { return hom_; }
  const std::vector<int>& gens() const { return gens_; }
  // number of cosets = size of the image subgroup of the restricted hom
  int index() const { return static_cast<int>(reps_.size()); }

  // transversal in slot (= shortlex) order
  const std::vector<FreeWord>& transversal() const { return reps_; }
  const FreeWord& rep(int slot) const { return reps_[slot]; }
  int element_at(int slot) const { return elts_[slot]; }
  // -1 when g is outside the (restricted) image subgroup
  int slot_of_element(int g) const { return slot_of_[g]; }
  bool contains_element(int g) const { return slot_of_[g] >= 0; }
  const FreeWord& rep_of_element(int g) const;

  // all |transversal| x |gens| pairs, row-major by (slot, generator)
  const std::vector<SchreierPair>& pairs() const { return pairs_; }
  // free generator basis: non-tree pairs sorted shortlex by word
  int free_rank() const { return static_cast<int>(free_pairs_.size()); }
  const FreeWord& free_gen(int pos) const;
  std::vector<FreeWord> free_gens() const;

  // Reidemeister-Schreier scan of a kernel word: emits (basis position,
  // +1/-1) per crossed non-tree pair; the corresponding generator product
  // equals w in F, which is re-checked exactly before returning.
  std::vector<std::pair<int, int>> rewrite(const FreeWord& w) const;

  // image of w in the free (Z/d)-module N/[N,N]N^d on the basis positions
  std::vector<Int> abelianized_vector(const FreeWord& w, int d) const;

private:
  SchreierSystem(const GroupHom& hom, std::vector<int> gens);

  GroupHom hom_;
  std::vector<int> gens_;        // ascending generator subset
  std::vector<int> gen_col_;     // 1-based gen -> column in pair table, -1 if absent
  std::vector<FreeWord> reps_;   // by slot
  std::vector<int> elts_;        // slot -> group element
  std::vector<int> slot_of_;     // group element -> slot or -1
  std::vector<SchreierPair> pairs_;
  std::vector<int> free_pairs_;  // basis position -> pair index
  std::vector<int> free_pos_;    // pair index -> basis position or -1
};

// System of F_K intersect N inside F_K (K ascending; empty K gives the
// trivial subgroup: one coset, no generators).  Its transversal rep of
// phi(v) is the shortlex-minimal F_K-word with that image.
SchreierSystem subgroup_schreier(const GroupHom& hom, const std::vector<int>& K);

}  // namespace foxcalc
