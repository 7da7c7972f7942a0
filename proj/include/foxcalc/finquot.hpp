#pragma once

#include <functional>
#include <string>
#include <vector>

#include "foxcalc/catalog.hpp"
#include "foxcalc/freeword.hpp"
#include "foxcalc/groupring.hpp"

namespace foxcalc {

// Moduli are taken up to sign; 1 is rejected (mod-1 collapse carries no
// information and the theory excludes it), 0 means integer coefficients.
int normalize_modulus(long long d);

// A homomorphism F(rank) -> G, given by the images of the generators.  Every
// image tuple defines one (F is free).  The kernel N is the normal subgroup
// whose quotient the hom realizes; its index in F is the size of the image
// subgroup <images>, which is computed once and cached.
class GroupHom {
public:
  GroupHom(int rank, GroupPtr target, std::vector<int> images);

  int rank() const { return rank_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<int>& images() const { return images_; }

  // image of one generator (1-based index)
  int image_of(int gen) const;
  // evaluate a word under generator substitution
  int apply(const FreeWord& w) const;
  bool in_kernel(const FreeWord& w) const { return apply(w) == 0; }

  // the image subgroup, as a sorted list of element indices
  const std::vector<int>& image_subgroup() const { return image_elts_; }
  bool in_image(int g) const { return in_image_[g]; }
  // index of the kernel in F = order of the image subgroup
  int kernel_index() const { return static_cast<int>(image_elts_.size()); }

  bool operator==(const GroupHom& o) const {
    return rank_ == o.rank_ && target_ == o.target_ && images_ == o.images_;
  }

private:
  int rank_;
  GroupPtr target_;
  std::vector<int> images_;
  std::vector<int> image_elts_;
  std::vector<char> in_image_;
};

// An element of (Z/d)[G] (of Z[G] when d = 0): dense coefficient vector
// indexed by group element, residues kept canonical in [0, d) for d > 0.
class QuotRingElt {
public:
  QuotRingElt(GroupPtr target, int modulus);

  int modulus() const { return modulus_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& coeff(int g) const { return coeffs_[g]; }

  void add_term(int g, const Int& c);
  bool is_zero() const;

  bool operator==(const QuotRingElt& o) const;

private:
  int modulus_;
  GroupPtr target_;
  std::vector<Int> coeffs_;
};

QuotRingElt add(const QuotRingElt& a, const QuotRingElt& b);
QuotRingElt subtract(const QuotRingElt& a, const QuotRingElt& b);
QuotRingElt negate(const QuotRingElt& a);
QuotRingElt mul(const QuotRingElt& a, const QuotRingElt& b);

// Canonical rendering: terms in element-index order, the identity printed
// "e" and other elements "g<i>"; coefficient magnitudes omitted when 1,
// joined by " + " / " - "; the zero element renders "0".
std::string render(const QuotRingElt& u);

// The projection Z[F] -> Z[F/N] -> (Z/d)[F/N] realized in G: each word maps
// to its image element, coefficients collected and reduced mod d.  This is
// exactly reduction modulo the ideal Z[F](N-1) + dZ[F]: for normal N the
// ideal is two-sided and Z[F]/Z[F](N-1) is the group ring of F/N.
QuotRingElt pi_reduce(const RingElt& u, const GroupHom& hom, int d);

// Left side of the membership criterion: all derivatives with respect to
// generators outside K vanish after reduction.
bool criterion_holds(const FreeWord& v, const std::vector<int>& K,
                     const GroupHom& hom, int d);

// All |G|^rank generator-image tuples in lexicographic order (first
// generator's image is the most significant position).
std::vector<GroupHom> all_homs(int rank, const GroupPtr& target);
void enumerate_homs(int rank, const GroupPtr& target,
                    const std::function<void(const GroupHom&)>& fn);

}  // namespace foxcalc
