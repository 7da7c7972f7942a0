#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxcalc/finquot.hpp"
#include "foxcalc/freeword.hpp"
#include "foxcalc/groupring.hpp"

namespace foxcalc {

// Outcome of the one-relator nonvanishing test for D_n(r) mod Z[F](R-1),
// R = normal closure of r:
//  - ZeroIdentity: r conjugates to a core omitting x_n, giving the exact
//    ring identity D_n(r) = D_n(w)*(c-1)*w^-1 inside Z[F](R-1);
//  - NonzeroWitness: a finite quotient killing r in which the reduced
//    derivative stays nonzero, certifying nonvanishing;
//  - Unknown: the catalog ran out (the problem is only semi-decidable here).
enum class CertificateKind { ZeroIdentity, NonzeroWitness, Unknown };

struct Certificate {
  CertificateKind kind = CertificateKind::Unknown;
  int gen = 0;                          // the distinguished generator n
  FreeWord relator;
  // ZeroIdentity: relator = conjugator * core * conjugator^-1, core omits x_n
  std::optional<FreeWord> conjugator;
  std::optional<FreeWord> core;
  // NonzeroWitness: psi kills the relator yet pi(D_n(relator)) != 0 in Z[G]
  std::optional<GroupHom> witness;
  std::optional<QuotRingElt> reduced;

  Certificate(int gen, FreeWord relator)
      : gen(gen), relator(std::move(relator)) {}
};

// whether the cyclically reduced core of r still uses x_n
bool magnus_syntactic(const FreeWord& r, int n);

// Build a certificate for r and generator n, searching homs into catalog
// groups of order <= catalog_limit in catalog order (ascending group order,
// images lexicographic) for the witness case.  Both certificate kinds are
// re-verified exactly before being returned.
Certificate certify(const FreeWord& r, int n, int catalog_limit);

std::string render(const Certificate& cert);

// Finite-level examination of the relator r = x1^p [x2, x1^p]: the closed
// derivative formula D_2(r) = -x2^-1 x1^-p x2 x1^p + x1^p is checked
// exactly, and across every hom into a catalog p-group of order <= limit
// that kills r, psi(x1^p) must be the identity and the reduced derivative
// must vanish; a hom with psi(x1) nontrivial is reported when found.
struct GildenhuysReport {
  int p = 0;
  int limit = 0;
  FreeWord relator;
  RingElt derivative;
  bool derivative_matches = false;
  long long homs_seen = 0;
  long long kernel_homs = 0;
  long long assertion_failures = 0;
  bool witness_found = false;
  std::string witness_group;
  std::vector<int> witness_images;

  GildenhuysReport(FreeWord relator, RingElt derivative)
      : relator(std::move(relator)), derivative(std::move(derivative)) {}
};

GildenhuysReport gildenhuys_check(int p, int catalog_limit);
std::string render(const GildenhuysReport& rep);

// Sweep all cyclically reduced nonidentity relators of length <= maxlen
// with n = rank: syntactic-true relators should earn a NonzeroWitness
// (Unknown counts incompleteness, not failure), syntactic-false ones a
// verified ZeroIdentity.
struct FreiheitsSweepReport {
  int rank = 0;
  int maxlen = 0;
  int limit = 0;
  long long words = 0;
  long long zero_identities = 0;
  long long witnesses = 0;
  long long unknowns = 0;
  std::vector<std::string> unknown_words;  // first few, rendered
};

FreiheitsSweepReport freiheitssatz_equiv_sweep(int rank, int maxlen,
                                               int catalog_limit);
std::string render(const FreiheitsSweepReport& rep);

}  // namespace foxcalc
