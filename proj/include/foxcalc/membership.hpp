#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foxcalc/finquot.hpp"
#include "foxcalc/freeword.hpp"
#include "foxcalc/modmatrix.hpp"
#include "foxcalc/schreier.hpp"

namespace foxcalc {

// One decision problem: is v in F_K * (F_K cap N)^F * [N,N] * N^d, with
// N = ker(hom)?  K is a subset of {1..rank}, d >= 0 and != 1.
struct MembershipInstance {
  FreeWord v;
  std::vector<int> K;
  GroupHom hom;
  int d = 0;
};

enum class Theorem2Verdict { AgreeIn, AgreeOut, Disagree };

// Decision engine for a fixed homomorphism.  Caches the coset system, the
// per-K subgroup systems, and the per-(K, d) span of the normal closure's
// abelianized image, so sweeps pay the linear algebra once per configuration.
class MembershipSolver {
public:
  explicit MembershipSolver(const GroupHom& hom);

  const GroupHom& hom() const { return hom_; }
  const SchreierSystem& main_system() const { return main_; }
  const SchreierSystem& subgroup_system(const std::vector<int>& K);
  const ModMatrix& submodule(const std::vector<int>& K, int d);

  // Right side of the equivalence, decided exactly:
  //  (a) the image of v must land in phi(F_K), else v misses even F_K*N;
  //  (b) split off h = shortlex-minimal F_K-word with phi(h) = phi(v),
  //      leaving w = v*h^-1 in N;
  //  (c) span the image of (F_K cap N)^F in N/[N,N]N^d by the vectors of
  //      t*g*t^-1 over subgroup generators g and transversal reps t
  //      (N-conjugation is trivial mod [N,N], so transversal reps suffice);
  //  (d) answer whether w's vector lies in that span.
  bool member_side(const FreeWord& v, const std::vector<int>& K, int d);

  // Left side: all Fox derivatives outside K vanish in (Z/d)[G].
  bool criterion_side(const FreeWord& v, const std::vector<int>& K, int d);

  Theorem2Verdict theorem2_check(const FreeWord& v, const std::vector<int>& K,
                                 int d);

private:
  GroupHom hom_;
  SchreierSystem main_;
  std::map<std::vector<int>, SchreierSystem> subs_;
  std::map<std::pair<std::vector<int>, int>, ModMatrix> mats_;
};

// single-instance conveniences
bool member_side(const MembershipInstance& inst);
bool criterion_side(const MembershipInstance& inst);
Theorem2Verdict theorem2_check(const MembershipInstance& inst);

// K = empty, d = 0 specialization: derivative vanishing mod Z[F](N-1) holds
// exactly when v (a kernel word) is a product of commutators of N.  True
// when the two sides agree.
bool commutator_corollary_check(const FreeWord& v, const GroupHom& hom);

// Exhaustive cross-check of the equivalence over every hom into the group,
// every K subset, and every reduced word of length <= maxlen.
struct Theorem2SweepReport {
  int rank = 0;
  std::string group;
  int d = 0;
  int maxlen = 0;
  long long homs = 0;
  long long instances = 0;
  long long agree_in = 0;
  long long agree_out = 0;
  long long disagree = 0;
  std::vector<std::string> disagreements;  // first few, rendered
};

Theorem2SweepReport theorem2_sweep(int rank, const GroupPtr& group, int d,
                                   int maxlen);
std::string render(const Theorem2SweepReport& rep);

}  // namespace foxcalc
