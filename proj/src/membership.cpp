#include "foxcalc/membership.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace foxcalc {

namespace {

std::vector<int> canonical_K(const std::vector<int>& K, int rank) {
  std::vector<int> k = K;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  for (int g : k)
    if (g < 1 || g > rank)
      throw std::invalid_argument("K contains an out-of-range generator");
  return k;
}

}  // namespace

MembershipSolver::MembershipSolver(const GroupHom& hom)
    : hom_(hom), main_(SchreierSystem::build(hom)) {}

const SchreierSystem& MembershipSolver::subgroup_system(const std::vector<int>& K) {
  std::vector<int> k = canonical_K(K, hom_.rank());
  auto it = subs_.find(k);
  if (it == subs_.end())
    it = subs_.emplace(k, subgroup_schreier(hom_, k)).first;
  return it->second;
}

const ModMatrix& MembershipSolver::submodule(const std::vector<int>& K, int d) {
  int m = normalize_modulus(d);
  std::vector<int> k = canonical_K(K, hom_.rank());
  auto key = std::make_pair(k, m);
  auto it = mats_.find(key);
  if (it != mats_.end()) return it->second;
  const SchreierSystem& sub = subgroup_system(k);
  std::vector<std::vector<Int>> gens;
  for (int pos = 0; pos < sub.free_rank(); ++pos)
    for (int t = 0; t < main_.index(); ++t) {
      FreeWord conj =
          main_.rep(t) * sub.free_gen(pos) * inverse(main_.rep(t));
      gens.push_back(main_.abelianized_vector(conj, m));
    }
  return mats_.emplace(key, ModMatrix(m, main_.free_rank(), gens)).first->second;
}

bool MembershipSolver::member_side(const FreeWord& v, const std::vector<int>& K,
                                   int d) {
  int m = normalize_modulus(d);
  if (v.rank() != hom_.rank())
    throw std::invalid_argument("word rank does not match homomorphism");
  std::vector<int> k = canonical_K(K, hom_.rank());
  const SchreierSystem& sub = subgroup_system(k);
  int gv = hom_.apply(v);
  if (!sub.contains_element(gv)) return false;
  FreeWord w = v * inverse(sub.rep_of_element(gv));
  return submodule(k, m).contains(main_.abelianized_vector(w, m));
}

bool MembershipSolver::criterion_side(const FreeWord& v,
                                      const std::vector<int>& K, int d) {
  return criterion_holds(v, canonical_K(K, hom_.rank()), hom_, d);
}

Theorem2Verdict MembershipSolver::theorem2_check(const FreeWord& v,
                                                 const std::vector<int>& K,
                                                 int d) {
  bool lhs = criterion_side(v, K, d);
  bool rhs = member_side(v, K, d);
  if (lhs != rhs) return Theorem2Verdict::Disagree;
  return lhs ? Theorem2Verdict::AgreeIn : Theorem2Verdict::AgreeOut;
}

bool member_side(const MembershipInstance& inst) {
  return MembershipSolver(inst.hom).member_side(inst.v, inst.K, inst.d);
}

bool criterion_side(const MembershipInstance& inst) {
  return MembershipSolver(inst.hom).criterion_side(inst.v, inst.K, inst.d);
}

Theorem2Verdict theorem2_check(const MembershipInstance& inst) {
  return MembershipSolver(inst.hom).theorem2_check(inst.v, inst.K, inst.d);
}

bool commutator_corollary_check(const FreeWord& v, const GroupHom& hom) {
  if (!hom.in_kernel(v))
    throw std::domain_error("word is not in the kernel");
  return MembershipSolver(hom).theorem2_check(v, {}, 0) !=
         Theorem2Verdict::Disagree;
}

Theorem2SweepReport theorem2_sweep(int rank, const GroupPtr& group, int d,
                                   int maxlen) {
  int m = normalize_modulus(d);
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (!group) throw std::invalid_argument("null group");
  Theorem2SweepReport rep;
  rep.rank = rank;
  rep.group = group->name();
  rep.d = m;
  rep.maxlen = maxlen;

  std::vector<std::vector<int>> ksets;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> k;
    for (int g = 1; g <= rank; ++g)
      if (mask & (1 << (g - 1))) k.push_back(g);
    ksets.push_back(std::move(k));
  }

  for (const GroupHom& hom : all_homs(rank, group)) {
    ++rep.homs;
    MembershipSolver solver(hom);
    for (const auto& K : ksets)
      enumerate_reduced_words(rank, maxlen, [&](const FreeWord& w) {
        ++rep.instances;
        switch (solver.theorem2_check(w, K, m)) {
          case Theorem2Verdict::AgreeIn: ++rep.agree_in; break;
          case Theorem2Verdict::AgreeOut: ++rep.agree_out; break;
          case Theorem2Verdict::Disagree:
            ++rep.disagree;
            if (rep.disagreements.size() < 10) {
              std::ostringstream os;
              os << "word " << render(w) << ", K {";
              for (std::size_t i = 0; i < K.size(); ++i)
                os << (i ? "," : "") << K[i];
              os << "}, images (";
              for (std::size_t i = 0; i < hom.images().size(); ++i)
                os << (i ? "," : "") << hom.images()[i];
              os << ")";
              rep.disagreements.push_back(os.str());
            }
            break;
        }
      });
  }
  return rep;
}

std::string render(const Theorem2SweepReport& rep) {
  std::ostringstream os;
  os << "theorem2 sweep: rank " << rep.rank << ", group " << rep.group
     << ", d " << rep.d << ", maxlen " << rep.maxlen << "\n";
  os << "homs " << rep.homs << ", instances " << rep.instances << "\n";
  os << "agree_in " << rep.agree_in << ", agree_out " << rep.agree_out
     << ", disagree " << rep.disagree << "\n";
  for (const std::string& s : rep.disagreements)
    os << "DISAGREE: " << s << "\n";
  return os.str();
}

}  // namespace foxcalc
