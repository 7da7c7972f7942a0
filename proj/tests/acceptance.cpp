// Acceptance gate: eight independent checks, one per invocation argument,
// each printing a single PASS/FAIL line.  Run with no argument to execute
// all eight in order.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foxcalc/catalog.hpp"
#include "foxcalc/finquot.hpp"
#include "foxcalc/fox.hpp"
#include "foxcalc/freeword.hpp"
#include "foxcalc/freiheit.hpp"
#include "foxcalc/groupring.hpp"
#include "foxcalc/membership.hpp"
#include "foxcalc/modmatrix.hpp"
#include "foxcalc/schreier.hpp"
#include "testutil.hpp"

using foxcalc::FreeWord;
using foxcalc::GroupHom;
using foxcalc::GroupPtr;
using foxcalc::Int;
using foxcalc::RingElt;
using foxcalc::parse_word;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

// deterministic per-configuration seed
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// -------------------------------------------------------------------------
// 1: derivative identities on random input

Outcome check_fox_identities() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  long long failures = 0;

  testutil::Sampler rng(811'001);
  std::vector<FreeWord> words;
  for (int i = 0; i < 1000; ++i) {
    int rank = 1 + static_cast<int>(rng.below(4));
    words.push_back(rng.word_up_to(rank, 30));
  }

  for (const FreeWord& w : words) {
    // Eq.(2): w - aug(w) = sum_j (x_j - 1) D_j(w), re-verified internally
    try {
      foxcalc::fundamental_decomposition(RingElt::from_word(w));
    } catch (const std::logic_error&) {
      ++failures;
    }
    for (int k = 1; k <= w.rank(); ++k) {
      RingElt dk = foxcalc::fox_derive(k, w);
      // independent letter-by-letter oracle
      if (dk != testutil::naive_fox(k, w)) ++failures;
      // inverse formula
      RingElt lhs = foxcalc::fox_derive(k, foxcalc::inverse(w));
      if (lhs != -(dk * RingElt::from_word(foxcalc::inverse(w)))) ++failures;
    }
  }
  // product rule over consecutive pairs of matching rank
  for (std::size_t i = 0; i + 1 < words.size(); i += 2) {
    FreeWord u = words[i];
    FreeWord v(u.rank(), words[i + 1].rank() == u.rank()
                             ? words[i + 1].syllables()
                             : std::vector<foxcalc::Syllable>{});
    for (int k = 1; k <= u.rank(); ++k) {
      if (foxcalc::fox_derive(k, u * v) !=
          foxcalc::fox_derive(k, u) * RingElt::from_word(v) +
              foxcalc::fox_derive(k, v))
        ++failures;
    }
  }

  // 200 random ring elements: Eq.(2) linearly extended, plus additivity
  std::vector<RingElt> elts;
  for (int i = 0; i < 200; ++i) elts.push_back(rng.ring_elt(3, 5, 12));
  for (const RingElt& u : elts) {
    try {
      foxcalc::fundamental_decomposition(u);
    } catch (const std::logic_error&) {
      ++failures;
    }
  }
  for (std::size_t i = 0; i + 1 < elts.size(); i += 2) {
    for (int k = 1; k <= 3; ++k) {
      if (foxcalc::fox_derive(k, elts[i] + elts[i + 1]) !=
          foxcalc::fox_derive(k, elts[i]) + foxcalc::fox_derive(k, elts[i + 1]))
        ++failures;
    }
  }

  double dt = seconds_since(t0);
  if (failures > 0) {
    out.pass = false;
    out.detail = std::to_string(failures) + " identity failures";
  } else if (dt >= 10.0) {
    out.pass = false;
    out.detail = "exceeded the 10s budget: " + format_seconds(dt);
  } else {
    out.detail = "1000 words + 200 ring elements, all identities exact, " +
                 format_seconds(dt);
  }
  return out;
}

// -------------------------------------------------------------------------
// 2: conjugation congruence D_k(f^-1 n f) == D_k(n) f mod Z[F](N-1)

Outcome check_conjugation_formula() {
  Outcome out;
  long long checked = 0, failures = 0;
  for (const GroupPtr& g : foxcalc::builtin_catalog()) {
    if (g->order() > 8) continue;
    testutil::Sampler rng(fnv1a("conjugation:" + g->name()));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> images = {
          static_cast<int>(rng.below(static_cast<std::uint64_t>(g->order()))),
          static_cast<int>(rng.below(static_cast<std::uint64_t>(g->order())))};
      GroupHom hom(2, g, images);
      foxcalc::SchreierSystem sys = foxcalc::SchreierSystem::build(hom);

      // n: a short product of kernel generators, f: arbitrary
      FreeWord n(2);
      int factors = 1 + static_cast<int>(rng.below(3));
      for (int i = 0; i < factors; ++i) {
        const FreeWord& gen = sys.free_gen(
            static_cast<int>(rng.below(static_cast<std::uint64_t>(sys.free_rank()))));
        n = n * (rng.below(2) ? gen : foxcalc::inverse(gen));
      }
      FreeWord f = rng.word_up_to(2, 6);
      int k = 1 + static_cast<int>(rng.below(2));
      ++checked;
      if (!foxcalc::conjugation_formula_check(k, f, n, hom)) ++failures;
    }
  }
  out.pass = failures == 0;
  if (out.pass)
    out.detail = std::to_string(checked) +
                 " random (f,n,k) triples across all catalog groups of order "
                 "<= 8, zero failures";
  else
    out.detail = std::to_string(failures) + " congruence failures";
  return out;
}

// -------------------------------------------------------------------------
// 3: exhaustive + randomized two-sided agreement

Outcome check_theorem2_sweep() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  const std::vector<std::string> names = {"Z/2", "Z/3",    "Z/4", "Z/2xZ/2",
                                          "S3",  "D4",     "Q8"};
  const std::vector<int> ds = {0, 2, 3, 4};
  long long instances = 0, disagree = 0, random_checks = 0;
  std::string first_disagreement;

  for (const std::string& name : names) {
    GroupPtr g = foxcalc::find_group(name);
    if (!g) {
      out.pass = false;
      out.detail = "missing catalog group " + name;
      return out;
    }
    // every hom, every K subset, every reduced word of length <= 4
    for (int d : ds) {
      auto rep = foxcalc::theorem2_sweep(2, g, d, 4);
      instances += rep.instances;
      disagree += rep.disagree;
      if (rep.disagree > 0 && first_disagreement.empty())
        first_disagreement = rep.disagreements.front();
    }
    // 200 seeded random words of length <= 10 per (hom, K, d) configuration
    auto homs = foxcalc::all_homs(2, g);
    for (std::size_t hi = 0; hi < homs.size(); ++hi) {
      foxcalc::MembershipSolver solver(homs[hi]);
      for (int mask = 0; mask < 3; ++mask) {
        std::vector<int> K;
        if (mask == 1) K = {1};
        if (mask == 2) K = {2};
        for (int d : ds) {
          testutil::Sampler rng(fnv1a(name + ":" + std::to_string(hi) + ":" +
                                      std::to_string(mask) + ":" +
                                      std::to_string(d)));
          for (int i = 0; i < 200; ++i) {
            FreeWord v = rng.word_up_to(2, 10);
            ++random_checks;
            if (solver.theorem2_check(v, K, d) ==
                foxcalc::Theorem2Verdict::Disagree) {
              ++disagree;
              if (first_disagreement.empty())
                first_disagreement = "word " + foxcalc::render(v) + ", group " +
                                     name + ", hom " + std::to_string(hi) +
                                     ", K mask " + std::to_string(mask) +
                                     ", d " + std::to_string(d);
            }
          }
        }
      }
    }
  }

  double dt = seconds_since(t0);
  if (disagree > 0) {
    out.pass = false;
    out.detail = std::to_string(disagree) +
                 " disagreements; first: " + first_disagreement;
  } else if (dt >= 600.0) {
    out.pass = false;
    out.detail = "exceeded the 600s budget: " + format_seconds(dt);
  } else {
    out.detail = std::to_string(instances) + " exhaustive + " +
                 std::to_string(random_checks) +
                 " randomized instances, zero disagreements, " +
                 format_seconds(dt);
  }
  return out;
}

// -------------------------------------------------------------------------
// 4: the worked instance, re-derived through an explicit group extension

// The quotient F/[N,N]N^2 for N = ker(x1 -> 0, x2 -> 1 in Z/2) is a group
// of order 16: elements (v, i) with v in (Z/2)^3 spanned by the images
// a, b, c of the kernel generators x1, x2^2, x2*x1*x2^-1 and i the coset of
// x2.  Conjugation by x2 swaps a and c and fixes b, and the factor set
// contributes b on (1,1), because x2 * x2 = x2^2:
//   (v, i) (v', i') = (v + sigma^i(v') + [i = i' = 1] b, i + i')
namespace ext16 {

constexpr int A = 1, B = 2, C = 4;   // basis bits

int sigma(int v) {
  return (v & B) | ((v & A) ? C : 0) | ((v & C) ? A : 0);
}

int index_of(int v, int i) { return v + 8 * i; }

GroupPtr build() {
  std::vector<int> table(16 * 16);
  for (int v = 0; v < 8; ++v)
    for (int i = 0; i < 2; ++i)
      for (int w = 0; w < 8; ++w)
        for (int j = 0; j < 2; ++j) {
          int prod = v ^ (i ? sigma(w) : w) ^ ((i && j) ? B : 0);
          table[index_of(v, i) * 16 + index_of(w, j)] = index_of(prod, i ^ j);
        }
  // the constructor re-validates identity, Latin property, associativity
  return std::make_shared<foxcalc::FiniteGroup>("ext16", 16, table, 2);
}

}  // namespace ext16

Outcome check_worked_instance() {
  Outcome out;
  std::ostringstream why;

  GroupHom hom(2, foxcalc::find_group("Z/2"), {0, 1});
  FreeWord v = parse_word("x2^2", 2);
  std::vector<int> K = {1};
  foxcalc::MembershipSolver solver(hom);

  // stated facts about the instance
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      why << (why.tellp() > 0 ? "; " : "") << what;
    }
  };

  expect(!solver.criterion_side(v, K, 2), "criterion side should be OUT");
  expect(!solver.member_side(v, K, 2), "member side should be OUT");
  expect(solver.theorem2_check(v, K, 2) == foxcalc::Theorem2Verdict::AgreeOut,
         "verdict should be AgreeOut");

  foxcalc::QuotRingElt red =
      foxcalc::pi_reduce(foxcalc::fox_derive(2, v), hom, 2);
  expect(foxcalc::render(red) == "e + g1", "pi(D_2(v)) should be e + g1");

  expect(solver.main_system().abelianized_vector(v, 2) ==
             std::vector<Int>{0, 1, 0},
         "v should abelianize to (0,1,0)");
  foxcalc::ModMatrix expected_span(2, 3, {{1, 0, 0}, {0, 0, 1}});
  expect(solver.submodule(K, 2) == expected_span,
         "span should be {(1,0,0),(0,0,1)}");
  expect(!solver.submodule(K, 2).contains({0, 1, 0}),
         "(0,1,0) should fall outside the span");

  // independent oracle: materialize F/[N,N]N^2 and decide by closure
  GroupPtr E = ext16::build();
  GroupHom psi(2, E, {ext16::index_of(ext16::A, 0), ext16::index_of(0, 1)});
  expect(psi.kernel_index() == 16, "psi should be onto the extension");
  expect(psi.apply(v) == ext16::index_of(ext16::B, 0),
         "psi(x2^2) should be the b basis vector");

  // [N,N]N^2 dies under psi: kernel generators land in the abelian i=0
  // layer and their squares vanish, so ker psi = [N,N]N^2 by counting
  // [F : [N,N]N^2] = 2 * 8 = 16
  for (int gi = 0; gi < solver.main_system().free_rank(); ++gi) {
    int img = psi.apply(solver.main_system().free_gen(gi));
    expect(img < 8, "kernel generators should land at i = 0");
    expect(E->mul(img, img) == 0, "squares of kernel images should vanish");
    for (int gj = 0; gj < solver.main_system().free_rank(); ++gj) {
      int other = psi.apply(solver.main_system().free_gen(gj));
      expect(E->mul(img, other) == E->mul(other, img),
             "kernel images should commute");
    }
  }

  // normal closure of psi(x1) inside the extension
  std::set<int> closure;
  int x = psi.image_of(1);
  for (int g = 0; g < 16; ++g)
    closure.insert(E->mul(E->mul(g, x), E->inv(g)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members(closure.begin(), closure.end());
    for (int a : members)
      for (int b : members)
        if (closure.insert(E->mul(a, b)).second) grew = true;
    for (int a : members)
      if (closure.insert(E->inv(a)).second) grew = true;
  }
  expect(closure == std::set<int>{ext16::index_of(0, 0),
                                  ext16::index_of(ext16::A, 0),
                                  ext16::index_of(ext16::C, 0),
                                  ext16::index_of(ext16::A | ext16::C, 0)},
         "closure should be {e, a, c, a+c}");
  expect(closure.count(psi.apply(v)) == 0,
         "psi(v) should escape the closure: independent OUT");

  // the oracle decides every instance: v' in F_K (F_K cap N)^F [N,N] N^2
  // iff psi(v') lies in the closure (psi(F_K) is already inside it)
  expect(closure.count(psi.image_of(1)) == 1,
         "psi(F_K) should sit inside the closure");
  long long sweep_checked = 0, sweep_mismatch = 0;
  foxcalc::enumerate_reduced_words(2, 4, [&](const FreeWord& w) {
    ++sweep_checked;
    bool lib = solver.member_side(w, K, 2);
    bool oracle = closure.count(psi.apply(w)) == 1;
    if (lib != oracle) ++sweep_mismatch;
  });
  expect(sweep_mismatch == 0, "membership should match the extension oracle");

  out.pass = ok;
  if (ok)
    out.detail =
        "criterion=OUT member=OUT confirmed; extension closure {e,a,c,a+c} "
        "excludes b; oracle agrees on all " +
        std::to_string(sweep_checked) + " words of length <= 4";
  else
    out.detail = why.str();
  return out;
}

// -------------------------------------------------------------------------
// 5: Nielsen-Schreier count and exact rewriting for every catalog hom

Outcome check_nielsen_schreier() {
  Outcome out;
  long long homs = 0, rewrites = 0, failures = 0;
  std::string first;
  for (const GroupPtr& g : foxcalc::builtin_catalog()) {
    testutil::Sampler rng(fnv1a("schreier:" + g->name()));
    foxcalc::enumerate_homs(2, g, [&](const GroupHom& hom) {
      ++homs;
      foxcalc::SchreierSystem sys = foxcalc::SchreierSystem::build(hom);
      int m = sys.index();
      if (m != hom.kernel_index() || sys.free_rank() != m * (2 - 1) + 1) {
        ++failures;
        if (first.empty())
          first = "rank count failed for " + g->name() + " hom (" +
                  std::to_string(hom.image_of(1)) + "," +
                  std::to_string(hom.image_of(2)) + ")";
        return;
      }
      for (int i = 0; i < 100; ++i) {
        FreeWord w = rng.word_up_to(2, 10);
        FreeWord n =
            w * foxcalc::inverse(sys.rep_of_element(hom.apply(w)));
        try {
          auto scan = sys.rewrite(n);   // reconstruction re-checked inside
          ++rewrites;
          if (i < 5) {
            FreeWord prod(2);
            for (auto [pos, sign] : scan)
              prod = prod *
                     (sign > 0 ? sys.free_gen(pos)
                               : foxcalc::inverse(sys.free_gen(pos)));
            if (prod != n) ++failures;
          }
        } catch (const std::exception& e) {
          ++failures;
          if (first.empty())
            first = std::string("rewrite threw: ") + e.what();
        }
      }
    });
  }
  out.pass = failures == 0;
  if (out.pass)
    out.detail = std::to_string(homs) + " homs verified, " +
                 std::to_string(rewrites) +
                 " kernel-word rewrites reconstructed exactly";
  else
    out.detail = std::to_string(failures) + " failures; first: " + first;
  return out;
}

// -------------------------------------------------------------------------
// 6: every short relator earns a verified certificate

Outcome check_freiheitssatz_sweep() {
  Outcome out;
  auto rep = foxcalc::freiheitssatz_equiv_sweep(2, 5, 16);
  bool counts_ok = rep.words == 372 && rep.zero_identities == 10 &&
                   rep.zero_identities + rep.witnesses + rep.unknowns ==
                       rep.words;
  out.pass = rep.unknowns == 0 && counts_ok;
  if (out.pass)
    out.detail = std::to_string(rep.words) +
                 " cyclically reduced relators of length <= 5: " +
                 std::to_string(rep.zero_identities) + " zero identities, " +
                 std::to_string(rep.witnesses) +
                 " nonzero witnesses, zero unknown";
  else if (rep.unknowns != 0)
    out.detail = std::to_string(rep.unknowns) +
                 " relators left unknown at catalog limit 16; first: " +
                 (rep.unknown_words.empty() ? std::string("?")
                                            : rep.unknown_words.front());
  else
    out.detail = "unexpected counts: words " + std::to_string(rep.words) +
                 ", zero identities " + std::to_string(rep.zero_identities);
  return out;
}

// -------------------------------------------------------------------------
// 7: the pro-p counterexample at finite level, p = 2 and p = 3

Outcome check_gildenhuys() {
  Outcome out;
  std::ostringstream detail;
  for (int p : {2, 3}) {
    int limit = p == 2 ? 16 : 27;
    try {
      auto rep = foxcalc::gildenhuys_check(p, limit);
      if (!rep.derivative_matches) {
        out.pass = false;
        out.detail = "closed derivative mismatch at p=" + std::to_string(p);
        return out;
      }
      if (rep.assertion_failures != 0) {
        out.pass = false;
        out.detail = std::to_string(rep.assertion_failures) +
                     " vanishing failures at p=" + std::to_string(p);
        return out;
      }
      if (!rep.witness_found) {
        out.pass = false;
        out.detail = "no hom keeps x1 alive at p=" + std::to_string(p);
        return out;
      }
      detail << (p == 2 ? "" : "; ") << "p=" << p << ": " << rep.kernel_homs
             << "/" << rep.homs_seen
             << " homs kill the relator, derivative vanishes in every one, "
                "x1 survives under images (";
      for (std::size_t i = 0; i < rep.witness_images.size(); ++i)
        detail << (i ? "," : "") << rep.witness_images[i];
      detail << ") into " << rep.witness_group;
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception at p=") + std::to_string(p) + ": " +
                   e.what();
      return out;
    }
  }
  out.detail = detail.str();
  return out;
}

// -------------------------------------------------------------------------
// 8: byte-identical reports across repeated runs

Outcome check_determinism() {
  Outcome out;
  auto run_all = [] {
    std::ostringstream os;
    os << foxcalc::render(
        foxcalc::theorem2_sweep(2, foxcalc::find_group("D4"), 2, 3));
    os << foxcalc::render(
        foxcalc::theorem2_sweep(2, foxcalc::find_group("Z/3"), 0, 3));
    os << foxcalc::render(foxcalc::freiheitssatz_equiv_sweep(2, 4, 16));
    os << foxcalc::render(foxcalc::gildenhuys_check(2, 16));
    os << foxcalc::render(foxcalc::gildenhuys_check(3, 27));
    return os.str();
  };
  std::string first = run_all();
  std::string second = run_all();
  out.pass = !first.empty() && first == second;
  out.detail = out.pass ? "two runs of every sweep render byte-identically (" +
                              std::to_string(first.size()) + " bytes)"
                        : "renders differ between runs";
  return out;
}

// -------------------------------------------------------------------------

struct Criterion {
  const char* slug;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"fox_identities", check_fox_identities},
    {"conjugation_formula", check_conjugation_formula},
    {"theorem2_sweep", check_theorem2_sweep},
    {"worked_instance", check_worked_instance},
    {"nielsen_schreier", check_nielsen_schreier},
    {"freiheitssatz_sweep", check_freiheitssatz_sweep},
    {"gildenhuys", check_gildenhuys},
    {"determinism", check_determinism},
};

int run_one(int idx) {
  const Criterion& c = kCriteria[idx - 1];
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("unhandled exception: ") + e.what();
  }
  std::cout << "ACCEPTANCE " << idx << " " << c.slug << ": "
            << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")\n";
  return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: acceptance [1-8]\n";
    return 2;
  }
  if (argc == 2) {
    int idx = std::atoi(argv[1]);
    if (idx < 1 || idx > 8) {
      std::cerr << "usage: acceptance [1-8]\n";
      return 2;
    }
    return run_one(idx);
  }
  int rc = 0;
  for (int idx = 1; idx <= 8; ++idx) rc |= run_one(idx);
  return rc;
}
