#include "foxcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "foxcalc/catalog.hpp"
#include "foxcalc/finquot.hpp"
#include "foxcalc/fox.hpp"
#include "foxcalc/freeword.hpp"
#include "foxcalc/freiheit.hpp"
#include "foxcalc/membership.hpp"
#include "foxcalc/schreier.hpp"

struct fxc_context {
  std::string last_error;
};

struct fxc_word {
  foxcalc::FreeWord w;
};

struct fxc_group {
  foxcalc::GroupPtr g;
};

namespace {

using foxcalc::FreeWord;
using foxcalc::GroupHom;
using foxcalc::GroupPtr;

fxc_status fail(fxc_context* ctx, fxc_status code, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  return code;
}

// runs the body, translating exceptions into statuses on the context
template <typename Fn>
fxc_status guarded(fxc_context* ctx, fxc_status error_code, Fn&& fn) {
  if (!ctx) return FXC_ERROR_INVALID_ARGUMENT;
  try {
    fn();
    ctx->last_error.clear();
    return FXC_OK;
  } catch (const std::domain_error& e) {
    return fail(ctx, FXC_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, error_code, e.what());
  } catch (const std::logic_error& e) {
    return fail(ctx, FXC_ERROR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, FXC_ERROR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

GroupHom make_hom(int rank, const fxc_group* g, const int* images) {
  if (!g || !g->g) throw std::invalid_argument("null group handle");
  if (!images) throw std::invalid_argument("null image list");
  return GroupHom(rank, g->g, std::vector<int>(images, images + rank));
}

}  // namespace

fxc_context* fxc_context_new(void) { return new fxc_context; }

void fxc_context_free(fxc_context* ctx) { delete ctx; }

const char* fxc_context_last_error(const fxc_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

void fxc_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------------------
// words

fxc_status fxc_word_parse(fxc_context* ctx, int rank, const char* text,
                          fxc_word** out) {
  return guarded(ctx, FXC_ERROR_PARSE, [&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new fxc_word{foxcalc::parse_word(text, rank)};
  });
}

fxc_status fxc_word_render(fxc_context* ctx, const fxc_word* w, char** out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!w || !out) throw std::invalid_argument("null argument");
    *out = dup_string(foxcalc::render(w->w));
  });
}

fxc_status fxc_word_multiply(fxc_context* ctx, const fxc_word* a,
                             const fxc_word* b, fxc_word** out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!a || !b || !out) throw std::invalid_argument("null argument");
    *out = new fxc_word{foxcalc::multiply(a->w, b->w)};
  });
}

fxc_status fxc_word_invert(fxc_context* ctx, const fxc_word* a,
                           fxc_word** out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!a || !out) throw std::invalid_argument("null argument");
    *out = new fxc_word{foxcalc::inverse(a->w)};
  });
}

void fxc_word_free(fxc_word* w) { delete w; }

// ---------------------------------------------------------------------------
// groups

fxc_status fxc_group_builtin(fxc_context* ctx, const char* name,
                             fxc_group** out) {
  return guarded(ctx, FXC_ERROR_NOT_FOUND, [&] {
    if (!name || !out) throw std::invalid_argument("null argument");
    GroupPtr g = foxcalc::find_group(name);
    if (!g)
      throw std::invalid_argument(std::string("no builtin group named '") +
                                  name + "'");
    *out = new fxc_group{std::move(g)};
  });
}

fxc_status fxc_group_load(fxc_context* ctx, const char* text, fxc_group** out) {
  return guarded(ctx, FXC_ERROR_PARSE, [&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new fxc_group{
        std::make_shared<foxcalc::FiniteGroup>(foxcalc::load_group(text))};
  });
}

fxc_status fxc_group_save(fxc_context* ctx, const fxc_group* g, char** out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!g || !g->g || !out) throw std::invalid_argument("null argument");
    *out = dup_string(foxcalc::save_group(*g->g));
  });
}

fxc_status fxc_group_order(fxc_context* ctx, const fxc_group* g, int* out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!g || !g->g || !out) throw std::invalid_argument("null argument");
    *out = g->g->order();
  });
}

void fxc_group_free(fxc_group* g) { delete g; }

// ---------------------------------------------------------------------------
// reports

fxc_status fxc_derive(fxc_context* ctx, int rank, int k, const char* word,
                      char** out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!word || !out) throw std::invalid_argument("null argument");
    FreeWord w = foxcalc::parse_word(word, rank);
    *out = dup_string(foxcalc::render(foxcalc::fox_derive(k, w)) + "\n");
  });
}

fxc_status fxc_catalog_list(fxc_context* ctx, char** out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!out) throw std::invalid_argument("null argument");
    std::ostringstream os;
    for (const GroupPtr& g : foxcalc::builtin_catalog()) {
      os << g->name() << " order " << g->order();
      if (g->pgroup_prime() != 0) os << " pgroup " << g->pgroup_prime();
      os << "\n";
    }
    *out = dup_string(os.str());
  });
}

fxc_status fxc_schreier(fxc_context* ctx, int rank, const fxc_group* g,
                        const int* images, char** out) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!out) throw std::invalid_argument("null argument");
    auto sys = foxcalc::SchreierSystem::build(make_hom(rank, g, images));
    std::ostringstream os;
    os << "index " << sys.index() << "\n";
    os << "transversal:\n";
    for (int s = 0; s < sys.index(); ++s)
      os << "  " << s << ": " << foxcalc::render(sys.rep(s)) << "\n";
    os << "generators:\n";
    for (int p = 0; p < sys.free_rank(); ++p)
      os << "  " << p << ": " << foxcalc::render(sys.free_gen(p)) << "\n";
    *out = dup_string(os.str());
  });
}

fxc_status fxc_theorem2(fxc_context* ctx, int rank, const fxc_group* g,
                        const int* images, int d, const int* K, int n_k,
                        const char* word, char** out, int* disagree) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!word || !out) throw std::invalid_argument("null argument");
    if (n_k > 0 && !K) throw std::invalid_argument("null K list");
    GroupHom hom = make_hom(rank, g, images);
    FreeWord v = foxcalc::parse_word(word, rank);
    std::vector<int> ks(K, K + n_k);
    foxcalc::MembershipSolver solver(hom);
    bool lhs = solver.criterion_side(v, ks, d);
    bool rhs = solver.member_side(v, ks, d);
    std::ostringstream os;
    os << "criterion=" << (lhs ? "IN" : "OUT") << " member="
       << (rhs ? "IN" : "OUT") << " verdict="
       << (lhs == rhs ? "AGREE" : "DISAGREE") << "\n";
    *out = dup_string(os.str());
    if (disagree) *disagree = lhs == rhs ? 0 : 1;
  });
}

fxc_status fxc_theorem2_sweep(fxc_context* ctx, int rank, const fxc_group* g,
                              int d, int maxlen, char** out,
                              long long* disagree) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!g || !g->g || !out) throw std::invalid_argument("null argument");
    auto rep = foxcalc::theorem2_sweep(rank, g->g, d, maxlen);
    *out = dup_string(foxcalc::render(rep));
    if (disagree) *disagree = rep.disagree;
  });
}

fxc_status fxc_freiheit(fxc_context* ctx, int rank, int n, const char* word,
                        int catalog_limit, char** out, int* kind) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!word || !out) throw std::invalid_argument("null argument");
    FreeWord r = foxcalc::parse_word(word, rank);
    auto cert = foxcalc::certify(r, n, catalog_limit);
    *out = dup_string(foxcalc::render(cert));
    if (kind) {
      switch (cert.kind) {
        case foxcalc::CertificateKind::ZeroIdentity: *kind = 0; break;
        case foxcalc::CertificateKind::NonzeroWitness: *kind = 1; break;
        case foxcalc::CertificateKind::Unknown: *kind = 2; break;
      }
    }
  });
}

fxc_status fxc_freiheit_sweep(fxc_context* ctx, int rank, int maxlen,
                              int catalog_limit, char** out,
                              long long* unknowns) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!out) throw std::invalid_argument("null argument");
    auto rep = foxcalc::freiheitssatz_equiv_sweep(rank, maxlen, catalog_limit);
    *out = dup_string(foxcalc::render(rep));
    if (unknowns) *unknowns = rep.unknowns;
  });
}

fxc_status fxc_gildenhuys(fxc_context* ctx, int p, int catalog_limit,
                          char** out, int* ok) {
  return guarded(ctx, FXC_ERROR_INVALID_ARGUMENT, [&] {
    if (!out) throw std::invalid_argument("null argument");
    auto rep = foxcalc::gildenhuys_check(p, catalog_limit);
    *out = dup_string(foxcalc::render(rep));
    if (ok)
      *ok = rep.derivative_matches && rep.assertion_failures == 0 &&
                    rep.witness_found
                ? 1
                : 0;
  });
}
