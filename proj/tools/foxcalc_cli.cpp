// Command-line front end over the C interface: word derivatives, the group
// catalog, coset systems, the membership equivalence, and the one-relator
// certificates, each as a subcommand printing a plain-text report.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "foxcalc.h"

namespace {

struct ContextDeleter {
  void operator()(fxc_context* c) const { fxc_context_free(c); }
};
struct GroupDeleter {
  void operator()(fxc_group* g) const { fxc_group_free(g); }
};

using Context = std::unique_ptr<fxc_context, ContextDeleter>;
using Group = std::unique_ptr<fxc_group, GroupDeleter>;

int report_failure(const fxc_context* ctx, fxc_status) {
  std::fprintf(stderr, "error: %s\n", fxc_context_last_error(ctx));
  return 1;
}

int images_mismatch(int rank, std::size_t given) {
  std::fprintf(stderr, "error: expected %d images, got %zu\n", rank, given);
  return 1;
}

int print_and_free(char* text) {
  std::fputs(text, stdout);
  fxc_string_free(text);
  return 0;
}

Group lookup_group(fxc_context* ctx, const std::string& name, fxc_status* st) {
  fxc_group* g = nullptr;
  *st = fxc_group_builtin(ctx, name.c_str(), &g);
  return Group(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Fox free-differential-calculus toolkit"};
  app.require_subcommand(1);
  Context ctx(fxc_context_new());

  // ---- derive ----
  int d_rank = 2, d_k = 1;
  std::string d_word;
  auto* derive = app.add_subcommand("derive", "Fox derivative of a word");
  derive->add_option("--rank", d_rank, "free group rank")->required();
  derive->add_option("--k", d_k, "derivative index")->required();
  derive->add_option("--word", d_word, "word to differentiate")->required();

  // ---- catalog ----
  auto* catalog = app.add_subcommand("catalog", "built-in group library");
  auto* cat_list = catalog->add_subcommand("list", "names and orders");
  std::string cat_name;
  auto* cat_show = catalog->add_subcommand("show", "table of one group");
  cat_show->add_option("name", cat_name, "group name")->required();
  catalog->require_subcommand(1);

  // ---- schreier ----
  int s_rank = 2;
  std::string s_group;
  std::vector<int> s_images;
  auto* schreier =
      app.add_subcommand("schreier", "coset transversal and kernel generators");
  schreier->add_option("--rank", s_rank, "free group rank")->required();
  schreier->add_option("--group", s_group, "target group name")->required();
  schreier->add_option("--images", s_images, "generator images, one per generator")
      ->required()
      ->delimiter(',');

  // ---- theorem2 ----
  int t_rank = 2, t_d = 0;
  std::string t_group, t_word;
  std::vector<int> t_images, t_K;
  auto* theorem2 = app.add_subcommand(
      "theorem2", "derivative criterion vs. subgroup membership, one word");
  theorem2->add_option("--rank", t_rank, "free group rank")->required();
  theorem2->add_option("--group", t_group, "target group name")->required();
  theorem2->add_option("--images", t_images, "generator images")
      ->required()
      ->delimiter(',');
  theorem2->add_option("--d", t_d, "modulus (0 for integers, never 1)")
      ->required();
  theorem2->add_option("--K", t_K, "kept generator indices")->delimiter(',');
  theorem2->add_option("--word", t_word, "word to test")->required();

  // ---- theorem2-sweep ----
  int w_rank = 2, w_d = 0, w_maxlen = 4;
  std::string w_group;
  auto* sweep = app.add_subcommand(
      "theorem2-sweep", "exhaustive equivalence check over homs, K, words");
  sweep->add_option("--rank", w_rank, "free group rank")->required();
  sweep->add_option("--group", w_group, "target group name")->required();
  sweep->add_option("--d", w_d, "modulus (0 for integers, never 1)")->required();
  sweep->add_option("--maxlen", w_maxlen, "maximum word length")->required();

  // ---- freiheit ----
  int f_rank = 2, f_n = 2, f_limit = 16;
  std::string f_word;
  auto* freiheit = app.add_subcommand(
      "freiheit", "nonvanishing certificate for a one-relator derivative");
  freiheit->add_option("--rank", f_rank, "free group rank")->required();
  freiheit->add_option("--n", f_n, "distinguished generator index")->required();
  freiheit->add_option("--word", f_word, "relator")->required();
  freiheit->add_option("--limit", f_limit, "catalog order limit");

  // ---- freiheit-sweep ----
  int fs_rank = 2, fs_maxlen = 3, fs_limit = 16;
  auto* fsweep = app.add_subcommand(
      "freiheit-sweep", "certificates for all short cyclically reduced relators");
  fsweep->add_option("--rank", fs_rank, "free group rank")->required();
  fsweep->add_option("--maxlen", fs_maxlen, "maximum relator length")->required();
  fsweep->add_option("--limit", fs_limit, "catalog order limit");

  // ---- gildenhuys ----
  int g_p = 2, g_limit = 16;
  auto* gildenhuys = app.add_subcommand(
      "gildenhuys", "finite-level check of the relator x1^p [x2, x1^p]");
  gildenhuys->add_option("--p", g_p, "prime, 2 or 3")->required();
  gildenhuys->add_option("--limit", g_limit, "catalog order limit");

  CLI11_PARSE(app, argc, argv);

  fxc_status st = FXC_OK;
  char* text = nullptr;

  if (*derive) {
    st = fxc_derive(ctx.get(), d_rank, d_k, d_word.c_str(), &text);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    return print_and_free(text);
  }

  if (*cat_list) {
    st = fxc_catalog_list(ctx.get(), &text);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    return print_and_free(text);
  }

  if (*cat_show) {
    Group g = lookup_group(ctx.get(), cat_name, &st);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    st = fxc_group_save(ctx.get(), g.get(), &text);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    return print_and_free(text);
  }

  if (*schreier) {
    if (static_cast<int>(s_images.size()) != s_rank)
      return images_mismatch(s_rank, s_images.size());
    Group g = lookup_group(ctx.get(), s_group, &st);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    st = fxc_schreier(ctx.get(), s_rank, g.get(), s_images.data(), &text);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    return print_and_free(text);
  }

  if (*theorem2) {
    if (static_cast<int>(t_images.size()) != t_rank)
      return images_mismatch(t_rank, t_images.size());
    Group g = lookup_group(ctx.get(), t_group, &st);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    int disagree = 0;
    st = fxc_theorem2(ctx.get(), t_rank, g.get(), t_images.data(), t_d,
                      t_K.data(), static_cast<int>(t_K.size()),
                      t_word.c_str(), &text, &disagree);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    print_and_free(text);
    return disagree ? 1 : 0;
  }

  if (*sweep) {
    Group g = lookup_group(ctx.get(), w_group, &st);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    long long disagree = 0;
    st = fxc_theorem2_sweep(ctx.get(), w_rank, g.get(), w_d, w_maxlen, &text,
                            &disagree);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    print_and_free(text);
    return disagree != 0 ? 1 : 0;
  }

  if (*freiheit) {
    int kind = 2;
    st = fxc_freiheit(ctx.get(), f_rank, f_n, f_word.c_str(), f_limit, &text,
                      &kind);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    print_and_free(text);
    return kind == 2 ? 2 : 0;
  }

  if (*fsweep) {
    long long unknowns = 0;
    st = fxc_freiheit_sweep(ctx.get(), fs_rank, fs_maxlen, fs_limit, &text,
                            &unknowns);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    return print_and_free(text);
  }

  if (*gildenhuys) {
    int ok = 0;
    st = fxc_gildenhuys(ctx.get(), g_p, g_limit, &text, &ok);
    if (st != FXC_OK) return report_failure(ctx.get(), st);
    print_and_free(text);
    return ok ? 0 : 1;
  }

  return 0;
}
