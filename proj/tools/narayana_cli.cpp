#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "narayana/narayana.h"

using nlohmann::ordered_json;

namespace {

// One slot per flag; a subcommand leaves the pointers it does not offer null.
struct OptPtrs {
  CLI::Option *family = nullptr, *n = nullptr, *m = nullptr, *t = nullptr;
  CLI::Option *alpha = nullptr, *beta = nullptr;
  CLI::Option *family2 = nullptr, *n2 = nullptr, *m2 = nullptr, *t2 = nullptr;
  CLI::Option *alpha2 = nullptr, *beta2 = nullptr, *chain = nullptr;
  CLI::Option *max_n = nullptr, *max_t = nullptr, *folds = nullptr;
  CLI::Option *identity = nullptr, *q = nullptr, *q_decompose = nullptr;
  CLI::Option *certify = nullptr;
  CLI::Option *format = nullptr, *out = nullptr, *jobs = nullptr;
  CLI::Option *refine_cap = nullptr;
};

struct Flags {
  std::string family, family2, alpha, beta, alpha2, beta2, identity;
  std::string format = "json", out;
  long n = 0, m = 0, t = 0, n2 = 0, m2 = 0, t2 = 0;
  long max_n = 0, max_t = 0, jobs = 0, refine_cap = -1;
  int folds = 5;
  bool chain = false, q = false, q_decompose = false, certify = false;
};

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

ordered_json make_config(const std::string& cmd, const Flags& f,
                         const OptPtrs& o) {
  ordered_json cfg;
  cfg["command"] = cmd;
  if (given(o.family)) cfg["family"] = f.family;
  if (given(o.n)) cfg["n"] = f.n;
  if (given(o.m)) cfg["m"] = f.m;
  if (given(o.t)) cfg["t"] = f.t;
  if (given(o.alpha)) cfg["alpha"] = f.alpha;
  if (given(o.beta)) cfg["beta"] = f.beta;
  if (given(o.family2)) cfg["family2"] = f.family2;
  if (given(o.n2)) cfg["n2"] = f.n2;
  if (given(o.m2)) cfg["m2"] = f.m2;
  if (given(o.t2)) cfg["t2"] = f.t2;
  if (given(o.alpha2)) cfg["alpha2"] = f.alpha2;
  if (given(o.beta2)) cfg["beta2"] = f.beta2;
  if (given(o.chain)) cfg["chain"] = true;
  if (given(o.max_n)) cfg["max_n"] = f.max_n;
  if (given(o.max_t)) cfg["max_t"] = f.max_t;
  if (given(o.folds)) cfg["folds"] = f.folds;
  if (given(o.identity)) cfg["identity"] = f.identity;
  if (given(o.q)) cfg["q_probe"] = true;
  if (given(o.q_decompose)) cfg["q_decompose"] = true;
  if (given(o.certify)) cfg["certify"] = true;
  cfg["format"] = f.format;
  if (given(o.out)) cfg["out"] = f.out;
  if (given(o.jobs)) cfg["jobs"] = f.jobs;
  if (given(o.refine_cap)) cfg["refine_cap"] = f.refine_cap;
  return cfg;
}

void add_family_opts(CLI::App* c, Flags& f, OptPtrs& o, bool required) {
  auto* fam = c->add_option(
      "--family", f.family,
      "family name: A, B, D, rect, overline, underline, F, bm, Q");
  if (required) fam->required();
  o.family = fam;
  o.n = c->add_option("--n", f.n, "member index");
  o.m = c->add_option("--m", f.m, "second index (family rect)");
  o.t = c->add_option("--t", f.t, "shift (families overline, underline)");
  o.alpha = c->add_option("--alpha", f.alpha,
                          "first weight of family F, rational string");
  o.beta = c->add_option("--beta", f.beta,
                         "second weight of family F, rational string");
}

void add_output_opts(CLI::App* c, Flags& f, OptPtrs& o) {
  o.format = c->add_option("--format", f.format, "output format")
                 ->check(CLI::IsMember({"json", "csv", "text"}))
                 ->capture_default_str();
  o.out = c->add_option("--out", f.out, "write the report to this path");
  o.jobs = c->add_option("--jobs", f.jobs, "worker threads (0 = auto)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and zero analysis of Narayana-type "
               "polynomial families"};
  app.set_version_flag("--version", nara_version());
  app.require_subcommand(1);

  Flags f;
  std::map<const CLI::App*, OptPtrs> ptrs;

  CLI::App* gen = app.add_subcommand(
      "gen", "construct one member and print its coefficients");
  {
    OptPtrs o;
    add_family_opts(gen, f, o, true);
    add_output_opts(gen, f, o);
    ptrs[gen] = o;
  }

  CLI::App* roots = app.add_subcommand(
      "roots", "decide real-rootedness and isolate the real zeros");
  {
    OptPtrs o;
    add_family_opts(roots, f, o, true);
    o.max_n = roots->add_option("--max-n", f.max_n,
                                "sweep the member index up to this bound");
    o.refine_cap = roots->add_option("--refine-cap", f.refine_cap,
                                     "bisection budget per comparison");
    add_output_opts(roots, f, o);
    ptrs[roots] = o;
  }

  CLI::App* inter = app.add_subcommand(
      "interlace", "decide whether the zeros of two members alternate");
  {
    OptPtrs o;
    add_family_opts(inter, f, o, true);
    o.family2 = inter->add_option("--family2", f.family2,
                                  "second family (defaults to --family)");
    o.n2 = inter->add_option("--n2", f.n2, "second member index");
    o.m2 = inter->add_option("--m2", f.m2, "second rect index");
    o.t2 = inter->add_option("--t2", f.t2, "second shift");
    o.alpha2 = inter->add_option("--alpha2", f.alpha2, "second first-weight");
    o.beta2 = inter->add_option("--beta2", f.beta2, "second second-weight");
    o.chain = inter->add_flag(
        "--chain", f.chain,
        "check consecutive members n, n+1 up to --max-n instead of a pair");
    o.max_n = inter->add_option("--max-n", f.max_n, "chain upper index");
    o.refine_cap = inter->add_option("--refine-cap", f.refine_cap,
                                     "bisection budget per comparison");
    add_output_opts(inter, f, o);
    ptrs[inter] = o;
  }

  CLI::App* recur = app.add_subcommand(
      "recur", "verify a three-term identity exactly over a sweep");
  {
    OptPtrs o;
    o.identity = recur
                     ->add_option("--identity", f.identity,
                                  "which identity: f, overline, underline")
                     ->check(CLI::IsMember({"f", "overline", "underline"}))
                     ->required();
    o.max_n = recur->add_option("--max-n", f.max_n, "index sweep bound");
    o.max_t = recur->add_option("--max-t", f.max_t,
                                "shift sweep bound (overline/underline)");
    add_output_opts(recur, f, o);
    ptrs[recur] = o;
  }

  CLI::App* lc = app.add_subcommand(
      "logconcave", "iterate the square-minus-neighbor-product operator");
  {
    OptPtrs o;
    add_family_opts(lc, f, o, false);
    o.folds = lc->add_option("--folds", f.folds, "iterations to verify")
                  ->capture_default_str();
    o.max_n = lc->add_option("--max-n", f.max_n, "sweep bound");
    o.q = lc->add_flag("--q", f.q,
                       "probe real-rootedness of the iterated-operator family");
    o.q_decompose = lc->add_flag(
        "--q-decompose", f.q_decompose,
        "compare the rectangular double-sum expansion against the operator");
    o.certify = lc->add_flag(
        "--certify", f.certify,
        "certify all folds at once via real-rootedness when possible");
    add_output_opts(lc, f, o);
    ptrs[lc] = o;
  }

  CLI::App* suite = app.add_subcommand(
      "suite", "run the full verification battery (one record per criterion)");
  {
    OptPtrs o;
    o.max_n = suite->add_option(
        "--max-n", f.max_n, "shrink every index axis to this quick-pass bound");
    o.max_t = suite->add_option("--max-t", f.max_t, "shift axis bound");
    add_output_opts(suite, f, o);
    ptrs[suite] = o;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* picked = app.get_subcommands().front();
  const OptPtrs& o = ptrs[picked];
  const ordered_json cfg = make_config(picked->get_name(), f, o);

  char* output = nullptr;
  int exit_code = 0;
  const nara_status st =
      nara_run_command(cfg.dump().c_str(), &output, &exit_code);
  if (st != NARA_OK) {
    std::cerr << "error: " << nara_last_error() << "\n";
    return 2;
  }

  if (given(o.out)) {
    std::ofstream os(f.out, std::ios::binary);
    os << output;
    os.close();
    if (!os) {
      std::cerr << "error: cannot write " << f.out << "\n";
      nara_string_free(output);
      return 2;
    }
  } else {
    std::cout << output;
  }
  nara_string_free(output);
  return exit_code;
}
