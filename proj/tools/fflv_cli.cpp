// fflv command-line frontend; talks to the library only through the C API.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fflv/fflv.h"

namespace {

constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  std::string lambda;
  std::optional<std::string> w, w_oneline, subset;
  std::string format = "text";
  std::size_t max_dim = 400;
  int max_rank = 6;
  std::string dilations = "2,3";
  bool check_rep = false;
  bool sweep = false;
  int max_t = 3;
};

int report_error(fflv_status st) {
  std::cerr << "fflv: error " << static_cast<int>(st) << ": " << fflv_last_error() << '\n';
  return kExitUsage;
}

fflv_format to_format(const std::string& f) {
  if (f == "json") return FFLV_FORMAT_JSON;
  if (f == "csv") return FFLV_FORMAT_CSV;
  return FFLV_FORMAT_TEXT;
}

// Prints the report and returns its exit code.
int emit(fflv_report* rep, const Options& o) {
  char* out = nullptr;
  fflv_status st = fflv_report_render(rep, to_format(o.format), &out);
  if (st != FFLV_OK) {
    fflv_report_free(rep);
    return report_error(st);
  }
  std::fputs(out, stdout);
  fflv_string_free(out);
  int code = 1;
  fflv_report_exit_code(rep, &code);
  fflv_report_free(rep);
  return code;
}

fflv_status build_job(const Options& o, fflv_job** out) {
  fflv_job* job = nullptr;
  fflv_status st = fflv_job_new(&job);
  if (st != FFLV_OK) return st;
  auto chain = [&](fflv_status s) {
    if (st == FFLV_OK) st = s;
  };
  chain(fflv_job_set_lambda(job, o.lambda.c_str()));
  if (o.w) chain(fflv_job_set_w_word(job, o.w->c_str()));
  if (o.w_oneline) chain(fflv_job_set_w_oneline(job, o.w_oneline->c_str()));
  if (o.subset) chain(fflv_job_set_subset(job, o.subset->c_str()));
  chain(fflv_job_set_max_dim(job, o.max_dim));
  chain(fflv_job_set_max_rank(job, o.max_rank));
  chain(fflv_job_set_dilations(job, o.dilations.c_str()));
  chain(fflv_job_set_check_rep(job, o.check_rep ? 1 : 0));
  chain(fflv_job_set_sweep(job, o.sweep ? 1 : 0));
  if (st != FFLV_OK) {
    fflv_job_free(job);
    return st;
  }
  *out = job;
  return FFLV_OK;
}

// Fills in lambda = 0 of rank n when only --n is given, and checks --n against lambda.
bool normalize_lambda(Options& o) {
  if (o.lambda.empty()) {
    if (o.n < 1) {
      std::cerr << "fflv: give --lambda (or --n for lambda = 0)\n";
      return false;
    }
    for (int k = 0; k < o.n; ++k) o.lambda += k ? ",0" : "0";
    return true;
  }
  if (o.n > 0) {
    int commas = 0;
    for (char c : o.lambda) commas += c == ',';
    if (commas + 1 != o.n) {
      std::cerr << "fflv: --lambda has " << commas + 1 << " entries but --n is " << o.n << '\n';
      return false;
    }
  }
  return true;
}

using Runner = fflv_status (*)(const fflv_job*, fflv_report**);

int run_job(Options& o, Runner run) {
  if (!normalize_lambda(o)) return kExitUsage;
  fflv_job* job = nullptr;
  if (fflv_status st = build_job(o, &job); st != FFLV_OK) return report_error(st);
  fflv_report* rep = nullptr;
  fflv_status st = run(job, &rep);
  fflv_job_free(job);
  if (st != FFLV_OK) return report_error(st);
  return emit(rep, o);
}

void add_common(CLI::App* sub, Options& o, bool face) {
  sub->add_option("--n", o.n, "Rank n of sl_{n+1}");
  sub->add_option("--lambda", o.lambda, "Dominant weight coefficients, e.g. '1,1,1'");
  if (face) {
    auto* w = sub->add_option("--w", o.w, "Weyl group element as a word, e.g. 's2 s3 s1'");
    auto* wo = sub->add_option("--w-oneline", o.w_oneline, "Weyl group element in one-line notation, e.g. '3 1 4 2'");
    auto* a = sub->add_option("--A", o.subset, "Root subset, e.g. '1.1,3.3,1.3' or 'all'");
    w->excludes(wo)->excludes(a);
    wo->excludes(a);
  }
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--max-dim", o.max_dim, "Dimension cap for module computations")->check(CLI::PositiveNumber);
  sub->add_option("--max-rank", o.max_rank, "Largest accepted rank")->check(CLI::Range(1, 10));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FFLV polytopes, triangular Weyl group elements and PBW-degenerate Demazure modules"};
  app.require_subcommand(1);
  Options o;

  auto* scan = app.add_subcommand("weyl-scan", "Length, Kempf and triangularity of every w in S_{n+1}");
  add_common(scan, o, false);
  scan->get_option("--n")->required();

  auto* points = app.add_subcommand("points", "Lattice points S_A(lambda) with weights and degrees");
  add_common(points, o, true);

  auto* chr = app.add_subcommand("char-compare", "Lattice-point character against the Demazure operator oracle");
  add_common(chr, o, true);

  auto* verify = app.add_subcommand("verify", "Minkowski, normality, marked-poset and module checks");
  add_common(verify, o, true);
  verify->add_option("--dilations", o.dilations, "Dilation factors for the normality check");
  verify->add_flag("--rep", o.check_rep, "Also run explicit-module checks");
  verify->add_flag("--sweep", o.sweep, "Run every triangular w of the rank");

  auto* poset = app.add_subcommand("poset", "Marked poset and chain/order Ehrhart counts");
  add_common(poset, o, true);
  poset->add_option("--max-t", o.max_t, "Largest dilation t")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (scan->parsed()) {
    fflv_report* rep = nullptr;
    if (fflv_status st = fflv_run_weyl_scan(o.n, o.max_rank, &rep); st != FFLV_OK) return report_error(st);
    return emit(rep, o);
  }
  if (points->parsed()) return run_job(o, fflv_run_points);
  if (chr->parsed()) return run_job(o, fflv_run_char_compare);
  if (verify->parsed()) return run_job(o, fflv_run_verify);
  if (poset->parsed()) {
    if (!normalize_lambda(o)) return kExitUsage;
    fflv_job* job = nullptr;
    if (fflv_status st = build_job(o, &job); st != FFLV_OK) return report_error(st);
    fflv_report* rep = nullptr;
    fflv_status st = fflv_run_poset(job, o.max_t, &rep);
    fflv_job_free(job);
    if (st != FFLV_OK) return report_error(st);
    return emit(rep, o);
  }
  return kExitUsage;
}
