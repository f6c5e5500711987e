#include "fflv/fflv.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fflv/error.hpp"
#include "fflv/jobs.hpp"
#include "fflv/polytope.hpp"
#include "fflv/characters.hpp"
#include "fflv/weyl.hpp"
#include "text_util.hpp"

struct fflv_perm {
  fflv::Permutation value;
};
struct fflv_subset {
  fflv::RootSubset value;
};
struct fflv_job {
  fflv::JobSpec spec;
};
struct fflv_report {
  fflv::Report value;
};

namespace {

thread_local std::string g_last_error;

fflv_status status_of(fflv::ErrorCode c) { return static_cast<fflv_status>(static_cast<int>(c)); }

template <class F>
fflv_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return FFLV_OK;
  } catch (const fflv::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FFLV_SIZE_CAP;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FFLV_INTERNAL;
  }
}

fflv_status null_arg(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return FFLV_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define FFLV_REQUIRE(p) \
  if (!(p)) return null_arg(#p)

template <class T>
fflv_status set_out(T* out, T value) {
  *out = value;
  return FFLV_OK;
}

}  // namespace

extern "C" {

const char* fflv_last_error(void) { return g_last_error.c_str(); }
const char* fflv_version(void) { return "0.1.0"; }
void fflv_string_free(char* s) { std::free(s); }

fflv_status fflv_perm_from_oneline(const char* text, fflv_perm** out) {
  FFLV_REQUIRE(text);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_perm{fflv::Permutation::parse_oneline(text)}; });
}

fflv_status fflv_perm_from_word(int rank, const char* word, fflv_perm** out) {
  FFLV_REQUIRE(word);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_perm{fflv::Permutation::parse_word(rank, word)}; });
}

void fflv_perm_free(fflv_perm* p) { delete p; }

fflv_status fflv_perm_rank(const fflv_perm* p, int* out) {
  FFLV_REQUIRE(p);
  FFLV_REQUIRE(out);
  return set_out(out, p->value.rank());
}

fflv_status fflv_perm_length(const fflv_perm* p, int* out) {
  FFLV_REQUIRE(p);
  FFLV_REQUIRE(out);
  return set_out(out, p->value.length());
}

fflv_status fflv_perm_is_triangular(const fflv_perm* p, int* out) {
  FFLV_REQUIRE(p);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = fflv::is_triangular_element(p->value) ? 1 : 0; });
}

fflv_status fflv_perm_is_kempf(const fflv_perm* p, int* out) {
  FFLV_REQUIRE(p);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = fflv::is_kempf(p->value) ? 1 : 0; });
}

fflv_status fflv_perm_oneline(const fflv_perm* p, char** out) {
  FFLV_REQUIRE(p);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = dup_string(p->value.oneline()); });
}

fflv_status fflv_perm_reduced_word(const fflv_perm* p, char** out) {
  FFLV_REQUIRE(p);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = dup_string(fflv::word_to_string(fflv::reduced_word(p->value))); });
}

fflv_status fflv_perm_inversions(const fflv_perm* p, fflv_subset** out) {
  FFLV_REQUIRE(p);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_subset{fflv::inversion_roots(p->value)}; });
}

fflv_status fflv_subset_parse(int rank, const char* text, fflv_subset** out) {
  FFLV_REQUIRE(text);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_subset{fflv::RootSubset::parse(rank, text)}; });
}

void fflv_subset_free(fflv_subset* s) { delete s; }

fflv_status fflv_subset_size(const fflv_subset* s, int* out) {
  FFLV_REQUIRE(s);
  FFLV_REQUIRE(out);
  return set_out(out, s->value.size());
}

fflv_status fflv_subset_contains(const fflv_subset* s, int i, int j, int* out) {
  FFLV_REQUIRE(s);
  FFLV_REQUIRE(out);
  return guarded([&] {
    if (!fflv::is_valid_root(s->value.rank(), fflv::PosRoot{i, j}))
      fflv::fail(fflv::ErrorCode::InvalidArgument, "not a positive root of this rank");
    *out = s->value.contains(fflv::PosRoot{i, j}) ? 1 : 0;
  });
}

fflv_status fflv_subset_is_triangular(const fflv_subset* s, int* out) {
  FFLV_REQUIRE(s);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = fflv::is_triangular_subset(s->value) ? 1 : 0; });
}

fflv_status fflv_subset_to_string(const fflv_subset* s, char** out) {
  FFLV_REQUIRE(s);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = dup_string(s->value.to_string()); });
}

fflv_status fflv_count_points(const fflv_subset* a, const char* lambda, uint64_t* out) {
  FFLV_REQUIRE(a);
  FFLV_REQUIRE(lambda);
  FFLV_REQUIRE(out);
  return guarded([&] {
    const auto l = fflv::DominantWeight::parse(lambda);
    if (l.rank() != a->value.rank()) fflv::fail(fflv::ErrorCode::InvalidRank, "rank mismatch between A and lambda");
    *out = fflv::enumerate_lattice_points(a->value, l).size();
  });
}

fflv_status fflv_weyl_dimension(const char* lambda, uint64_t* out) {
  FFLV_REQUIRE(lambda);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = fflv::weyl_dimension(fflv::DominantWeight::parse(lambda)); });
}

fflv_status fflv_job_new(fflv_job** out) {
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_job{}; });
}

void fflv_job_free(fflv_job* job) { delete job; }

fflv_status fflv_job_set_lambda(fflv_job* job, const char* lambda) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(lambda);
  return guarded([&] {
    fflv::DominantWeight::parse(lambda);
    job->spec.lambda = lambda;
  });
}

fflv_status fflv_job_set_w_word(fflv_job* job, const char* word) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(word);
  return guarded([&] { job->spec.w_word = std::string(word); });
}

fflv_status fflv_job_set_w_oneline(fflv_job* job, const char* oneline) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(oneline);
  return guarded([&] {
    fflv::Permutation::parse_oneline(oneline);
    job->spec.w_oneline = std::string(oneline);
  });
}

fflv_status fflv_job_set_subset(fflv_job* job, const char* subset) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(subset);
  return guarded([&] { job->spec.subset = std::string(subset); });
}

fflv_status fflv_job_set_max_dim(fflv_job* job, size_t max_dim) {
  FFLV_REQUIRE(job);
  return guarded([&] {
    if (max_dim == 0) fflv::fail(fflv::ErrorCode::InvalidArgument, "max_dim must be positive");
    job->spec.max_dim = max_dim;
  });
}

fflv_status fflv_job_set_max_rank(fflv_job* job, int max_rank) {
  FFLV_REQUIRE(job);
  return guarded([&] {
    if (max_rank < 1 || max_rank > 10) fflv::fail(fflv::ErrorCode::InvalidRank, "max_rank must be in 1..10");
    job->spec.max_rank = max_rank;
  });
}

fflv_status fflv_job_set_dilations(fflv_job* job, const char* dilations) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(dilations);
  return guarded([&] {
    std::vector<int> ks;
    for (const auto& piece : fflv::detail::split(dilations, ',')) {
      auto v = fflv::detail::parse_int(piece);
      if (!v || *v < 1) fflv::fail(fflv::ErrorCode::InvalidArgument, "bad dilation '" + piece + "'");
      ks.push_back(*v);
    }
    job->spec.dilations = std::move(ks);
  });
}

fflv_status fflv_job_set_check_rep(fflv_job* job, int enabled) {
  FFLV_REQUIRE(job);
  job->spec.check_rep = enabled != 0;
  return FFLV_OK;
}

fflv_status fflv_job_set_sweep(fflv_job* job, int enabled) {
  FFLV_REQUIRE(job);
  job->spec.sweep = enabled != 0;
  return FFLV_OK;
}

fflv_status fflv_run_weyl_scan(int rank, int max_rank, fflv_report** out) {
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_report{fflv::cmd_weyl_scan(rank, max_rank)}; });
}

fflv_status fflv_run_points(const fflv_job* job, fflv_report** out) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_report{fflv::cmd_points(job->spec)}; });
}

fflv_status fflv_run_char_compare(const fflv_job* job, fflv_report** out) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_report{fflv::cmd_char_compare(job->spec)}; });
}

fflv_status fflv_run_verify(const fflv_job* job, fflv_report** out) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_report{fflv::cmd_verify(job->spec)}; });
}

fflv_status fflv_run_poset(const fflv_job* job, int max_t, fflv_report** out) {
  FFLV_REQUIRE(job);
  FFLV_REQUIRE(out);
  return guarded([&] { *out = new fflv_report{fflv::cmd_poset(job->spec, max_t)}; });
}

void fflv_report_free(fflv_report* r) { delete r; }

fflv_status fflv_report_passed(const fflv_report* r, int* out) {
  FFLV_REQUIRE(r);
  FFLV_REQUIRE(out);
  return set_out(out, r->value.passed ? 1 : 0);
}

fflv_status fflv_report_exit_code(const fflv_report* r, int* out) {
  FFLV_REQUIRE(r);
  FFLV_REQUIRE(out);
  return set_out(out, r->value.exit_code);
}

fflv_status fflv_report_render(const fflv_report* r, fflv_format format, char** out) {
  FFLV_REQUIRE(r);
  FFLV_REQUIRE(out);
  return guarded([&] {
    fflv::OutputFormat f;
    switch (format) {
      case FFLV_FORMAT_JSON: f = fflv::OutputFormat::Json; break;
      case FFLV_FORMAT_CSV: f = fflv::OutputFormat::Csv; break;
      case FFLV_FORMAT_TEXT: f = fflv::OutputFormat::Text; break;
      default: fflv::fail(fflv::ErrorCode::InvalidArgument, "unknown format");
    }
    *out = dup_string(r->value.render(f));
  });
}

}  // extern "C"
