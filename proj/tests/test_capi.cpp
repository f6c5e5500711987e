// Exercises the shared library through its C interface only.
#include <cstring>
#include <string>

#include "doctest.h"
#include "fflv/fflv.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  fflv_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("permutations") {
  fflv_perm* p = nullptr;
  REQUIRE(fflv_perm_from_word(3, "s2 s3 s1", &p) == FFLV_OK);
  int v = -1;
  CHECK(fflv_perm_rank(p, &v) == FFLV_OK);
  CHECK(v == 3);
  CHECK(fflv_perm_length(p, &v) == FFLV_OK);
  CHECK(v == 3);
  CHECK(fflv_perm_is_triangular(p, &v) == FFLV_OK);
  CHECK(v == 1);
  CHECK(fflv_perm_is_kempf(p, &v) == FFLV_OK);
  CHECK(v == 0);
  char* s = nullptr;
  CHECK(fflv_perm_oneline(p, &s) == FFLV_OK);
  CHECK(take(s) == "3 1 4 2");
  CHECK(fflv_perm_reduced_word(p, &s) == FFLV_OK);
  CHECK(take(s) == "s2 s1 s3");
  fflv_subset* a = nullptr;
  CHECK(fflv_perm_inversions(p, &a) == FFLV_OK);
  CHECK(fflv_subset_size(a, &v) == FFLV_OK);
  CHECK(v == 3);
  CHECK(fflv_subset_contains(a, 1, 3, &v) == FFLV_OK);
  CHECK(v == 1);
  CHECK(fflv_subset_contains(a, 2, 2, &v) == FFLV_OK);
  CHECK(v == 0);
  std::uint64_t count = 0;
  CHECK(fflv_count_points(a, "1,1,1", &count) == FFLV_OK);
  CHECK(count == 12);
  fflv_subset_free(a);
  fflv_perm_free(p);

  CHECK(fflv_perm_from_oneline("2 4 1 3", &p) == FFLV_OK);
  CHECK(fflv_perm_is_triangular(p, &v) == FFLV_OK);
  CHECK(v == 0);
  fflv_perm_free(p);
}

TEST_CASE("errors") {
  fflv_perm* p = nullptr;
  CHECK(fflv_perm_from_oneline("1 1 2", &p) == FFLV_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  CHECK(std::strlen(fflv_last_error()) > 0);
  CHECK(fflv_perm_from_word(3, "s9", &p) != FFLV_OK);
  CHECK(fflv_perm_from_word(3, nullptr, &p) == FFLV_NULL_ARGUMENT);
  CHECK(fflv_perm_from_word(3, "s1", nullptr) == FFLV_NULL_ARGUMENT);
  int v = 0;
  CHECK(fflv_perm_rank(nullptr, &v) == FFLV_NULL_ARGUMENT);
  fflv_subset* a = nullptr;
  CHECK(fflv_subset_parse(2, "1.5", &a) != FFLV_OK);
  CHECK(fflv_subset_parse(2, "1.1", &a) == FFLV_OK);
  int tri = 0;
  CHECK(fflv_subset_is_triangular(a, &tri) == FFLV_OK);
  CHECK(tri == 1);
  char* s = nullptr;
  CHECK(fflv_subset_to_string(a, &s) == FFLV_OK);
  CHECK(take(s) == "1.1");
  std::uint64_t c = 0;
  CHECK(fflv_count_points(a, "1,1,1", &c) == FFLV_INVALID_RANK);
  fflv_subset_free(a);
  CHECK(fflv_weyl_dimension("1,1,1", &c) == FFLV_OK);
  CHECK(c == 64);
  CHECK(fflv_weyl_dimension("1,-1", &c) != FFLV_OK);
  fflv_perm_free(nullptr);
  fflv_subset_free(nullptr);
  fflv_report_free(nullptr);
  fflv_job_free(nullptr);
  CHECK(std::strlen(fflv_version()) > 0);
}

TEST_CASE("jobs and reports") {
  fflv_job* job = nullptr;
  REQUIRE(fflv_job_new(&job) == FFLV_OK);
  CHECK(fflv_job_set_lambda(job, "1,1,1") == FFLV_OK);
  CHECK(fflv_job_set_w_word(job, "s2 s3 s1") == FFLV_OK);
  CHECK(fflv_job_set_dilations(job, "2") == FFLV_OK);
  CHECK(fflv_job_set_dilations(job, "2,x") == FFLV_INVALID_ARGUMENT);
  CHECK(fflv_job_set_max_dim(job, 200) == FFLV_OK);

  fflv_report* r = nullptr;
  REQUIRE(fflv_run_char_compare(job, &r) == FFLV_OK);
  int passed = 0, code = -1;
  CHECK(fflv_report_passed(r, &passed) == FFLV_OK);
  CHECK(passed == 1);
  CHECK(fflv_report_exit_code(r, &code) == FFLV_OK);
  CHECK(code == 0);
  char* s = nullptr;
  CHECK(fflv_report_render(r, FFLV_FORMAT_JSON, &s) == FFLV_OK);
  const std::string json = take(s);
  CHECK(json.find("\"verdict\": \"equal\"") != std::string::npos);
  CHECK(fflv_report_render(r, FFLV_FORMAT_CSV, &s) == FFLV_OK);
  CHECK(take(s).rfind("exponent,lattice,oracle", 0) == 0);
  CHECK(fflv_report_render(r, static_cast<fflv_format>(3), &s) == FFLV_INVALID_ARGUMENT);
  fflv_report_free(r);

  REQUIRE(fflv_run_points(job, &r) == FFLV_OK);
  CHECK(fflv_report_render(r, FFLV_FORMAT_TEXT, &s) == FFLV_OK);
  CHECK(take(s).find("count 12") != std::string::npos);
  fflv_report_free(r);

  REQUIRE(fflv_run_verify(job, &r) == FFLV_OK);
  CHECK(fflv_report_passed(r, &passed) == FFLV_OK);
  CHECK(passed == 1);
  fflv_report_free(r);

  REQUIRE(fflv_run_poset(job, 2, &r) == FFLV_OK);
  fflv_report_free(r);

  CHECK(fflv_job_set_subset(job, "1.1") == FFLV_OK);
  r = nullptr;
  CHECK(fflv_run_points(job, &r) == FFLV_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  fflv_job_free(job);

  REQUIRE(fflv_run_weyl_scan(2, 6, &r) == FFLV_OK);
  CHECK(fflv_report_passed(r, &passed) == FFLV_OK);
  CHECK(passed == 1);
  fflv_report_free(r);
  CHECK(fflv_run_weyl_scan(9, 6, &r) == FFLV_INVALID_RANK);
}
