#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fflv/rep.hpp"
#include "fflv/roots.hpp"
#include "fflv/weyl.hpp"

namespace fflv {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& text);

/// Command input as it arrives from the command line or the C API.
/// Face commands take exactly one of {w_word, w_oneline, subset}.
struct JobSpec {
  std::string lambda;                  // "1,1,1"
  std::optional<std::string> w_word;   // "s2 s3 s1"
  std::optional<std::string> w_oneline;  // "3 1 4 2"
  std::optional<std::string> subset;   // "1.1,3.3,1.3" or "all"
  std::size_t max_dim = kDefaultMaxDim;
  int max_rank = 6;
  std::vector<int> dilations{2, 3};
  bool check_rep = false;
  bool sweep = false;  // verify: run every triangular w of the rank
};

/// A job with its inputs parsed and validated.
struct ResolvedJob {
  DominantWeight lambda;
  std::optional<Permutation> w;
  RootSubset subset;
};

/// Parses a JobSpec. With neither w nor A given, A defaults to R^+ unless
/// `require_w` is set, in which case that is an error.
ResolvedJob resolve_job(const JobSpec& spec, bool require_w = false);

/// Result of a command: all renderings plus the verdict.
struct Report {
  bool passed = true;
  /// 0 = all checks pass, 1 = a check failed, 3 = char-compare outside the
  /// triangular range (deficit reported).
  int exit_code = 0;
  std::string json;
  std::string csv;
  std::string text;

  const std::string& render(OutputFormat f) const;
};

/// Length, Kempf and triangularity of every w in S_{n+1}; fails if a Kempf
/// element is not triangular.
Report cmd_weyl_scan(int rank, int max_rank = 6);

/// S_A(lambda) with weights and PBW degrees.
Report cmd_points(const JobSpec& spec);

/// Lattice-point character against the Demazure-operator oracle.
Report cmd_char_compare(const JobSpec& spec);

/// Minkowski, normality, face, marked-poset, character and (optionally)
/// explicit-module checks for one case, or for every triangular w with `sweep`.
Report cmd_verify(const JobSpec& spec);

/// Marked poset export (JSON nodes/edges) and Ehrhart counts (CSV t,chain_count,order_count).
Report cmd_poset(const JobSpec& spec, int max_t = 3);

/// Worker count from FFLV_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

}  // namespace fflv
