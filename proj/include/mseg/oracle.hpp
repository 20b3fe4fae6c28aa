#pragma once
// Bounded enumeration of instances and the exhaustive re-verification
// suites behind every module property. Suites shard their instance streams
// across OpenMP workers; a serial run produces the identical report, which
// the bench tool and the tests rely on.

#include <string>
#include <vector>

#include "json.hpp"
#include "mseg/core.hpp"
#include "mseg/notation.hpp"

namespace mseg {

struct Window {
  int lines = 1;  // 1 or 2 enumeration lines, all self-dual of dim 1
  int lo = 0;
  int hi = 4;
  int max_segments = 3;
  int max_len = 5;
  long max_total_abs = -1;  // per-multisegment cap; negative = unbounded
  std::size_t enum_budget = 2000000;
  int brute_bound = 6;

  // exponents [0,4], <=3 segments, length <=5
  static Window acceptance();
  // exponents [0,5]: wide enough to hold [0]+[1,5]
  static Window widened();

  std::string describe() const;
  nlohmann::json to_json() const;
};

Window window_from_string(const std::string& text);  // "lo:hi:maxseg:maxlen[:lines]"

std::vector<Line> window_lines(const Window& w);
LineTable window_table(const Window& w);

std::vector<Segment> enumerate_segments(const Window& w);
std::vector<Multisegment> enumerate_multisegments(const Window& w);

struct Violation {
  std::string description;
  std::vector<std::string> repro;  // notation-syntax inputs

  friend bool operator<(const Violation& x, const Violation& y) {
    if (x.description != y.description) return x.description < y.description;
    return x.repro < y.repro;
  }
  friend bool operator==(const Violation& x, const Violation& y) {
    return x.description == y.description && x.repro == y.repro;
  }
};

struct Report {
  std::string suite;
  Window window;
  long long checked = 0;
  std::vector<Violation> violations;
  double wall_ms = 0;
  bool advisory = false;  // divergence reports, not pass/fail properties

  bool passed() const { return advisory || violations.empty(); }
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  bool parallel = true;
  bool corrupt = false;  // route decide() through the corrupted relation
};

std::vector<std::string> suite_names();
Report run_suite(const std::string& id, const Window& w, const SuiteOptions& opts = {});

}  // namespace mseg
