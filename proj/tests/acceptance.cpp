// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Usage: mseg-acceptance --cli /path/to/mseg [--serial]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "mseg/matching.hpp"
#include "mseg/mpi.hpp"
#include "mseg/notation.hpp"
#include "mseg/oracle.hpp"

using namespace mseg;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Multisegment M(const std::string& s) {
  LineTable t = LineTable::standard();
  return parse_multisegment(s, t);
}

Segment S(const std::string& s) {
  LineTable t = LineTable::standard();
  return parse_segment(s, t);
}

struct SuiteOutcome {
  bool ok = true;
  long long checked = 0;
  double ms = 0;
  std::string first_violation;
};

SuiteOutcome run_both_windows(const std::string& suite, bool parallel) {
  SuiteOutcome out;
  for (const Window& w : {Window::acceptance(), Window::widened()}) {
    Report rep = run_suite(suite, w, SuiteOptions{parallel, false});
    out.checked += rep.checked;
    out.ms += rep.wall_ms;
    if (!rep.violations.empty() && out.first_violation.empty())
      out.first_violation = rep.violations[0].description;
    out.ok = out.ok && rep.violations.empty();
  }
  return out;
}

std::string summarize(const SuiteOutcome& o) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%lld instances, %.0f ms", o.checked, o.ms);
  std::string s = buf;
  if (!o.first_violation.empty()) s += "; first: " + o.first_violation;
  return s;
}

int run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_cli_capture(const std::string& cli, const std::string& args, std::string& out) {
  out.clear();
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  bool parallel = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) cli = argv[++i];
    if (std::strcmp(argv[i], "--serial") == 0) parallel = false;
  }

  // 1. the worked fixture: m = [0]+[1,5]
  {
    Multisegment m = M("[0]+[1,5]");
    auto start = std::chrono::steady_clock::now();
    bool a = lc(m, S("[0,1]"));
    bool b = lc(m, S("[1,5]"));
    bool c = lc(m, S("[1]"));
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "LC([0,1])=%d LC([1,5])=%d LC([1])=%d in %.3f ms", a, b, c,
                  ms);
    report(1, "worked fixture [0]+[1,5]", a && b && !c && ms < 1.0, buf);
  }

  // 2. closure of membership under intersection-union, exhaustively
  {
    SuiteOutcome o = run_both_windows("closure", parallel);
    report(2, "closure over both windows", o.ok, summarize(o));
  }

  // 3. matching decision agrees with brute-force injection search
  {
    SuiteOutcome o = run_both_windows("hall", parallel);
    report(3, "hall equivalence", o.ok, summarize(o));
  }

  // 4. duality swaps LC and RC
  {
    SuiteOutcome o = run_both_windows("duality", parallel);
    report(4, "duality invariance", o.ok, summarize(o));
  }

  // 5. constructive witnesses and empty obstruction sets
  {
    SuiteOutcome o = run_both_windows("witness", parallel);
    report(5, "constructive witnesses", o.ok, summarize(o));
  }

  // 6. right-matching image condition
  {
    SuiteOutcome o = run_both_windows("rightmatch", parallel);
    report(6, "right-matching image condition", o.ok, summarize(o));
  }

  // 7. poset invariants on every lower set
  {
    SuiteOutcome o = run_both_windows("poset", parallel);
    report(7, "poset invariants", o.ok, summarize(o));
  }

  // 8. derivative algebra
  {
    SuiteOutcome o = run_both_windows("derive", parallel);
    report(8, "derivative algebra", o.ok, summarize(o));
  }

  // 9. parser round-trips in-process, malformed inputs exit 2 via the CLI
  {
    SuiteOutcome o = run_both_windows("parser", parallel);
    bool cli_ok = true;
    std::string detail = summarize(o);
    if (cli.empty()) {
      cli_ok = false;
      detail += "; --cli not given";
    } else {
      struct CliCase {
        const char* args;
        int expect;
      };
      const CliCase cases[] = {
          {"parse \"[2,0]\"", 2},       {"parse \"[0]+\"", 2},
          {"parse \"[0]_zz\"", 2},      {"parse \"[0]+[1,5]\"", 0},
          {"check \"[0]+[1,5]\" \"[1]\"", 1},
          {"check \"[0]+[1,5]\" \"[1]\" --json", 1},  // json and text verdicts agree
          {"mpi \"[0]+[1,5]\" \"[1]\"", 1},
          {"closure \"[0,1]\" \"[-1,1]+[0,2]\"", 0},
      };
      for (const auto& c : cases) {
        int rc = run_cli(cli, c.args);
        if (rc != c.expect) {
          cli_ok = false;
          detail += std::string("; `") + c.args + "` exited " + std::to_string(rc) +
                    " (want " + std::to_string(c.expect) + ")";
        }
      }
      std::string out;
      int rc = run_cli_capture(cli, "poset \"[0,1]+[1,2]\" --json", out);
      bool poset_ok = rc == 0;
      try {
        nlohmann::json j = nlohmann::json::parse(out);
        poset_ok = poset_ok && j["nodes"].size() == 2 && j["edges"].size() == 1;
      } catch (...) {
        poset_ok = false;
      }
      if (!poset_ok) {
        cli_ok = false;
        detail += "; poset --json fixture wrong";
      }
    }
    report(9, "parser round-trip and exit codes", o.ok && cli_ok, detail);
  }

  // 10. the suites can fail: a corrupted matching relation must be caught
  {
    Report hall = run_suite("hall", Window::acceptance(), SuiteOptions{parallel, true});
    Report closure = run_suite("closure", Window::acceptance(), SuiteOptions{parallel, true});
    char buf[96];
    std::snprintf(buf, sizeof(buf), "hall flags %zu, closure flags %zu",
                  hall.violations.size(), closure.violations.size());
    report(10, "suite sensitivity under corruption", !hall.violations.empty() &&
           !closure.violations.empty(), buf);
  }

  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
