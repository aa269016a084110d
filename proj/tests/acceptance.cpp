// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "dset/error.hpp"
#include "dset/selftest.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

using namespace dset;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Criterion {
  int number;
  const char* title;
  const char* suite;
  double seconds;  // time budget, 0 for none
};

std::string run_command(const std::string& cmd, int& status) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

bool report(int number, const char* title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << detail << ")"
            << std::endl;
  return ok;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "monotone maps and tree rank", "monotone", 10},
      {2, "separation rank matches brute force", "oracle", 30},
      {3, "successor ranks are attained", "attain", 0},
      {4, "points of a derivative survive in every ball", "ball", 0},
      {5, "node indicators converge to zero iff the tree is well-founded", "wf", 10},
      {6, "H reduces A to convergence on A", "p1", 0},
      {7, "branch witnesses and window stabilisation", "branch", 0},
      {8, "monotone map from S windows into T windows", "newp3", 60},
      {9, "symbolic convergence agrees with sampling", "dual", 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      const SuiteReport r = run_suite(c.suite, 0, kSeed);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool in_time = c.seconds == 0 || secs < c.seconds;
      std::string detail = std::to_string(r.cases.size() - r.failures()) + "/" + std::to_string(r.cases.size()) +
                           " cases, " + std::to_string(static_cast<int>(secs * 1000)) + " ms";
      for (const auto& k : r.cases)
        if (!k.ok) detail += "; failed " + k.id + ": " + k.detail;
      if (!in_time) detail += "; over the " + std::to_string(static_cast<int>(c.seconds)) + " s budget";
      all = report(c.number, c.title, r.passed() && in_time, detail) && all;
    } catch (const DomainError& e) {
      all = report(c.number, c.title, false, e.what()) && all;
    }
  }

  const std::string cmd = std::string(DSET_CLI_PATH) + " selftest --seed " + std::to_string(kSeed);
  int s1 = 0, s2 = 0;
  const std::string first = run_command(cmd, s1);
  const std::string second = run_command(cmd, s2);
  const bool same = !first.empty() && first == second && s1 == 0 && s2 == 0;
  all = report(10, "selftest output is byte-identical across runs", same,
               std::to_string(first.size()) + " bytes, exit " + std::to_string(s1) + "/" + std::to_string(s2)) &&
        all;
  return all ? 0 : 1;
}
