#ifndef DSET_SELFTEST_HPP
#define DSET_SELFTEST_HPP

#include "dset/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dset {

struct CaseResult {
  std::string id;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t failures() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20261017;

// monotone, oracle, attain, ball, wf, p1, branch, newp3, dual.
const std::vector<std::string>& suite_names();
// samples == 0 picks the suite's default size. Throws DomainError("bad suite").
// Everything random is drawn from one generator seeded with `seed`, so equal
// arguments give equal reports.
SuiteReport run_suite(const std::string& name, std::size_t samples, std::uint64_t seed);

Json report_to_json(const SuiteReport& r);

}  // namespace dset

#endif
