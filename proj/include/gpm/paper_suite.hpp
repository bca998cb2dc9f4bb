#pragma once

#include <string>
#include <vector>

namespace gpm {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Bundled worked-example checks: rank tables, duals, spectra, coding
// identities, coloring/flow counts, Laplacian spectra.
std::vector<SuiteResult> run_paper_suite();

}  // namespace gpm
