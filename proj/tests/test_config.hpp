#pragma once

#include <string>

// Filled in by the shared test main from --fixtures= / --bin= arguments that
// CMake passes on the ctest command line.
namespace testcfg {
inline std::string fixture_dir = "data/oeis";
inline std::string cli_bin;
}  // namespace testcfg
