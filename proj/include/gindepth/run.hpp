#ifndef GINDEPTH_RUN_HPP
#define GINDEPTH_RUN_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gindepth/report.hpp"

namespace gindepth {

// Options shared by every command. `command` is one of: hilbert, in, gin,
// borel, obstruct, depth, section, verify.
struct RunOptions {
  std::string command;
  std::string field = "p:32003";
  std::uint64_t seed = 0;
  unsigned trials = 3;
  std::optional<std::size_t> s;  // hyperplane-section count (depth)
};

// Parses `file_text`, dispatches, and returns the report. Exit code 0 for a
// positive verdict, 2 for a negative one (borel: false; obstruct: obstructed;
// depth: coefficient-prefix violation; section: structural violation under a
// fired trigger; verify: any failed check). Errors are thrown as Error and
// map to exit code 1 in the binary.
Report run(const RunOptions& opt, const std::string& file_text);

}  // namespace gindepth

#endif
