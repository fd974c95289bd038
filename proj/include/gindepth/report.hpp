#ifndef GINDEPTH_REPORT_HPP
#define GINDEPTH_REPORT_HPP

#include <string>

#include "json.hpp"

namespace gindepth {

using ordered_json = nlohmann::ordered_json;

// 64-bit FNV-1a over the raw input bytes, as "fnv1a64:" + 16 hex digits.
std::string input_digest(const std::string& bytes);

// One tool invocation's outcome. `document` always carries the keys
// command, digest, ring, field, seed, trials, result, warnings — in that
// order — so the serialized form is byte-stable for a fixed input.
struct Report {
  ordered_json document;
  int exit_code = 0;

  std::string to_json() const;   // pretty-printed, trailing newline
  std::string to_human() const;  // same data rendered as indented text
};

}  // namespace gindepth

#endif
