#include "gindepth/report.hpp"

#include <cstdint>
#include <sstream>

namespace gindepth {
namespace {

std::string scalar_text(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render(std::ostringstream& out, const ordered_json& j, std::size_t indent);

void render_array(std::ostringstream& out, const ordered_json& j, std::size_t indent) {
  const std::string pad(indent, ' ');
  for (const ordered_json& item : j) {
    if (item.is_object()) {
      // Records print one per line: "- k: v, k: v".
      out << pad << "-";
      bool first = true;
      for (const auto& [key, value] : item.items()) {
        out << (first ? " " : ", ") << key << ": " << scalar_text(value);
        first = false;
      }
      out << "\n";
    } else {
      out << pad << "- " << scalar_text(item) << "\n";
    }
  }
}

void render(std::ostringstream& out, const ordered_json& j, std::size_t indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render(out, value, indent + 2);
    } else if (value.is_array()) {
      if (value.empty()) {
        out << pad << key << ": (none)\n";
      } else if (value.size() <= 12 && !value.front().is_structured()) {
        out << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i)
          out << (i ? ", " : "") << scalar_text(value[i]);
        out << "]\n";
      } else {
        out << pad << key << ":\n";
        render_array(out, value, indent + 2);
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string input_digest(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((hash >> shift) & 0xf);
  return out.str();
}

std::string Report::to_json() const { return document.dump(2) + "\n"; }

std::string Report::to_human() const {
  std::ostringstream out;
  render(out, document, 0);
  return out.str();
}

}  // namespace gindepth
