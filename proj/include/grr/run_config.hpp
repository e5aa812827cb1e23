#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace grr {

enum class Mode { enumerate, verify, closure, aut, batch, cayley };
enum class OutputFormat { json, csv, text };

/// Settings of one command-line invocation.
struct RunConfig {
  Mode mode = Mode::enumerate;
  std::optional<int> n;
  std::optional<int> n_from;
  std::optional<int> n_to;
  std::optional<int> r;
  std::optional<int> s;
  std::optional<int> t;
  OutputFormat format = OutputFormat::json;
  int jobs = 1;
  bool canonical = false;
  std::string set;         // closure mode: comma-separated element labels
  bool cyclic = false;     // closure/cayley: Z_n instead of D_n
  std::string table_path;  // closure/cayley: group from a multiplication table
  std::string graph_path;  // aut mode
  std::string out_path;    // empty means stdout
};

/// Returns a message describing the first violated requirement, if any:
/// verify needs n, r, s, t; enumerate needs odd n > 5; batch needs a range
/// containing an odd n > 5; closure and cayley need n >= 1 or a group
/// table; aut needs a graph file.
std::optional<std::string> validate(const RunConfig& config);

std::optional<OutputFormat> parse_format(std::string_view text);

}  // namespace grr
