#include "grr/run_config.hpp"

namespace grr {

std::optional<std::string> validate(const RunConfig& c) {
  if (c.jobs < 1) return "--jobs must be at least 1";
  switch (c.mode) {
    case Mode::enumerate:
      if (!c.n) return "enumerate requires --n";
      if (*c.n % 2 == 0 || *c.n <= 5) return "enumerate requires an odd n greater than 5";
      return std::nullopt;
    case Mode::verify:
      if (!c.n || !c.r || !c.s || !c.t) return "verify requires --n, --r, --s and --t";
      if (*c.n < 1) return "verify requires n >= 1";
      return std::nullopt;
    case Mode::closure:
    case Mode::cayley:
      if (!c.table_path.empty()) return std::nullopt;
      if (!c.n || *c.n < 1) return "--n must be at least 1 (or give --table)";
      return std::nullopt;
    case Mode::aut:
      if (c.graph_path.empty()) return "aut requires --graph";
      return std::nullopt;
    case Mode::batch: {
      if (!c.n_from || !c.n_to) return "batch requires --from and --to";
      if (*c.n_from > *c.n_to) return "batch requires --from <= --to";
      for (int n = *c.n_from; n <= *c.n_to; ++n) {
        if (n % 2 == 1 && n > 5) return std::nullopt;
      }
      return "batch range contains no odd n greater than 5";
    }
  }
  return "unknown mode";
}

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  return std::nullopt;
}

}  // namespace grr
