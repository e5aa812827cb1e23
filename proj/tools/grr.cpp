// grr: build and certify graphical regular representations of dihedral groups.
//
//   grr enumerate --n 11 [--canonical]
//   grr verify --n 11 --r 0 --s 4 --t 1
//   grr closure --n 11 --set "a,ab,ab^4"
//   grr aut --graph FILE
//   grr batch --from 7 --to 19 --jobs 4 --format json --out certs.jsonl
//   grr cayley --n 11 --set "a,ab,ab^4" --graph-format graph6

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "grr/automorphism.hpp"
#include "grr/cayley.hpp"
#include "grr/certify.hpp"
#include "grr/errors.hpp"
#include "grr/graph.hpp"
#include "grr/group.hpp"
#include "grr/run_config.hpp"
#include "grr/schur.hpp"

namespace {

using grr::OutputFormat;
using nlohmann::json;

int mod(int x, int n) { return ((x % n) + n) % n; }

// Keeps an --out file alive for the duration of a command.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

grr::GroupPtr load_group(const grr::RunConfig& c) {
  if (!c.table_path.empty()) {
    std::ifstream in(c.table_path);
    if (!in) throw std::runtime_error("cannot open group table " + c.table_path);
    return grr::read_group_table(in);
  }
  return c.cyclic ? grr::make_cyclic(*c.n) : grr::make_dihedral(*c.n);
}

grr::ElementSet parse_set(const grr::RunConfig& c, const grr::FiniteGroup& group) {
  if (c.table_path.empty() && !c.cyclic) return grr::parse_dihedral_set(*c.n, c.set);
  std::vector<grr::Element> elements;
  std::stringstream in(c.set);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    auto x = group.find_label(piece);
    if (!x) x = std::stoi(piece);
    elements.push_back(*x);
  }
  return grr::make_element_set(group, elements);
}

int run_enumerate(const grr::RunConfig& c) {
  const auto e = grr::enumerate_triples(*c.n, c.canonical);
  Output out(c.out_path);
  auto& os = out.stream();
  switch (c.format) {
    case OutputFormat::json: {
      json triples = json::array();
      for (const auto& x : e.triples) triples.push_back({x.r, x.s, x.t});
      json doc = {{"n", e.n},
                  {"canonical", e.canonical},
                  {"triples", triples},
                  {"full_count", e.full_count},
                  {"negation_classes", e.negation_classes}};
      if (e.canonical) doc["orbit_sizes"] = e.orbit_sizes;
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      os << (e.canonical ? "r,s,t,orbit_size\n" : "r,s,t\n");
      for (std::size_t k = 0; k < e.triples.size(); ++k) {
        const auto& x = e.triples[k];
        os << x.r << ',' << x.s << ',' << x.t;
        if (e.canonical) os << ',' << e.orbit_sizes[k];
        os << '\n';
      }
      break;
    case OutputFormat::text:
      for (std::size_t k = 0; k < e.triples.size(); ++k) {
        const auto& x = e.triples[k];
        os << x.r << ' ' << x.s << ' ' << x.t;
        if (e.canonical) os << "  (orbit " << e.orbit_sizes[k] << ')';
        os << '\n';
      }
      os << "# n=" << e.n << " listed=" << e.triples.size() << " full=" << e.full_count
         << " negation_classes=" << e.negation_classes << '\n';
      break;
  }
  return grr::kExitOk;
}

int run_verify(const grr::RunConfig& c, const std::string& dot_path) {
  const int n = *c.n;
  const auto cert = grr::verify_triple(n, mod(*c.r, n), mod(*c.s, n), mod(*c.t, n));
  Output out(c.out_path);
  auto& os = out.stream();
  switch (c.format) {
    case OutputFormat::json: os << grr::to_json(cert).dump() << '\n'; break;
    case OutputFormat::csv: os << grr::csv_header() << '\n' << grr::to_csv(cert) << '\n'; break;
    case OutputFormat::text: os << grr::to_text(cert) << '\n'; break;
  }
  if (!dot_path.empty()) {
    const auto dn = grr::make_dihedral(n);
    const auto conn = grr::make_element_set(*dn, std::vector<grr::Element>{
        grr::DihedralLabel{1, cert.r}.index(n), grr::DihedralLabel{1, cert.s}.index(n),
        grr::DihedralLabel{1, cert.t}.index(n)});
    std::vector<std::string> names;
    for (grr::Element x = 0; x < dn->order(); ++x) names.push_back(dn->label(x));
    std::ofstream dot(dot_path);
    grr::write_dot(dot, grr::build_cayley(*dn, conn), names);
  }
  if (!cert.consistent) return grr::kExitInconsistent;
  if (cert.counterexample()) return grr::kExitContradiction;
  return grr::kExitOk;
}

int run_closure(const grr::RunConfig& c) {
  const auto group = load_group(c);
  const auto set = parse_set(c, *group);
  const auto ring = grr::closure(group, set);
  Output out(c.out_path);
  auto& os = out.stream();
  if (c.format == OutputFormat::json) {
    json classes = json::array();
    for (const auto& cls : ring.classes()) {
      json labels = json::array();
      for (grr::Element x : cls) labels.push_back(group->label(x));
      classes.push_back(labels);
    }
    os << json{{"rank", ring.rank()}, {"trivial", grr::is_trivial(ring)}, {"classes", classes}}.dump() << '\n';
  } else {
    grr::write_partition(os, ring);
    os << "trivial=" << (grr::is_trivial(ring) ? "true" : "false") << '\n';
  }
  return grr::kExitOk;
}

int run_cayley(const grr::RunConfig& c, const std::string& graph_format) {
  const auto group = load_group(c);
  const auto graph = grr::build_cayley(*group, parse_set(c, *group));
  Output out(c.out_path);
  auto& os = out.stream();
  if (graph_format == "graph6") {
    os << grr::to_graph6(graph) << '\n';
  } else if (graph_format == "edgelist") {
    grr::write_edge_list(os, graph);
  } else {
    std::vector<std::string> names;
    for (grr::Element x = 0; x < group->order(); ++x) names.push_back(group->label(x));
    grr::write_dot(os, graph, names);
  }
  return grr::kExitOk;
}

int run_aut(const grr::RunConfig& c) {
  std::ifstream in(c.graph_path);
  if (!in) throw std::runtime_error("cannot open graph file " + c.graph_path);
  const auto graph = grr::read_graph(in);
  const auto aut = grr::automorphisms(graph);
  Output out(c.out_path);
  auto& os = out.stream();
  if (c.format == OutputFormat::json) {
    json gens = json::array();
    for (const auto& g : aut.generators) gens.push_back(g.cycles());
    os << json{{"vertices", graph.vertex_count()},
               {"edges", graph.edge_count()},
               {"order", aut.order.str()},
               {"base", aut.base},
               {"generators", gens}}
              .dump()
       << '\n';
  } else {
    os << "vertices=" << graph.vertex_count() << " edges=" << graph.edge_count() << " order=" << aut.order << '\n';
    for (const auto& g : aut.generators) os << g.cycles() << '\n';
  }
  return grr::kExitOk;
}

int run_batch(const grr::RunConfig& c) {
  Output out(c.out_path);
  auto& os = out.stream();
  if (c.format == OutputFormat::csv) os << grr::csv_header() << '\n';

  grr::BatchOptions options{*c.n_from, *c.n_to, c.jobs, c.canonical};
  const auto summary = grr::batch(options, [&](const grr::BatchRecord& rec) {
    if (rec.certificate) {
      switch (c.format) {
        case OutputFormat::json: os << grr::to_json(*rec.certificate).dump() << '\n'; break;
        case OutputFormat::csv: os << grr::to_csv(*rec.certificate) << '\n'; break;
        case OutputFormat::text: os << grr::to_text(*rec.certificate) << '\n'; break;
      }
    } else {
      const json err = {{"n", rec.n}, {"r", rec.triple.r}, {"s", rec.triple.s}, {"t", rec.triple.t}, {"error", rec.error}};
      (c.format == OutputFormat::csv ? std::cerr : os) << err.dump() << '\n';
    }
  });

  const json doc = {{"summary", grr::to_json(summary)}};
  if (c.format == OutputFormat::csv) {
    std::cerr << doc.dump() << '\n';
  } else if (c.format == OutputFormat::json) {
    os << doc.dump() << '\n';
  } else {
    os << "# checked=" << summary.triples_checked << " grr=" << summary.grrs_confirmed
       << " inconsistent=" << summary.inconsistencies << " contradictions=" << summary.contradictions
       << " errors=" << summary.errors << " empty_n=" << json(summary.empty_n).dump() << '\n';
  }
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify graphical regular representations of dihedral groups"};
  app.require_subcommand(1);

  grr::RunConfig config;
  std::string format = "json";
  std::string dot_path;
  std::string graph_format = "graph6";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", config.out_path, "Write output to PATH instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List admissible (r, s, t) for D_n");
  enumerate->add_option("--n", config.n, "Odd n > 5")->required();
  enumerate->add_flag("--canonical", config.canonical, "Only r = 0 representatives of shift orbits");
  add_format(enumerate);

  auto* verify = app.add_subcommand("verify", "Certify Cay(D_n, {ab^r, ab^s, ab^t})");
  verify->add_option("--n", config.n)->required();
  verify->add_option("--r", config.r)->required();
  verify->add_option("--s", config.s)->required();
  verify->add_option("--t", config.t)->required();
  verify->add_option("--dot", dot_path, "Also write the Cayley graph in DOT format");
  add_format(verify);

  auto* closure = app.add_subcommand("closure", "Basic sets of the Schur-ring closure of a subset");
  closure->add_option("--n", config.n);
  closure->add_option("--set", config.set, "Comma-separated elements, e.g. \"a,ab,ab^4\"")->required();
  closure->add_flag("--cyclic", config.cyclic, "Use Z_n (elements 1, g, g^k) instead of D_n");
  closure->add_option("--table", config.table_path, "Group multiplication table file (elements by index)");
  closure->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  closure->add_option("--out", config.out_path);

  auto* aut = app.add_subcommand("aut", "Automorphism group of a graph (graph6 or edge list)");
  aut->add_option("--graph", config.graph_path)->required()->check(CLI::ExistingFile);
  aut->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  aut->add_option("--out", config.out_path);

  auto* batch = app.add_subcommand("batch", "Enumerate and certify every admissible triple for n in a range");
  batch->add_option("--from", config.n_from)->required();
  batch->add_option("--to", config.n_to)->required();
  batch->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  batch->add_flag("--canonical", config.canonical, "Only r = 0 representatives");
  add_format(batch);

  auto* cayley = app.add_subcommand("cayley", "Export a Cayley graph");
  cayley->add_option("--n", config.n);
  cayley->add_option("--set", config.set)->required();
  cayley->add_flag("--cyclic", config.cyclic);
  cayley->add_option("--table", config.table_path);
  cayley->add_option("--graph-format", graph_format)->check(CLI::IsMember({"graph6", "edgelist", "dot"}));
  cayley->add_option("--out", config.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? grr::kExitOk : grr::kExitUsage;
  }

  if (*enumerate) config.mode = grr::Mode::enumerate;
  if (*verify) config.mode = grr::Mode::verify;
  if (*closure) config.mode = grr::Mode::closure;
  if (*aut) config.mode = grr::Mode::aut;
  if (*batch) config.mode = grr::Mode::batch;
  if (*cayley) config.mode = grr::Mode::cayley;
  config.format = *grr::parse_format(format);

  if (auto problem = grr::validate(config)) {
    std::cerr << "error: " << *problem << '\n';
    return grr::kExitUsage;
  }

  try {
    switch (config.mode) {
      case grr::Mode::enumerate: return run_enumerate(config);
      case grr::Mode::verify: return run_verify(config, dot_path);
      case grr::Mode::closure: return run_closure(config);
      case grr::Mode::aut: return run_aut(config);
      case grr::Mode::batch: return run_batch(config);
      case grr::Mode::cayley: return run_cayley(config, graph_format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return grr::kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return grr::kExitUsage;
  } catch (const std::logic_error& e) {
    // Raised only when two internal computations disagree.
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return grr::kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return grr::kExitUsage;
  }
  return grr::kExitUsage;
}
