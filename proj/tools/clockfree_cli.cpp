// clockfree: command-line front end.
//
// Exit codes: 0 success, 1 witness found (or suite failure), 2 usage or input
// error, 3 size cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clockfree/cliques.hpp"
#include "clockfree/cutsets.hpp"
#include "clockfree/errors.hpp"
#include "clockfree/graph_io.hpp"
#include "clockfree/harness.hpp"
#include "clockfree/obstructions.hpp"
#include "clockfree/patterns.hpp"
#include "clockfree/separations.hpp"
#include "clockfree/serialize.hpp"
#include "clockfree/treewidth.hpp"

using namespace clockfree;

namespace {

struct Options {
  std::string input, output, format, weights, trace;
  std::string pattern = "clock", kind = "star", suite, lengths = "1,1,1";
  std::string object;  // generate: obstruction name
  int t = 3, h = 1, subdivisions = 0, nmax = 8, samples = 1000, jobs = 0, path_len_max = 4, hmax = 3;
  std::uint64_t seed = 1;
  bool exact = false, decomposition = false, timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Graph graph_from_json(const json& j) {
  int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxVertices) throw ScaleError("graph order outside 0.." + std::to_string(kMaxVertices));
  GraphBuilder b(n);
  for (const json& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("bad edge in JSON graph");
    b.add_edge(u, v);
  }
  return b.build();
}

std::vector<Graph> read_input(const Options& o) {
  std::string text = slurp(o.input);
  std::string fmt = o.format;
  if (fmt.empty()) {
    std::size_t p = text.find_first_not_of(" \t\r\n");
    if (p == std::string::npos) throw UsageError("empty input");
    if (text[p] == '{' || text[p] == '[') fmt = "json";
    else if (text[p] == '#' || std::isdigit(static_cast<unsigned char>(text[p]))) fmt = "edgelist";
    else fmt = "g6";
  }
  if (fmt == "json") {
    json j = json::parse(text);
    std::vector<Graph> out;
    if (j.is_array())
      for (const json& x : j) out.push_back(graph_from_json(x));
    else
      out.push_back(graph_from_json(j));
    return out;
  }
  std::istringstream in(text);
  auto gs = read_graphs(in, fmt);
  if (gs.empty()) throw UsageError("no graph in input");
  return gs;
}

std::string write_graph(const Graph& g, const std::string& format) {
  if (format.empty() || format == "g6" || format == "graph6") return encode_graph6(g) + "\n";
  if (format == "edgelist") return format_edge_list(g);
  if (format == "json") {
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    return json{{"n", g.order()}, {"edges", edges}}.dump() + "\n";
  }
  throw UsageError("unknown graph format '" + format + "'");
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Weighting load_weights(const Options& o, int n) {
  if (o.weights.empty()) return Weighting::uniform(n);
  return weighting_from_json(json::parse(slurp(o.weights)), n);
}

std::array<int, 3> parse_lengths(const std::string& s) {
  std::array<int, 3> out{};
  std::istringstream in(s);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i >= 3) throw UsageError("--lengths takes three comma-separated integers");
    out[i++] = std::stoi(part);
  }
  if (i != 3) throw UsageError("--lengths takes three comma-separated integers");
  return out;
}

int cmd_detect(const Options& o) {
  PatternKind kind;
  if (o.pattern == "t-clock") kind = {Pattern::t_clock, o.t};
  else kind = {parse_pattern(o.pattern), 1};
  Sink sink(o.output);
  int code = 0;
  for (const Graph& g : read_input(o)) {
    auto w = find_pattern(g, kind);
    if (w) {
      sink.out() << to_json(*w).dump() << '\n';
      code = 1;
    } else {
      sink.out() << "absent\n";
    }
  }
  return code;
}

int cmd_generate(const Options& o) {
  ObstructionParams p;
  p.t = o.t;
  p.h = o.h;
  p.subdivisions = o.subdivisions;
  p.lengths = parse_lengths(o.lengths);
  Graph g = generate_obstruction(parse_obstruction(o.object), p);
  Sink sink(o.output);
  sink.out() << write_graph(g, o.format);
  return 0;
}

int cmd_clean_check(const Options& o) {
  Sink sink(o.output);
  int code = 0;
  for (const Graph& g : read_input(o)) {
    CleanResult r = is_t_clean(g, o.t);
    json j{{"clean", r.clean}};
    if (!r.clean) {
      j["family"] = r.family;
      j["witness"] = to_json(r.witness);
      code = 1;
    }
    sink.out() << j.dump() << '\n';
  }
  return code;
}

int cmd_cutset(const Options& o) {
  Sink sink(o.output);
  int code = 0;
  for (const Graph& g : read_input(o)) {
    if (o.kind == "atoms") {
      sink.out() << to_json(clique_atoms(g)).dump() << '\n';
      continue;
    }
    std::optional<Cutset> c;
    if (o.kind == "star") c = find_star_cutset(g);
    else if (o.kind == "clique") c = find_clique_cutset(g);
    else throw UsageError("--kind must be star, clique or atoms");
    if (c) {
      sink.out() << to_json(*c).dump() << '\n';
      code = 1;
    } else {
      sink.out() << "none\n";
    }
  }
  return code;
}

int cmd_treewidth(const Options& o) {
  Sink sink(o.output);
  for (const Graph& g : read_input(o)) {
    if (!o.exact && !o.decomposition) {
      sink.out() << min_fill_upper_bound(g) << '\n';
      continue;
    }
    TreewidthResult r = exact_treewidth(g);
    if (o.decomposition) sink.out() << to_json(r.decomposition).dump() << '\n';
    else sink.out() << r.width << '\n';
  }
  return 0;
}

int cmd_separator(const Options& o) {
  Sink sink(o.output);
  for (const Graph& g : read_input(o)) {
    Weighting w = load_weights(o, g.order());
    SeparatorResult r = find_small_separator(g, w, o.t);
    json j{{"separator", to_json(r.separator)}, {"tier", r.tier}};
    if (o.trace.empty()) {
      j["trace"] = r.trace;
    } else {
      std::ofstream tf(o.trace);
      if (!tf) throw UsageError("cannot write " + o.trace);
      tf << r.trace.dump(2) << '\n';
    }
    sink.out() << j.dump() << '\n';
  }
  return 0;
}

int cmd_bag(const Options& o) {
  Sink sink(o.output);
  for (const Graph& g : read_input(o)) {
    Weighting w = load_weights(o, g.order());
    auto family = family_X(g, w);
    auto core = core_of(g, w, family);
    ExtendedBag bag = central_bag(g, w, core);
    json fam = json::array();
    for (const CliquePair& p : family) fam.push_back(to_json(p));
    json j{{"family", fam}};
    try {
      bag = extend_bag(g, w, bag);
    } catch (const PreconditionError& e) {
      j["extend_error"] = e.what();
      j["extend_witness"] = e.witness();
    }
    j["bag"] = to_json(bag);
    sink.out() << j.dump() << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.suite.empty()) throw UsageError("verify needs --suite (one of S1..S12)");
  SuiteParams p;
  p.nmax = o.nmax;
  p.seed = o.seed;
  p.samples = o.samples;
  p.t = o.t;
  p.path_len_max = o.path_len_max;
  p.hmax = o.hmax;
  p.jobs = o.jobs > 0 ? o.jobs : default_jobs();
  std::vector<std::string> ids = o.suite == "all" ? suite_ids() : std::vector<std::string>{o.suite};
  Sink sink(o.output);
  int code = 0;
  for (const std::string& id : ids) {
    SuiteReport r = run_suite(id, p);
    sink.out() << emit_report(r, o.format.empty() ? "text" : o.format, o.timing);
    if (r.failed) code = 1;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clock-free graph toolkit: patterns, obstructions, cutsets, treewidth and balanced separators"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("-i,--input", o.input, "input file (default stdin)");
    c->add_option("-o,--output", o.output, "output file (default stdout)");
    c->add_option("--format", o.format, "g6 | edgelist | json (verify: json | csv | text)");
  };

  auto* detect = app.add_subcommand("detect", "find a pattern; exit 1 when found");
  common(detect);
  detect->add_option("input_file", o.input, "input file");
  detect->add_option("--pattern", o.pattern, "hole, wheel, clock, t-clock, diamond, paw, seagull, claw, prism, pyramid, "
                                             "short-pyramid, theta, three-path-config");
  detect->add_option("--t", o.t, "t for t-clock");

  auto* generate = app.add_subcommand("generate", "print an obstruction or template graph");
  generate->add_option("kind", o.object, "complete, complete-bipartite, wall, line-of-wall, pohoata-davies, prism, "
                                         "pyramid, theta")->required();
  generate->add_option("-o,--output", o.output, "output file (default stdout)");
  generate->add_option("--format", o.format, "g6 | edgelist | json");
  generate->add_option("--t", o.t, "size parameter");
  generate->add_option("--height", o.h, "Pohoata-Davies height h");
  generate->add_option("--subdivisions", o.subdivisions, "internal vertices per wall edge");
  generate->add_option("--lengths", o.lengths, "three path lengths, e.g. 2,3,3");

  auto* clean = app.add_subcommand("clean-check", "decide t-cleanness; exit 1 with an obstruction");
  common(clean);
  clean->add_option("input_file", o.input, "input file");
  clean->add_option("--t", o.t, "t");

  auto* cutset = app.add_subcommand("cutset", "star or clique cutset, or the clique-cutset atoms");
  common(cutset);
  cutset->add_option("input_file", o.input, "input file");
  cutset->add_option("--kind", o.kind, "star | clique | atoms");

  auto* tw = app.add_subcommand("treewidth", "treewidth (min-fill bound unless --exact)");
  common(tw);
  tw->add_option("input_file", o.input, "input file");
  tw->add_flag("--exact", o.exact, "exact treewidth");
  tw->add_flag("--decomposition", o.decomposition, "print an optimal tree decomposition as JSON");

  auto* sep = app.add_subcommand("separator", "(w, 1/2)-balanced separator with provenance trace");
  common(sep);
  sep->add_option("input_file", o.input, "input file");
  sep->add_option("--weights", o.weights, "JSON {vertex: \"p/q\"}; uniform if absent");
  sep->add_option("--t", o.t, "cleanness parameter t");
  sep->add_option("--trace", o.trace, "write the trace here instead of inline");

  auto* bag = app.add_subcommand("bag", "clique-pair family, core, central bag and extended bag");
  common(bag);
  bag->add_option("input_file", o.input, "input file");
  bag->add_option("--weights", o.weights, "JSON {vertex: \"p/q\"}; uniform if absent");

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 1 on any failure");
  verify->add_option("--suite", o.suite, "S1..S12 or all")->required();
  verify->add_option("-o,--output", o.output, "report file (default stdout)");
  verify->add_option("--format", o.format, "json | csv | text");
  verify->add_option("--nmax", o.nmax, "largest order enumerated or sampled");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--samples", o.samples, "random instances");
  verify->add_option("--t", o.t, "t");
  verify->add_option("--path-len-max", o.path_len_max, "S3 longest path");
  verify->add_option("--hmax", o.hmax, "S10 largest height");
  verify->add_option("--jobs", o.jobs, "worker threads (default: CLOCKFREE_JOBS or all cores)");
  verify->add_flag("--timing", o.timing, "include wall-clock time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*detect) return cmd_detect(o);
    if (*generate) return cmd_generate(o);
    if (*clean) return cmd_clean_check(o);
    if (*cutset) return cmd_cutset(o);
    if (*tw) return cmd_treewidth(o);
    if (*sep) return cmd_separator(o);
    if (*bag) return cmd_bag(o);
    if (*verify) return cmd_verify(o);
  } catch (const ScaleError& e) {
    std::cerr << "clockfree: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "clockfree: " << e.what() << '\n';
    if (!e.witness().is_null()) std::cout << json{{"error", e.what()}, {"witness", e.witness()}}.dump() << '\n';
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "clockfree: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "clockfree: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "clockfree: bad JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "clockfree: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
