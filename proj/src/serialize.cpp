#include "clockfree/serialize.hpp"

#include <stdexcept>

namespace clockfree {

json to_json(const VertexSet& s) { return s.to_vector(); }

json to_json(const PatternWitness& w) {
  json j{{"kind", w.kind}, {"roles", w.roles}};
  if (!w.paths.empty()) j["paths"] = w.paths;
  return j;
}

json to_json(const MinimalConnector& c) {
  json j{{"outcome", static_cast<int>(c.outcome)}, {"connector", to_json(c.connector)}, {"x", c.x}};
  switch (c.outcome) {
    case MinimalConnector::Outcome::path_or_hole:
      j["i"] = c.i;
      j["j"] = c.j;
      j["k"] = c.k;
      j["path"] = c.path.vertices;
      j["hole"] = c.hole;
      j["adjacent_pair"] = c.adjacent_pair;
      j["xk_neighbours"] = c.xk_neighbours;
      break;
    case MinimalConnector::Outcome::hub:
      j["hub"] = c.hub;
      break;
    case MinimalConnector::Outcome::triangle:
      j["triangle"] = c.triangle;
      break;
  }
  if (c.outcome != MinimalConnector::Outcome::path_or_hole) {
    json paths = json::array();
    for (const Path& p : c.paths) paths.push_back(p.vertices);
    j["paths"] = paths;
  }
  return j;
}

json to_json(const Cutset& c) {
  json j{{"flavour", flavour_name(c.flavour)}, {"X", to_json(c.X)}, {"side1", to_json(c.side1)},
         {"side2", to_json(c.side2)}};
  if (c.center >= 0) j["center"] = c.center;
  return j;
}

json to_json(const AtomTree& t) {
  json j{{"vertices", to_json(t.vertices)}};
  if (t.cut) j["cut"] = to_json(*t.cut);
  if (!t.children.empty()) {
    json kids = json::array();
    for (const AtomTree& c : t.children) kids.push_back(to_json(c));
    j["children"] = kids;
  }
  return j;
}

json to_json(const CutsetWitness& w) { return json{{"b", w.b}, {"K", to_json(w.K)}, {"X", to_json(w.X)}}; }

json to_json(const TheoremSearchResult& r) {
  static const char* names[] = {"found", "hypothesis_violation", "not_found"};
  json j{{"status", names[static_cast<int>(r.status)]}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.violation.empty()) {
    j["violation"] = r.violation;
    j["violation_witness"] = r.violation_witness;
  }
  if (r.three_path) j["three_path"] = to_json(*r.three_path);
  return j;
}

json to_json(const TreeDecomposition& td) {
  json bags = json::array();
  for (const VertexSet& b : td.bags) bags.push_back(to_json(b));
  json edges = json::array();
  for (auto [a, b] : td.edges) edges.push_back({a, b});
  return json{{"width", td.width()}, {"bags", bags}, {"edges", edges}};
}

json to_json(const Separation& s) { return json{{"A", to_json(s.A)}, {"C", to_json(s.C)}, {"B", to_json(s.B)}}; }

json to_json(const CliquePair& p) {
  return json{{"K1", to_json(p.K1)}, {"K2", to_json(p.K2)}, {"X", to_json(p.X())}, {"closed", p.closed}};
}

json to_json(const ExtendedBag& bag) {
  json core = json::array();
  for (const CoreRecord& r : bag.core) {
    json rec{{"X", to_json(r.X)}, {"separation", to_json(r.sep)}, {"D", to_json(r.D)}};
    json comps = json::array();
    for (const VertexSet& c : r.components) comps.push_back(to_json(c));
    rec["components"] = comps;
    if (!r.marker.vertices.empty()) {
      rec["marker"] = r.marker.vertices;
      rec["anchor"] = r.anchor;
    }
    core.push_back(rec);
  }
  json deleted = json::array();
  for (const VertexSet& d : bag.deleted) deleted.push_back(to_json(d));
  json j{{"beta", to_json(bag.beta)},
         {"core", core},
         {"deleted", deleted},
         {"assignment", bag.assignment},
         {"assignment_ok", bag.assignment_ok},
         {"extended", bag.extended}};
  if (bag.extended) {
    j["beta_star"] = to_json(bag.beta_star);
    j["w_star"] = to_json(bag.w_star);
  }
  return j;
}

json to_json(const LiftResult& r) {
  json recs = json::array();
  for (const LiftRecord& rec : r.records) recs.push_back({{"v", rec.v}, {"rule", rec.rule}, {"Y", to_json(rec.Y)}});
  return json{{"Y", to_json(r.Y)},         {"records", recs},           {"violations", r.violations},
              {"fallback", r.fallback},    {"verified", r.verified},    {"within_bound", r.within_bound}};
}

json to_json(const Weighting& w) {
  json j = json::object();
  for (int v = 0; v < w.order(); ++v)
    if (w.numerator(v) != 0) j[std::to_string(v)] = format_rational(w.at(v));
  return j;
}

VertexSet vertex_set_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vertex set must be a JSON array");
  VertexSet s;
  for (const json& v : j) {
    int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw std::invalid_argument("vertex id out of range");
    s.insert(x);
  }
  return s;
}

PatternWitness witness_from_json(const json& j) {
  PatternWitness w;
  w.kind = j.at("kind").get<std::string>();
  w.roles = j.at("roles").get<std::map<std::string, std::vector<int>>>();
  if (j.contains("paths")) w.paths = j.at("paths").get<std::vector<std::vector<int>>>();
  return w;
}

TreeDecomposition decomposition_from_json(const json& j) {
  TreeDecomposition td;
  for (const json& b : j.at("bags")) td.bags.push_back(vertex_set_from_json(b));
  for (const json& e : j.at("edges")) td.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return td;
}

Weighting weighting_from_json(const json& j, int n) {
  if (!j.is_object()) throw std::invalid_argument("weighting must be a JSON object");
  std::vector<Rational> values(n, Rational(0));
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t used = 0;
    int v = std::stoi(it.key(), &used);
    if (used != it.key().size() || v < 0 || v >= n) throw std::invalid_argument("bad vertex key " + it.key());
    Rational r = it->is_string() ? parse_rational(it->get<std::string>()) : Rational(it->get<std::int64_t>());
    if (r < 0) throw std::invalid_argument("negative weight at vertex " + it.key());
    values[v] = r;
  }
  Rational total(0);
  for (const Rational& r : values) total += r;
  if (total != Rational(1)) throw std::invalid_argument("weights sum to " + format_rational(total) + ", not 1");
  return Weighting::from_rationals(values);
}

}  // namespace clockfree
