#include <sstream>
#include <stdexcept>

#include "clockfree/harness.hpp"

namespace clockfree {

namespace {

using nlohmann::json;

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_report(const SuiteReport& r, const std::string& format, bool with_timing) {
  std::ostringstream out;
  if (format == "json") {
    json cx = json::array();
    for (const Counterexample& c : r.counterexamples) cx.push_back({{"graph6", c.graph6}, {"witness", c.witness}});
    json j{{"suite", r.suite},
           {"seed", r.seed},
           {"config", r.config},
           {"counts", {{"total", r.total}, {"hypothesis", r.hypothesis}, {"passed", r.passed}, {"failed", r.failed}}},
           {"counterexamples", cx},
           {"table", r.table},
           {"notes", r.notes}};
    if (with_timing) j["seconds"] = r.seconds;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    if (!r.table.empty() && r.table[0].is_object()) {
      // one row per table entry, columns from the first row
      std::vector<std::string> cols;
      for (auto it = r.table[0].begin(); it != r.table[0].end(); ++it) cols.push_back(it.key());
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
      out << '\n';
      for (const json& row : r.table) {
        for (std::size_t i = 0; i < cols.size(); ++i)
          out << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
        out << '\n';
      }
    } else {
      out << "suite,total,hypothesis,passed,failed\n";
      out << r.suite << ',' << r.total << ',' << r.hypothesis << ',' << r.passed << ',' << r.failed << '\n';
    }
  } else if (format == "text") {
    out << "suite " << r.suite << " seed " << r.seed << '\n';
    bool empty = r.total == 0 && r.table.empty() && r.counterexamples.empty();
    if (!empty) {
      out << "total " << r.total << "\nhypothesis " << r.hypothesis << "\npassed " << r.passed << "\nfailed "
          << r.failed << '\n';
      for (const json& row : r.table) out << "row " << row.dump() << '\n';
      if (!r.notes.empty()) out << "notes " << r.notes.dump() << '\n';
      for (const Counterexample& c : r.counterexamples) out << "counterexample " << c.graph6 << ' ' << c.witness.dump() << '\n';
      if (with_timing) out << "seconds " << r.seconds << '\n';
    }
  } else {
    throw std::invalid_argument("unknown report format '" + format + "' (json, csv, text)");
  }
  return out.str();
}

}  // namespace clockfree
