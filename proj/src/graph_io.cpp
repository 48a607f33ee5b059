#include "clockfree/graph_io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "clockfree/errors.hpp"

namespace clockfree {

namespace {

int sixbits(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw FormatError("graph6 truncated", pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw FormatError("graph6 byte out of range", pos);
  return c - 63;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  if (pos >= text.size()) throw FormatError("graph6 empty", pos);
  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') throw ScaleError("graph6 order beyond 258047 unsupported");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sixbits(text, pos + i);
    if (n <= 62) throw FormatError("graph6 long header for small order", pos);
    pos += 4;
  } else {
    n = sixbits(text, pos);
    pos += 1;
  }
  if (n > kMaxVertices) throw ScaleError("graph6 order " + std::to_string(n) + " exceeds cap");
  long pairs = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != need)
    throw FormatError("graph6 body length " + std::to_string(text.size() - pos) + ", expected " + std::to_string(need),
                      text.size() < pos + need ? text.size() : pos + need);
  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((sixbits(text, at) >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (k % 6) {
    std::size_t at = pos + static_cast<std::size_t>(k / 6);
    int pad = sixbits(text, at) & ((1 << (6 - k % 6)) - 1);
    if (pad) throw FormatError("graph6 nonzero padding", at);
  }
  return b.build();
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::size_t here = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long a, b;
    if (!(ls >> a)) continue;
    if (n < 0) {
      if (ls >> b) throw FormatError("edge list header must be a single integer", here);
      if (a < 0) throw FormatError("negative order", here);
      if (a > kMaxVertices) throw ScaleError("edge list order exceeds cap");
      n = static_cast<int>(a);
      continue;
    }
    if (!(ls >> b)) throw FormatError("edge line needs two endpoints", here);
    if (a < 0 || b < 0 || a >= n || b >= n) throw FormatError("edge endpoint out of range", here);
    if (a == b) throw FormatError("self-loop", here);
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw FormatError("edge list missing order header", 0);
  return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in, const std::string& format) {
  std::vector<Graph> out;
  std::string line;
  if (format == "g6" || format == "graph6") {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      out.push_back(decode_graph6(line));
    }
    return out;
  }
  if (format == "edgelist") {
    std::string block;
    auto flush = [&] {
      if (block.find_first_not_of(" \t\n") != std::string::npos) out.push_back(parse_edge_list(block));
      block.clear();
    };
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos)
        flush();
      else
        block += line + "\n";
    }
    flush();
    return out;
  }
  throw std::invalid_argument("unknown graph format '" + format + "'");
}

}  // namespace clockfree
