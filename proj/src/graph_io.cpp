#include "paleytype/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "paleytype/error.hpp"

namespace paleytype {

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view& s, int& out) {
  s = trim(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text, int order) {
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    int u = 0;
    int v = 0;
    if (!parse_int(line, u) || !parse_int(line, v) || !trim(line).empty() || u < 0 || v < 0)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected \"u v\"");
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (order < 0) order = max_vertex + 1;
  return Graph::from_edges(order, edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  auto byte = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Error(Errc::Parse, "graph6 input truncated");
    int b = static_cast<unsigned char>(text[i]) - 63;
    if (b < 0 || b > 63) throw Error(Errc::Parse, "graph6 byte out of range at offset " + std::to_string(i));
    return b;
  };
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text.empty()) throw Error(Errc::Parse, "empty graph6 input");
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::uint64_t>(byte(0));
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) != 126) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte(i));
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte(i));
    pos = 8;
  }
  if (n > static_cast<std::uint64_t>(1) << 20) throw Error(Errc::TooLarge, "graph6 order too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != pos + body)
    throw Error(Errc::Parse, "graph6 body has " + std::to_string(text.size() - pos) +
                                 " bytes, expected " + std::to_string(body));
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int b = byte(pos + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph \"" << (g.label().empty() ? std::string("G") : g.label()) << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace paleytype
