#include "homext/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace homext {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, std::size_t& a, std::size_t& b) {
  line = trim(line);
  auto sp = line.find_first_of(" \t");
  if (sp == std::string_view::npos) return false;
  auto first = line.substr(0, sp);
  auto second = trim(line.substr(sp));
  auto r1 = std::from_chars(first.data(), first.data() + first.size(), a);
  auto r2 = std::from_chars(second.data(), second.data() + second.size(), b);
  return r1.ec == std::errc{} && r1.ptr == first.data() + first.size() && r2.ec == std::errc{} &&
         r2.ptr == second.data() + second.size();
}

Graph parse_text_record(const std::vector<std::string>& lines) {
  std::size_t n = 0, m = 0;
  if (lines.empty() || !parse_pair(lines[0], n, m)) throw ParseError("expected header line \"n m\"");
  if (n > kMaxVertices) throw ParseError("vertex count exceeds cap");
  if (lines.size() != m + 1)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  Graph g(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t u = 0, v = 0;
    if (!parse_pair(lines[i], u, v)) throw ParseError("bad edge line: " + lines[i]);
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range: " + lines[i]);
    if (u == v) throw ParseError("loop edge: " + lines[i]);
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw ParseError("duplicate edge: " + lines[i]);
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace

void write_text(std::ostream& os, const Graph& g) {
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  os << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_text(os, g);
  return os.str();
}

Graph from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  auto graphs = read_graphs(is);
  if (graphs.size() != 1) throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view s) {
  s = trim(s);
  if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](int count) {
    std::size_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw ParseError("truncated graph6 size field");
      v = (v << 6) | static_cast<std::size_t>(s[pos++] - 63);
    }
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > kMaxVertices) throw ParseError("graph6 order exceeds cap");
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need) throw ParseError("graph6 body has wrong length");
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  if (bits % 6 != 0) {
    const int last = s.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6 padding bits set");
  }
  return g;
}

std::vector<Graph> read_graphs(std::istream& is) {
  std::vector<Graph> out;
  std::vector<std::string> record;
  std::string line;
  auto flush = [&] {
    if (!record.empty()) {
      out.push_back(parse_text_record(record));
      record.clear();
    }
  };
  while (std::getline(is, line)) {
    const auto t = trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (record.empty()) {
      std::size_t a = 0, b = 0;
      if (t.starts_with(kGraph6Header) || !parse_pair(t, a, b)) {
        out.push_back(from_graph6(t));
        continue;
      }
    }
    record.emplace_back(t);
    std::size_t n = 0, m = 0;
    if (parse_pair(record.front(), n, m) && record.size() == m + 1) flush();
  }
  flush();
  return out;
}

}  // namespace homext
