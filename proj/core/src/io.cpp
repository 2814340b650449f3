#include "satnum/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace satnum::io {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_g6_char(char c) { return c >= 63 && c <= 126; }

std::uint64_t read_sextets(std::string_view text, std::size_t& pos, int count) {
  std::uint64_t value = 0;
  for (int i = 0; i < count; ++i) {
    if (pos >= text.size()) throw GraphError("graph6: truncated order field");
    const char c = text[pos++];
    if (!is_g6_char(c)) throw GraphError("graph6: malformed header byte");
    value = (value << 6) | static_cast<std::uint64_t>(c - kBias);
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= text.size()) throw GraphError("graph6: truncated (empty input)");

  std::uint64_t n = 0;
  if (text[pos] != 126) {
    n = read_sextets(text, pos, 1);
  } else if (pos + 1 < text.size() && text[pos + 1] == 126) {
    pos += 2;
    n = read_sextets(text, pos, 6);
  } else {
    pos += 1;
    n = read_sextets(text, pos, 3);
  }
  if (n > 100000) throw GraphError("graph6: order too large for this library");

  const std::size_t pairs = static_cast<std::size_t>(n * (n > 0 ? n - 1 : 0) / 2);
  const std::size_t nbytes = (pairs + 5) / 6;
  if (text.size() - pos < nbytes) throw GraphError("graph6: truncated bit field");
  if (text.size() - pos > nbytes) throw GraphError("graph6: trailing garbage after bit field");

  Graph g(static_cast<std::size_t>(n));
  std::size_t bit = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const char c = text[pos + b];
    if (!is_g6_char(c)) throw GraphError("graph6: malformed byte in bit field");
    const int sextet = c - kBias;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool on = (sextet >> k) & 1;
      if (bit >= pairs) {
        if (on) throw GraphError("graph6: nonzero padding bits");
        continue;
      }
      if (on) g.insert_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    const int sextets = n <= 258047 ? 3 : 6;
    out.append(sextets == 3 ? 1 : 2, static_cast<char>(126));
    for (int k = sextets - 1; k >= 0; --k) {
      out.push_back(static_cast<char>(((n >> (6 * k)) & 0x3F) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::string to_dot(const Graph& g, const std::map<Vertex, std::string>& labels,
                   std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (auto it = labels.find(v); it != labels.end()) {
      os << " [label=\"";
      for (char c : it->second) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
      }
      os << "\"]";
    }
    os << ";\n";
  }
  for (const auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::uint64_t> numbers;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) {
      throw GraphError("edge list: unexpected character '" + std::string(1, c) + "'");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' &&
        text[pos] != '\r' && text[pos] != '#') {
      throw GraphError("edge list: malformed number");
    }
    numbers.push_back(value);
  }
  if (numbers.size() < 2) throw GraphError("edge list: missing \"n m\" header");
  const auto n = numbers[0];
  const auto m = numbers[1];
  if (numbers.size() != 2 + 2 * m) {
    throw GraphError("edge list: header announces " + std::to_string(m) + " edges but found " +
                     std::to_string((numbers.size() - 2) / 2));
  }
  EdgeList edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto u = numbers[2 + 2 * k];
    const auto v = numbers[3 + 2 * k];
    if (u >= n || v >= n) throw GraphError("edge list: endpoint out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace satnum::io
