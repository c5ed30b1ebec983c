#include "hlindex/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace hlindex {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void put_length(std::string& out, long long n) {
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
}

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw FormatError("graph6: byte " + std::to_string(c) + " outside [63, 126]", pos);
  return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  if (!g.is_simple()) throw GraphError("graph6: multigraphs cannot be encoded");
  const int n = g.order();
  std::string out;
  put_length(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input", 0);
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = sextet(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw FormatError("graph6: truncated 36-bit length", text.size());
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | sextet(text, pos);
  } else {
    if (text.size() < 4) throw FormatError("graph6: truncated 18-bit length", text.size());
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(text, pos);
  }
  if (n > 100000) throw FormatError("graph6: order " + std::to_string(n) + " too large", 0);
  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw FormatError("graph6: expected " + std::to_string(expected) + " bytes, got " +
                          std::to_string(text.size()),
                      std::min(text.size(), expected));
  }
  std::vector<Edge> edges;
  long long t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      const std::size_t at = pos + static_cast<std::size_t>(t / 6);
      if ((sextet(text, at) >> (5 - t % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = text.size() - 1;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (sextet(text, last) & ((1 << pad) - 1)) throw FormatError("graph6: nonzero padding bits", last);
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    throw FormatError(std::string("edge list: missing ") + what, line_no + 1);
  };
  next_line("header");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      throw FormatError("edge list: header must be \"n m\"", line_no);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    next_line("edge");
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw FormatError("edge list: expected \"u v\"", line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge list: endpoint out of range", line_no);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw FormatError("edge list: trailing content after " + std::to_string(m) + " edges", line_no);
    }
  }
  try {
    return Graph::build(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw FormatError(std::string("edge list: ") + e.what(), 1);
  }
}

std::vector<Graph> read_graphs(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && std::isdigit(static_cast<unsigned char>(text[first]))) {
    std::istringstream in{std::string(text)};
    return {read_edge_list(in)};
  }
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
    if (!line.empty()) {
      try {
        out.push_back(decode_graph6(line));
      } catch (const FormatError& e) {
        throw FormatError(std::string(e.what()) + " in line starting at byte " + std::to_string(start),
                          start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace hlindex
