#include "chordspec/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace chordspec {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: character outside [63, 126]");
  }

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw std::invalid_argument("graph6: unsupported length prefix");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
    if (n < 63) throw std::invalid_argument("graph6: non-canonical length prefix");
  }
  if (n > Graph::kMaxOrder) throw std::invalid_argument("graph6: order exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() < expected) throw std::invalid_argument("graph6: truncated bit vector");
  if (text.size() > expected) throw std::invalid_argument("graph6: trailing characters");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int c = text[pos + k / 6] - 63;
      if ((c >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int c = text[pos + k / 6] - 63;
    if ((c & ((1 << (6 - k % 6)) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace chordspec
