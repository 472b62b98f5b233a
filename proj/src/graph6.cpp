#include <stdexcept>
#include <string>

#include "inducibility/labeled_graph.hpp"

namespace inducibility {

namespace {

constexpr int kShortLimit = 62;
constexpr int kLongLimit = 258047;

}  // namespace

std::string graph6_encode(const LabeledGraph& g) {
  if (g.has_loops()) throw std::invalid_argument("graph6 cannot represent loops");
  const int n = g.order();
  if (n > kLongLimit) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

LabeledGraph graph6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw std::invalid_argument("graph6: unsupported size header");
    }
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }
  if (n < 1) throw std::invalid_argument("graph6: graph must have at least one vertex");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) {
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) +
                                " data bytes, got " + std::to_string(text.size() - pos));
  }
  LabeledGraph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.set_edge(i, j, true);
    }
  }
  if (pairs % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - pairs % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

}  // namespace inducibility
