#include "qconn/graph6.hpp"

namespace qconn {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Graph6Error("truncated input", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw Graph6Error("character outside [63,126]", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw Graph6Error("missing size header", pos);

  int n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw Graph6Error("orders above 258047 are not supported", pos);
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_char(text, pos + i);
    if (n < 63) throw Graph6Error("long-form header encodes an order below 63", pos);
    pos += 4;
  } else {
    n = decode_char(text, pos);
    pos += 1;
  }

  Graph g(n);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars) throw Graph6Error("truncated bit payload", text.size());
  if (text.size() - pos > chars) throw Graph6Error("trailing bytes after payload", pos + chars);

  std::size_t bit = 0;
  int current = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (bit % 6 == 0) current = decode_char(text, pos + bit / 6);
      if ((current >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("order above graph6 long-form range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int current = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      current = (current << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kBias));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + kBias));
  return out;
}

}  // namespace qconn
