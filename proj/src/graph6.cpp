#include "wecc/graph6.hpp"

#include <vector>

namespace wecc {
namespace {

constexpr char kOffset = 63;
constexpr std::string_view kMarker = ">>graph6<<";

std::size_t payload_bytes(std::size_t n) {
  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  return (bits + 5) / 6;
}

void check_byte(char c) {
  const auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) {
    throw Graph6Error("graph6 byte out of range: " + std::to_string(b));
  }
}

}  // namespace

std::string g6_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " not supported");
  }
  std::string out;
  out.reserve(4 + payload_bytes(n));
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
    out.push_back(static_cast<char>((n & 0x3f) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph g6_decode(std::string_view text) {
  if (text.starts_with(kMarker)) text.remove_prefix(kMarker.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty line");
  for (char c : text) check_byte(c);

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - kOffset);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Graph6Error("graph6: truncated header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - kOffset);
    if (n <= 62) throw Graph6Error("graph6: non-canonical 4-byte header for n=" + std::to_string(n));
    pos = 4;
  } else {
    if (text.size() < 8) throw Graph6Error("graph6: truncated header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - kOffset);
    if (n <= kGraph6MaxOrder) {
      throw Graph6Error("graph6: non-canonical 8-byte header for n=" + std::to_string(n));
    }
    throw Graph6Error("graph6: order " + std::to_string(n) + " not supported");
  }

  const std::size_t expected = payload_bytes(n);
  if (text.size() - pos != expected) {
    throw Graph6Error("graph6: payload has " + std::to_string(text.size() - pos) +
                      " bytes, expected " + std::to_string(expected) + " for n=" +
                      std::to_string(n));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  const std::size_t total_bits = n * (n > 0 ? n - 1 : 0) / 2;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t b = pos; b < text.size(); ++b) {
    const int value = text[b] - kOffset;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = ((value >> k) & 1) != 0;
      if (bit >= total_bits) {
        if (set) throw Graph6Error("graph6: nonzero padding bits");
        continue;
      }
      if (set) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace wecc
