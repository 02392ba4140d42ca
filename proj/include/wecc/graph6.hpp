#ifndef WECC_GRAPH6_HPP
#define WECC_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "wecc/graph.hpp"

namespace wecc {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6: N(n) header, then the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed big-endian six bits per
// byte, each byte offset by 63, last byte zero-padded.

/// Largest order g6_encode accepts (the 4-byte header form).
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Encodes without a trailing newline.
std::string g6_encode(const Graph& g);

/// Decodes one line. A trailing "\n" or "\r\n" is ignored, as is a leading
/// ">>graph6<<" marker. Throws Graph6Error on a malformed header, a payload
/// of the wrong length, a byte outside 63..126 or nonzero padding bits.
Graph g6_decode(std::string_view text);

}  // namespace wecc

#endif  // WECC_GRAPH6_HPP
