#include "ramsey/graph6.hpp"

#include <cstddef>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr int kBias = 63;          // printable offset added to every sextet
constexpr int kLongMarker = 126;   // '~', switches to the multi-byte size form

int sextet_at(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw parse_error("graph6 input truncated", s.size());
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < kBias || c > kLongMarker) throw parse_error("graph6 byte out of range", i);
  return c - kBias;
}

// upper-triangle bit position of edge (u, v) with u < v
std::size_t bit_index(int u, int v) {
  return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("empty graph6 input", 0);

  std::size_t pos = 0;
  long long n;
  if (sextet_at(text, 0) != kLongMarker - kBias) {
    n = sextet_at(text, 0);
    pos = 1;
  } else {
    if (sextet_at(text, 1) == kLongMarker - kBias)
      throw parse_error("graph6 size too large", 1);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet_at(text, i);
    pos = 4;
  }
  if (n > 4096) throw parse_error("graph6 vertex count exceeds supported size", 0);

  Graph g(static_cast<int>(n));
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() > pos + nbytes)
    throw parse_error("trailing bytes after graph6 data", pos + nbytes);

  std::size_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int word = sextet_at(text, pos + bit / 6);
      if ((word >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.n();
  if (n > 258047) throw precondition_error("graph too large for the supported graph6 forms");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongMarker));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }

  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<unsigned char> bytes((nbits + 5) / 6, 0);
  for (auto [u, v] : g.edges()) {
    std::size_t bit = bit_index(u, v);
    bytes[bit / 6] |= 1u << (5 - bit % 6);
  }
  for (unsigned char b : bytes) out.push_back(static_cast<char>(b + kBias));
  return out;
}

}  // namespace ramsey
