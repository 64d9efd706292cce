#include "indcover/graph6.hpp"

#include "indcover/errors.hpp"

namespace indcover {

namespace {

constexpr int kBias = 63;
constexpr unsigned char kLastPrintable = 126;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw FormatError("empty graph6 line", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kLastPrintable) throw FormatError("non-printable or out-of-range byte", i);
  }
  const auto header = static_cast<unsigned char>(text[0]);
  if (header == kLastPrintable) throw FormatError("long-form graph6 header is unsupported", 0);
  const int n = header - kBias;

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() < 1 + byte_count) {
    throw FormatError("truncated bit vector", text.size());
  }
  if (text.size() > 1 + byte_count) {
    throw FormatError("trailing bytes after bit vector", 1 + byte_count);
  }

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[1 + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int byte = text[1 + bit / 6] - kBias;
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (byte & pad_mask) throw FormatError("nonzero padding bits", 1 + bit / 6);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw SizeError("graph6 short form supports at most 62 vertices, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
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

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace indcover
