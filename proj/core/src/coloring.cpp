#include "kipas/coloring.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kipas/errors.hpp"

namespace kipas {

EdgeColoring::EdgeColoring(int n, int k, Color fill) : n_(n), k_(k) {
  if (n < 1 || n > kMaxVertices)
    throw DomainError("vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
  if (k < 1 || k > kMaxColors)
    throw DomainError("color count " + std::to_string(k) + " outside 1.." + std::to_string(kMaxColors));
  if (fill < 1 || fill > k) throw DomainError("fill color " + std::to_string(fill) + " outside 1..k");
  colors_.assign(static_cast<std::size_t>(pair_count(n)), static_cast<std::uint8_t>(fill));
}

void EdgeColoring::set(int u, int v, Color c) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw DomainError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge of K_" +
                      std::to_string(n_));
  if (c < 1 || c > k_) throw DomainError("color " + std::to_string(c) + " outside 1.." + std::to_string(k_));
  colors_[pair_rank(u, v)] = static_cast<std::uint8_t>(c);
}

void EdgeColoring::set_exact(bool exact) {
  if (exact && static_cast<int>(colors_used(*this).size()) != k_)
    throw DomainError("exact flag set but not all " + std::to_string(k_) + " colors are used");
  exact_ = exact;
}

Graph EdgeColoring::color_graph(Color c) const {
  Graph g(n_);
  for (int v = 1; v < n_; ++v) {
    const std::uint8_t* row = colors_.data() + pair_rank(0, v);
    for (int u = 0; u < v; ++u)
      if (row[u] == c) g.add_edge(u, v);
  }
  return g;
}

ColorClass color_class(const EdgeColoring& coloring, Color c) {
  if (c < 1 || c > coloring.num_colors())
    throw DomainError("color " + std::to_string(c) + " outside 1.." + std::to_string(coloring.num_colors()));
  return {c, coloring.color_graph(c)};
}

std::vector<Color> colors_used(const EdgeColoring& coloring) {
  std::vector<bool> seen(static_cast<std::size_t>(coloring.num_colors()) + 1, false);
  for (auto c : coloring.raw()) seen[c] = true;
  std::vector<Color> out;
  for (Color c = 1; c <= coloring.num_colors(); ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

namespace {

// Splits a line into whitespace-separated integers; false on any non-integer token.
bool parse_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

EdgeColoring read_coloring(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  int stage = 0;  // 0: magic, 1: header, 2: edges
  EdgeColoring result;
  bool exact = false;
  std::vector<bool> seen;
  std::size_t edges_seen = 0;
  std::vector<long> ints;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (line.starts_with('#') || blank(line)) {
      if (end == text.size()) break;
      continue;
    }

    if (stage == 0) {
      if (!parse_ints(line.substr(std::min<std::size_t>(3, line.size())), ints) || !line.starts_with("ecg") ||
          ints.size() != 1 || ints[0] != 1)
        throw ParseError(line_no, "malformed header: expected 'ecg 1'");
      stage = 1;
    } else if (stage == 1) {
      if (!parse_ints(line, ints) || ints.size() != 3)
        throw ParseError(line_no, "malformed header: expected '<n> <k> <exact:0|1>'");
      if (ints[0] < 1 || ints[0] > kMaxVertices) throw ParseError(line_no, "malformed header: n out of range");
      if (ints[1] < 1 || ints[1] > kMaxColors) throw ParseError(line_no, "malformed header: k out of range");
      if (ints[2] != 0 && ints[2] != 1) throw ParseError(line_no, "malformed header: exact flag must be 0 or 1");
      result = EdgeColoring(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
      exact = ints[2] == 1;
      seen.assign(static_cast<std::size_t>(pair_count(result.order())), false);
      stage = 2;
    } else {
      if (!parse_ints(line, ints) || ints.size() != 3) throw ParseError(line_no, "malformed edge line");
      const long u = ints[0], v = ints[1], c = ints[2];
      if (u < 0 || v < 0 || u >= result.order() || v >= result.order() || u >= v)
        throw ParseError(line_no, "edge endpoints must satisfy 0 <= u < v < n");
      if (c < 1 || c > result.num_colors()) throw ParseError(line_no, "color out of range");
      const int rank = pair_rank(static_cast<int>(u), static_cast<int>(v));
      if (seen[rank]) throw ParseError(line_no, "duplicate edge");
      seen[rank] = true;
      ++edges_seen;
      result.set(static_cast<int>(u), static_cast<int>(v), static_cast<Color>(c));
    }
    if (end == text.size()) break;
  }

  if (stage < 2) throw ParseError(line_no, "malformed header: file ends before header");
  if (edges_seen != seen.size()) {
    for (int v = 1; v < result.order(); ++v)
      for (int u = 0; u < v; ++u)
        if (!seen[pair_rank(u, v)])
          throw ParseError(line_no, "missing edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (exact) {
    try {
      result.set_exact(true);
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return result;
}

std::string write_coloring(const EdgeColoring& coloring) {
  std::ostringstream out;
  out << "ecg 1\n" << coloring.order() << ' ' << coloring.num_colors() << ' ' << (coloring.exact() ? 1 : 0) << '\n';
  for (int u = 0; u < coloring.order(); ++u)
    for (int v = u + 1; v < coloring.order(); ++v) out << u << ' ' << v << ' ' << coloring.color(u, v) << '\n';
  return out.str();
}

EdgeColoring load_coloring(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_coloring(buf.str());
}

void save_coloring(const EdgeColoring& coloring, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_coloring(coloring);
}

}  // namespace kipas
