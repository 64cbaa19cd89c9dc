#include "eulerclass/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "eulerclass/error.hpp"

namespace eulerclass {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long to_int(std::string_view tok, int line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  long vertices = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    std::vector<std::string_view> tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "v") {
      if (vertices >= 0) throw ParseError(where + "duplicate vertex count");
      if (tok.size() != 2) throw ParseError(where + "expected 'v N'");
      vertices = to_int(tok[1], line_no);
      if (vertices < 1) throw ParseError(where + "graph needs at least one vertex");
    } else if (tok[0] == "e") {
      if (vertices < 0) throw ParseError(where + "edge before vertex count");
      if (tok.size() != 3) throw ParseError(where + "expected 'e U V'");
      long u = to_int(tok[1], line_no), v = to_int(tok[2], line_no);
      if (u < 0 || v < 0 || u >= vertices || v >= vertices)
        throw ParseError(where + "endpoint out of range");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else {
      throw ParseError(where + "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (vertices < 0) throw ParseError("missing vertex count line");
  return Multigraph(static_cast<int>(vertices), std::move(edges));
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Multigraph& g, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << '\n';
  os << "v " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.tail << ' ' << e.head << '\n';
  return os.str();
}

std::vector<EdgeId> parse_edge_ids(std::string_view text, int edge_count) {
  std::vector<EdgeId> out;
  if (tokens(text).empty()) return out;
  for (std::string_view part : split(text, ',')) {
    std::vector<std::string_view> tok = tokens(part);
    if (tok.size() != 1) throw ParseError("malformed edge list '" + std::string(text) + "'");
    long id = to_int(tok[0], 1);
    if (id < 1 || id > edge_count)
      throw ParseError("edge e" + std::to_string(id) + " does not exist");
    out.push_back(static_cast<EdgeId>(id - 1));
  }
  return out;
}

EdgeSet parse_edge_set(std::string_view text, int edge_count) {
  EdgeSet s;
  for (EdgeId e : parse_edge_ids(text, edge_count)) {
    if (s.contains(e)) throw ParseError("edge e" + std::to_string(e + 1) + " listed twice");
    s.insert(e);
  }
  return s;
}

}  // namespace eulerclass
