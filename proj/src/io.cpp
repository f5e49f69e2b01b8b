#include "io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tightpath {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void parse_error(int line, int column, const std::string& what) {
  fail(ErrorKind::parse,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

int parse_int(const Token& tok, int line) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    parse_error(line, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  int r = 0;
  bool geometric = false;
  std::vector<Edge> edges;
  std::unordered_set<VertexMask> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 3) {
        parse_error(line_no, tokens.front().column, "header must be 'n r g'");
      }
      n = parse_int(tokens[0], line_no);
      r = parse_int(tokens[1], line_no);
      if (n < 1 || n > kMaxVertices) parse_error(line_no, tokens[0].column, "n must be in [1, 64]");
      if (r < 1 || r > n) parse_error(line_no, tokens[1].column, "r must be in [1, n]");
      if (tokens[2].text == "cgh") {
        geometric = true;
      } else if (tokens[2].text == "abstract") {
        geometric = false;
      } else {
        parse_error(line_no, tokens[2].column, "geometry must be 'cgh' or 'abstract'");
      }
      have_header = true;
      continue;
    }

    if (static_cast<int>(tokens.size()) != r) {
      parse_error(line_no, tokens.front().column,
                  "edge has " + std::to_string(tokens.size()) + " vertices, expected " +
                      std::to_string(r));
    }
    VertexMask mask = 0;
    int prev = -1;
    for (const Token& tok : tokens) {
      const int v = parse_int(tok, line_no);
      if (v < 0 || v >= n) {
        parse_error(line_no, tok.column, "vertex " + std::to_string(v) + " outside 0.." +
                                             std::to_string(n - 1));
      }
      if (v <= prev) parse_error(line_no, tok.column, "edge vertices must be strictly ascending");
      prev = v;
      mask |= vertex_bit(v);
    }
    if (!seen.insert(mask).second) {
      parse_error(line_no, tokens.front().column, "duplicate edge");
    }
    edges.emplace_back(mask);
  }
  if (!have_header) parse_error(line_no, 1, "missing header line 'n r g'");
  return Hypergraph(n, r, geometric, std::move(edges));
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.r() << ' ' << (h.geometric() ? "cgh" : "abstract") << '\n';
  for (const Edge& e : h.edges()) {
    const auto vs = e.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '\n';
  }
  return out.str();
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::io, "cannot write '" + path + "'");
  out << to_text(h);
  require(static_cast<bool>(out), ErrorKind::io, "write to '" + path + "' failed");
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : h.edges()) edges.push_back(e.vertices());
  return {{"n", h.n()}, {"r", h.r()}, {"geometric", h.geometric()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    return Hypergraph::from_lists(j.at("n").get<int>(), j.at("r").get<int>(),
                                  j.at("geometric").get<bool>(),
                                  j.at("edges").get<std::vector<std::vector<Vertex>>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed hypergraph object: ") + e.what());
  }
}

}  // namespace tightpath
