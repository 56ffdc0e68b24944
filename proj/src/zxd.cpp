#include "zxr/zxd.hpp"

#include <fmt/core.h>

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace zxr {

ParseError::ParseError(int l, int c, std::string r)
    : std::runtime_error(fmt::format("line {}, column {}: {}", l, c, r)),
      line(l),
      column(c),
      reason(std::move(r)) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
           line[j] != '#')
      ++j;
    out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct Where {
  int line;
  int column;
};

}  // namespace

Diagram parse_zxd(std::string_view text) {
  std::map<NodeId, std::pair<NodeKind, Where>, IdLess> decl;
  std::vector<std::pair<NodeId, Where>> ins, outs;
  std::vector<std::tuple<NodeId, NodeId, Where, Where>> edges;
  std::map<NodeId, Where> boundary_at;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const auto& kw = toks[0].text;
    if (kw == "node") {
      if (toks.size() < 3) throw ParseError(lineno, toks[0].column, "node needs an id and a kind");
      const auto& id = toks[1].text;
      if (decl.count(id) || boundary_at.count(id))
        throw ParseError(lineno, toks[1].column, "duplicate node id '" + id + "'");
      const auto& k = toks[2].text;
      NodeKind nk;
      if (k == "h") {
        if (toks.size() > 3) throw ParseError(lineno, toks[3].column, "H-box takes no phase");
        nk = NodeKind::h();
      } else if (k == "z" || k == "x") {
        if (toks.size() > 4) throw ParseError(lineno, toks[4].column, "unexpected token");
        Phase p;
        if (toks.size() == 4) {
          try {
            p = Phase::parse(toks[3].text);
          } catch (const std::exception& e) {
            throw ParseError(lineno, toks[3].column, e.what());
          }
        }
        nk = k == "z" ? NodeKind::z(p) : NodeKind::x(p);
      } else {
        throw ParseError(lineno, toks[2].column, "unknown node kind '" + k + "' (expected z, x or h)");
      }
      decl.emplace(id, std::make_pair(nk, Where{lineno, toks[1].column}));
    } else if (kw == "in" || kw == "out") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto& id = toks[i].text;
        if (decl.count(id) || boundary_at.count(id))
          throw ParseError(lineno, toks[i].column, "boundary id '" + id + "' already used");
        boundary_at[id] = {lineno, toks[i].column};
        (kw == "in" ? ins : outs).emplace_back(id, Where{lineno, toks[i].column});
      }
    } else if (kw == "edge") {
      if (toks.size() != 3) throw ParseError(lineno, toks[0].column, "edge needs exactly two ids");
      edges.emplace_back(toks[1].text, toks[2].text, Where{lineno, toks[1].column},
                         Where{lineno, toks[2].column});
    } else {
      throw ParseError(lineno, toks[0].column, "unknown directive '" + kw + "'");
    }
  }

  Diagram d;
  for (const auto& [id, kw] : decl) d.add_node(id, kw.first);
  for (const auto& [id, w] : ins) d.add_input(id);
  for (const auto& [id, w] : outs) d.add_output(id);
  for (const auto& [a, b, wa, wb] : edges) {
    if (!d.has_node(a)) throw ParseError(wa.line, wa.column, "undeclared node '" + a + "'");
    if (!d.has_node(b)) throw ParseError(wb.line, wb.column, "undeclared node '" + b + "'");
    if (a == b && d.kind(a).kind == Kind::H)
      throw ParseError(wa.line, wa.column, "self-loop on H-box '" + a + "'");
    if (a == b && d.kind(a).kind == Kind::Boundary)
      throw ParseError(wa.line, wa.column, "self-loop on boundary '" + a + "'");
    d.add_edge(a, b);
  }
  auto where_of = [&](const NodeId& id) {
    if (auto it = decl.find(id); it != decl.end()) return it->second.second;
    return boundary_at.at(id);
  };
  for (const auto& id : d.node_ids()) {
    const auto k = d.kind(id).kind;
    const auto deg = d.degree(id);
    if (k == Kind::Boundary && deg != 1) {
      auto w = where_of(id);
      throw ParseError(w.line, w.column,
                       "boundary '" + id + "' has degree " + std::to_string(deg) + ", expected 1");
    }
    if (k == Kind::H && deg != 2) {
      auto w = where_of(id);
      throw ParseError(w.line, w.column,
                       "H-box '" + id + "' has degree " + std::to_string(deg) + ", expected 2");
    }
  }
  d.validate();
  return d;
}

std::string serialize_zxd(const Diagram& d) {
  std::ostringstream os;
  for (const auto& id : d.node_ids()) {
    const auto& k = d.kind(id);
    if (k.kind == Kind::Boundary) continue;
    os << "node " << id << ' ' << kind_name(k.kind);
    if (k.is_spider() && !k.phase.is_zero()) os << ' ' << k.phase.str();
    os << '\n';
  }
  os << "in";
  for (const auto& id : d.inputs()) os << ' ' << id;
  os << "\nout";
  for (const auto& id : d.outputs()) os << ' ' << id;
  os << '\n';
  for (const auto& [a, b] : d.edges()) os << "edge " << a << ' ' << b << '\n';
  return os.str();
}

std::string normalize_text(std::string_view text) { return serialize_zxd(parse_zxd(text)); }

std::string phase_label(const Phase& p) {
  if (p.is_zero()) return "";
  std::string s = p.num() == 1 ? "π" : std::to_string(p.num()) + "π";
  if (p.den() != 1) s += "/" + std::to_string(p.den());
  return s;
}

std::string to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "graph zx {\n  rankdir=LR;\n";
  for (const auto& id : d.node_ids()) {
    const auto& k = d.kind(id);
    os << "  \"" << id << "\" [";
    switch (k.kind) {
      case Kind::Z:
        os << "shape=circle, style=filled, fillcolor=green, label=\"" << phase_label(k.phase) << "\"";
        break;
      case Kind::X:
        os << "shape=circle, style=filled, fillcolor=red, label=\"" << phase_label(k.phase) << "\"";
        break;
      case Kind::H:
        os << "shape=square, style=filled, fillcolor=yellow, label=\"H\"";
        break;
      case Kind::Boundary:
        os << "shape=plaintext, label=\"" << id << "\"";
        break;
    }
    os << "];\n";
  }
  for (const auto& [a, b] : d.edges()) os << "  \"" << a << "\" -- \"" << b << "\";\n";
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Diagram read_zxd_file(const std::string& path) { return parse_zxd(read_text_file(path)); }

}  // namespace zxr
