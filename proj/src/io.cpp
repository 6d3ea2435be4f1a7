#include "raag/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace raag::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

bool looks_like_dot(std::string_view text) {
  for (std::string_view t = trim(text); !t.empty();) {
    if (t.starts_with("//") || t.starts_with("#")) {
      const auto nl = t.find('\n');
      if (nl == std::string_view::npos) return false;
      t = trim(t.substr(nl + 1));
      continue;
    }
    return t.starts_with("graph") || t.starts_with("strict") || t.starts_with("digraph");
  }
  return false;
}

Graph parse_plain(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<int> edge_lines;
  bool have_header = false;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      labels = std::move(tokens);
      have_header = true;
      try {
        Graph probe(labels);
      } catch (const InputError& e) {
        fail_at(lineno, e.what());
      }
      continue;
    }
    if (tokens.size() != 2) fail_at(lineno, "expected an edge 'u v', got " + std::to_string(tokens.size()) + " tokens");
    edges.emplace_back(tokens[0], tokens[1]);
    edge_lines.push_back(lineno);
  }
  if (!have_header) throw InputError("line 1: missing vertex list");
  Graph g(labels);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      g.add_edge(edges[i].first, edges[i].second);
    } catch (const InputError& e) {
      fail_at(edge_lines[i], e.what());
    }
  }
  return g;
}

struct DotToken {
  std::string text;
  bool id = false;
  int line = 1;
};

std::vector<DotToken> dot_tokens(std::string_view s) {
  std::vector<DotToken> out;
  int line = 1;
  std::size_t i = 0;
  auto at_line_start = [&](std::size_t k) {
    while (k > 0 && (s[k - 1] == ' ' || s[k - 1] == '\t')) --k;
    return k == 0 || s[k - 1] == '\n';
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (s.substr(i).starts_with("//") || (c == '#' && at_line_start(i))) {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (s.substr(i).starts_with("/*")) {
      const auto end = s.find("*/", i + 2);
      if (end == std::string_view::npos) fail_at(line, "unterminated comment");
      for (std::size_t k = i; k < end; ++k) line += s[k] == '\n';
      i = end + 2;
    } else if (s.substr(i).starts_with("--") || s.substr(i).starts_with("->")) {
      out.push_back({std::string(s.substr(i, 2)), false, line});
      i += 2;
    } else if (c == '"') {
      std::string text;
      const int start = line;
      for (++i; i < s.size() && s[i] != '"'; ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        line += s[i] == '\n';
        text += s[i];
      }
      if (i == s.size()) fail_at(start, "unterminated string");
      ++i;
      out.push_back({text, true, start});
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) ++j;
      out.push_back({std::string(s.substr(i, j - i)), true, line});
      i = j;
    } else if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
      out.push_back({std::string(1, c), false, line});
      ++i;
    } else {
      fail_at(line, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

Graph parse_dot(std::string_view text) {
  const auto toks = dot_tokens(text);
  std::size_t p = 0;
  auto peek = [&](std::string_view t) { return p < toks.size() && !toks[p].id && toks[p].text == t; };
  auto line = [&] { return p < toks.size() ? toks[p].line : (toks.empty() ? 1 : toks.back().line); };
  auto expect = [&](std::string_view t) {
    if (!peek(t)) fail_at(line(), "expected '" + std::string(t) + "'");
    ++p;
  };
  auto keyword = [&](std::string_view k) { return p < toks.size() && toks[p].id && toks[p].text == k; };

  if (keyword("strict")) ++p;
  if (keyword("digraph")) fail_at(line(), "directed graphs are not supported");
  if (!keyword("graph")) fail_at(line(), "expected 'graph'");
  ++p;
  if (p < toks.size() && toks[p].id) ++p;
  expect("{");

  std::vector<std::string> labels;
  std::unordered_map<std::string, int> seen;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_lines;
  auto node = [&]() -> int {
    if (p >= toks.size() || !toks[p].id) fail_at(line(), "expected a vertex name");
    const auto& name = toks[p++].text;
    auto [it, fresh] = seen.emplace(name, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(name);
    return it->second;
  };
  auto skip_attrs = [&] {
    while (peek("[")) {
      ++p;
      while (p < toks.size() && !peek("]")) ++p;
      expect("]");
    }
  };

  while (!peek("}")) {
    if (p >= toks.size()) fail_at(line(), "missing '}'");
    if (peek(";") || peek(",")) {
      ++p;
      continue;
    }
    if (peek("{") || keyword("subgraph")) fail_at(line(), "subgraphs are not supported");
    if ((keyword("node") || keyword("edge") || keyword("graph")) && p + 1 < toks.size() &&
        !toks[p + 1].id && toks[p + 1].text == "[") {
      ++p;
      skip_attrs();
      continue;
    }
    if (p + 1 < toks.size() && !toks[p + 1].id && toks[p + 1].text == "=") {
      p += 2;
      if (p >= toks.size() || !toks[p].id) fail_at(line(), "expected a value after '='");
      ++p;
      continue;
    }
    int prev = node();
    while (peek("--") || peek("->")) {
      if (peek("->")) fail_at(line(), "directed edge '->' in an undirected graph");
      const int l = toks[p].line;
      ++p;
      const int next = node();
      edges.emplace_back(prev, next);
      edge_lines.push_back(l);
      prev = next;
    }
    skip_attrs();
  }
  ++p;
  if (p != toks.size()) fail_at(toks[p].line, "trailing input after '}'");

  Graph g(labels);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      g.add_edge(edges[i].first, edges[i].second);
    } catch (const InputError& e) {
      fail_at(edge_lines[i], e.what());
    }
  }
  return g;
}

std::string format_letter(const Graph& g, Letter l, int exponent) {
  std::string s = g.label(l.vertex);
  const int k = exponent * l.sign;
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of vertex labels");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw InputError(std::string(what) + " must contain strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string side_name(Side s) {
  switch (s) {
    case Side::edge: return "edge";
    case Side::first: return "side1";
    case Side::second: return "side2";
  }
  return "?";
}

}  // namespace

Graph parse_graph(std::string_view text) {
  return looks_like_dot(text) ? parse_dot(text) : parse_plain(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (int v = 0; v < g.size(); ++v) out += (v ? " " : "") + g.label(v);
  out += "\n";
  for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

Word parse_word(const Graph& g, std::string_view text) {
  Word w;
  const auto tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "1" && !g.has_label("1")) return w;
  for (const auto& tok : tokens) {
    std::string_view name = tok;
    int k = 1;
    if (auto caret = name.find('^'); caret != std::string_view::npos) {
      const std::string_view exp = name.substr(caret + 1);
      name = name.substr(0, caret);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), k);
      if (ec != std::errc{} || ptr != exp.data() + exp.size() || exp.empty())
        throw InputError("bad exponent in word token '" + tok + "'");
    }
    if (name.empty()) throw InputError("missing generator in word token '" + tok + "'");
    int v = -1;
    if (g.has_label(name)) {
      v = g.index(name);
    } else {
      std::string lower(name);
      bool upper = false;
      for (auto& ch : lower) {
        if (std::isupper(static_cast<unsigned char>(ch))) upper = true;
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
      if (!upper || !g.has_label(lower)) throw InputError("unknown generator '" + std::string(name) + "'");
      v = g.index(lower);
      k = -k;
    }
    w *= Word::power(v, k);
  }
  return w;
}

std::string format_word(const Graph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(g, w[i], 1);
  }
  return out;
}

VertexSet parse_vertex_list(const Graph& g, std::string_view text) {
  std::string spaced(text);
  for (auto& c : spaced)
    if (c == ',') c = ' ';
  return g.set_of(split_ws(spaced));
}

IntegerVector parse_phi(const Graph& g, std::string_view text) {
  IntegerVector phi;
  std::string spaced(text);
  for (auto& c : spaced)
    if (c == ',') c = ' ';
  for (const auto& tok : split_ws(spaced)) {
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw InputError("bad integer '" + tok + "' in phi");
    phi.values.push_back(x);
  }
  if (phi.values.size() != static_cast<std::size_t>(g.size()))
    throw InputError("phi has " + std::to_string(phi.values.size()) + " entries but the graph has " +
                     std::to_string(g.size()) + " vertices");
  return phi;
}

Json labels_json(const Graph& g, VertexSet s) {
  Json out = Json::array();
  for (const auto& l : g.labels_of(s)) out.push_back(l);
  return out;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"vertices", g.labels()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InputError("graph JSON needs a 'vertices' array");
  Graph g(string_list(j["vertices"], "vertices"));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : j["edges"]) {
      const auto ends = string_list(e, "edge");
      if (ends.size() != 2) throw InputError("every edge needs exactly two endpoints");
      g.add_edge(ends[0], ends[1]);
    }
  }
  return g;
}

Json to_json(const AmalgamSplitting& s) {
  const Graph& g = s.ambient();
  return {{"lambda", labels_json(g, s.lambda())},
          {"side1", labels_json(g, s.side1())},
          {"side2", labels_json(g, s.side2())}};
}

AmalgamSplitting splitting_from_json(const Graph& g, const Json& j) {
  if (!j.is_object()) throw InputError("splitting JSON must be an object");
  for (const char* key : {"lambda", "side1", "side2"})
    if (!j.contains(key)) throw InputError(std::string("splitting JSON lacks '") + key + "'");
  return AmalgamSplitting::from_sides(g, g.set_of(string_list(j["lambda"], "lambda")),
                                      g.set_of(string_list(j["side1"], "side1")),
                                      g.set_of(string_list(j["side2"], "side2")));
}

Json to_json(const RaagHom& h) {
  Json out = Json::object();
  for (int v = 0; v < h.source.size(); ++v) out[h.source.label(v)] = format_word(h.target, h.images[v]);
  return out;
}

RaagHom hom_from_json(const Graph& source, const Graph& target, const Json& j) {
  if (!j.is_object()) throw InputError("hom JSON must map source vertices to word strings");
  RaagHom h{source, target, std::vector<Word>(source.size())};
  std::vector<bool> given(source.size(), false);
  for (const auto& [key, value] : j.items()) {
    const int v = source.index(key);
    if (!value.is_string()) throw InputError("image of '" + key + "' must be a word string");
    h.images[v] = parse_word(target, value.get<std::string>());
    given[v] = true;
  }
  for (int v = 0; v < source.size(); ++v)
    if (!given[v]) throw InputError("no image given for '" + source.label(v) + "'");
  return h;
}

Json to_json(const Graph& g, const Classification& c) {
  Json out = {{"kind", c.kind == Kind::elliptic ? "elliptic" : "hyperbolic"},
              {"translation_length", c.translation_length},
              {"conjugator", format_word(g, c.conjugator)},
              {"core", format_word(g, c.core)}};
  if (c.kind == Kind::elliptic) out["side"] = side_name(c.side);
  return out;
}

Json to_json(const Graph& ambient, const TreeVertex& v) {
  return {{"side", side_name(v.side)}, {"rep", format_word(ambient, v.rep.word())}};
}

Json to_json(const TreeBall& ball) {
  const Graph& g = ball.splitting().ambient();
  Json vertices = Json::array();
  Json adjacency = Json::array();
  for (std::size_t i = 0; i < ball.vertex_count(); ++i) {
    const auto& v = ball.vertex(static_cast<int>(i));
    vertices.push_back({{"id", i}, {"side", side_name(v.side)}, {"rep", format_word(g, v.rep.word())}});
    Json nbrs = Json::array();
    for (const auto& inc : ball.incident(static_cast<int>(i))) nbrs.push_back(inc.other);
    adjacency.push_back(nbrs);
  }
  Json edges = Json::array();
  for (std::size_t i = 0; i < ball.edge_count(); ++i) {
    const auto& e = ball.edge(static_cast<int>(i));
    edges.push_back({{"id", i}, {"rep", format_word(g, e.edge.rep.word())}, {"ends", {e.first, e.second}}});
  }
  return {{"splitting", to_json(ball.splitting())},
          {"L", ball.length()},
          {"vertices", vertices},
          {"edges", edges},
          {"adjacency", adjacency}};
}

Json to_json(const Graph& source, const Graph& ambient, const TheoremReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json pass = nullptr;
    if (c.status == Status::pass) pass = true;
    if (c.status == Status::fail) pass = false;
    checks.push_back({{"name", c.name},
                      {"pass", pass},
                      {"status", to_string(c.status)},
                      {"bound", c.bound ? Json(*c.bound) : Json(nullptr)},
                      {"detail", c.detail}});
  }
  Json out = {{"case", to_string(r.kind)}, {"lambda", labels_json(source, r.lambda)}};
  out["witness_edge"] = r.witness_edge ? Json(format_word(ambient, r.witness_edge->rep.word())) : Json(nullptr);
  out["separated_pair"] = r.separated ? Json::array({source.label(r.separated->first), source.label(r.separated->second)})
                                 : Json(nullptr);
  out["passed"] = r.passed();
  out["certification"] = checks;
  return out;
}

Json to_json(const Graph& g, const AbelianReport& r) {
  Json cliques = Json::array();
  for (auto s : r.cut_cliques) cliques.push_back(labels_json(g, s));
  return {{"complete", r.complete},
          {"disconnected", r.disconnected},
          {"cut_cliques", cliques},
          {"splits", r.splits},
          {"verdict", r.verdict}};
}

}  // namespace raag::io
