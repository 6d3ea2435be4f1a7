#include "raag/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "raag/io.hpp"

namespace raag::cli {

namespace {

using io::Json;

struct Global {
  std::string format = "text";
  std::optional<int> length;
  int axis_bound = 8;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 1;
  bool serial = false;

  bool json() const { return format == "json"; }
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
  std::size_t vertex_budget() const {
    if (budget) return *budget;
    if (const char* env = std::getenv("RAAG_BUDGET")) {
      try {
        const long long v = std::stoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
      } catch (const std::exception&) {
      }
      throw InputError("RAAG_BUDGET must be a positive integer");
    }
    return 100000;
  }
  CheckerConfig checker() const {
    CheckerConfig c;
    c.ball_length = length.value_or(6);
    c.axis_bound = axis_bound;
    c.vertex_budget = vertex_budget();
    c.exec = exec();
    return c;
  }
};

struct SplitArgs {
  std::string lambda;
  bool lambda_given = false;
  std::string pick;
  std::string splitting_file;
};

std::string set_text(const Graph& g, VertexSet s) {
  std::string out = "{";
  for (const auto& l : g.labels_of(s)) out += (out.size() > 1 ? "," : "") + l;
  return out + "}";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

AmalgamSplitting make_splitting(const Graph& g, const SplitArgs& a) {
  if (!a.splitting_file.empty()) return io::splitting_from_json(g, Json::parse(io::read_file(a.splitting_file)));
  if (!a.lambda_given) throw InputError("give --lambda or --splitting");
  const VertexSet lam = io::parse_vertex_list(g, a.lambda);
  int pick = -1;
  if (!a.pick.empty()) {
    pick = g.index(a.pick);
  } else {
    const VertexSet rest = g.all() - lam;
    if (rest.empty()) throw InputError("lambda " + set_text(g, lam) + " is not separating");
    pick = rest.members().front();
  }
  return AmalgamSplitting::from_separator(g, lam, pick);
}

void add_split_options(CLI::App* cmd, SplitArgs& a) {
  cmd->add_option("--lambda", a.lambda, "Separating vertex set, e.g. a,c")->each([&a](const std::string&) {
    a.lambda_given = true;
  });
  cmd->add_option("--pick", a.pick, "Vertex whose component forms side1");
  cmd->add_option("--splitting", a.splitting_file, "Splitting descriptor JSON");
}

// ---- graph ----

int cmd_graph(const Global& gl, const std::string& action, const std::string& file, std::ostream& out) {
  const Graph g = io::read_graph_file(file);
  auto sets_out = [&](const std::vector<VertexSet>& sets, const char* key) {
    if (gl.json()) {
      Json arr = Json::array();
      for (auto s : sets) arr.push_back(io::labels_json(g, s));
      emit(out, Json{{key, arr}});
    } else if (sets.empty()) {
      out << "none\n";
    } else {
      for (auto s : sets) out << set_text(g, s) << "\n";
    }
  };
  if (action == "info") {
    const auto comps = components(g);
    if (gl.json()) {
      Json j = io::to_json(g);
      Json cs = Json::array();
      for (auto c : comps) cs.push_back(io::labels_json(g, c));
      j["connected"] = comps.size() <= 1;
      j["complete"] = is_complete(g);
      j["components"] = cs;
      emit(out, j);
    } else {
      out << "vertices: " << g.size() << " " << set_text(g, g.all()) << "\n";
      out << "edges: " << g.edge_count() << "\n";
      out << "connected: " << (comps.size() <= 1 ? "true" : "false") << "\n";
      out << "complete: " << (is_complete(g) ? "true" : "false") << "\n";
      out << "components:";
      for (auto c : comps) out << " " << set_text(g, c);
      out << "\n";
    }
  } else if (action == "separators") {
    sets_out(minimal_separators(g, kDefaultSeparatorBound, gl.exec()), "separators");
  } else if (action == "cut-vertices") {
    std::vector<VertexSet> singles;
    for (int v : cut_vertices(g).members()) singles.push_back(VertexSet::single(v));
    if (gl.json()) {
      emit(out, Json{{"cut_vertices", io::labels_json(g, cut_vertices(g))}});
    } else {
      sets_out(singles, "cut_vertices");
    }
  } else {
    sets_out(cut_cliques(g, gl.exec()), "cut_cliques");
  }
  return kPass;
}

// ---- word ----

int cmd_word(const Global& gl, const std::string& action, const std::string& file,
             const std::vector<std::string>& texts, const SplitArgs& sa, std::ostream& out) {
  const Graph g = io::read_graph_file(file);
  std::vector<Word> words;
  for (const auto& t : texts) words.push_back(io::parse_word(g, t));
  if (action == "equal") {
    if (words.size() != 2) throw InputError("word equal takes exactly two words");
    const bool eq = equal(g, words[0], words[1]);
    if (gl.json())
      emit(out, Json{{"equal", eq}});
    else
      out << (eq ? "true" : "false") << "\n";
    return kPass;
  }
  if (words.empty()) throw InputError("no words given");
  if (action == "member" && !sa.lambda_given) throw InputError("word member needs --lambda");
  const VertexSet lam = action == "member" ? io::parse_vertex_list(g, sa.lambda) : VertexSet{};
  Json results = Json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    Json r = {{"word", texts[i]}};
    std::string line;
    if (action == "nf") {
      line = io::format_word(g, normal_form(g, w).word());
      r["normal_form"] = line;
    } else if (action == "support") {
      const VertexSet s = support(g, w);
      line = set_text(g, s);
      r["support"] = io::labels_json(g, s);
    } else {
      const bool m = in_special_subgroup(g, lam, w);
      line = m ? "true" : "false";
      r["member"] = m;
    }
    results.push_back(r);
    if (!gl.json()) out << line << "\n";
  }
  if (gl.json()) emit(out, Json{{"results", results}});
  return kPass;
}

// ---- split ----

int cmd_split(const Global& gl, const std::string& action, const std::string& file,
              const std::vector<std::string>& texts, const SplitArgs& sa, std::ostream& out) {
  const Graph g = io::read_graph_file(file);
  const AmalgamSplitting s = make_splitting(g, sa);
  if (action == "make") {
    if (gl.json()) {
      emit(out, io::to_json(s));
    } else {
      out << "lambda: " << set_text(g, s.lambda()) << "\n";
      out << "side1: " << set_text(g, s.side1()) << "\n";
      out << "side2: " << set_text(g, s.side2()) << "\n";
    }
    return kPass;
  }
  if (texts.empty()) throw InputError("split classify needs a word");
  Json results = Json::array();
  for (const auto& t : texts) {
    const auto c = classify(s, io::parse_word(g, t));
    Json r = io::to_json(g, c);
    r["word"] = t;
    results.push_back(r);
    if (!gl.json()) {
      if (c.kind == Kind::elliptic)
        out << t << ": elliptic, fixes " << io::format_word(g, c.conjugator) << "·A(" << r["side"].get<std::string>()
            << ")\n";
      else
        out << t << ": hyperbolic, translation length " << c.translation_length << "\n";
    }
  }
  if (gl.json()) emit(out, Json{{"splitting", io::to_json(s)}, {"results", results}});
  return kPass;
}

// ---- tree ----

std::string vertex_text(const Graph& g, const TreeVertex& v) {
  return io::format_word(g, v.rep.word()) + "·A(" + (v.side == Side::first ? "side1" : "side2") + ")";
}

int cmd_tree(const Global& gl, const std::string& action, const std::string& file,
             const std::vector<std::string>& texts, const SplitArgs& sa, std::ostream& out) {
  const Graph g = io::read_graph_file(file);
  const AmalgamSplitting s = make_splitting(g, sa);
  BallOptions opts;
  opts.length = gl.length.value_or(3);
  opts.vertex_budget = gl.vertex_budget();
  opts.exec = gl.exec();
  const TreeBall ball = build_ball(s, opts);
  if (action == "ball") {
    if (gl.json()) {
      emit(out, io::to_json(ball));
    } else {
      out << "L: " << ball.length() << "\n";
      out << "vertices: " << ball.vertex_count() << "\n";
      out << "edges: " << ball.edge_count() << "\n";
      for (std::size_t i = 0; i < ball.vertex_count(); ++i)
        out << "  v" << i << " " << vertex_text(g, ball.vertex(static_cast<int>(i))) << "\n";
      for (std::size_t i = 0; i < ball.edge_count(); ++i) {
        const auto& e = ball.edge(static_cast<int>(i));
        out << "  e" << i << " " << io::format_word(g, e.edge.rep.word()) << "·A(lambda) v" << e.first << " v"
            << e.second << "\n";
      }
    }
    return kPass;
  }
  if (texts.size() != 1) throw InputError("tree " + action + " takes exactly one word");
  const Word w = io::parse_word(g, texts[0]);
  const std::vector<int> found = action == "fix" ? fixed_vertices(ball, w) : axis_vertices(ball, w);
  if (gl.json()) {
    Json vs = Json::array();
    for (int v : found) {
      Json j = io::to_json(g, ball.vertex(v));
      j["id"] = v;
      vs.push_back(j);
    }
    emit(out, Json{{"word", texts[0]}, {"L", ball.length()}, {"ball_vertices", ball.vertex_count()}, {"vertices", vs}});
  } else {
    out << found.size() << " of " << ball.vertex_count() << " ball vertices\n";
    for (int v : found) out << "  v" << v << " " << vertex_text(g, ball.vertex(v)) << "\n";
  }
  return kPass;
}

// ---- check ----

struct CheckArgs {
  std::string hom_file;
  std::string base_file;
  std::string target_file;
  std::string phi;
  bool all_separators = false;
  std::size_t pairs = 100;
};

void print_report(const Graph& src, const Graph& ambient, const TheoremReport& r, std::ostream& out) {
  out << "case: " << to_string(r.kind) << "\n";
  const bool conclusive = r.kind == Case::all_elliptic || r.kind == Case::some_hyperbolic;
  if (conclusive) {
    out << "lambda: " << set_text(src, r.lambda) << "\n";
    if (r.witness_edge) out << "witness edge: " << io::format_word(ambient, r.witness_edge->rep.word()) << "·A(lambda)\n";
    if (r.separated) out << "separated: " << src.label(r.separated->first) << " " << src.label(r.separated->second) << "\n";
  }
  out << "checks:\n";
  for (const auto& c : r.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (c.bound) out << " (bound " << *c.bound << ")";
    out << ": " << c.detail << "\n";
  }
  out << "passed: " << (r.passed() ? "true" : "false") << "\n";
}

int report_exit(const TheoremReport& r) {
  return r.passed() ? kPass : kCertificationFailure;
}

Json load_json(const std::string& path) {
  const std::string text = io::read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_check_theorem(const Global& gl, const std::string& file, const SplitArgs& sa, const CheckArgs& ca,
                      std::ostream& out) {
  const CheckerConfig config = gl.checker();
  if (!ca.hom_file.empty()) {
    if (ca.base_file.empty()) throw InputError("--hom needs --base");
    const Json hom = load_json(ca.hom_file);
    const Json base = load_json(ca.base_file);
    Graph source;
    if (!file.empty())
      source = io::read_graph_file(file);
    else if (hom.is_object() && hom.contains("source"))
      source = io::graph_from_json(hom["source"]);
    else
      throw InputError("give the source graph as a file or as \"source\" in the hom JSON");
    Graph target;
    if (!ca.target_file.empty())
      target = io::read_graph_file(ca.target_file);
    else if (base.is_object() && base.contains("graph"))
      target = io::graph_from_json(base["graph"]);
    else
      throw InputError("give the target graph with --target or as \"graph\" in the base JSON");
    const Json& images = hom.is_object() && hom.contains("images") ? hom["images"] : hom;
    RaagHom h = io::hom_from_json(source, target, images);
    const Action a = Action::induced(InducedAction(std::move(h), io::splitting_from_json(target, base)));
    const auto r = verify_theorem(a, config);
    if (gl.json())
      emit(out, io::to_json(source, target, r));
    else
      print_report(source, target, r, out);
    return report_exit(r);
  }
  if (file.empty()) throw InputError("check theorem needs a graph file");
  const Graph g = io::read_graph_file(file);
  if (!ca.phi.empty()) {
    const Action a = Action::line(LineAction(g, io::parse_phi(g, ca.phi)));
    const auto r = verify_theorem(a, config);
    if (gl.json())
      emit(out, io::to_json(g, g, r));
    else
      print_report(g, g, r, out);
    return report_exit(r);
  }
  if (ca.all_separators) {
    const auto runs = verify_all_separators(g, config);
    bool all = true;
    Json arr = Json::array();
    std::vector<std::array<std::string, 4>> rows;
    for (const auto& run : runs) {
      all = all && run.report.passed();
      arr.push_back({{"separator", io::labels_json(g, run.separator)}, {"report", io::to_json(g, g, run.report)}});
      rows.push_back({set_text(g, run.separator), to_string(run.report.kind), set_text(g, run.report.lambda),
                      run.report.passed() ? "pass" : "FAIL"});
    }
    if (gl.json()) {
      emit(out, Json{{"runs", arr}, {"passed", all}});
    } else {
      std::array<std::size_t, 4> width{9, 4, 6, 6};
      for (const auto& row : rows)
        for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());
      auto line = [&](const std::array<std::string, 4>& row) {
        for (std::size_t i = 0; i < 4; ++i)
          out << row[i] << (i + 1 < 4 ? std::string(width[i] - row[i].size() + 2, ' ') : "\n");
      };
      line({"separator", "case", "lambda", "result"});
      for (const auto& row : rows) line(row);
      if (rows.empty()) out << "no separators\n";
    }
    return all ? kPass : kCertificationFailure;
  }
  const Action a = Action::direct(make_splitting(g, sa));
  const auto r = verify_theorem(a, config);
  if (gl.json())
    emit(out, io::to_json(g, g, r));
  else
    print_report(g, g, r, out);
  return report_exit(r);
}

int cmd_check_lemmas(const Global& gl, const std::string& file, const SplitArgs& sa, const CheckArgs& ca,
                     std::ostream& out) {
  const Graph g = io::read_graph_file(file);
  const AmalgamSplitting s = make_splitting(g, sa);
  auto pairs = commuting_generator_pairs(g);
  const auto sampled = sample_commuting_pairs(g, ca.pairs, gl.seed);
  pairs.insert(pairs.end(), sampled.begin(), sampled.end());
  const int length = gl.length.value_or(5);
  Json results = Json::array();
  std::size_t pass = 0, fail = 0, unknown = 0;
  for (const auto& [x, y] : pairs) {
    const TreeBall ball = lemma_ball(s, x, y, length, gl.vertex_budget(), gl.exec());
    const auto o = check_commuting_pair(ball, x, y);
    pass += o.status == Status::pass;
    fail += o.status == Status::fail;
    unknown += o.status == Status::indeterminate;
    const std::string gs = io::format_word(g, x);
    const std::string hs = io::format_word(g, y);
    results.push_back({{"g", gs}, {"h", hs}, {"lemma", o.lemma}, {"status", to_string(o.status)}, {"detail", o.detail}});
    if (!gl.json())
      out << "[" << to_string(o.status) << "] " << o.lemma << ": g = " << gs << ", h = " << hs << " (" << o.detail
          << ")\n";
  }
  if (gl.json())
    emit(out, Json{{"results", results}, {"summary", {{"pass", pass}, {"fail", fail}, {"indeterminate", unknown}}}});
  else
    out << pass << " pass, " << fail << " fail, " << unknown << " indeterminate\n";
  return fail == 0 && unknown == 0 ? kPass : kCertificationFailure;
}

int cmd_check_abelian(const Global& gl, const std::string& file, std::ostream& out) {
  const Graph g = io::read_graph_file(file);
  const auto r = abelian_splitting_report(g);
  if (gl.json()) {
    emit(out, io::to_json(g, r));
  } else {
    out << "cut-cliques:";
    if (r.cut_cliques.empty()) out << " none";
    for (auto c : r.cut_cliques) out << " " << set_text(g, c);
    out << "\nverdict: " << r.verdict << "\n";
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Splittings of right-angled Artin groups and their Bass-Serre trees", "raag"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--L", gl.length, "Ball word-length bound")->check(CLI::NonNegativeNumber);
  app.add_option("--N", gl.axis_bound, "Axis certification bound")->check(CLI::PositiveNumber);
  app.add_option("--budget", gl.budget, "Ball vertex budget (default RAAG_BUDGET or 100000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Seed for sampled inputs");
  app.add_flag("--serial", gl.serial, "Use the serial reference kernels");

  std::string action, file;
  std::vector<std::string> words;
  SplitArgs sa;
  CheckArgs ca;

  auto* graph = app.add_subcommand("graph", "Graph structure queries");
  graph->add_option("action", action)->required()->check(CLI::IsMember({"info", "separators", "cut-vertices", "cut-cliques"}));
  graph->add_option("file", file, "Graph file")->required();

  auto* word = app.add_subcommand("word", "Word problem queries");
  word->add_option("action", action)->required()->check(CLI::IsMember({"nf", "equal", "support", "member"}));
  word->add_option("graph", file, "Graph file")->required();
  word->add_option("words", words, "Words such as \"a b a^-1\"");
  word->add_option("--lambda", sa.lambda, "Vertex set for member")->each([&sa](const std::string&) {
    sa.lambda_given = true;
  });

  auto* split = app.add_subcommand("split", "Amalgam construction and classification");
  split->add_option("action", action)->required()->check(CLI::IsMember({"make", "classify"}));
  split->add_option("graph", file, "Graph file")->required();
  split->add_option("words", words, "Words to classify");
  add_split_options(split, sa);

  auto* tree = app.add_subcommand("tree", "Finite pieces of the Bass-Serre tree");
  tree->add_option("action", action)->required()->check(CLI::IsMember({"ball", "fix", "axis"}));
  tree->add_option("graph", file, "Graph file")->required();
  tree->add_option("words", words, "Word for fix/axis");
  add_split_options(tree, sa);

  auto* check = app.add_subcommand("check", "Theorem, lemma and abelian-splitting checks");
  check->add_option("action", action)->required()->check(CLI::IsMember({"theorem", "lemmas", "abelian"}));
  check->add_option("graph", file, "Graph file (the source graph for --hom)");
  add_split_options(check, sa);
  check->add_option("--hom", ca.hom_file, "Homomorphism JSON: vertex -> word");
  check->add_option("--base", ca.base_file, "Base splitting JSON of the target");
  check->add_option("--target", ca.target_file, "Target graph file");
  check->add_option("--phi", ca.phi, "Homomorphism to Z, e.g. 1,1,1");
  check->add_flag("--all-separators", ca.all_separators, "Run on every minimal separator");
  check->add_option("--pairs", ca.pairs, "Sampled commuting pairs for lemmas");

  for (auto* sub : {graph, word, split, tree, check}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (graph->parsed()) return cmd_graph(gl, action, file, out);
    if (word->parsed()) return cmd_word(gl, action, file, words, sa, out);
    if (split->parsed()) return cmd_split(gl, action, file, words, sa, out);
    if (tree->parsed()) return cmd_tree(gl, action, file, words, sa, out);
    if (action == "theorem") return cmd_check_theorem(gl, file, sa, ca, out);
    if (file.empty()) throw InputError("check " + action + " needs a graph file");
    if (action == "lemmas") return cmd_check_lemmas(gl, file, sa, ca, out);
    return cmd_check_abelian(gl, file, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCertificationFailure;
  }
}

}  // namespace raag::cli
