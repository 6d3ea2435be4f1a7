#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "raag/io.hpp"

using namespace raag;

namespace {

std::string error_of(std::string_view text) {
  try {
    io::parse_graph(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("plain graph format") {
  const Graph g = io::parse_graph("# path\na b c\n\na b\nb c  # trailing\n");
  CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(io::parse_graph("x\n").size() == 1);
}

TEST_CASE("plain format errors carry line numbers") {
  CHECK(error_of("a b\na z\n").find("line 2") != std::string::npos);
  CHECK(error_of("a b\na b c\n").find("line 2") != std::string::npos);
  CHECK(error_of("a a\n").find("line 1") != std::string::npos);
  CHECK(error_of("a b\n\nb b\n").find("line 3") != std::string::npos);
  CHECK_FALSE(error_of("# only a comment\n").empty());
}

TEST_CASE("DOT subset") {
  const Graph g = io::parse_graph(
      "strict graph G {\n"
      "  node [shape=circle];\n"
      "  // a comment\n"
      "  \"a\" -- b [color=red]; b -- c; /* block */ d;\n"
      "  rankdir=LR\n"
      "}\n");
  CHECK(g.labels() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(g.edge_count() == 2);
  const Graph chain = io::parse_graph("graph { x -- y -- z -- x }");
  CHECK(chain.edge_count() == 3);
  CHECK_THROWS_AS(io::parse_graph("digraph { a -> b }"), InputError);
  CHECK_THROWS_AS(io::parse_graph("graph { a -- b"), InputError);
  CHECK_THROWS_AS(io::parse_graph("graph { subgraph s { a } }"), InputError);
  CHECK_THROWS_AS(io::parse_graph("graph { a -- a }"), InputError);
}

TEST_CASE("graph file round trip") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : oracle::graphs_up_to_iso(n)) {
      CHECK(io::parse_graph(io::format_graph(g)) == g);
      CHECK(io::graph_from_json(io::to_json(g)) == g);
    }
}

TEST_CASE("word syntax") {
  const Graph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(io::parse_word(g, "a b^-1 c^2") == Word({{0, 1}, {1, -1}, {2, 1}, {2, 1}}));
  CHECK(io::parse_word(g, "A") == Word::generator(0, -1));
  CHECK(io::parse_word(g, "a^0").empty());
  CHECK(io::parse_word(g, "1").empty());
  CHECK(io::parse_word(g, "  ").empty());
  CHECK(io::parse_word(g, "c^-2") == Word::power(2, -2));
  CHECK_THROWS_AS(io::parse_word(g, "q"), InputError);
  CHECK_THROWS_AS(io::parse_word(g, "a^"), InputError);
  CHECK_THROWS_AS(io::parse_word(g, "a^x"), InputError);
  const Graph upper({"a", "A"});
  CHECK(io::parse_word(upper, "A") == Word::generator(1));
  CHECK(io::format_word(g, Word{}) == "1");
  CHECK(io::format_word(g, io::parse_word(g, "a b^-1 c")) == "a b^-1 c");
}

TEST_CASE("property: word format round trip") {
  oracle::Rng rng(51);
  const Graph g = oracle::make_graph(4, {{0, 1}});
  for (int i = 0; i < 200; ++i) {
    const Word x = oracle::random_word(rng, 4, 10);
    CHECK(io::parse_word(g, io::format_word(g, x)) == x);
  }
}

TEST_CASE("vertex lists and phi") {
  const Graph g({"a", "b", "c"});
  CHECK(io::parse_vertex_list(g, "a, c") == g.set_of({"a", "c"}));
  CHECK(io::parse_vertex_list(g, "b c") == g.set_of({"b", "c"}));
  CHECK(io::parse_vertex_list(g, "").empty());
  CHECK_THROWS_AS(io::parse_vertex_list(g, "a, z"), InputError);
  CHECK(io::parse_phi(g, "1,-2,0").values == std::vector<std::int64_t>{1, -2, 0});
  CHECK_THROWS_AS(io::parse_phi(g, "1,2"), InputError);
  CHECK_THROWS_AS(io::parse_phi(g, "1,x,2"), InputError);
}

TEST_CASE("splitting and homomorphism JSON") {
  const Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  const auto s = AmalgamSplitting::from_separator(g, g.set_of({"a", "c"}), 1);
  const auto j = io::to_json(s);
  CHECK(j.dump() == R"({"lambda":["a","c"],"side1":["a","b","c"],"side2":["a","c","d"]})");
  const auto back = io::splitting_from_json(g, j);
  CHECK(back.side1() == s.side1());
  CHECK(back.side2() == s.side2());
  CHECK_THROWS_AS(io::splitting_from_json(g, io::Json::parse(R"({"lambda":["a"],"side1":["a","b"],"side2":["a","c","d"]})")),
                  InputError);

  const Graph t({"x", "y"});
  const RaagHom h{g, t, {Word::generator(0), Word{}, Word::generator(1), Word{}}};
  const auto hj = io::to_json(h);
  CHECK(hj.dump() == R"({"a":"x","b":"1","c":"y","d":"1"})");
  const RaagHom h2 = io::hom_from_json(g, t, hj);
  CHECK(h2.images == h.images);
  CHECK_THROWS_AS(io::hom_from_json(g, t, io::Json::parse(R"({"a":"x"})")), InputError);
}

TEST_CASE("report JSON shape") {
  const Graph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto s = AmalgamSplitting::from_separator(g, g.set_of({"b"}), 0);
  const auto r = verify_theorem(Action::direct(s));
  const auto j = io::to_json(g, g, r);
  CHECK(j["case"] == "AllElliptic");
  CHECK(j["lambda"] == io::Json::array({"b"}));
  CHECK(j["separated_pair"] == io::Json::array({"a", "c"}));
  CHECK(j["passed"] == true);
  REQUIRE(j["certification"].is_array());
  for (const auto& c : j["certification"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("pass"));
  }
  const auto line = verify_theorem(Action::line(LineAction(g, IntegerVector::ones(3))));
  const auto lj = io::to_json(g, g, line);
  CHECK(lj["case"] == "LineExcluded");
  CHECK(lj["witness_edge"].is_null());
}

TEST_CASE("ball JSON lists vertices and edges in index order") {
  const Graph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto ball = build_ball(AmalgamSplitting::from_separator(g, g.set_of({"b"}), 0), 1);
  const auto j = io::to_json(ball);
  REQUIRE(j["vertices"].size() == ball.vertex_count());
  REQUIRE(j["edges"].size() == ball.edge_count());
  CHECK(j["vertices"][0]["rep"] == "1");
  CHECK(j["edges"][0]["ends"] == io::Json::array({0, 1}));
}
