#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "generate.hpp"
#include "graph.hpp"
#include "graph_doc.hpp"
#include "parse.hpp"

using namespace ofc;

namespace {

template <class Fn>
std::optional<errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return std::nullopt;
}

OFGraph<SeriesRat> triangle_eps(long n = 1) {
  return OFGraph<SeriesRat>::from_doc(generate_triangle(n));
}

GraphDoc doc_of(backend f, std::vector<std::string> vs,
                std::vector<GraphDoc::Edge> es) {
  GraphDoc d;
  d.field = f;
  d.vertices = std::move(vs);
  d.edges = std::move(es);
  return d;
}

// random graph over rationals: each pair kept with probability ~1/2
OFGraph<Rat> random_rat_graph(std::mt19937_64& rng, int n) {
  GraphDoc d;
  d.field = backend::rational;
  for (int i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> num(1, 9), den(1, 5);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        d.edges.push_back({d.vertices[i], d.vertices[j], Rat(num(rng), den(rng)).str()});
      }
    }
  }
  return OFGraph<Rat>::from_doc(d);
}

}  // namespace

TEST_CASE("degrees on the triangle and K4") {
  auto g = triangle_eps();
  REQUIRE(g.size() == 3);
  int x = *g.index_of("x"), y = *g.index_of("y"), z = *g.index_of("z");
  SeriesRat one_plus_eps = SeriesRat::one() + SeriesRat::eps_pow(Rat(1));
  CHECK(g.degree(x) == one_plus_eps);
  CHECK(g.degree(y) == one_plus_eps);
  CHECK(g.degree(z) == SeriesRat::from_rat(Rat(2)));

  auto k4 = OFGraph<Rat>::from_doc(generate_complete_unit(4));
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == Rat(3));
  CHECK(k4.is_complete());
  CHECK(thrown_code([&] { k4.degree(7); }) == errc::unknown_vertex);
}

TEST_CASE("isolated vertices are representable and flagged") {
  auto d = doc_of(backend::rational, {"a", "b", "c"}, {{"a", "b", "1"}});
  auto g = OFGraph<Rat>::from_doc(d);
  CHECK(g.is_isolated(2));
  CHECK(g.degree(2) == Rat(0));
  CHECK(g.first_isolated() == 2);
  CHECK(thrown_code([&] { g.normalized_weight(2, 0, g.budget()); }) == errc::isolated_vertex);
}

TEST_CASE("set and cut weights on the triangle") {
  auto g = triangle_eps();
  int x = *g.index_of("x"), y = *g.index_of("y"), z = *g.index_of("z");
  auto B = OFGraph<SeriesRat>::bit;
  SeriesRat eps = SeriesRat::eps_pow(Rat(1));

  CHECK(g.set_weight(g.all_vertices()) ==
        SeriesRat::from_rat(Rat(4)) + eps + eps);  // 4 + 2eps
  CHECK(g.set_weight(0) == SeriesRat::zero());
  CHECK(g.set_weight(B(z)) == SeriesRat::from_rat(Rat(2)));

  CHECK(g.cut_weight(B(x) | B(y), B(z)) == SeriesRat::from_rat(Rat(2)));
  CHECK(g.cut_weight(B(x), B(y)) == eps);
  CHECK(g.cut_weight(0, B(z)) == SeriesRat::zero());
  CHECK(g.cut_weight(B(x), B(z)) == g.cut_weight(B(z), B(x)));
  CHECK(thrown_code([&] { g.cut_weight(B(x) | B(y), B(y)); }) == errc::invalid_argument);
}

TEST_CASE("normalized weights sum to one") {
  auto g = triangle_eps();
  Budget bud = g.budget();
  int x = *g.index_of("x"), y = *g.index_of("y");
  SeriesRat p = g.normalized_weight(x, y, bud);
  // eps/(1+eps) = eps - eps^2 + eps^3 - ...
  CHECK(p.coeff_at(Rat(1)) == Rat(1));
  CHECK(p.coeff_at(Rat(2)) == Rat(-1));

  for (int v = 0; v < g.size(); ++v) {
    SeriesRat sum = SeriesRat::zero();
    for (int w = 0; w < g.size(); ++w) sum += g.normalized_weight(v, w, bud);
    auto c = sum.compare(SeriesRat::one());
    CHECK((c == cmp::equal || c == cmp::indistinguishable));
  }
}

TEST_CASE("single edge normalized weight is one") {
  auto d = doc_of(backend::rational, {"a", "b"}, {{"a", "b", "7/3"}});
  auto g = OFGraph<Rat>::from_doc(d);
  CHECK(g.normalized_weight(0, 1, g.budget()) == Rat(1));
}

TEST_CASE("connected components") {
  auto g1 = triangle_eps();
  CHECK(g1.connected_components().size() == 1);
  CHECK(g1.is_connected());

  auto d2 = doc_of(backend::rational, {"a", "b", "c", "d"},
                   {{"a", "b", "1"}, {"c", "d", "1"}});
  auto g2 = OFGraph<Rat>::from_doc(d2);
  auto comps = g2.connected_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == 0b0011);
  CHECK(comps[1] == 0b1100);

  auto d3 = doc_of(backend::rational, {"a", "b", "c"}, {});
  CHECK(OFGraph<Rat>::from_doc(d3).connected_components().size() == 3);
}

TEST_CASE("bipartiteness") {
  auto edge = OFGraph<Rat>::from_doc(doc_of(backend::rational, {"a", "b"}, {{"a", "b", "1"}}));
  auto p = edge.bipartition();
  REQUIRE(p.has_value());
  CHECK(p->first == 0b01);
  CHECK(p->second == 0b10);

  CHECK_FALSE(triangle_eps().is_bipartite());
  CHECK_FALSE(OFGraph<Rat>::from_doc(generate_complete_unit(5)).is_bipartite());

  // near-bipartite complete graph minus its eps edges is bipartite
  GraphDoc nb = generate_near_bipartite_complete(3, 1);
  GraphDoc cross_only = nb;
  cross_only.edges.clear();
  for (const auto& e : nb.edges) {
    if (e.w == "1") cross_only.edges.push_back(e);
  }
  auto gb = OFGraph<SeriesRat>::from_doc(cross_only);
  auto bp = gb.bipartition();
  REQUIRE(bp.has_value());
  CHECK(std::popcount(bp->first) == 3);
  CHECK(std::popcount(bp->second) == 3);
  // the full graph with eps edges is not bipartite
  CHECK_FALSE(OFGraph<SeriesRat>::from_doc(nb).is_bipartite());

  // even cycle bipartite, odd cycle not
  auto c4 = doc_of(backend::rational, {"1", "2", "3", "4"},
                   {{"1", "2", "1"}, {"2", "3", "1"}, {"3", "4", "1"}, {"4", "1", "1"}});
  CHECK(OFGraph<Rat>::from_doc(c4).is_bipartite());
}

TEST_CASE("graph construction errors") {
  CHECK(thrown_code([] {
          OFGraph<Rat>::from_doc(
              doc_of(backend::rational, {"a", "b"}, {{"a", "b", "0"}}));
        }) == errc::nonpositive_weight);
  CHECK(thrown_code([] {
          OFGraph<Rat>::from_doc(
              doc_of(backend::rational, {"a", "b"}, {{"a", "b", "-1/2"}}));
        }) == errc::nonpositive_weight);
  CHECK(thrown_code([] {
          OFGraph<Rat>::from_doc(
              doc_of(backend::rational, {"a", "b"}, {{"a", "b", "1 + %"}}));
        }) == errc::malformed_weight);
  CHECK(thrown_code([] {
          OFGraph<Rat>::from_doc(doc_of(backend::rational, {"a", "b"}, {{"a", "b", "e^1"}}));
        }) == errc::malformed_weight);
  CHECK(thrown_code([] {
          OFGraph<Rat>::from_doc(doc_of(backend::lc_rational, {"a"}, {}));
        }) == errc::backend_mismatch);
  GraphDoc big;
  big.field = backend::rational;
  for (int i = 0; i < 65; ++i) big.vertices.push_back("v" + std::to_string(i));
  CHECK(thrown_code([&] { OFGraph<Rat>::from_doc(big); }) == errc::size_cap_exceeded);
}

TEST_CASE("cut weight symmetry and set-weight identity on random graphs") {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<int> size_pick(2, 8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_rat_graph(rng, size_pick(rng));
    std::uniform_int_distribution<std::uint64_t> mask_pick(0, g.all_vertices());
    std::uint64_t a = mask_pick(rng) & g.all_vertices();
    std::uint64_t b = mask_pick(rng) & g.all_vertices() & ~a;
    CHECK(g.cut_weight(a, b) == g.cut_weight(b, a));

    // b(A) = b(A, V\A) + 2 * (weight inside A)
    Rat inside(0);
    for (const auto& e : g.edges()) {
      if ((a & OFGraph<Rat>::bit(e.u)) && (a & OFGraph<Rat>::bit(e.v))) inside += e.w;
    }
    CHECK(g.set_weight(a) == g.cut_weight(a, g.all_vertices() & ~a) + inside + inside);
  }
}

TEST_CASE("uniform scaling preserves structure") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_rat_graph(rng, 6);
    GraphDoc scaled = g.to_doc();
    Rat c(3, 2);
    for (auto& e : scaled.edges) {
      e.w = format_element(parse_element<Rat>(e.w) * c);
    }
    auto h = OFGraph<Rat>::from_doc(scaled);
    CHECK(g.connected_components() == h.connected_components());
    CHECK(g.bipartition() == h.bipartition());
    Budget bud = g.budget();
    for (int x = 0; x < g.size(); ++x) {
      if (g.is_isolated(x)) continue;
      for (int y = 0; y < g.size(); ++y) {
        CHECK(g.normalized_weight(x, y, bud) == h.normalized_weight(x, y, bud));
      }
    }
  }
}

TEST_CASE("graph to_doc round-trips through the document layer") {
  auto g = triangle_eps(2);
  GraphDoc doc = g.to_doc();
  std::string json = graph_doc_to_json(doc);
  auto back = OFGraph<SeriesRat>::from_doc(parse_graph_doc(json));
  CHECK(back.size() == g.size());
  CHECK(back.edge_count() == g.edge_count());
  for (int x = 0; x < g.size(); ++x) {
    CHECK(back.label(x) == g.label(x));
    for (int y = 0; y < g.size(); ++y) CHECK(back.weight(x, y) == g.weight(x, y));
  }
}

TEST_CASE("generator families") {
  GraphDoc tri = generate_triangle(2);
  CHECK(tri.field == backend::lc_rational);
  CHECK(tri.vertices == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(tri.edges.size() == 3);
  CHECK(tri.edges[0].w == "e^2");
  CHECK(tri.edges[1].w == "1");

  GraphDoc nb = generate_near_bipartite_complete(2, 1);
  CHECK(nb.vertices.size() == 4);
  CHECK(nb.edges.size() == 6);
  int eps_edges = 0;
  for (const auto& e : nb.edges) {
    if (e.w == "e^1") ++eps_edges;
  }
  CHECK(eps_edges == 2);
  auto nbg = OFGraph<SeriesRat>::from_doc(nb);
  CHECK(nbg.is_complete());

  GraphDoc cu = generate_complete_unit(4);
  CHECK(cu.field == backend::rational);
  CHECK(cu.edges.size() == 6);
  CHECK(OFGraph<Rat>::from_doc(cu).is_complete());

  CHECK(thrown_code([] { generate_triangle(0); }) == errc::invalid_argument);
  CHECK(thrown_code([] { generate_near_bipartite_complete(1, 1); }) == errc::invalid_argument);
  CHECK(thrown_code([] { generate_complete_unit(1); }) == errc::invalid_argument);
  CHECK(generate_family("triangle", R"({"n": 3})").edges[0].w == "e^3");
  CHECK(thrown_code([] { generate_family("pentagon", "{}"); }) == errc::invalid_argument);
  CHECK(thrown_code([] { generate_family("triangle", "{}"); }) == errc::invalid_argument);
}

TEST_CASE("default budget follows the finest weight exponent") {
  CHECK(triangle_eps(1).budget().window == Rat(8));
  CHECK(triangle_eps(3).budget().window == Rat(24));
  GraphDoc tri = generate_triangle(1);
  tri.truncation_order = Rat(5);
  CHECK(OFGraph<SeriesRat>::from_doc(tri).budget().window == Rat(5));
  // rational weights carry no eps exponents
  CHECK(OFGraph<Rat>::from_doc(generate_complete_unit(3)).budget().window == Rat(8));
}
