#include <random>
#include <set>

#include "doctest.h"

#include "clpa/error.hpp"
#include "clpa/graph.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace clpa {

  namespace {
    // Subobjects counted straight from the definition: every nonempty
    // vertex set, every edge set inside it, keeping those where each kept
    // vertex of S emits all or none of its edges.
    std::size_t oracle_subobject_count(CLObject const& obj) {
      auto const& g     = obj.graph();
      auto const  nv    = g.vertex_count();
      auto const  ne    = g.edge_count();
      std::size_t count = 0;
      for (std::uint32_t vbits = 1; vbits < (1U << nv); ++vbits) {
        for (std::uint32_t ebits = 0; ebits < (1U << ne); ++ebits) {
          bool ok = true;
          for (EdgeIndex e = 0; e < ne && ok; ++e) {
            if ((ebits >> e) & 1U) {
              ok = ((vbits >> g.source(e)) & 1U) && ((vbits >> g.range(e)) & 1U);
            }
          }
          for (Vertex v = 0; v < nv && ok; ++v) {
            if (!((vbits >> v) & 1U) || !obj.in_s(v)) {
              continue;
            }
            std::size_t kept = 0;
            for (auto e : g.out_edges(v)) {
              kept += (ebits >> e) & 1U;
            }
            ok = kept == 0 || kept == g.out_edges(v).size();
          }
          count += ok ? 1 : 0;
        }
      }
      return count;
    }
  }  // namespace

  TEST_CASE("graph construction orders ids and rejects bad input") {
    Graph g({"b", "a"}, {{"y", "a", "b"}, {"x", "b", "b"}});
    CHECK(g.vertex_id(0) == "a");
    CHECK(g.edge_id(0) == "x");
    CHECK(g.source(g.edge("y")) == g.vertex("a"));
    CHECK(g.is_sink(g.vertex("a")) == false);
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), InvalidGraph);
    CHECK_THROWS_AS(Graph({"a"}, {{"e", "a", "z"}}), InvalidGraph);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a", "a"}}), InvalidGraph);
    CHECK_THROWS_AS(Graph({"a.b"}, {}), InvalidGraph);
    CHECK_THROWS_AS(Graph({"a~b"}, {}), InvalidGraph);
    CHECK_FALSE(is_valid_id(""));
    CHECK(is_valid_id("u1"));
  }

  TEST_CASE("S must consist of regular vertices") {
    auto const obj = test::bifurcation(true);
    CHECK(obj.s_vertices().size() == 1);
    CHECK_THROWS_AS(CLObject(obj.graph(), std::vector<std::string>{"u1"}), InvalidGraph);
    CHECK(CLObject::leavitt(obj.graph()).s_vertices().size() == 1);
    CHECK(CLObject::cohn(obj.graph()).regular_not_in_s().size() == 1);
  }

  TEST_CASE("predicates on small fixtures") {
    auto const loop = predicates(test::loop(true).graph());
    CHECK_FALSE(loop.is_acyclic);
    CHECK(loop.is_no_exit);
    CHECK(loop.cycles.size() == 1);
    CHECK(loop.sinks.empty());

    auto const rose = predicates(test::rose().graph());
    CHECK_FALSE(rose.is_no_exit);
    CHECK(rose.cycles.size() == 2);
    CHECK(rose.bifurcations.size() == 1);

    auto const fan = predicates(test::fan(3).graph());
    CHECK(fan.is_acyclic);
    CHECK(fan.is_no_exit);
    CHECK(fan.sinks.size() == 3);
    CHECK(fan.bifurcations.size() == 1);

    auto const exit = predicates(test::two_cycle_with_exit().graph());
    CHECK_FALSE(exit.is_no_exit);
    CHECK(exit.cycles.size() == 1);
  }

  TEST_CASE("cycles agree with exhaustive search on all graphs with <= 3 vertices") {
    for (auto const& g : test::all_graphs(3, 1)) {
      std::set<std::vector<EdgeIndex>> found;
      for (auto const& c : cycles(g)) {
        found.insert(c.edges);
      }
      CHECK(found == test::oracle_cycles(g));
    }
  }

  TEST_CASE("paths_into agrees with exhaustive search on acyclic graphs") {
    for (auto const& g : test::all_graphs(3, 2)) {
      if (!predicates(g).is_acyclic) {
        continue;
      }
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::size_t> lengths;
        for (auto const& p : paths_into(g, v, {v})) {
          CHECK(p.range == v);
          lengths.push_back(p.length());
        }
        CHECK(lengths == test::oracle_paths_into_lengths(g, v));
      }
    }
  }

  TEST_CASE("paths_into refuses infinite families") {
    Graph g({"a", "b"}, {{"c", "a", "a"}, {"f", "a", "b"}});
    CHECK_THROWS_AS((void) paths_into(g, g.vertex("b"), {g.vertex("b")}), NonFiniteEnumeration);
    CHECK(paths_into(g, g.vertex("a"), {g.vertex("a")}).size() == 1);
  }

  TEST_CASE("paths_up_to counts composable edge sequences") {
    for (auto const& g : test::all_graphs(2, 2)) {
      auto const paths = paths_up_to(g, 3);
      CHECK(paths.size() == g.vertex_count() + test::all_edge_sequences(g, 3).size());
      CHECK(std::is_sorted(paths.begin(), paths.end()));
    }
  }

  TEST_CASE("path and cycle helpers") {
    auto const  obj = test::two_cycle();
    auto const& g   = obj.graph();
    auto const  c   = cycles(g).front();
    CHECK(c.base(g) == g.vertex("v1"));
    CHECK(c.to_string(g) == "a.b");
    auto const from2 = c.as_path_from(g, g.vertex("v2"));
    CHECK(from2.to_string(g) == "b.a");
    auto const p = Path::from_edges(g, {g.edge("a"), g.edge("b"), g.edge("a")});
    CHECK(p.vertices(g).size() == 4);
    CHECK(p.starts_with(Path::edge(g, g.edge("a"))));
    CHECK(p.suffix_after(1, g).to_string(g) == "b.a");
    CHECK_THROWS_AS((void) Path::from_edges(g, {g.edge("a"), g.edge("a")}), InvalidGraph);
  }

  TEST_CASE("completeness of subobjects") {
    auto const ambient = test::bifurcation(true);
    Graph      half({"u1", "v"}, {{"e1", "v", "u1"}});
    auto const check = is_complete_subobject(CLObject(half, std::vector<std::string>{"v"}), ambient);
    CHECK_FALSE(check.complete);
    CHECK_FALSE(check.violations.empty());

    auto const closed = complete(half, ambient);
    CHECK(closed.graph().vertex_count() == 3);
    CHECK(closed.graph().edge_count() == 2);
    CHECK(is_complete_subobject(CLObject(closed.graph(), std::vector<std::string>{"v"}), ambient).complete);

    auto const cohn = test::bifurcation(false);
    CHECK(is_complete_subobject(CLObject(half, std::vector<std::string>{}), cohn).complete);
    CHECK(complete(half, cohn).graph().vertex_count() == 2);

    Graph stranger({"z"}, {});
    CHECK_THROWS_AS((void) is_complete_subobject(CLObject(stranger, std::vector<Vertex>{}), ambient),
                    NotASubgraph);
  }

  TEST_CASE("relative graph sizes follow the vertex and edge formulas") {
    std::mt19937 rng(test::seed);
    for (int trial = 0; trial < 60; ++trial) {
      auto const  obj   = test::random_object(rng, 4, 0.4);
      auto const& g     = obj.graph();
      auto const  rel   = relative_graph(obj);
      auto const  split = obj.regular_not_in_s();
      std::size_t into_split = 0;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        into_split += std::count(split.begin(), split.end(), g.range(e));
      }
      CHECK(rel.graph.vertex_count() == g.vertex_count() + split.size());
      CHECK(rel.graph.edge_count() == g.edge_count() + into_split);
      for (auto v : split) {
        auto const primed = rel.graph.find_vertex(g.vertex_id(v) + prime_suffix);
        REQUIRE(primed.has_value());
        CHECK(rel.graph.is_sink(*primed));
      }
    }
  }

  TEST_CASE("the subobject system matches a direct enumeration") {
    for (auto const& obj : test::all_objects(test::all_graphs(2, 1))) {
      auto const sys = subobject_system(obj);
      CHECK(sys.nodes.size() == oracle_subobject_count(obj));
      for (std::size_t i = 0; i < sys.nodes.size(); ++i) {
        CHECK(sys.includes(sys.top, i));
        CHECK(is_complete_subobject(sys.nodes[i].object, obj).complete);
      }
    }
  }

  TEST_CASE("objects up to relabelling match an orbit count") {
    // Burnside on two vertices: orbits = (objects + objects fixed by the swap) / 2.
    auto const  one = test::all_objects(test::all_graphs(1, 2));
    std::size_t labelled = 0, fixed = 0;
    for (auto const& obj : test::all_objects(test::all_graphs(2, 2))) {
      auto const& g = obj.graph();
      if (g.vertex_count() != 2) {
        continue;
      }
      ++labelled;
      std::array<std::array<int, 2>, 2> mult{};
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        ++mult[g.source(e)][g.range(e)];
      }
      fixed += mult[0][0] == mult[1][1] && mult[0][1] == mult[1][0] && obj.in_s(0) == obj.in_s(1) ? 1 : 0;
    }
    CHECK(test::all_objects_up_to_iso(2, 2).size() == one.size() + (labelled + fixed) / 2);
  }

  TEST_CASE("subobject system of a single edge") {
    auto const sys = subobject_system(test::fan(1));
    // {v}, {u1}, {v, u1}, and {v, u1} with e1.
    CHECK(sys.nodes.size() == 4);
    CHECK(sys.nodes[sys.top].object.graph().edge_count() == 1);
    CHECK(to_dot(sys, test::fan(1)).find("digraph") != std::string::npos);
  }

}  // namespace clpa
