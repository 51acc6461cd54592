#include <random>

#include "doctest.h"

#include "clpa/classify.hpp"
#include "clpa/error.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace clpa {

  namespace {
    // The same object with every vertex and edge renamed by reversing the
    // index order, so every id-based tie-break changes.
    CLObject relabel(CLObject const& obj) {
      auto const&                  g = obj.graph();
      auto                         n = g.vertex_count();
      auto                         m = g.edge_count();
      auto vname = [&](Vertex v) { return "w" + std::to_string(n - 1 - v); };
      std::vector<std::string>     vertices;
      std::vector<Graph::EdgeSpec> edges;
      for (Vertex v = 0; v < n; ++v) {
        vertices.push_back(vname(v));
      }
      for (EdgeIndex e = 0; e < m; ++e) {
        edges.push_back({"f" + std::to_string(m - 1 - e), vname(g.source(e)), vname(g.range(e))});
      }
      std::vector<std::string> s;
      for (auto v : obj.s_vertices()) {
        s.push_back(vname(v));
      }
      return CLObject(Graph(vertices, edges), s);
    }

    std::vector<CLObject> small_no_exit_corpus() {
      return test::no_exit_objects(test::all_objects(test::all_graphs(3, 1)));
    }
  }  // namespace

  TEST_CASE("no-exit objects") {
    CHECK(check_no_exit_object(test::loop(true)).ok);
    CHECK_FALSE(check_no_exit_object(test::loop(false)).ok);
    CHECK_FALSE(check_no_exit_object(test::rose()).ok);
    CHECK_FALSE(check_no_exit_object(test::two_cycle_with_exit()).ok);
    CHECK(check_no_exit_object(test::bifurcation(false)).ok);
    CHECK_THROWS_AS((void) classify(test::loop(false)), NotNoExitObject);
    CHECK_THROWS_AS((void) build_generator_map(test::rose()), NotNoExitObject);
  }

  TEST_CASE("signatures of the basic fixtures") {
    CHECK(classify(test::loop(true)).to_string() == "M1(K[x,x^-1])(0)");
    CHECK(classify(test::two_cycle()).to_string() == "M2(K[x^2,x^-2])(0,1)");
    CHECK(classify(test::bifurcation(true)).to_string() == "M2(K)(0,1)^2");
    CHECK(classify(test::bifurcation(false)).to_string() == "M1(K)(0) + M2(K)(0,1)^2");
    CHECK(classify(CLObject(Graph({"x"}, {}), std::vector<Vertex>{})).to_string() == "M1(K)(0)");
    Graph chain({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}});
    CHECK(classify(CLObject::leavitt(chain)).to_string() == "M3(K)(0,1,2)");
    Graph tail({"a", "b"}, {{"c", "a", "a"}, {"f", "b", "a"}});
    CHECK(classify(CLObject::leavitt(tail)).to_string() == "M2(K[x,x^-1])(0,0)");
  }

  TEST_CASE("fan images for n = 1..5") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const obj = test::fan(n);
      CHECK(classify(obj).to_string()
            == "M1(K)(0) + M2(K)(0,1)" + (n > 1 ? "^" + std::to_string(n) : std::string()));
      auto const  psi = build_generator_map(obj);
      auto const& g   = obj.graph();
      auto const& T   = psi.target();
      CHECK(psi.axioms().ok());
      auto v_image = MatricialElement::unit(T, n, 0, 0);
      for (std::size_t i = 1; i <= n; ++i) {
        auto const u = g.vertex("u" + std::to_string(i));
        auto const e = g.edge("e" + std::to_string(i));
        CHECK(*psi.images().vertex_images[u] == MatricialElement::unit(T, i - 1, 0, 0));
        CHECK(*psi.images().edge_images[e] == MatricialElement::unit(T, i - 1, 1, 0));
        v_image += MatricialElement::unit(T, i - 1, 1, 1);
      }
      CHECK(*psi.images().vertex_images[g.vertex("v")] == v_image);
    }
  }

  TEST_CASE("every matrix unit has a preimage of the right degree") {
    for (auto const& obj : small_no_exit_corpus()) {
      auto const psi = build_generator_map(obj);
      auto const T   = psi.target();
      CHECK(psi.units_checked() > 0);
      for (std::size_t b = 0; b < T->block_count(); ++b) {
        auto const& block = *T->block(b);
        auto const  ks    = block.kind() == BlockKind::laurent ? std::vector<std::int64_t>{-1, 0, 1}
                                                               : std::vector<std::int64_t>{0};
        for (std::size_t i = 0; i < block.size(); ++i) {
          for (std::size_t j = 0; j < block.size(); ++j) {
            for (auto k : ks) {
              auto const x = psi.unit_preimage(b, i, j, k);
              CHECK(x.is_homogeneous(block.unit_degree(i, j, k)));
              CHECK(psi.image(x) == MatricialElement::unit(T, b, i, j, k));
            }
          }
        }
      }
    }
  }

  TEST_CASE("block counts follow sinks, unsaturated vertices, and cycles") {
    for (auto const& obj : small_no_exit_corpus()) {
      auto const  pred = predicates(obj.graph());
      auto const  sig  = classify(obj);
      CHECK(sig.field_blocks.size() == pred.sinks.size() + obj.regular_not_in_s().size());
      CHECK(sig.laurent_blocks.size() == pred.cycles.size());
      if (pred.is_acyclic) {
        CHECK(sig.laurent_blocks.empty());
      }
      if (pred.sinks.empty() && obj.regular_not_in_s().empty()) {
        CHECK(sig.field_blocks.empty());
      }
      for (auto const& b : sig.laurent_blocks) {
        CHECK(b.shifts.size() == b.size);
      }
    }
  }

  TEST_CASE("signatures do not depend on the labelling") {
    for (auto const& obj : small_no_exit_corpus()) {
      CHECK(classify(relabel(obj)) == classify(obj));
    }
    std::mt19937 rng(test::seed);
    for (int trial = 0; trial < 30; ++trial) {
      auto const obj = test::random_no_exit_object(rng, 5, 0.3);
      CHECK(classify(relabel(obj)) == classify(obj));
    }
  }

  TEST_CASE("Psi is injective on normal-form monomials") {
    for (auto const& obj : small_no_exit_corpus()) {
      auto const psi = build_generator_map(obj);
      auto const& A  = psi.source();
      std::vector<std::map<MatricialElement::Key, Scalar>> images;
      for (auto const& m : A.normal_monomials(2, 2)) {
        images.push_back(psi.image(A.monomial(m.p, m.q)).coordinates());
      }
      CHECK(test::oracle_rank_of(images, A.field()) == images.size());
    }
  }

  TEST_CASE("the generator map works over a prime field") {
    auto const psi = build_generator_map(test::two_cycle(), Field::prime(2));
    CHECK(psi.axioms().ok());
    CHECK(psi.target()->field() == Field::prime(2));
  }

  TEST_CASE("a stated signature is checked") {
    auto const obj = test::fan(2);
    CHECK_NOTHROW((void) build_generator_map(obj, classify(obj)));
    CHECK_THROWS_AS((void) build_generator_map(obj, classify(test::fan(1))), std::invalid_argument);
  }

  TEST_CASE("the system of complete subobjects of the fan") {
    auto const sys = classify_system(test::fan(2));
    CHECK(sys.nodes.size() == sys.system.nodes.size());
    CHECK(sys.nodes[sys.system.top].signature.to_string() == "M1(K)(0) + M2(K)(0,1)^2");
    for (auto const& node : sys.nodes) {
      CHECK(node.injective);
      CHECK(node.monomials_checked > 0);
    }
    for (auto const& [small, large] : sys.system.covers) {
      CHECK(sys.system.includes(large, small));
    }
  }

}  // namespace clpa
