#include <random>

#include "doctest.h"

#include "clpa/cl_algebra.hpp"
#include "clpa/error.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace clpa {

  namespace {
    // Normal-form monomials counted from the definition: pairs of paths
    // with a common range, excluding those ending in the same special edge.
    std::size_t oracle_normal_count(CLObject const& obj, std::size_t L) {
      auto const&                         g = obj.graph();
      std::vector<std::vector<EdgeIndex>> seqs{};
      std::vector<Vertex>                 ranges;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        seqs.emplace_back();
        ranges.push_back(v);
      }
      for (auto const& s : test::all_edge_sequences(g, L)) {
        seqs.push_back(s);
        ranges.push_back(g.range(s.back()));
      }
      auto special = [&](EdgeIndex e) {
        auto const v = g.source(e);
        return obj.in_s(v) && g.out_edges(v).front() == e;
      };
      std::size_t count = 0;
      for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = 0; j < seqs.size(); ++j) {
          if (ranges[i] != ranges[j]) {
            continue;
          }
          bool const rewritable = !seqs[i].empty() && !seqs[j].empty()
                                  && seqs[i].back() == seqs[j].back() && special(seqs[i].back());
          count += rewritable ? 0 : 1;
        }
      }
      return count;
    }

    std::vector<CLAlgebra> law_corpus() {
      std::vector<CLAlgebra> out;
      for (auto const& obj : {test::loop(true), test::loop(false), test::rose(), test::two_cycle(),
                              test::two_cycle_with_exit(), test::bifurcation(true),
                              test::bifurcation(false), test::fan(3)}) {
        out.emplace_back(obj);
      }
      out.emplace_back(test::rose(), Field::prime(3));
      return out;
    }
  }  // namespace

  TEST_CASE("Leavitt loop relations") {
    CLAlgebra  A(test::loop(true));
    auto const c = A.edge("c"), cs = A.ghost("c"), v = A.vertex("v");
    CHECK(c * cs == v);
    CHECK(cs * c == v);
    CHECK(A.monomial(Path::edge(A.graph(), 0), Path::edge(A.graph(), 0)) == v);
    CHECK((c * c * cs).to_string() == "c");
    CHECK(v.to_string() == "v");
  }

  TEST_CASE("Toeplitz loop keeps c c^*") {
    CLAlgebra  A(test::loop(false));
    auto const c = A.edge("c"), cs = A.ghost("c"), v = A.vertex("v");
    CHECK(cs * c == v);
    CHECK(c * cs != v);
    CHECK(is_idempotent(c * cs));
    CHECK(are_orthogonal(c * cs, v - c * cs));
  }

  TEST_CASE("(SCK2) rewrites through the special edge") {
    CLAlgebra  A(test::bifurcation(true));
    auto const e1 = A.edge("e1"), e2 = A.edge("e2"), v = A.vertex("v");
    auto const p1 = e1 * involution(e1);
    CHECK(p1 == v - e2 * involution(e2));
    CHECK(p1.terms().size() == 2);
    CHECK((involution(e1) * e2).is_zero());
    CHECK(A.context()->special_edge(A.graph().vertex("v")) == A.graph().edge("e1"));

    CLAlgebra cohn(test::bifurcation(false));
    auto const q1 = cohn.edge("e1") * cohn.ghost("e1");
    CHECK(q1.terms().size() == 1);
    CHECK(q1 + cohn.edge("e2") * cohn.ghost("e2") != cohn.vertex("v"));
  }

  TEST_CASE("vertices are orthogonal idempotents and edges compose by range") {
    CLAlgebra A(test::fan(3));
    for (Vertex v = 0; v < A.graph().vertex_count(); ++v) {
      CHECK(is_idempotent(A.vertex(v)));
      for (Vertex w = v + 1; w < A.graph().vertex_count(); ++w) {
        CHECK(are_orthogonal(A.vertex(v), A.vertex(w)));
      }
    }
    CHECK((A.edge("e1") * A.edge("e2")).is_zero());
    CHECK(A.local_unit() * A.edge("e2") == A.edge("e2"));
    CHECK_THROWS_AS((void) A.monomial(Path::edge(A.graph(), 0), Path::trivial(A.graph().vertex("v"))),
                    InvalidGraph);
  }

  TEST_CASE("elements of different algebras do not mix") {
    CLAlgebra A(test::loop(true)), B(test::loop(false));
    CHECK_THROWS_AS((void) (A.vertex("v") + B.vertex("v")), ContextMismatch);
    CHECK_THROWS_AS((void) (A.vertex("v") == B.vertex("v")), ContextMismatch);
    CLAlgebra C(test::loop(true), Field::prime(2));
    CHECK_THROWS_AS((void) (A.vertex("v") * C.vertex("v")), ContextMismatch);
  }

  TEST_CASE("normal_monomials matches the counting definition") {
    for (auto const& obj : test::all_objects(test::all_graphs(2, 2))) {
      CLAlgebra  A(obj);
      auto const mons = A.normal_monomials(2, 2);
      CHECK(mons.size() == oracle_normal_count(obj, 2));
      for (auto const& m : mons) {
        CHECK(A.context()->is_normal(m));
      }
    }
  }

  TEST_CASE("associativity on random triples") {
    std::mt19937 rng(test::seed);
    for (auto const& A : law_corpus()) {
      for (int trial = 0; trial < 60; ++trial) {
        auto const x = test::random_element(rng, A), y = test::random_element(rng, A),
                   z = test::random_element(rng, A);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }

  TEST_CASE("the involution is anti-multiplicative of order two") {
    std::mt19937 rng(test::seed + 1);
    for (auto const& A : law_corpus()) {
      for (int trial = 0; trial < 60; ++trial) {
        auto const x = test::random_element(rng, A), y = test::random_element(rng, A);
        CHECK(involution(involution(x)) == x);
        CHECK(involution(x * y) == involution(y) * involution(x));
      }
    }
  }

  TEST_CASE("the grading is multiplicative and reversed by the involution") {
    std::mt19937                                rng(test::seed + 2);
    std::uniform_int_distribution<std::int64_t> deg(-2, 2);
    for (auto const& A : law_corpus()) {
      for (int trial = 0; trial < 40; ++trial) {
        auto const a = deg(rng), b = deg(rng);
        auto const x = test::random_homogeneous(rng, A, a), y = test::random_homogeneous(rng, A, b);
        CHECK(x.is_homogeneous(a));
        CHECK((x * y).is_homogeneous(a + b));
        CHECK(involution(x).is_homogeneous(-a));
      }
      for (int trial = 0; trial < 20; ++trial) {
        auto const x = test::random_element(rng, A), y = test::random_element(rng, A);
        auto const xs = x.homogeneous_components(), ys = y.homogeneous_components();
        std::map<std::int64_t, AlgebraElement> expected;
        for (auto const& [i, xi] : xs) {
          for (auto const& [j, yj] : ys) {
            auto [it, fresh] = expected.try_emplace(i + j, A.zero());
            it->second += xi * yj;
          }
        }
        auto const product = (x * y).homogeneous_components();
        for (auto const& [n, part] : expected) {
          auto const it = product.find(n);
          CHECK((it == product.end() ? A.zero() : it->second) == part);
        }
      }
    }
  }

  TEST_CASE("the identity generator map satisfies the relations") {
    for (auto const& A : law_corpus()) {
      GeneratorMap<AlgebraElement> id;
      for (Vertex v = 0; v < A.graph().vertex_count(); ++v) {
        id.vertex_images.emplace_back(A.vertex(v));
      }
      for (EdgeIndex e = 0; e < A.graph().edge_count(); ++e) {
        id.edge_images.emplace_back(A.edge(e));
      }
      auto const report = check_generator_map(A.object(), id);
      CHECK(report.ok());
      CHECK(report.instances_checked > 0);
      std::mt19937 rng(test::seed + 3);
      auto const   x = test::random_element(rng, A);
      CHECK(evaluate(x, id, A.zero()) == x);
    }
  }

  TEST_CASE("a generator map into a weaker algebra fails (SCK2)") {
    CLAlgebra                    cohn(test::bifurcation(false));
    GeneratorMap<AlgebraElement> map;
    for (Vertex v = 0; v < cohn.graph().vertex_count(); ++v) {
      map.vertex_images.emplace_back(cohn.vertex(v));
    }
    for (EdgeIndex e = 0; e < cohn.graph().edge_count(); ++e) {
      map.edge_images.emplace_back(cohn.edge(e));
    }
    auto const report = check_generator_map(test::bifurcation(true), map);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures.front().rfind("(SCK2)", 0) == 0);
    map.edge_images.pop_back();
    CHECK_THROWS_AS((void) check_generator_map(test::bifurcation(true), map), IncompleteMap);
  }

}  // namespace clpa
