// Acceptance checks AC1 to AC9. Prints one PASS/FAIL line per criterion
// and exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "clpa/classify.hpp"
#include "clpa/cli_io.hpp"
#include "clpa/graph_monoid.hpp"
#include "clpa/linear.hpp"
#include "clpa/structure_report.hpp"

#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace {

  using namespace clpa;
  using Clock = std::chrono::steady_clock;

  /// Outcome of one criterion: failures are collected as messages.
  struct Result {
    std::vector<std::string> failures;
    std::string              detail;

    void expect(bool ok, std::string const& what) {
      if (!ok && failures.size() < 5) {
        failures.push_back(what);
      }
    }
  };

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  std::vector<CLObject> no_exit_corpus(std::size_t max_n, int max_mult) {
    return test::no_exit_objects(test::all_objects(test::all_graphs(max_n, max_mult)));
  }

  // AC1: the fan for n = 1..5, exact images, under 1 s per n.
  Result ac1() {
    Result r;
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const start = Clock::now();
      auto const obj   = test::fan(n);
      auto const sig   = classify(obj);
      auto const want  = "M1(K)(0) + M2(K)(0,1)" + (n > 1 ? "^" + std::to_string(n) : std::string());
      r.expect(sig.to_string() == want, "n=" + std::to_string(n) + ": signature " + sig.to_string());
      auto const  psi = build_generator_map(obj, sig);
      auto const& g   = obj.graph();
      auto const& T   = psi.target();
      r.expect(psi.axioms().ok(), "axiom failures");
      std::size_t blocks = 0;
      for (std::size_t b = 0; b < T->block_count(); ++b) {
        for (std::size_t i = 0; i < T->block(b)->size(); ++i) {
          blocks += T->block(b)->size();
        }
      }
      r.expect(psi.units_checked() == blocks, "not every matrix unit has a preimage");
      auto v_image = MatricialElement::unit(T, n, 0, 0);
      for (std::size_t i = 1; i <= n; ++i) {
        auto const u = g.vertex("u" + std::to_string(i));
        auto const e = g.edge("e" + std::to_string(i));
        r.expect(*psi.images().vertex_images[u] == MatricialElement::unit(T, i - 1, 0, 0),
                 "image of u" + std::to_string(i));
        r.expect(*psi.images().edge_images[e] == MatricialElement::unit(T, i - 1, 1, 0),
                 "image of e" + std::to_string(i));
        r.expect(psi.images().edge_images[e]->is_homogeneous(1), "degree of e" + std::to_string(i));
        v_image += MatricialElement::unit(T, i - 1, 1, 1);
      }
      r.expect(*psi.images().vertex_images[g.vertex("v")] == v_image, "image of v");
      auto const t = seconds_since(start);
      r.expect(t < 1.0, "n=" + std::to_string(n) + " took " + std::to_string(t) + " s");
    }
    r.detail = "n = 1..5";
    return r;
  }

  // AC2: M2(K)(0,0) is the algebra of no no-exit object with <= 3 vertices.
  Result ac2() {
    Result                   r;
    MatricialSignature const m2{{{2, {0, 0}}}, {}};
    auto const               corpus = no_exit_corpus(3, 2);
    auto const               q      = Field::rationals();
    bool                     certificate_seen = false;
    for (auto const& obj : corpus) {
      auto const sig = classify(obj);
      auto const d   = decide_signature_iso(m2, sig, q);
      r.expect(d.verdict == Verdict::no, "not No for " + sig.to_string());
      if (sig.field_blocks.size() == 1 && sig.laurent_blocks.empty() && sig.field_blocks[0].size == 2) {
        auto const block = decide_graded_iso(GradedMatrixAlgebra::field_block({0, 0}),
                                             GradedMatrixAlgebra::field_block(sig.field_blocks[0].shifts));
        r.expect(block.verdict == Verdict::no && block.certificate && block.certificate->delta == 0
                     && block.certificate->dim_a == 4 && block.certificate->dim_b == 2,
                 "missing delta=0 certificate for " + sig.to_string());
        certificate_seen = true;
      }
    }
    r.expect(certificate_seen, "the two-paths-to-one-sink case did not occur");
    r.detail = std::to_string(corpus.size()) + " objects";
    return r;
  }

  // AC3: the loop algebra.
  Result ac3() {
    Result     r;
    auto const loop = test::loop(true);
    r.expect(classify(loop).to_string() == "M1(K[x,x^-1])(0)", "signature " + classify(loop).to_string());
    auto const path = std::filesystem::temp_directory_path() / "clpa_acceptance_loop.json";
    std::ofstream(path) << graph_to_json(loop).dump();
    std::ostringstream out, err;
    int const          code = run({"eval", "--graph", path.string(), "c|c"}, out, err);
    r.expect(code == 0 && out.str() == "v\n", "eval \"c|c\" printed '" + out.str() + "'");
    std::filesystem::remove(path);
    auto const rep = report(loop);
    r.expect(rep.verdict(Family::no_exit), "noetherian family not true");
    for (auto const* id : {"(8l)", "(9r)", "(10l)", "(11r)", "(16l)", "(17r)"}) {
      r.expect(rep.condition(id).verdict, std::string(id) + " not true");
    }
    for (auto const* id : {"(6')", "(7'l)", "(8'r)"}) {
      r.expect(!rep.condition(id).verdict, std::string(id) + " not false");
    }
    bool strict = false;
    for (auto const& n : rep.notes) {
      strict = strict || n.find("strict") != std::string::npos;
    }
    r.expect(strict, "strict implication note missing");
    r.expect(artinian_failure_witness(loop, 3).ok(), "artinian witness checks");
    r.detail = "signature, eval, report";
    return r;
  }

  // AC4: over every no-exit object with <= 4 vertices (up to relabelling),
  // Psi is multiplicative, faithful on normal forms, and injective on
  // normal-form monomials with |p|, |q| <= 3.
  Result ac4() {
    Result     r;
    auto const start  = Clock::now();
    auto const   corpus = test::no_exit_objects(test::all_objects_up_to_iso(4, 1));
    std::mt19937 rng(test::seed);
    std::size_t pairs = 0, monomials = 0;
    for (auto const& obj : corpus) {
      auto const  psi = build_generator_map(obj);
      auto const& A   = psi.source();
      for (int t = 0; t < 100; ++t) {
        auto const x = test::random_element(rng, A), y = test::random_element(rng, A);
        auto const px = psi.image(x), py = psi.image(y);
        r.expect(psi.image(x * y) == px * py, "Psi(xy) != Psi(x)Psi(y)");
        r.expect((x == y) == (px == py), "normal-form and image equality disagree");
        auto const same = A.local_unit() * (x + y) - y;
        r.expect(same == x && psi.image(same) == px, "two representations differ");
        ++pairs;
      }
      SparseEchelon<MatricialElement::Key> echelon;
      for (auto const& m : A.normal_monomials(3, 3)) {
        r.expect(echelon.add(psi.image(A.monomial(m.p, m.q)).coordinates()),
                 "dependent normal-form images");
        ++monomials;
      }
    }
    auto const t = seconds_since(start);
    r.expect(t < 30.0, "corpus took " + std::to_string(t) + " s");
    r.detail = std::to_string(corpus.size()) + " objects, " + std::to_string(pairs) + " pairs, "
               + std::to_string(monomials) + " monomials";
    return r;
  }

  // AC5: associativity, involution, and grading laws.
  Result ac5() {
    Result                 r;
    std::vector<CLAlgebra> graphs;
    for (auto const& obj : {test::loop(true), test::loop(false), test::rose(), test::two_cycle(),
                            test::two_cycle_with_exit(), test::bifurcation(true),
                            test::bifurcation(false), test::fan(3)}) {
      graphs.emplace_back(obj);
    }
    std::mt19937                                rng(test::seed + 1);
    std::uniform_int_distribution<std::int64_t> deg(-2, 2);
    for (auto const& A : graphs) {
      for (int t = 0; t < 200; ++t) {
        auto const x = test::random_element(rng, A), y = test::random_element(rng, A),
                   z = test::random_element(rng, A);
        r.expect((x * y) * z == x * (y * z), "associativity");
        r.expect(involution(involution(x)) == x, "involution of order two");
        r.expect(involution(x * y) == involution(y) * involution(x), "anti-multiplicativity");
        auto const a = deg(rng), b = deg(rng);
        auto const hx = test::random_homogeneous(rng, A, a), hy = test::random_homogeneous(rng, A, b);
        r.expect((hx * hy).is_homogeneous(a + b), "grading not multiplicative");
        r.expect(involution(hx).is_homogeneous(-a), "(CL_n)* != CL_-n");
      }
    }
    r.detail = std::to_string(graphs.size()) + " graphs x 200 triples";
    return r;
  }

  // AC6: decide_graded_iso against brute force over GF(2).
  Result ac6() {
    Result      r;
    auto const  gf2   = Field::prime(2);
    auto const  start = Clock::now();
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
      std::vector<std::vector<std::int64_t>> vectors{{}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<std::int64_t>> next;
        for (auto const& v : vectors) {
          for (std::int64_t x = 0; x <= 2; ++x) {
            auto w = v;
            w.push_back(x);
            next.push_back(w);
          }
        }
        vectors = next;
      }
      for (auto const& a : vectors) {
        for (auto const& b : vectors) {
          auto const A = GradedMatrixAlgebra::field_block(a, gf2);
          auto const B = GradedMatrixAlgebra::field_block(b, gf2);
          auto const d = decide_graded_iso(A, B);
          r.expect(d.verdict != Verdict::unknown, "Unknown verdict");
          bool const brute = brute_force_iso_oracle(A, B);
          r.expect((d.verdict == Verdict::yes) == brute, "disagrees with brute_force_iso_oracle");
          r.expect(brute == test::oracle_gl2_iso(a, b), "brute force disagrees with test oracle");
          ++pairs;
        }
      }
    }
    auto const t = seconds_since(start);
    r.expect(t < 10.0, "took " + std::to_string(t) + " s");
    r.detail = std::to_string(pairs) + " pairs";
    return r;
  }

  // AC7: monoid invariants on the no-exit corpus and the rose witness.
  Result ac7() {
    Result     r;
    auto const corpus = no_exit_corpus(3, 2);
    for (auto const& obj : corpus) {
      auto const v = atomic_cancellative_verdict(obj);
      r.expect(v.atomic_cancellative && v.invariant.has_value(), "no invariant");
      if (!v.invariant) {
        continue;
      }
      auto const pred = predicates(relative_graph(obj).graph);
      r.expect(v.invariant->rank() == pred.sinks.size() + pred.cycles.size(), "rank != s + c");
      for (bool b : v.relations_preserved) {
        r.expect(b, "relation not preserved");
      }
    }
    auto const rose = atomic_cancellative_verdict(test::rose(), Field::rationals(), 3);
    r.expect(!rose.atomic_cancellative, "rose reported cancellative");
    r.expect(rose.witness && rose.witness->ok() && rose.witness->p.size() == 3, "rose witness checks");
    r.detail = std::to_string(corpus.size()) + " objects + rose";
    return r;
  }

  // AC8: the relative graph.
  Result ac8() {
    Result                r;
    std::vector<CLObject> objects{test::loop(false)};
    std::mt19937          rng(test::seed + 2);
    for (int i = 0; i < 20; ++i) {
      objects.push_back(test::random_object(rng, 4, 0.35));
    }
    std::size_t no_exit = 0;
    for (auto const& obj : objects) {
      auto const rep = relgraph_verify(obj);
      r.expect(rep.ok(), "relgraph_verify failed");
      auto const& g          = obj.graph();
      auto const  split      = obj.regular_not_in_s();
      std::size_t into_split = 0;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        into_split += std::count(split.begin(), split.end(), g.range(e));
      }
      r.expect(rep.relative.graph.vertex_count() == g.vertex_count() + split.size(), "vertex count");
      r.expect(rep.relative.graph.edge_count() == g.edge_count() + into_split, "edge count");
      if (check_no_exit_object(obj).ok) {
        ++no_exit;
        r.expect(predicates(rep.relative.graph).is_no_exit, "E_S has an exit");
      }
    }
    r.expect(relgraph_verify(test::loop(false)).axioms.instances_checked > 0, "Toeplitz not checked");
    r.detail = std::to_string(objects.size()) + " objects, " + std::to_string(no_exit) + " no-exit";
    return r;
  }

  // AC9: the chain of subobjects of the fan.
  Result ac9() {
    Result            r;
    std::size_t const n   = 3;
    auto const        obj = test::fan(n);
    auto const        sys = classify_system(obj, Field::rationals(), 3);
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i <= n; ++i) {
      // F_i keeps v, u_1..u_i and e_1..e_i.
      std::optional<std::size_t> found;
      for (std::size_t k = 0; k < sys.system.nodes.size(); ++k) {
        auto const& node = sys.system.nodes[k];
        bool        match = node.vertex_mask[obj.graph().vertex("v")];
        for (std::size_t j = 1; j <= n; ++j) {
          auto const u = obj.graph().vertex("u" + std::to_string(j));
          auto const e = obj.graph().edge("e" + std::to_string(j));
          match = match && node.vertex_mask[u] == (j <= i) && node.edge_mask[e] == (j <= i);
        }
        if (match) {
          found = k;
        }
      }
      r.expect(found.has_value(), "F_" + std::to_string(i) + " missing");
      if (!found) {
        return r;
      }
      auto const want = "M1(K)(0)" + (i == 0 ? std::string()
                                             : " + M2(K)(0,1)" + (i > 1 ? "^" + std::to_string(i) : ""));
      r.expect(sys.nodes[*found].signature.to_string() == want,
               "F_" + std::to_string(i) + ": " + sys.nodes[*found].signature.to_string());
      if (!chain.empty()) {
        r.expect(sys.system.includes(*found, chain.back()), "chain not increasing");
      }
      chain.push_back(*found);
    }
    for (auto const& node : sys.nodes) {
      r.expect(node.injective, "injectivity check failed");
    }
    r.detail = std::to_string(sys.nodes.size()) + " subobjects";
    return r;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}};
  int failed = 0;
  for (auto const& [name, check] : criteria) {
    auto const start = Clock::now();
    Result     r;
    try {
      r = check();
    } catch (std::exception const& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    auto const t = seconds_since(start);
    std::printf("%s %s  %.2fs  %s\n", name.c_str(), r.failures.empty() ? "PASS" : "FAIL", t,
                r.detail.c_str());
    for (auto const& f : r.failures) {
      std::printf("    %s\n", f.c_str());
    }
    failed += r.failures.empty() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
