#include <random>

#include "doctest.h"

#include "clpa/error.hpp"
#include "clpa/structure_report.hpp"

#include "support/corpus.hpp"

namespace clpa {

  TEST_CASE("the loop separates graded from ungraded artinian conditions") {
    auto const r = report(test::loop(true));
    CHECK(r.verdict(Family::no_exit));
    CHECK_FALSE(r.verdict(Family::acyclic));
    CHECK(r.verdict(Family::no_exit_sink_free));
    CHECK(r.condition("(11l)").verdict);
    CHECK(r.condition("(17r)").verdict);
    CHECK_FALSE(r.condition("(8'l)").verdict);
    CHECK(r.condition("(8'l)").witness == "artinian_failure_witness");
    CHECK(r.condition("(13)").cited);
    CHECK_FALSE(r.condition("(5)").cited);
    bool strict_note = false;
    for (auto const& n : r.notes) {
      strict_note = strict_note || n.find("strict") != std::string::npos;
    }
    CHECK(strict_note);
    CHECK_THROWS_AS((void) r.condition("(99)"), std::out_of_range);
  }

  TEST_CASE("every family is internally consistent") {
    std::mt19937 rng(test::seed);
    for (int trial = 0; trial < 40; ++trial) {
      auto const r = report(test::random_object(rng, 4, 0.35));
      for (auto const& c : r.conditions) {
        CHECK(c.verdict == r.verdict(c.family));
        if (c.witness) {
          CHECK_FALSE(c.verdict);
        }
      }
      CHECK(r.acyclic <= r.no_exit);
      CHECK((r.no_exit && r.sink_free) == r.verdict(Family::no_exit_sink_free));
    }
  }

  TEST_CASE("family membership and equivalences") {
    auto const r   = report(test::fan(2));
    auto const ids = r.equivalent_to("(4')");
    CHECK(std::find(ids.begin(), ids.end(), "(e')") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "(4)") == ids.end());
    CHECK(r.verdict(Family::acyclic));
    CHECK_FALSE(r.verdict(Family::no_exit_sink_free));
    CHECK(r.conditions.size() == 28 + 15 + 5);
  }

  TEST_CASE("the rose fails the no-exit family with a cancellation witness") {
    auto const r = report(test::rose());
    CHECK_FALSE(r.verdict(Family::no_exit));
    CHECK(r.condition("(7)").witness == "cancellation_witness");
    CHECK(r.condition("(9l)").witness == "noetherian_chain_witness");
  }

  TEST_CASE("reports are taken on the relative graph") {
    // The Toeplitz loop has an exit into v~ in E_S.
    CHECK_FALSE(report(test::loop(false)).no_exit);
    // A Cohn fan stays acyclic and gains a sink.
    auto const fan = report(test::bifurcation(false));
    CHECK(fan.acyclic);
    CHECK_FALSE(fan.sink_free);
  }

  TEST_CASE("noetherian chain witnesses are strict") {
    for (auto const& obj : {test::rose(), test::two_cycle_with_exit(), test::loop(false)}) {
      auto const c = cycles(obj.graph()).front();
      auto const w = noetherian_chain_witness(obj, c, 4);
      CHECK(w.ok());
      REQUIRE(w.g.size() == 4);
      for (std::size_t n = 0; n + 1 < w.g.size(); ++n) {
        CHECK(w.g[n + 1] * w.g[n] == w.g[n]);
        CHECK(w.g[n + 1] != w.g[n]);
        CHECK(is_idempotent(w.g[n]));
      }
    }
    auto const loop = test::loop(true);
    CHECK_THROWS_AS((void) noetherian_chain_witness(loop, cycles(loop.graph()).front(), 3), NotAnExit);
  }

  TEST_CASE("artinian failure witnesses") {
    auto const w = artinian_failure_witness(test::loop(true), 4);
    CHECK(w.ok());
    REQUIRE(w.k_images.size() == 4);
    auto const q    = Field::rationals();
    auto const step = LaurentPoly::constant(1, q.one()) - LaurentPoly::monomial(1, 1, q.one());
    auto       expected = step;
    for (std::size_t n = 0; n < w.k_images.size(); ++n) {
      CHECK(w.k_images[n] == expected);
      expected = expected * step;
    }
    for (std::size_t n = 0; n + 1 < w.h.size(); ++n) {
      auto const c = w.h[0];
      CHECK(involution(c) * w.h[n + 1] == w.h[n]);
    }
    auto const two = artinian_failure_witness(test::two_cycle(), 3);
    CHECK(two.ok());
    CHECK_THROWS_AS((void) artinian_failure_witness(test::fan(2), 3), NoCycle);
    CHECK_THROWS_AS((void) artinian_failure_witness(test::rose(), 3), NotNoExitObject);
  }

  TEST_CASE("the map from the relative graph algebra") {
    auto const toeplitz = relgraph_verify(test::loop(false));
    CHECK(toeplitz.ok());
    CHECK(toeplitz.axioms.instances_checked > 0);
    std::mt19937 rng(test::seed + 5);
    for (int trial = 0; trial < 20; ++trial) {
      auto const obj = test::random_object(rng, 3, 0.4);
      auto const r   = relgraph_verify(obj);
      CHECK(r.ok());
      for (auto const& c : r.checks) {
        CHECK_MESSAGE(c.passed, c.name);
      }
    }
  }

}  // namespace clpa
