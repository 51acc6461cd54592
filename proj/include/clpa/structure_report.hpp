#ifndef CLPA_STRUCTURE_REPORT_HPP_
#define CLPA_STRUCTURE_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clpa/cl_algebra.hpp"
#include "clpa/classify.hpp"
#include "clpa/graph.hpp"
#include "clpa/graph_monoid.hpp"
#include "clpa/laurent.hpp"

namespace clpa {

  /// The three families of equivalent conditions. On a finite graph they
  /// reduce to: no-exit; acyclic; no-exit without sinks.
  enum class Family {
    no_exit,
    acyclic,
    no_exit_sink_free,
  };

  [[nodiscard]] std::string to_string(Family f);

  struct ConditionEntry {
    std::string id;         // "(5)", "(8'l)", "(3'')", ...
    std::string statement;  // short description of the condition
    Family      family = Family::no_exit;
    bool        verdict = false;
    // Recorded from the literature rather than derived from the graph
    // predicate together with the classification.
    bool                       cited = false;
    std::string                justification;
    std::optional<std::string> witness;  // name of the witness operation
  };

  /// Verdicts for every condition, evaluated through the relative graph
  /// E_S (so CL_K(E, S) is treated as the Leavitt path algebra L_K(E_S)).
  struct PropertyReport {
    bool                        no_exit   = false;
    bool                        acyclic   = false;
    bool                        sink_free = false;
    std::vector<ConditionEntry> conditions;
    std::vector<std::string>    notes;

    [[nodiscard]] bool verdict(Family f) const;
    // Throws std::out_of_range for an unknown id.
    [[nodiscard]] ConditionEntry const& condition(std::string_view id) const;
    // The ids in the same family as `id`, including `id`.
    [[nodiscard]] std::vector<std::string> equivalent_to(std::string_view id) const;
  };

  [[nodiscard]] PropertyReport report(CLObject const& obj);

  /// g_n = v - c^n (c^*)^n for n = 1..N, where c is based at its exit
  /// vertex v. The left ideals of vL v generated by g_n increase, and the
  /// increase is strict: g_{n+1} g_n = g_n != g_{n+1} excludes
  /// g_{n+1} = x g_n.
  struct NoetherianChainWitness {
    Cycle                       cycle;
    Vertex                      base = 0;
    std::vector<AlgebraElement> g;
    std::vector<WitnessCheck>   checks;

    [[nodiscard]] bool ok() const {
      return all_passed(checks);
    }
  };

  /// Throws NotAnExit when the cycle has no exit relative to S.
  [[nodiscard]] NoetherianChainWitness noetherian_chain_witness(CLObject const& obj,
                                                               Cycle const&    cycle,
                                                               std::size_t     N,
                                                               Field const& field = Field::rationals());

  /// Evidence that the corner at the base v of a cycle c of a no-exit
  /// object is not artinian.
  ///
  /// h_n = c^n maps to t^n in the Laurent block; since c^n = c^* c^(n+1)
  /// these generate one and the same left ideal, so they are recorded but
  /// carry no strictness. The chain k_n = (v - c)^n maps to (1 - t)^n,
  /// and (1 - t)^(n+1) does not divide (1 - t)^n in K[t, t^-1], so the
  /// left ideals of vL v generated by k_n decrease strictly.
  struct ArtinianFailureWitness {
    Cycle                         cycle;
    Vertex                        base  = 0;
    std::size_t                   block = 0;  // index of the Laurent block
    std::vector<AlgebraElement>   h;          // c^n
    std::vector<MatricialElement> h_images;
    std::vector<AlgebraElement>   k;          // (v - c)^n
    std::vector<LaurentPoly>      k_images;   // base entry of Psi(k_n)
    std::vector<WitnessCheck>     checks;
    std::vector<std::string>      notes;

    [[nodiscard]] bool ok() const {
      return all_passed(checks);
    }
  };

  /// Throws NotNoExitObject unless obj is a no-exit object, and
  /// std::invalid_argument when `cycle` is not a cycle of the graph.
  [[nodiscard]] ArtinianFailureWitness artinian_failure_witness(CLObject const& obj,
                                                               Cycle const&    cycle,
                                                               std::size_t     N,
                                                               Field const& field = Field::rationals());

  /// As above for the first cycle; throws NoCycle for an acyclic graph.
  [[nodiscard]] ArtinianFailureWitness artinian_failure_witness(CLObject const& obj,
                                                               std::size_t     N,
                                                               Field const& field = Field::rationals());

  /// The map phi : L_K(E_S) -> CL_K(E, S) on generators, with the checks
  /// that it respects the defining relations and the grading.
  struct RelgraphReport {
    RelativeGraph                  relative;
    GeneratorMap<AlgebraElement>   images;  // indexed by E_S vertices and edges
    AxiomReport                    axioms;
    std::vector<WitnessCheck>      checks;

    [[nodiscard]] bool ok() const {
      return axioms.ok() && all_passed(checks);
    }
  };

  [[nodiscard]] RelgraphReport relgraph_verify(CLObject const& obj,
                                               Field const&    field = Field::rationals());

}  // namespace clpa

#endif  // CLPA_STRUCTURE_REPORT_HPP_
