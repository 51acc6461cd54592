#ifndef CLPA_GRAPH_MONOID_HPP_
#define CLPA_GRAPH_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clpa/cl_algebra.hpp"
#include "clpa/graded_matrix.hpp"
#include "clpa/graph.hpp"

namespace clpa {

  /// A multiset over the generators of a presentation: entry i is the
  /// multiplicity of generator i.
  using MonoidElement = std::vector<std::uint64_t>;

  /// x = sum of r(e) over the edges e of E_S emitted by x.
  struct Relation {
    Vertex        lhs = 0;
    MonoidElement rhs;
  };

  /// The monoid V of CL_K(E, S), presented through the relative graph: one
  /// generator per vertex of E_S and one relation per regular vertex of
  /// E_S (these are exactly the regular vertices of E).
  struct Presentation {
    RelativeGraph            relative;
    std::vector<std::string> generators;  // E_S vertex ids, by index
    std::vector<Relation>    relations;

    [[nodiscard]] MonoidElement zero() const {
      return MonoidElement(generators.size(), 0);
    }
    // The generator with the given id; throws InvalidGraph when unknown.
    [[nodiscard]] MonoidElement generator(std::string_view id) const;
    // "2*v + u1", "0" for the empty sum.
    [[nodiscard]] std::string to_string(MonoidElement const& x) const;
  };

  [[nodiscard]] Presentation presentation(CLObject const& obj);

  /// The isomorphism V -> N^(sinks + cycles) of a no-exit E_S: a generator
  /// maps to its numbers of paths into each sink and into the base of each
  /// cycle (paths meeting the target only at their end).
  struct MonoidInvariant {
    std::vector<std::string>                coordinates;  // sink ids, then cycles
    std::vector<std::vector<std::uint64_t>> images;       // one per generator

    [[nodiscard]] std::size_t rank() const noexcept {
      return coordinates.size();
    }
    [[nodiscard]] std::vector<std::uint64_t> evaluate(MonoidElement const& x) const;
  };

  /// The invariant, when the relative graph is no-exit.
  [[nodiscard]] std::optional<MonoidInvariant> monoid_invariant(Presentation const& p);

  /// For each relation, does the invariant take equal values on both sides?
  [[nodiscard]] std::vector<bool> relations_preserved(Presentation const&    p,
                                                      MonoidInvariant const& inv);

  struct MonoidEquality {
    Verdict     verdict = Verdict::unknown;
    std::string method;  // "invariant", "rational span", "span mod 2", "search", ...
    // For Yes: a common reduct of both sides.
    std::optional<MonoidElement> common;
    // For Yes: the largest number of relation moves used on either side.
    std::size_t depth = 0;
  };

  /// Decides a = b in V when possible: exactly through the invariant when
  /// E_S is no-exit; otherwise No when a - b leaves the span of the
  /// relations (over Q or GF(p)) or exactly one side is empty, Yes when a
  /// bidirectional search with `depth` relation moves per side meets, and
  /// Unknown otherwise.
  [[nodiscard]] MonoidEquality equal(Presentation const&  p,
                                     MonoidElement const& a,
                                     MonoidElement const& b,
                                     std::size_t          depth = 8);

  /// One algebraic check performed on a witness.
  struct WitnessCheck {
    std::string name;
    bool        passed = false;
  };

  [[nodiscard]] bool all_passed(std::vector<WitnessCheck> const& checks);

  /// Does the cycle have an exit relative to the object: a vertex that is
  /// a bifurcation, or a vertex outside S (which gains an exit into its
  /// primed copy in E_S)?  Returns the first such vertex in cycle order.
  [[nodiscard]] std::optional<Vertex> exit_vertex(CLObject const& obj, Cycle const& c);

  /// The idempotents p_n = c^n (c^*)^n for the cycle c based at its exit
  /// vertex v, with the checks behind [v] = [v] + [p_n - p_{n+1}] and
  /// p_n - p_{n+1} != 0.
  struct CancellationWitness {
    Cycle                       cycle;
    Vertex                      base = 0;
    std::vector<AlgebraElement> p;  // p_1, ..., p_N
    std::vector<WitnessCheck>   checks;
    std::string                 identity;

    [[nodiscard]] bool ok() const {
      return all_passed(checks);
    }
  };

  /// Throws NotAnExit when the cycle has no exit relative to the object.
  [[nodiscard]] CancellationWitness cancellation_witness(CLObject const& obj,
                                                         Cycle const&    cycle,
                                                         std::size_t     N,
                                                         Field const&    field = Field::rationals());

  struct MonoidVerdict {
    bool                               atomic_cancellative = false;
    std::optional<MonoidInvariant>     invariant;
    std::vector<bool>                  relations_preserved;
    std::optional<CancellationWitness> witness;
  };

  /// V is atomic and cancellative exactly when E_S is no-exit; then it is
  /// free on the sinks and cycles of E_S. Otherwise a cancellation witness
  /// is attached for the first cycle with an exit.
  [[nodiscard]] MonoidVerdict atomic_cancellative_verdict(CLObject const& obj,
                                                          Field const& field = Field::rationals(),
                                                          std::size_t  N     = 3);

}  // namespace clpa

#endif  // CLPA_GRAPH_MONOID_HPP_
