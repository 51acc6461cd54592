#ifndef CLPA_CLI_IO_HPP_
#define CLPA_CLI_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "clpa/cl_algebra.hpp"
#include "clpa/graded_matrix.hpp"
#include "clpa/graph.hpp"
#include "clpa/graph_monoid.hpp"

namespace clpa {

  using json = nlohmann::ordered_json;

  /// Graph JSON: {"vertices": [...], "edges": [{"id", "src", "rng"}], "S": [...]}.
  /// A missing "S" means S = R(E). Output keys and arrays are in canonical
  /// (id) order, so serialization is stable.
  [[nodiscard]] json     graph_to_json(CLObject const& obj);
  [[nodiscard]] CLObject graph_from_json(json const& j);

  /// Signature JSON: {"field_blocks": [{"size", "shifts"}],
  /// "laurent_blocks": [{"size", "period", "shifts"}]}.
  [[nodiscard]] json               signature_to_json(MatricialSignature const& sig);
  [[nodiscard]] MatricialSignature signature_from_json(json const& j);

  /// Reads and parses a JSON file; throws ParseError on failure.
  [[nodiscard]] json read_json_file(std::string const& path);

  /// Parses the element grammar
  ///
  ///   EXPR := ['-'] TERM (('+' | '-') TERM)*
  ///   TERM := [SCALAR '*'] MONO
  ///   MONO := PATH ['|' PATH]
  ///   PATH := id ('.' id)*
  ///
  /// where a lone vertex id is a trivial path and p|q stands for p q^*.
  /// SCALAR is an integer or a fraction a/b. Identifiers are maximal runs
  /// of characters other than whitespace and "|.+-*/". Throws ParseError
  /// carrying the byte position of the offending token.
  [[nodiscard]] AlgebraElement parse_expression(std::string_view text, CLAlgebra const& algebra);

  /// Parses "2*v + u1" over the generators of a presentation; "0" is the
  /// empty sum. Throws ParseError.
  [[nodiscard]] MonoidElement parse_monoid_element(std::string_view text, Presentation const& p);

  /// Finds the cycle with the given edge ids in cycle order (any rotation).
  /// Throws ParseError when the edges do not form a cycle of the graph.
  [[nodiscard]] Cycle parse_cycle(std::string_view text, Graph const& g);

  /// Runs the command line `args` (without the program name), writing
  /// results to `out` and diagnostics to `err`. Returns 0 on success, 2 on
  /// invalid input, and 3 when an internal verification fails.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace clpa

#endif  // CLPA_CLI_IO_HPP_
