#ifndef CLPA_GRAPH_HPP_
#define CLPA_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clpa {

  using Vertex    = std::uint32_t;
  using EdgeIndex = std::uint32_t;

  /// A finite directed multigraph with string ids.
  ///
  /// Vertices and edges are indexed in ascending id order, so index order
  /// and lexicographic id order coincide. Ids are nonempty and contain no
  /// whitespace, '|', '.', or '~'; vertex and edge ids must be disjoint.
  class Graph {
   public:
    struct EdgeSpec {
      std::string id;
      std::string src;
      std::string rng;

      friend bool operator==(EdgeSpec const&, EdgeSpec const&) = default;
    };

    Graph() = default;
    // Throws InvalidGraph naming the offending id.
    Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertex_ids.size();
    }
    [[nodiscard]] std::size_t edge_count() const noexcept {
      return _edges.size();
    }

    [[nodiscard]] std::string const& vertex_id(Vertex v) const {
      return _vertex_ids.at(v);
    }
    [[nodiscard]] std::string const& edge_id(EdgeIndex e) const {
      return _edges.at(e).id;
    }
    [[nodiscard]] Vertex source(EdgeIndex e) const {
      return _edges.at(e).src;
    }
    [[nodiscard]] Vertex range(EdgeIndex e) const {
      return _edges.at(e).rng;
    }

    [[nodiscard]] std::optional<Vertex>    find_vertex(std::string_view id) const;
    [[nodiscard]] std::optional<EdgeIndex> find_edge(std::string_view id) const;
    // As find_*, but throws InvalidGraph when the id is unknown.
    [[nodiscard]] Vertex    vertex(std::string_view id) const;
    [[nodiscard]] EdgeIndex edge(std::string_view id) const;

    // Edges emitted by / entering v, ascending by id.
    [[nodiscard]] std::span<EdgeIndex const> out_edges(Vertex v) const {
      return _out.at(v);
    }
    [[nodiscard]] std::span<EdgeIndex const> in_edges(Vertex v) const {
      return _in.at(v);
    }

    [[nodiscard]] bool is_sink(Vertex v) const {
      return _out.at(v).empty();
    }
    // Finite graphs have no infinite emitters: regular = not a sink.
    [[nodiscard]] bool is_regular(Vertex v) const {
      return !is_sink(v);
    }
    [[nodiscard]] bool is_bifurcation(Vertex v) const {
      return _out.at(v).size() >= 2;
    }

    [[nodiscard]] std::vector<std::string> const& vertex_ids() const noexcept {
      return _vertex_ids;
    }
    [[nodiscard]] std::vector<EdgeSpec> edge_specs() const;

    // The subgraph keeping the masked vertices and edges. Every kept edge
    // must have both endpoints kept.
    [[nodiscard]] Graph subgraph(std::vector<bool> const& vertex_mask,
                                 std::vector<bool> const& edge_mask) const;

    friend bool operator==(Graph const& lhs, Graph const& rhs) {
      return lhs._vertex_ids == rhs._vertex_ids && lhs._edges == rhs._edges;
    }

   private:
    struct EdgeData {
      std::string id;
      Vertex      src;
      Vertex      rng;

      friend bool operator==(EdgeData const&, EdgeData const&) = default;
    };

    std::vector<std::string>                    _vertex_ids;
    std::vector<EdgeData>                       _edges;
    std::unordered_map<std::string, Vertex>     _vertex_index;
    std::unordered_map<std::string, EdgeIndex>  _edge_index;
    std::vector<std::vector<EdgeIndex>>         _out;
    std::vector<std::vector<EdgeIndex>>         _in;
  };

  /// Is `id` usable as a vertex or edge id?
  [[nodiscard]] bool is_valid_id(std::string_view id) noexcept;

  /// A graph E with a set S of regular vertices: the pair (E, S).
  class CLObject {
   public:
    CLObject() = default;
    // Throws InvalidGraph when a vertex of S is unknown or not regular.
    CLObject(Graph graph, std::vector<Vertex> s_set);
    CLObject(Graph graph, std::vector<std::string> const& s_ids);

    // (E, R(E)): the object whose Cohn-Leavitt algebra is L_K(E).
    [[nodiscard]] static CLObject leavitt(Graph graph);
    // (E, {}): the Cohn path algebra.
    [[nodiscard]] static CLObject cohn(Graph graph);

    [[nodiscard]] Graph const& graph() const noexcept {
      return _graph;
    }
    [[nodiscard]] bool in_s(Vertex v) const {
      return _in_s.at(v);
    }
    // Ascending.
    [[nodiscard]] std::vector<Vertex> const& s_vertices() const noexcept {
      return _s;
    }
    // R(E) - S, ascending.
    [[nodiscard]] std::vector<Vertex> regular_not_in_s() const;

    friend bool operator==(CLObject const& lhs, CLObject const& rhs) {
      return lhs._graph == rhs._graph && lhs._s == rhs._s;
    }

   private:
    Graph               _graph;
    std::vector<Vertex> _s;
    std::vector<bool>   _in_s;
  };

  /// A finite path: a source vertex and a (possibly empty) edge sequence.
  struct Path {
    Vertex                 source = 0;
    Vertex                 range  = 0;
    std::vector<EdgeIndex> edges;

    [[nodiscard]] static Path trivial(Vertex v) {
      return Path{v, v, {}};
    }
    [[nodiscard]] static Path edge(Graph const& g, EdgeIndex e) {
      return Path{g.source(e), g.range(e), {e}};
    }
    // Throws InvalidGraph when consecutive edges do not compose.
    [[nodiscard]] static Path from_edges(Graph const& g,
                                         std::vector<EdgeIndex> edges);

    [[nodiscard]] std::size_t length() const noexcept {
      return edges.size();
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return edges.empty();
    }
    // Vertices visited in order: s(e1), ..., s(en), r(en).
    [[nodiscard]] std::vector<Vertex> vertices(Graph const& g) const;
    // this followed by `tail`; requires range == tail.source.
    [[nodiscard]] Path concat(Path const& tail) const;
    // Does this path begin with `prefix`?
    [[nodiscard]] bool starts_with(Path const& prefix) const;
    // The part after the first n edges.
    [[nodiscard]] Path suffix_after(std::size_t n, Graph const& g) const;

    [[nodiscard]] std::string to_string(Graph const& g) const;

    // Ordered by (length, edge indices, source).
    friend std::strong_ordering operator<=>(Path const& a, Path const& b);
    friend bool operator==(Path const& a, Path const& b) {
      return a.source == b.source && a.edges == b.edges;
    }
  };

  /// A closed path with pairwise distinct edge sources, rotated to start at
  /// its smallest vertex.
  struct Cycle {
    std::vector<EdgeIndex> edges;

    [[nodiscard]] Vertex base(Graph const& g) const {
      return g.source(edges.front());
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return edges.size();
    }
    // Sources of the edges in cycle order.
    [[nodiscard]] std::vector<Vertex> vertices(Graph const& g) const;
    // The same cycle rotated to start at vertex v (which must lie on it).
    [[nodiscard]] Path as_path_from(Graph const& g, Vertex v) const;
    [[nodiscard]] std::string to_string(Graph const& g) const;

    friend auto operator<=>(Cycle const&, Cycle const&) = default;
  };

  struct GraphPredicates {
    bool                is_acyclic = true;
    bool                is_no_exit = true;
    std::vector<Vertex> sinks;
    std::vector<Vertex> bifurcations;
    std::vector<Vertex> regular_vertices;
    std::vector<Cycle>  cycles;
  };

  /// Structural predicates; cycles are exhaustive, canonical, and sorted.
  [[nodiscard]] GraphPredicates predicates(Graph const& g);
  [[nodiscard]] std::vector<Cycle> cycles(Graph const& g);

  /// All paths ending at `target` whose non-final vertices avoid
  /// `avoid_interior`, sorted by (length, edge ids). The trivial path at
  /// `target` is included. Throws NonFiniteEnumeration if the family is
  /// infinite (some admissible path revisits a vertex).
  [[nodiscard]] std::vector<Path>
  paths_into(Graph const& g, Vertex target, std::vector<Vertex> const& avoid_interior);

  /// All paths of length <= max_length, sorted.
  [[nodiscard]] std::vector<Path> paths_up_to(Graph const& g, std::size_t max_length);

  struct CompletenessCheck {
    bool                     complete = true;
    std::vector<std::string> violations;
  };

  /// Is `sub` a complete subobject of `ambient`?  Throws NotASubgraph when
  /// sub.graph is not a subgraph of ambient.graph (matched by id).
  [[nodiscard]] CompletenessCheck is_complete_subobject(CLObject const& sub,
                                                        CLObject const& ambient);

  /// The smallest complete subobject of `ambient` containing `sub_graph`.
  [[nodiscard]] CLObject complete(Graph const& sub_graph, CLObject const& ambient);

  /// Origin of each generator of the relative graph E_S.
  struct RelativeGraph {
    enum class VertexKind {
      plain,   // v not in R(E) - S, maps to v
      split,   // v in R(E) - S, maps to sum of ee* over s^-1(v)
      primed,  // v', maps to v - sum of ee*
    };
    enum class EdgeKind {
      plain,   // e, maps to e * phi(r(e))
      primed,  // e', maps to e * phi(r(e)')
    };

    Graph                   graph;
    std::vector<VertexKind> vertex_kind;    // indexed by E_S vertex
    std::vector<Vertex>     vertex_origin;  // the E vertex behind it
    std::vector<EdgeKind>   edge_kind;      // indexed by E_S edge
    std::vector<EdgeIndex>  edge_origin;    // the E edge behind it
  };

  /// Suffix used for the primed copies v', e' in E_S.
  inline constexpr char prime_suffix = '~';

  /// E_S: adds a sink v' for each v in R(E) - S and an edge e' : s(e) -> r(e)'
  /// for every edge e with r(e) in R(E) - S.
  [[nodiscard]] RelativeGraph relative_graph(CLObject const& obj);

  /// A complete subobject together with its position inside the ambient.
  struct SubobjectNode {
    CLObject          object;
    std::vector<bool> vertex_mask;  // over ambient vertices
    std::vector<bool> edge_mask;    // over ambient edges
  };

  /// The finite complete subobjects of an object ordered by inclusion.
  ///
  /// The empty subobject is excluded: its algebra is zero.
  struct SubobjectSystem {
    std::vector<SubobjectNode>               nodes;
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger)
    std::size_t                              top = 0;

    [[nodiscard]] bool includes(std::size_t larger, std::size_t smaller) const;
  };

  [[nodiscard]] SubobjectSystem subobject_system(CLObject const& obj);

  /// Graphviz rendering of the inclusion order.
  [[nodiscard]] std::string to_dot(SubobjectSystem const& system,
                                   CLObject const&        ambient);

}  // namespace clpa

#endif  // CLPA_GRAPH_HPP_
