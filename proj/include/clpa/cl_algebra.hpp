#ifndef CLPA_CL_ALGEBRA_HPP_
#define CLPA_CL_ALGEBRA_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clpa/error.hpp"
#include "clpa/graph.hpp"
#include "clpa/scalar.hpp"

namespace clpa {

  /// The monomial p q^* with r(p) = r(q).
  struct Monomial {
    Path p;
    Path q;

    [[nodiscard]] std::int64_t degree() const noexcept {
      return static_cast<std::int64_t>(p.length()) - static_cast<std::int64_t>(q.length());
    }
    [[nodiscard]] std::size_t bilength() const noexcept {
      return p.length() + q.length();
    }

    friend std::strong_ordering operator<=>(Monomial const& a, Monomial const& b) {
      if (auto c = a.p <=> b.p; c != 0) {
        return c;
      }
      return a.q <=> b.q;
    }
    friend bool operator==(Monomial const&, Monomial const&) = default;
  };

  /// Shared, read-only data behind the elements of one algebra CL_K(E, S).
  ///
  /// The special edge of v in S is the edge of s^-1(v) with the smallest
  /// id. A monomial (p' g)(q' g)^* with g special is rewritten using (SCK2):
  ///
  ///   (p' g)(q' g)^* -> p' q'^* - sum over e != g of (p' e)(q' e)^*.
  ///
  /// Monomials admitting no such rewrite are the normal-form monomials.
  class CLContext {
   public:
    CLContext(CLObject object, Field field);

    [[nodiscard]] CLObject const& object() const noexcept {
      return _object;
    }
    [[nodiscard]] Graph const& graph() const noexcept {
      return _object.graph();
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }
    // The special edge at v when v is in S.
    [[nodiscard]] std::optional<EdgeIndex> special_edge(Vertex v) const {
      return _special.at(v);
    }
    [[nodiscard]] bool is_normal(Monomial const& m) const;

    friend bool operator==(CLContext const& a, CLContext const& b) {
      return a._object == b._object && a._field == b._field;
    }

   private:
    CLObject                              _object;
    Field                                 _field;
    std::vector<std::optional<EdgeIndex>> _special;
  };

  /// An element of CL_K(E, S) kept in normal form.
  ///
  /// Terms are stored in a map ordered by monomial, so the representation
  /// of an element is canonical. Binary operations require both operands
  /// to come from equal contexts, otherwise ContextMismatch is thrown.
  class AlgebraElement {
   public:
    using term_map = std::map<Monomial, Scalar>;

    AlgebraElement() = default;
    explicit AlgebraElement(std::shared_ptr<CLContext const> ctx) : _ctx(std::move(ctx)) {}

    // Builds the normal form of a raw combination; r(p) = r(q) is checked.
    [[nodiscard]] static AlgebraElement
    normal_form(std::shared_ptr<CLContext const>              ctx,
                std::vector<std::pair<Monomial, Scalar>> const& raw);

    [[nodiscard]] std::shared_ptr<CLContext const> const& context() const noexcept {
      return _ctx;
    }
    [[nodiscard]] term_map const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }
    // The coefficient of a normal-form monomial.
    [[nodiscard]] Scalar coefficient(Monomial const& m) const;

    // (sum a p q^*)^* = sum a^* q p^*.
    [[nodiscard]] AlgebraElement involution() const;
    // Terms grouped by |p| - |q|; the zero element has no components.
    [[nodiscard]] std::map<std::int64_t, AlgebraElement> homogeneous_components() const;
    // Is every term of degree d?  Zero counts.
    [[nodiscard]] bool is_homogeneous(std::int64_t d) const;
    // The common degree of the terms, if homogeneous and nonzero.
    [[nodiscard]] std::optional<std::int64_t> degree() const;

    // Prints in the expression syntax, e.g. "2*e1.e2|f1 + v".
    [[nodiscard]] std::string to_string() const;

    AlgebraElement& operator+=(AlgebraElement const& rhs);
    AlgebraElement& operator-=(AlgebraElement const& rhs);
    AlgebraElement& operator*=(Scalar const& c);

    friend AlgebraElement operator+(AlgebraElement lhs, AlgebraElement const& rhs) {
      return lhs += rhs;
    }
    friend AlgebraElement operator-(AlgebraElement lhs, AlgebraElement const& rhs) {
      return lhs -= rhs;
    }
    friend AlgebraElement operator*(AlgebraElement lhs, Scalar const& c) {
      return lhs *= c;
    }
    friend AlgebraElement operator*(Scalar const& c, AlgebraElement rhs) {
      return rhs *= c;
    }
    friend AlgebraElement operator*(AlgebraElement const& lhs, AlgebraElement const& rhs);
    AlgebraElement operator-() const;

    // Throws ContextMismatch for elements of different algebras.
    friend bool operator==(AlgebraElement const& lhs, AlgebraElement const& rhs);

   private:
    void check_context(AlgebraElement const& rhs) const;
    // Adds c * m, rewriting m into normal form.
    void add_reduced(Monomial m, Scalar c);
    void add_normal(Monomial const& m, Scalar const& c);

    std::shared_ptr<CLContext const> _ctx;
    term_map                         _terms;
  };

  [[nodiscard]] AlgebraElement multiply(AlgebraElement const& a, AlgebraElement const& b);
  [[nodiscard]] AlgebraElement involution(AlgebraElement const& x);
  [[nodiscard]] bool is_idempotent(AlgebraElement const& x);
  [[nodiscard]] bool are_orthogonal(AlgebraElement const& x, AlgebraElement const& y);

  // Hooks used by check_generator_map and evaluate.
  [[nodiscard]] inline AlgebraElement star(AlgebraElement const& x) {
    return x.involution();
  }
  [[nodiscard]] inline bool is_zero(AlgebraElement const& x) {
    return x.is_zero();
  }
  [[nodiscard]] inline bool is_homogeneous(AlgebraElement const& x, std::int64_t d) {
    return x.is_homogeneous(d);
  }

  /// Factory for elements of CL_K(E, S) over a fixed field.
  class CLAlgebra {
   public:
    explicit CLAlgebra(CLObject object, Field field = Field::rationals());

    [[nodiscard]] std::shared_ptr<CLContext const> const& context() const noexcept {
      return _ctx;
    }
    [[nodiscard]] CLObject const& object() const noexcept {
      return _ctx->object();
    }
    [[nodiscard]] Graph const& graph() const noexcept {
      return _ctx->graph();
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _ctx->field();
    }

    [[nodiscard]] AlgebraElement zero() const;
    [[nodiscard]] AlgebraElement vertex(Vertex v) const;
    [[nodiscard]] AlgebraElement vertex(std::string_view id) const;
    [[nodiscard]] AlgebraElement edge(EdgeIndex e) const;
    [[nodiscard]] AlgebraElement edge(std::string_view id) const;
    [[nodiscard]] AlgebraElement ghost(EdgeIndex e) const;
    [[nodiscard]] AlgebraElement ghost(std::string_view id) const;
    [[nodiscard]] AlgebraElement path(Path const& p) const;
    // c p q^*; throws InvalidGraph when r(p) != r(q).
    [[nodiscard]] AlgebraElement monomial(Path const& p, Path const& q) const;
    [[nodiscard]] AlgebraElement monomial(Path const& p, Path const& q, Scalar const& c) const;
    [[nodiscard]] AlgebraElement scalar_multiple(Scalar const& c, AlgebraElement x) const;
    // The sum of all vertices: a unit for every element of a finite graph.
    [[nodiscard]] AlgebraElement local_unit() const;

    // All normal-form monomials with |p| <= max_p and |q| <= max_q, sorted.
    [[nodiscard]] std::vector<Monomial> normal_monomials(std::size_t max_p,
                                                         std::size_t max_q) const;

   private:
    std::shared_ptr<CLContext const> _ctx;
  };

  ////////////////////////////////////////////////////////////////////////
  // Generator maps
  ////////////////////////////////////////////////////////////////////////

  /// A *-algebra element type usable as the target of a generator map.
  template <typename X>
  concept StarTarget = requires(X const& a, X const& b, std::int64_t d) {
    { a * b } -> std::convertible_to<X>;
    { a + b } -> std::convertible_to<X>;
    { a - b } -> std::convertible_to<X>;
    { a == b } -> std::convertible_to<bool>;
    { star(a) } -> std::convertible_to<X>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { is_homogeneous(a, d) } -> std::convertible_to<bool>;
  };

  /// Images of the vertices and edges of a graph; ghosts map to the
  /// involution of the edge images.
  template <typename X>
  struct GeneratorMap {
    std::vector<std::optional<X>> vertex_images;  // by vertex index
    std::vector<std::optional<X>> edge_images;    // by edge index
  };

  struct AxiomReport {
    std::size_t              instances_checked = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  namespace detail {
    template <typename X>
    X const& image(std::vector<std::optional<X>> const& images,
                   std::size_t                          i,
                   std::string const&                   what) {
      if (i >= images.size() || !images[i]) {
        throw IncompleteMap("no image for " + what);
      }
      return *images[i];
    }
  }  // namespace detail

  /// Evaluates the relations (V), (E1), (E2), (CK1), and (SCK2) for the
  /// vertices of S at the images, together with the degree of every image
  /// (vertices 0, edges 1). Each failed instance is listed in the report.
  /// Throws IncompleteMap when a generator has no image.
  template <StarTarget X>
  AxiomReport check_generator_map(CLObject const& source, GeneratorMap<X> const& map) {
    auto const& g = source.graph();
    auto        V = [&](Vertex v) -> X const& {
      return detail::image(map.vertex_images, v, "vertex '" + g.vertex_id(v) + "'");
    };
    auto E = [&](EdgeIndex e) -> X const& {
      return detail::image(map.edge_images, e, "edge '" + g.edge_id(e) + "'");
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      (void) V(v);
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      (void) E(e);
    }

    AxiomReport report;
    auto        check = [&report](bool holds, std::string what) {
      ++report.instances_checked;
      if (!holds) {
        report.failures.push_back(std::move(what));
      }
    };
    std::vector<X> ghosts;
    ghosts.reserve(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      ghosts.push_back(star(E(e)));
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto const& vid = g.vertex_id(v);
      check(is_homogeneous(V(v), 0), "degree: " + vid + " is not of degree 0");
      for (Vertex w = 0; w < g.vertex_count(); ++w) {
        auto const vw = V(v) * V(w);
        if (v == w) {
          check(vw == V(v), "(V): " + vid + vid + " != " + vid);
        } else {
          check(is_zero(vw), "(V): " + vid + g.vertex_id(w) + " != 0");
        }
      }
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      auto const& eid = g.edge_id(e);
      auto const& s   = V(g.source(e));
      auto const& r   = V(g.range(e));
      check(is_homogeneous(E(e), 1), "degree: " + eid + " is not of degree 1");
      check(s * E(e) == E(e), "(E1): s(" + eid + ")" + eid + " != " + eid);
      check(E(e) * r == E(e), "(E1): " + eid + "r(" + eid + ") != " + eid);
      check(r * ghosts[e] == ghosts[e], "(E2): r(" + eid + ")" + eid + "* != " + eid + "*");
      check(ghosts[e] * s == ghosts[e], "(E2): " + eid + "*s(" + eid + ") != " + eid + "*");
      for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
        auto const ef = ghosts[e] * E(f);
        if (e == f) {
          check(ef == r, "(CK1): " + eid + "*" + eid + " != r(" + eid + ")");
        } else {
          check(is_zero(ef), "(CK1): " + eid + "*" + g.edge_id(f) + " != 0");
        }
      }
    }
    for (auto v : source.s_vertices()) {
      auto const out = g.out_edges(v);
      X          sum = E(out[0]) * ghosts[out[0]];
      for (std::size_t i = 1; i < out.size(); ++i) {
        sum = sum + E(out[i]) * ghosts[out[i]];
      }
      check(sum == V(v), "(SCK2): " + g.vertex_id(v) + " != sum of ee* over s^-1("
                             + g.vertex_id(v) + ")");
    }
    return report;
  }

  /// The image of a path under a generator map.
  template <StarTarget X>
  X evaluate_path(Graph const& g, Path const& p, GeneratorMap<X> const& map) {
    if (p.is_trivial()) {
      return detail::image(map.vertex_images, p.source, "vertex '" + g.vertex_id(p.source) + "'");
    }
    X result = detail::image(map.edge_images, p.edges[0], "edge '" + g.edge_id(p.edges[0]) + "'");
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      result = result
               * detail::image(map.edge_images, p.edges[i], "edge '" + g.edge_id(p.edges[i]) + "'");
    }
    return result;
  }

  /// The image of x under the homomorphism determined by a generator map.
  /// `zero` is the zero of the target; X must support X * Scalar.
  template <StarTarget X>
  X evaluate(AlgebraElement const& x, GeneratorMap<X> const& map, X zero) {
    auto const& g = x.context()->graph();
    for (auto const& [m, c] : x.terms()) {
      zero = zero + (evaluate_path(g, m.p, map) * star(evaluate_path(g, m.q, map))) * c;
    }
    return zero;
  }

}  // namespace clpa

#endif  // CLPA_CL_ALGEBRA_HPP_
