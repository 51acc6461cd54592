#include "clpa/cl_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace clpa {

  namespace {
    Path drop_last(Path const& p, Graph const& g) {
      Path r = p;
      r.edges.pop_back();
      r.range = r.edges.empty() ? r.source : g.range(r.edges.back());
      return r;
    }

    Path append_edge(Path p, EdgeIndex e, Graph const& g) {
      p.edges.push_back(e);
      p.range = g.range(e);
      return p;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CLContext
  ////////////////////////////////////////////////////////////////////////

  CLContext::CLContext(CLObject object, Field field)
      : _object(std::move(object)), _field(field), _special(_object.graph().vertex_count()) {
    for (auto v : _object.s_vertices()) {
      _special[v] = _object.graph().out_edges(v).front();
    }
  }

  bool CLContext::is_normal(Monomial const& m) const {
    if (m.p.is_trivial() || m.q.is_trivial()) {
      return true;
    }
    auto const e = m.p.edges.back();
    if (e != m.q.edges.back()) {
      return true;
    }
    return _special[graph().source(e)] != e;
  }

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  void AlgebraElement::check_context(AlgebraElement const& rhs) const {
    if (_ctx == rhs._ctx) {
      return;
    }
    if (_ctx == nullptr || rhs._ctx == nullptr || !(*_ctx == *rhs._ctx)) {
      throw ContextMismatch("elements belong to different algebras");
    }
  }

  void AlgebraElement::add_normal(Monomial const& m, Scalar const& c) {
    if (c.is_zero()) {
      return;
    }
    auto it = _terms.find(m);
    if (it == _terms.end()) {
      _terms.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) {
      _terms.erase(it);
    }
  }

  void AlgebraElement::add_reduced(Monomial m, Scalar c) {
    auto const& g = _ctx->graph();
    std::vector<std::pair<Monomial, Scalar>> work;
    work.emplace_back(std::move(m), std::move(c));
    while (!work.empty()) {
      auto [mono, coef] = std::move(work.back());
      work.pop_back();
      if (_ctx->is_normal(mono)) {
        add_normal(mono, coef);
        continue;
      }
      auto const gamma = mono.p.edges.back();
      Path       p     = drop_last(mono.p, g);
      Path       q     = drop_last(mono.q, g);
      for (auto e : g.out_edges(g.source(gamma))) {
        if (e != gamma) {
          work.emplace_back(Monomial{append_edge(p, e, g), append_edge(q, e, g)}, -coef);
        }
      }
      work.emplace_back(Monomial{std::move(p), std::move(q)}, std::move(coef));
    }
  }

  AlgebraElement
  AlgebraElement::normal_form(std::shared_ptr<CLContext const>                ctx,
                              std::vector<std::pair<Monomial, Scalar>> const& raw) {
    AlgebraElement x(std::move(ctx));
    for (auto const& [m, c] : raw) {
      if (m.p.range != m.q.range) {
        throw InvalidGraph("monomial p q* needs r(p) = r(q)");
      }
      x.add_reduced(m, c);
    }
    return x;
  }

  Scalar AlgebraElement::coefficient(Monomial const& m) const {
    auto it = _terms.find(m);
    return it == _terms.end() ? _ctx->field().zero() : it->second;
  }

  AlgebraElement AlgebraElement::involution() const {
    AlgebraElement x(_ctx);
    for (auto const& [m, c] : _terms) {
      // The normal-form condition is symmetric in p and q.
      x._terms.emplace(Monomial{m.q, m.p}, c.involution());
    }
    return x;
  }

  std::map<std::int64_t, AlgebraElement> AlgebraElement::homogeneous_components() const {
    std::map<std::int64_t, AlgebraElement> parts;
    for (auto const& [m, c] : _terms) {
      auto it = parts.try_emplace(m.degree(), _ctx).first;
      it->second._terms.emplace(m, c);
    }
    return parts;
  }

  bool AlgebraElement::is_homogeneous(std::int64_t d) const {
    for (auto const& [m, c] : _terms) {
      if (m.degree() != d) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::int64_t> AlgebraElement::degree() const {
    if (_terms.empty()) {
      return std::nullopt;
    }
    auto const d = _terms.begin()->first.degree();
    return is_homogeneous(d) ? std::optional(d) : std::nullopt;
  }

  std::string AlgebraElement::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    auto const&        g = _ctx->graph();
    std::ostringstream os;
    bool               first = true;
    for (auto const& [m, c] : _terms) {
      auto text     = c.to_string(true);
      bool negative = text.front() == '-';
      if (negative) {
        text.erase(0, 1);
      }
      if (first) {
        os << (negative ? "-" : "");
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (text != "1") {
        os << text << '*';
      }
      if (m.q.is_trivial()) {
        os << m.p.to_string(g);
      } else {
        os << m.p.to_string(g) << '|' << m.q.to_string(g);
      }
    }
    return os.str();
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& rhs) {
    check_context(rhs);
    for (auto const& [m, c] : rhs._terms) {
      add_normal(m, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& rhs) {
    check_context(rhs);
    for (auto const& [m, c] : rhs._terms) {
      add_normal(m, -c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator*=(Scalar const& c) {
    if (c.is_zero()) {
      _terms.clear();
      return *this;
    }
    for (auto& [m, a] : _terms) {
      a *= c;
    }
    return *this;
  }

  AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement x = *this;
    for (auto& [m, a] : x._terms) {
      a = -a;
    }
    return x;
  }

  AlgebraElement operator*(AlgebraElement const& lhs, AlgebraElement const& rhs) {
    lhs.check_context(rhs);
    AlgebraElement result(lhs._ctx);
    if (lhs.is_zero() || rhs.is_zero()) {
      return result;
    }
    auto const& g = lhs._ctx->graph();
    for (auto const& [m1, c1] : lhs._terms) {
      for (auto const& [m2, c2] : rhs._terms) {
        // (p q^*)(r s^*): nonzero only when one of q, r extends the other.
        auto const& q = m1.q;
        auto const& r = m2.p;
        if (r.starts_with(q)) {
          result.add_reduced(Monomial{m1.p.concat(r.suffix_after(q.length(), g)), m2.q}, c1 * c2);
        } else if (q.starts_with(r)) {
          result.add_reduced(Monomial{m1.p, m2.q.concat(q.suffix_after(r.length(), g))},
                             c1 * c2);
        }
      }
    }
    return result;
  }

  bool operator==(AlgebraElement const& lhs, AlgebraElement const& rhs) {
    lhs.check_context(rhs);
    return lhs._terms == rhs._terms;
  }

  AlgebraElement multiply(AlgebraElement const& a, AlgebraElement const& b) {
    return a * b;
  }

  AlgebraElement involution(AlgebraElement const& x) {
    return x.involution();
  }

  bool is_idempotent(AlgebraElement const& x) {
    return x * x == x;
  }

  bool are_orthogonal(AlgebraElement const& x, AlgebraElement const& y) {
    return (x * y).is_zero() && (y * x).is_zero();
  }

  ////////////////////////////////////////////////////////////////////////
  // CLAlgebra
  ////////////////////////////////////////////////////////////////////////

  CLAlgebra::CLAlgebra(CLObject object, Field field)
      : _ctx(std::make_shared<CLContext const>(std::move(object), field)) {}

  AlgebraElement CLAlgebra::zero() const {
    return AlgebraElement(_ctx);
  }

  AlgebraElement CLAlgebra::monomial(Path const& p, Path const& q, Scalar const& c) const {
    return AlgebraElement::normal_form(_ctx, {{Monomial{p, q}, c}});
  }

  AlgebraElement CLAlgebra::monomial(Path const& p, Path const& q) const {
    return monomial(p, q, field().one());
  }

  AlgebraElement CLAlgebra::vertex(Vertex v) const {
    if (v >= graph().vertex_count()) {
      throw InvalidGraph("unknown vertex index " + std::to_string(v));
    }
    return monomial(Path::trivial(v), Path::trivial(v));
  }

  AlgebraElement CLAlgebra::vertex(std::string_view id) const {
    return vertex(graph().vertex(id));
  }

  AlgebraElement CLAlgebra::edge(EdgeIndex e) const {
    auto const& g = graph();
    return monomial(Path::edge(g, e), Path::trivial(g.range(e)));
  }

  AlgebraElement CLAlgebra::edge(std::string_view id) const {
    return edge(graph().edge(id));
  }

  AlgebraElement CLAlgebra::ghost(EdgeIndex e) const {
    auto const& g = graph();
    return monomial(Path::trivial(g.range(e)), Path::edge(g, e));
  }

  AlgebraElement CLAlgebra::ghost(std::string_view id) const {
    return ghost(graph().edge(id));
  }

  AlgebraElement CLAlgebra::path(Path const& p) const {
    return monomial(p, Path::trivial(p.range));
  }

  AlgebraElement CLAlgebra::scalar_multiple(Scalar const& c, AlgebraElement x) const {
    return x *= c;
  }

  AlgebraElement CLAlgebra::local_unit() const {
    auto u = zero();
    for (Vertex v = 0; v < graph().vertex_count(); ++v) {
      u += vertex(v);
    }
    return u;
  }

  std::vector<Monomial> CLAlgebra::normal_monomials(std::size_t max_p, std::size_t max_q) const {
    auto const&           g     = graph();
    auto const            paths = paths_up_to(g, std::max(max_p, max_q));
    std::vector<Monomial> out;
    for (auto const& p : paths) {
      if (p.length() > max_p) {
        continue;
      }
      for (auto const& q : paths) {
        if (q.length() > max_q || q.range != p.range) {
          continue;
        }
        Monomial m{p, q};
        if (_ctx->is_normal(m)) {
          out.push_back(std::move(m));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace clpa
