#include "clpa/graph_monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "clpa/error.hpp"
#include "clpa/linear.hpp"

namespace clpa {

  MonoidElement Presentation::generator(std::string_view id) const {
    auto x = zero();
    x.at(relative.graph.vertex(id)) = 1;
    return x;
  }

  std::string Presentation::to_string(MonoidElement const& x) const {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      if (x[i] != 1) {
        out += std::to_string(x[i]) + "*";
      }
      out += generators.at(i);
    }
    return out.empty() ? "0" : out;
  }

  Presentation presentation(CLObject const& obj) {
    Presentation p;
    p.relative     = relative_graph(obj);
    auto const& g  = p.relative.graph;
    p.generators   = g.vertex_ids();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.is_sink(v)) {
        continue;
      }
      Relation r{v, p.zero()};
      for (auto e : g.out_edges(v)) {
        ++r.rhs[g.range(e)];
      }
      p.relations.push_back(std::move(r));
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // The invariant of a no-exit relative graph
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::uint64_t> MonoidInvariant::evaluate(MonoidElement const& x) const {
    std::vector<std::uint64_t> result(coordinates.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t k = 0; k < result.size(); ++k) {
        result[k] += x[i] * images.at(i)[k];
      }
    }
    return result;
  }

  namespace {
    // Targets of the invariant: sinks, then cycle bases.
    std::vector<Vertex> invariant_targets(Graph const& g, GraphPredicates const& pred) {
      std::vector<Vertex> targets = pred.sinks;
      for (auto const& c : pred.cycles) {
        targets.push_back(c.base(g));
      }
      return targets;
    }
  }  // namespace

  namespace {
    // Applies x -> sum of r(e) to every generator outside `targets` until
    // none is left; counts the moves. Terminates on a no-exit E_S.
    std::pair<MonoidElement, std::size_t> forward_reduce(Presentation const&        p,
                                                         MonoidElement              x,
                                                         std::vector<Vertex> const& targets) {
      std::vector<Relation const*> rule(p.generators.size(), nullptr);
      for (auto const& r : p.relations) {
        rule[r.lhs] = &r;
      }
      for (auto t : targets) {
        rule[t] = nullptr;
      }
      std::size_t steps    = 0;
      bool        progress = true;
      while (progress) {
        progress = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (x[i] == 0 || rule[i] == nullptr) {
            continue;
          }
          auto const n = x[i];
          x[i]         = 0;
          for (std::size_t k = 0; k < x.size(); ++k) {
            x[k] += n * rule[i]->rhs[k];
          }
          steps += n;
          progress = true;
        }
      }
      return {std::move(x), steps};
    }
  }  // namespace

  std::optional<MonoidInvariant> monoid_invariant(Presentation const& p) {
    auto const& g    = p.relative.graph;
    auto const  pred = predicates(g);
    if (!pred.is_no_exit) {
      return std::nullopt;
    }
    MonoidInvariant inv;
    for (auto v : pred.sinks) {
      inv.coordinates.push_back(g.vertex_id(v));
    }
    for (auto const& c : pred.cycles) {
      inv.coordinates.push_back(c.to_string(g));
    }
    inv.images.assign(g.vertex_count(), std::vector<std::uint64_t>(inv.coordinates.size(), 0));
    auto const targets = invariant_targets(g, pred);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      for (auto const& path : paths_into(g, targets[k], {targets[k]})) {
        ++inv.images[path.source][k];
      }
    }
    return inv;
  }

  std::vector<bool> relations_preserved(Presentation const& p, MonoidInvariant const& inv) {
    std::vector<bool> result;
    for (auto const& r : p.relations) {
      auto lhs = p.zero();
      lhs[r.lhs] = 1;
      result.push_back(inv.evaluate(lhs) == inv.evaluate(r.rhs));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equality in V
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t search_cap = 200'000;

    // Is a - b in the span of the vectors rhs - lhs over the field?
    bool difference_in_span(Presentation const&  p,
                            MonoidElement const& a,
                            MonoidElement const& b,
                            Field const&         field) {
      SparseEchelon<std::size_t> echelon;
      for (auto const& r : p.relations) {
        std::map<std::size_t, Scalar> row;
        for (std::size_t i = 0; i < r.rhs.size(); ++i) {
          auto n = static_cast<std::int64_t>(r.rhs[i]) - (i == r.lhs ? 1 : 0);
          if (auto c = field.from_int(n); !c.is_zero()) {
            row.emplace(i, c);
          }
        }
        echelon.add(std::move(row));
      }
      std::map<std::size_t, Scalar> diff;
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto n = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
        if (auto c = field.from_int(n); !c.is_zero()) {
          diff.emplace(i, c);
        }
      }
      return echelon.in_span(std::move(diff));
    }

    bool is_empty_sum(MonoidElement const& x) {
      return std::all_of(x.begin(), x.end(), [](auto n) { return n == 0; });
    }

    // Every element one relation move away from x, in either direction.
    std::vector<MonoidElement> neighbours(Presentation const& p, MonoidElement const& x) {
      std::vector<MonoidElement> out;
      for (auto const& r : p.relations) {
        bool trivial = r.rhs[r.lhs] == 1
                       && std::accumulate(r.rhs.begin(), r.rhs.end(), std::uint64_t{0}) == 1;
        if (trivial) {
          continue;
        }
        if (x[r.lhs] > 0) {
          auto y = x;
          --y[r.lhs];
          for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] += r.rhs[i];
          }
          out.push_back(std::move(y));
        }
        bool contains = true;
        for (std::size_t i = 0; i < x.size() && contains; ++i) {
          contains = x[i] >= r.rhs[i];
        }
        if (contains) {
          auto y = x;
          for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] -= r.rhs[i];
          }
          ++y[r.lhs];
          out.push_back(std::move(y));
        }
      }
      return out;
    }

    // Expands one breadth-first layer; returns an element also reached
    // from the other side, if any.
    std::optional<MonoidElement> expand(Presentation const&             p,
                                        std::set<MonoidElement>&        seen,
                                        std::vector<MonoidElement>&     frontier,
                                        std::set<MonoidElement> const&  other) {
      std::vector<MonoidElement> next;
      for (auto const& x : frontier) {
        for (auto& y : neighbours(p, x)) {
          if (other.contains(y)) {
            return y;
          }
          if (seen.size() < search_cap && seen.insert(y).second) {
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
      return std::nullopt;
    }
  }  // namespace

  MonoidEquality equal(Presentation const&  p,
                       MonoidElement const& a,
                       MonoidElement const& b,
                       std::size_t          depth) {
    auto const n = p.generators.size();
    if (a.size() != n || b.size() != n) {
      throw std::invalid_argument("monoid elements must have one entry per generator");
    }
    if (auto inv = monoid_invariant(p)) {
      auto const ia = inv->evaluate(a);
      if (ia != inv->evaluate(b)) {
        return {Verdict::no, "invariant", std::nullopt};
      }
      // Both sides reduce to the same combination of sinks and cycle bases.
      auto const pred    = predicates(p.relative.graph);
      auto const targets = invariant_targets(p.relative.graph, pred);
      auto [ra, steps_a] = forward_reduce(p, a, targets);
      auto [rb, steps_b] = forward_reduce(p, b, targets);
      if (ra != rb) {
        throw ClassificationBug("equal invariants but different reducts");
      }
      return {Verdict::yes, "invariant", ra, std::max(steps_a, steps_b)};
    }
    if (a == b) {
      return {Verdict::yes, "identical", a, 0};
    }
    if (is_empty_sum(a) != is_empty_sum(b)) {
      return {Verdict::no, "conical", std::nullopt};
    }
    if (!difference_in_span(p, a, b, Field::rationals())) {
      return {Verdict::no, "rational span", std::nullopt};
    }
    for (std::uint64_t q : {2, 3}) {
      if (!difference_in_span(p, a, b, Field::prime(q))) {
        return {Verdict::no, "span mod " + std::to_string(q), std::nullopt};
      }
    }
    std::set<MonoidElement>    seen_a{a}, seen_b{b};
    std::vector<MonoidElement> front_a{a}, front_b{b};
    for (std::size_t step = 0; step < depth; ++step) {
      if (auto m = expand(p, seen_a, front_a, seen_b)) {
        return {Verdict::yes, "search", *m, step + 1};
      }
      if (auto m = expand(p, seen_b, front_b, seen_a)) {
        return {Verdict::yes, "search", *m, step + 1};
      }
      if (front_a.empty() && front_b.empty()) {
        // Both classes were explored completely without meeting.
        if (seen_a.size() < search_cap && seen_b.size() < search_cap) {
          return {Verdict::no, "exhaustive search", std::nullopt};
        }
        break;
      }
    }
    return {Verdict::unknown, "search", std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Cancellation witness
  ////////////////////////////////////////////////////////////////////////

  bool all_passed(std::vector<WitnessCheck> const& checks) {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
  }

  std::optional<Vertex> exit_vertex(CLObject const& obj, Cycle const& c) {
    auto const& g = obj.graph();
    for (auto v : c.vertices(g)) {
      if (g.is_bifurcation(v) || !obj.in_s(v)) {
        return v;
      }
    }
    return std::nullopt;
  }

  CancellationWitness cancellation_witness(CLObject const& obj,
                                           Cycle const&    cycle,
                                           std::size_t     N,
                                           Field const&    field) {
    auto const& g = obj.graph();
    auto const  v = exit_vertex(obj, cycle);
    if (!v) {
      throw NotAnExit("cycle " + cycle.to_string(g) + " has no exit relative to S");
    }
    if (N < 2) {
      throw std::invalid_argument("a cancellation witness needs N >= 2");
    }
    CLAlgebra const     A(obj, field);
    CancellationWitness w;
    w.cycle = cycle;
    w.base  = *v;

    auto const vid = g.vertex_id(*v);
    auto const c   = A.path(cycle.as_path_from(g, *v));
    auto const one = A.vertex(*v);
    auto       cn  = one;
    for (std::size_t n = 1; n <= N; ++n) {
      cn = cn * c;
      auto const pn = cn * cn.involution();
      auto const tag = std::to_string(n);
      w.checks.push_back({"p_" + tag + " is idempotent", is_idempotent(pn)});
      w.checks.push_back({"p_" + tag + " has degree 0", pn.is_homogeneous(0)});
      w.checks.push_back({"(c^" + tag + ")^* c^" + tag + " = " + vid, cn.involution() * cn == one});
      w.p.push_back(pn);
    }
    for (std::size_t n = 0; n + 1 < N; ++n) {
      auto const& a   = w.p[n];
      auto const& b   = w.p[n + 1];
      auto const  tag = std::to_string(n + 1);
      auto const  nxt = std::to_string(n + 2);
      w.checks.push_back({"p_" + tag + " p_" + nxt + " = p_" + nxt + " = p_" + nxt + " p_" + tag,
                          a * b == b && b * a == b});
      w.checks.push_back({"p_" + tag + " != p_" + nxt, !(a == b)});
      auto const d = a - b;
      w.checks.push_back({"p_" + tag + " - p_" + nxt + " is an idempotent orthogonal to p_" + nxt,
                          is_idempotent(d) && are_orthogonal(d, b)});
    }
    w.identity = "[" + vid + "] = [p_1] = [p_2] + [p_1 - p_2] = [" + vid
                 + "] + [p_1 - p_2] with p_1 - p_2 != 0";
    return w;
  }

  MonoidVerdict atomic_cancellative_verdict(CLObject const& obj, Field const& field, std::size_t N) {
    MonoidVerdict verdict;
    auto const    p = presentation(obj);
    verdict.invariant = monoid_invariant(p);
    if (verdict.invariant) {
      verdict.atomic_cancellative = true;
      verdict.relations_preserved = relations_preserved(p, *verdict.invariant);
      return verdict;
    }
    for (auto const& c : cycles(obj.graph())) {
      if (exit_vertex(obj, c)) {
        verdict.witness = cancellation_witness(obj, c, N, field);
        break;
      }
    }
    if (!verdict.witness) {
      throw ClassificationBug("relative graph has an exit but no cycle of E has one");
    }
    return verdict;
  }

}  // namespace clpa
