#include "clpa/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clpa/error.hpp"

namespace clpa {

  bool is_valid_id(std::string_view id) noexcept {
    if (id.empty()) {
      return false;
    }
    for (char c : id) {
      if (c == '|' || c == '.' || c == '~' || c == ' ' || c == '\t' || c == '\n'
          || c == '\r' || c == '\v' || c == '\f') {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Ids generated for E_S carry the reserved suffix; accept them
    // only as trailing characters.
    bool is_valid_internal_id(std::string_view id) noexcept {
      while (!id.empty() && id.back() == prime_suffix) {
        id.remove_suffix(1);
      }
      return is_valid_id(id);
    }
  }  // namespace

  Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!is_valid_internal_id(vertices[i])) {
        throw InvalidGraph("invalid vertex id '" + vertices[i] + "'");
      }
      if (i > 0 && vertices[i] == vertices[i - 1]) {
        throw InvalidGraph("duplicate vertex id '" + vertices[i] + "'");
      }
    }
    _vertex_ids = std::move(vertices);
    for (std::size_t i = 0; i < _vertex_ids.size(); ++i) {
      _vertex_index.emplace(_vertex_ids[i], static_cast<Vertex>(i));
    }

    std::sort(edges.begin(), edges.end(), [](EdgeSpec const& a, EdgeSpec const& b) {
      return a.id < b.id;
    });
    _out.resize(_vertex_ids.size());
    _in.resize(_vertex_ids.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const& spec = edges[i];
      if (!is_valid_internal_id(spec.id)) {
        throw InvalidGraph("invalid edge id '" + spec.id + "'");
      }
      if (i > 0 && spec.id == edges[i - 1].id) {
        throw InvalidGraph("duplicate edge id '" + spec.id + "'");
      }
      if (_vertex_index.contains(spec.id)) {
        throw InvalidGraph("id '" + spec.id + "' names both a vertex and an edge");
      }
      auto src = _vertex_index.find(spec.src);
      if (src == _vertex_index.end()) {
        throw InvalidGraph("edge '" + spec.id + "' has unknown source '" + spec.src + "'");
      }
      auto rng = _vertex_index.find(spec.rng);
      if (rng == _vertex_index.end()) {
        throw InvalidGraph("edge '" + spec.id + "' has unknown range '" + spec.rng + "'");
      }
      auto const e = static_cast<EdgeIndex>(i);
      _edges.push_back(EdgeData{spec.id, src->second, rng->second});
      _edge_index.emplace(spec.id, e);
      _out[src->second].push_back(e);
      _in[rng->second].push_back(e);
    }
  }

  std::optional<Vertex> Graph::find_vertex(std::string_view id) const {
    auto it = _vertex_index.find(std::string(id));
    if (it == _vertex_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
    auto it = _edge_index.find(std::string(id));
    if (it == _edge_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Vertex Graph::vertex(std::string_view id) const {
    if (auto v = find_vertex(id)) {
      return *v;
    }
    throw InvalidGraph("unknown vertex '" + std::string(id) + "'");
  }

  EdgeIndex Graph::edge(std::string_view id) const {
    if (auto e = find_edge(id)) {
      return *e;
    }
    throw InvalidGraph("unknown edge '" + std::string(id) + "'");
  }

  std::vector<Graph::EdgeSpec> Graph::edge_specs() const {
    std::vector<EdgeSpec> specs;
    specs.reserve(_edges.size());
    for (auto const& e : _edges) {
      specs.push_back({e.id, _vertex_ids[e.src], _vertex_ids[e.rng]});
    }
    return specs;
  }

  Graph Graph::subgraph(std::vector<bool> const& vertex_mask,
                        std::vector<bool> const& edge_mask) const {
    std::vector<std::string> vs;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      if (vertex_mask.at(v)) {
        vs.push_back(_vertex_ids[v]);
      }
    }
    std::vector<EdgeSpec> es;
    for (EdgeIndex e = 0; e < edge_count(); ++e) {
      if (edge_mask.at(e)) {
        auto const& d = _edges[e];
        if (!vertex_mask.at(d.src) || !vertex_mask.at(d.rng)) {
          throw InvalidGraph("subgraph keeps edge '" + d.id + "' without its endpoints");
        }
        es.push_back({d.id, _vertex_ids[d.src], _vertex_ids[d.rng]});
      }
    }
    return Graph(std::move(vs), std::move(es));
  }

  ////////////////////////////////////////////////////////////////////////
  // CLObject
  ////////////////////////////////////////////////////////////////////////

  CLObject::CLObject(Graph graph, std::vector<Vertex> s_set)
      : _graph(std::move(graph)), _in_s(_graph.vertex_count(), false) {
    for (auto v : s_set) {
      if (v >= _graph.vertex_count()) {
        throw InvalidGraph("S contains an unknown vertex");
      }
      if (!_graph.is_regular(v)) {
        throw InvalidGraph("S contains '" + _graph.vertex_id(v)
                           + "', which is not a regular vertex");
      }
      _in_s[v] = true;
    }
    for (Vertex v = 0; v < _graph.vertex_count(); ++v) {
      if (_in_s[v]) {
        _s.push_back(v);
      }
    }
  }

  namespace {
    std::vector<Vertex> resolve_s(Graph const& graph, std::vector<std::string> const& ids) {
      std::vector<Vertex> s;
      for (auto const& id : ids) {
        auto v = graph.find_vertex(id);
        if (!v) {
          throw InvalidGraph("S contains unknown vertex '" + id + "'");
        }
        s.push_back(*v);
      }
      return s;
    }
  }  // namespace

  CLObject::CLObject(Graph graph, std::vector<std::string> const& s_ids)
      : CLObject(graph, resolve_s(graph, s_ids)) {}

  CLObject CLObject::leavitt(Graph graph) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      if (graph.is_regular(v)) {
        s.push_back(v);
      }
    }
    return CLObject(std::move(graph), std::move(s));
  }

  CLObject CLObject::cohn(Graph graph) {
    return CLObject(std::move(graph), std::vector<Vertex>{});
  }

  std::vector<Vertex> CLObject::regular_not_in_s() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < _graph.vertex_count(); ++v) {
      if (_graph.is_regular(v) && !_in_s[v]) {
        out.push_back(v);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Path, Cycle
  ////////////////////////////////////////////////////////////////////////

  Path Path::from_edges(Graph const& g, std::vector<EdgeIndex> edges) {
    if (edges.empty()) {
      throw InvalidGraph("a trivial path needs a vertex");
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      if (g.range(edges[i]) != g.source(edges[i + 1])) {
        throw InvalidGraph("edges '" + g.edge_id(edges[i]) + "' and '"
                           + g.edge_id(edges[i + 1]) + "' do not compose");
      }
    }
    Vertex const s = g.source(edges.front());
    Vertex const r = g.range(edges.back());
    return Path{s, r, std::move(edges)};
  }

  std::vector<Vertex> Path::vertices(Graph const& g) const {
    std::vector<Vertex> vs;
    vs.reserve(edges.size() + 1);
    for (auto e : edges) {
      vs.push_back(g.source(e));
    }
    vs.push_back(range);
    return vs;
  }

  Path Path::concat(Path const& tail) const {
    Path p  = *this;
    p.range = tail.range;
    p.edges.insert(p.edges.end(), tail.edges.begin(), tail.edges.end());
    return p;
  }

  bool Path::starts_with(Path const& prefix) const {
    return source == prefix.source && prefix.edges.size() <= edges.size()
           && std::equal(prefix.edges.begin(), prefix.edges.end(), edges.begin());
  }

  Path Path::suffix_after(std::size_t n, Graph const& g) const {
    if (n == edges.size()) {
      return trivial(range);
    }
    Path p;
    p.source = g.source(edges[n]);
    p.range  = range;
    p.edges.assign(edges.begin() + static_cast<std::ptrdiff_t>(n), edges.end());
    return p;
  }

  std::string Path::to_string(Graph const& g) const {
    if (edges.empty()) {
      return g.vertex_id(source);
    }
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i > 0) {
        s += '.';
      }
      s += g.edge_id(edges[i]);
    }
    return s;
  }

  std::strong_ordering operator<=>(Path const& a, Path const& b) {
    if (auto c = a.edges.size() <=> b.edges.size(); c != 0) {
      return c;
    }
    if (auto c = a.edges <=> b.edges; c != 0) {
      return c;
    }
    return a.source <=> b.source;
  }

  std::vector<Vertex> Cycle::vertices(Graph const& g) const {
    std::vector<Vertex> vs;
    for (auto e : edges) {
      vs.push_back(g.source(e));
    }
    return vs;
  }

  Path Cycle::as_path_from(Graph const& g, Vertex v) const {
    auto const vs = vertices(g);
    auto       it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end()) {
      throw std::invalid_argument("vertex not on cycle");
    }
    auto const start = static_cast<std::size_t>(it - vs.begin());
    std::vector<EdgeIndex> rotated;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      rotated.push_back(edges[(start + i) % edges.size()]);
    }
    return Path::from_edges(g, std::move(rotated));
  }

  std::string Cycle::to_string(Graph const& g) const {
    return Path::from_edges(g, edges).to_string(g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  std::vector<Cycle> cycles(Graph const& g) {
    std::vector<Cycle>     result;
    std::vector<EdgeIndex> stack;
    std::vector<bool>      on_path(g.vertex_count(), false);

    // Cycles are found from their smallest vertex only, so each appears
    // once, already in canonical rotation.
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex v) {
      for (auto e : g.out_edges(v)) {
        Vertex const w = g.range(e);
        if (w == start) {
          stack.push_back(e);
          result.push_back(Cycle{stack});
          stack.pop_back();
        } else if (w > start && !on_path[w]) {
          on_path[w] = true;
          stack.push_back(e);
          dfs(start, w);
          stack.pop_back();
          on_path[w] = false;
        }
      }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      on_path[v] = true;
      dfs(v, v);
      on_path[v] = false;
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  GraphPredicates predicates(Graph const& g) {
    GraphPredicates p;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.is_sink(v)) {
        p.sinks.push_back(v);
      } else {
        p.regular_vertices.push_back(v);
      }
      if (g.is_bifurcation(v)) {
        p.bifurcations.push_back(v);
      }
    }
    p.cycles     = cycles(g);
    p.is_acyclic = p.cycles.empty();
    for (auto const& c : p.cycles) {
      for (auto v : c.vertices(g)) {
        if (g.is_bifurcation(v)) {
          p.is_no_exit = false;
        }
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Path enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<Path> paths_into(Graph const&               g,
                               Vertex                     target,
                               std::vector<Vertex> const& avoid_interior) {
    std::vector<bool> avoid(g.vertex_count(), false);
    for (auto v : avoid_interior) {
      avoid.at(v) = true;
    }
    std::vector<Path>      result;
    std::vector<EdgeIndex> reversed;  // edges from the target backwards
    std::vector<bool>      seen(g.vertex_count(), false);

    // Any admissible path revisiting a vertex can be pumped around that
    // closed subpath, so a repeat means the family is infinite.
    std::function<void(Vertex)> back = [&](Vertex v) {
      for (auto e : g.in_edges(v)) {
        Vertex const u = g.source(e);
        if (avoid[u]) {
          continue;
        }
        if (seen[u]) {
          throw NonFiniteEnumeration("infinitely many paths end at '"
                                     + g.vertex_id(target) + "' (vertex '"
                                     + g.vertex_id(u) + "' repeats)");
        }
        seen[u] = true;
        reversed.push_back(e);
        result.push_back(Path{u, target, {reversed.rbegin(), reversed.rend()}});
        back(u);
        reversed.pop_back();
        seen[u] = false;
      }
    };
    result.push_back(Path::trivial(target));
    seen[target] = true;
    back(target);
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Path> paths_up_to(Graph const& g, std::size_t max_length) {
    std::vector<Path> result;
    std::vector<Path> layer;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      layer.push_back(Path::trivial(v));
    }
    for (std::size_t len = 0; len <= max_length && !layer.empty(); ++len) {
      result.insert(result.end(), layer.begin(), layer.end());
      if (len == max_length) {
        break;
      }
      std::vector<Path> next;
      for (auto const& p : layer) {
        for (auto e : g.out_edges(p.range)) {
          next.push_back(p.concat(Path::edge(g, e)));
        }
      }
      layer = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Complete subobjects
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Embedding {
      std::vector<Vertex>    vertex;  // sub vertex -> ambient vertex
      std::vector<EdgeIndex> edge;    // sub edge -> ambient edge
    };

    Embedding embed(Graph const& sub, Graph const& ambient) {
      Embedding m;
      for (Vertex v = 0; v < sub.vertex_count(); ++v) {
        auto w = ambient.find_vertex(sub.vertex_id(v));
        if (!w) {
          throw NotASubgraph("vertex '" + sub.vertex_id(v) + "' is not in the ambient graph");
        }
        m.vertex.push_back(*w);
      }
      for (EdgeIndex e = 0; e < sub.edge_count(); ++e) {
        auto f = ambient.find_edge(sub.edge_id(e));
        if (!f || ambient.source(*f) != m.vertex[sub.source(e)]
            || ambient.range(*f) != m.vertex[sub.range(e)]) {
          throw NotASubgraph("edge '" + sub.edge_id(e) + "' is not an ambient edge");
        }
        m.edge.push_back(*f);
      }
      return m;
    }
  }  // namespace

  CompletenessCheck is_complete_subobject(CLObject const& sub, CLObject const& ambient) {
    auto const& F = sub.graph();
    auto const& E = ambient.graph();
    auto const  m = embed(F, E);

    CompletenessCheck result;
    auto              fail = [&result](std::string msg) {
      result.complete = false;
      result.violations.push_back(std::move(msg));
    };
    for (auto v : sub.s_vertices()) {
      if (!ambient.in_s(m.vertex[v])) {
        fail("vertex '" + F.vertex_id(v) + "' is in T but not in S");
      }
    }
    std::vector<bool> edge_in_f(E.edge_count(), false);
    for (auto e : m.edge) {
      edge_in_f[e] = true;
    }
    for (Vertex v = 0; v < F.vertex_count(); ++v) {
      Vertex const w = m.vertex[v];
      if (!ambient.in_s(w)) {
        continue;
      }
      auto const out = E.out_edges(w);
      auto const present
          = std::count_if(out.begin(), out.end(), [&](EdgeIndex e) { return edge_in_f[e]; });
      if (present == 0) {
        continue;
      }
      if (static_cast<std::size_t>(present) != out.size()) {
        fail("vertex '" + F.vertex_id(v) + "' is in S and keeps only "
             + std::to_string(present) + " of its " + std::to_string(out.size()) + " edges");
      }
      if (!sub.in_s(v)) {
        fail("vertex '" + F.vertex_id(v) + "' is in S, emits edges of F, but is not in T");
      }
    }
    return result;
  }

  namespace {
    CLObject object_from_masks(CLObject const&          ambient,
                               std::vector<bool> const& vmask,
                               std::vector<bool> const& emask) {
      auto const&         E = ambient.graph();
      Graph               F = E.subgraph(vmask, emask);
      std::vector<Vertex> t;
      for (Vertex v = 0; v < F.vertex_count(); ++v) {
        Vertex const w = E.vertex(F.vertex_id(v));
        if (ambient.in_s(w) && !F.is_sink(v)) {
          t.push_back(v);
        }
      }
      return CLObject(std::move(F), std::move(t));
    }
  }  // namespace

  CLObject complete(Graph const& sub_graph, CLObject const& ambient) {
    auto const& E = ambient.graph();
    auto const  m = embed(sub_graph, E);
    std::vector<bool> vmask(E.vertex_count(), false);
    std::vector<bool> emask(E.edge_count(), false);
    for (auto v : m.vertex) {
      vmask[v] = true;
    }
    for (auto e : m.edge) {
      emask[e] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto v : ambient.s_vertices()) {
        if (!vmask[v]) {
          continue;
        }
        auto const out = E.out_edges(v);
        if (std::none_of(out.begin(), out.end(), [&](EdgeIndex e) { return emask[e]; })) {
          continue;
        }
        for (auto e : out) {
          if (!emask[e]) {
            emask[e]            = true;
            vmask[E.range(e)]   = true;
            changed             = true;
          }
        }
      }
    }
    return object_from_masks(ambient, vmask, emask);
  }

  ////////////////////////////////////////////////////////////////////////
  // Relative graph
  ////////////////////////////////////////////////////////////////////////

  RelativeGraph relative_graph(CLObject const& obj) {
    auto const& E = obj.graph();
    std::vector<bool> split(E.vertex_count(), false);
    for (auto v : obj.regular_not_in_s()) {
      split[v] = true;
    }
    auto primed = [](std::string const& id) { return id + prime_suffix; };

    std::vector<std::string> vertices = E.vertex_ids();
    for (Vertex v = 0; v < E.vertex_count(); ++v) {
      if (split[v]) {
        vertices.push_back(primed(E.vertex_id(v)));
      }
    }
    std::vector<Graph::EdgeSpec> edges = E.edge_specs();
    for (EdgeIndex e = 0; e < E.edge_count(); ++e) {
      if (split[E.range(e)]) {
        edges.push_back({primed(E.edge_id(e)), E.vertex_id(E.source(e)),
                         primed(E.vertex_id(E.range(e)))});
      }
    }

    RelativeGraph rel;
    rel.graph = Graph(std::move(vertices), std::move(edges));
    auto const& G = rel.graph;
    for (Vertex v = 0; v < G.vertex_count(); ++v) {
      auto const& id = G.vertex_id(v);
      if (id.back() == prime_suffix && !E.find_vertex(id)) {
        rel.vertex_kind.push_back(RelativeGraph::VertexKind::primed);
        rel.vertex_origin.push_back(E.vertex(std::string_view(id).substr(0, id.size() - 1)));
      } else {
        Vertex const w = E.vertex(id);
        rel.vertex_kind.push_back(split[w] ? RelativeGraph::VertexKind::split
                                           : RelativeGraph::VertexKind::plain);
        rel.vertex_origin.push_back(w);
      }
    }
    for (EdgeIndex e = 0; e < G.edge_count(); ++e) {
      auto const& id = G.edge_id(e);
      if (auto f = E.find_edge(id)) {
        rel.edge_kind.push_back(RelativeGraph::EdgeKind::plain);
        rel.edge_origin.push_back(*f);
      } else {
        rel.edge_kind.push_back(RelativeGraph::EdgeKind::primed);
        rel.edge_origin.push_back(E.edge(std::string_view(id).substr(0, id.size() - 1)));
      }
    }
    return rel;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subobject system
  ////////////////////////////////////////////////////////////////////////

  bool SubobjectSystem::includes(std::size_t larger, std::size_t smaller) const {
    auto const& a = nodes.at(larger);
    auto const& b = nodes.at(smaller);
    for (std::size_t i = 0; i < a.vertex_mask.size(); ++i) {
      if (b.vertex_mask[i] && !a.vertex_mask[i]) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a.edge_mask.size(); ++i) {
      if (b.edge_mask[i] && !a.edge_mask[i]) {
        return false;
      }
    }
    return true;
  }

  SubobjectSystem subobject_system(CLObject const& obj) {
    auto const& E = obj.graph();
    if (E.vertex_count() > 20) {
      throw std::invalid_argument("subobject_system: graph too large for enumeration");
    }
    SubobjectSystem sys;
    auto const      nv = E.vertex_count();

    for (std::uint64_t vbits = 1; vbits < (std::uint64_t{1} << nv); ++vbits) {
      std::vector<bool> vmask(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        vmask[v] = ((vbits >> v) & 1) != 0;
      }
      // Per kept vertex, the admissible choices of emitted edges: any subset
      // outside S; all-or-nothing inside S (condition (C)).
      std::vector<std::vector<std::vector<EdgeIndex>>> choices;
      for (Vertex v = 0; v < nv; ++v) {
        if (!vmask[v]) {
          continue;
        }
        std::vector<EdgeIndex> eligible;
        bool                   all_eligible = true;
        for (auto e : E.out_edges(v)) {
          if (vmask[E.range(e)]) {
            eligible.push_back(e);
          } else {
            all_eligible = false;
          }
        }
        std::vector<std::vector<EdgeIndex>> opts;
        if (obj.in_s(v)) {
          opts.emplace_back();
          if (all_eligible && !eligible.empty()) {
            opts.push_back(eligible);
          }
        } else {
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << eligible.size()); ++bits) {
            std::vector<EdgeIndex> pick;
            for (std::size_t i = 0; i < eligible.size(); ++i) {
              if ((bits >> i) & 1) {
                pick.push_back(eligible[i]);
              }
            }
            opts.push_back(std::move(pick));
          }
        }
        choices.push_back(std::move(opts));
      }
      std::vector<std::size_t> idx(choices.size(), 0);
      while (true) {
        std::vector<bool> emask(E.edge_count(), false);
        for (std::size_t i = 0; i < choices.size(); ++i) {
          for (auto e : choices[i][idx[i]]) {
            emask[e] = true;
          }
        }
        sys.nodes.push_back({object_from_masks(obj, vmask, emask), vmask, emask});
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) {
          idx[k] = 0;
          ++k;
        }
        if (k == idx.size()) {
          break;
        }
      }
    }

    auto weight = [](SubobjectNode const& n) {
      return n.object.graph().vertex_count() + n.object.graph().edge_count();
    };
    std::sort(sys.nodes.begin(), sys.nodes.end(), [&](auto const& a, auto const& b) {
      if (weight(a) != weight(b)) {
        return weight(a) < weight(b);
      }
      if (a.vertex_mask != b.vertex_mask) {
        return a.vertex_mask > b.vertex_mask;
      }
      return a.edge_mask > b.edge_mask;
    });
    sys.top = sys.nodes.size() - 1;

    // Covering relation: i < j with nothing strictly between.
    auto const n = sys.nodes.size();
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> below;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j && weight(sys.nodes[i]) < weight(sys.nodes[j]) && sys.includes(j, i)) {
          below.push_back(i);
        }
      }
      for (auto i : below) {
        bool covered = true;
        for (auto k : below) {
          if (k != i && weight(sys.nodes[k]) > weight(sys.nodes[i]) && sys.includes(k, i)) {
            covered = false;
            break;
          }
        }
        if (covered) {
          sys.covers.emplace_back(i, j);
        }
      }
    }
    return sys;
  }

  std::string to_dot(SubobjectSystem const& system, CLObject const& ambient) {
    auto const&        E = ambient.graph();
    std::ostringstream os;
    os << "digraph subobjects {\n";
    for (std::size_t i = 0; i < system.nodes.size(); ++i) {
      auto const& node = system.nodes[i];
      os << "  n" << i << " [label=\"";
      bool first = true;
      for (Vertex v = 0; v < E.vertex_count(); ++v) {
        if (node.vertex_mask[v]) {
          os << (first ? "" : " ") << E.vertex_id(v);
          first = false;
        }
      }
      os << " |";
      for (EdgeIndex e = 0; e < E.edge_count(); ++e) {
        if (node.edge_mask[e]) {
          os << ' ' << E.edge_id(e);
        }
      }
      os << "\"];\n";
    }
    for (auto const& [a, b] : system.covers) {
      os << "  n" << a << " -> n" << b << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace clpa
