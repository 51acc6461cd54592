#include "clpa/cli_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "clpa/classify.hpp"
#include "clpa/error.hpp"
#include "clpa/structure_report.hpp"

namespace clpa {

  ////////////////////////////////////////////////////////////////////////
  // JSON formats
  ////////////////////////////////////////////////////////////////////////

  json graph_to_json(CLObject const& obj) {
    auto const& g = obj.graph();
    json        j;
    j["vertices"] = g.vertex_ids();
    j["edges"]    = json::array();
    for (auto const& e : g.edge_specs()) {
      j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"rng", e.rng}});
    }
    j["S"] = json::array();
    for (auto v : obj.s_vertices()) {
      j["S"].push_back(g.vertex_id(v));
    }
    return j;
  }

  namespace {
    json const& member(json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(where + " has no \"" + key + "\"", 0);
      }
      return j.at(key);
    }

    std::string string_value(json const& j, std::string const& what) {
      if (!j.is_string()) {
        throw ParseError(what + " must be a string", 0);
      }
      return j.get<std::string>();
    }

    std::vector<std::string> string_array(json const& j, std::string const& what) {
      if (!j.is_array()) {
        throw ParseError(what + " must be an array", 0);
      }
      std::vector<std::string> out;
      for (auto const& x : j) {
        out.push_back(string_value(x, "every entry of " + what));
      }
      return out;
    }

    std::vector<std::int64_t> int_array(json const& j, std::string const& what) {
      if (!j.is_array()) {
        throw ParseError(what + " must be an array", 0);
      }
      std::vector<std::int64_t> out;
      for (auto const& x : j) {
        if (!x.is_number_integer()) {
          throw ParseError("every entry of " + what + " must be an integer", 0);
        }
        out.push_back(x.get<std::int64_t>());
      }
      return out;
    }

    std::int64_t int_value(json const& j, std::string const& what) {
      if (!j.is_number_integer()) {
        throw ParseError(what + " must be an integer", 0);
      }
      return j.get<std::int64_t>();
    }
  }  // namespace

  CLObject graph_from_json(json const& j) {
    if (!j.is_object()) {
      throw ParseError("graph JSON must be an object", 0);
    }
    auto const vertices = string_array(member(j, "vertices", "graph"), "\"vertices\"");
    std::vector<Graph::EdgeSpec> edges;
    auto const&                  ej = member(j, "edges", "graph");
    if (!ej.is_array()) {
      throw ParseError("\"edges\" must be an array", 0);
    }
    for (auto const& e : ej) {
      edges.push_back({string_value(member(e, "id", "edge"), "edge id"),
                       string_value(member(e, "src", "edge"), "edge src"),
                       string_value(member(e, "rng", "edge"), "edge rng")});
    }
    Graph g(vertices, std::move(edges));
    if (!j.contains("S")) {
      return CLObject::leavitt(std::move(g));
    }
    return CLObject(std::move(g), string_array(j.at("S"), "\"S\""));
  }

  json signature_to_json(MatricialSignature const& sig) {
    json j;
    j["field_blocks"] = json::array();
    for (auto const& b : sig.field_blocks) {
      j["field_blocks"].push_back({{"size", b.size}, {"shifts", b.shifts}});
    }
    j["laurent_blocks"] = json::array();
    for (auto const& b : sig.laurent_blocks) {
      j["laurent_blocks"].push_back({{"size", b.size}, {"period", b.period}, {"shifts", b.shifts}});
    }
    return j;
  }

  MatricialSignature signature_from_json(json const& j) {
    if (!j.is_object()) {
      throw ParseError("signature JSON must be an object", 0);
    }
    MatricialSignature sig;
    auto sized = [](json const& b, std::string const& what) {
      auto const size   = int_value(member(b, "size", what), what + " size");
      auto       shifts = int_array(member(b, "shifts", what), what + " shifts");
      if (size < 1 || static_cast<std::size_t>(size) != shifts.size()) {
        throw ParseError(what + " size must be positive and equal the number of shifts", 0);
      }
      return std::make_pair(static_cast<std::size_t>(size), std::move(shifts));
    };
    if (j.contains("field_blocks")) {
      for (auto const& b : j.at("field_blocks")) {
        auto [size, shifts] = sized(b, "field block");
        sig.field_blocks.push_back({size, std::move(shifts)});
      }
    }
    if (j.contains("laurent_blocks")) {
      for (auto const& b : j.at("laurent_blocks")) {
        auto [size, shifts] = sized(b, "Laurent block");
        auto const period   = int_value(member(b, "period", "Laurent block"), "Laurent block period");
        if (period < 1) {
          throw ParseError("Laurent block period must be positive", 0);
        }
        sig.laurent_blocks.push_back({size, period, std::move(shifts)});
      }
    }
    return sig;
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot read file '" + path + "'", 0);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError("'" + path + "' is not valid JSON: " + e.what(), e.byte);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Element expressions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_delimiter(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '|' || c == '.' || c == '+'
             || c == '-' || c == '*' || c == '/';
    }

    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    class ExpressionParser {
     public:
      ExpressionParser(std::string_view text, CLAlgebra const& algebra)
          : _text(text), _algebra(algebra) {}

      AlgebraElement parse() {
        skip_space();
        if (_pos == _text.size()) {
          throw ParseError("empty expression", 0);
        }
        bool negate = false;
        if (peek('-')) {
          ++_pos;
          negate = true;
        }
        auto result = term(negate);
        while (true) {
          skip_space();
          if (_pos == _text.size()) {
            return result;
          }
          if (!peek('+') && !peek('-')) {
            throw ParseError("expected '+' or '-'", _pos);
          }
          negate = _text[_pos++] == '-';
          result += term(negate);
        }
      }

     private:
      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])) != 0) {
          ++_pos;
        }
      }

      bool peek(char c) {
        skip_space();
        return _pos < _text.size() && _text[_pos] == c;
      }

      std::string word(std::size_t& start) {
        skip_space();
        start = _pos;
        while (_pos < _text.size() && !is_delimiter(_text[_pos])) {
          ++_pos;
        }
        if (start == _pos) {
          throw ParseError("expected an identifier", start);
        }
        return std::string(_text.substr(start, _pos - start));
      }

      // An integer or fraction followed by '*'; restores the position
      // when there is none.
      std::optional<Scalar> coefficient() {
        skip_space();
        auto const start = _pos;
        auto       end   = _pos;
        while (end < _text.size() && is_digit(_text[end])) {
          ++end;
        }
        if (end == start) {
          return std::nullopt;
        }
        if (end + 1 < _text.size() && _text[end] == '/' && is_digit(_text[end + 1])) {
          ++end;
          while (end < _text.size() && is_digit(_text[end])) {
            ++end;
          }
        }
        auto const number = _text.substr(start, end - start);
        _pos              = end;
        if (!peek('*')) {
          _pos = start;
          return std::nullopt;
        }
        ++_pos;
        try {
          return Scalar::parse(number, _algebra.field());
        } catch (std::exception const& e) {
          throw ParseError(std::string("bad coefficient: ") + e.what(), start);
        }
      }

      Path path() {
        auto const&              g = _algebra.graph();
        std::size_t              start = 0;
        std::vector<std::string> ids{word(start)};
        std::vector<std::size_t> positions{start};
        while (peek('.')) {
          ++_pos;
          std::size_t at = 0;
          ids.push_back(word(at));
          positions.push_back(at);
        }
        if (ids.size() == 1) {
          if (auto v = g.find_vertex(ids[0])) {
            return Path::trivial(*v);
          }
        }
        std::vector<EdgeIndex> edges;
        for (std::size_t i = 0; i < ids.size(); ++i) {
          if (auto e = g.find_edge(ids[i])) {
            edges.push_back(*e);
          } else if (g.find_vertex(ids[i])) {
            throw ParseError("vertex '" + ids[i] + "' inside a path of edges", positions[i]);
          } else {
            throw ParseError("unknown id '" + ids[i] + "'", positions[i]);
          }
        }
        for (std::size_t i = 1; i < edges.size(); ++i) {
          if (g.range(edges[i - 1]) != g.source(edges[i])) {
            throw ParseError("edge '" + ids[i] + "' does not start where '" + ids[i - 1] + "' ends",
                             positions[i]);
          }
        }
        return Path::from_edges(g, std::move(edges));
      }

      AlgebraElement term(bool negate) {
        auto c = coefficient().value_or(_algebra.field().one());
        if (negate) {
          c = -c;
        }
        auto const p = path();
        auto       q = Path::trivial(p.range);
        if (peek('|')) {
          auto const bar = _pos++;
          q              = path();
          if (q.range != p.range) {
            throw ParseError("the two paths of p|q must end at the same vertex", bar);
          }
        }
        return _algebra.monomial(p, q, c);
      }

      std::string_view _text;
      CLAlgebra const& _algebra;
      std::size_t      _pos = 0;
    };

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  AlgebraElement parse_expression(std::string_view text, CLAlgebra const& algebra) {
    return ExpressionParser(text, algebra).parse();
  }

  MonoidElement parse_monoid_element(std::string_view text, Presentation const& p) {
    auto result = p.zero();
    if (trim(text) == "0") {
      return result;
    }
    std::size_t offset = 0;
    while (offset <= text.size()) {
      auto const plus  = text.find('+', offset);
      auto const end   = plus == std::string_view::npos ? text.size() : plus;
      auto const piece = text.substr(offset, end - offset);
      auto const body  = trim(piece);
      auto const at    = offset + (piece.find_first_not_of(" \t\n") == std::string_view::npos
                                       ? 0
                                       : piece.find_first_not_of(" \t\n"));
      if (body.empty()) {
        throw ParseError("empty summand", at);
      }
      std::uint64_t count = 1;
      auto          id    = body;
      if (auto star = body.find('*'); star != std::string_view::npos) {
        auto const n = trim(body.substr(0, star));
        if (n.empty() || !std::all_of(n.begin(), n.end(), is_digit)) {
          throw ParseError("bad multiplicity '" + std::string(n) + "'", at);
        }
        count = std::stoull(std::string(n));
        id    = trim(body.substr(star + 1));
      }
      auto const v = p.relative.graph.find_vertex(id);
      if (!v) {
        throw ParseError("unknown generator '" + std::string(id) + "'", at);
      }
      result[*v] += count;
      if (plus == std::string_view::npos) {
        break;
      }
      offset = plus + 1;
    }
    return result;
  }

  Cycle parse_cycle(std::string_view text, Graph const& g) {
    std::vector<EdgeIndex> edges;
    std::size_t            offset = 0;
    while (true) {
      auto const dot = text.find('.', offset);
      auto const id  = trim(text.substr(offset, dot == std::string_view::npos ? dot : dot - offset));
      auto const e   = g.find_edge(id);
      if (!e) {
        throw ParseError("unknown edge '" + std::string(id) + "'", offset);
      }
      edges.push_back(*e);
      if (dot == std::string_view::npos) {
        break;
      }
      offset = dot + 1;
    }
    for (auto const& c : cycles(g)) {
      if (c.length() != edges.size()) {
        continue;
      }
      auto rotated = c.edges;
      for (std::size_t r = 0; r < rotated.size(); ++r) {
        if (rotated == edges) {
          return c;
        }
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      }
    }
    throw ParseError("'" + std::string(text) + "' is not a cycle of the graph", 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Options {
      bool        as_json = false;
      std::string field   = "q";
    };

    std::string join(std::vector<std::int64_t> const& xs) {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(xs[i]);
      }
      return out + "]";
    }

    std::string join(std::vector<std::uint64_t> const& xs) {
      std::string out = "(";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ", ") + std::to_string(xs[i]);
      }
      return out + ")";
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    json checks_to_json(std::vector<WitnessCheck> const& checks) {
      json j = json::array();
      for (auto const& c : checks) {
        j.push_back({{"check", c.name}, {"passed", c.passed}});
      }
      return j;
    }

    void print_checks(std::ostream& out, std::vector<WitnessCheck> const& checks) {
      for (auto const& c : checks) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << '\n';
      }
    }

    json elements_to_json(std::vector<AlgebraElement> const& xs) {
      json j = json::array();
      for (auto const& x : xs) {
        j.push_back(x.to_string());
      }
      return j;
    }

    CLObject load_graph(std::string const& path) {
      return graph_from_json(read_json_file(path));
    }

    // analyze
    int cmd_analyze(Options const& o, std::string const& path, std::ostream& out) {
      auto const obj = load_graph(path);
      auto const r   = report(obj);
      if (o.as_json) {
        json j;
        j["no_exit"]   = r.no_exit;
        j["acyclic"]   = r.acyclic;
        j["sink_free"] = r.sink_free;
        j["families"]  = json::array();
        for (auto f : {Family::no_exit, Family::acyclic, Family::no_exit_sink_free}) {
          json ids = json::array();
          for (auto const& c : r.conditions) {
            if (c.family == f) {
              ids.push_back(c.id);
            }
          }
          j["families"].push_back({{"family", to_string(f)}, {"verdict", r.verdict(f)}, {"conditions", ids}});
        }
        j["conditions"] = json::array();
        for (auto const& c : r.conditions) {
          json e{{"id", c.id},
                 {"statement", c.statement},
                 {"family", to_string(c.family)},
                 {"verdict", c.verdict},
                 {"cited", c.cited},
                 {"justification", c.justification}};
          e["witness"] = c.witness ? json(*c.witness) : json(nullptr);
          j["conditions"].push_back(std::move(e));
        }
        j["notes"] = r.notes;
        out << j.dump(2) << '\n';
        return 0;
      }
      out << "E_S: no-exit " << yes_no(r.no_exit) << ", acyclic " << yes_no(r.acyclic)
          << ", sink-free " << yes_no(r.sink_free) << "\n\n";
      out << std::left << std::setw(8) << "id" << std::setw(24) << "family" << std::setw(9)
          << "verdict" << "statement\n";
      for (auto const& c : r.conditions) {
        out << std::setw(8) << c.id << std::setw(24) << to_string(c.family) << std::setw(9)
            << yes_no(c.verdict) << c.statement << (c.cited ? " [cited]" : "")
            << (c.witness ? " [witness: " + *c.witness + "]" : "") << '\n';
      }
      out << "\njustification:\n";
      for (auto f : {Family::no_exit, Family::acyclic, Family::no_exit_sink_free}) {
        auto it = std::find_if(r.conditions.begin(), r.conditions.end(),
                               [f](auto const& c) { return c.family == f; });
        out << "  " << to_string(f) << ": " << it->justification << '\n';
      }
      out << "notes:\n";
      for (auto const& n : r.notes) {
        out << "  - " << n << '\n';
      }
      return 0;
    }

    // classify
    int cmd_classify(Options const&      o,
                     std::string const&  path,
                     bool                system,
                     bool                dot,
                     std::ostream&       out) {
      auto const  obj   = load_graph(path);
      auto const  field = Field::parse(o.field);
      auto const  psi   = build_generator_map(obj, field);
      auto const& c     = psi.classification();
      auto const& g     = obj.graph();

      if (dot) {
        out << to_dot(subobject_system(obj), obj);
        return 0;
      }
      std::optional<AnnotatedSystem> annotated;
      if (system) {
        annotated = classify_system(obj, field);
        for (auto const& n : annotated->nodes) {
          if (!n.injective) {
            throw ClassificationBug("inclusion of a complete subobject is not injective");
          }
        }
      }
      if (o.as_json) {
        json j;
        j["signature"] = signature_to_json(c.signature);
        j["canonical"] = c.signature.to_string();
        j["blocks"]    = json::array();
        for (auto const& b : c.blocks) {
          json e{{"kind", b.kind == BlockKind::field ? "field" : "laurent"},
                 {"size", b.paths.size()},
                 {"period", b.period},
                 {"shifts", b.shifts()},
                 {"target", g.vertex_id(b.target)}};
          e["cycle"] = b.cycle ? json(b.cycle->to_string(g)) : json(nullptr);
          j["blocks"].push_back(std::move(e));
        }
        j["verification"] = {{"axiom_instances", psi.axioms().instances_checked},
                             {"units_checked", psi.units_checked()}};
        if (annotated) {
          json nodes = json::array();
          for (std::size_t i = 0; i < annotated->nodes.size(); ++i) {
            auto const& node = annotated->system.nodes[i];
            auto        gj   = graph_to_json(node.object);
            nodes.push_back({{"graph", gj},
                             {"signature", annotated->nodes[i].signature.to_string()},
                             {"monomials_checked", annotated->nodes[i].monomials_checked},
                             {"injective", annotated->nodes[i].injective}});
          }
          json covers = json::array();
          for (auto const& [a, b] : annotated->system.covers) {
            covers.push_back({a, b});
          }
          j["system"] = {{"nodes", nodes}, {"covers", covers}, {"top", annotated->system.top}};
        }
        out << j.dump(2) << '\n';
        return 0;
      }
      out << "signature: " << c.signature.to_string() << "\n\n";
      out << std::left << std::setw(7) << "block" << std::setw(9) << "kind" << std::setw(6) << "size"
          << std::setw(8) << "period" << std::setw(16) << "shifts" << "target\n";
      for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        auto const& b = c.blocks[i];
        out << std::setw(7) << i + 1 << std::setw(9)
            << (b.kind == BlockKind::field ? "field" : "laurent") << std::setw(6) << b.paths.size()
            << std::setw(8) << (b.kind == BlockKind::field ? "-" : std::to_string(b.period))
            << std::setw(16) << join(b.shifts())
            << (b.cycle ? "cycle " + b.cycle->to_string(g) : g.vertex_id(b.target)) << '\n';
      }
      out << "\nverified: " << psi.axioms().instances_checked << " relation instances, "
          << psi.units_checked() << " matrix units\n";
      if (annotated) {
        out << "\ncomplete subobjects: " << annotated->nodes.size() << '\n';
        for (std::size_t i = 0; i < annotated->nodes.size(); ++i) {
          auto const& node = annotated->system.nodes[i];
          auto const& F    = node.object.graph();
          std::string vs;
          for (auto const& id : F.vertex_ids()) {
            vs += (vs.empty() ? "" : ",") + id;
          }
          out << "  " << i << ": {" << vs << "} " << annotated->nodes[i].signature.to_string()
              << (annotated->nodes[i].injective ? " injective" : " NOT injective") << " ("
              << annotated->nodes[i].monomials_checked << " monomials)\n";
        }
      }
      return 0;
    }

    char const* kind_name(RelativeGraph::VertexKind k) {
      switch (k) {
        case RelativeGraph::VertexKind::plain:
          return "plain";
        case RelativeGraph::VertexKind::split:
          return "split";
        case RelativeGraph::VertexKind::primed:
          return "primed";
      }
      return "?";
    }

    // relgraph
    int cmd_relgraph(Options const& o, std::string const& path, std::ostream& out) {
      auto const  obj = load_graph(path);
      auto const  r   = relgraph_verify(obj, Field::parse(o.field));
      auto const& F   = r.relative.graph;
      if (o.as_json) {
        json j;
        j["relative_graph"] = graph_to_json(CLObject::leavitt(F));
        j["vertex_images"]  = json::array();
        for (Vertex x = 0; x < F.vertex_count(); ++x) {
          j["vertex_images"].push_back({{"id", F.vertex_id(x)},
                                        {"kind", kind_name(r.relative.vertex_kind[x])},
                                        {"image", r.images.vertex_images[x]->to_string()}});
        }
        j["edge_images"] = json::array();
        for (EdgeIndex f = 0; f < F.edge_count(); ++f) {
          j["edge_images"].push_back({{"id", F.edge_id(f)},
                                      {"kind", r.relative.edge_kind[f] == RelativeGraph::EdgeKind::plain
                                                   ? "plain"
                                                   : "primed"},
                                      {"image", r.images.edge_images[f]->to_string()}});
        }
        j["axioms"] = {{"instances_checked", r.axioms.instances_checked}, {"failures", r.axioms.failures}};
        j["checks"] = checks_to_json(r.checks);
        j["ok"]     = r.ok();
        out << j.dump(2) << '\n';
      } else {
        out << "E_S: " << F.vertex_count() << " vertices, " << F.edge_count() << " edges\n";
        for (Vertex x = 0; x < F.vertex_count(); ++x) {
          out << "  phi(" << F.vertex_id(x) << ") = " << r.images.vertex_images[x]->to_string() << '\n';
        }
        for (EdgeIndex f = 0; f < F.edge_count(); ++f) {
          out << "  phi(" << F.edge_id(f) << ") = " << r.images.edge_images[f]->to_string() << '\n';
        }
        out << "relations: " << r.axioms.instances_checked << " instances, "
            << r.axioms.failures.size() << " failures\n";
        for (auto const& f : r.axioms.failures) {
          out << "  FAIL " << f << '\n';
        }
        print_checks(out, r.checks);
      }
      if (!r.ok()) {
        throw ClassificationBug("the relative graph map fails its checks");
      }
      return 0;
    }

    std::vector<std::string> split_list(std::string const& s) {
      std::vector<std::string> out;
      std::stringstream        ss(s);
      std::string              item;
      while (std::getline(ss, item, ',')) {
        if (auto t = trim(item); !t.empty()) {
          out.emplace_back(t);
        }
      }
      return out;
    }

    // complete
    int cmd_complete(Options const&     o,
                     std::string const& path,
                     std::string const& vertex_list,
                     std::string const& edge_list,
                     std::ostream&      out) {
      auto const  ambient = load_graph(path);
      auto const& E       = ambient.graph();
      auto        vids    = split_list(vertex_list);
      std::vector<Graph::EdgeSpec> edges;
      for (auto const& id : split_list(edge_list)) {
        auto const e = E.edge(id);
        edges.push_back({id, E.vertex_id(E.source(e)), E.vertex_id(E.range(e))});
        vids.push_back(edges.back().src);
        vids.push_back(edges.back().rng);
      }
      std::sort(vids.begin(), vids.end());
      vids.erase(std::unique(vids.begin(), vids.end()), vids.end());
      for (auto const& id : vids) {
        (void) E.vertex(id);
      }
      Graph const              sub(vids, edges);
      std::vector<std::string> t;
      for (auto const& id : vids) {
        auto const v = E.vertex(id);
        if (ambient.in_s(v) && !sub.is_sink(sub.vertex(id))) {
          t.push_back(id);
        }
      }
      auto const check      = is_complete_subobject(CLObject(sub, t), ambient);
      auto const completion = complete(sub, ambient);
      if (o.as_json) {
        json j;
        j["input_complete"] = check.complete;
        j["violations"]     = check.violations;
        j["completion"]     = graph_to_json(completion);
        out << j.dump(2) << '\n';
        return 0;
      }
      out << "input complete: " << yes_no(check.complete) << '\n';
      for (auto const& v : check.violations) {
        out << "  " << v << '\n';
      }
      out << "completion:\n" << graph_to_json(completion).dump(2) << '\n';
      return 0;
    }

    json cancellation_to_json(CancellationWitness const& w, Graph const& g) {
      return {{"cycle", w.cycle.to_string(g)},
              {"base", g.vertex_id(w.base)},
              {"p", elements_to_json(w.p)},
              {"identity", w.identity},
              {"checks", checks_to_json(w.checks)},
              {"ok", w.ok()}};
    }

    // monoid
    int cmd_monoid(Options const&                  o,
                   std::string const&              path,
                   std::vector<std::string> const& equal_args,
                   std::size_t                     depth,
                   std::size_t                     N,
                   std::ostream&                   out) {
      auto const  obj     = load_graph(path);
      auto const  p       = presentation(obj);
      auto const  verdict = atomic_cancellative_verdict(obj, Field::parse(o.field), N);
      auto const& g       = obj.graph();
      std::optional<MonoidEquality> eq;
      if (equal_args.size() == 2) {
        eq = equal(p, parse_monoid_element(equal_args[0], p), parse_monoid_element(equal_args[1], p), depth);
      }
      if (verdict.witness && !verdict.witness->ok()) {
        throw ClassificationBug("cancellation witness fails its checks");
      }

      if (o.as_json) {
        json j;
        j["generators"] = p.generators;
        j["relations"]  = json::array();
        for (auto const& r : p.relations) {
          j["relations"].push_back({{"lhs", p.generators[r.lhs]}, {"rhs", p.to_string(r.rhs)}});
        }
        j["atomic_cancellative"] = verdict.atomic_cancellative;
        if (verdict.invariant) {
          json images = json::object();
          for (std::size_t i = 0; i < p.generators.size(); ++i) {
            images[p.generators[i]] = verdict.invariant->images[i];
          }
          j["invariant"] = {{"rank", verdict.invariant->rank()},
                            {"coordinates", verdict.invariant->coordinates},
                            {"images", images},
                            {"relations_preserved", verdict.relations_preserved}};
        } else {
          j["invariant"] = nullptr;
        }
        j["witness"] = verdict.witness ? cancellation_to_json(*verdict.witness, g) : json(nullptr);
        if (eq) {
          j["equal"] = {{"lhs", equal_args[0]},
                        {"rhs", equal_args[1]},
                        {"verdict", to_string(eq->verdict)},
                        {"method", eq->method},
                        {"depth", eq->depth},
                        {"common", eq->common ? json(p.to_string(*eq->common)) : json(nullptr)}};
        }
        out << j.dump(2) << '\n';
        return 0;
      }
      out << "generators:";
      for (auto const& id : p.generators) {
        out << ' ' << id;
      }
      out << "\nrelations:\n";
      for (auto const& r : p.relations) {
        out << "  " << p.generators[r.lhs] << " = " << p.to_string(r.rhs) << '\n';
      }
      if (verdict.invariant) {
        auto const& inv = *verdict.invariant;
        out << "verdict: atomic and cancellative, V = N^" << inv.rank() << '\n';
        out << "coordinates:";
        for (auto const& c : inv.coordinates) {
          out << ' ' << c;
        }
        out << "\ninvariant:\n";
        for (std::size_t i = 0; i < p.generators.size(); ++i) {
          out << "  [" << p.generators[i] << "] -> " << join(inv.images[i]) << '\n';
        }
        auto const kept = std::count(verdict.relations_preserved.begin(),
                                     verdict.relations_preserved.end(), true);
        out << "relations preserved: " << kept << "/" << verdict.relations_preserved.size() << '\n';
      } else {
        out << "verdict: not cancellative\n";
        auto const& w = *verdict.witness;
        out << "witness on cycle " << w.cycle.to_string(g) << " at " << g.vertex_id(w.base) << ":\n";
        for (std::size_t n = 0; n < w.p.size(); ++n) {
          out << "  p_" << n + 1 << " = " << w.p[n].to_string() << '\n';
        }
        print_checks(out, w.checks);
        out << "  " << w.identity << '\n';
      }
      if (eq) {
        out << "equal(" << equal_args[0] << ", " << equal_args[1] << "): " << to_string(eq->verdict)
            << " by " << eq->method << " at depth " << eq->depth;
        if (eq->common) {
          out << ", common reduct " << p.to_string(*eq->common);
        }
        out << '\n';
      }
      return 0;
    }

    // witness
    int cmd_witness(Options const&     o,
                    std::string const& path,
                    std::string const& kind,
                    std::string const& cycle_text,
                    std::size_t        N,
                    std::ostream&      out) {
      auto const  obj   = load_graph(path);
      auto const  field = Field::parse(o.field);
      auto const& g     = obj.graph();
      std::optional<Cycle> cycle;
      if (!cycle_text.empty()) {
        cycle = parse_cycle(cycle_text, g);
      } else if (kind != "artinian") {
        for (auto const& c : cycles(g)) {
          if (exit_vertex(obj, c)) {
            cycle = c;
            break;
          }
        }
        if (!cycle) {
          throw NotAnExit("no cycle of the graph has an exit relative to S");
        }
      }

      json                      j;
      std::vector<WitnessCheck> checks;
      if (kind == "cancellation") {
        auto const w = cancellation_witness(obj, *cycle, N, field);
        j            = cancellation_to_json(w, g);
        checks       = w.checks;
        if (!o.as_json) {
          out << "cancellation witness on cycle " << w.cycle.to_string(g) << " at "
              << g.vertex_id(w.base) << '\n';
          for (std::size_t n = 0; n < w.p.size(); ++n) {
            out << "  p_" << n + 1 << " = " << w.p[n].to_string() << '\n';
          }
          print_checks(out, w.checks);
          out << "  " << w.identity << '\n';
        }
      } else if (kind == "noetherian") {
        auto const w = noetherian_chain_witness(obj, *cycle, N, field);
        j            = {{"cycle", w.cycle.to_string(g)},
                        {"base", g.vertex_id(w.base)},
                        {"g", elements_to_json(w.g)},
                        {"checks", checks_to_json(w.checks)},
                        {"ok", w.ok()}};
        checks       = w.checks;
        if (!o.as_json) {
          out << "increasing chain on cycle " << w.cycle.to_string(g) << " at "
              << g.vertex_id(w.base) << '\n';
          for (std::size_t n = 0; n < w.g.size(); ++n) {
            out << "  g_" << n + 1 << " = " << w.g[n].to_string() << '\n';
          }
          print_checks(out, w.checks);
        }
      } else if (kind == "artinian") {
        auto const w = cycle ? artinian_failure_witness(obj, *cycle, N, field)
                             : artinian_failure_witness(obj, N, field);
        json       images = json::array();
        for (auto const& x : w.h_images) {
          images.push_back(x.to_string());
        }
        json k_images = json::array();
        for (auto const& x : w.k_images) {
          k_images.push_back(x.to_string());
        }
        j      = {{"cycle", w.cycle.to_string(g)},
                  {"base", g.vertex_id(w.base)},
                  {"block", w.block + 1},
                  {"h", elements_to_json(w.h)},
                  {"h_images", images},
                  {"k", elements_to_json(w.k)},
                  {"k_images", k_images},
                  {"checks", checks_to_json(w.checks)},
                  {"notes", w.notes},
                  {"ok", w.ok()}};
        checks = w.checks;
        if (!o.as_json) {
          out << "artinian failure on cycle " << w.cycle.to_string(g) << " (block " << w.block + 1
              << ")\n";
          for (std::size_t n = 0; n < w.h.size(); ++n) {
            out << "  h_" << n + 1 << " = " << w.h[n].to_string() << " -> " << w.h_images[n].to_string()
                << '\n';
          }
          for (std::size_t n = 0; n < w.k.size(); ++n) {
            out << "  k_" << n + 1 << " = " << w.k[n].to_string() << " -> " << w.k_images[n].to_string()
                << '\n';
          }
          print_checks(out, w.checks);
          for (auto const& n : w.notes) {
            out << "  note: " << n << '\n';
          }
        }
      } else {
        throw std::invalid_argument("unknown witness kind '" + kind
                                    + "' (use cancellation, noetherian, or artinian)");
      }
      if (o.as_json) {
        out << j.dump(2) << '\n';
      }
      if (!all_passed(checks)) {
        throw ClassificationBug("witness fails its checks");
      }
      return 0;
    }

    json decision_to_json(IsoDecision const& d) {
      json j{{"verdict", to_string(d.verdict)}, {"window", d.window}};
      if (d.witness) {
        j["witness"] = {{"perm", d.witness->perm},
                        {"translation", d.witness->translation},
                        {"offset", d.witness->offset},
                        {"verified", d.witness->verified}};
      }
      if (d.certificate) {
        j["certificate"] = {{"delta", d.certificate->delta},
                            {"dim_a", d.certificate->dim_a},
                            {"dim_b", d.certificate->dim_b}};
      }
      return j;
    }

    // iso
    int cmd_iso(Options const& o, std::string const& path_a, std::string const& path_b, std::ostream& out) {
      auto const field = Field::parse(o.field);
      auto const a     = signature_from_json(read_json_file(path_a)).canonical();
      auto const b     = signature_from_json(read_json_file(path_b)).canonical();
      auto const d     = decide_signature_iso(a, b, field);
      auto const A     = a.algebras(field);
      auto const B     = b.algebras(field);

      json pairs = json::array();
      std::vector<std::string> lines;
      for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t k = 0; k < B.size(); ++k) {
          auto const pd = decide_graded_iso(A[i], B[k]);
          auto       pj = decision_to_json(pd);
          pj["a"]       = A[i].to_string();
          pj["b"]       = B[k].to_string();
          pairs.push_back(pj);
          std::string line = "  " + A[i].to_string() + " vs " + B[k].to_string() + ": "
                             + to_string(pd.verdict);
          if (pd.certificate) {
            line += " (delta=" + std::to_string(pd.certificate->delta) + ": dim "
                    + std::to_string(pd.certificate->dim_a) + " vs "
                    + std::to_string(pd.certificate->dim_b) + ")";
          }
          lines.push_back(line);
        }
      }
      if (o.as_json) {
        json j{{"a", a.to_string()},
               {"b", b.to_string()},
               {"verdict", to_string(d.verdict)},
               {"reason", d.reason},
               {"pairs", pairs}};
        out << j.dump(2) << '\n';
        return 0;
      }
      out << a.to_string() << " vs " << b.to_string() << ": " << to_string(d.verdict) << '\n';
      out << "reason: " << d.reason << '\n';
      for (auto const& l : lines) {
        out << l << '\n';
      }
      return 0;
    }

    // eval
    int cmd_eval(Options const& o, std::string const& path, std::string const& expr, std::ostream& out) {
      auto const      obj = load_graph(path);
      CLAlgebra const A(obj, Field::parse(o.field));
      auto const      x = parse_expression(expr, A);
      if (o.as_json) {
        json components = json::object();
        for (auto const& [d, c] : x.homogeneous_components()) {
          components[std::to_string(d)] = c.to_string();
        }
        auto const degree = x.degree();
        json       j{{"expression", expr},
                     {"normal_form", x.to_string()},
                     {"components", components}};
        j["degree"] = degree ? json(*degree) : json(nullptr);
        out << j.dump(2) << '\n';
        return 0;
      }
      out << x.to_string() << '\n';
      return 0;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohn-Leavitt path algebras of finite graphs", "clpa"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.as_json, "Write JSON instead of tables");
    app.add_option("--field", o.field, "Base field: q or gf:p")->capture_default_str();

    std::string graph_path, second_path, expression, vertices, edges, kind = "cancellation", cycle;
    std::vector<std::string> equal_args;
    std::size_t depth = 8, N = 3;
    bool        system = false, dot = false;

    auto* analyze = app.add_subcommand("analyze", "Evaluate the ring-theoretic condition families");
    analyze->add_option("graph", graph_path, "Graph JSON file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Signature of a no-exit object");
    classify_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    classify_cmd->add_flag("--system", system, "Also classify every complete subobject");
    classify_cmd->add_flag("--dot", dot, "Write the subobject inclusion order as DOT");

    auto* relgraph = app.add_subcommand("relgraph", "Build E_S and verify the map into CL_K(E,S)");
    relgraph->add_option("graph", graph_path, "Graph JSON file")->required();

    auto* complete_cmd = app.add_subcommand("complete", "Smallest complete subobject containing a subgraph");
    complete_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    complete_cmd->add_option("--vertices", vertices, "Comma-separated vertex ids");
    complete_cmd->add_option("--edges", edges, "Comma-separated edge ids");

    auto* monoid = app.add_subcommand("monoid", "Presentation and verdict for the monoid V");
    monoid->add_option("graph", graph_path, "Graph JSON file")->required();
    monoid->add_option("--equal", equal_args, "Two elements to compare, e.g. \"2*v\" \"u1 + u2\"")
        ->expected(2);
    monoid->add_option("--depth", depth, "Search depth for equal")->capture_default_str();
    monoid->add_option("-N", N, "Length of the witness chain")->capture_default_str();

    auto* witness = app.add_subcommand("witness", "Witness chains for failed conditions");
    witness->add_option("graph", graph_path, "Graph JSON file")->required();
    witness->add_option("--kind", kind, "cancellation, noetherian, or artinian")->capture_default_str();
    witness->add_option("--cycle", cycle, "Cycle as dot-separated edge ids");
    witness->add_option("-N", N, "Length of the chain")->capture_default_str();

    auto* iso = app.add_subcommand("iso", "Graded isomorphism of two signatures");
    iso->add_option("a", graph_path, "Signature JSON file")->required();
    iso->add_option("b", second_path, "Signature JSON file")->required();

    auto* eval = app.add_subcommand("eval", "Normal form of an element expression");
    eval->add_option("--graph", graph_path, "Graph JSON file")->required();
    eval->add_option("expression", expression, "Element expression, e.g. \"2*e1.e2|f1 + v\"")
        ->required();

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      auto const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (analyze->parsed()) {
        return cmd_analyze(o, graph_path, out);
      }
      if (classify_cmd->parsed()) {
        return cmd_classify(o, graph_path, system, dot, out);
      }
      if (relgraph->parsed()) {
        return cmd_relgraph(o, graph_path, out);
      }
      if (complete_cmd->parsed()) {
        return cmd_complete(o, graph_path, vertices, edges, out);
      }
      if (monoid->parsed()) {
        return cmd_monoid(o, graph_path, equal_args, depth, N, out);
      }
      if (witness->parsed()) {
        return cmd_witness(o, graph_path, kind, cycle, N, out);
      }
      if (iso->parsed()) {
        return cmd_iso(o, graph_path, second_path, out);
      }
      if (eval->parsed()) {
        return cmd_eval(o, graph_path, expression, out);
      }
    } catch (ClassificationBug const& e) {
      err << "internal verification failed: " << e.what() << '\n';
      return 3;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::out_of_range const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    return 2;
  }

}  // namespace clpa
