#include "clpa/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "clpa/error.hpp"
#include "clpa/linear.hpp"

namespace clpa {

  NoExitCheck check_no_exit_object(CLObject const& obj) {
    auto const& g = obj.graph();
    NoExitCheck result;
    for (auto const& c : cycles(g)) {
      for (auto v : c.vertices(g)) {
        if (g.is_bifurcation(v)) {
          result.ok = false;
          result.violations.push_back("cycle " + c.to_string(g) + " has an exit at vertex '"
                                      + g.vertex_id(v) + "'");
        }
        if (!obj.in_s(v)) {
          result.ok = false;
          result.violations.push_back("vertex '" + g.vertex_id(v) + "' on cycle " + c.to_string(g)
                                      + " is not in S");
        }
      }
    }
    return result;
  }

  std::vector<std::int64_t> ClassBlock::shifts() const {
    std::vector<std::int64_t> s;
    for (auto const& p : paths) {
      s.push_back(static_cast<std::int64_t>(p.length()));
    }
    return s;
  }

  GradedMatrixAlgebra ClassBlock::algebra(Field const& field) const {
    return kind == BlockKind::field ? GradedMatrixAlgebra::field_block(shifts(), field)
                                    : GradedMatrixAlgebra::laurent_block(period, shifts(), field);
  }

  Classification classify_blocks(CLObject const& obj) {
    if (auto check = check_no_exit_object(obj); !check.ok) {
      throw NotNoExitObject(check.violations.front());
    }
    auto const&    g = obj.graph();
    Classification c;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      // Sinks and the vertices of R(E) - S.
      if (g.is_sink(v) || !obj.in_s(v)) {
        ClassBlock b;
        b.kind   = BlockKind::field;
        b.target = v;
        b.paths  = paths_into(g, v, {v});
        c.raw.field_blocks.push_back({b.paths.size(), b.shifts()});
        c.blocks.push_back(std::move(b));
      }
    }
    for (auto const& cyc : cycles(g)) {
      ClassBlock b;
      b.kind   = BlockKind::laurent;
      b.target = cyc.base(g);
      b.cycle  = cyc;
      b.period = static_cast<std::int64_t>(cyc.length());
      b.paths  = paths_into(g, b.target, {b.target});
      c.raw.laurent_blocks.push_back({b.paths.size(), b.period, b.shifts()});
      c.blocks.push_back(std::move(b));
    }
    c.signature = c.raw.canonical();
    return c;
  }

  MatricialSignature classify(CLObject const& obj) {
    return classify_blocks(obj).signature;
  }

  ////////////////////////////////////////////////////////////////////////
  // ClassificationMap
  ////////////////////////////////////////////////////////////////////////

  MatricialElement ClassificationMap::image(AlgebraElement const& x) const {
    return evaluate(x, _images, MatricialElement::zero(_target));
  }

  MatricialElement ClassificationMap::image(Path const& p) const {
    return evaluate_path(_source.graph(), p, _images);
  }

  AlgebraElement ClassificationMap::unit_preimage(std::size_t  b,
                                                  std::size_t  i,
                                                  std::size_t  j,
                                                  std::int64_t k) const {
    auto const& block = _classification.blocks.at(b);
    auto const& g     = _source.graph();
    auto const& qi    = block.paths.at(i);
    auto const& qj    = block.paths.at(j);
    auto const  t     = block.target;

    AlgebraElement middle = _source.vertex(t);
    if (block.kind == BlockKind::field) {
      if (k != 0) {
        throw std::invalid_argument("field blocks have no powers of t");
      }
      if (g.is_regular(t)) {
        for (auto e : g.out_edges(t)) {
          middle -= _source.edge(e) * _source.ghost(e);
        }
      }
    } else {
      auto const c = _source.path(block.cycle->as_path_from(g, t));
      auto const step = k >= 0 ? c : c.involution();
      for (std::int64_t n = 0; n < (k >= 0 ? k : -k); ++n) {
        middle = middle * step;
      }
    }
    return _source.path(qi) * middle * _source.path(qj).involution();
  }

  namespace {
    // Index of each block path, for factoring e q_j = q_i c^k.
    std::map<Path, std::size_t> index_paths(ClassBlock const& block) {
      std::map<Path, std::size_t> index;
      for (std::size_t i = 0; i < block.paths.size(); ++i) {
        index.emplace(block.paths[i], i);
      }
      return index;
    }
  }  // namespace

  ClassificationMap build_generator_map(CLObject const& obj, Field const& field) {
    auto        classification = classify_blocks(obj);
    auto const& g              = obj.graph();

    std::vector<GradedMatrixAlgebra> algebras;
    for (auto const& b : classification.blocks) {
      algebras.push_back(b.algebra(field));
    }
    auto target = std::make_shared<MatricialAlgebra const>(std::move(algebras), field);
    ClassificationMap psi(CLAlgebra(obj, field), std::move(classification), target);
    auto const&       blocks = psi._classification.blocks;

    auto const zero = MatricialElement::zero(target);
    psi._images.vertex_images.assign(g.vertex_count(), zero);
    psi._images.edge_images.assign(g.edge_count(), zero);

    for (std::size_t b = 0; b < blocks.size(); ++b) {
      auto const& block = blocks[b];
      auto const  index = index_paths(block);
      std::optional<Path> cycle_path;
      if (block.cycle) {
        cycle_path = block.cycle->as_path_from(g, block.target);
      }
      for (std::size_t j = 0; j < block.paths.size(); ++j) {
        auto const& qj = block.paths[j];
        *psi._images.vertex_images[qj.source] += MatricialElement::unit(target, b, j, j);
        for (auto e : g.in_edges(qj.source)) {
          auto const w = Path::edge(g, e).concat(qj);
          if (auto it = index.find(w); it != index.end()) {
            *psi._images.edge_images[e] += MatricialElement::unit(target, b, it->second, j);
          } else if (cycle_path && w == *cycle_path) {
            auto const base = index.at(Path::trivial(block.target));
            *psi._images.edge_images[e] += MatricialElement::unit(target, b, base, j, 1);
          } else if (g.source(e) != block.target) {
            throw ClassificationBug("cannot factor " + w.to_string(g) + " through block paths");
          }
        }
      }
    }

    psi._axioms = check_generator_map(obj, psi._images);
    if (!psi._axioms.ok()) {
      throw ClassificationBug("generator map fails " + psi._axioms.failures.front());
    }

    // Surjectivity onto matrix units, with the expected degrees.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      auto const&               block = blocks[b];
      std::vector<std::int64_t> powers{0};
      if (block.kind == BlockKind::laurent) {
        powers = {-1, 0, 1};
      }
      for (std::size_t i = 0; i < block.paths.size(); ++i) {
        for (std::size_t j = 0; j < block.paths.size(); ++j) {
          for (auto k : powers) {
            auto const x = psi.unit_preimage(b, i, j, k);
            auto const degree = static_cast<std::int64_t>(block.paths[i].length())
                                + k * block.period
                                - static_cast<std::int64_t>(block.paths[j].length());
            auto const img = psi.image(x);
            if (!x.is_homogeneous(degree) || !img.is_homogeneous(degree)
                || !(img == MatricialElement::unit(target, b, i, j, k))) {
              throw ClassificationBug("matrix unit (" + std::to_string(i + 1) + ","
                                      + std::to_string(j + 1) + ") t^" + std::to_string(k)
                                      + " of block " + std::to_string(b + 1)
                                      + " is not the image of " + x.to_string());
            }
            ++psi._units_checked;
          }
        }
      }
    }
    return psi;
  }

  ClassificationMap build_generator_map(CLObject const&           obj,
                                        MatricialSignature const& sig,
                                        Field const&              field) {
    if (!(classify(obj) == sig.canonical())) {
      throw std::invalid_argument("signature " + sig.to_string() + " is not the signature of the object");
    }
    return build_generator_map(obj, field);
  }

  ////////////////////////////////////////////////////////////////////////
  // Directed systems
  ////////////////////////////////////////////////////////////////////////

  AnnotatedSystem classify_system(CLObject const& obj, Field const& field, std::size_t max_bilength) {
    AnnotatedSystem result;
    auto const      psi = build_generator_map(obj, field);
    auto const&     E   = obj.graph();
    result.system       = subobject_system(obj);

    for (auto const& node : result.system.nodes) {
      SystemNode annotated;
      annotated.signature = classify(node.object);
      auto const&     F = node.object.graph();
      CLAlgebra const sub(node.object, field);

      // Carry each normal-form monomial of the subobject to the top object.
      auto lift = [&](Path const& p) {
        if (p.is_trivial()) {
          return Path::trivial(E.vertex(F.vertex_id(p.source)));
        }
        std::vector<EdgeIndex> edges;
        for (auto e : p.edges) {
          edges.push_back(E.edge(F.edge_id(e)));
        }
        return Path::from_edges(E, std::move(edges));
      };
      SparseEchelon<MatricialElement::Key> echelon;
      bool                                 independent = true;
      for (auto const& m : sub.normal_monomials(max_bilength, max_bilength)) {
        if (m.bilength() > max_bilength) {
          continue;
        }
        auto const x = psi.source().monomial(lift(m.p), lift(m.q));
        independent  = echelon.add(psi.image(x).coordinates()) && independent;
        ++annotated.monomials_checked;
      }
      annotated.injective = independent;
      result.nodes.push_back(std::move(annotated));
    }
    return result;
  }

}  // namespace clpa
