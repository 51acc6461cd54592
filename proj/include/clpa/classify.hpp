#ifndef CLPA_CLASSIFY_HPP_
#define CLPA_CLASSIFY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clpa/cl_algebra.hpp"
#include "clpa/graded_matrix.hpp"
#include "clpa/graph.hpp"

namespace clpa {

  struct NoExitCheck {
    bool                     ok = true;
    std::vector<std::string> violations;
  };

  /// Is (E, S) a no-exit object: E is no-exit and every vertex on a cycle
  /// lies in S?
  [[nodiscard]] NoExitCheck check_no_exit_object(CLObject const& obj);

  /// One matrix block of the classification, before canonicalization.
  ///
  /// Field blocks belong to a sink or to a vertex of R(E) - S; Laurent
  /// blocks belong to a cycle and target its smallest vertex. `paths` are
  /// the paths ending at the target that do not meet it earlier, sorted by
  /// (length, edge ids); the shifts are their lengths.
  struct ClassBlock {
    BlockKind            kind   = BlockKind::field;
    Vertex               target = 0;
    std::optional<Cycle> cycle;
    std::int64_t         period = 1;
    std::vector<Path>    paths;

    [[nodiscard]] std::vector<std::int64_t> shifts() const;
    [[nodiscard]] GradedMatrixAlgebra       algebra(Field const& field) const;
  };

  struct Classification {
    std::vector<ClassBlock> blocks;     // field blocks by target, then cycles
    MatricialSignature      raw;        // block data in the order above
    MatricialSignature      signature;  // canonical form of raw
  };

  /// The blocks of a no-exit object. Throws NotNoExitObject when
  /// check_no_exit_object fails.
  [[nodiscard]] Classification classify_blocks(CLObject const& obj);

  /// The canonical matricial signature of a no-exit object.
  [[nodiscard]] MatricialSignature classify(CLObject const& obj);

  /// The generator map Psi : CL_K(E, S) -> direct sum of the raw blocks,
  /// together with the record of its verification.
  ///
  /// Psi(v) is the sum of the diagonal units e_ii over the block paths q_i
  /// starting at v. Psi(e) is the sum of e_ij t^k over the block paths q_j
  /// starting at r(e) such that e q_j = q_i c^k, where k = 1 only when e
  /// leaves the base of the block's cycle c.
  class ClassificationMap {
   public:
    [[nodiscard]] CLAlgebra const& source() const noexcept {
      return _source;
    }
    [[nodiscard]] Classification const& classification() const noexcept {
      return _classification;
    }
    [[nodiscard]] std::shared_ptr<MatricialAlgebra const> const& target() const noexcept {
      return _target;
    }
    [[nodiscard]] GeneratorMap<MatricialElement> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] AxiomReport const& axioms() const noexcept {
      return _axioms;
    }
    // Matrix units (with t^-1 and t for Laurent blocks) checked to be
    // images of q_i r q_j^* of the expected degree.
    [[nodiscard]] std::size_t units_checked() const noexcept {
      return _units_checked;
    }

    [[nodiscard]] MatricialElement image(AlgebraElement const& x) const;
    [[nodiscard]] MatricialElement image(Path const& p) const;

    // The element q_i r q_j^* of block b mapping to e_ij t^k, where r is
    // the target vertex (sink), the target minus the sum of ee^* over its
    // edges (vertex of R(E) - S), or c^k (cycle base).
    [[nodiscard]] AlgebraElement unit_preimage(std::size_t  b,
                                               std::size_t  i,
                                               std::size_t  j,
                                               std::int64_t k = 0) const;

   private:
    friend ClassificationMap build_generator_map(CLObject const& obj, Field const& field);

    ClassificationMap(CLAlgebra source, Classification c, std::shared_ptr<MatricialAlgebra const> t)
        : _source(std::move(source)), _classification(std::move(c)), _target(std::move(t)) {}

    CLAlgebra                               _source;
    Classification                          _classification;
    std::shared_ptr<MatricialAlgebra const> _target;
    GeneratorMap<MatricialElement>          _images;
    AxiomReport                             _axioms;
    std::size_t                             _units_checked = 0;
  };

  /// Builds Psi and verifies it: the relations hold at the images, every
  /// generator image has the right degree, and every matrix unit (also
  /// times t and t^-1 for Laurent blocks) is the image of an element of
  /// the expected degree. Throws ClassificationBug if any check fails, and
  /// NotNoExitObject when the object is not a no-exit object.
  [[nodiscard]] ClassificationMap build_generator_map(CLObject const& obj,
                                                      Field const&    field = Field::rationals());

  /// As above, but first checks that `sig` is the signature of `obj`
  /// (throws std::invalid_argument otherwise).
  [[nodiscard]] ClassificationMap build_generator_map(CLObject const&           obj,
                                                      MatricialSignature const& sig,
                                                      Field const& field = Field::rationals());

  struct SystemNode {
    MatricialSignature signature;
    std::size_t        monomials_checked = 0;
    // Images in the top object of the normal-form monomials of bilength
    // <= 3 of this node are linearly independent.
    bool injective = false;
  };

  struct AnnotatedSystem {
    SubobjectSystem         system;
    std::vector<SystemNode> nodes;  // parallel to system.nodes
  };

  /// Every complete subobject annotated with its signature, and the
  /// inclusion into the top object checked injective on the normal-form
  /// monomials with |p| + |q| <= max_bilength. Injectivity of each
  /// composite into the top implies injectivity of every connecting map.
  [[nodiscard]] AnnotatedSystem classify_system(CLObject const&  obj,
                                                Field const&     field        = Field::rationals(),
                                                std::size_t      max_bilength = 3);

}  // namespace clpa

#endif  // CLPA_CLASSIFY_HPP_
