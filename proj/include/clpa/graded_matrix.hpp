#ifndef CLPA_GRADED_MATRIX_HPP_
#define CLPA_GRADED_MATRIX_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "clpa/laurent.hpp"
#include "clpa/scalar.hpp"

namespace clpa {

  enum class BlockKind { field, laurent };

  /// The shifted matrix algebra M_n(K)(g) or M_n(K[t, t^-1])(g), where t
  /// has degree `period`.
  ///
  /// An element is homogeneous of degree d when its (i, j) entry has degree
  /// d + g(j) - g(i). For the field kind the period is reported as 1 and
  /// entries are constants.
  class GradedMatrixAlgebra {
   public:
    [[nodiscard]] static GradedMatrixAlgebra field_block(std::vector<std::int64_t> shifts,
                                                         Field field = Field::rationals());
    [[nodiscard]] static GradedMatrixAlgebra laurent_block(std::int64_t              period,
                                                           std::vector<std::int64_t> shifts,
                                                           Field field = Field::rationals());

    [[nodiscard]] BlockKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _shifts.size();
    }
    [[nodiscard]] std::int64_t period() const noexcept {
      return _period;
    }
    [[nodiscard]] std::vector<std::int64_t> const& shifts() const noexcept {
      return _shifts;
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }
    // Degree of the matrix unit e_ij t^k.
    [[nodiscard]] std::int64_t unit_degree(std::size_t i, std::size_t j, std::int64_t k = 0) const {
      return _shifts.at(i) - _shifts.at(j) + k * _period;
    }
    // The largest minus the smallest shift.
    [[nodiscard]] std::int64_t spread() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(GradedMatrixAlgebra const&, GradedMatrixAlgebra const&) = default;

   private:
    GradedMatrixAlgebra(BlockKind k, std::int64_t period, std::vector<std::int64_t> shifts, Field f);

    BlockKind                 _kind   = BlockKind::field;
    std::int64_t              _period = 1;
    std::vector<std::int64_t> _shifts;
    Field                     _field;
  };

  /// dim_K of the degree-d component.
  ///
  /// Field kind: #{(i, j) : g(i) - g(j) = d}. Laurent kind with period n:
  /// #{(i, j) : d = g(i) - g(j) mod n}.
  [[nodiscard]] std::size_t component_dim(GradedMatrixAlgebra const& A, std::int64_t d);

  /// An element of a GradedMatrixAlgebra. Entries of a field-kind matrix
  /// are constant Laurent polynomials of period 1.
  class GradedMatrix {
   public:
    explicit GradedMatrix(std::shared_ptr<GradedMatrixAlgebra const> algebra);

    [[nodiscard]] static GradedMatrix zero(std::shared_ptr<GradedMatrixAlgebra const> algebra);
    [[nodiscard]] static GradedMatrix identity(std::shared_ptr<GradedMatrixAlgebra const> algebra);
    // e_ij t^k (k must be 0 for the field kind).
    [[nodiscard]] static GradedMatrix unit(std::shared_ptr<GradedMatrixAlgebra const> algebra,
                                           std::size_t                                i,
                                           std::size_t                                j,
                                           std::int64_t                               k = 0);

    [[nodiscard]] GradedMatrixAlgebra const& algebra() const noexcept {
      return *_algebra;
    }
    [[nodiscard]] std::shared_ptr<GradedMatrixAlgebra const> const& algebra_ptr() const noexcept {
      return _algebra;
    }
    [[nodiscard]] LaurentPoly const& entry(std::size_t i, std::size_t j) const {
      return _entries.at(i * size() + j);
    }
    // Throws AlgebraMismatch on a non-constant entry for the field kind.
    void set_entry(std::size_t i, std::size_t j, LaurentPoly value);
    [[nodiscard]] std::size_t size() const noexcept {
      return _algebra->size();
    }

    [[nodiscard]] bool is_zero() const;
    // Every entry (i, j) has only terms of degree d + g(j) - g(i).
    [[nodiscard]] bool is_homogeneous(std::int64_t d) const;
    // *-transpose: (r_ij)^* = (r_ji^*).
    [[nodiscard]] GradedMatrix involution() const;
    // Keeps the parts of the entries of degree d + g(j) - g(i).
    [[nodiscard]] GradedMatrix component_project(std::int64_t d) const;

    [[nodiscard]] std::string to_string() const;

    GradedMatrix& operator+=(GradedMatrix const& rhs);
    GradedMatrix& operator-=(GradedMatrix const& rhs);
    GradedMatrix& operator*=(Scalar const& c);

    friend GradedMatrix operator+(GradedMatrix lhs, GradedMatrix const& rhs) {
      return lhs += rhs;
    }
    friend GradedMatrix operator-(GradedMatrix lhs, GradedMatrix const& rhs) {
      return lhs -= rhs;
    }
    friend GradedMatrix operator*(GradedMatrix lhs, Scalar const& c) {
      return lhs *= c;
    }
    // Throws AlgebraMismatch unless both factors live in equal algebras.
    friend GradedMatrix operator*(GradedMatrix const& lhs, GradedMatrix const& rhs);
    friend bool         operator==(GradedMatrix const& lhs, GradedMatrix const& rhs);

   private:
    void check_algebra(GradedMatrix const& rhs) const;

    std::shared_ptr<GradedMatrixAlgebra const> _algebra;
    std::vector<LaurentPoly>                   _entries;  // row-major
  };

  [[nodiscard]] GradedMatrix graded_mat_mul(GradedMatrix const& a, GradedMatrix const& b);
  [[nodiscard]] GradedMatrix involution(GradedMatrix const& a);
  [[nodiscard]] GradedMatrix component_project(GradedMatrix const& a, std::int64_t d);

  ////////////////////////////////////////////////////////////////////////
  // Signatures
  ////////////////////////////////////////////////////////////////////////

  struct FieldBlock {
    std::size_t               size = 0;
    std::vector<std::int64_t> shifts;

    friend auto operator<=>(FieldBlock const&, FieldBlock const&) = default;
  };

  struct LaurentBlock {
    std::size_t               size   = 0;
    std::int64_t              period = 1;
    std::vector<std::int64_t> shifts;

    friend auto operator<=>(LaurentBlock const&, LaurentBlock const&) = default;
  };

  /// The classification invariant: a direct sum of shifted matrix algebras
  /// over K and over K[t, t^-1].
  ///
  /// Canonical form: each field shift vector is sorted and translated to
  /// start at 0; each Laurent shift vector is reduced modulo its period and
  /// replaced by the lexicographically least sorted vector among its
  /// translates modulo the period; blocks are sorted.
  struct MatricialSignature {
    std::vector<FieldBlock>   field_blocks;
    std::vector<LaurentBlock> laurent_blocks;

    [[nodiscard]] MatricialSignature canonical() const;
    // E.g. "M2(K)(0,1)^2 + M1(K)(0) + M1(K[x,x^-1])(0)".
    [[nodiscard]] std::string to_string() const;
    // The graded matrix algebras of the blocks, field blocks first.
    [[nodiscard]] std::vector<GradedMatrixAlgebra> algebras(Field const& field) const;

    friend bool operator==(MatricialSignature const&, MatricialSignature const&) = default;
  };

  [[nodiscard]] std::vector<std::int64_t> canonical_field_shifts(std::vector<std::int64_t> s);
  [[nodiscard]] std::vector<std::int64_t> canonical_laurent_shifts(std::vector<std::int64_t> s,
                                                                   std::int64_t period);

  ////////////////////////////////////////////////////////////////////////
  // Graded isomorphism
  ////////////////////////////////////////////////////////////////////////

  enum class Verdict { yes, no, unknown };

  [[nodiscard]] std::string to_string(Verdict v);

  /// A graded isomorphism A -> B sending e_ij t^k to
  /// e_{perm(i) perm(j)} t^{k + offset(j) - offset(i)}, where
  /// g_B(perm(i)) = g_A(i) + translation + offset(i) * period.
  struct IsoWitness {
    std::vector<std::size_t>  perm;
    std::int64_t              translation = 0;
    std::vector<std::int64_t> offset;  // zero for the field kind
    bool                      verified = false;
  };

  /// Two algebras with different dimensions of the degree-delta component.
  struct IsoCertificate {
    std::int64_t delta = 0;
    std::size_t  dim_a = 0;
    std::size_t  dim_b = 0;
    std::int64_t window = 0;  // all |delta| <= window were scanned
  };

  struct IsoDecision {
    Verdict                       verdict = Verdict::unknown;
    std::optional<IsoWitness>     witness;
    std::optional<IsoCertificate> certificate;
    std::int64_t                  window = 0;
  };

  /// Yes with a checked map when kind, size, and period agree and the
  /// shifts agree up to permutation and a uniform translation (modulo the
  /// period for the Laurent kind); No when some component dimension
  /// differs within the window |delta| <= 2 * spread + period; otherwise
  /// Unknown. Throws FieldMismatch for different base fields.
  [[nodiscard]] IsoDecision decide_graded_iso(GradedMatrixAlgebra const& A,
                                              GradedMatrixAlgebra const& B);

  /// Applies the witness map to a matrix of A.
  [[nodiscard]] GradedMatrix apply_iso(IsoWitness const&                          w,
                                       GradedMatrix const&                        x,
                                       std::shared_ptr<GradedMatrixAlgebra const> B);

  /// Exhaustive search over GL_n(GF(2)) for a conjugation mapping every
  /// homogeneous component of A into the same component of B (checked on
  /// matrix units). Field kind over GF(2) only; throws
  /// OracleScaleExceeded when n > 3 and FieldMismatch otherwise.
  [[nodiscard]] bool brute_force_iso_oracle(GradedMatrixAlgebra const& A,
                                            GradedMatrixAlgebra const& B);

  /// Block-wise comparison of two signatures. Different block counts give
  /// No; a perfect matching of Yes blocks gives Yes; no perfect matching
  /// even counting Unknown pairs as possible gives No; otherwise Unknown.
  struct BlockMatch {
    std::size_t a = 0;  // index into a.algebras()
    std::size_t b = 0;  // index into b.algebras()
    IsoDecision decision;
  };

  struct SignatureIsoDecision {
    Verdict                 verdict = Verdict::unknown;
    std::string             reason;
    std::vector<BlockMatch> matching;  // the Yes matching when verdict is Yes
  };

  [[nodiscard]] SignatureIsoDecision decide_signature_iso(MatricialSignature const& a,
                                                          MatricialSignature const& b,
                                                          Field const&              field);

  ////////////////////////////////////////////////////////////////////////
  // Direct sums
  ////////////////////////////////////////////////////////////////////////

  /// A finite direct sum of GradedMatrixAlgebra blocks, in a fixed order.
  class MatricialAlgebra {
   public:
    MatricialAlgebra(std::vector<GradedMatrixAlgebra> blocks, Field field);

    [[nodiscard]] std::size_t block_count() const noexcept {
      return _blocks.size();
    }
    [[nodiscard]] std::shared_ptr<GradedMatrixAlgebra const> const& block(std::size_t b) const {
      return _blocks.at(b);
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }

   private:
    std::vector<std::shared_ptr<GradedMatrixAlgebra const>> _blocks;
    Field                                                   _field;
  };

  /// An element of a MatricialAlgebra: one matrix per block.
  class MatricialElement {
   public:
    MatricialElement() = default;
    explicit MatricialElement(std::shared_ptr<MatricialAlgebra const> algebra);

    [[nodiscard]] static MatricialElement zero(std::shared_ptr<MatricialAlgebra const> algebra);
    // e_ij t^k in block b.
    [[nodiscard]] static MatricialElement unit(std::shared_ptr<MatricialAlgebra const> algebra,
                                               std::size_t                             b,
                                               std::size_t                             i,
                                               std::size_t                             j,
                                               std::int64_t                            k = 0);

    [[nodiscard]] MatricialAlgebra const& algebra() const noexcept {
      return *_algebra;
    }
    [[nodiscard]] GradedMatrix const& block(std::size_t b) const {
      return _blocks.at(b);
    }
    [[nodiscard]] GradedMatrix& block(std::size_t b) {
      return _blocks.at(b);
    }

    [[nodiscard]] bool         is_zero() const;
    [[nodiscard]] bool         is_homogeneous(std::int64_t d) const;
    [[nodiscard]] MatricialElement involution() const;
    [[nodiscard]] std::string  to_string() const;

    // Nonzero coefficients keyed by (block, row, column, exponent).
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>;
    [[nodiscard]] std::map<Key, Scalar> coordinates() const;

    MatricialElement& operator+=(MatricialElement const& rhs);
    MatricialElement& operator-=(MatricialElement const& rhs);
    MatricialElement& operator*=(Scalar const& c);

    friend MatricialElement operator+(MatricialElement lhs, MatricialElement const& rhs) {
      return lhs += rhs;
    }
    friend MatricialElement operator-(MatricialElement lhs, MatricialElement const& rhs) {
      return lhs -= rhs;
    }
    friend MatricialElement operator*(MatricialElement lhs, Scalar const& c) {
      return lhs *= c;
    }
    friend MatricialElement operator*(MatricialElement const& lhs, MatricialElement const& rhs);
    friend bool             operator==(MatricialElement const& lhs, MatricialElement const& rhs);

   private:
    void check_algebra(MatricialElement const& rhs) const;

    std::shared_ptr<MatricialAlgebra const> _algebra;
    std::vector<GradedMatrix>               _blocks;
  };

  [[nodiscard]] inline MatricialElement star(MatricialElement const& x) {
    return x.involution();
  }
  [[nodiscard]] inline bool is_zero(MatricialElement const& x) {
    return x.is_zero();
  }
  [[nodiscard]] inline bool is_homogeneous(MatricialElement const& x, std::int64_t d) {
    return x.is_homogeneous(d);
  }

}  // namespace clpa

#endif  // CLPA_GRADED_MATRIX_HPP_
