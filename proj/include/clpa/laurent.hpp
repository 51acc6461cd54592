#ifndef CLPA_LAURENT_HPP_
#define CLPA_LAURENT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "clpa/scalar.hpp"

namespace clpa {

  /// An element of K[t, t^-1] where t carries degree `period`.
  ///
  /// Stands for K[x^n, x^-n] with t = x^n. Only nonzero coefficients are
  /// stored, so the homogeneous term a t^k has degree k * period. Arithmetic
  /// between different periods throws PeriodMismatch.
  class LaurentPoly {
   public:
    using term_map = std::map<std::int64_t, Scalar>;

    explicit LaurentPoly(std::int64_t period = 1);
    LaurentPoly(std::int64_t period, term_map terms);

    [[nodiscard]] static LaurentPoly constant(std::int64_t period, Scalar c);
    [[nodiscard]] static LaurentPoly monomial(std::int64_t period,
                                              std::int64_t exponent,
                                              Scalar c);

    // Parses "3*t^-2 + 1 + t^5". The period is supplied by context.
    [[nodiscard]] static LaurentPoly parse(std::string_view text,
                                           std::int64_t period,
                                           Field const& field);

    [[nodiscard]] std::int64_t period() const noexcept {
      return _period;
    }
    [[nodiscard]] term_map const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }
    // Coefficient of t^k (zero of `field` when absent).
    [[nodiscard]] Scalar coefficient(std::int64_t k, Field const& field) const;

    // Is every term of degree `degree` (exponent * period)?  Zero counts.
    [[nodiscard]] bool is_homogeneous_of_degree(std::int64_t degree) const;
    // Is this a constant (only t^0 present)?  Zero counts.
    [[nodiscard]] bool is_constant() const;

    // (sum a_k t^k)* = sum a_k* t^-k.
    [[nodiscard]] LaurentPoly involution() const;
    // Keeps only the terms of degree `degree`.
    [[nodiscard]] LaurentPoly project_degree(std::int64_t degree) const;

    [[nodiscard]] std::string to_string() const;

    LaurentPoly& operator+=(LaurentPoly const& rhs);
    LaurentPoly& operator-=(LaurentPoly const& rhs);
    LaurentPoly& operator*=(Scalar const& c);

    friend LaurentPoly operator+(LaurentPoly lhs, LaurentPoly const& rhs) {
      return lhs += rhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, LaurentPoly const& rhs) {
      return lhs -= rhs;
    }
    friend LaurentPoly operator*(LaurentPoly const& lhs, LaurentPoly const& rhs);
    friend LaurentPoly operator*(LaurentPoly lhs, Scalar const& c) {
      return lhs *= c;
    }
    LaurentPoly operator-() const;

    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

   private:
    void check_period(LaurentPoly const& rhs) const;
    void add_term(std::int64_t k, Scalar const& c);

    std::int64_t _period;
    term_map     _terms;
  };

  /// Convolution of exponent maps; throws PeriodMismatch on unequal periods.
  [[nodiscard]] LaurentPoly laurent_mul(LaurentPoly const& f,
                                        LaurentPoly const& g);
  [[nodiscard]] LaurentPoly laurent_involution(LaurentPoly const& f);

  /// Does f divide g in K[t, t^-1]?  Units of the Laurent ring are the
  /// nonzero monomials, so this reduces to polynomial division after
  /// shifting both lowest exponents to zero. f must be nonzero.
  [[nodiscard]] bool laurent_divides(LaurentPoly const& f,
                                     LaurentPoly const& g);

}  // namespace clpa

#endif  // CLPA_LAURENT_HPP_
