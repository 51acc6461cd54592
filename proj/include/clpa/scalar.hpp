#ifndef CLPA_SCALAR_HPP_
#define CLPA_SCALAR_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace clpa {

  class Scalar;

  /// The coefficient field: the rationals or GF(p) for a prime p <= 2^31.
  ///
  /// The involution on the field is always the identity.
  class Field {
   public:
    static constexpr std::uint64_t max_prime = std::uint64_t{1} << 31;

    Field() = default;

    [[nodiscard]] static Field rationals() noexcept {
      return Field();
    }
    // Throws std::invalid_argument unless p is a prime <= max_prime.
    [[nodiscard]] static Field prime(std::uint64_t p);
    // Accepts "q" or "gf:<p>".
    [[nodiscard]] static Field parse(std::string_view text);

    [[nodiscard]] bool is_rational() const noexcept {
      return _modulus == 0;
    }
    [[nodiscard]] std::uint64_t characteristic() const noexcept {
      return _modulus;
    }

    [[nodiscard]] Scalar zero() const;
    [[nodiscard]] Scalar one() const;
    [[nodiscard]] Scalar from_int(std::int64_t n) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Field const&, Field const&) = default;

   private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : _modulus(p) {}
    std::uint64_t _modulus = 0;
  };

  /// An exact element of a Field.
  ///
  /// Rationals are kept reduced with positive denominator; prime-field values
  /// lie in [0, p). Arithmetic between different fields throws
  /// FieldMismatch.
  class Scalar {
    friend class Field;

    struct Mod {
      std::uint64_t value;
      std::uint64_t modulus;
    };

   public:
    Scalar() = default;

    [[nodiscard]] static Scalar rational(std::int64_t num,
                                         std::int64_t den = 1);
    [[nodiscard]] static Scalar rational(mpq_class q);
    [[nodiscard]] static Scalar mod(std::int64_t value, std::uint64_t p);

    // Parses an integer, "a/b", or "k mod p". Bare integers and fractions
    // are mapped into `field`.
    [[nodiscard]] static Scalar parse(std::string_view text,
                                      Field const& field);

    [[nodiscard]] Field field() const;

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;

    [[nodiscard]] Scalar inverse() const;
    // Identity involution on K.
    [[nodiscard]] Scalar involution() const {
      return *this;
    }

    // Rational numerator/denominator; only valid on the rationals.
    [[nodiscard]] mpq_class const& as_rational() const;
    // Residue in [0, p); only valid on a prime field.
    [[nodiscard]] std::uint64_t residue() const;

    // "5/6", "-3", "2 mod 5"; with bare = true a prime-field value prints
    // without its modulus.
    [[nodiscard]] std::string to_string(bool bare = false) const;

    Scalar& operator+=(Scalar const& rhs);
    Scalar& operator-=(Scalar const& rhs);
    Scalar& operator*=(Scalar const& rhs);
    Scalar& operator/=(Scalar const& rhs);

    friend Scalar operator+(Scalar lhs, Scalar const& rhs) {
      return lhs += rhs;
    }
    friend Scalar operator-(Scalar lhs, Scalar const& rhs) {
      return lhs -= rhs;
    }
    friend Scalar operator*(Scalar lhs, Scalar const& rhs) {
      return lhs *= rhs;
    }
    friend Scalar operator/(Scalar lhs, Scalar const& rhs) {
      return lhs /= rhs;
    }
    Scalar operator-() const;

    friend bool operator==(Scalar const& lhs, Scalar const& rhs);

   private:
    void check_same_field(Scalar const& rhs) const;

    std::variant<mpq_class, Mod> _value;
  };

  std::ostream& operator<<(std::ostream& os, Scalar const& x);

  enum class ArithOp { add, sub, mul, div };

  /// Dispatches one of the four field operations.
  [[nodiscard]] Scalar scalar_arith(Scalar const& a,
                                    Scalar const& b,
                                    ArithOp op);

}  // namespace clpa

#endif  // CLPA_SCALAR_HPP_
