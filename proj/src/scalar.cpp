#include "clpa/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "clpa/error.hpp"

namespace clpa {

  namespace {
    bool is_prime(std::uint64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::uint64_t reduce_mod(std::int64_t value, std::uint64_t p) {
      auto const m = static_cast<std::int64_t>(p);
      auto r       = value % m;
      if (r < 0) {
        r += m;
      }
      return static_cast<std::uint64_t>(r);
    }

    std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
      std::uint64_t result = 1 % p;
      base %= p;
      while (e > 0) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return result;
    }

    // Reduces a rational into GF(p); throws if p divides the denominator.
    std::uint64_t rational_mod(mpq_class const& q, std::uint64_t p) {
      mpz_class num = q.get_num() % p;
      if (num < 0) {
        num += p;
      }
      mpz_class den = q.get_den() % p;
      if (den == 0) {
        throw DivisionByZero("denominator vanishes modulo " + std::to_string(p));
      }
      auto const n = num.get_ui();
      auto const d = den.get_ui();
      return n * pow_mod(d, p - 2, p) % p;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Field
  ////////////////////////////////////////////////////////////////////////

  Field Field::prime(std::uint64_t p) {
    if (p > max_prime || !is_prime(p)) {
      throw std::invalid_argument("not a supported prime: " + std::to_string(p));
    }
    return Field(p);
  }

  Field Field::parse(std::string_view text) {
    text = trim(text);
    if (text == "q" || text == "Q") {
      return rationals();
    }
    if (text.substr(0, 3) == "gf:") {
      std::uint64_t p    = 0;
      auto const    body = text.substr(3);
      auto [ptr, ec]     = std::from_chars(body.data(), body.data() + body.size(), p);
      if (ec != std::errc() || ptr != body.data() + body.size()) {
        throw std::invalid_argument("bad field: " + std::string(text));
      }
      return prime(p);
    }
    throw std::invalid_argument("bad field: " + std::string(text));
  }

  Scalar Field::zero() const {
    return from_int(0);
  }

  Scalar Field::one() const {
    return from_int(1);
  }

  Scalar Field::from_int(std::int64_t n) const {
    if (is_rational()) {
      return Scalar::rational(n);
    }
    Scalar s;
    s._value = Scalar::Mod{reduce_mod(n, _modulus), _modulus};
    return s;
  }

  std::string Field::to_string() const {
    return is_rational() ? "q" : "gf:" + std::to_string(_modulus);
  }

  ////////////////////////////////////////////////////////////////////////
  // Scalar
  ////////////////////////////////////////////////////////////////////////

  Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw DivisionByZero("zero denominator");
    }
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return rational(std::move(q));
  }

  Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s._value = std::move(q);
    return s;
  }

  Scalar Scalar::mod(std::int64_t value, std::uint64_t p) {
    if (p > Field::max_prime || !is_prime(p)) {
      throw std::invalid_argument("not a supported prime: " + std::to_string(p));
    }
    Scalar s;
    s._value = Mod{reduce_mod(value, p), p};
    return s;
  }

  Scalar Scalar::parse(std::string_view text, Field const& field) {
    text = trim(text);
    if (text.empty()) {
      throw ParseError("empty scalar", 0);
    }
    auto parse_int = [&text](std::string_view s, std::size_t offset) {
      s = trim(s);
      mpz_class z;
      if (s.empty() || z.set_str(std::string(s), 10) != 0) {
        throw ParseError("bad integer '" + std::string(s) + "' in scalar '"
                             + std::string(text) + "'",
                         offset);
      }
      return z;
    };
    if (auto pos = text.find(" mod "); pos != std::string_view::npos) {
      auto const k = parse_int(text.substr(0, pos), 0);
      auto const p = parse_int(text.substr(pos + 5), pos + 5);
      if (!p.fits_ulong_p()) {
        throw ParseError("modulus too large", pos + 5);
      }
      std::uint64_t const modulus = p.get_ui();
      if (field.characteristic() != modulus) {
        throw FieldMismatch("scalar modulus " + std::to_string(modulus)
                            + " does not match field " + field.to_string());
      }
      mpz_class r = k % p;
      if (r < 0) {
        r += p;
      }
      return mod(static_cast<std::int64_t>(r.get_ui()), modulus);
    }
    mpq_class q;
    if (auto pos = text.find('/'); pos != std::string_view::npos) {
      auto const num = parse_int(text.substr(0, pos), 0);
      auto const den = parse_int(text.substr(pos + 1), pos + 1);
      if (den == 0) {
        throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
      }
      q = mpq_class(num, den);
      q.canonicalize();
    } else {
      q = mpq_class(parse_int(text, 0));
    }
    if (field.is_rational()) {
      return rational(std::move(q));
    }
    Scalar s;
    s._value = Mod{rational_mod(q, field.characteristic()), field.characteristic()};
    return s;
  }

  Field Scalar::field() const {
    if (auto const* m = std::get_if<Mod>(&_value)) {
      return Field(m->modulus);
    }
    return Field::rationals();
  }

  bool Scalar::is_zero() const noexcept {
    if (auto const* m = std::get_if<Mod>(&_value)) {
      return m->value == 0;
    }
    return sgn(std::get<mpq_class>(_value)) == 0;
  }

  bool Scalar::is_one() const noexcept {
    if (auto const* m = std::get_if<Mod>(&_value)) {
      return m->value == 1;
    }
    return std::get<mpq_class>(_value) == 1;
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw DivisionByZero("inverse of zero");
    }
    Scalar s = *this;
    if (auto* m = std::get_if<Mod>(&s._value)) {
      m->value = pow_mod(m->value, m->modulus - 2, m->modulus);
    } else {
      auto& q = std::get<mpq_class>(s._value);
      q       = 1 / q;
      q.canonicalize();
    }
    return s;
  }

  mpq_class const& Scalar::as_rational() const {
    if (auto const* q = std::get_if<mpq_class>(&_value)) {
      return *q;
    }
    throw FieldMismatch("scalar is not rational");
  }

  std::uint64_t Scalar::residue() const {
    if (auto const* m = std::get_if<Mod>(&_value)) {
      return m->value;
    }
    throw FieldMismatch("scalar is not in a prime field");
  }

  std::string Scalar::to_string(bool bare) const {
    if (auto const* m = std::get_if<Mod>(&_value)) {
      auto s = std::to_string(m->value);
      return bare ? s : s + " mod " + std::to_string(m->modulus);
    }
    return std::get<mpq_class>(_value).get_str();
  }

  void Scalar::check_same_field(Scalar const& rhs) const {
    auto const* a = std::get_if<Mod>(&_value);
    auto const* b = std::get_if<Mod>(&rhs._value);
    if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
      throw FieldMismatch("scalars over " + field().to_string() + " and "
                          + rhs.field().to_string());
    }
  }

  Scalar& Scalar::operator+=(Scalar const& rhs) {
    check_same_field(rhs);
    if (auto* m = std::get_if<Mod>(&_value)) {
      m->value = (m->value + std::get<Mod>(rhs._value).value) % m->modulus;
    } else {
      std::get<mpq_class>(_value) += std::get<mpq_class>(rhs._value);
    }
    return *this;
  }

  Scalar& Scalar::operator-=(Scalar const& rhs) {
    check_same_field(rhs);
    if (auto* m = std::get_if<Mod>(&_value)) {
      m->value = (m->value + m->modulus - std::get<Mod>(rhs._value).value) % m->modulus;
    } else {
      std::get<mpq_class>(_value) -= std::get<mpq_class>(rhs._value);
    }
    return *this;
  }

  Scalar& Scalar::operator*=(Scalar const& rhs) {
    check_same_field(rhs);
    if (auto* m = std::get_if<Mod>(&_value)) {
      m->value = m->value * std::get<Mod>(rhs._value).value % m->modulus;
    } else {
      std::get<mpq_class>(_value) *= std::get<mpq_class>(rhs._value);
    }
    return *this;
  }

  Scalar& Scalar::operator/=(Scalar const& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
  }

  Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (auto* m = std::get_if<Mod>(&s._value)) {
      m->value = (m->modulus - m->value) % m->modulus;
    } else {
      auto& q = std::get<mpq_class>(s._value);
      q       = -q;
    }
    return s;
  }

  bool operator==(Scalar const& lhs, Scalar const& rhs) {
    auto const* a = std::get_if<Scalar::Mod>(&lhs._value);
    auto const* b = std::get_if<Scalar::Mod>(&rhs._value);
    if (a != nullptr && b != nullptr) {
      return a->modulus == b->modulus && a->value == b->value;
    }
    if (a == nullptr && b == nullptr) {
      return std::get<mpq_class>(lhs._value) == std::get<mpq_class>(rhs._value);
    }
    return false;
  }

  std::ostream& operator<<(std::ostream& os, Scalar const& x) {
    return os << x.to_string();
  }

  Scalar scalar_arith(Scalar const& a, Scalar const& b, ArithOp op) {
    switch (op) {
      case ArithOp::add:
        return a + b;
      case ArithOp::sub:
        return a - b;
      case ArithOp::mul:
        return a * b;
      case ArithOp::div:
        return a / b;
    }
    return a;
  }

}  // namespace clpa
