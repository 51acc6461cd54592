#include "clpa/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "clpa/error.hpp"

namespace clpa {

  LaurentPoly::LaurentPoly(std::int64_t period) : _period(period) {
    if (period < 1) {
      throw std::invalid_argument("Laurent period must be positive");
    }
  }

  LaurentPoly::LaurentPoly(std::int64_t period, term_map terms)
      : LaurentPoly(period) {
    for (auto const& [k, c] : terms) {
      add_term(k, c);
    }
  }

  LaurentPoly LaurentPoly::constant(std::int64_t period, Scalar c) {
    return monomial(period, 0, std::move(c));
  }

  LaurentPoly LaurentPoly::monomial(std::int64_t period,
                                    std::int64_t exponent,
                                    Scalar       c) {
    LaurentPoly f(period);
    f.add_term(exponent, c);
    return f;
  }

  void LaurentPoly::check_period(LaurentPoly const& rhs) const {
    if (_period != rhs._period) {
      throw PeriodMismatch("Laurent periods " + std::to_string(_period) + " and "
                           + std::to_string(rhs._period));
    }
  }

  void LaurentPoly::add_term(std::int64_t k, Scalar const& c) {
    auto it = _terms.find(k);
    if (it == _terms.end()) {
      if (!c.is_zero()) {
        _terms.emplace(k, c);
      }
      return;
    }
    it->second += c;
    if (it->second.is_zero()) {
      _terms.erase(it);
    }
  }

  Scalar LaurentPoly::coefficient(std::int64_t k, Field const& field) const {
    auto it = _terms.find(k);
    return it == _terms.end() ? field.zero() : it->second;
  }

  bool LaurentPoly::is_homogeneous_of_degree(std::int64_t degree) const {
    for (auto const& [k, c] : _terms) {
      if (k * _period != degree) {
        return false;
      }
    }
    return true;
  }

  bool LaurentPoly::is_constant() const {
    return _terms.empty() || (_terms.size() == 1 && _terms.begin()->first == 0);
  }

  LaurentPoly LaurentPoly::involution() const {
    LaurentPoly f(_period);
    for (auto const& [k, c] : _terms) {
      f._terms.emplace(-k, c.involution());
    }
    return f;
  }

  LaurentPoly LaurentPoly::project_degree(std::int64_t degree) const {
    LaurentPoly f(_period);
    if (degree % _period != 0) {
      return f;
    }
    if (auto it = _terms.find(degree / _period); it != _terms.end()) {
      f._terms.emplace(*it);
    }
    return f;
  }

  LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& rhs) {
    check_period(rhs);
    for (auto const& [k, c] : rhs._terms) {
      add_term(k, c);
    }
    return *this;
  }

  LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& rhs) {
    check_period(rhs);
    for (auto const& [k, c] : rhs._terms) {
      add_term(k, -c);
    }
    return *this;
  }

  LaurentPoly& LaurentPoly::operator*=(Scalar const& c) {
    if (c.is_zero()) {
      _terms.clear();
      return *this;
    }
    for (auto& [k, a] : _terms) {
      a *= c;
    }
    return *this;
  }

  LaurentPoly operator*(LaurentPoly const& lhs, LaurentPoly const& rhs) {
    lhs.check_period(rhs);
    LaurentPoly f(lhs._period);
    for (auto const& [i, a] : lhs._terms) {
      for (auto const& [j, b] : rhs._terms) {
        f.add_term(i + j, a * b);
      }
    }
    return f;
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly f(_period);
    for (auto const& [k, c] : _terms) {
      f._terms.emplace(k, -c);
    }
    return f;
  }

  std::string LaurentPoly::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& [k, c] : _terms) {
      auto text     = c.to_string(true);
      bool negative = !text.empty() && text.front() == '-';
      if (negative) {
        text.erase(0, 1);
      }
      if (first) {
        os << (negative ? "-" : "");
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << text;
        continue;
      }
      if (text != "1") {
        os << text << '*';
      }
      os << 't';
      if (k != 1) {
        os << '^' << k;
      }
    }
    return os.str();
  }

  namespace {
    class LaurentParser {
     public:
      LaurentParser(std::string_view text, std::int64_t period, Field field)
          : _text(text), _period(period), _field(field) {}

      LaurentPoly run() {
        LaurentPoly result(_period);
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
          negate = true;
          ++_pos;
        } else if (peek() == '+') {
          ++_pos;
        }
        while (true) {
          auto term = parse_term();
          result += negate ? -term : term;
          skip_ws();
          if (_pos == _text.size()) {
            break;
          }
          if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++_pos;
          } else {
            throw ParseError("expected '+' or '-'", _pos);
          }
        }
        return result;
      }

     private:
      char peek() const {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void skip_ws() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      // [COEF '*'] 't' ['^' INT] | COEF
      LaurentPoly parse_term() {
        skip_ws();
        Scalar coef = _field.one();
        if (peek() != 't') {
          auto const start = _pos;
          while (_pos < _text.size() && _text[_pos] != '*' && _text[_pos] != '+'
                 && !(_text[_pos] == '-' && _pos > start)) {
            ++_pos;
          }
          coef = Scalar::parse(_text.substr(start, _pos - start), _field);
          skip_ws();
          if (peek() != '*') {
            return LaurentPoly::constant(_period, coef);
          }
          ++_pos;
          skip_ws();
        }
        if (peek() != 't') {
          throw ParseError("expected 't'", _pos);
        }
        ++_pos;
        std::int64_t exponent = 1;
        skip_ws();
        if (peek() == '^') {
          ++_pos;
          skip_ws();
          auto const start = _pos;
          if (peek() == '-' || peek() == '+') {
            ++_pos;
          }
          while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++_pos;
          }
          try {
            exponent = std::stoll(std::string(_text.substr(start, _pos - start)));
          } catch (std::exception const&) {
            throw ParseError("bad exponent", start);
          }
        }
        return LaurentPoly::monomial(_period, exponent, coef);
      }

      std::string_view _text;
      std::size_t      _pos = 0;
      std::int64_t     _period;
      Field            _field;
    };
  }  // namespace

  LaurentPoly LaurentPoly::parse(std::string_view text,
                                 std::int64_t     period,
                                 Field const&     field) {
    return LaurentParser(text, period, field).run();
  }

  LaurentPoly laurent_mul(LaurentPoly const& f, LaurentPoly const& g) {
    return f * g;
  }

  LaurentPoly laurent_involution(LaurentPoly const& f) {
    return f.involution();
  }

  bool laurent_divides(LaurentPoly const& f, LaurentPoly const& g) {
    if (f.is_zero()) {
      throw DivisionByZero("division by the zero Laurent polynomial");
    }
    if (f.period() != g.period()) {
      throw PeriodMismatch("laurent_divides across periods");
    }
    if (g.is_zero()) {
      return true;
    }
    // Dense coefficient vectors with lowest exponent shifted to zero.
    auto dense = [](LaurentPoly const& h) {
      auto const lo = h.terms().begin()->first;
      auto const hi = h.terms().rbegin()->first;
      std::vector<Scalar> v(static_cast<std::size_t>(hi - lo + 1),
                            h.terms().begin()->second.field().zero());
      for (auto const& [k, c] : h.terms()) {
        v[static_cast<std::size_t>(k - lo)] = c;
      }
      return v;
    };
    auto const divisor = dense(f);
    auto       rem     = dense(g);
    if (rem.size() < divisor.size()) {
      return false;
    }
    auto const lead_inv = divisor.back().inverse();
    for (std::size_t top = rem.size(); top >= divisor.size(); --top) {
      auto const q = rem[top - 1] * lead_inv;
      if (q.is_zero()) {
        continue;
      }
      auto const offset = top - divisor.size();
      for (std::size_t i = 0; i < divisor.size(); ++i) {
        rem[offset + i] -= q * divisor[i];
      }
    }
    for (std::size_t i = 0; i + 1 < divisor.size(); ++i) {
      if (!rem[i].is_zero()) {
        return false;
      }
    }
    return true;
  }

}  // namespace clpa
