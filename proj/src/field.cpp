#include "quivertk/field.hpp"

#include <cctype>
#include <sstream>

#include "quivertk/errors.hpp"

namespace quivertk {

  bool is_prime_number(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  Field Field::prime(std::uint32_t p) {
    if (!is_prime_number(p)) {
      throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    }
    return Field(p);
  }

  Field Field::from_name(std::string const& name, std::uint32_t fallback_prime) {
    if (name == "Q") {
      return rationals();
    }
    if (name == "Fp") {
      return prime(fallback_prime);
    }
    if (name.size() >= 2 && name[0] == 'F') {
      std::uint64_t p = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])) || p > 1'000'000'000) {
          throw ValidationError("unknown field '" + name + "'");
        }
        p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
      }
      return prime(static_cast<std::uint32_t>(p));
    }
    throw ValidationError("unknown field '" + name + "' (expected Q or F<p>)");
  }

  std::string Field::name() const {
    return _p == 0 ? std::string("Q") : "F" + std::to_string(_p);
  }

  namespace {
    Integer mod(Integer const& a, std::uint32_t p) {
      Integer r = a % p;
      if (r < 0) {
        r += p;
      }
      return r;
    }

    Integer inverse_mod(Integer const& a, std::uint32_t p) {
      // Fermat: a^(p-2)
      Integer result = 1, base = mod(a, p);
      std::uint32_t e = p - 2;
      while (e > 0) {
        if (e & 1u) {
          result = (result * base) % p;
        }
        base = (base * base) % p;
        e >>= 1u;
      }
      return result;
    }
  }  // namespace

  Rational Field::normalize(Rational const& x) const {
    if (_p == 0) {
      return x;
    }
    Integer num = mod(boost::multiprecision::numerator(x), _p);
    Integer den = mod(boost::multiprecision::denominator(x), _p);
    if (den == 0) {
      throw ValidationError("rational " + to_string(x) + " has a denominator divisible by "
                            + std::to_string(_p));
    }
    return Rational((num * inverse_mod(den, _p)) % _p);
  }

  Rational Field::add(Rational const& a, Rational const& b) const {
    return normalize(a + b);
  }
  Rational Field::sub(Rational const& a, Rational const& b) const {
    return normalize(a - b);
  }
  Rational Field::mul(Rational const& a, Rational const& b) const {
    return normalize(a * b);
  }
  Rational Field::neg(Rational const& a) const {
    return normalize(-a);
  }
  Rational Field::inv(Rational const& a) const {
    Rational n = normalize(a);
    if (n == 0) {
      throw ValidationError("division by zero");
    }
    if (_p == 0) {
      return Rational(1) / n;
    }
    return Rational(inverse_mod(boost::multiprecision::numerator(n), _p));
  }

  Rational parse_rational(std::string const& token) {
    auto is_int = [](std::string const& s) {
      std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i >= s.size()) {
        return false;
      }
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          return false;
        }
      }
      return true;
    };
    auto slash = token.find('/');
    if (slash == std::string::npos) {
      if (!is_int(token)) {
        throw ValidationError("'" + token + "' is not a rational number");
      }
      return Rational(Integer(token[0] == '+' ? token.substr(1) : token));
    }
    std::string num = token.substr(0, slash), den = token.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
      throw ValidationError("'" + token + "' is not a rational number");
    }
    Integer d(den);
    if (d == 0) {
      throw ValidationError("'" + token + "' has zero denominator");
    }
    if (num[0] == '+') {
      num = num.substr(1);
    }
    return Rational(Integer(num), d);
  }

  std::string to_string(Rational const& x) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(x);
    if (boost::multiprecision::denominator(x) != 1) {
      os << '/' << boost::multiprecision::denominator(x);
    }
    return os.str();
  }

}  // namespace quivertk
