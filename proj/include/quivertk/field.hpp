#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quivertk {

  using Rational = boost::multiprecision::cpp_rational;
  using Integer  = boost::multiprecision::cpp_int;

  // The ground field: either the rationals or a prime field F_p.  Elements of
  // both are carried as Rational; prime-field elements are kept normalized to
  // integers in [0, p).
  class Field {
   public:
    Field() = default;

    static Field rationals() {
      return Field();
    }
    static Field prime(std::uint32_t p);

    // Accepts "Q", "F<p>" (e.g. "F3") or "Fp" together with an explicit prime.
    static Field from_name(std::string const& name, std::uint32_t fallback_prime = 0);

    bool is_prime() const noexcept {
      return _p != 0;
    }
    std::uint32_t characteristic() const noexcept {
      return _p;
    }
    std::string name() const;

    Rational normalize(Rational const& x) const;
    Rational add(Rational const& a, Rational const& b) const;
    Rational sub(Rational const& a, Rational const& b) const;
    Rational mul(Rational const& a, Rational const& b) const;
    Rational neg(Rational const& a) const;
    Rational inv(Rational const& a) const;
    Rational div(Rational const& a, Rational const& b) const {
      return mul(a, inv(b));
    }
    bool is_zero(Rational const& a) const {
      return normalize(a) == 0;
    }

    friend bool operator==(Field const&, Field const&) = default;

   private:
    explicit Field(std::uint32_t p) : _p(p) {}
    std::uint32_t _p = 0;
  };

  // Parses "p", "-p" or "p/q".
  Rational parse_rational(std::string const& token);
  std::string to_string(Rational const& x);

  bool is_prime_number(std::uint64_t n);

}  // namespace quivertk
