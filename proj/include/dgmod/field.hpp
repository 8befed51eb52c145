#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

#include "dgmod/error.hpp"

namespace dgmod {

using Rational = boost::multiprecision::cpp_rational;

/// A coefficient: a residue in [0, p) for prime fields, an exact fraction
/// for the rationals. Stored in canonical form, so operator== is semantic
/// equality. Which case is live is dictated by the owning Field.
class Scalar {
 public:
  Scalar() : v_(std::uint64_t{0}) {}
  static Scalar residue(std::uint64_t r) { return Scalar(r); }
  static Scalar rational(Rational q) { return Scalar(std::move(q)); }

  std::uint64_t res() const { return std::get<std::uint64_t>(v_); }
  const Rational& rat() const { return std::get<Rational>(v_); }
  bool is_residue() const { return std::holds_alternative<std::uint64_t>(v_); }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  explicit Scalar(std::uint64_t r) : v_(r) {}
  explicit Scalar(Rational q) : v_(std::move(q)) {}
  std::variant<std::uint64_t, Rational> v_;
};

/// Coefficient field: the rationals (p == 0) or F_p for a prime p.
/// All Scalar arithmetic goes through this descriptor.
struct Field {
  std::uint64_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t p) {
    require(is_prime(p), errc::invalid_argument, "field characteristic must be prime");
    return Field{p};
  }

  bool operator==(const Field& o) const { return p == o.p; }

  Scalar zero() const { return p ? Scalar::residue(0) : Scalar::rational(Rational(0)); }
  Scalar one() const { return p ? Scalar::residue(1 % p) : Scalar::rational(Rational(1)); }

  Scalar from_long(long long n) const {
    if (!p) return Scalar::rational(Rational(n));
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Scalar::residue(static_cast<std::uint64_t>(r));
  }

  bool is_zero(const Scalar& a) const { return p ? a.res() == 0 : a.rat() == 0; }

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (!p) return Scalar::rational(a.rat() + b.rat());
    std::uint64_t s = a.res() + b.res();
    if (s >= p) s -= p;
    return Scalar::residue(s);
  }

  Scalar sub(const Scalar& a, const Scalar& b) const {
    if (!p) return Scalar::rational(a.rat() - b.rat());
    std::uint64_t s = a.res() + p - b.res();
    if (s >= p) s -= p;
    return Scalar::residue(s);
  }

  Scalar neg(const Scalar& a) const {
    if (!p) return Scalar::rational(-a.rat());
    return Scalar::residue(a.res() ? p - a.res() : 0);
  }

  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (!p) return Scalar::rational(a.rat() * b.rat());
    return Scalar::residue(static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a.res()) * b.res() % p));
  }

  Scalar inv(const Scalar& a) const {
    require(!is_zero(a), errc::invalid_argument, "division by zero coefficient");
    if (!p) return Scalar::rational(1 / a.rat());
    // Fermat: a^(p-2) mod p.
    std::uint64_t base = a.res(), e = p - 2, acc = 1 % p;
    while (e) {
      if (e & 1) acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * base % p);
      base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
      e >>= 1;
    }
    return Scalar::residue(acc);
  }

  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string format(const Scalar& a) const {
    if (!p) return a.rat().str();
    return std::to_string(a.res());
  }

 private:
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

}  // namespace dgmod
