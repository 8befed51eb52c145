#pragma once

#include <boost/container/small_vector.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>

#include "dgmod/error.hpp"
#include "dgmod/field.hpp"

namespace dgmod {

/// Dense univariate polynomial over a Field, in the indeterminate X.
/// Canonical form: no trailing zero coefficients, so the zero polynomial has
/// an empty coefficient vector and operator== is structural equality.
class Poly {
 public:
  Poly() : k_(Field::rationals()) {}
  explicit Poly(Field k) : k_(k) {}

  static Poly zero(Field k) { return Poly(k); }
  static Poly constant(Field k, Scalar c) {
    Poly r(k);
    r.c_.push_back(std::move(c));
    r.normalize();
    return r;
  }
  static Poly from_long(Field k, long long n) { return constant(k, k.from_long(n)); }
  static Poly one(Field k) { return from_long(k, 1); }
  static Poly monomial(Field k, int deg, Scalar c) {
    Poly r(k);
    if (!k.is_zero(c)) {
      r.c_.resize(static_cast<std::size_t>(deg) + 1, k.zero());
      r.c_.back() = std::move(c);
    }
    return r;
  }
  static Poly x(Field k) { return monomial(k, 1, k.one()); }

  const Field& field() const { return k_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero poly: -1
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Units of k[X] are the nonzero constants.
  bool is_unit_constant() const { return c_.size() == 1; }

  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return k_.zero();
    return c_[static_cast<std::size_t>(i)];
  }
  Scalar lead() const { return c_.empty() ? k_.zero() : c_.back(); }

  bool operator==(const Poly& o) const { return k_ == o.k_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const {
    Poly r(k_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.resize(n, k_.zero());
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = k_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    r.normalize();
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r(k_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.resize(n, k_.zero());
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = k_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    r.normalize();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = k_.neg(c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(k_);
    Poly r(k_);
    r.c_.resize(c_.size() + o.c_.size() - 1, k_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (k_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = k_.add(r.c_[i + j], k_.mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
  }
  Poly scaled(const Scalar& s) const {
    Poly r(k_);
    if (k_.is_zero(s)) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = k_.mul(c, s);
    r.normalize();
    return r;
  }

  /// Euclidean division: *this = q * den + r with deg(r) < deg(den).
  std::pair<Poly, Poly> divmod(const Poly& den) const {
    require(!den.is_zero(), errc::invalid_argument, "polynomial division by zero");
    Poly rem = *this;
    Poly q(k_);
    int dd = den.degree();
    if (rem.degree() >= dd) q.c_.resize(static_cast<std::size_t>(rem.degree() - dd) + 1, k_.zero());
    Scalar lead_inv = k_.inv(den.lead());
    while (!rem.is_zero() && rem.degree() >= dd) {
      int shift = rem.degree() - dd;
      Scalar f = k_.mul(rem.lead(), lead_inv);
      q.c_[static_cast<std::size_t>(shift)] = f;
      for (int i = 0; i <= dd; ++i) {
        std::size_t idx = static_cast<std::size_t>(i + shift);
        rem.c_[idx] = k_.sub(rem.c_[idx], k_.mul(f, den.coeff(i)));
      }
      rem.normalize();
    }
    q.normalize();
    return {q, rem};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(k_.inv(lead()));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      Scalar c = coeff(i);
      if (k_.is_zero(c)) continue;
      if (!out.empty()) out += "+";
      bool coeff_is_one = (c == k_.one());
      if (i == 0 || !coeff_is_one) out += k_.format(c);
      if (i > 0) {
        if (!coeff_is_one) out += "*";
        out += "X";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  /// Parses the grammar documented in docs/formats.md: sums/differences of
  /// terms `coeff`, `coeff*X^e`, `X^e`, with rational coefficients written
  /// `a/b` over the rationals and integers over prime fields.
  static Poly parse(Field k, const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_nat = [&]() -> std::uint64_t {
      skip();
      require(pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])), errc::parse_error,
              "expected number in polynomial at offset " + std::to_string(pos) + ": '" + text + "'");
      std::uint64_t n = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        n = n * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        ++pos;
      }
      return n;
    };

    Poly result(k);
    skip();
    bool first = true;
    while (true) {
      skip();
      if (pos >= text.size()) {
        require(!first, errc::parse_error, "empty polynomial: '" + text + "'");
        break;
      }
      bool negate = false;
      if (text[pos] == '+' || text[pos] == '-') {
        negate = text[pos] == '-';
        ++pos;
        skip();
      } else {
        require(first, errc::parse_error,
                "expected '+' or '-' in polynomial at offset " + std::to_string(pos) + ": '" + text + "'");
      }
      first = false;

      // term := coeff ['*'? mono] | mono
      Scalar c = k.one();
      bool have_coeff = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::uint64_t num = parse_nat();
        if (k.p == 0 && pos < text.size() && text[pos] == '/') {
          ++pos;
          std::uint64_t den = parse_nat();
          require(den != 0, errc::parse_error, "zero denominator in '" + text + "'");
          c = Scalar::rational(Rational(Rational(num), Rational(den)));
        } else {
          c = k.from_long(static_cast<long long>(num));
        }
        have_coeff = true;
        skip();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip();
        }
      }
      int deg = 0;
      if (pos < text.size() && text[pos] == 'X') {
        ++pos;
        deg = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          deg = static_cast<int>(parse_nat());
        }
      } else {
        require(have_coeff, errc::parse_error,
                "expected coefficient or X at offset " + std::to_string(pos) + ": '" + text + "'");
      }
      if (negate) c = k.neg(c);
      result = result + monomial(k, deg, c);
    }
    return result;
  }

 private:
  void normalize() {
    while (!c_.empty() && k_.is_zero(c_.back())) c_.pop_back();
  }

  Field k_;
  boost::container::small_vector<Scalar, 4> c_;
};

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ExtGcd {
  Poly g, s, t;  // g = s*a + t*b, g monic (or zero)
};

inline ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Field k = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(k), s1 = Poly::zero(k);
  Poly t0 = Poly::zero(k), t1 = Poly::one(k);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar lead_inv = k.inv(r0.lead());
  return {r0.scaled(lead_inv), s0.scaled(lead_inv), t0.scaled(lead_inv)};
}

}  // namespace dgmod
