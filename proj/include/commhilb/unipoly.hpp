#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "commhilb/rational.hpp"

namespace commhilb {

// Dense univariate polynomial with exact rational coefficients, trailing
// zeros trimmed.  Also used for truncated univariate power series; the
// truncation degree is then tracked by the caller.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly one() { return UniPoly{Rat(1)}; }
  static UniPoly monomial(int k, const Rat& coeff = Rat(1)) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
    c[k] = coeff;
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }

  const Rat& coeff(int k) const {
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
  }

  void set_coeff(int k, const Rat& v) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, Rat(0));
    c_[k] = v;
    trim();
  }

  friend UniPoly operator+(const UniPoly& x, const UniPoly& y) {
    std::vector<Rat> c(std::max(x.c_.size(), y.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(int(i)) + y.coeff(int(i));
    return UniPoly(std::move(c));
  }

  friend UniPoly operator-(const UniPoly& x, const UniPoly& y) {
    std::vector<Rat> c(std::max(x.c_.size(), y.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(int(i)) - y.coeff(int(i));
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const UniPoly& x, const UniPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<Rat> c(x.c_.size() + y.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        if (y.c_[j] != 0) c[i + j] += x.c_[i] * y.c_[j];
    }
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const Rat& a, const UniPoly& x) {
    std::vector<Rat> c = x.c_;
    for (auto& v : c) v *= a;
    return UniPoly(std::move(c));
  }

  bool operator==(const UniPoly&) const = default;

  UniPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    UniPoly r = one(), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  UniPoly truncated(int maxdeg) const {
    std::vector<Rat> c(c_.begin(),
                       c_.begin() + std::min<std::size_t>(c_.size(), maxdeg + 1));
    return UniPoly(std::move(c));
  }

  // Truncated reciprocal; requires an invertible constant term.
  UniPoly inverse_trunc(int maxdeg) const {
    if (coeff(0) == 0)
      throw std::domain_error("series inverse needs a nonzero constant term");
    std::vector<Rat> inv(static_cast<std::size_t>(maxdeg) + 1, Rat(0));
    inv[0] = Rat(1) / coeff(0);
    for (int k = 1; k <= maxdeg; ++k) {
      Rat acc(0);
      for (int j = 1; j <= std::min(k, degree()); ++j) acc += coeff(j) * inv[k - j];
      inv[k] = -acc / coeff(0);
    }
    return UniPoly(std::move(inv));
  }

  // Exact polynomial division; throws when the remainder is nonzero.
  UniPoly divide_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree())
      throw std::domain_error("polynomial division leaves a remainder");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quo(degree() - divisor.degree() + 1, Rat(0));
    const Rat& lead = divisor.c_.back();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
      Rat q = rem[k + divisor.degree()] / lead;
      quo[k] = q;
      if (q != 0)
        for (int j = 0; j <= divisor.degree(); ++j) rem[k + j] -= q * divisor.coeff(j);
    }
    for (const Rat& r : rem)
      if (r != 0) throw std::domain_error("polynomial division leaves a remainder");
    return UniPoly(std::move(quo));
  }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
  }

  Rat coeff_sum() const { return eval(Rat(1)); }

  bool integral() const {
    for (const Rat& v : c_)
      if (!is_integer(v)) return false;
    return true;
  }

  std::string str(std::string_view var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
      const Rat& v = c_[k];
      if (v == 0) continue;
      const bool neg = v < 0;
      Rat mag = neg ? Rat(-v) : v;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      const bool unit = (mag == 1);
      if (!unit || k == 0) os << mag.str();
      if (k > 0) {
        if (!unit) os << '*';
        os << var;
        if (k > 1) os << '^' << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

}  // namespace commhilb
