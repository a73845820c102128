#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "commhilb/rational.hpp"
#include "commhilb/unipoly.hpp"

namespace commhilb {

// Per-variable truncation bounds.  Coefficients outside the caps are
// identically zero; arithmetic truncates to the caps and every coefficient
// inside them is exact.
struct Caps {
  int q = 0;
  int s = 0;
  int t = 0;
  bool operator==(const Caps&) const = default;
  bool contains(const Caps& other) const {
    return q >= other.q && s >= other.s && t >= other.t;
  }
  std::string str() const {
    return "(q<=" + std::to_string(q) + ", s<=" + std::to_string(s) +
           ", t<=" + std::to_string(t) + ")";
  }
};

// Truncated trigraded power series in (q, s, t) over exact rationals, dense
// within the caps.  q tracks the topological degree of the coinvariant
// factor, s the torus homological degree, t the tensor length.
class TriSeries {
 public:
  explicit TriSeries(Caps caps)
      : caps_(caps),
        c_(static_cast<std::size_t>(caps.q + 1) * (caps.s + 1) * (caps.t + 1), Rat(0)) {
    if (caps.q < 0 || caps.s < 0 || caps.t < 0)
      throw std::invalid_argument("caps must be non-negative");
  }

  static TriSeries constant(Caps caps, const Rat& v) {
    TriSeries x(caps);
    x.c_[0] = v;
    return x;
  }
  static TriSeries one(Caps caps) { return constant(caps, Rat(1)); }

  const Caps& caps() const { return caps_; }

  bool in_caps(int a, int b, int m) const {
    return a >= 0 && b >= 0 && m >= 0 && a <= caps_.q && b <= caps_.s && m <= caps_.t;
  }

  const Rat& coeff(int a, int b, int m) const {
    static const Rat zero(0);
    if (!in_caps(a, b, m)) return zero;
    return c_[index(a, b, m)];
  }

  void set_coeff(int a, int b, int m, const Rat& v) {
    require_in_caps(a, b, m);
    c_[index(a, b, m)] = v;
  }

  void add_coeff(int a, int b, int m, const Rat& v) {
    require_in_caps(a, b, m);
    c_[index(a, b, m)] += v;
  }

  template <typename Fn>  // Fn(a, b, m, const Rat&)
  void for_each_nonzero(Fn&& fn) const {
    std::size_t idx = 0;
    for (int a = 0; a <= caps_.q; ++a)
      for (int b = 0; b <= caps_.s; ++b)
        for (int m = 0; m <= caps_.t; ++m, ++idx)
          if (c_[idx] != 0) fn(a, b, m, c_[idx]);
  }

  bool is_zero() const {
    for (const Rat& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool integral() const {
    for (const Rat& v : c_)
      if (!is_integer(v)) return false;
    return true;
  }

  bool nonnegative() const {
    for (const Rat& v : c_)
      if (v < 0) return false;
    return true;
  }

  friend TriSeries operator+(const TriSeries& x, const TriSeries& y) {
    x.require_same_caps(y);
    TriSeries r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
    return r;
  }

  friend TriSeries operator-(const TriSeries& x, const TriSeries& y) {
    x.require_same_caps(y);
    TriSeries r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
    return r;
  }

  TriSeries& operator+=(const TriSeries& y) {
    require_same_caps(y);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
    return *this;
  }

  // Convolution truncated to the (shared) caps; skips zero coefficients, so
  // products of sparse factors stay cheap.
  friend TriSeries operator*(const TriSeries& x, const TriSeries& y) {
    x.require_same_caps(y);
    TriSeries r(x.caps_);
    auto xs = x.support();
    auto ys = y.support();
    for (const auto& [xa, xb, xm] : xs) {
      const Rat& xv = x.c_[x.index(xa, xb, xm)];
      for (const auto& [ya, yb, ym] : ys) {
        const int a = xa + ya, b = xb + yb, m = xm + ym;
        if (a > r.caps_.q || b > r.caps_.s || m > r.caps_.t) continue;
        r.c_[r.index(a, b, m)] += xv * y.c_[y.index(ya, yb, ym)];
      }
    }
    return r;
  }

  bool operator==(const TriSeries&) const = default;

  // Truncated reciprocal; requires an invertible constant term.  Runs over
  // the lattice in graded order, using only the support of *this.
  TriSeries inverse() const {
    const Rat& c0 = coeff(0, 0, 0);
    if (c0 == 0)
      throw std::domain_error("series inverse needs a nonzero constant term");
    auto supp = support();
    TriSeries r(caps_);
    for (int total = 0; total <= caps_.q + caps_.s + caps_.t; ++total) {
      for (int a = std::max(0, total - caps_.s - caps_.t); a <= std::min(total, caps_.q); ++a)
        for (int b = std::max(0, total - a - caps_.t); b <= std::min(total - a, caps_.s); ++b) {
          const int m = total - a - b;
          Rat acc = (total == 0) ? Rat(1) : Rat(0);
          for (const auto& [xa, xb, xm] : supp) {
            if (xa == 0 && xb == 0 && xm == 0) continue;
            if (xa > a || xb > b || xm > m) continue;
            acc -= c_[index(xa, xb, xm)] * r.c_[r.index(a - xa, b - xb, m - xm)];
          }
          r.c_[r.index(a, b, m)] = acc / c0;
        }
    }
    return r;
  }

  // Same series viewed inside larger caps.
  TriSeries embedded(Caps bigger) const {
    if (!bigger.contains(caps_))
      throw std::invalid_argument("embedding caps " + bigger.str() +
                                  " do not contain " + caps_.str());
    TriSeries r(bigger);
    for_each_nonzero([&](int a, int b, int m, const Rat& v) { r.set_coeff(a, b, m, v); });
    return r;
  }

  TriSeries truncated(Caps smaller) const {
    if (!caps_.contains(smaller))
      throw std::invalid_argument("truncation caps " + smaller.str() +
                                  " exceed " + caps_.str());
    TriSeries r(smaller);
    for_each_nonzero([&](int a, int b, int m, const Rat& v) {
      if (r.in_caps(a, b, m)) r.set_coeff(a, b, m, v);
    });
    return r;
  }

  // Collapses the q-grading: coefficient of (b, m) becomes the sum over a.
  TriSeries sum_q() const {
    TriSeries r(Caps{0, caps_.s, caps_.t});
    for_each_nonzero([&](int, int b, int m, const Rat& v) { r.add_coeff(0, b, m, v); });
    return r;
  }

  // The univariate slice at a fixed tensor length: sum over a+b = d of
  // coeff(a, b, m), as a polynomial in one variable graded by total degree.
  UniPoly total_degree_slice(int m) const {
    UniPoly p;
    for_each_nonzero([&](int a, int b, int mm, const Rat& v) {
      if (mm == m) p.set_coeff(a + b, p.coeff(a + b) + v);
    });
    return p;
  }

  // Canonical rendering: terms ordered by (m, b, a).
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int m = 0; m <= caps_.t; ++m)
      for (int b = 0; b <= caps_.s; ++b)
        for (int a = 0; a <= caps_.q; ++a) {
          const Rat& v = c_[index(a, b, m)];
          if (v == 0) continue;
          const bool neg = v < 0;
          Rat mag = neg ? Rat(-v) : v;
          if (first) {
            if (neg) os << '-';
            first = false;
          } else {
            os << (neg ? " - " : " + ");
          }
          std::string mono;
          auto append = [&mono](const char* var, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += '*';
            mono += var;
            if (e > 1) mono += '^' + std::to_string(e);
          };
          append("q", a);
          append("s", b);
          append("t", m);
          if (mag != 1 || mono.empty()) {
            os << mag.str();
            if (!mono.empty()) os << '*';
          }
          os << mono;
        }
    if (first) return "0";
    return os.str();
  }

 private:
  std::size_t index(int a, int b, int m) const {
    return (static_cast<std::size_t>(a) * (caps_.s + 1) + b) * (caps_.t + 1) + m;
  }

  void require_in_caps(int a, int b, int m) const {
    if (!in_caps(a, b, m))
      throw std::out_of_range("coefficient (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(m) +
                              ") outside caps " + caps_.str());
  }

  void require_same_caps(const TriSeries& other) const {
    if (!(caps_ == other.caps_))
      throw std::invalid_argument("caps mismatch: " + caps_.str() + " vs " +
                                  other.caps_.str());
  }

  struct Term {
    int a, b, m;
  };

  std::vector<Term> support() const {
    std::vector<Term> s;
    for_each_nonzero([&](int a, int b, int m, const Rat&) { s.push_back({a, b, m}); });
    return s;
  }

  Caps caps_;
  std::vector<Rat> c_;
};

// Free-function spellings of the ring operations.
inline TriSeries add(const TriSeries& x, const TriSeries& y) { return x + y; }
inline TriSeries mul(const TriSeries& x, const TriSeries& y) { return x * y; }
inline TriSeries scale(const TriSeries& x, const Rat& c) {
  TriSeries r(x.caps());
  x.for_each_nonzero([&](int a, int b, int m, const Rat& v) { r.set_coeff(a, b, m, v * c); });
  return r;
}
inline TriSeries inverse(const TriSeries& x) { return x.inverse(); }
inline TriSeries sum_q(const TriSeries& x) { return x.sum_q(); }

// Lifts of univariate polynomials into the trigraded ring.
inline TriSeries lift_q(const UniPoly& p, Caps caps) {
  TriSeries r(caps);
  for (int k = 0; k <= std::min(p.degree(), caps.q); ++k)
    if (p.coeff(k) != 0) r.set_coeff(k, 0, 0, p.coeff(k));
  return r;
}

inline TriSeries lift_s(const UniPoly& p, Caps caps) {
  TriSeries r(caps);
  for (int k = 0; k <= std::min(p.degree(), caps.s); ++k)
    if (p.coeff(k) != 0) r.set_coeff(0, k, 0, p.coeff(k));
  return r;
}

inline TriSeries lift_t(const UniPoly& p, Caps caps) {
  TriSeries r(caps);
  for (int k = 0; k <= std::min(p.degree(), caps.t); ++k)
    if (p.coeff(k) != 0) r.set_coeff(0, 0, k, p.coeff(k));
  return r;
}

// The two determinant factors attached to a characteristic polynomial
// det(x*I - w) = sum_k (-1)^k e_k x^(n-k): returns det(1 - q^2 w) as a
// polynomial in q (even exponents) and det(1 + s w) as a polynomial in s.
// Both have integer coefficients.
inline std::pair<UniPoly, UniPoly> eval_det_factors(
    const std::vector<std::int64_t>& charpoly) {
  if (charpoly.empty() || charpoly.back() != 1)
    throw std::invalid_argument("characteristic polynomial must be monic");
  const int n = static_cast<int>(charpoly.size()) - 1;
  UniPoly det_q, det_s;
  for (int k = 0; k <= n; ++k) {
    const std::int64_t elem_sym = ((k % 2 == 0) ? 1 : -1) * charpoly[n - k];
    det_q.set_coeff(2 * k, Rat(((k % 2 == 0) ? 1 : -1) * elem_sym));
    det_s.set_coeff(k, Rat(elem_sym));
  }
  return {det_q, det_s};
}

}  // namespace commhilb
