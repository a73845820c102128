#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace commhilb {

// All group elements handled here are small integer matrices acting on a
// lattice; arithmetic stays in int64 with explicit overflow checks.  An
// overflow means the input was not one of the intended finite groups and
// is a hard error.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in matrix arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in matrix arithmetic");
  return r;
}

class IntMat {
 public:
  IntMat() = default;
  explicit IntMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("matrix size must be non-negative");
  }

  static IntMat identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMat m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw std::invalid_argument("matrix rows must form a square matrix");
      for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int size() const { return n_; }

  std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<std::int64_t>& data() const { return a_; }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
    IntMat r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        const std::int64_t v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n_; ++j)
          r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, y.at(k, j)));
      }
    return r;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != n_)
      throw std::invalid_argument("vector size mismatch");
    std::vector<std::int64_t> r(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (at(i, j) != 0) r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
    return r;
  }

  bool operator==(const IntMat&) const = default;

  bool is_identity() const { return *this == identity(n_); }
  bool is_involution() const { return (*this) * (*this) == identity(n_); }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> r(n_);
    for (int i = 0; i < n_; ++i)
      r[i].assign(a_.begin() + static_cast<std::size_t>(i) * n_,
                  a_.begin() + static_cast<std::size_t>(i + 1) * n_);
    return r;
  }

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

// Coefficients c_0..c_n of det(x*I - w), monic (c_n = 1), computed by the
// Faddeev-LeVerrier recurrence.  Every division in the recurrence is exact
// over the integers; a non-exact division indicates corrupted input.
inline std::vector<std::int64_t> charpoly(const IntMat& w) {
  const int n = w.size();
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[n] = 1;
  IntMat m = IntMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMat am = w * m;
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i) tr = checked_add(tr, am.at(i, i));
    if (tr % k != 0)
      throw std::logic_error("characteristic polynomial recurrence lost integrality");
    const std::int64_t ck = -(tr / k);
    c[n - k] = ck;
    m = am;
    for (int i = 0; i < n; ++i) m.at(i, i) = checked_add(m.at(i, i), ck);
  }
  return c;
}

// det(w) recovered from det(x*I - w) at x = 0.
inline std::int64_t det_from_charpoly(const std::vector<std::int64_t>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  return (n % 2 == 0) ? c[0] : -c[0];
}

inline std::int64_t determinant(const IntMat& w) {
  return det_from_charpoly(charpoly(w));
}

}  // namespace commhilb
