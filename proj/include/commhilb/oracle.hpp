#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "commhilb/cartan.hpp"
#include "commhilb/census.hpp"
#include "commhilb/molien.hpp"
#include "commhilb/rational.hpp"
#include "commhilb/triseries.hpp"

// Brute-force invariant theory, deliberately independent of the census and
// eigenvalue machinery: group elements act on explicit monomial and wedge
// bases, traces are read off the diagonal, and invariant dimensions come
// from averaging.  Everything here is meant for small groups only and is
// used to validate the fast path.

namespace commhilb::oracle {

inline constexpr std::int64_t max_group_order = 10000;
inline constexpr std::int64_t max_basis_size = 100000;

namespace detail {

using Monomial = std::vector<int>;  // exponent vector
using Poly = std::map<Monomial, Int>;

inline void monomials_of_degree(int nvars, int degree, Monomial& prefix,
                                std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == nvars - 1) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = 0; k <= degree; ++k) {
    prefix.push_back(k);
    monomials_of_degree(nvars, degree - k, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<Monomial> monomial_basis(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial prefix;
  monomials_of_degree(nvars, degree, prefix, out);
  if (static_cast<std::int64_t>(out.size()) > max_basis_size)
    throw std::invalid_argument("polynomial degree too large for the brute-force scope");
  return out;
}

inline Poly poly_mul(const Poly& x, const Poly& y) {
  Poly r;
  for (const auto& [xm, xc] : x)
    for (const auto& [ym, yc] : y) {
      Monomial m(xm.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = xm[i] + ym[i];
      r[m] += xc * yc;
    }
  return r;
}

// Signed coefficient of e_S in (w e_{s_1}) ^ ... ^ (w e_{s_k}), expanded
// column by column with inversion-count signs.
inline Int wedge_diagonal_coeff(const IntMat& w, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<int> chosen;
  chosen.reserve(k);
  auto expand = [&](auto&& self, int col, std::uint32_t used) -> Int {
    if (col == k) return 1;
    Int total = 0;
    for (int pos = 0; pos < k; ++pos) {
      if (used & (1u << pos)) continue;
      const std::int64_t entry = w.at(subset[pos], subset[col]);
      if (entry == 0) continue;
      int inversions = 0;
      for (int p = pos + 1; p < k; ++p)
        if (used & (1u << p)) ++inversions;
      Int rest = self(self, col + 1, used | (1u << pos));
      if (rest != 0) total += Int(entry) * ((inversions % 2) ? -rest : rest);
    }
    return total;
  };
  return expand(expand, 0, 0);
}

}  // namespace detail

// Trace of w on the degree-i polynomials, by pushing every monomial basis
// element through the linear substitution x_j -> sum_i w[i][j] x_i and
// reading the diagonal coefficient.  No eigenvalue shortcut.
inline Rat action_trace_poly(const IntMat& w, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  const int n = w.size();
  const auto basis = detail::monomial_basis(n, degree);
  Int trace = 0;
  for (const auto& mono : basis) {
    detail::Poly image{{detail::Monomial(n, 0), Int(1)}};
    for (int var = 0; var < n; ++var) {
      if (mono[var] == 0) continue;
      detail::Poly linear;
      for (int i = 0; i < n; ++i)
        if (w.at(i, var) != 0) {
          detail::Monomial unit(n, 0);
          unit[i] = 1;
          linear[unit] = w.at(i, var);
        }
      for (int rep = 0; rep < mono[var]; ++rep) image = detail::poly_mul(image, linear);
    }
    auto it = image.find(mono);
    if (it != image.end()) trace += it->second;
  }
  return Rat(trace);
}

// Trace of w on a tensor product of wedge powers: the product over the
// factors of the trace on each wedge power, each computed from the explicit
// action on the basis of k-subsets with signs.
inline Rat action_trace_wedge_tensor(const IntMat& w, const std::vector<int>& kvec) {
  const int n = w.size();
  Int product = 1;
  for (int k : kvec) {
    if (k < 1 || k > n)
      throw std::invalid_argument("wedge degree must lie in [1, rank]");
    Int trace = 0;
    std::vector<int> subset(k);
    auto visit = [&](auto&& self, int start, int depth) -> void {
      if (depth == k) {
        trace += detail::wedge_diagonal_coeff(w, subset);
        return;
      }
      for (int v = start; v < n; ++v) {
        subset[depth] = v;
        self(self, v + 1, depth + 1);
      }
    };
    visit(visit, 0, 0);
    product *= trace;
    if (product == 0) break;
  }
  return Rat(product);
}

// Dimension of the invariant subspace of (degree-i polynomials) tensor
// (wedge powers along kvec), by averaging the product of traces over the
// whole group.  The averaged trace of the projection onto the fixed
// subspace must be a non-negative integer; anything else is a defect and
// throws.
inline Int brute_invariant_dim(const std::vector<IntMat>& elements, int degree,
                               const std::vector<int>& kvec) {
  if (elements.empty()) throw std::invalid_argument("empty element list");
  Rat sum(0);
  for (const IntMat& w : elements)
    sum += action_trace_poly(w, degree) * action_trace_wedge_tensor(w, kvec);
  sum /= Rat(static_cast<std::int64_t>(elements.size()));
  if (!is_integer(sum) || sum < 0)
    throw std::logic_error("averaged trace " + sum.str() +
                           " is not a non-negative integer; the action is inconsistent");
  return to_integer(sum);
}

inline Int brute_invariant_dim(const GroupSpec& spec, int degree,
                               const std::vector<int>& kvec) {
  return brute_invariant_dim(element_list(spec, max_group_order), degree, kvec);
}

namespace detail {

// Ordered tuples (k_1..k_m), k_i in [1, n], summing to j.
inline void compositions(int j, int parts, int n, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (j == 0) out.push_back(prefix);
    return;
  }
  for (int k = 1; k <= std::min(n, j - (parts - 1)); ++k) {
    prefix.push_back(k);
    compositions(j - k, parts - 1, n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

// The invariant series assembled coefficient by coefficient from explicit
// invariant dimensions.  Works on the polynomial-algebra side, where a
// monomial basis exists, then converts with the product of (1 - q^{2 d_i});
// degree-i polynomials sit in topological degree 2i.
inline TriSeries oracle_trigraded(const GroupSpec& spec, Caps caps) {
  if (spec.expected_order > max_group_order)
    throw std::invalid_argument(spec.name + " has order " +
                                std::to_string(spec.expected_order) +
                                ", beyond the brute-force scope");
  const int n = spec.rank;
  const auto elements = element_list(spec, max_group_order);

  // Per-element trace caches.
  const int imax = caps.q / 2;
  std::vector<std::vector<Rat>> poly_trace(elements.size());
  std::vector<std::vector<Rat>> wedge_trace(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) {
    poly_trace[e].reserve(imax + 1);
    for (int i = 0; i <= imax; ++i)
      poly_trace[e].push_back(action_trace_poly(elements[e], i));
    wedge_trace[e].reserve(n + 1);
    wedge_trace[e].push_back(Rat(1));
    for (int k = 1; k <= n; ++k)
      wedge_trace[e].push_back(action_trace_wedge_tensor(elements[e], {k}));
  }

  const Rat order(static_cast<std::int64_t>(elements.size()));
  TriSeries polynomial_side(caps);
  for (int m = 0; m <= caps.t; ++m) {
    const int jmax = (m == 0) ? 0 : std::min(caps.s, n * m);
    for (int j = (m == 0) ? 0 : m; j <= jmax; ++j) {
      std::vector<std::vector<int>> kvecs;
      std::vector<int> prefix;
      detail::compositions(j, m, n, prefix, kvecs);
      if (kvecs.empty()) continue;
      for (int i = 0; i <= imax; ++i) {
        Rat total(0);
        for (std::size_t e = 0; e < elements.size(); ++e) {
          Rat tensor(0);
          for (const auto& kvec : kvecs) {
            Rat prod(1);
            for (int k : kvec) prod *= wedge_trace[e][k];
            tensor += prod;
          }
          total += poly_trace[e][i] * tensor;
        }
        total /= order;
        if (!is_integer(total) || total < 0)
          throw std::logic_error("averaged trace is not a non-negative integer");
        if (total != 0) polynomial_side.set_coeff(2 * i, j, m, total);
      }
    }
  }

  UniPoly prefactor = UniPoly::one();
  for (int d : spec.degrees) {
    UniPoly f = UniPoly::one();
    f.set_coeff(2 * d, Rat(-1));
    prefactor = (prefactor * f).truncated(caps.q);
  }
  return lift_q(prefactor, caps) * polynomial_side;
}

}  // namespace commhilb::oracle
