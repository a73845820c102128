#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "commhilb/census.hpp"
#include "commhilb/rational.hpp"
#include "commhilb/triseries.hpp"
#include "commhilb/unipoly.hpp"

namespace commhilb {

// The trigraded invariant series is a polynomial in q; its q-degree is
// bounded by twice the number of reflections, i.e. 2*sum(d_i - 1).  Callers
// that need the full q-direction exactly should use at least this cap.
inline int exact_q_bound(const std::vector<int>& degrees) {
  int s = 0;
  for (int d : degrees) s += d - 1;
  return 2 * s;
}

// One summand of the averaged series: the truncated expansion of
//   1 / ( det(1 - q^2 w) * (1 - t*(det(1 + s w) - 1)) )
// for any element w with the given characteristic polynomial.
inline TriSeries class_term(const std::vector<std::int64_t>& charpoly, Caps caps) {
  auto [det_q, det_s] = eval_det_factors(charpoly);
  TriSeries inv_q = lift_q(det_q, Caps{caps.q, 0, 0}).inverse().embedded(caps);
  TriSeries tensor_factor(Caps{0, caps.s, caps.t});
  tensor_factor.set_coeff(0, 0, 0, Rat(1));
  if (caps.t >= 1)
    for (int k = 1; k <= std::min<int>(det_s.degree(), caps.s); ++k)
      if (det_s.coeff(k) != 0) tensor_factor.set_coeff(0, k, 1, -det_s.coeff(k));
  TriSeries inv_ts = tensor_factor.inverse().embedded(caps);
  return inv_q * inv_ts;
}

// The trigraded Hilbert series of the invariants: the product of
// (1 - q^{2 d_i}) over the fundamental degrees, times the census-weighted
// average of the class terms.  Every coefficient is the dimension of an
// invariant subspace, hence a non-negative integer; this is asserted.
inline TriSeries trigraded_hilb(const CharPolyCensus& census,
                                const std::vector<int>& degrees, Caps caps) {
  if (census.rank != static_cast<int>(degrees.size()))
    throw std::invalid_argument("census rank " + std::to_string(census.rank) +
                                " does not match " + std::to_string(degrees.size()) +
                                " fundamental degrees");
  const std::int64_t order = degree_product(degrees);
  if (census.total != order)
    throw std::invalid_argument("census total " + std::to_string(census.total) +
                                " does not match the degree product " +
                                std::to_string(order));
  TriSeries acc(caps);
  for (const auto& [cp, count] : census.entries) {
    std::vector<std::int64_t> monic = cp;
    monic.push_back(1);
    acc += scale(class_term(monic, caps), Rat(count));
  }
  UniPoly prefactor = UniPoly::one();
  for (int d : degrees) {
    UniPoly f = UniPoly::one();
    f.set_coeff(2 * d, Rat(-1));
    prefactor = (prefactor * f).truncated(caps.q);
  }
  TriSeries series = scale(lift_q(prefactor, caps) * acc, Rat(Int(1), Int(order)));
  if (!series.integral() || !series.nonnegative())
    throw std::logic_error("invariant series produced a non-integral or negative "
                           "coefficient; census or degrees are inconsistent");
  return series;
}

// Golden reference for the U(2) series:
//   (1+q^2) / (2 (1 - t(s^2+2s)))  +  (1-q^2) / (2 (1 + s^2 t)).
inline TriSeries closed_form_u2(Caps caps) {
  TriSeries den1(caps);  // 1 - t(s^2 + 2s)
  den1.set_coeff(0, 0, 0, Rat(1));
  if (caps.t >= 1) {
    if (caps.s >= 2) den1.set_coeff(0, 2, 1, Rat(-1));
    if (caps.s >= 1) den1.set_coeff(0, 1, 1, Rat(-2));
  }
  TriSeries den2(caps);  // 1 + s^2 t
  den2.set_coeff(0, 0, 0, Rat(1));
  if (caps.t >= 1 && caps.s >= 2) den2.set_coeff(0, 2, 1, Rat(1));

  TriSeries num1(caps);  // 1 + q^2
  num1.set_coeff(0, 0, 0, Rat(1));
  if (caps.q >= 2) num1.set_coeff(2, 0, 0, Rat(1));
  TriSeries num2(caps);  // 1 - q^2
  num2.set_coeff(0, 0, 0, Rat(1));
  if (caps.q >= 2) num2.set_coeff(2, 0, 0, Rat(-1));

  return scale(num1 * den1.inverse() + num2 * den2.inverse(), Rat(1, 2));
}

namespace detail {

inline void require_caps(const TriSeries& series, Caps needed, const char* op) {
  if (!series.caps().contains(needed))
    throw std::invalid_argument(std::string(op) + " needs series caps of at least " +
                                needed.str() + ", got " + series.caps().str());
}

}  // namespace detail

// Betti numbers of the identity component of the assembled commuting-tuple
// space: b_d sums the coefficients with total degree a + b = d over all
// tensor lengths, plus the unit in degree 0.  Coefficients at tensor length
// m satisfy b >= m, so caps of dmax in every variable suffice.
inline std::vector<Int> comm_betti(const TriSeries& series, int dmax) {
  if (dmax < 0) throw std::invalid_argument("dmax must be non-negative");
  detail::require_caps(series, Caps{dmax, dmax, dmax}, "comm_betti");
  std::vector<Int> betti(static_cast<std::size_t>(dmax) + 1, Int(0));
  betti[0] = 1;
  series.for_each_nonzero([&](int a, int b, int m, const Rat& v) {
    if (m >= 1 && a + b <= dmax) betti[a + b] += to_integer(v);
  });
  return betti;
}

// Ranks of the reduced cohomology of the commuting-tuple spaces, per the
// stable splitting: rank(m, d) = sum_{s=1..m} C(m,s) * [total degree d at
// tensor length s].
struct BettiTable {
  std::string group;
  std::map<std::pair<int, int>, Int> ranks;  // (m, d) -> rank, zeros omitted

  Int rank(int m, int d) const {
    auto it = ranks.find({m, d});
    return it == ranks.end() ? Int(0) : it->second;
  }
};

inline BettiTable hom_betti(const TriSeries& series, int m, int dmax,
                            std::string group = {}) {
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  if (dmax < 0) throw std::invalid_argument("dmax must be non-negative");
  detail::require_caps(series, Caps{dmax, dmax, m}, "hom_betti");
  BettiTable table;
  table.group = std::move(group);
  series.for_each_nonzero([&](int a, int b, int mm, const Rat& v) {
    if (mm >= 1 && mm <= m && a + b <= dmax) {
      Int add = binomial(m, mm) * to_integer(v);
      if (add != 0) table.ranks[{m, a + b}] += add;
    }
  });
  return table;
}

// Ungraded series of the assembled space for a rank-n torus: 1/(2-(1+t)^n).
inline UniPoly ungraded_comm_hilb(int rank, int tmax) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (tmax < 0) throw std::invalid_argument("tmax must be non-negative");
  UniPoly denom{Rat(2)};
  UniPoly one_plus_t{Rat(1), Rat(1)};
  denom = denom - one_plus_t.pow(rank).truncated(tmax);
  return denom.inverse_trunc(tmax);
}

// Hilbert series of the free monoid on a connected space with the given
// Poincare series: 1/(2 - h).
inline UniPoly james_hilb(const UniPoly& h, int tmax) {
  if (h.coeff(0) != 1)
    throw std::invalid_argument("the input Poincare series must have constant term 1");
  UniPoly denom = UniPoly{Rat(2)} - h.truncated(tmax);
  return denom.inverse_trunc(tmax);
}

// Number of non-identity path components of the space of commuting
// n-tuples in SO(3); each such component is a quaternionic spherical space
// form.  Closed form splits on the parity of n.
inline Int so3_components(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n % 2 == 0) {
    Int v = int_pow(4, n) + 3 * int_pow(2, n) + 2;
    if (v % 6 != 0) throw std::logic_error("parity formula lost integrality");
    return v / 6;
  }
  Int v = 2 * (int_pow(4, n - 1) - 1);
  if (v % 3 != 0) throw std::logic_error("parity formula lost integrality");
  return v / 3 - int_pow(2, n - 1) + 1;
}

// Poincare polynomial of the flag variety: prod(1-q^{2 d_i}) / (1-q^2)^n.
// The division must be exact; a remainder signals a wrong degree vector.
inline UniPoly coinvariant_poincare(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("empty degree vector");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("fundamental degrees must be positive");
  UniPoly num = UniPoly::one();
  for (int d : degrees) {
    UniPoly f = UniPoly::one();
    f.set_coeff(2 * d, Rat(-1));
    num = num * f;
  }
  UniPoly den = UniPoly{Rat(1), Rat(0), Rat(-1)}.pow(static_cast<int>(degrees.size()));
  UniPoly quo;
  try {
    quo = num.divide_exact(den);
  } catch (const std::domain_error&) {
    throw std::invalid_argument(
        "degree vector does not yield a polynomial flag-variety series");
  }
  return quo;
}

// Reduced Poincare polynomial of the group itself, rationally an exterior
// algebra on classes in degrees 2 d_i - 1: prod(1 + z^{2 d_i - 1}) - 1.
inline UniPoly exterior_poincare(const std::vector<int>& degrees) {
  UniPoly p = UniPoly::one();
  for (int d : degrees) {
    UniPoly f = UniPoly::one();
    f.set_coeff(2 * d - 1, Rat(1));
    p = p * f;
  }
  return p - UniPoly::one();
}

}  // namespace commhilb
