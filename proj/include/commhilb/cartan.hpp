#pragma once

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "commhilb/intmat.hpp"

namespace commhilb {

// A finite reflection group presented by exact integer matrices, together
// with the classical data needed by the series computations.  Matrices act
// on the simple-root basis (or the permutation basis for the U(n) family),
// so all entries are integers and hashing / characteristic polynomials are
// exact.
struct GroupSpec {
  std::string name;        // CLI-visible label, e.g. "U2", "G2", "Spin8"
  std::string family_key;  // canonical generator-set key, used for census reuse
  int rank = 0;            // rank of the maximal torus
  std::vector<IntMat> generators;
  std::vector<int> degrees;  // fundamental degrees d_1..d_n
  std::int64_t expected_order = 0;
  std::string note;  // set when reported series describe the identity component only
};

inline std::int64_t degree_product(const std::vector<int>& degrees) {
  std::int64_t p = 1;
  for (int d : degrees) p = checked_mul(p, d);
  return p;
}

// Simple reflections on the root lattice: s_i sends alpha_j to
// alpha_j - C[j][i] * alpha_i, written in the simple-root basis.
inline std::vector<IntMat> cartan_reflections(
    const std::vector<std::vector<std::int64_t>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("Cartan matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2)
      throw std::invalid_argument("Cartan matrix must have 2 on the diagonal");
    for (int j = 0; j < n; ++j)
      if (i != j && cartan[i][j] > 0)
        throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
  }
  std::vector<IntMat> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) {
    IntMat m = IntMat::identity(n);
    for (int j = 0; j < n; ++j) m.at(i, j) -= cartan[j][i];
    gens.push_back(std::move(m));
  }
  return gens;
}

namespace detail {

using CartanMatrix = std::vector<std::vector<std::int64_t>>;

inline CartanMatrix cartan_chain(int n) {  // type A
  CartanMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

inline CartanMatrix cartan_B(int n) {  // last simple root short
  CartanMatrix c = cartan_chain(n);
  if (n >= 2) c[n - 1][n - 2] = -2;
  return c;
}

inline CartanMatrix cartan_C(int n) {  // last simple root long
  CartanMatrix c = cartan_chain(n);
  if (n >= 2) c[n - 2][n - 1] = -2;
  return c;
}

inline CartanMatrix cartan_D(int n) {  // fork at the end; n >= 2
  CartanMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  if (n >= 3) c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
  return c;
}

inline CartanMatrix cartan_G2() { return {{2, -1}, {-3, 2}}; }

inline CartanMatrix cartan_F4() {
  return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
}

inline CartanMatrix cartan_E(int n) {  // Bourbaki numbering: chain 1-3-4-..-n, 2 attached to 4
  CartanMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  link(1, 3);
  for (int k = 3; k < n; ++k) link(k, k + 1);
  link(2, 4);
  return c;
}

inline std::vector<IntMat> permutation_generators(int n) {
  std::vector<IntMat> gens;
  for (int i = 0; i + 1 < n; ++i) {
    IntMat m = IntMat::identity(n);
    m.at(i, i) = m.at(i + 1, i + 1) = 0;
    m.at(i, i + 1) = m.at(i + 1, i) = 1;
    gens.push_back(std::move(m));
  }
  return gens;
}

inline std::vector<int> even_degrees(int n) {  // 2, 4, ..., 2n
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = 2 * (i + 1);
  return d;
}

inline std::vector<int> type_D_degrees(int n) {  // 2, 4, ..., 2n-2, n
  if (n == 1) return {1};
  std::vector<int> d;
  for (int i = 1; i < n; ++i) d.push_back(2 * i);
  d.push_back(n);
  return d;
}

inline GroupSpec make_spec(std::string name, std::string family_key, int rank,
                           std::vector<IntMat> gens, std::vector<int> degrees) {
  GroupSpec s;
  s.name = std::move(name);
  s.family_key = std::move(family_key);
  s.rank = rank;
  s.generators = std::move(gens);
  s.degrees = std::move(degrees);
  s.expected_order = degree_product(s.degrees);
  return s;
}

constexpr int max_preset_rank = 12;

inline void check_rank(const std::string& family, int rank, int minimum = 1) {
  if (rank < minimum)
    throw std::invalid_argument("preset " + family + " needs rank >= " +
                                std::to_string(minimum) + ", got " + std::to_string(rank));
  if (rank > max_preset_rank)
    throw std::invalid_argument("preset " + family + " rank " + std::to_string(rank) +
                                " exceeds the supported maximum " +
                                std::to_string(max_preset_rank));
}

inline GroupSpec type_A(std::string name, std::string family_key, int n) {
  return make_spec(std::move(name), std::move(family_key), n,
                   cartan_reflections(cartan_chain(n)), [&] {
                     std::vector<int> d(n);
                     for (int i = 0; i < n; ++i) d[i] = i + 2;
                     return d;
                   }());
}

inline GroupSpec type_B(std::string name, int n) {
  return make_spec(std::move(name), n == 1 ? "A1" : "B" + std::to_string(n), n,
                   cartan_reflections(cartan_B(n)), even_degrees(n));
}

inline GroupSpec type_C(std::string name, int n) {
  return make_spec(std::move(name), n == 1 ? "A1" : "C" + std::to_string(n), n,
                   cartan_reflections(cartan_C(n)), even_degrees(n));
}

inline GroupSpec type_D(std::string name, int n) {
  if (n == 1)  // rank-1 torus with trivial Weyl group
    return make_spec(std::move(name), "D1", 1, {}, {1});
  return make_spec(std::move(name), "D" + std::to_string(n), n,
                   cartan_reflections(cartan_D(n)), type_D_degrees(n));
}

}  // namespace detail

// Presets for every group family the series computations support.  `family`
// uses the rank placeholder spellings Un, SUn, Spn, Spin2n1, Spin2n, SOn, An,
// Bn, Cn, Dn; the exceptional names G2, F4, E6, E7, E8 carry their own rank.
inline GroupSpec group_preset(const std::string& family, int rank) {
  using namespace detail;
  if (family == "G2") {
    auto s = make_spec("G2", "G2", 2, cartan_reflections(cartan_G2()), {2, 6});
    return s;
  }
  if (family == "F4")
    return make_spec("F4", "F4", 4, cartan_reflections(cartan_F4()), {2, 6, 8, 12});
  if (family == "E6")
    return make_spec("E6", "E6", 6, cartan_reflections(cartan_E(6)), {2, 5, 6, 8, 9, 12});
  if (family == "E7")
    return make_spec("E7", "E7", 7, cartan_reflections(cartan_E(7)),
                     {2, 6, 8, 10, 12, 14, 18});
  if (family == "E8")
    return make_spec("E8", "E8", 8, cartan_reflections(cartan_E(8)),
                     {2, 8, 12, 14, 18, 20, 24, 30});
  if (family == "Un") {
    check_rank(family, rank);
    std::vector<int> d(rank);
    for (int i = 0; i < rank; ++i) d[i] = i + 1;
    return make_spec("U" + std::to_string(rank), "U" + std::to_string(rank), rank,
                     permutation_generators(rank), std::move(d));
  }
  if (family == "SUn") {
    check_rank(family, rank, 2);  // rank parameter is n of SU(n); torus rank is n-1
    return type_A("SU" + std::to_string(rank), "A" + std::to_string(rank - 1), rank - 1);
  }
  if (family == "Spn") {
    check_rank(family, rank);
    return type_C("Sp" + std::to_string(rank), rank);
  }
  if (family == "Spin2n1") {
    check_rank(family, rank);
    return type_B("Spin" + std::to_string(2 * rank + 1), rank);
  }
  if (family == "Spin2n") {
    check_rank(family, rank);
    return type_D("Spin" + std::to_string(2 * rank), rank);
  }
  if (family == "SOn") {
    check_rank(family, rank, 2);  // rank parameter is m of SO(m)
    GroupSpec s = (rank % 2 == 1) ? type_B("SO" + std::to_string(rank), (rank - 1) / 2)
                                  : type_D("SO" + std::to_string(rank), rank / 2);
    s.note = "SO(m) is not simply connected; reported series describe the identity "
             "component Comm(G)_1 and coincide with the Spin(m) series";
    return s;
  }
  if (family == "An") {
    check_rank(family, rank);
    return type_A("A" + std::to_string(rank), "A" + std::to_string(rank), rank);
  }
  if (family == "Bn") {
    check_rank(family, rank);
    return type_B("B" + std::to_string(rank), rank);
  }
  if (family == "Cn") {
    check_rank(family, rank);
    return type_C("C" + std::to_string(rank), rank);
  }
  if (family == "Dn") {
    check_rank(family, rank);
    return type_D("D" + std::to_string(rank), rank);
  }
  throw std::invalid_argument("unknown group family: " + family);
}

// Compact labels carry the rank inline: "U3", "SU4", "Sp2", "Spin7", "SO5",
// "A2", "B3", "C4", "D4", "G2", "F4", "E6", "E7", "E8".
inline GroupSpec group_preset(const std::string& label) {
  std::size_t pos = 0;
  while (pos < label.size() && !std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
  const std::string family = label.substr(0, pos);
  if (pos == label.size()) throw std::invalid_argument("group label needs a rank: " + label);
  int value = 0;
  for (std::size_t i = pos; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw std::invalid_argument("malformed group label: " + label);
    value = value * 10 + (label[i] - '0');
    if (value > 1000) throw std::invalid_argument("group label rank out of range: " + label);
  }
  if (family == "G" || family == "F" || family == "E")
    return group_preset(label, 0);
  if (family == "U") return group_preset("Un", value);
  if (family == "SU") return group_preset("SUn", value);
  if (family == "Sp") return group_preset("Spn", value);
  if (family == "Spin") {
    if (value < 2) throw std::invalid_argument("Spin(m) needs m >= 2");
    return (value % 2 == 1) ? group_preset("Spin2n1", (value - 1) / 2)
                            : group_preset("Spin2n", value / 2);
  }
  if (family == "SO") return group_preset("SOn", value);
  if (family == "A") return group_preset("An", value);
  if (family == "B") return group_preset("Bn", value);
  if (family == "C") return group_preset("Cn", value);
  if (family == "D") return group_preset("Dn", value);
  throw std::invalid_argument("unknown group label: " + label);
}

// Accepts either a compact label ("E7", "Spin8") or a family spelling with a
// separate rank parameter ("Un" with rank 3).
inline GroupSpec resolve_group(const std::string& name, int rank = 0) {
  static const char* families[] = {"Un",  "SUn", "Spn", "Spin2n1", "Spin2n",
                                   "SOn", "An",  "Bn",  "Cn",      "Dn"};
  for (const char* f : families)
    if (name == f) {
      if (rank <= 0)
        throw std::invalid_argument("group family " + name + " needs --rank");
      return group_preset(name, rank);
    }
  return group_preset(name);
}

}  // namespace commhilb
