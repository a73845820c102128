#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "commhilb/cartan.hpp"
#include "commhilb/intmat.hpp"

namespace commhilb {

// Multiset of characteristic polynomials over a finite matrix group.  The
// key is the coefficient vector (a_0,...,a_{n-1}) of det(x*I - w), the
// monic leading coefficient being implicit.  Lossless for every class
// function that depends only on eigenvalues, which covers all the series
// computed here.
struct CharPolyCensus {
  int rank = 0;
  std::map<std::vector<std::int64_t>, std::int64_t> entries;
  std::int64_t total = 0;
};

// Full enumeration is supported up to roughly E7-sized groups.  Larger
// groups (E8 in particular) must be ingested from a census file.
inline constexpr std::int64_t desk_scale_limit = 20'000'000;

namespace detail {

inline std::uint64_t mix_hash(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    for (std::int64_t x : v) h = mix_hash(h, static_cast<std::uint64_t>(x));
    return static_cast<std::size_t>(h);
  }
};

// Orbit of the standard basis vectors under the generated group.  Each
// group element is then faithfully encoded by the n orbit indices of its
// basis-vector images, and generator action becomes a permutation lookup.
struct BasisOrbit {
  int rank = 0;
  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::uint32_t> basis_index;            // index of e_i in points
  std::vector<std::vector<std::uint32_t>> gen_perm;  // gen_perm[g][p]
};

inline constexpr std::size_t max_orbit_points = 65535;  // keeps codes in uint16

// Returns false when the orbit does not fit the compact encoding; callers
// fall back to hashing whole matrices in that case.
inline bool build_basis_orbit(const GroupSpec& spec, BasisOrbit& orbit) {
  const int n = spec.rank;
  orbit.rank = n;
  orbit.points.clear();
  orbit.basis_index.clear();
  std::unordered_map<std::vector<std::int64_t>, std::uint32_t, VecHash> index;
  auto intern = [&](std::vector<std::int64_t> v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(orbit.points.size());
    index.emplace(v, id);
    orbit.points.push_back(std::move(v));
    return id;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    orbit.basis_index.push_back(intern(std::move(e)));
  }
  for (std::size_t cursor = 0; cursor < orbit.points.size(); ++cursor) {
    for (const IntMat& g : spec.generators) {
      std::vector<std::int64_t> img = g.apply(orbit.points[cursor]);
      intern(std::move(img));
      if (orbit.points.size() > max_orbit_points) return false;
    }
  }
  orbit.gen_perm.assign(spec.generators.size(), {});
  for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
    auto& perm = orbit.gen_perm[gi];
    perm.resize(orbit.points.size());
    for (std::size_t p = 0; p < orbit.points.size(); ++p) {
      auto it = index.find(spec.generators[gi].apply(orbit.points[p]));
      if (it == index.end()) throw std::logic_error("basis orbit not closed");
      perm[p] = it->second;
    }
  }
  return true;
}

// Open-addressing set of fixed-width element codes (n uint16 indices each).
// Codes are stored contiguously in discovery order, which is the canonical
// element ordering.
class CodeSet {
 public:
  explicit CodeSet(int width) : width_(width), table_(1024, empty_slot) {}

  std::size_t size() const { return count_; }

  const std::uint16_t* code(std::size_t idx) const { return codes_.data() + idx * width_; }

  // Inserts the code if absent; returns true when it was new.
  bool insert(const std::uint16_t* code) {
    if ((count_ + 1) * 2 > table_.size()) rehash();
    const std::uint64_t h = hash(code);
    std::size_t mask = table_.size() - 1;
    std::size_t slot = static_cast<std::size_t>(h) & mask;
    while (table_[slot] != empty_slot) {
      if (equals(table_[slot], code)) return false;
      slot = (slot + 1) & mask;
    }
    table_[slot] = static_cast<std::uint32_t>(count_);
    codes_.insert(codes_.end(), code, code + width_);
    ++count_;
    return true;
  }

 private:
  static constexpr std::uint32_t empty_slot = 0xffffffffu;

  std::uint64_t hash(const std::uint16_t* code) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < width_; ++i) h = mix_hash(h, code[i]);
    return h;
  }

  bool equals(std::uint32_t idx, const std::uint16_t* code) const {
    const std::uint16_t* other = codes_.data() + static_cast<std::size_t>(idx) * width_;
    for (int i = 0; i < width_; ++i)
      if (other[i] != code[i]) return false;
    return true;
  }

  void rehash() {
    std::vector<std::uint32_t> bigger(table_.size() * 2, empty_slot);
    const std::size_t mask = bigger.size() - 1;
    for (std::size_t idx = 0; idx < count_; ++idx) {
      std::size_t slot = static_cast<std::size_t>(hash(code(idx))) & mask;
      while (bigger[slot] != empty_slot) slot = (slot + 1) & mask;
      bigger[slot] = static_cast<std::uint32_t>(idx);
    }
    table_.swap(bigger);
  }

  int width_;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> codes_;
  std::vector<std::uint32_t> table_;
};

// Breadth-first closure in the orbit encoding.  Left-multiplying by a
// generator maps each stored orbit index through that generator's
// permutation table.
inline CodeSet enumerate_codes(const GroupSpec& spec, const BasisOrbit& orbit,
                               std::int64_t limit) {
  const int n = spec.rank;
  CodeSet seen(n);
  std::vector<std::uint16_t> identity(n);
  for (int i = 0; i < n; ++i)
    identity[i] = static_cast<std::uint16_t>(orbit.basis_index[i]);
  seen.insert(identity.data());
  std::vector<std::uint16_t> child(n);
  for (std::size_t cursor = 0; cursor < seen.size(); ++cursor) {
    for (const auto& perm : orbit.gen_perm) {
      const std::uint16_t* cur = seen.code(cursor);
      for (int i = 0; i < n; ++i) child[i] = static_cast<std::uint16_t>(perm[cur[i]]);
      if (seen.insert(child.data()) &&
          static_cast<std::int64_t>(seen.size()) > limit)
        throw std::runtime_error(
            "group closure exceeded limit " + std::to_string(limit) +
            "; the generators do not generate the expected finite group");
    }
  }
  return seen;
}

inline IntMat matrix_from_code(const BasisOrbit& orbit, const std::uint16_t* code) {
  const int n = orbit.rank;
  IntMat m(n);
  for (int j = 0; j < n; ++j) {
    const auto& col = orbit.points[code[j]];
    for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

using CensusMap = std::map<std::vector<std::int64_t>, std::int64_t>;

inline void census_from_codes(const BasisOrbit& orbit, const CodeSet& codes,
                              CensusMap& out) {
  const std::size_t count = codes.size();
  unsigned nthreads = std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  if (count < 100000) nthreads = 1;
  if (nthreads > 8) nthreads = 8;
  std::vector<CensusMap> partial(nthreads);
  std::vector<std::exception_ptr> errors(nthreads);
  auto worker = [&](unsigned t) {
    try {
      CensusMap local;
      const std::size_t lo = count * t / nthreads;
      const std::size_t hi = count * (t + 1) / nthreads;
      for (std::size_t idx = lo; idx < hi; ++idx) {
        auto cp = charpoly(matrix_from_code(orbit, codes.code(idx)));
        cp.pop_back();  // drop the monic leading 1
        ++local[cp];
      }
      partial[t] = std::move(local);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  for (auto& local : partial)
    for (auto& [cp, cnt] : local) out[cp] += cnt;
}

// Fallback for generator sets whose basis orbit is too large for the
// compact encoding: hash whole matrices.  Only reasonable for small groups,
// so it carries a tighter memory guard.
inline CharPolyCensus enumerate_census_dense(const GroupSpec& spec, std::int64_t limit) {
  const int n = spec.rank;
  if (limit > 2'000'000)
    throw std::runtime_error(
        "generator set needs dense matrix hashing, which is limited to 2e6 elements");
  std::unordered_map<std::vector<std::int64_t>, std::uint32_t, VecHash> seen;
  std::vector<std::vector<std::int64_t>> queue;
  queue.push_back(IntMat::identity(n).data());
  seen.emplace(queue.back(), 0);
  CharPolyCensus census;
  census.rank = n;
  for (std::size_t cursor = 0; cursor < queue.size(); ++cursor) {
    IntMat cur(n);
    {
      IntMat tmp(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tmp.at(i, j) = queue[cursor][i * n + j];
      cur = tmp;
    }
    auto cp = charpoly(cur);
    cp.pop_back();
    ++census.entries[cp];
    ++census.total;
    for (const IntMat& g : spec.generators) {
      IntMat next = g * cur;
      auto key = next.data();
      if (seen.emplace(key, static_cast<std::uint32_t>(queue.size())).second) {
        queue.push_back(std::move(key));
        if (static_cast<std::int64_t>(queue.size()) > limit)
          throw std::runtime_error(
              "group closure exceeded limit " + std::to_string(limit) +
              "; the generators do not generate the expected finite group");
      }
    }
  }
  return census;
}

}  // namespace detail

// Enumerates the group generated by spec.generators and aggregates it into
// a characteristic-polynomial census.  `limit` defaults to the expected
// order; exceeding it aborts the closure.
inline CharPolyCensus enumerate_census(const GroupSpec& spec, std::int64_t limit = 0) {
  if (spec.rank < 1) throw std::invalid_argument("group rank must be positive");
  if (limit == 0) limit = spec.expected_order;
  if (limit < spec.expected_order)
    throw std::invalid_argument("enumeration limit " + std::to_string(limit) +
                                " is below the expected order " +
                                std::to_string(spec.expected_order));
  if (spec.expected_order > desk_scale_limit)
    throw std::runtime_error(
        spec.name + " has order " + std::to_string(spec.expected_order) +
        ", beyond desk scale; ingest a census file instead of enumerating");

  detail::BasisOrbit orbit;
  if (!detail::build_basis_orbit(spec, orbit))
    return detail::enumerate_census_dense(spec, limit);

  detail::CodeSet codes = detail::enumerate_codes(spec, orbit, limit);
  CharPolyCensus census;
  census.rank = spec.rank;
  census.total = static_cast<std::int64_t>(codes.size());
  detail::census_from_codes(orbit, codes, census.entries);
  return census;
}

// All group elements as matrices, in breadth-first discovery order.  Meant
// for the brute-force checks, hence the small default bound.
inline std::vector<IntMat> element_list(const GroupSpec& spec, std::int64_t limit = 10000) {
  if (spec.rank < 1) throw std::invalid_argument("group rank must be positive");
  if (spec.expected_order > limit)
    throw std::invalid_argument("group order " + std::to_string(spec.expected_order) +
                                " exceeds the element-list limit " + std::to_string(limit));
  detail::BasisOrbit orbit;
  if (!detail::build_basis_orbit(spec, orbit))
    throw std::runtime_error("generator set does not fit the orbit encoding");
  detail::CodeSet codes = detail::enumerate_codes(spec, orbit, limit);
  std::vector<IntMat> elements;
  elements.reserve(codes.size());
  for (std::size_t idx = 0; idx < codes.size(); ++idx)
    elements.push_back(detail::matrix_from_code(orbit, codes.code(idx)));
  return elements;
}

// Number of elements with determinant +1, read off the census.
inline std::int64_t det_plus_count(const CharPolyCensus& census) {
  std::int64_t count = 0;
  for (const auto& [cp, cnt] : census.entries) {
    std::vector<std::int64_t> full = cp;
    full.push_back(1);
    if (det_from_charpoly(full) == 1) count += cnt;
  }
  return count;
}

}  // namespace commhilb
