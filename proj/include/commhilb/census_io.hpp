#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "commhilb/cartan.hpp"
#include "commhilb/census.hpp"
#include "commhilb/version.hpp"

namespace commhilb {

inline constexpr int census_format_version = 1;

struct CensusFileData {
  int format_version = 0;
  std::string preset;
  int rank = 0;
  std::int64_t expected_order = 0;
  std::vector<IntMat> generators;
  CharPolyCensus census;
  std::string checksum;
};

namespace detail {

// FNV-1a over the canonical entry bytes; detects corruption and hand
// edits, not tampering.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string canonical_entry_bytes(const CharPolyCensus& census) {
  std::ostringstream os;
  for (const auto& [cp, count] : census.entries) {
    for (std::size_t i = 0; i < cp.size(); ++i) {
      if (i) os << ',';
      os << cp[i];
    }
    os << ':' << count << ';';
  }
  return os.str();
}

}  // namespace detail

inline std::string census_checksum(const CharPolyCensus& census) {
  return detail::fnv1a_hex(detail::canonical_entry_bytes(census));
}

// Structural and arithmetic sanity of a census against its metadata.
inline void validate_census(const CharPolyCensus& census, std::int64_t expected_order) {
  std::int64_t total = 0;
  std::vector<std::int64_t> identity_cp(census.rank);
  {  // (x-1)^n lower coefficients
    std::vector<std::int64_t> full(census.rank + 1, 0);
    full[0] = 1;
    for (int d = 0; d < census.rank; ++d)
      for (int k = d + 1; k >= 0; --k)
        full[k] = (k > 0 ? full[k - 1] : 0) - full[k];
    for (int i = 0; i < census.rank; ++i) identity_cp[i] = full[i];
  }
  bool has_identity = false;
  for (const auto& [cp, count] : census.entries) {
    if (static_cast<int>(cp.size()) != census.rank)
      throw std::runtime_error("census entry length does not match rank");
    if (count <= 0) throw std::runtime_error("census entry with non-positive count");
    if (cp.empty() || (cp[0] != 1 && cp[0] != -1))
      throw std::runtime_error("census entry with |constant coefficient| != 1");
    if (cp == identity_cp) has_identity = (count >= 1);
    total = checked_add(total, count);
  }
  if (!has_identity) throw std::runtime_error("census does not contain the identity class");
  if (total != census.total)
    throw std::runtime_error("census total field disagrees with the entry counts");
  if (total != expected_order)
    throw std::runtime_error("census total " + std::to_string(total) +
                             " does not match the expected group order " +
                             std::to_string(expected_order));
}

inline void write_census(const CharPolyCensus& census, const GroupSpec& spec,
                         const std::filesystem::path& path) {
  validate_census(census, spec.expected_order);
  nlohmann::ordered_json j;
  j["format_version"] = census_format_version;
  j["tool_version"] = version_string;
  j["preset"] = spec.name;
  j["rank"] = spec.rank;
  j["expected_order"] = spec.expected_order;
  auto gens = nlohmann::ordered_json::array();
  for (const IntMat& g : spec.generators) gens.push_back(g.rows());
  j["generators"] = std::move(gens);
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [cp, count] : census.entries)
    entries.push_back({{"charpoly", cp}, {"count", count}});
  j["entries"] = std::move(entries);
  j["checksum"] = census_checksum(census);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

inline CensusFileData read_census_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open census file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed census file " + path.string() + ": " + e.what());
  }
  CensusFileData data;
  data.format_version = j.at("format_version").get<int>();
  if (data.format_version != census_format_version)
    throw std::runtime_error("census file " + path.string() + " has format version " +
                             std::to_string(data.format_version) + ", expected " +
                             std::to_string(census_format_version));
  data.preset = j.at("preset").get<std::string>();
  data.rank = j.at("rank").get<int>();
  data.expected_order = j.at("expected_order").get<std::int64_t>();
  if (j.contains("generators"))
    for (const auto& g : j.at("generators"))
      data.generators.push_back(
          IntMat::from_rows(g.get<std::vector<std::vector<std::int64_t>>>()));
  data.census.rank = data.rank;
  for (const auto& e : j.at("entries")) {
    auto cp = e.at("charpoly").get<std::vector<std::int64_t>>();
    auto count = e.at("count").get<std::int64_t>();
    if (data.census.entries.count(cp))
      throw std::runtime_error("census file has a duplicate charpoly entry");
    data.census.entries[cp] = count;
    data.census.total = checked_add(data.census.total, count);
  }
  data.checksum = j.at("checksum").get<std::string>();
  if (data.checksum != census_checksum(data.census))
    throw std::runtime_error("census file " + path.string() +
                             " failed its checksum; refusing to use it");
  validate_census(data.census, data.expected_order);
  return data;
}

// Reads a census and validates it against the requesting group as well as
// its own metadata.  This is the only supported path for groups beyond
// desk scale.
inline CharPolyCensus read_census(const std::filesystem::path& path, const GroupSpec& spec) {
  CensusFileData data = read_census_file(path);
  if (data.rank != spec.rank)
    throw std::runtime_error("census file rank " + std::to_string(data.rank) +
                             " does not match " + spec.name + " rank " +
                             std::to_string(spec.rank));
  if (data.expected_order != spec.expected_order)
    throw std::runtime_error("census file order " + std::to_string(data.expected_order) +
                             " does not match " + spec.name + " order " +
                             std::to_string(spec.expected_order));
  if (spec.expected_order != degree_product(spec.degrees))
    throw std::runtime_error("fundamental degrees of " + spec.name +
                             " do not multiply to the expected order");
  return data.census;
}

}  // namespace commhilb
