// Command-line front end: group presets, census persistence, invariant
// series, Betti extraction, closed forms, and the verification suite.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commhilb/commhilb.hpp"

namespace fs = std::filesystem;
using namespace commhilb;

namespace {

fs::path default_cache_dir() {
  if (const char* env = std::getenv("COMMHILB_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return fs::path(xdg) / "commhilb";
  if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "commhilb";
  return fs::path("commhilb-cache");
}

fs::path cache_file(const fs::path& dir, const GroupSpec& spec) {
  return dir / (spec.name + "-v" + std::to_string(census_format_version) +
                ".census.json");
}

// Loads a census from an explicit file, else from the cache when present
// and valid, else enumerates and caches.
CharPolyCensus obtain_census(const GroupSpec& spec, const fs::path& cache_dir,
                             const std::string& census_path, std::int64_t limit,
                             bool verbose) {
  if (!census_path.empty()) return read_census(census_path, spec);
  const fs::path cached = cache_file(cache_dir, spec);
  if (fs::exists(cached)) {
    try {
      CharPolyCensus census = read_census(cached, spec);
      if (verbose) std::cerr << "using cached census " << cached << '\n';
      return census;
    } catch (const std::exception& e) {
      std::cerr << "ignoring invalid cache " << cached << ": " << e.what() << '\n';
    }
  }
  CharPolyCensus census = enumerate_census(spec, limit);
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  if (!ec) {
    try {
      write_census(census, spec, cached);
      if (verbose) std::cerr << "cached census at " << cached << '\n';
    } catch (const std::exception& e) {
      std::cerr << "could not cache census: " << e.what() << '\n';
    }
  }
  return census;
}

nlohmann::ordered_json series_json(const GroupSpec& spec, const TriSeries& series) {
  nlohmann::ordered_json j;
  j["schema_version"] = output_schema_version;
  j["tool_version"] = version_string;
  j["group"] = spec.name;
  j["caps"] = {{"q", series.caps().q}, {"s", series.caps().s}, {"t", series.caps().t}};
  if (!spec.note.empty()) j["note"] = spec.note;
  auto coeffs = nlohmann::ordered_json::array();
  for (int m = 0; m <= series.caps().t; ++m)
    for (int b = 0; b <= series.caps().s; ++b)
      for (int a = 0; a <= series.caps().q; ++a) {
        const Rat& v = series.coeff(a, b, m);
        if (v != 0)
          coeffs.push_back({{"q", a}, {"s", b}, {"t", m}, {"value", v.str()}});
      }
  j["coefficients"] = std::move(coeffs);
  return j;
}

nlohmann::ordered_json poly_json(const std::string& label, const UniPoly& poly,
                                 int tmax, const std::string& var) {
  nlohmann::ordered_json j;
  j["schema_version"] = output_schema_version;
  j["tool_version"] = version_string;
  if (!label.empty()) j["group"] = label;
  auto coeffs = nlohmann::ordered_json::array();
  for (int k = 0; k <= tmax; ++k)
    coeffs.push_back({{var, k}, {"value", poly.coeff(k).str()}});
  j["coefficients"] = std::move(coeffs);
  return j;
}

std::vector<Rat> parse_coeff_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty coefficient in list");
    out.emplace_back(Rat(item));
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

struct CommonOptions {
  std::string group;
  int rank = 0;
  std::string census_path;
  std::string cache_dir = default_cache_dir().string();
  std::string format = "text";
  bool verbose = false;
};

void add_group_options(CLI::App* cmd, CommonOptions& opt, bool with_census = true) {
  cmd->add_option("--group", opt.group, "group preset, e.g. U2, SU3, Sp2, Spin7, A2, G2")
      ->required();
  cmd->add_option("--rank", opt.rank, "rank parameter for family spellings like Un, An");
  if (with_census) {
    cmd->add_option("--census", opt.census_path, "read the census from this file");
    cmd->add_option("--cache-dir", opt.cache_dir, "census cache directory")
        ->envname("COMMHILB_CACHE_DIR");
  }
  cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("-v,--verbose", opt.verbose, "log cache activity");
}

void print_note(const GroupSpec& spec, const std::string& format) {
  if (!spec.note.empty() && format == "text")
    std::cout << "note: " << spec.note << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant series of commuting-tuple spaces for compact Lie groups"};
  app.require_subcommand(1);

  // census
  CommonOptions census_opt;
  std::string census_out;
  std::int64_t census_limit = 0;
  auto* census_cmd = app.add_subcommand("census", "enumerate a Weyl group and persist its census");
  add_group_options(census_cmd, census_opt, false);
  census_cmd->add_option("--out", census_out, "output census file")->required();
  census_cmd->add_option("--limit", census_limit,
                         "abort if the closure exceeds this many elements");

  // hilb
  CommonOptions hilb_opt;
  int qmax = 0, smax = 0, tmax = 0;
  auto* hilb_cmd = app.add_subcommand("hilb", "trigraded invariant series in q, s, t");
  add_group_options(hilb_cmd, hilb_opt);
  hilb_cmd->add_option("--qmax", qmax, "q-exponent cap")->required()->check(CLI::PositiveNumber);
  hilb_cmd->add_option("--smax", smax, "s-exponent cap")->required()->check(CLI::PositiveNumber);
  hilb_cmd->add_option("--tmax", tmax, "t-exponent cap")->required()->check(CLI::PositiveNumber);

  // betti
  CommonOptions betti_opt;
  int betti_m = 0, betti_dmax = 0;
  auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers of the commuting-tuple space");
  add_group_options(betti_cmd, betti_opt);
  betti_cmd->add_option("-m", betti_m, "number of commuting generators")
      ->required()
      ->check(CLI::PositiveNumber);
  betti_cmd->add_option("--dmax", betti_dmax, "largest cohomological degree")
      ->required()
      ->check(CLI::PositiveNumber);

  // comm-betti
  CommonOptions comm_opt;
  int comm_dmax = 0;
  auto* comm_cmd = app.add_subcommand("comm-betti", "graded Betti numbers of the assembled space");
  add_group_options(comm_cmd, comm_opt);
  comm_cmd->add_option("--dmax", comm_dmax, "largest cohomological degree")
      ->required()
      ->check(CLI::PositiveNumber);

  // ungraded
  CommonOptions ungraded_opt;
  int ungraded_tmax = 0;
  auto* ungraded_cmd = app.add_subcommand("ungraded", "ungraded series 1/(2-(1+t)^rank)");
  add_group_options(ungraded_cmd, ungraded_opt, false);
  ungraded_cmd->add_option("--tmax", ungraded_tmax, "truncation degree")
      ->required()
      ->check(CLI::PositiveNumber);

  // james
  std::string james_coeffs;
  int james_tmax = 0;
  std::string james_format = "text";
  auto* james_cmd = app.add_subcommand(
      "james", "series of the free monoid on a space with the given Poincare series");
  james_cmd->add_option("--coeffs", james_coeffs,
                        "comma-separated Poincare coefficients, constant term first")
      ->required();
  james_cmd->add_option("--tmax", james_tmax, "truncation degree")
      ->required()
      ->check(CLI::PositiveNumber);
  james_cmd->add_option("--format", james_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // so3
  int so3_n = 0;
  auto* so3_cmd = app.add_subcommand("so3", "count the non-identity components of "
                                            "commuting n-tuples in SO(3)");
  so3_cmd->add_option("-n", so3_n, "number of commuting generators")
      ->required()
      ->check(CLI::PositiveNumber);

  // verify
  CommonOptions verify_opt;
  bool verify_deep = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite for a group");
  add_group_options(verify_cmd, verify_opt);
  verify_cmd->add_flag("--deep", verify_deep, "also run the brute-force comparison");

  CLI11_PARSE(app, argc, argv);

  try {
    if (census_cmd->parsed()) {
      GroupSpec spec = resolve_group(census_opt.group, census_opt.rank);
      CharPolyCensus census = enumerate_census(spec, census_limit);
      write_census(census, spec, census_out);
      std::cout << "wrote census of " << spec.name << " (" << census.total
                << " elements, " << census.entries.size() << " classes) to "
                << census_out << '\n';
      return 0;
    }

    if (hilb_cmd->parsed()) {
      GroupSpec spec = resolve_group(hilb_opt.group, hilb_opt.rank);
      CharPolyCensus census = obtain_census(spec, hilb_opt.cache_dir,
                                            hilb_opt.census_path, 0, hilb_opt.verbose);
      Caps caps{qmax, smax, tmax};
      TriSeries series = trigraded_hilb(census, spec.degrees, caps);
      if (hilb_opt.format == "json") {
        std::cout << series_json(spec, series).dump(2) << '\n';
      } else {
        std::cout << "group: " << spec.name << '\n'
                  << "caps: " << caps.str() << '\n';
        print_note(spec, hilb_opt.format);
        std::cout << "series: " << series.str() << '\n';
      }
      return 0;
    }

    if (betti_cmd->parsed()) {
      GroupSpec spec = resolve_group(betti_opt.group, betti_opt.rank);
      CharPolyCensus census = obtain_census(spec, betti_opt.cache_dir,
                                            betti_opt.census_path, 0, betti_opt.verbose);
      Caps caps{betti_dmax, betti_dmax, betti_m};
      TriSeries series = trigraded_hilb(census, spec.degrees, caps);
      BettiTable table = hom_betti(series, betti_m, betti_dmax, spec.name);
      if (betti_opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = output_schema_version;
        j["tool_version"] = version_string;
        j["group"] = spec.name;
        j["m"] = betti_m;
        if (!spec.note.empty()) j["note"] = spec.note;
        auto rows = nlohmann::ordered_json::array();
        for (int d = 0; d <= betti_dmax; ++d)
          rows.push_back({{"d", d}, {"value", table.rank(betti_m, d).str()}});
        j["ranks"] = std::move(rows);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "group: " << spec.name << '\n'
                  << "reduced Betti numbers of the space of commuting " << betti_m
                  << "-tuples\n";
        print_note(spec, betti_opt.format);
        for (int d = 0; d <= betti_dmax; ++d)
          std::cout << "d=" << d << ": " << table.rank(betti_m, d).str() << '\n';
      }
      return 0;
    }

    if (comm_cmd->parsed()) {
      GroupSpec spec = resolve_group(comm_opt.group, comm_opt.rank);
      CharPolyCensus census = obtain_census(spec, comm_opt.cache_dir,
                                            comm_opt.census_path, 0, comm_opt.verbose);
      Caps caps{comm_dmax, comm_dmax, comm_dmax};
      TriSeries series = trigraded_hilb(census, spec.degrees, caps);
      std::vector<Int> betti = comm_betti(series, comm_dmax);
      if (comm_opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = output_schema_version;
        j["tool_version"] = version_string;
        j["group"] = spec.name;
        if (!spec.note.empty()) j["note"] = spec.note;
        auto rows = nlohmann::ordered_json::array();
        for (int d = 0; d <= comm_dmax; ++d)
          rows.push_back({{"d", d}, {"value", betti[d].str()}});
        j["ranks"] = std::move(rows);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "group: " << spec.name << '\n'
                  << "graded Betti numbers of the assembled commuting-tuple space\n";
        print_note(spec, comm_opt.format);
        for (int d = 0; d <= comm_dmax; ++d)
          std::cout << "d=" << d << ": " << betti[d].str() << '\n';
      }
      return 0;
    }

    if (ungraded_cmd->parsed()) {
      GroupSpec spec = resolve_group(ungraded_opt.group, ungraded_opt.rank);
      UniPoly series = ungraded_comm_hilb(spec.rank, ungraded_tmax);
      if (ungraded_opt.format == "json") {
        std::cout << poly_json(spec.name, series, ungraded_tmax, "t").dump(2) << '\n';
      } else {
        std::cout << "group: " << spec.name << " (torus rank " << spec.rank << ")\n";
        print_note(spec, ungraded_opt.format);
        std::cout << "series: " << series.str("t") << '\n';
      }
      return 0;
    }

    if (james_cmd->parsed()) {
      UniPoly h(parse_coeff_list(james_coeffs));
      UniPoly series = james_hilb(h, james_tmax);
      if (james_format == "json") {
        std::cout << poly_json("", series, james_tmax, "t").dump(2) << '\n';
      } else {
        std::cout << "series: " << series.str("t") << '\n';
      }
      return 0;
    }

    if (so3_cmd->parsed()) {
      std::cout << so3_components(so3_n).str() << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      GroupSpec spec = resolve_group(verify_opt.group, verify_opt.rank);
      std::optional<CharPolyCensus> provided;
      if (!verify_opt.census_path.empty())
        provided = read_census(verify_opt.census_path, spec);
      return run_verify(spec, verify_deep, std::cout, provided);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
