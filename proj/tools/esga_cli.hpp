#pragma once

// Pieces of the esga command-line tool, split out so tests can drive them
// without spawning processes.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esga/es_crossover.hpp"
#include "esga/instance.hpp"
#include "esga/tour.hpp"

namespace esga::cli {

/// One `name_or_path optimum` line of a bench manifest.
struct ManifestEntry {
    std::string name;
    std::int64_t optimum = 0;
    int line = 0;
};

/// Blank lines and `#` comments are skipped. Throws esga::ParseError.
std::vector<ManifestEntry> parse_manifest(std::string_view text);

/// Finds the instance file for a manifest entry. Names containing a path
/// separator or ending in `.tsp` are taken relative to `manifest_dir`;
/// bare names are looked up as `<name>.tsp` in each search directory.
std::optional<std::filesystem::path> resolve_instance(const std::string& name,
                                                      const std::filesystem::path& manifest_dir,
                                                      std::span<const std::filesystem::path> search_dirs);

struct RunOutcome {
    std::int64_t length = 0;
    double seconds = 0.0;
};

/// One CSV row. `error` is set when the instance could not be run.
struct BenchRow {
    std::string instance;
    std::int64_t optimum = 0;
    int runs = 0;
    int success = 0;
    double err = 0.0;
    double time = 0.0;
    std::optional<std::string> error;
};

double err_percent(std::int64_t length, std::int64_t optimum);

BenchRow summarize(std::string instance, std::int64_t optimum, std::span<const RunOutcome> runs);

/// Header `Instance,Optimum,Success,Err,Time`; Err and Time with two
/// decimals. Failed rows keep their name and optimum and leave the rest empty.
std::string bench_csv(std::span<const BenchRow> rows);

std::string render_tour_svg(const Instance& inst, const Tour& tour);

/// Both parents' edges grouped by M-ring. Rings of two edges are grey
/// doubled edges; larger rings get a palette colour. A-edges are solid,
/// B-edges dashed.
std::string render_rings_svg(const Instance& inst, std::span<const MRing> rings);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace esga::cli
