#include <cstdio>
#include <sstream>

#include "esga/tsplib.hpp"
#include "esga_cli.hpp"

namespace esga::cli {

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
    std::vector<ManifestEntry> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) {
            continue;
        }
        ManifestEntry entry{name, 0, number};
        std::string extra;
        if (!(fields >> entry.optimum) || entry.optimum <= 0) {
            throw ParseError(number, "expected '<instance> <positive optimum>'");
        }
        if (fields >> extra) {
            throw ParseError(number, "unexpected text after the optimum: '" + extra + "'");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::optional<std::filesystem::path> resolve_instance(const std::string& name,
                                                      const std::filesystem::path& manifest_dir,
                                                      std::span<const std::filesystem::path> search_dirs) {
    namespace fs = std::filesystem;
    const bool looks_like_path = name.find('/') != std::string::npos || name.ends_with(".tsp");
    if (looks_like_path) {
        fs::path p(name);
        if (p.is_relative()) {
            p = manifest_dir / p;
        }
        if (fs::is_regular_file(p)) {
            return p;
        }
        return std::nullopt;
    }
    for (const auto& dir : search_dirs) {
        const auto p = dir / (name + ".tsp");
        if (fs::is_regular_file(p)) {
            return p;
        }
    }
    return std::nullopt;
}

double err_percent(std::int64_t length, std::int64_t optimum) {
    return 100.0 * static_cast<double>(length - optimum) / static_cast<double>(optimum);
}

BenchRow summarize(std::string instance, std::int64_t optimum, std::span<const RunOutcome> runs) {
    BenchRow row;
    row.instance = std::move(instance);
    row.optimum = optimum;
    row.runs = static_cast<int>(runs.size());
    if (runs.empty()) {
        return row;
    }
    for (const auto& r : runs) {
        if (r.length <= optimum) {
            ++row.success;
        }
        row.err += err_percent(r.length, optimum);
        row.time += r.seconds;
    }
    row.err /= static_cast<double>(runs.size());
    row.time /= static_cast<double>(runs.size());
    return row;
}

std::string bench_csv(std::span<const BenchRow> rows) {
    std::ostringstream out;
    out << "Instance,Optimum,Success,Err,Time\n";
    char buf[64];
    for (const auto& row : rows) {
        out << row.instance << ',' << row.optimum << ',';
        if (row.error) {
            out << ",,\n";
            continue;
        }
        std::snprintf(buf, sizeof(buf), "%d,%.2f,%.2f", row.success, row.err, row.time);
        out << buf << '\n';
    }
    return std::move(out).str();
}

} // namespace esga::cli
