#include "esga/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace esga {

namespace {

std::string describe(const std::string& source, int line, const std::string& message) {
    std::string where = source;
    if (line > 0) {
        where += source.empty() ? "line " + std::to_string(line) : ":" + std::to_string(line);
    }
    return where.empty() ? message : where + ": " + message;
}

} // namespace

ParseError::ParseError(int line, std::string message, std::string source)
    : std::runtime_error(describe(source, line, message)), line_(line), message_(std::move(message)) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

/// Splits text into lines, tracking 1-based line numbers.
class LineReader {
  public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::optional<std::string_view> next() {
        if (offset_ >= text_.size()) {
            return std::nullopt;
        }
        const auto end = text_.find('\n', offset_);
        const auto stop = end == std::string_view::npos ? text_.size() : end;
        std::string_view line = text_.substr(offset_, stop - offset_);
        offset_ = stop + 1;
        ++line_no_;
        return line;
    }

    int line_no() const noexcept { return line_no_; }

  private:
    std::string_view text_;
    std::size_t offset_ = 0;
    int line_no_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

template <typename T>
std::optional<T> to_number(std::string_view token) {
    T value{};
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        return std::nullopt;
    }
    return value;
}

struct HeaderEntry {
    std::string key;
    std::string_view value;
};

/// "KEY : VALUE" and "KEY: VALUE" both occur in the wild; a bare keyword
/// (NODE_COORD_SECTION, TOUR_SECTION, EOF) has an empty value.
std::optional<HeaderEntry> split_header(std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
        auto key = upper(trim(line));
        if (key.find_first_of(" \t") != std::string::npos) {
            return std::nullopt;
        }
        return HeaderEntry{std::move(key), {}};
    }
    auto key = upper(trim(line.substr(0, colon)));
    if (key.empty() || key.find_first_of(" \t") != std::string::npos) {
        return std::nullopt;
    }
    return HeaderEntry{std::move(key), trim(line.substr(colon + 1))};
}

bool is_section_keyword(const std::string& key) {
    return key.size() > 8 && key.compare(key.size() - 8, 8, "_SECTION") == 0;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

Instance parse_tsplib(std::string_view text) {
    LineReader reader(text);
    std::string name = "unnamed";
    std::optional<int> dimension;
    std::optional<EdgeWeightKind> kind;
    bool in_coords = false;
    int section_line = 0;

    std::vector<Point> coords;
    std::vector<char> filled;
    int coord_count = 0;

    while (auto raw = reader.next()) {
        const auto line = trim(*raw);
        const int ln = reader.line_no();
        if (line.empty()) {
            continue;
        }

        if (in_coords) {
            const auto tokens = split_ws(line);
            if (tokens.size() == 1 && upper(tokens[0]) == "EOF") {
                in_coords = false;
                break;
            }
            if (tokens.size() != 3) {
                throw ParseError(ln, "expected 'index x y' in NODE_COORD_SECTION, got '" +
                                         std::string(line) + "'");
            }
            const auto index = to_number<int>(tokens[0]);
            const auto x = to_number<double>(tokens[1]);
            const auto y = to_number<double>(tokens[2]);
            if (!index || !x || !y) {
                throw ParseError(ln, "malformed coordinate line '" + std::string(line) + "'");
            }
            if (*index < 1 || *index > *dimension) {
                throw ParseError(ln, "node index " + std::to_string(*index) + " outside 1.." +
                                         std::to_string(*dimension) +
                                         " (DIMENSION does not match the coordinate list)");
            }
            if (filled[*index - 1]) {
                throw ParseError(ln, "node index " + std::to_string(*index) + " listed twice");
            }
            filled[*index - 1] = 1;
            coords[*index - 1] = Point{*x, *y};
            ++coord_count;
            continue;
        }

        auto entry = split_header(line);
        if (!entry) {
            throw ParseError(ln, "malformed header line '" + std::string(line) + "'");
        }
        const auto& key = entry->key;
        if (key == "EOF") {
            break;
        }
        if (key == "NODE_COORD_SECTION") {
            if (!dimension) {
                throw ParseError(ln, "NODE_COORD_SECTION before DIMENSION");
            }
            if (!kind) {
                throw ParseError(ln, "NODE_COORD_SECTION before EDGE_WEIGHT_TYPE");
            }
            in_coords = true;
            section_line = ln;
            coords.assign(*dimension, Point{});
            filled.assign(*dimension, 0);
            continue;
        }
        if (is_section_keyword(key)) {
            throw ParseError(ln, "unsupported section " + key);
        }
        if (entry->value.empty()) {
            throw ParseError(ln, "header key " + key + " has no value");
        }

        if (key == "NAME") {
            name = std::string(entry->value);
        } else if (key == "TYPE") {
            const auto type = upper(entry->value);
            if (type != "TSP") {
                throw ParseError(ln, "unsupported problem TYPE " + type + " (only TSP)");
            }
        } else if (key == "DIMENSION") {
            const auto value = to_number<int>(entry->value);
            if (!value || *value < 3) {
                throw ParseError(ln, "DIMENSION must be an integer >= 3, got '" +
                                         std::string(entry->value) + "'");
            }
            dimension = *value;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            const auto type = upper(entry->value);
            if (type == "EUC_2D") {
                kind = EdgeWeightKind::Euc2d;
            } else if (type == "CEIL_2D") {
                kind = EdgeWeightKind::Ceil2d;
            } else {
                throw ParseError(ln, "unsupported EDGE_WEIGHT_TYPE " + type +
                                         " (supported: EUC_2D, CEIL_2D)");
            }
        }
        // COMMENT, NODE_COORD_TYPE, DISPLAY_DATA_TYPE and friends carry nothing we need.
    }

    if (section_line == 0) {
        if (!dimension) {
            throw ParseError(0, "missing DIMENSION");
        }
        if (!kind) {
            throw ParseError(0, "missing EDGE_WEIGHT_TYPE");
        }
        throw ParseError(0, "missing NODE_COORD_SECTION");
    }
    if (coord_count != *dimension) {
        throw ParseError(section_line, "DIMENSION is " + std::to_string(*dimension) + " but " +
                                           std::to_string(coord_count) +
                                           " coordinate lines follow NODE_COORD_SECTION");
    }
    return Instance(std::move(name), std::move(coords), *kind);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

Instance load_tsplib(const std::filesystem::path& path) {
    const auto text = read_text_file(path);
    try {
        return parse_tsplib(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.message(), path.string());
    }
}

std::string write_tsplib(const Instance& inst) {
    std::ostringstream out;
    out << "NAME : " << inst.name() << '\n';
    out << "TYPE : TSP\n";
    out << "DIMENSION : " << inst.size() << '\n';
    out << "EDGE_WEIGHT_TYPE : " << (inst.kind() == EdgeWeightKind::Euc2d ? "EUC_2D" : "CEIL_2D") << '\n';
    out << "NODE_COORD_SECTION\n";
    for (int i = 0; i < inst.size(); ++i) {
        const auto p = inst.coord(i);
        out << (i + 1) << ' ' << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    }
    out << "EOF\n";
    return std::move(out).str();
}

Tour parse_tour(std::string_view text, int expected_n) {
    LineReader reader(text);
    std::optional<int> dimension;
    bool in_section = false;
    bool terminated = false;
    int section_line = 0;
    std::vector<int> order;

    while (auto raw = reader.next()) {
        const auto line = trim(*raw);
        const int ln = reader.line_no();
        if (line.empty()) {
            continue;
        }
        if (in_section) {
            for (auto token : split_ws(line)) {
                if (upper(token) == "EOF") {
                    terminated = true;
                    break;
                }
                const auto value = to_number<int>(token);
                if (!value) {
                    throw ParseError(ln, "malformed city index '" + std::string(token) + "'");
                }
                if (*value == -1) {
                    terminated = true;
                    break;
                }
                order.push_back(*value - 1);
            }
            if (terminated) {
                break;
            }
            continue;
        }

        auto entry = split_header(line);
        if (!entry) {
            throw ParseError(ln, "malformed header line '" + std::string(line) + "'");
        }
        if (entry->key == "TOUR_SECTION") {
            in_section = true;
            section_line = ln;
        } else if (entry->key == "EOF") {
            break;
        } else if (entry->key == "DIMENSION") {
            dimension = to_number<int>(entry->value);
            if (!dimension) {
                throw ParseError(ln, "malformed DIMENSION");
            }
        } else if (entry->key == "TYPE" && upper(entry->value) != "TOUR") {
            throw ParseError(ln, "expected TYPE : TOUR, got " + std::string(entry->value));
        }
    }

    if (section_line == 0) {
        throw ParseError(0, "missing TOUR_SECTION");
    }
    const int n = expected_n >= 0 ? expected_n : dimension.value_or(static_cast<int>(order.size()));
    if (dimension && *dimension != n) {
        throw ParseError(0, "tour DIMENSION " + std::to_string(*dimension) +
                                " does not match instance size " + std::to_string(n));
    }
    if (auto violation = validate(order, n)) {
        throw ParseError(section_line, "invalid TOUR_SECTION: " + violation->message);
    }
    return Tour(std::move(order));
}

Tour load_tour(const std::filesystem::path& path, int expected_n) {
    return parse_tour(read_text_file(path), expected_n);
}

std::string write_tour(const Tour& tour, std::string_view name, std::string_view comment) {
    std::ostringstream out;
    out << "NAME : " << name << '\n';
    if (!comment.empty()) {
        out << "COMMENT : " << comment << '\n';
    }
    out << "TYPE : TOUR\n";
    out << "DIMENSION : " << tour.size() << '\n';
    out << "TOUR_SECTION\n";
    for (int city : tour.order()) {
        out << (city + 1) << '\n';
    }
    out << "-1\nEOF\n";
    return std::move(out).str();
}

} // namespace esga
