#pragma once

/// @file tsplib.hpp
/// @brief Reading and writing TSPLIB `.tsp` (NODE_COORD_SECTION) and `.tour` files.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "esga/instance.hpp"
#include "esga/tour.hpp"

namespace esga {

/// Malformed or unsupported TSPLIB input. `line()` is 1-based, 0 when the
/// problem is not tied to a particular line.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, std::string message, std::string source = {});
    int line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

  private:
    int line_;
    std::string message_;
};

/// Only EUC_2D and CEIL_2D coordinate instances are accepted; GEO, ATT,
/// EXPLICIT and the rest are rejected.
Instance parse_tsplib(std::string_view text);

/// Reads and parses a `.tsp` file. Throws std::runtime_error if the file
/// cannot be opened.
Instance load_tsplib(const std::filesystem::path& path);

/// Serializes with shortest round-trip coordinate formatting, so parsing the
/// output gives back an identical instance.
std::string write_tsplib(const Instance& inst);

/// Parses a TOUR_SECTION file (1-based cities, terminated by -1). When
/// `expected_n` is non-negative the tour must cover exactly that many cities.
Tour parse_tour(std::string_view text, int expected_n = -1);

Tour load_tour(const std::filesystem::path& path, int expected_n = -1);

std::string write_tour(const Tour& tour, std::string_view name, std::string_view comment = {});

/// Whole-file read helper shared by the loaders and the CLI.
std::string read_text_file(const std::filesystem::path& path);

} // namespace esga
