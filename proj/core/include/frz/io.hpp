#pragma once

// Text formats.
//
// Point: "(u1,...,un)" with u1 the least significant coordinate, or a bare
// decimal index.
//
// Set file:
//   # comments start with '#', anywhere on a line
//   p n
//   (u1,...,un)      one point per line, tuple or index form
//
// Canonical output is the header line followed by every member in lex order
// in tuple form, so writing a parsed canonical file reproduces it exactly.

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "frz/dense_set.hpp"
#include "frz/error.hpp"

namespace frz {

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Point parse_point(const GroupParams& g, std::string_view text);
std::string format_point(const GroupParams& g, Point u);

DenseSet parse_set(std::string_view text);
DenseSet read_set_file(const std::filesystem::path& path);

// Comments are emitted first as "# ..." lines.
std::string format_set(const DenseSet& a, std::span<const std::string> comments = {});
void write_set_file(const std::filesystem::path& path, const DenseSet& a, std::span<const std::string> comments = {});

}  // namespace frz
