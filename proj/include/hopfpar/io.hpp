#pragma once

#include <iosfwd>
#include <string>

#include "hopfpar/algebra.hpp"

namespace hopfpar {

/// Parse failure with position information.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

/// Text interchange format for Hopf data: field characteristic, dimension,
/// basis labels, structure-constant blocks with canonical exact scalar
/// strings. Writing then reading reproduces the bytes exactly.
std::string write_hopf(const HopfData& h);
HopfData read_hopf(const std::string& text);

void write_hopf_file(const HopfData& h, const std::string& path);
HopfData read_hopf_file(const std::string& path);

}  // namespace hopfpar
