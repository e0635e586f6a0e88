#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "almg/algebra.hpp"

namespace almg {

/// Malformed algebra text. line() is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented `almg v1` format:
///
///   almg v1
///   size <n>
///   zero <k>
///   table add|join|meet|star      (each exactly once, any order)
///   <n rows of n entries: decimal index or ?>
///
/// `#` starts a comment; blank lines are ignored.
Algebra parse_algebra(std::string_view text);
Algebra read_algebra_file(const std::filesystem::path& path);

/// Canonical text form: tables in add, join, meet, star order. Optional
/// `comment` lines are emitted after the header, each prefixed with `# `.
std::string format_algebra(const Algebra& alg, std::string_view comment = {});

}  // namespace almg
