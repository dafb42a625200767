#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qrw/structure.hpp"

namespace qrw {

/// Error raised while reading the text format. Line and column are
/// 1-based and point at the offending token.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { kLexical, kSemantic, kVersion };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Reads the "qrw 1" text format:
///
///   qrw 1
///   size N
///   one I
///   names a b c      (optional)
///   imp              N rows of N element indices
///   mul              (optional) same shape
///   neg i j k        (optional) N indices
///   order            (optional) N rows of N entries in {0,1}; row i,
///                    column j is 1 when i ≼ j
///
/// Lines whose first non-blank character is '#' are comments. Tokens may be
/// separated by any whitespace. `size` must come first; the other
/// directives may appear in any order, each at most once. Without an
/// order block the derived order (x ≼ y iff x→y = 1) is installed.
FiniteStructure parse(std::string_view text);

FiniteStructure load(const std::filesystem::path& path);

/// Canonical text: directives in the order listed above, single spaces,
/// one table row per line, trailing newline. parse(render(s)) == s.
std::string render(const FiniteStructure& s);

void save(const std::filesystem::path& path, const FiniteStructure& s);

}  // namespace qrw
