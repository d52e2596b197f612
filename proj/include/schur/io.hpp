#pragma once

// Text certificate format.
//
//   schur v1 <strong|weak> <r> <n>
//   <ascending integers of subset 1>
//   ...
//   <ascending integers of subset r>
//
// Lines starting with '#' and blank lines are ignored anywhere. A file whose
// first significant line is not a header is read as headerless: one subset
// per line in any order, kind weak, n = largest element.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schur/core.hpp"

namespace schur {

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Syntactically valid file contents, not yet checked for coverage.
struct PartitionDocument {
    int format_version = kFormatVersion;
    Kind kind = Kind::Weak;
    std::size_t r = 0;
    Element n = 0;
    std::vector<std::vector<Element>> body;
    /// 1-based source line of each body entry.
    std::vector<std::size_t> body_lines;
    bool headerless = false;
};

/// Tokenizes and checks header/body consistency (line count, largest element,
/// ascending order in v1). Coverage is left to parse_partition or verify_subsets.
[[nodiscard]] PartitionDocument parse_document(std::string_view text);

/// Full ingestion: parse_document plus duplicate and gap checks, each reported
/// with its source line.
[[nodiscard]] Partition parse_partition(std::string_view text);
[[nodiscard]] Partition to_partition(const PartitionDocument& doc);

/// Canonical v1 text: header, then one line per subset in stored order.
[[nodiscard]] std::string format_partition(const Partition& p);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace schur
