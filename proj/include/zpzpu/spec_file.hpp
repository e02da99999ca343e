#pragma once

// Code-spec files:
//
//   # optional leading comments
//   p = 3
//   alpha = 1
//   beta = 4
//   rows:
//   1 | 0 0 1 1
//
// Comment lines after the first non-comment line are accepted and dropped.

#include <string>
#include <string_view>
#include <vector>

#include "zpzpu/code.hpp"

namespace zpu {

struct Diagnostic {
    std::size_t line;    ///< 1-based
    std::size_t column;  ///< 1-based
    std::string message;
};

std::string format(const Diagnostic& d);

/// Carries at most `max_diagnostics` diagnostics, in source order.
class SpecParseError : public Error {
public:
    static constexpr std::size_t max_diagnostics = 20;
    explicit SpecParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

struct CodeSpecDocument {
    std::vector<std::string> comments;  ///< leading comment lines, verbatim
    Shape shape;
    std::vector<MixedWord> rows;

    AdditiveCode code() const { return AdditiveCode(shape, rows); }
    friend bool operator==(const CodeSpecDocument&, const CodeSpecDocument&) = default;
};

CodeSpecDocument parse_code_spec(std::string_view text);
std::string print_code_spec(const CodeSpecDocument& doc);

/// Reads and parses a file. I/O failures are reported as a single diagnostic at 0:0.
CodeSpecDocument load_code_spec(const std::string& path);

} // namespace zpu
