#pragma once

#include <filesystem>

#include "sea/finite_model.hpp"

namespace sea {

// Syntax failure in a model file, with 1-based position.
struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
};

// Self-describing text format for finite models:
//
//   # comment lines start with '#'
//   name: diamond
//   elements: 0, p, q, 1
//   zero: 0
//   one: 1
//   oplus:
//     0, 0, 0
//     0, p, p
//     ...
//   circ:
//     0, 0, 0
//     ...
//
// `oplus` and `circ` bodies are one ordered triple (left, right, result)
// per line. Labels are trimmed and must not contain commas; `circ`, when
// present, must be total. `circ` may be omitted for sum-only models.
FiniteModelData parse_model_text(std::string_view text);

std::string serialize_model_text(const FiniteModelData& data);

// Reads and parses; ModelError on I/O failure, ParseError on syntax.
FiniteModelData read_model_file(const std::filesystem::path& file);

} // namespace sea
