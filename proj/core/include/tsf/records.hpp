#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsf/word.hpp"

namespace tsf {

struct SequenceRecord {
    std::string id;
    Word data;
};

enum class InputFormat { Fasta, Lines };

struct ParseOptions {
    InputFormat format = InputFormat::Fasta;
    bool normalize_case = false; ///< map ASCII a-z to A-Z
};

/// Malformed input. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// FASTA: one record per '>' header, sequence lines concatenated with all
/// whitespace removed. LINES: one record per nonempty line, bytes kept
/// verbatim apart from a trailing CR, ids "line-<n>" numbered by physical line.
std::vector<SequenceRecord> parse_records(std::string_view text, const ParseOptions& opts);

/// Throws std::system_error (with the path) if the file cannot be read.
std::vector<SequenceRecord> parse_input(const std::filesystem::path& path, const ParseOptions& opts);

std::vector<Word> record_data(const std::vector<SequenceRecord>& records);

} // namespace tsf
