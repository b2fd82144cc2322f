#include "tsf/records.hpp"

#include <cerrno>
#include <fstream>
#include <sstream>
#include <system_error>

namespace tsf {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

void append_sequence(Word& out, std::string_view line, bool upper, bool keep_spaces = false) {
    for (char c : line) {
        if (!keep_spaces && is_space(c)) continue;
        if (upper && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        out.push_back(c);
    }
}

} // namespace

std::vector<SequenceRecord> parse_records(std::string_view text, const ParseOptions& opts) {
    std::vector<SequenceRecord> records;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (opts.format == InputFormat::Lines) {
            if (line.empty()) continue;
            SequenceRecord rec{"line-" + std::to_string(line_no), {}};
            append_sequence(rec.data, line, opts.normalize_case, true);
            records.push_back(std::move(rec));
            continue;
        }

        if (!line.empty() && line.front() == '>') {
            // The id is the first whitespace-delimited token of the header.
            std::string_view header = trim(line.substr(1));
            std::size_t end = 0;
            while (end < header.size() && !is_space(header[end])) ++end;
            if (end == 0) {
                throw FormatError("line " + std::to_string(line_no) + ": empty FASTA header",
                                  line_no);
            }
            records.push_back({std::string(header.substr(0, end)), {}});
        } else if (!trim(line).empty()) {
            if (records.empty()) {
                throw FormatError("line " + std::to_string(line_no) +
                                      ": sequence data before first FASTA header",
                                  line_no);
            }
            append_sequence(records.back().data, line, opts.normalize_case);
        }
    }
    return records;
}

std::vector<SequenceRecord> parse_input(const std::filesystem::path& path, const ParseOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::system_error(errno ? errno : ENOENT, std::generic_category(),
                                "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::system_error(EIO, std::generic_category(), "cannot read " + path.string());
    try {
        return parse_records(buf.str(), opts);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what(), e.line());
    }
}

std::vector<Word> record_data(const std::vector<SequenceRecord>& records) {
    std::vector<Word> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.data);
    return out;
}

} // namespace tsf
