#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "tsf/dawg.hpp"
#include "tsf/records.hpp"
#include "tsf/specific_trie.hpp"
#include "tsf/ts_scan.hpp"

namespace tsf::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

enum class OutputFormat { Tsv, Json };
enum class DotKind { Dawg, Trie };

struct WordsOptions {
    std::filesystem::path ref;
    std::filesystem::path tgt;
    ParseOptions parse;
    OutputFormat output = OutputFormat::Tsv;
    bool oracle = false;
};

struct ScanOptions {
    std::optional<std::filesystem::path> ref;
    std::optional<std::filesystem::path> index;
    std::filesystem::path tgt;
    ParseOptions parse;
    OutputFormat output = OutputFormat::Tsv;
    LinkMode mode = LinkMode::OptimizedG;
    bool table = false;
    bool oracle = false;
    unsigned threads = 1;
};

struct IndexOptions {
    std::filesystem::path ref;
    std::filesystem::path out;
    ParseOptions parse;
};

struct DotOptions {
    std::filesystem::path ref;
    std::filesystem::path tgt;
    ParseOptions parse;
    DotKind kind = DotKind::Dawg;
    bool prune = false;
};

struct OracleCheckOptions {
    std::filesystem::path ref;
    std::filesystem::path tgt;
    ParseOptions parse;
};

int cmd_words(const WordsOptions& opts, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);
int cmd_index(const IndexOptions& opts, std::ostream& out, std::ostream& err);
int cmd_dot(const DotOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle_check(const OracleCheckOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to the matching command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Renderers, exposed for tests.
std::string render_dawg_dot(const Dawg& d);
std::string render_trie_dot(const SpecificTrie& trie, const Dawg& d);

} // namespace tsf::cli
