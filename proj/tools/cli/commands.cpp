#include "commands.hpp"

#include <algorithm>
#include <future>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsf/index_file.hpp"
#include "tsf/oracle.hpp"

namespace tsf::cli {

namespace {

using json = nlohmann::json;

// Runs a command body, turning expected failures into exit code 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const IndexError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::system_error& e) { // includes filesystem_error
        err << "error: " << e.what() << '\n';
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

std::string dump(const json& j) {
    // Inputs are arbitrary bytes; invalid UTF-8 is replaced rather than rejected.
    return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

std::vector<Word> words_of(const std::filesystem::path& path, const ParseOptions& parse) {
    return record_data(parse_input(path, parse));
}

std::string mark_label(Mark m) {
    if (m.both()) return "r,t";
    if (m.reference) return "r";
    if (m.target) return "t";
    return "";
}

std::string dot_escape(Symbol a) {
    if (a == '"' || a == '\\') return std::string("\\") + static_cast<char>(a);
    if (a >= 0x20 && a < 0x7F) return std::string(1, static_cast<char>(a));
    static constexpr char kHex[] = "0123456789ABCDEF";
    return std::string("\\\\x") + kHex[a >> 4] + kHex[a & 0xF];
}

std::string render_events(const std::string& id, WordView target,
                          const std::vector<ScanEvent>& events, OutputFormat fmt, json* sink) {
    if (fmt == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& ev : events) {
            arr.push_back({{"start", ev.start},
                           {"end", ev.end},
                           {"factor", Word(target.substr(ev.start, ev.end - ev.start + 1))}});
        }
        *sink = {{"record", id}, {"events", std::move(arr)}};
        return {};
    }
    std::string out;
    for (const auto& ev : events) {
        out += id;
        out += '\t' + std::to_string(ev.start) + '\t' + std::to_string(ev.end) + '\t';
        out.append(target.substr(ev.start, ev.end - ev.start + 1));
        out += '\n';
    }
    return out;
}

std::string render_table(const std::string& id, const TsTable& table, OutputFormat fmt, json* sink) {
    if (fmt == OutputFormat::Json) {
        *sink = {{"record", id}, {"table", table.entries}};
        return {};
    }
    std::string out = id + '\t';
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(table.entries[k]);
    }
    out += '\n';
    return out;
}

struct RecordResult {
    std::string text;
    json object;
    bool oracle_mismatch = false;
};

RecordResult scan_record(const ReferenceMachine& machine, const SequenceRecord& rec,
                         const ScanOptions& opts, const std::vector<Word>* reference) {
    RecordResult res;
    const TsTable table = ts_table(machine, rec.data, opts.mode);
    if (reference) {
        res.oracle_mismatch = table.entries != oracle::ts_table_naive(*reference, rec.data);
    }
    res.text = opts.table ? render_table(rec.id, table, opts.output, &res.object)
                          : render_events(rec.id, rec.data, table.pairs(), opts.output, &res.object);
    return res;
}

} // namespace

std::string render_dawg_dot(const Dawg& d) {
    std::ostringstream os;
    os << "digraph dawg {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::uint32_t q = 0; q < d.state_count(); ++q) {
        const std::string mark = mark_label(d.mark(StateId{q}));
        os << "  " << q << " [label=\"" << q << (mark.empty() ? "" : "\\n" + mark) << "\"];\n";
    }
    for (std::uint32_t q = 0; q < d.state_count(); ++q) {
        for (const auto& t : d.transitions(StateId{q})) {
            os << "  " << q << " -> " << t.target.index << " [label=\"" << dot_escape(t.symbol)
               << "\"];\n";
        }
    }
    for (std::uint32_t q = 0; q < d.state_count(); ++q) {
        if (auto s = d.suffix_link(StateId{q})) {
            os << "  " << q << " -> " << s->index << " [style=dashed];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string render_trie_dot(const SpecificTrie& trie, const Dawg& d) {
    // Internal nodes are named after their automaton state, sinks s<k>.
    auto name = [&](NodeId n) {
        const auto& node = trie.node(n);
        return node.origin ? std::to_string(node.origin->index) : "s" + std::to_string(n.index);
    };
    std::ostringstream os;
    os << "digraph trie {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::uint32_t k = 0; k < trie.node_count(); ++k) {
        const NodeId n{k};
        const auto& node = trie.node(n);
        if (node.origin) {
            const std::string mark = mark_label(d.mark(*node.origin));
            os << "  " << name(n) << " [label=\"" << node.origin->index
               << (mark.empty() ? "" : "\\n" + mark) << "\"];\n";
        } else {
            os << "  " << name(n) << " [shape=box, style=filled, fillcolor=black, label=\"\"];\n";
        }
    }
    for (std::uint32_t k = 0; k < trie.node_count(); ++k) {
        for (const auto& e : trie.node(NodeId{k}).edges) {
            os << "  " << name(NodeId{k}) << " -> " << name(e.target) << " [label=\""
               << dot_escape(e.symbol) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

int cmd_words(const WordsOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto ref = words_of(opts.ref, opts.parse);
        const auto tgt = words_of(opts.tgt, opts.parse);
        const SpecificWordReport report = specific_words(ref, tgt);

        if (opts.output == OutputFormat::Json) {
            json arr = json::array();
            for (const auto& w : report.words) arr.push_back({{"word", w}, {"length", w.size()}});
            out << dump(arr);
        } else {
            for (const auto& w : report.words) out << w << '\t' << w.size() << '\n';
        }
        err << "count=" << report.count << " bound=" << report.bound << '\n';

        if (opts.oracle && report.words != oracle::specific_naive(ref, tgt)) {
            err << "oracle: specific word sets differ\n";
            return kExitMismatch;
        }
        return kExitOk;
    });
}

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.ref.has_value() == opts.index.has_value()) {
            err << "error: give exactly one of --ref or --index\n";
            return kExitUsage;
        }
        if (opts.oracle && !opts.ref) {
            err << "error: --oracle needs --ref (an index does not keep the reference words)\n";
            return kExitUsage;
        }
        std::vector<Word> reference;
        std::optional<ReferenceMachine> machine;
        if (opts.ref) {
            reference = words_of(*opts.ref, opts.parse);
            machine.emplace(build_reference_machine(reference));
        } else {
            machine.emplace(load_index(*opts.index));
        }
        const auto targets = parse_input(opts.tgt, opts.parse);
        const std::vector<Word>* oracle_ref = opts.oracle ? &reference : nullptr;

        // Each worker owns a contiguous slice; results are emitted in input order.
        std::vector<RecordResult> results(targets.size());
        const std::size_t workers =
            std::max<std::size_t>(1, std::min<std::size_t>(opts.threads, targets.size()));
        auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t k = lo; k < hi; ++k) {
                results[k] = scan_record(*machine, targets[k], opts, oracle_ref);
            }
        };
        std::vector<std::future<void>> pending;
        const std::size_t chunk = (targets.size() + workers - 1) / std::max<std::size_t>(workers, 1);
        for (std::size_t lo = chunk; lo < targets.size(); lo += chunk) {
            pending.push_back(std::async(std::launch::async, work, lo, std::min(lo + chunk, targets.size())));
        }
        work(0, std::min(chunk, targets.size()));
        for (auto& f : pending) f.get();

        bool mismatch = false;
        json arr = json::array();
        for (std::size_t k = 0; k < results.size(); ++k) {
            if (results[k].oracle_mismatch) {
                err << "oracle: table mismatch for record " << targets[k].id << '\n';
                mismatch = true;
            }
            if (opts.output == OutputFormat::Json) {
                arr.push_back(std::move(results[k].object));
            } else {
                out << results[k].text;
            }
        }
        if (opts.output == OutputFormat::Json) out << dump(arr);
        return mismatch ? kExitMismatch : kExitOk;
    });
}

int cmd_index(const IndexOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto machine = build_reference_machine(words_of(opts.ref, opts.parse));
        save_index(machine, opts.out);
        out << "states=" << machine.dawg().state_count()
            << " transitions=" << machine.dawg().transition_count() << '\n';
        return kExitOk;
    });
}

int cmd_dot(const DotOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<TaggedWord> tagged;
        for (auto& w : words_of(opts.ref, opts.parse)) tagged.push_back({std::move(w), SourceTag::Reference});
        for (auto& w : words_of(opts.tgt, opts.parse)) tagged.push_back({std::move(w), SourceTag::Target});
        const Dawg d = Dawg::build(tagged);
        if (opts.kind == DotKind::Dawg) {
            out << render_dawg_dot(d);
        } else {
            const SpecificTrie trie = build_specific_trie(d);
            out << render_trie_dot(opts.prune ? trie.pruned() : trie, d);
        }
        return kExitOk;
    });
}

int cmd_oracle_check(const OracleCheckOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto ref = words_of(opts.ref, opts.parse);
        const auto targets = parse_input(opts.tgt, opts.parse);
        const auto tgt = record_data(targets);
        bool ok = true;

        const auto fast = specific_words(ref, tgt).words;
        const bool words_ok = fast == oracle::specific_naive(ref, tgt);
        out << "words\t" << (words_ok ? "ok" : "MISMATCH") << '\n';
        ok &= words_ok;

        const ReferenceMachine machine = build_reference_machine(ref);
        for (const auto& rec : targets) {
            const auto naive = oracle::ts_table_naive(ref, rec.data);
            const bool plain = ts_table(machine, rec.data, LinkMode::PlainS).entries == naive;
            const bool opt = ts_table(machine, rec.data, LinkMode::OptimizedG).entries == naive;
            out << "scan\t" << rec.id << '\t' << (plain && opt ? "ok" : "MISMATCH") << '\n';
            ok &= plain && opt;
        }
        if (!ok) err << "oracle-check: fast and naive results differ\n";
        return ok ? kExitOk : kExitMismatch;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Target-specific factors: minimal absent words of a reference found in a target"};
    app.require_subcommand(1);

    std::string format = "fasta";
    std::string output = "tsv";
    bool normalize = false;
    auto add_input_flags = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Input format")
            ->check(CLI::IsMember({"fasta", "lines"}))
            ->capture_default_str();
        sub->add_flag("--normalize-case", normalize, "Map ASCII a-z to A-Z");
    };
    auto add_output_flag = [&](CLI::App* sub) {
        sub->add_option("--output", output, "Output format")
            ->check(CLI::IsMember({"tsv", "json"}))
            ->capture_default_str();
    };

    WordsOptions words;
    auto* words_cmd = app.add_subcommand("words", "List target-specific words of the target set");
    words_cmd->add_option("--ref", words.ref, "Reference file")->required();
    words_cmd->add_option("--tgt", words.tgt, "Target file")->required();
    words_cmd->add_flag("--oracle", words.oracle, "Cross-check against the brute-force oracle");
    add_input_flags(words_cmd);
    add_output_flag(words_cmd);

    ScanOptions scan;
    std::string ref_path;
    std::string index_path;
    bool plain_s = false;
    bool optimized_g = false;
    auto* scan_cmd = app.add_subcommand("scan", "Report occurrences of target-specific factors per record");
    auto* ref_opt = scan_cmd->add_option("--ref", ref_path, "Reference file");
    auto* idx_opt = scan_cmd->add_option("--index", index_path, "Prebuilt reference index");
    ref_opt->excludes(idx_opt);
    scan_cmd->add_option("--tgt", scan.tgt, "Target file")->required();
    auto* plain_flag = scan_cmd->add_flag("--plain-s", plain_s, "Follow plain suffix links");
    scan_cmd->add_flag("--optimized-g", optimized_g, "Follow optimized suffix links (default)")
        ->excludes(plain_flag);
    scan_cmd->add_flag("--table", scan.table, "Print the full table per record");
    scan_cmd->add_flag("--oracle", scan.oracle, "Cross-check against the brute-force oracle");
    scan_cmd->add_option("--threads", scan.threads, "Worker threads")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    add_input_flags(scan_cmd);
    add_output_flag(scan_cmd);

    IndexOptions index;
    auto* index_cmd = app.add_subcommand("index", "Preprocess a reference into an index file");
    index_cmd->add_option("--ref", index.ref, "Reference file")->required();
    index_cmd->add_option("--out", index.out, "Index file to write")->required();
    add_input_flags(index_cmd);

    DotOptions dot;
    std::string which = "dawg";
    auto* dot_cmd = app.add_subcommand("dot", "Render the automaton or the trie as Graphviz DOT");
    dot_cmd->add_option("--ref", dot.ref, "Reference file")->required();
    dot_cmd->add_option("--tgt", dot.tgt, "Target file")->required();
    dot_cmd->add_option("--which", which, "Graph to draw")
        ->check(CLI::IsMember({"dawg", "trie"}))
        ->capture_default_str();
    dot_cmd->add_flag("--prune", dot.prune, "Drop trie branches without sinks");
    add_input_flags(dot_cmd);

    OracleCheckOptions check;
    auto* check_cmd = app.add_subcommand("oracle-check", "Compare fast results with brute force");
    check_cmd->add_option("--ref", check.ref, "Reference file")->required();
    check_cmd->add_option("--tgt", check.tgt, "Target file")->required();
    add_input_flags(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o;
        std::ostringstream e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    const ParseOptions parse{format == "lines" ? InputFormat::Lines : InputFormat::Fasta, normalize};
    const OutputFormat out_fmt = output == "json" ? OutputFormat::Json : OutputFormat::Tsv;

    if (*words_cmd) {
        words.parse = parse;
        words.output = out_fmt;
        return cmd_words(words, out, err);
    }
    if (*scan_cmd) {
        scan.parse = parse;
        scan.output = out_fmt;
        scan.mode = plain_s ? LinkMode::PlainS : LinkMode::OptimizedG;
        if (*ref_opt) scan.ref = ref_path;
        if (*idx_opt) scan.index = index_path;
        return cmd_scan(scan, out, err);
    }
    if (*index_cmd) {
        index.parse = parse;
        return cmd_index(index, out, err);
    }
    if (*dot_cmd) {
        dot.parse = parse;
        dot.kind = which == "trie" ? DotKind::Trie : DotKind::Dawg;
        return cmd_dot(dot, out, err);
    }
    check.parse = parse;
    return cmd_oracle_check(check, out, err);
}

} // namespace tsf::cli
