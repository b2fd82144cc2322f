// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "test_support.hpp"
#include "tsf/oracle.hpp"
#include "tsf/specific_trie.hpp"
#include "tsf/ts_scan.hpp"

namespace {

using namespace tsf;
using testing::Generator;
using Clock = std::chrono::steady_clock;

constexpr int kTrieTrials = 1000;
constexpr int kScanTrials = 1000;
constexpr int kAdversarialTrials = 100;
constexpr std::size_t kLongTarget = 1'000'000;
constexpr double kOracleBudgetSeconds = 30.0;
constexpr double kWorkedExampleBudgetSeconds = 1.0;
constexpr double kLongScanBudgetSeconds = 10.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// The same seeds feed criteria 3, 4, 5 and 7 so they share one corpus.
std::vector<testing::Instance> trie_corpus() {
    Generator gen(1001);
    std::vector<testing::Instance> out;
    for (int k = 0; k < kTrieTrials; ++k) out.push_back(gen.trie_instance());
    return out;
}

std::vector<testing::Instance> scan_corpus() {
    Generator gen(2002);
    std::vector<testing::Instance> out;
    for (int k = 0; k < kScanTrials; ++k) out.push_back(gen.scan_instance());
    return out;
}

std::set<Symbol> letters(const std::vector<Word>& words) {
    std::set<Symbol> out;
    for (const auto& w : words) {
        for (char c : w) out.insert(static_cast<Symbol>(c));
    }
    return out;
}

Outcome worked_example() {
    Outcome o;
    const auto start = Clock::now();
    const Dawg d = Dawg::build(testing::tag({"abbab"}, {"abaab"}));
    if (d.state_count() != 11) o.fail("state count " + std::to_string(d.state_count()));
    const std::vector<std::tuple<std::uint32_t, char, std::uint32_t>> edges{
        {0, 'a', 1}, {0, 'b', 4}, {1, 'b', 2}, {2, 'b', 3}, {2, 'a', 7}, {3, 'a', 5}, {4, 'b', 3},
        {4, 'a', 8}, {5, 'b', 6}, {7, 'a', 9}, {8, 'b', 6}, {8, 'a', 9}, {1, 'a', 9}, {9, 'b', 10}};
    if (d.transition_count() != edges.size()) o.fail("transition count");
    for (const auto& [p, a, q] : edges) {
        if (d.walk(StateId{p}, static_cast<Symbol>(a)) != StateId{q}) o.fail("edge mismatch");
    }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> links{
        {1, 0}, {4, 0}, {2, 4}, {3, 4}, {5, 8}, {6, 2}, {7, 8}, {8, 1}, {9, 1}, {10, 2}};
    for (const auto& [q, s] : links) {
        if (d.suffix_link(StateId{q}) != StateId{s}) o.fail("suffix link mismatch");
    }
    const auto words = enumerate_words(build_specific_trie(d));
    if (words != std::vector<Word>{"aa", "aba"}) o.fail("specific set differs");
    if (seconds_since(start) >= kWorkedExampleBudgetSeconds) o.fail("too slow");
    if (o.pass) o.detail = "11 states, 14 edges, 10 links, {aa, aba}";
    return o;
}

Outcome worked_table() {
    Outcome o;
    const auto m = build_reference_machine(std::vector<Word>{"abbab"});
    for (auto mode : {LinkMode::PlainS, LinkMode::OptimizedG}) {
        const auto t = ts_table(m, "abaab", mode);
        if (t.entries != std::vector<std::int64_t>{2, -1, 3, -1, -1}) o.fail("table differs");
        if (ts_pairs(m, "abaab", mode) != std::vector<ScanEvent>{{0, 2}, {2, 3}}) o.fail("pairs differ");
    }
    if (oracle::ts_table_naive({"abbab"}, "abaab") != std::vector<std::int64_t>{2, -1, 3, -1, -1}) {
        o.fail("oracle disagrees with frozen value");
    }
    if (o.pass) o.detail = "[2,-1,3,-1,-1], pairs (0,2),(2,3), both modes";
    return o;
}

Outcome oracle_equivalence(const std::vector<testing::Instance>& tries,
                           const std::vector<testing::Instance>& scans) {
    Outcome o;
    const auto start = Clock::now();
    std::size_t mismatches = 0;
    for (const auto& in : tries) {
        const auto fast = enumerate_words(build_specific_trie(Dawg::build(testing::tag(in.reference, in.target))));
        const auto naive = oracle::specific_naive(in.reference, in.target);
        std::vector<Word> all = in.reference;
        all.insert(all.end(), in.target.begin(), in.target.end());
        const auto alpha = letters(all);
        const auto fact_t = oracle::factors_naive(in.target);
        std::vector<Word> maw_t;
        for (const auto& w : oracle::maw_naive(in.reference, {alpha.begin(), alpha.end()})) {
            if (fact_t.contains(w)) maw_t.push_back(w);
        }
        mismatches += (fast != naive) + (naive != maw_t);
    }
    for (const auto& in : scans) {
        const auto m = build_reference_machine(in.reference);
        const auto naive = oracle::ts_table_naive(in.reference, in.target.front());
        for (auto mode : {LinkMode::PlainS, LinkMode::OptimizedG}) {
            mismatches += ts_table(m, in.target.front(), mode).entries != naive;
        }
    }
    const double secs = seconds_since(start);
    if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
    if (secs >= kOracleBudgetSeconds) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) {
        std::ostringstream os;
        os << tries.size() << " trie + " << scans.size() << " scan instances, 0 mismatches, "
           << secs << " s";
        o.detail = os.str();
    }
    return o;
}

Outcome structural(const std::vector<testing::Instance>& tries,
                   const std::vector<testing::Instance>& scans) {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& in : tries) {
        const Dawg d = Dawg::build(testing::tag(in.reference, in.target));
        const auto words = enumerate_words(build_specific_trie(d));
        for (const auto& u : words) {
            for (const auto& v : words) {
                if (u != v && (v.starts_with(u) || v.ends_with(u))) o.fail("not prefix/suffix-free");
            }
        }
        for (std::uint32_t q = 1; q < d.state_count(); ++q) {
            if (d.length(*d.suffix_link(StateId{q})) >= d.length(StateId{q})) o.fail("length not decreasing");
        }
        ++checked;
    }
    for (const auto& in : scans) {
        const auto m = build_reference_machine(in.reference);
        const Dawg& d = m.dawg();
        const std::size_t alpha = d.alphabet().size();
        for (std::uint32_t q = 0; q < d.state_count(); ++q) {
            if (q > 0 && d.length(*d.suffix_link(StateId{q})) >= d.length(StateId{q})) {
                o.fail("length not decreasing");
            }
            std::size_t steps = 0;
            for (auto x = std::optional<StateId>(StateId{q}); m.opt_links()[*x]; x = m.opt_links()[*x]) {
                if (d.out_degree(*m.opt_links()[*x]) <= d.out_degree(*x)) o.fail("G degree not increasing");
                if (++steps > alpha) o.fail("G chain longer than alphabet");
            }
        }
        for (auto mode : {LinkMode::PlainS, LinkMode::OptimizedG}) {
            std::set<std::size_t> starts;
            scan_stream(m, in.target.front(), mode, [&](const ScanEvent& ev) {
                if (!starts.insert(ev.start).second) o.fail("table entry written twice");
            });
        }
        ++checked;
    }
    if (o.pass) o.detail = std::to_string(checked) + " instances, 0 violations";
    return o;
}

Outcome counting_bound(const std::vector<testing::Instance>& tries) {
    Outcome o;
    std::size_t tight = 0, violations = 0;
    std::string witness;
    for (const auto& in : tries) {
        const auto ar = letters(in.reference);
        std::int64_t t_only = 0;
        for (Symbol a : letters(in.target)) t_only += !ar.contains(a);
        const auto size_r = static_cast<std::int64_t>(total_size(in.reference));
        const std::int64_t bound =
            size_r > 1 ? (2 * size_r - 2) * (static_cast<std::int64_t>(ar.size()) - 1) + t_only -
                             static_cast<std::int64_t>(ar.size()) +
                             static_cast<std::int64_t>(in.reference.size())
                       : t_only;
        if (bound != count_bound(size_r, static_cast<std::int64_t>(in.reference.size()),
                                 static_cast<std::int64_t>(ar.size()), t_only)) {
            o.fail("count_bound disagrees with formula");
        }
        const auto n = static_cast<std::int64_t>(specific_words(in.reference, in.target).count);
        if (n > bound && violations++ == 0) {
            auto set = [](const std::vector<Word>& ws) {
                std::string out;
                for (const auto& w : ws) out += (out.empty() ? "" : ",") + w;
                return "{" + out + "}";
            };
            witness = "R=" + set(in.reference) + " T=" + set(in.target) + " count=" + std::to_string(n) + " bound=" + std::to_string(bound);
        }
        tight += n == bound;
    }
    if (violations > 0) {
        o.fail(std::to_string(violations) + "/" + std::to_string(tries.size()) +
               " instances exceed the bound, first: " + witness);
    }
    if (o.pass) o.detail = std::to_string(tries.size()) + " instances, 0 violations (" +
                           std::to_string(tight) + " tight)";
    return o;
}

Outcome complexity_counters() {
    Outcome o;
    Generator gen(3003);
    struct Case {
        std::string name;
        Word reference;
        Word target;
    };
    std::vector<Case> cases;
    cases.push_back({"random4", gen.word(200'000, 4), gen.word(kLongTarget, 4)});
    {
        Word periodic;
        const Word unit = "abaababaab";
        while (periodic.size() < kLongTarget) periodic += unit;
        periodic.resize(kLongTarget);
        cases.push_back({"periodic", gen.word(50'000, 2), periodic});
    }
    {
        Word fib_a = "a", fib_b = "ab";
        while (fib_b.size() < kLongTarget) {
            Word next = fib_b + fib_a;
            fib_a = std::move(fib_b);
            fib_b = std::move(next);
        }
        Word target = fib_b.substr(0, kLongTarget);
        for (std::size_t k = 997; k < target.size(); k += 997) target[k] = 'c';
        cases.push_back({"fibonacci", fib_b.substr(0, 100'000), target});
    }

    std::ostringstream detail;
    double worst_secs = 0;
    for (const auto& c : cases) {
        const auto m = build_reference_machine(std::vector<Word>{c.reference});
        const std::size_t alpha = m.alphabet().size();

        ScanStats plain;
        const auto t0 = Clock::now();
        const auto a = ts_table(m, c.target, LinkMode::PlainS, &plain);
        ScanStats opt;
        const auto t1 = Clock::now();
        const auto b = ts_table(m, c.target, LinkMode::OptimizedG, &opt);
        const double secs = std::chrono::duration<double>(Clock::now() - t1).count();
        worst_secs = std::max({worst_secs, secs, std::chrono::duration<double>(t1 - t0).count()});

        if (plain.link_follows > 2 * c.target.size()) o.fail(c.name + ": plain follows exceed 2|T|");
        if (opt.max_follows_per_symbol > alpha + 1) o.fail(c.name + ": per-symbol follows exceed |A_R|+1");
        if (a.entries != b.entries) o.fail(c.name + ": modes disagree");
        detail << c.name << " s=" << plain.link_follows << " gmax=" << opt.max_follows_per_symbol
               << "/" << alpha + 1 << "; ";
    }
    if (worst_secs >= kLongScanBudgetSeconds) o.fail("10^6 scan took " + std::to_string(worst_secs) + " s");
    if (o.pass) {
        detail << "slowest scan " << worst_secs << " s";
        o.detail = detail.str();
    }
    return o;
}

Outcome mode_agreement(const std::vector<testing::Instance>& scans) {
    Outcome o;
    std::size_t compared = 0;
    for (const auto& in : scans) {
        const auto m = build_reference_machine(in.reference);
        compared += 1;
        if (ts_table(m, in.target.front(), LinkMode::PlainS).entries !=
            ts_table(m, in.target.front(), LinkMode::OptimizedG).entries) {
            o.fail("corpus disagreement");
        }
    }
    Generator gen(4004);
    for (int k = 0; k < kAdversarialTrials; ++k) {
        std::vector<Word> r;
        Word t;
        switch (k % 3) {
        case 0: {
            const Word period = gen.word(gen.uniform(1, 5), 3);
            while (t.size() < 500) t += period;
            r = {gen.word(gen.uniform(10, 60), 3), period + period};
            break;
        }
        case 1:
            r = {Word(gen.uniform(0, 30), 'a')};
            t = Word(gen.uniform(0, 500), 'a');
            break;
        default:
            r = {gen.word(gen.uniform(1, 60), 3)};
            t = gen.word(gen.uniform(1, 500), 3, 'x');
            break;
        }
        const auto m = build_reference_machine(r);
        ++compared;
        if (ts_table(m, t, LinkMode::PlainS).entries != ts_table(m, t, LinkMode::OptimizedG).entries) {
            o.fail("adversarial disagreement");
        }
    }
    if (o.pass) o.detail = std::to_string(compared) + " instances, identical tables";
    return o;
}

Outcome cli_contract() {
    namespace fs = std::filesystem;
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / "tsf_acceptance_cli";
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& content) {
        std::ofstream(dir / name, std::ios::binary) << content;
        return (dir / name).string();
    };
    auto run = [](std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
        args.insert(args.begin(), "tsf");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream os, es;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), os, es);
        if (out) *out = os.str();
        if (err) *err = es.str();
        return code;
    };

    // Index round trip, byte-identical output, over a slice of the random corpus.
    Generator gen(5005);
    for (int k = 0; k < 50; ++k) {
        const auto in = gen.scan_instance();
        std::string ref = ">r0\n\n";
        for (std::size_t w = 0; w < in.reference.size(); ++w) {
            ref += ">r" + std::to_string(w + 1) + "\n" + in.reference[w] + "\n";
        }
        const auto r = write("r.fa", ref);
        const auto t = write("t.fa", ">t1\n" + in.target.front() + "\n>t2\nabcabcabc\n");
        const auto idx = (dir / "r.tsf").string();
        if (run({"index", "--ref", r, "--out", idx}) != 0) o.fail("index failed");
        for (const char* flag : {"--table", "--plain-s", "--optimized-g"}) {
            std::string direct, indexed, again;
            run({"scan", "--ref", r, "--tgt", t, flag}, &direct);
            run({"scan", "--index", idx, "--tgt", t, flag}, &indexed);
            run({"scan", "--ref", r, "--tgt", t, flag}, &again);
            if (direct != indexed) o.fail("index output differs");
            if (direct != again) o.fail("nondeterministic output");
        }
    }

    std::string out, err;
    const auto lines = write("l.txt", "abbab\n\nabaab\n");
    run({"scan", "--ref", lines, "--tgt", lines, "--format", "lines", "--table"}, &out);
    if (out != "line-1\t-1,-1,-1,-1,-1\nline-3\t-1,-1,-1,-1,-1\n") o.fail("LINES parsing");
    const auto fasta = write("f.fa", ">r1\nAB\nBA\n");
    const auto ref = write("r.fa", ">r\nabbab\n>s\nabaab\n");
    run({"scan", "--ref", ref, "--tgt", fasta, "--table"}, &out);
    if (out != "r1\t0,1,2,3\n") o.fail("FASTA concatenation");
    const auto bad = write("bad.fa", "AC\n>r1\n");
    if (run({"scan", "--ref", ref, "--tgt", bad}, &out, &err) != 1 || err.find("line 1") == std::string::npos) {
        o.fail("data-before-header not rejected at line 1");
    }
    fs::remove_all(dir);
    if (o.pass) o.detail = "index round trip, parsing edge cases, determinism";
    return o;
}

} // namespace

int main() {
    const auto tries = trie_corpus();
    const auto scans = scan_corpus();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 worked example reproduction", worked_example},
        {"2 Ts worked instance", worked_table},
        {"3 oracle equivalence suites", [&] { return oracle_equivalence(tries, scans); }},
        {"4 structural invariants", [&] { return structural(tries, scans); }},
        {"5 counting bound", [&] { return counting_bound(tries); }},
        {"6 complexity counters", complexity_counters},
        {"7 mode agreement", [&] { return mode_agreement(scans); }},
        {"8 CLI contract", cli_contract},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const Outcome o = check();
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << '\n';
        failures += !o.pass;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
