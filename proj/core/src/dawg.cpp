#include "tsf/dawg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace tsf {

namespace {

constexpr std::uint32_t kNone = DawgParts::kNoState;

// Mutable state used only during the incremental construction.
struct Node {
    std::vector<Transition> out; // sorted by symbol
    std::uint32_t link = kNone;
    std::uint32_t length = 0;
};

class Builder {
public:
    Builder() { nodes_.emplace_back(); }

    void insert(WordView word) {
        std::uint32_t last = 0;
        for (std::size_t k = 0; k < word.size(); ++k) {
            last = extend(last, symbol_at(word, k));
        }
    }

    std::vector<Node> release() { return std::move(nodes_); }

private:
    static Transition* find(Node& n, Symbol a) {
        auto it = std::lower_bound(n.out.begin(), n.out.end(), a,
                                   [](const Transition& t, Symbol s) { return t.symbol < s; });
        return (it != n.out.end() && it->symbol == a) ? &*it : nullptr;
    }

    static void set(Node& n, Symbol a, std::uint32_t target) {
        auto it = std::lower_bound(n.out.begin(), n.out.end(), a,
                                   [](const Transition& t, Symbol s) { return t.symbol < s; });
        if (it != n.out.end() && it->symbol == a) {
            it->target = StateId{target};
        } else {
            n.out.insert(it, Transition{a, StateId{target}});
        }
    }

    std::uint32_t add(std::uint32_t length) {
        nodes_.emplace_back();
        nodes_.back().length = length;
        return static_cast<std::uint32_t>(nodes_.size() - 1);
    }

    // Copies `q` into a new state of length len(p)+1 and redirects the
    // a-transitions of p and its suffix ancestors that pointed to q.
    std::uint32_t split(std::uint32_t p, Symbol a, std::uint32_t q) {
        const std::uint32_t clone = add(nodes_[p].length + 1);
        nodes_[clone].out = nodes_[q].out;
        nodes_[clone].link = nodes_[q].link;
        nodes_[q].link = clone;
        for (std::uint32_t x = p; x != kNone; x = nodes_[x].link) {
            Transition* t = find(nodes_[x], a);
            if (t == nullptr || t->target.index != q) break;
            t->target = StateId{clone};
        }
        return clone;
    }

    std::uint32_t extend(std::uint32_t last, Symbol a) {
        // The word read so far is already a factor: reuse or split.
        if (const Transition* t = find(nodes_[last], a)) {
            const std::uint32_t q = t->target.index;
            if (nodes_[q].length == nodes_[last].length + 1) return q;
            return split(last, a, q);
        }

        const std::uint32_t cur = add(nodes_[last].length + 1);
        std::uint32_t p = last;
        while (p != kNone && find(nodes_[p], a) == nullptr) {
            set(nodes_[p], a, cur);
            p = nodes_[p].link;
        }
        if (p == kNone) {
            nodes_[cur].link = 0;
            return cur;
        }
        const std::uint32_t q = find(nodes_[p], a)->target.index;
        if (nodes_[q].length == nodes_[p].length + 1) {
            nodes_[cur].link = q;
        } else {
            // split() links q to the clone; cur shares it.
            const std::uint32_t clone = split(p, a, q);
            nodes_[cur].link = clone;
        }
        return cur;
    }

    std::vector<Node> nodes_;
};

void flag(Mark& m, SourceTag tag) {
    (tag == SourceTag::Reference ? m.reference : m.target) = true;
}

bool flagged(const Mark& m, SourceTag tag) {
    return tag == SourceTag::Reference ? m.reference : m.target;
}

std::vector<Symbol> collect_alphabet(const std::vector<Transition>& edges) {
    std::vector<bool> seen(256, false);
    for (const auto& t : edges) seen[t.symbol] = true;
    std::vector<Symbol> out;
    for (int a = 0; a < 256; ++a) {
        if (seen[a]) out.push_back(static_cast<Symbol>(a));
    }
    return out;
}

} // namespace

Dawg Dawg::build(std::span<const TaggedWord> words) {
    Builder builder;
    for (const auto& w : words) builder.insert(w.word);
    std::vector<Node> nodes = builder.release();

    Dawg d;
    const std::size_t n = nodes.size();
    d.links_.resize(n);
    d.lengths_.resize(n);
    d.offsets_.resize(n + 1);
    d.marks_.assign(n, Mark{});
    std::size_t edge_count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        d.links_[q] = nodes[q].link;
        d.lengths_[q] = nodes[q].length;
        d.offsets_[q] = static_cast<std::uint32_t>(edge_count);
        edge_count += nodes[q].out.size();
    }
    d.offsets_[n] = static_cast<std::uint32_t>(edge_count);
    d.edges_.reserve(edge_count);
    for (auto& node : nodes) {
        d.edges_.insert(d.edges_.end(), node.out.begin(), node.out.end());
        node.out = {};
    }
    d.alphabet_ = collect_alphabet(d.edges_);

    // Every factor of x is a suffix of a prefix of x, so flagging the
    // suffix-link ancestors of each prefix state covers all its factors.
    // Ancestors of a flagged state are already flagged, hence the early stop.
    for (const auto& w : words) {
        flag(d.marks_[0], w.tag);
        std::uint32_t p = 0;
        for (std::size_t k = 0; k < w.word.size(); ++k) {
            p = d.walk(StateId{p}, symbol_at(w.word, k))->index;
            for (std::uint32_t x = p; x != kNone && !flagged(d.marks_[x], w.tag); x = d.links_[x]) {
                flag(d.marks_[x], w.tag);
            }
        }
    }
    return d;
}

Dawg Dawg::build_reference(std::span<const Word> words) {
    std::vector<TaggedWord> tagged;
    tagged.reserve(words.size());
    for (const auto& w : words) tagged.push_back({w, SourceTag::Reference});
    return build(tagged);
}

Dawg Dawg::from_parts(DawgParts parts) {
    const std::size_t n = parts.lengths.size();
    auto fail = [](const std::string& what) { throw std::invalid_argument("dawg: " + what); };
    if (n == 0) fail("no states");
    if (parts.links.size() != n || parts.offsets.size() != n + 1) fail("array sizes disagree");
    if (parts.offsets.front() != 0 || parts.offsets.back() != parts.edges.size()) {
        fail("edge offsets out of range");
    }
    if (parts.links[0] != kNone || parts.lengths[0] != 0) fail("bad initial state");
    for (std::size_t q = 0; q < n; ++q) {
        if (parts.offsets[q] > parts.offsets[q + 1]) fail("edge offsets not monotone");
        if (q > 0) {
            const std::uint32_t s = parts.links[q];
            if (s >= n || parts.lengths[s] >= parts.lengths[q]) {
                fail("bad suffix link at state " + std::to_string(q));
            }
        }
        for (std::uint32_t e = parts.offsets[q]; e < parts.offsets[q + 1]; ++e) {
            const Transition& t = parts.edges[e];
            if (t.target.index >= n || parts.lengths[t.target.index] < parts.lengths[q] + 1) {
                fail("bad transition at state " + std::to_string(q));
            }
            if (e > parts.offsets[q] && parts.edges[e - 1].symbol >= t.symbol) {
                fail("unsorted transitions at state " + std::to_string(q));
            }
        }
    }

    Dawg d;
    d.links_ = std::move(parts.links);
    d.lengths_ = std::move(parts.lengths);
    d.offsets_ = std::move(parts.offsets);
    d.edges_ = std::move(parts.edges);
    d.marks_.assign(n, Mark{true, false});
    d.alphabet_ = collect_alphabet(d.edges_);
    return d;
}

void Dawg::check(StateId q) const {
    assert(q.index < state_count() && "state id out of range");
    (void)q;
}

std::optional<StateId> Dawg::walk(StateId q, Symbol a) const {
    const auto out = transitions(q);
    // Degrees are tiny on DNA-like alphabets; a linear probe beats bisection there.
    if (out.size() <= 8) {
        for (const auto& t : out) {
            if (t.symbol == a) return t.target;
        }
        return std::nullopt;
    }
    auto it = std::lower_bound(out.begin(), out.end(), a,
                               [](const Transition& t, Symbol s) { return t.symbol < s; });
    if (it != out.end() && it->symbol == a) return it->target;
    return std::nullopt;
}

std::optional<StateId> Dawg::walk(StateId q, WordView u) const {
    std::optional<StateId> cur = q;
    for (std::size_t k = 0; k < u.size() && cur; ++k) cur = walk(*cur, symbol_at(u, k));
    return cur;
}

std::span<const Transition> Dawg::transitions(StateId q) const {
    check(q);
    return {edges_.data() + offsets_[q.index], edges_.data() + offsets_[q.index + 1]};
}

std::size_t Dawg::out_degree(StateId q) const {
    check(q);
    return offsets_[q.index + 1] - offsets_[q.index];
}

std::optional<StateId> Dawg::suffix_link(StateId q) const {
    check(q);
    if (links_[q.index] == kNone) return std::nullopt;
    return StateId{links_[q.index]};
}

std::uint32_t Dawg::length(StateId q) const {
    check(q);
    return lengths_[q.index];
}

Mark Dawg::mark(StateId q) const {
    check(q);
    return marks_[q.index];
}

std::vector<StateId> Dawg::states_by_length() const {
    // Counting sort; lengths are bounded by the longest input word.
    std::uint32_t max_len = 0;
    for (auto len : lengths_) max_len = std::max(max_len, len);
    std::vector<std::uint32_t> start(static_cast<std::size_t>(max_len) + 2, 0);
    for (auto len : lengths_) ++start[len + 1];
    for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    std::vector<StateId> order(lengths_.size());
    for (std::uint32_t q = 0; q < lengths_.size(); ++q) order[start[lengths_[q]]++] = StateId{q};
    return order;
}

DawgParts Dawg::to_parts() const {
    return DawgParts{links_, lengths_, offsets_, edges_};
}

} // namespace tsf
