#include "tsf/specific_trie.hpp"

#include <algorithm>
#include <deque>

namespace tsf {

NodeId SpecificTrie::add(std::optional<StateId> origin, std::uint32_t depth) {
    nodes_.push_back(Node{{}, origin, depth});
    return NodeId{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

std::size_t SpecificTrie::sink_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return !n.origin; }));
}

SpecificTrie build_specific_trie(const Dawg& d) {
    SpecificTrie trie;
    // ε counts as a factor of both sides even when one side has no words,
    // so the search always starts at the initial state.
    const StateId init = d.initial();
    std::vector<std::uint32_t> node_of(d.state_count(), DawgParts::kNoState);
    std::deque<StateId> queue{init};
    node_of[init.index] = trie.add(init, 0).index;

    while (!queue.empty()) {
        const StateId p = queue.front();
        queue.pop_front();
        const NodeId here{node_of[p.index]};
        const auto s = d.suffix_link(p);

        for (const Transition& t : d.transitions(p)) {
            const Mark next = d.mark(t.target);
            bool sink = false;
            if (next.target_only()) {
                if (!s) {
                    sink = true;
                } else if (auto alt = d.walk(*s, t.symbol)) {
                    sink = d.mark(*alt).reference;
                }
            }
            const std::uint32_t depth = trie.nodes_[here.index].depth + 1;
            if (sink) {
                const NodeId leaf = trie.add(std::nullopt, depth);
                trie.nodes_[here.index].edges.push_back({t.symbol, leaf});
            } else if (next.both() && node_of[t.target.index] == DawgParts::kNoState) {
                const NodeId child = trie.add(t.target, depth);
                node_of[t.target.index] = child.index;
                trie.nodes_[here.index].edges.push_back({t.symbol, child});
                queue.push_back(t.target);
            }
        }
    }
    return trie;
}

SpecificTrie SpecificTrie::pruned() const {
    // Children always have larger ids than their parent, so one reverse
    // sweep decides which nodes reach a sink.
    std::vector<bool> live(nodes_.size(), false);
    for (std::size_t k = nodes_.size(); k-- > 0;) {
        if (!nodes_[k].origin) {
            live[k] = true;
            continue;
        }
        for (const auto& e : nodes_[k].edges) {
            if (live[e.target.index]) live[k] = true;
        }
    }
    live[0] = true;

    SpecificTrie out;
    std::vector<std::uint32_t> remap(nodes_.size(), DawgParts::kNoState);
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (live[k]) remap[k] = out.add(nodes_[k].origin, nodes_[k].depth).index;
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (!live[k]) continue;
        for (const auto& e : nodes_[k].edges) {
            if (live[e.target.index]) {
                out.nodes_[remap[k]].edges.push_back({e.symbol, NodeId{remap[e.target.index]}});
            }
        }
    }
    return out;
}

std::vector<Word> enumerate_words(const SpecificTrie& trie) {
    std::vector<Word> words;
    Word path;
    // Explicit stack of (node, next edge index) keeps deep tries off the call stack.
    std::vector<std::pair<NodeId, std::size_t>> stack{{trie.root(), 0}};
    while (!stack.empty()) {
        auto& [n, next] = stack.back();
        const auto& edges = trie.node(n).edges;
        if (next == edges.size()) {
            stack.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        const TrieEdge e = edges[next++];
        path.push_back(static_cast<char>(e.symbol));
        if (trie.is_sink(e.target)) {
            words.push_back(path);
            path.pop_back();
        } else {
            stack.emplace_back(e.target, 0);
        }
    }
    // Edges are visited in symbol order, so the result is already sorted.
    return words;
}

std::int64_t count_bound(std::int64_t size_r, std::int64_t m, std::int64_t alpha_r,
                         std::int64_t alpha_t_minus_r) {
    if (size_r <= 1) return alpha_t_minus_r;
    return (2 * size_r - 2) * (alpha_r - 1) + alpha_t_minus_r - alpha_r + m;
}

namespace {

std::vector<bool> letters(std::span<const Word> words) {
    std::vector<bool> seen(256, false);
    for (const auto& w : words) {
        for (std::size_t k = 0; k < w.size(); ++k) seen[symbol_at(w, k)] = true;
    }
    return seen;
}

} // namespace

SpecificWordReport specific_words(std::span<const Word> reference, std::span<const Word> target) {
    std::vector<TaggedWord> tagged;
    tagged.reserve(reference.size() + target.size());
    for (const auto& w : reference) tagged.push_back({w, SourceTag::Reference});
    for (const auto& w : target) tagged.push_back({w, SourceTag::Target});

    const Dawg d = Dawg::build(tagged);
    SpecificWordReport report;
    report.words = enumerate_words(build_specific_trie(d));
    report.count = report.words.size();

    const auto in_r = letters(reference);
    const auto in_t = letters(target);
    std::int64_t alpha_r = 0;
    std::int64_t alpha_t_only = 0;
    for (int a = 0; a < 256; ++a) {
        alpha_r += in_r[a];
        alpha_t_only += in_t[a] && !in_r[a];
    }
    std::int64_t size_r = 0;
    for (const auto& w : reference) size_r += static_cast<std::int64_t>(w.size());
    report.bound = count_bound(size_r, static_cast<std::int64_t>(reference.size()), alpha_r,
                               alpha_t_only);
    return report;
}

} // namespace tsf
