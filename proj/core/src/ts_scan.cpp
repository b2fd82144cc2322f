#include "tsf/ts_scan.hpp"

#include <algorithm>
#include <cassert>

namespace tsf {

ReferenceMachine::ReferenceMachine(Dawg dawg)
    : dawg_(std::move(dawg)), opt_(build_optimized_links(dawg_)) {}

ReferenceMachine::ReferenceMachine(Dawg dawg, OptLinkTable links)
    : dawg_(std::move(dawg)), opt_(std::move(links)) {}

ReferenceMachine build_reference_machine(std::span<const Word> reference) {
    return ReferenceMachine(Dawg::build_reference(reference));
}

std::vector<ScanEvent> TsTable::pairs() const {
    std::vector<ScanEvent> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] >= 0) out.push_back({i, static_cast<std::size_t>(entries[i])});
    }
    return out;
}

Scanner::Scanner(const ReferenceMachine& machine, LinkMode mode)
    : machine_(&machine), mode_(mode), state_(machine.dawg().initial()) {}

StateId Scanner::fail(StateId q) const {
    const Dawg& d = machine_->dawg();
    if (mode_ == LinkMode::PlainS) return *d.suffix_link(q);
    // An absent G means every letter of the reference already leaves q.
    return machine_->opt_links()[q].value_or(d.initial());
}

std::optional<ScanEvent> Scanner::push(Symbol a) {
    const Dawg& d = machine_->dawg();
    const std::size_t j = position_++;

    if (auto next = d.walk(state_, a)) {
        state_ = *next;
        ++match_length_;
        return std::nullopt;
    }

    // Find the longest suffix v of the current match u such that va is a
    // factor of the reference.
    StateId q = state_;
    std::uint64_t follows = 0;
    std::optional<StateId> next;
    while (q != d.initial() && !(next = d.walk(q, a))) {
        q = fail(q);
        ++follows;
    }
    if (q == d.initial()) next = d.walk(q, a);
    stats_.link_follows += follows;
    stats_.max_follows_per_symbol = std::max(stats_.max_follows_per_symbol, follows);

    if (!next) {
        // No suffix works, not even ε: the letter itself is absent.
        state_ = d.initial();
        match_length_ = 0;
        return ScanEvent{j, j};
    }
    // The letter preceding v in u extends v to the left; |v| = length(q).
    const std::size_t v = d.length(q);
    assert(match_length_ > v);
    state_ = *next;
    match_length_ = v + 1;
    return ScanEvent{j - v - 1, j};
}

TsTable ts_table(const ReferenceMachine& machine, WordView target, LinkMode mode,
                 ScanStats* stats) {
    TsTable table;
    table.entries.assign(target.size(), -1);
    const ScanStats st = scan_stream(machine, target, mode, [&](const ScanEvent& ev) {
        assert(table.entries[ev.start] == -1);
        table.entries[ev.start] = static_cast<std::int64_t>(ev.end);
    });
    if (stats) *stats = st;
    return table;
}

std::vector<ScanEvent> ts_pairs(const ReferenceMachine& machine, WordView target, LinkMode mode) {
    std::vector<ScanEvent> out;
    scan_stream(machine, target, mode, [&](const ScanEvent& ev) { out.push_back(ev); });
    return out;
}

} // namespace tsf
