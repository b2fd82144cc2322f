#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tsf/dawg.hpp"
#include "tsf/opt_links.hpp"
#include "tsf/word.hpp"

namespace tsf {

/// Which failure link the scanner follows when a transition is missing.
enum class LinkMode : std::uint8_t {
    PlainS,     ///< suffix links; amortized linear time
    OptimizedG, ///< optimized links; per-symbol work bounded by the alphabet
};

/// Suffix automaton of the reference set with suffix links, lengths and
/// optimized links. Immutable; share it between any number of scans.
class ReferenceMachine {
public:
    explicit ReferenceMachine(Dawg dawg);
    ReferenceMachine(Dawg dawg, OptLinkTable links);

    const Dawg& dawg() const { return dawg_; }
    const OptLinkTable& opt_links() const { return opt_; }
    const std::vector<Symbol>& alphabet() const { return dawg_.alphabet(); }

private:
    Dawg dawg_;
    OptLinkTable opt_;
};

ReferenceMachine build_reference_machine(std::span<const Word> reference);

/// Occurrence of a target-specific factor T[start..end], both ends inclusive.
struct ScanEvent {
    std::size_t start = 0;
    std::size_t end = 0;

    constexpr auto operator<=>(const ScanEvent&) const = default;
};

/// entries[i] is the end of the target-specific factor starting at i, or -1.
struct TsTable {
    std::vector<std::int64_t> entries;

    std::vector<ScanEvent> pairs() const;
};

/// Failure-link work done by a scan.
struct ScanStats {
    std::uint64_t link_follows = 0;
    std::uint64_t max_follows_per_symbol = 0;
};

/// Push-style scanner. Keeps only the current state, the position and the
/// length of the current match, so memory does not grow with the input.
///
/// After push() returns for position j, every factor ending at j has been
/// reported. At most one target-specific factor ends at any position.
class Scanner {
public:
    Scanner(const ReferenceMachine& machine, LinkMode mode);

    std::optional<ScanEvent> push(Symbol a);

    /// State reached by the longest suffix of the input read so far that is
    /// a factor of the reference.
    StateId state() const { return state_; }
    std::size_t match_length() const { return match_length_; }
    std::size_t position() const { return position_; }
    const ScanStats& stats() const { return stats_; }

private:
    StateId fail(StateId q) const;

    const ReferenceMachine* machine_;
    LinkMode mode_;
    StateId state_;
    std::size_t match_length_ = 0;
    std::size_t position_ = 0;
    ScanStats stats_;
};

TsTable ts_table(const ReferenceMachine& machine, WordView target, LinkMode mode,
                 ScanStats* stats = nullptr);

/// Events in increasing end order, as emitted while scanning.
std::vector<ScanEvent> ts_pairs(const ReferenceMachine& machine, WordView target, LinkMode mode);

/// Feeds each symbol of `input` to a fresh scanner and hands every event to
/// `on_event` as soon as it is known.
template <typename Range, typename Sink>
ScanStats scan_stream(const ReferenceMachine& machine, const Range& input, LinkMode mode,
                      Sink&& on_event) {
    Scanner scanner(machine, mode);
    for (auto c : input) {
        if (auto ev = scanner.push(static_cast<Symbol>(c))) on_event(*ev);
    }
    return scanner.stats();
}

} // namespace tsf
