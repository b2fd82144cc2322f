#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tsf/word.hpp"

namespace tsf {

/// Dense 0-based index of a state inside one automaton.
struct StateId {
    std::uint32_t index = 0;

    constexpr auto operator<=>(const StateId&) const = default;
};

/// Which input sides a state's words occur in. Every word of a state's
/// class has the same mark.
struct Mark {
    bool reference = false;
    bool target = false;

    constexpr bool both() const { return reference && target; }
    constexpr bool target_only() const { return target && !reference; }
    constexpr bool reference_only() const { return reference && !target; }
    constexpr auto operator<=>(const Mark&) const = default;
};

struct Transition {
    Symbol symbol;
    StateId target;
};

/// Raw arrays of a Dawg, used to rebuild one from serialized form.
/// `links[0]` and every entry equal to kNoState mean "absent".
struct DawgParts {
    static constexpr std::uint32_t kNoState = 0xFFFFFFFFu;

    std::vector<std::uint32_t> links;
    std::vector<std::uint32_t> lengths;
    std::vector<std::uint32_t> offsets; // state_count + 1 entries into `edges`
    std::vector<Transition> edges;
};

/// Generalized suffix automaton (directed acyclic word graph) of a finite
/// multiset of words. Accepts exactly the factors of the input words.
///
/// States are the right-equivalence classes of factors, numbered in
/// creation order of the incremental construction; state 0 is the class of
/// the empty word. Each state carries its suffix link, the length of the
/// longest word of its class and a Mark telling whether the class occurs in
/// reference words, target words, or both.
///
/// Immutable once built. Transitions are stored per state sorted by symbol.
class Dawg {
public:
    /// Builds the automaton with the incremental construction, inserting the
    /// words in the given order. Empty words contribute only ε but still tag
    /// the initial state.
    static Dawg build(std::span<const TaggedWord> words);

    /// Convenience for a reference-only automaton.
    static Dawg build_reference(std::span<const Word> words);

    /// Validates and adopts raw arrays; all states are marked reference.
    /// Throws std::invalid_argument on inconsistent input.
    static Dawg from_parts(DawgParts parts);

    StateId initial() const { return StateId{0}; }
    std::size_t state_count() const { return lengths_.size(); }
    std::size_t transition_count() const { return edges_.size(); }

    std::optional<StateId> walk(StateId q, Symbol a) const;
    std::optional<StateId> walk(StateId q, WordView u) const;

    /// True iff u is a factor of some input word.
    bool accepts_factor(WordView u) const { return walk(initial(), u).has_value(); }

    std::span<const Transition> transitions(StateId q) const;
    std::size_t out_degree(StateId q) const;

    /// Absent only for the initial state.
    std::optional<StateId> suffix_link(StateId q) const;
    std::uint32_t length(StateId q) const;
    Mark mark(StateId q) const;

    /// Sorted, duplicate-free letters occurring in the input.
    const std::vector<Symbol>& alphabet() const { return alphabet_; }

    /// States sorted by non-decreasing length; the initial state comes first.
    std::vector<StateId> states_by_length() const;

    DawgParts to_parts() const;

private:
    void check(StateId q) const;

    std::vector<std::uint32_t> links_;
    std::vector<std::uint32_t> lengths_;
    std::vector<Mark> marks_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Transition> edges_;
    std::vector<Symbol> alphabet_;
};

} // namespace tsf
