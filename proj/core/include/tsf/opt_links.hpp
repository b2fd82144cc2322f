#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tsf/dawg.hpp"

namespace tsf {

/// Optimized suffix links G over a Dawg.
///
/// G[q] is the nearest state on the suffix-link chain above q whose
/// out-degree is strictly larger than out_degree(q). Since Out(q) is always
/// contained in Out(s[q]), every state skipped on the way has exactly the
/// same outgoing symbols as q. G[q] is absent for the initial state and for
/// states whose out-degree already equals the initial state's.
class OptLinkTable {
public:
    OptLinkTable() = default;

    std::optional<StateId> operator[](StateId q) const {
        const std::uint32_t g = links_.at(q.index);
        if (g == DawgParts::kNoState) return std::nullopt;
        return StateId{g};
    }

    std::size_t size() const { return links_.size(); }

    const std::vector<std::uint32_t>& raw() const { return links_; }

    /// Adopts serialized links after checking them against `d`.
    /// Throws std::invalid_argument when they are not G for `d`.
    static OptLinkTable from_raw(const Dawg& d, std::vector<std::uint32_t> links);

private:
    friend OptLinkTable build_optimized_links(const Dawg& d);

    std::vector<std::uint32_t> links_;
};

/// One pass over states in increasing length order, so G[s[q]] is ready
/// before q is visited.
OptLinkTable build_optimized_links(const Dawg& d);

} // namespace tsf
