#include "tsf/opt_links.hpp"

#include <stdexcept>

namespace tsf {

OptLinkTable build_optimized_links(const Dawg& d) {
    OptLinkTable table;
    table.links_.assign(d.state_count(), DawgParts::kNoState);
    for (StateId q : d.states_by_length()) {
        const auto s = d.suffix_link(q);
        if (!s) continue;
        table.links_[q.index] =
            d.out_degree(q) < d.out_degree(*s) ? s->index : table.links_[s->index];
    }
    return table;
}

OptLinkTable OptLinkTable::from_raw(const Dawg& d, std::vector<std::uint32_t> links) {
    OptLinkTable expected = build_optimized_links(d);
    if (links != expected.links_) {
        throw std::invalid_argument("optimized links do not match the automaton");
    }
    return expected;
}

} // namespace tsf
