#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "tsf/ts_scan.hpp"

namespace tsf {

/// On-disk reference index. Layout (all integers little-endian):
///
///   "TSF1"                       magic, 4 bytes
///   u32 version                  kIndexVersion
///   u32 state_count, u32 edge_count
///   u16 alphabet_size, then alphabet_size bytes (sorted)
///   state_count x { u32 suffix_link, u32 length, u32 opt_link, u32 edge_offset }
///   u32 edge_offset sentinel     == edge_count
///   edge_count x { u8 symbol, u32 target }
///   u64 checksum                 FNV-1a 64 of every preceding byte
///
/// Absent links are stored as 0xFFFFFFFF.
inline constexpr std::uint32_t kIndexVersion = 1;

class IndexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string serialize_index(const ReferenceMachine& machine);

/// Throws IndexError on bad magic, version mismatch, truncation, checksum
/// failure or structurally invalid content.
ReferenceMachine deserialize_index(const std::string& bytes);

/// Writes to a temporary sibling and renames it over `path`.
void save_index(const ReferenceMachine& machine, const std::filesystem::path& path);

ReferenceMachine load_index(const std::filesystem::path& path);

} // namespace tsf
