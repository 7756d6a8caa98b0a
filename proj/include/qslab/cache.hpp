#pragma once

// On-disk cache of computed character tables, one JSON file per group spec.
// Loaded tables are revalidated by orthogonality before use.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qslab/characters.hpp"

namespace qslab {

/// FNV-1a 64 over a canonical serialization of the spec.
std::uint64_t spec_hash(const GroupSpec& spec);

std::string serialize_table(const CharacterTable& table);
/// nullopt when the text is malformed, describes another group, or fails
/// the orthogonality relations.
std::optional<CharacterTable> deserialize_table(const GroupPtr& group, std::string_view json);

enum class CacheOutcome { Disabled, Hit, Miss, Stale };
std::string_view cache_outcome_name(CacheOutcome outcome);

struct CachedTable {
  CharacterTable table;
  CacheOutcome outcome = CacheOutcome::Disabled;
};

std::filesystem::path cache_file(const std::filesystem::path& dir, const GroupSpec& spec);

/// Reads the cached table from `dir` when present and valid, otherwise
/// computes it and (re)writes the cache file. No directory disables caching.
CachedTable load_or_compute_table(const GroupPtr& group,
                                  const std::optional<std::filesystem::path>& dir);

}  // namespace qslab
