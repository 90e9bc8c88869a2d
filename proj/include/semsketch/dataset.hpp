#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "semsketch/corpus.hpp"
#include "semsketch/sketch.hpp"

namespace semsketch {

enum class SplitName { Trial, Dev, ManualDev };

std::string_view split_name_str(SplitName name);

// One shared-task split. Trial publishes its gold mapping; dev and
// manual_dev do not. Manual_dev sketches are a subset of dev sketches and
// its contexts a subset of dev contexts.
struct SplitSpec {
    SplitName name = SplitName::Trial;
    std::size_t n_sketches = 1;
    std::size_t contexts_per_sketch = 1;
    bool publish_mapping = false;

    bool operator==(const SplitSpec&) const = default;
};

struct Dataset {
    SplitSpec split;
    std::vector<Sketch> sketches;  // anonymized
    std::vector<Context> contexts;
    Mapping gold;

    bool operator==(const Dataset&) const = default;
};

struct SplitOptions {
    std::uint64_t seed = 0;
    // When set, a sense with too few pool contexts is an error instead of
    // an all-available fallback with a warning.
    bool strict = false;
};

struct SplitResult {
    std::vector<Dataset> datasets;
    std::map<std::string, SenseKey> secret;  // opaque sketch id -> sense
    std::vector<std::string> warnings;
};

// Rejects duplicate split names, publish flags contradicting the split
// semantics, and manual_dev without dev.
void validate_split_specs(const std::vector<SplitSpec>& specs);

// Seeded sampling: trial and dev draw disjoint sketches from one shuffled
// deck, manual_dev draws from dev. Contexts come from pool[sense], without
// replacement, contexts_per_sketch per sketch; split contexts are shuffled
// and renumbered "<split>.sent.<n>" (manual_dev keeps its dev ids). The
// sampled sketches are anonymized with the same seed.
SplitResult split_dataset(const std::vector<Sketch>& sketches,
                          const std::map<SenseKey, std::vector<Context>>& pool,
                          const std::vector<SplitSpec>& specs, const SplitOptions& options);

// Checks every Dataset invariant; throws ValidationError.
void validate_dataset(const Dataset& ds);

// Writes <dir>/sketches.jsonl, <dir>/contexts.jsonl and, only when the
// split publishes its mapping, <dir>/gold.json.
void emit_dataset(const Dataset& ds, const std::filesystem::path& dir);

// Re-ingests what emit_dataset wrote. Gold is read only for publishing
// splits; otherwise pass it via `gold`.
Dataset read_dataset(const SplitSpec& spec, const std::filesystem::path& dir,
                     const Mapping* gold = nullptr);

}  // namespace semsketch
