#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semsketch/corpus.hpp"

namespace semsketch {

struct Filler {
    std::string lemma;
    std::uint64_t count = 0;

    auto operator<=>(const Filler&) const = default;
};

// One role column of a sketch. Fillers are sorted by count descending,
// ties by lemma ascending; total_count is the untruncated role count.
struct RoleSection {
    RoleLabel role;
    std::uint64_t total_count = 0;
    std::vector<Filler> fillers;

    auto operator<=>(const RoleSection&) const = default;
};

// The lexicographic profile of one predicate sense. Sections are sorted
// by total_count descending, ties by role name ascending. An anonymized
// sketch has no sense.
struct Sketch {
    std::string id;
    std::optional<SenseKey> sense;
    std::vector<RoleSection> sections;

    auto operator<=>(const Sketch&) const = default;
};

struct BuildConfig {
    std::uint64_t dependency_threshold = 2000;
    std::size_t min_meanings = 2;
    std::size_t max_roles = 8;
    std::size_t max_fillers_per_role = 10;
    FlagSet excluded_flags = FlagSet::all();
};

// Records whose flags do not intersect config.excluded_flags, order kept.
std::vector<DependencyRecord> filter_records(std::span<const DependencyRecord> records,
                                             const BuildConfig& config);

// A sense is selected iff its record count (repeats included) reaches
// dependency_threshold and its lexeme group shows at least min_meanings
// distinct semantic classes among the input records.
std::set<SenseKey> select_senses(std::span<const DependencyRecord> records,
                                 const BuildConfig& config);

// Canonical id of a named sketch: "<lexeme_group>:<semantic_class>".
std::string sketch_id_for(const SenseKey& sense);

// Aggregates the records of one sense into a sketch. Records must all
// carry the given sense; an empty record list is an error.
Sketch build_sketch(const SenseKey& sense, std::span<const DependencyRecord> records,
                    const BuildConfig& config);

// filter_records + select_senses + build_sketch, output ordered by id.
std::vector<Sketch> build_all(std::span<const DependencyRecord> records,
                              const BuildConfig& config);

struct AnonymizeResult {
    std::vector<Sketch> sketches;                // senses removed, opaque ids
    std::map<std::string, SenseKey> secret;      // opaque id -> original sense
};

// Replaces sketch ids with opaque ids drawn from a seeded stream and strips
// the senses. Every input sketch must have a sense.
AnonymizeResult anonymize(std::span<const Sketch> sketches, std::uint64_t seed);

}  // namespace semsketch
