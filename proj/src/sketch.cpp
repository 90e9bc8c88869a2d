#include "semsketch/sketch.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <set>

#include "semsketch/errors.hpp"
#include "semsketch/rng.hpp"

namespace semsketch {

std::vector<DependencyRecord> filter_records(std::span<const DependencyRecord> records,
                                             const BuildConfig& config) {
    std::vector<DependencyRecord> out;
    out.reserve(records.size());
    for (const auto& rec : records) {
        if (!rec.flags.intersects(config.excluded_flags)) out.push_back(rec);
    }
    return out;
}

std::set<SenseKey> select_senses(std::span<const DependencyRecord> records,
                                 const BuildConfig& config) {
    std::map<SenseKey, std::uint64_t> counts;
    std::map<std::string, std::set<std::string>> meanings;
    for (const auto& rec : records) {
        ++counts[rec.sense];
        meanings[rec.sense.lexeme_group].insert(rec.sense.semantic_class);
    }
    std::set<SenseKey> selected;
    for (const auto& [sense, count] : counts) {
        if (count < config.dependency_threshold) continue;
        if (meanings[sense.lexeme_group].size() < config.min_meanings) continue;
        selected.insert(sense);
    }
    return selected;
}

std::string sketch_id_for(const SenseKey& sense) {
    return sense.lexeme_group + ":" + sense.semantic_class;
}

Sketch build_sketch(const SenseKey& sense, std::span<const DependencyRecord> records,
                    const BuildConfig& config) {
    if (records.empty()) {
        throw ValidationError("no records for sense " + sketch_id_for(sense));
    }
    std::map<RoleLabel, std::map<std::string, std::uint64_t>> by_role;
    for (const auto& rec : records) {
        if (rec.sense != sense) {
            throw ValidationError("record for " + sketch_id_for(rec.sense) +
                                  " passed to build_sketch(" + sketch_id_for(sense) + ")");
        }
        ++by_role[rec.role][rec.filler_lemma];
    }

    Sketch sketch;
    sketch.id = sketch_id_for(sense);
    sketch.sense = sense;
    for (const auto& [role, filler_counts] : by_role) {
        RoleSection sec;
        sec.role = role;
        for (const auto& [lemma, count] : filler_counts) {
            sec.total_count += count;
            sec.fillers.push_back(Filler{lemma, count});
        }
        std::sort(sec.fillers.begin(), sec.fillers.end(), [](const Filler& a, const Filler& b) {
            if (a.count != b.count) return a.count > b.count;
            return a.lemma < b.lemma;
        });
        if (sec.fillers.size() > config.max_fillers_per_role) {
            sec.fillers.resize(config.max_fillers_per_role);
        }
        sketch.sections.push_back(std::move(sec));
    }
    std::sort(sketch.sections.begin(), sketch.sections.end(),
              [](const RoleSection& a, const RoleSection& b) {
                  if (a.total_count != b.total_count) return a.total_count > b.total_count;
                  return a.role.name < b.role.name;
              });
    if (sketch.sections.size() > config.max_roles) sketch.sections.resize(config.max_roles);
    return sketch;
}

std::vector<Sketch> build_all(std::span<const DependencyRecord> records,
                              const BuildConfig& config) {
    const auto filtered = filter_records(records, config);
    const auto selected = select_senses(filtered, config);

    std::map<SenseKey, std::vector<DependencyRecord>> grouped;
    for (const auto& rec : filtered) {
        if (selected.contains(rec.sense)) grouped[rec.sense].push_back(rec);
    }
    std::vector<Sketch> sketches;
    sketches.reserve(grouped.size());
    for (const auto& [sense, group] : grouped) {
        sketches.push_back(build_sketch(sense, group, config));
    }
    std::sort(sketches.begin(), sketches.end(),
              [](const Sketch& a, const Sketch& b) { return a.id < b.id; });
    return sketches;
}

AnonymizeResult anonymize(std::span<const Sketch> sketches, std::uint64_t seed) {
    AnonymizeResult result;
    SplitMix64 rng = SplitMix64::derive(seed, "anonymize");
    std::set<std::string> used;
    for (const auto& sketch : sketches) {
        if (!sketch.sense) {
            throw ValidationError("sketch " + sketch.id + " is already anonymized");
        }
        std::string opaque;
        int attempts = 0;
        do {
            char buf[32];
            std::snprintf(buf, sizeof buf, "sk_%016llx",
                          static_cast<unsigned long long>(rng.next()));
            opaque = buf;
            assert(++attempts < 100 && "opaque id space exhausted");
        } while (used.contains(opaque));
        used.insert(opaque);

        Sketch anon = sketch;
        anon.id = opaque;
        anon.sense.reset();
        result.secret.emplace(opaque, *sketch.sense);
        result.sketches.push_back(std::move(anon));
    }
    return result;
}

}  // namespace semsketch
