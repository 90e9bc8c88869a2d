#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semsketch {

// A semantic role name: non-empty, no whitespace, case-sensitive.
struct RoleLabel {
    std::string name;

    auto operator<=>(const RoleLabel&) const = default;
};

// One predicate sense: a verb lexeme group plus the semantic class naming
// the meaning. Aspect/voice variants of the verb share one key.
struct SenseKey {
    std::string lexeme_group;
    std::string semantic_class;

    auto operator<=>(const SenseKey&) const = default;
};

enum class RecordFlag : unsigned {
    Pronoun = 1u << 0,
    PersonalNoun = 1u << 1,
    Ellipted = 1u << 2,
    Moved = 1u << 3,
};

// Small set over the four corpus-supplied markup flags.
class FlagSet {
public:
    FlagSet() = default;

    static FlagSet all() {
        FlagSet f;
        f.bits_ = 0xF;
        return f;
    }

    void set(RecordFlag f) { bits_ |= static_cast<unsigned>(f); }
    bool test(RecordFlag f) const { return bits_ & static_cast<unsigned>(f); }
    bool intersects(FlagSet other) const { return bits_ & other.bits_; }
    bool empty() const { return bits_ == 0; }

    auto operator<=>(const FlagSet&) const = default;

    // Comma-joined canonical form, e.g. "PRONOUN,MOVED"; empty set -> "".
    std::string to_string() const;
    // Throws ParseError on an unknown flag name.
    static FlagSet parse(std::string_view text);

private:
    unsigned bits_ = 0;
};

// One semantic dependency occurrence in the role-labeled corpus.
struct DependencyRecord {
    std::string sentence_id;
    SenseKey sense;
    RoleLabel role;
    std::string filler_lemma;
    std::string filler_surface;
    std::string filler_pos;
    FlagSet flags;

    auto operator<=>(const DependencyRecord&) const = default;
};

struct Dependent {
    std::string lemma;
    std::string relation;

    auto operator<=>(const Dependent&) const = default;
};

// A sentence with one highlighted target predicate occurrence.
// start/end are character offsets, half-open, and text[start, end) == target.
struct Context {
    std::string id;
    std::string target;
    std::size_t start = 0;
    std::size_t end = 0;
    std::string text;
    std::string target_lemma;
    std::optional<std::vector<Dependent>> dependents;

    auto operator<=>(const Context&) const = default;
};

// context id -> sketch id; a context maps to exactly one sketch.
struct Mapping {
    std::map<std::string, std::string> pairs;

    auto operator<=>(const Mapping&) const = default;
};

struct IngestConfig {
    std::string comment_prefix = "#";
};

// Reads the tab-separated dependency-record format. One record per
// non-comment, non-blank line, in file order; malformed lines throw
// ParseError naming the line.
std::vector<DependencyRecord> ingest_corpus(const std::filesystem::path& path,
                                            const IngestConfig& config = {});

// Reads the JSON-lines context format, enforcing the span invariant and
// rejecting duplicate ids.
std::vector<Context> ingest_contexts(const std::filesystem::path& path);

// Throws ValidationError when the span invariant does not hold.
void validate_context(const Context& ctx);

std::string record_to_tsv(const DependencyRecord& rec);
DependencyRecord record_from_tsv(std::string_view line);

void write_corpus(const std::filesystem::path& path, std::span<const DependencyRecord> records);

}  // namespace semsketch
