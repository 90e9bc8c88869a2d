#include "semsketch/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "semsketch/errors.hpp"
#include "semsketch/text.hpp"

namespace semsketch {

namespace {

struct FlagName {
    RecordFlag flag;
    std::string_view name;
};

// Canonical order used by to_string.
constexpr FlagName kFlagNames[] = {
    {RecordFlag::Pronoun, "PRONOUN"},
    {RecordFlag::PersonalNoun, "PERSONAL_NOUN"},
    {RecordFlag::Ellipted, "ELLIPTED"},
    {RecordFlag::Moved, "MOVED"},
};

std::vector<std::string_view> split_keep_empty(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::string FlagSet::to_string() const {
    std::string out;
    for (const auto& [flag, name] : kFlagNames) {
        if (!test(flag)) continue;
        if (!out.empty()) out += ',';
        out += name;
    }
    return out;
}

FlagSet FlagSet::parse(std::string_view text) {
    FlagSet set;
    for (auto part : split_keep_empty(text, ',')) {
        if (part.empty()) continue;
        bool known = false;
        for (const auto& [flag, name] : kFlagNames) {
            if (part == name) {
                set.set(flag);
                known = true;
                break;
            }
        }
        if (!known) throw ParseError("unknown flag \"" + std::string(part) + "\"");
    }
    return set;
}

DependencyRecord record_from_tsv(std::string_view line) {
    auto fields = split_keep_empty(line, '\t');
    if (fields.size() != 8) {
        throw ParseError("expected 8 tab-separated fields, got " +
                         std::to_string(fields.size()));
    }
    DependencyRecord rec;
    rec.sentence_id = std::string(fields[0]);
    rec.sense.lexeme_group = std::string(fields[1]);
    rec.sense.semantic_class = std::string(fields[2]);
    rec.role.name = std::string(fields[3]);
    rec.filler_lemma = std::string(fields[4]);
    rec.filler_surface = std::string(fields[5]);
    rec.filler_pos = std::string(fields[6]);
    rec.flags = FlagSet::parse(fields[7]);

    if (rec.sense.lexeme_group.empty()) throw ParseError("empty lexeme_group");
    if (rec.sense.semantic_class.empty()) throw ParseError("empty semantic_class");
    if (rec.role.name.empty()) throw ParseError("empty role");
    if (contains_whitespace(rec.role.name)) {
        throw ParseError("role \"" + rec.role.name + "\" contains whitespace");
    }
    if (rec.filler_lemma.empty()) throw ParseError("empty filler_lemma");
    return rec;
}

std::string record_to_tsv(const DependencyRecord& rec) {
    std::string out;
    out += rec.sentence_id;
    out += '\t';
    out += rec.sense.lexeme_group;
    out += '\t';
    out += rec.sense.semantic_class;
    out += '\t';
    out += rec.role.name;
    out += '\t';
    out += rec.filler_lemma;
    out += '\t';
    out += rec.filler_surface;
    out += '\t';
    out += rec.filler_pos;
    out += '\t';
    out += rec.flags.to_string();
    return out;
}

std::vector<DependencyRecord> ingest_corpus(const std::filesystem::path& path,
                                            const IngestConfig& config) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file " + path.string());

    std::vector<DependencyRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty()) continue;
        if (line.rfind(config.comment_prefix, 0) == 0) continue;
        try {
            records.push_back(record_from_tsv(line));
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (in.bad()) throw IoError("I/O error while reading " + path.string());
    return records;
}

void write_corpus(const std::filesystem::path& path,
                  std::span<const DependencyRecord> records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& rec : records) out << record_to_tsv(rec) << '\n';
    if (!out) throw IoError("I/O error while writing " + path.string());
}

void validate_context(const Context& ctx) {
    if (ctx.start >= ctx.end) {
        throw ValidationError("context " + ctx.id + ": empty or inverted span [" +
                              std::to_string(ctx.start) + ", " + std::to_string(ctx.end) + ")");
    }
    const std::size_t len = utf8_length(ctx.text);
    if (ctx.end > len) {
        throw ValidationError("context " + ctx.id + ": span end " + std::to_string(ctx.end) +
                              " past text length " + std::to_string(len));
    }
    const std::string span = utf8_substr(ctx.text, ctx.start, ctx.end);
    if (span != ctx.target) {
        throw ValidationError("context " + ctx.id + ": span text \"" + span +
                              "\" does not match target \"" + ctx.target + "\"");
    }
}

// ingest_contexts lives in json_io.cpp next to the JSON adapters.

}  // namespace semsketch
