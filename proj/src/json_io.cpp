#include "semsketch/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "semsketch/errors.hpp"

namespace semsketch {

namespace {

std::string require_string(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
        throw ParseError(where + ": missing or non-string key \"" + key + "\"");
    }
    return it->get<std::string>();
}

std::uint64_t require_uint(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_unsigned()) {
        throw ParseError(where + ": missing or non-integer key \"" + key + "\"");
    }
    return it->get<std::uint64_t>();
}

SenseKey sense_from_json(const json& j, const std::string& where) {
    SenseKey sense;
    sense.lexeme_group = require_string(j, "lexeme_group", where);
    sense.semantic_class = require_string(j, "semantic_class", where);
    if (sense.lexeme_group.empty() || sense.semantic_class.empty()) {
        throw ParseError(where + ": sense fields must be non-empty");
    }
    return sense;
}

json sense_to_json(const SenseKey& sense) {
    return json{{"lexeme_group", sense.lexeme_group}, {"semantic_class", sense.semantic_class}};
}

// Reads one JSON object per non-blank line, reporting line numbers.
template <class Fn>
void for_each_jsonl(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        fn(j, line_no);
    }
    if (in.bad()) throw IoError("I/O error while reading " + path.string());
}

}  // namespace

json sketch_to_json(const Sketch& sketch) {
    json sections = json::array();
    for (const auto& sec : sketch.sections) {
        json fillers = json::array();
        for (const auto& f : sec.fillers) {
            fillers.push_back(json{{"lemma", f.lemma}, {"count", f.count}});
        }
        sections.push_back(json{{"role", sec.role.name},
                                {"total_count", sec.total_count},
                                {"fillers", std::move(fillers)}});
    }
    json j{{"id", sketch.id}, {"sections", std::move(sections)}};
    if (sketch.sense) j["sense"] = sense_to_json(*sketch.sense);
    return j;
}

Sketch sketch_from_json(const json& j) {
    Sketch sketch;
    sketch.id = require_string(j, "id", "sketch");
    const std::string where = "sketch " + sketch.id;
    if (auto it = j.find("sense"); it != j.end() && !it->is_null()) {
        sketch.sense = sense_from_json(*it, where);
    }
    auto sections = j.find("sections");
    if (sections == j.end() || !sections->is_array() || sections->empty()) {
        throw ParseError(where + ": missing or empty \"sections\"");
    }
    for (const auto& sec_json : *sections) {
        RoleSection sec;
        sec.role.name = require_string(sec_json, "role", where);
        sec.total_count = require_uint(sec_json, "total_count", where);
        auto fillers = sec_json.find("fillers");
        if (fillers == sec_json.end() || !fillers->is_array() || fillers->empty()) {
            throw ParseError(where + ": role " + sec.role.name + " has no fillers");
        }
        std::uint64_t shown = 0;
        for (const auto& f_json : *fillers) {
            Filler f;
            f.lemma = require_string(f_json, "lemma", where);
            f.count = require_uint(f_json, "count", where);
            if (f.count == 0) throw ParseError(where + ": filler count must be >= 1");
            shown += f.count;
            sec.fillers.push_back(std::move(f));
        }
        if (sec.total_count < shown) {
            throw ParseError(where + ": total_count below the sum of filler counts");
        }
        sketch.sections.push_back(std::move(sec));
    }
    return sketch;
}

json context_to_json(const Context& ctx) {
    json j{{"id", ctx.id},         {"target", ctx.target}, {"start", ctx.start},
           {"end", ctx.end},       {"context", ctx.text},  {"target_lemma", ctx.target_lemma}};
    if (ctx.dependents) {
        json deps = json::array();
        for (const auto& d : *ctx.dependents) deps.push_back(json::array({d.lemma, d.relation}));
        j["dependents"] = std::move(deps);
    }
    return j;
}

Context context_from_json(const json& j) {
    Context ctx;
    ctx.id = require_string(j, "id", "context");
    const std::string where = "context " + ctx.id;
    ctx.target = require_string(j, "target", where);
    ctx.start = require_uint(j, "start", where);
    ctx.end = require_uint(j, "end", where);
    ctx.text = require_string(j, "context", where);
    ctx.target_lemma = require_string(j, "target_lemma", where);
    if (auto it = j.find("dependents"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) throw ParseError(where + ": \"dependents\" must be an array");
        std::vector<Dependent> deps;
        for (const auto& d : *it) {
            if (!d.is_array() || d.size() != 2 || !d[0].is_string() || !d[1].is_string()) {
                throw ParseError(where + ": dependents entries must be [lemma, relation] pairs");
            }
            deps.push_back(Dependent{d[0].get<std::string>(), d[1].get<std::string>()});
        }
        ctx.dependents = std::move(deps);
    }
    return ctx;
}

json report_to_json(const ScoreReport& report) {
    json per_sketch = json::object();
    for (const auto& [id, ct] : report.per_sketch) {
        per_sketch[id] = json{{"correct", ct.first}, {"total", ct.second}};
    }
    return json{{"accuracy", report.accuracy},
                {"n_correct", report.n_correct},
                {"n_total", report.n_total},
                {"n_extraneous", report.n_extraneous},
                {"per_sketch", std::move(per_sketch)}};
}

std::vector<Context> ingest_contexts(const std::filesystem::path& path) {
    std::vector<Context> contexts;
    std::set<std::string> seen;
    for_each_jsonl(path, [&](const json& j, std::size_t line_no) {
        Context ctx;
        try {
            ctx = context_from_json(j);
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (!seen.insert(ctx.id).second) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": duplicate context id " + ctx.id);
        }
        validate_context(ctx);
        contexts.push_back(std::move(ctx));
    });
    return contexts;
}

void write_sketches_jsonl(const std::filesystem::path& path,
                          std::span<const Sketch> sketches) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& s : sketches) out << sketch_to_json(s).dump() << '\n';
    if (!out) throw IoError("I/O error while writing " + path.string());
}

std::vector<Sketch> read_sketches_jsonl(const std::filesystem::path& path) {
    std::vector<Sketch> sketches;
    std::set<std::string> seen;
    for_each_jsonl(path, [&](const json& j, std::size_t line_no) {
        Sketch s;
        try {
            s = sketch_from_json(j);
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (!seen.insert(s.id).second) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": duplicate sketch id " + s.id);
        }
        sketches.push_back(std::move(s));
    });
    return sketches;
}

void write_contexts_jsonl(const std::filesystem::path& path,
                          std::span<const Context> contexts) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& c : contexts) out << context_to_json(c).dump() << '\n';
    if (!out) throw IoError("I/O error while writing " + path.string());
}

Mapping read_mapping(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path.string() + ": mapping must be a JSON object");
    Mapping m;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) {
            throw ParseError(path.string() + ": mapping values must be strings");
        }
        m.pairs[key] = value.get<std::string>();
    }
    return m;
}

void write_mapping(const std::filesystem::path& path, const Mapping& mapping) {
    json j = json::object();
    for (const auto& [ctx, sketch] : mapping.pairs) j[ctx] = sketch;
    write_text_file(path, j.dump(2) + "\n");
}

std::map<SenseKey, std::vector<Context>> read_context_pool(const std::filesystem::path& path) {
    std::map<SenseKey, std::vector<Context>> pool;
    std::set<std::string> seen;
    for_each_jsonl(path, [&](const json& j, std::size_t line_no) {
        const std::string where = path.string() + ":" + std::to_string(line_no);
        Context ctx;
        SenseKey sense;
        try {
            ctx = context_from_json(j);
            auto it = j.find("sense");
            if (it == j.end()) throw ParseError("pool entries need a \"sense\" object");
            sense = sense_from_json(*it, "pool entry");
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (!seen.insert(ctx.id).second) {
            throw ValidationError(where + ": duplicate context id " + ctx.id);
        }
        validate_context(ctx);
        pool[sense].push_back(std::move(ctx));
    });
    return pool;
}

void write_context_pool(const std::filesystem::path& path,
                        const std::map<SenseKey, std::vector<Context>>& pool) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& [sense, contexts] : pool) {
        for (const auto& ctx : contexts) {
            json j = context_to_json(ctx);
            j["sense"] = sense_to_json(sense);
            out << j.dump() << '\n';
        }
    }
    if (!out) throw IoError("I/O error while writing " + path.string());
}

std::map<std::string, SenseKey> read_secret(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    std::map<std::string, SenseKey> secret;
    for (const auto& [key, value] : j.items()) {
        secret[key] = sense_from_json(value, path.string());
    }
    return secret;
}

void write_secret(const std::filesystem::path& path,
                  const std::map<std::string, SenseKey>& secret) {
    json j = json::object();
    for (const auto& [id, sense] : secret) j[id] = sense_to_json(sense);
    write_text_file(path, j.dump(2) + "\n");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("I/O error while writing " + path.string());
}

}  // namespace semsketch
