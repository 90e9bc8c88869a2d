#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "semsketch/corpus.hpp"
#include "semsketch/evaluate.hpp"
#include "semsketch/sketch.hpp"

namespace semsketch {

using json = nlohmann::json;

json sketch_to_json(const Sketch& sketch);
Sketch sketch_from_json(const json& j);

json context_to_json(const Context& ctx);
Context context_from_json(const json& j);

json report_to_json(const ScoreReport& report);

// JSON-lines bundles. Readers validate as they go and report the line
// number on parse errors.
void write_sketches_jsonl(const std::filesystem::path& path, std::span<const Sketch> sketches);
std::vector<Sketch> read_sketches_jsonl(const std::filesystem::path& path);

void write_contexts_jsonl(const std::filesystem::path& path, std::span<const Context> contexts);

Mapping read_mapping(const std::filesystem::path& path);
void write_mapping(const std::filesystem::path& path, const Mapping& mapping);

// Sense-labeled context pool: the context JSON-lines format plus a
// required "sense" object per line. Never published with task data.
std::map<SenseKey, std::vector<Context>> read_context_pool(const std::filesystem::path& path);
void write_context_pool(const std::filesystem::path& path,
                        const std::map<SenseKey, std::vector<Context>>& pool);

std::map<std::string, SenseKey> read_secret(const std::filesystem::path& path);
void write_secret(const std::filesystem::path& path,
                  const std::map<std::string, SenseKey>& secret);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace semsketch
