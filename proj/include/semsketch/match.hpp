#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semsketch/corpus.hpp"
#include "semsketch/fill.hpp"
#include "semsketch/sketch.hpp"

namespace semsketch {

enum class Strategy {
    BaselineIntersection,
    TemplateScore,
    FlattenSimilarity,
    PredicateRestoration,
};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

struct MatchConfig {
    Strategy strategy = Strategy::BaselineIntersection;
    std::size_t top_n = 1000;
    std::string template_pattern = "[MASK] {cell}";
    std::size_t restoration_top_k = 1;
    HeadRule head_rule = HeadRule::LastToken;
};

// Within one context's result list: score descending, ties by sketch id
// ascending, so rankings are independent of input sketch order.
struct ScoredSketch {
    std::string sketch_id;
    double score = 0.0;

    bool operator==(const ScoredSketch&) const = default;
};

// Head lemmas of every filler in every section.
std::set<std::string> sketch_tokens(const Sketch& sketch,
                                    HeadRule head_rule = HeadRule::LastToken);

// Context text with the target span replaced by the mask token.
std::string masked_sentence(const Context& ctx);

// Context text with the target span wrapped in <t>...</t>.
std::string tagged_sentence(const Context& ctx);

// Instantiates a template pattern: "{cell}" replaced by the cell lemma.
// The pattern must contain the mask token exactly once and at least one
// "{cell}" slot.
std::string render_template(const std::string& pattern, std::string_view cell);

double cosine_similarity(std::span<const double> a, std::span<const double> b);

// Intersection over the per-dependent candidate sets (lemma level).
// A context without a dependents list is an error; an empty list yields
// the empty set, which callers flag rather than score.
std::set<std::string> baseline_candidates(const Context& ctx, FillModel& model,
                                          const MatchConfig& config);

// Score(sketch) = |candidates ∩ sketch_tokens(sketch)|.
std::vector<ScoredSketch> baseline_match(const Context& ctx, std::span<const Sketch> sketches,
                                         FillModel& model, const MatchConfig& config);

// Score(sketch) = mean over one template per filler cell of the fill score
// the model assigns to the context's target lemma (0 when absent).
std::vector<ScoredSketch> template_score_match(const Context& ctx,
                                               std::span<const Sketch> sketches,
                                               FillModel& model, const MatchConfig& config);

// "<role>: f1 f2 ..." per section, joined by "; ", in sketch order.
std::string flatten_sketch(const Sketch& sketch);

// Score(sketch) = cosine(embed(tagged context), embed(flattened sketch)).
std::vector<ScoredSketch> similarity_match(const Context& ctx, std::span<const Sketch> sketches,
                                           FillModel& model, const MatchConfig& config);

// Majority vote over the per-template top hypotheses; ties by lemma
// ascending. Throws FillError when every template comes back empty.
std::string restore_predicate(const Sketch& sketch, FillModel& model,
                              const MatchConfig& config);

// Restores each sketch's predicate once, then assigns every context the
// first sketch (id order) whose predicate equals the target lemma. With no
// exact match the embed capability picks the nearest predicate; without
// one the lexicographically smallest sketch id is the documented fallback.
Mapping restoration_match(std::span<const Context> contexts, std::span<const Sketch> sketches,
                          FillModel& model, const MatchConfig& config);

struct MatchReport {
    Mapping mapping;
    // Context ids whose baseline candidate intersection was empty.
    std::vector<std::string> flagged_contexts;
};

// Per-context argmax of the strategy's ranking (restoration maps directly).
MatchReport match_all(std::span<const Context> contexts, std::span<const Sketch> sketches,
                      FillModel& model, const MatchConfig& config, std::size_t jobs = 1,
                      const std::function<std::unique_ptr<FillModel>()>& model_factory = {});

}  // namespace semsketch
