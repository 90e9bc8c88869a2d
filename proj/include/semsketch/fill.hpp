#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semsketch/corpus.hpp"
#include "semsketch/text.hpp"

namespace semsketch {

inline constexpr std::string_view kMaskToken = "[MASK]";

std::size_t count_mask_tokens(std::string_view text);

// A cloze query: template text with exactly one mask token.
struct ClozeQuery {
    std::string template_text;
    std::size_t top_n = 1000;
};

struct Candidate {
    std::string lemma;
    double score = 0.0;

    bool operator==(const Candidate&) const = default;
};

// Score descending, ties by lemma ascending.
bool candidate_less(const Candidate& a, const Candidate& b);
void sort_candidates(std::vector<Candidate>& candidates);

// Fill/embed capability surface shared by the built-in model, static
// tables, and external plugin processes.
class FillModel {
public:
    virtual ~FillModel() = default;

    virtual bool can_fill() const = 0;
    virtual bool can_embed() const = 0;

    // Candidates for the mask slot, sorted, at most query.top_n entries.
    // Short lists are legal when the model knows fewer candidates.
    virtual std::vector<Candidate> fill(const ClozeQuery& query) = 0;

    // Fixed-dimension vector; deterministic within one model session.
    virtual std::vector<double> embed(const std::string& text) = 0;

    // Candidate set for one direct dependent of a context whose target
    // span has been masked. The default forwards the masked sentence
    // verbatim as a fill query; models that understand the dependent
    // structure may override.
    virtual std::vector<Candidate> dependent_candidates(const std::string& masked_sentence,
                                                        const std::string& dependent_head,
                                                        std::size_t top_n);
};

// (predicate lexeme, filler head lemma) counts with per-predicate totals.
struct CooccurrenceModel {
    std::map<std::string, std::map<std::string, std::uint64_t>> pair_counts;
    std::map<std::string, std::uint64_t> predicate_totals;

    bool operator==(const CooccurrenceModel&) const = default;
};

// One count per record: pair (lexeme group, filler head lemma).
CooccurrenceModel train_cooccurrence(std::span<const DependencyRecord> records,
                                     HeadRule head_rule = HeadRule::LastToken);

// The built-in fill model. Scores a predicate p for a template's content
// words f as sum over distinct f of pair_counts[p][f] / predicate_totals[p].
// Immutable after construction; safe to share across threads.
class CooccurrenceFillModel final : public FillModel {
public:
    explicit CooccurrenceFillModel(CooccurrenceModel model,
                                   HeadRule head_rule = HeadRule::LastToken);

    bool can_fill() const override { return true; }
    bool can_embed() const override { return false; }

    std::vector<Candidate> fill(const ClozeQuery& query) override;
    std::vector<double> embed(const std::string& text) override;

    // Distributional expansion of the dependent through shared predicates:
    // score(x) = sum_p P(x|p) * P(p|dependent). Candidates are the words
    // that occur in the same predicate slots as the dependent, which is
    // what the intersection-based baseline compares against sketch tokens.
    std::vector<Candidate> dependent_candidates(const std::string& masked_sentence,
                                                const std::string& dependent_head,
                                                std::size_t top_n) override;

    const CooccurrenceModel& model() const { return model_; }

private:
    CooccurrenceModel model_;
    HeadRule head_rule_;
    // filler head lemma -> (predicate -> count), plus column totals
    std::map<std::string, std::map<std::string, std::uint64_t>> by_filler_;
    std::map<std::string, std::uint64_t> filler_totals_;
};

// Fixed template -> candidates table; the in-process twin of the loopback
// plugin. Optionally answers embed queries with a byte-histogram vector.
class StaticTableModel final : public FillModel {
public:
    explicit StaticTableModel(std::map<std::string, std::vector<Candidate>> table,
                              bool bag_embed = false, std::size_t embed_dim = 128);

    bool can_fill() const override { return true; }
    bool can_embed() const override { return bag_embed_; }

    std::vector<Candidate> fill(const ClozeQuery& query) override;
    std::vector<double> embed(const std::string& text) override;

    static StaticTableModel from_json_file(const std::filesystem::path& path);

private:
    std::map<std::string, std::vector<Candidate>> table_;
    bool bag_embed_;
    std::size_t embed_dim_;
};

// Histogram of UTF-8 bytes folded into `dim` buckets.
std::vector<double> bag_embed(std::string_view text, std::size_t dim = 128);

}  // namespace semsketch
