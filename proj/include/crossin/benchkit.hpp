// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossin/client.hpp"
#include "crossin/common.hpp"
#include "crossin/jsonl.hpp"

namespace crossin {

// One language's rendering of a parallel MCQ. Choice order is semantically
// aligned across languages: choice k everywhere translates choice k in
// English, so "same answer" is well-defined by index.
struct McqVariant {
    std::optional<std::string> context;
    std::string question;
    std::array<std::string, 4> choices;
    int answer_index = 0;

    bool operator==(const McqVariant&) const = default;
};

struct McqItem {
    std::string id;
    std::map<std::string, McqVariant> variants;  // language -> variant

    int answer_index() const { return variants.begin()->second.answer_index; }
    bool operator==(const McqItem&) const = default;
};

struct McqBenchmark {
    std::string name;
    std::vector<std::string> languages;
    std::vector<McqItem> items;

    bool operator==(const McqBenchmark&) const = default;
};

// JSON-Lines, one parallel item per line:
//   {"id": ..., "variants": {"eng": {"context", "question", "choices", "answer_index"}, ...}}
// Validates all invariants: 4 distinct choices per variant, shared
// answer_index, identical language coverage, unique ids.
McqBenchmark load_benchmark(const std::filesystem::path& path);
McqBenchmark parse_benchmark(std::istream& in, const std::string& name);
void write_benchmark(const McqBenchmark& benchmark, std::ostream& out);
void save_benchmark(const McqBenchmark& benchmark, const std::filesystem::path& path);

ojson item_to_json(const McqItem& item);
McqItem item_from_json(const json& doc);

// Throws the first invariant violation; used by loaders and review import.
void validate_item(const McqItem& item);

// ---------------------------------------------------------------------------
// Construction pipeline

struct QaItem {
    std::string id;
    std::string question;     // English
    std::string gold_answer;  // English, extractive: substring of the context
    std::map<std::string, std::string> contexts;  // language -> parallel context
};

std::vector<QaItem> load_qa_items(const std::filesystem::path& path);

struct Transcript {
    std::string stage;  // "choices" or "localize:<lang>"
    std::string prompt;
    std::string response;
};

struct BuildConfig {
    std::string choice_prompt_template;    // {context} {question} {gold}
    std::string localize_prompt_template;  // {english_mcq} {target_context}
    int max_retries = 3;
    GenParams params;

    BuildConfig();  // installs the default templates
};

// Step 1: the gold answer becomes choice 0 and the client is prompted for
// three incorrect options, preferably phrases from the context. Distractors
// that collide with the gold or each other trigger a retry; after
// max_retries the item is rejected. Every client exchange is kept for
// audit.
McqVariant build_english_mcq(const QaItem& qa, ModelClient& client,
                             const BuildConfig& config,
                             std::vector<Transcript>& transcripts);

// Step 2: the English draft plus the target-language context are sent to
// the client, which re-renders question and choices in the target language
// with order preserved. target_lang == "eng" is an identity pass with no
// client call.
McqVariant localize_mcq(const McqVariant& english, const std::string& target_lang,
                        const std::string& target_context, ModelClient& client,
                        const BuildConfig& config, std::vector<Transcript>& transcripts);

enum class QcKind {
    ChoiceCount,
    DuplicateChoices,
    EmptyChoice,
    GoldNotUnique,
    AnswerIndexMismatch,
    DistractorNotInContext,  // warning: soft check, needs a context
};

struct QcViolation {
    QcKind kind;
    std::string language;
    int choice = -1;
    bool warning = false;

    std::string describe() const;
};

// Automated pre-screen run before items go out for human review.
// Idempotent, side-effect free.
std::vector<QcViolation> quality_check(const McqItem& item);

// Applies one uniform permutation of {0,1,2,3} to every language variant
// and remaps answer_index accordingly. Grading after the shuffle is
// equivalent to grading before it.
McqItem shuffle_choices(const McqItem& item, uint64_t seed);

// Whole-benchmark shuffle: one stream, one permutation drawn per item in
// order.
McqBenchmark shuffle_benchmark(const McqBenchmark& benchmark, uint64_t seed);

// ---------------------------------------------------------------------------
// Human review queue

enum class ReviewStatus { pending, accept, reject };

const char* to_string(ReviewStatus s);
ReviewStatus review_status_from_string(std::string_view name);

// Review file: the benchmark line plus {"review": {"status", "note"}}.
// Reviewers edit item fields in place and flip the status.
void export_review(const McqBenchmark& benchmark, std::ostream& out);
void save_review(const McqBenchmark& benchmark, const std::filesystem::path& path);

// Drops rejected items, keeps accepted/pending ones with any edits applied,
// and revalidates. Throws RevalidationFailed(id) when an edit breaks an
// invariant.
McqBenchmark import_review(std::istream& in, const std::string& name);
McqBenchmark load_review(const std::filesystem::path& path);

}  // namespace crossin
