// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crossin/benchkit.hpp"
#include "crossin/client.hpp"
#include "crossin/metrics.hpp"

namespace crossin {

extern const char* const kDefaultPromptTemplate;

struct RunConfig {
    std::string prompt_template;  // {context} {question} {choice_A..D}
    GenParams params;
    int max_in_flight = 4;
    int max_retries = 3;
    std::string cache_dir;
    uint64_t seed = 0;
    // Backoff doubles per retry: base, 2*base, 4*base. Tests shrink it.
    int backoff_base_ms = 1000;

    RunConfig();  // installs the default prompt template
};

// Deterministic substitution of {context}, {question} and {choice_A..D}.
// A missing context substitutes the empty string; a template without the
// question or all four choice slots throws MissingPlaceholder.
std::string render_prompt(const McqItem& item, const std::string& language,
                          const std::string& template_text);

// Grades one free-form response against the item's four choices.
// Rule cascade, first hit wins:
//   1. first standalone letter A-D, case-insensitive; standalone means both
//      neighbours are start/end, whitespace, or one of . ) : ]
//   2. case-insensitive containment of exactly one full choice text
//   3. kAbstain
// Total: never throws.
int8_t extract_choice(const std::string& response,
                      const std::array<std::string, 4>& choices);

// One transcript cache entry per request, keyed by
// fnv1a64(model \x1f temperature \x1f max_tokens \x1f prompt). Entries are
// created atomically, so concurrent writers are safe; existing entries are
// never overwritten.
class TranscriptCache {
public:
    explicit TranscriptCache(std::filesystem::path dir);

    struct Entry {
        std::string response;
        std::optional<std::string> error;  // set when retries were exhausted
    };

    static uint64_t key(const std::string& prompt, const GenParams& params);

    std::optional<Entry> lookup(uint64_t key) const;
    void store(uint64_t key, const std::string& prompt, const GenParams& params,
               const Entry& entry) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

struct RunStats {
    size_t cache_hits = 0;
    size_t client_calls = 0;
    size_t abstained = 0;
    std::vector<std::string> errors;  // "item/lang: message"
};

// Runs every (item, language) cell through the client, at most
// max_in_flight requests in flight. Cached cells are never re-requested.
// Transient failures are retried with exponential backoff, then recorded
// as an errored transcript which grades kAbstain. The returned matrix
// depends only on (benchmark, transcripts), not on scheduling.
AnswerMatrix evaluate(const McqBenchmark& benchmark, ModelClient& client,
                      const RunConfig& config, RunStats* stats = nullptr);

// Offline scoring from a complete cache; throws MissingTranscript for any
// uncovered cell. Equal to evaluate() under the same cache.
AnswerMatrix replay(const McqBenchmark& benchmark, const RunConfig& config,
                    RunStats* stats = nullptr);

// Offline scoring from a consolidated transcript file: JSON-Lines of
// {"item_id", "language", "response"}. Later lines win on duplicates.
AnswerMatrix replay_file(const std::filesystem::path& transcripts,
                         const McqBenchmark& benchmark, RunStats* stats = nullptr);

}  // namespace crossin
