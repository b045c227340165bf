// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crossin/corpus.hpp"
#include "crossin/jsonl.hpp"
#include "crossin/rng.hpp"

namespace crossin {

enum class Variant { en2x, x2en, x2x };

const char* to_string(Variant v);
Variant variant_from_string(std::string_view name);

inline constexpr const char* kDefaultTranslationPrompt =
    "Translate the following sentence into English.";

// Everything that determines a synthesis run. Identical recipe + corpus
// means byte-identical output files, on any platform.
struct SynthRecipe {
    Variant variant = Variant::x2x;
    uint64_t sample_count = 0;
    std::vector<std::string> languages;
    bool include_translation = false;
    std::string translation_prompt = kDefaultTranslationPrompt;
    uint64_t seed = 0;
    bool allow_identity_pair = true;
    // Row indices are drawn with replacement by default. Without
    // replacement requires sample_count <= corpus size.
    bool without_replacement = false;
    // Default direction is X -> English. The reverse flag swaps the pair;
    // callers overriding it should also override translation_prompt.
    bool reverse_translation = false;

    // Throws InvalidRecipe on violation.
    void validate() const;
};

enum class RecordKind { base, crossin, trans };

const char* to_string(RecordKind k);
RecordKind record_kind_from_string(std::string_view name);

struct RecordMeta {
    std::string source_id;
    std::string instruction_lang;
    std::string output_lang;
    RecordKind kind = RecordKind::base;

    bool operator==(const RecordMeta&) const = default;
};

struct TuningRecord {
    std::string instruction;
    std::optional<std::string> input;
    std::string output;
    RecordMeta meta;

    bool operator==(const TuningRecord&) const = default;
};

// Language pair draw for one iteration. The stream contract, per iteration:
//   row index, then l_in (when random), then l_out (when random), then l_t
//   (when translation is enabled).
// Fixed roles (en2x's English instruction, x2en's English output) consume
// no draws. With allow_identity_pair=false the later-drawn role is redrawn
// until the pair is cross-lingual, and l_t is redrawn until it differs from
// English.
std::pair<std::string, std::string> sample_languages(const SynthRecipe& recipe,
                                                      SplitMix64& rng);

struct SynthOutput {
    std::vector<TuningRecord> crossin;
    std::vector<TuningRecord> trans;  // empty unless include_translation
};

// Runs the full sampling loop once, emitting the cross-lingual part and,
// when enabled, the translation part from the same row draws. Instruction
// and output strings are verbatim corpus entries; the optional `input`
// field rides along in the instruction language. Record materialization is
// parallel; the result is identical to synth::serial::synthesize.
SynthOutput synthesize(const ParallelCorpus& corpus, const SynthRecipe& recipe);

std::vector<TuningRecord> generate_crossin(const ParallelCorpus& corpus,
                                           const SynthRecipe& recipe);
std::vector<TuningRecord> generate_translation(const ParallelCorpus& corpus,
                                               const SynthRecipe& recipe);

struct KindCounts {
    size_t base = 0;
    size_t crossin = 0;
    size_t trans = 0;
    size_t total() const { return base + crossin + trans; }
};

struct TrainingSet {
    std::vector<TuningRecord> records;
    KindCounts counts;
    uint64_t shuffle_seed = 0;
};

// Concatenates the three parts and applies one seeded Fisher-Yates pass.
// Every input record appears exactly once.
TrainingSet compose_training_set(std::vector<TuningRecord> base,
                                 std::vector<TuningRecord> crossin,
                                 std::vector<TuningRecord> trans,
                                 uint64_t shuffle_seed);

// Reads an instruction file (Alpaca/Platypus-style JSONL) and tags every
// record kind=base. Base corpora are English-side data; both language
// fields are recorded as "eng".
std::vector<TuningRecord> load_base_records(const std::string& path);

// Manifest document: recipe echo, per-kind counts, toolkit version, and the
// advisory trainer-settings block consumed by downstream fine-tuning jobs.
// `created_at` is the only non-deterministic field.
ojson emit_manifest(const SynthRecipe& recipe, const KindCounts& counts,
                    uint64_t shuffle_seed);

void write_tuning_records(const std::vector<TuningRecord>& records, std::ostream& out);
std::string serialize_tuning_records(const std::vector<TuningRecord>& records);
std::vector<TuningRecord> parse_tuning_records(std::istream& in);

namespace serial {
// Single-loop reference generator. Kept as the comparison baseline for the
// parallel materialization path; tests assert byte-identical serialization.
SynthOutput synthesize(const ParallelCorpus& corpus, const SynthRecipe& recipe);
}  // namespace serial

}  // namespace crossin
