// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace crossin {

// One Alpaca-style instruction record. `input` is the optional auxiliary
// field some records carry alongside the instruction.
struct SeedRecord {
    std::string id;
    std::string instruction;
    std::optional<std::string> input;
    std::string output;

    bool operator==(const SeedRecord&) const = default;
};

enum class CorpusFormat { kJsonl };

// Index-aligned multilingual instruction corpus: every language holds the
// same number of records, and records at the same index share one id.
// Immutable after construction; safe to share across threads.
class ParallelCorpus {
public:
    // Validates alignment structure: >= 2 unique languages, equal sizes,
    // matching ids per index, unique ids per language, non-empty.
    static ParallelCorpus from_records(std::vector<std::string> languages,
                                       std::vector<std::vector<SeedRecord>> records);

    const std::vector<std::string>& languages() const { return languages_; }
    size_t size() const { return records_.empty() ? 0 : records_[0].size(); }

    bool has_language(std::string_view language) const;

    // Verbatim access. Throws UnknownLanguage / IndexOutOfRange.
    const SeedRecord& get(std::string_view language, size_t index) const;

    size_t language_index(std::string_view language) const;

    std::optional<size_t> find_by_id(std::string_view id) const;

    const std::vector<SeedRecord>& records_for(std::string_view language) const;

private:
    ParallelCorpus() = default;

    std::vector<std::string> languages_;
    std::vector<std::vector<SeedRecord>> records_;  // [language][index]
    std::unordered_map<std::string, size_t> language_lookup_;
    std::unordered_map<std::string, size_t> id_lookup_;
};

// Loads one JSON-Lines file per language; order of `paths` fixes the corpus
// language order. Records missing an `id` get their 0-based line number as
// id, uniformly across languages, so positional alignment carries over.
// Files are parsed concurrently; errors are reported in language order.
ParallelCorpus load_parallel_corpus(
    const std::vector<std::pair<std::string, std::string>>& paths,
    CorpusFormat format = CorpusFormat::kJsonl);

// Re-serializes one language as JSON-Lines. Loading the result yields
// records equal to the originals.
void write_language_jsonl(const ParallelCorpus& corpus, const std::string& language,
                          std::ostream& out);

enum class CorpusViolationKind {
    EmptyField,            // instruction or output blank after trimming
    IdMismatch,            // ids diverge across languages at one index
    SuspiciousDuplicate,   // byte-identical instruction in two languages (warning)
};

struct CorpusViolation {
    CorpusViolationKind kind;
    size_t index;
    std::string language;        // primary language involved
    std::string other_language;  // SuspiciousDuplicate only
    std::string field;           // EmptyField only: "instruction" or "output"
    bool warning = false;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<CorpusViolation> violations;

    // True when nothing beyond warnings was found.
    bool ok() const {
        for (const auto& v : violations)
            if (!v.warning) return false;
        return true;
    }
    bool clean() const { return violations.empty(); }
};

// Report-only content scan: blank fields, id mismatches, byte-identical
// cross-language instructions (warning; short instructions can legitimately
// coincide).
ValidationReport validate_alignment(const ParallelCorpus& corpus);

}  // namespace crossin
