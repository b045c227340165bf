// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#include "crossin/corpus.hpp"

#include <exception>
#include <filesystem>
#include <ostream>
#include <unordered_set>

#include "crossin/errors.hpp"
#include "crossin/jsonl.hpp"

namespace crossin {

namespace {

std::vector<SeedRecord> parse_language_file(const std::string& language,
                                            const std::string& path) {
    if (!std::filesystem::exists(path))
        throw Error(ErrorCode::MissingLanguageFile, language + ": " + path);

    std::vector<SeedRecord> records;
    for_each_jsonl(std::filesystem::path(path), language, [&](size_t line, const json& doc) {
        SeedRecord rec;
        if (doc.contains("id")) {
            if (doc["id"].is_string())
                rec.id = doc["id"].get<std::string>();
            else if (doc["id"].is_number_integer())
                rec.id = std::to_string(doc["id"].get<int64_t>());
            else
                throw Error(ErrorCode::ParseError, language + ": line " + std::to_string(line) +
                                                       ": id must be a string or integer");
        } else {
            // Positional fallback: the 0-based line number, applied uniformly
            // across languages so alignment-by-position is preserved.
            rec.id = std::to_string(line);
        }
        if (!doc.contains("instruction") || !doc["instruction"].is_string())
            throw Error(ErrorCode::ParseError, language + ": line " + std::to_string(line) +
                                                   ": missing string field 'instruction'");
        if (!doc.contains("output") || !doc["output"].is_string())
            throw Error(ErrorCode::ParseError, language + ": line " + std::to_string(line) +
                                                   ": missing string field 'output'");
        rec.instruction = doc["instruction"].get<std::string>();
        rec.output = doc["output"].get<std::string>();
        if (doc.contains("input") && !doc["input"].is_null()) {
            if (!doc["input"].is_string())
                throw Error(ErrorCode::ParseError, language + ": line " + std::to_string(line) +
                                                       ": input must be a string");
            rec.input = doc["input"].get<std::string>();
        }
        records.push_back(std::move(rec));
    });
    return records;
}

}  // namespace

ParallelCorpus ParallelCorpus::from_records(std::vector<std::string> languages,
                                            std::vector<std::vector<SeedRecord>> records) {
    if (languages.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "a parallel corpus needs at least 2 languages");
    if (languages.size() != records.size())
        throw Error(ErrorCode::InvalidArgument, "language list and record lists differ in length");

    ParallelCorpus corpus;
    for (size_t l = 0; l < languages.size(); ++l) {
        if (!corpus.language_lookup_.emplace(languages[l], l).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate language code " + languages[l]);
    }

    const size_t expected = records[0].size();
    if (expected == 0) throw Error(ErrorCode::EmptyCorpus, "corpus has no records");
    for (size_t l = 1; l < records.size(); ++l) {
        if (records[l].size() != expected)
            throw Error(ErrorCode::MisalignedCorpus,
                        languages[l] + ": expected " + std::to_string(expected) + " records, found " +
                            std::to_string(records[l].size()));
    }

    // Per-language id uniqueness, then cross-language id agreement per index.
    for (size_t l = 0; l < records.size(); ++l) {
        std::unordered_set<std::string> seen;
        seen.reserve(expected);
        for (const auto& rec : records[l]) {
            if (!seen.insert(rec.id).second)
                throw Error(ErrorCode::DuplicateId, "id " + rec.id + " repeats in " + languages[l]);
        }
    }
    for (size_t i = 0; i < expected; ++i) {
        const std::string& id0 = records[0][i].id;
        for (size_t l = 1; l < records.size(); ++l) {
            if (records[l][i].id != id0)
                throw Error(ErrorCode::MisalignedCorpus,
                            languages[l] + ": index " + std::to_string(i) + ": expected id " + id0 +
                                ", found " + records[l][i].id);
        }
    }

    corpus.id_lookup_.reserve(expected);
    for (size_t i = 0; i < expected; ++i) corpus.id_lookup_.emplace(records[0][i].id, i);

    corpus.languages_ = std::move(languages);
    corpus.records_ = std::move(records);
    return corpus;
}

bool ParallelCorpus::has_language(std::string_view language) const {
    return language_lookup_.count(std::string(language)) > 0;
}

size_t ParallelCorpus::language_index(std::string_view language) const {
    auto it = language_lookup_.find(std::string(language));
    if (it == language_lookup_.end())
        throw Error(ErrorCode::UnknownLanguage, std::string(language));
    return it->second;
}

const SeedRecord& ParallelCorpus::get(std::string_view language, size_t index) const {
    size_t l = language_index(language);
    if (index >= size())
        throw Error(ErrorCode::IndexOutOfRange,
                    std::to_string(index) + " >= " + std::to_string(size()));
    return records_[l][index];
}

const std::vector<SeedRecord>& ParallelCorpus::records_for(std::string_view language) const {
    return records_[language_index(language)];
}

std::optional<size_t> ParallelCorpus::find_by_id(std::string_view id) const {
    auto it = id_lookup_.find(std::string(id));
    if (it == id_lookup_.end()) return std::nullopt;
    return it->second;
}

ParallelCorpus load_parallel_corpus(
    const std::vector<std::pair<std::string, std::string>>& paths, CorpusFormat format) {
    (void)format;  // kJsonl is the only wire format
    if (paths.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "a parallel corpus needs at least 2 languages");

    const int n = static_cast<int>(paths.size());
    std::vector<std::vector<SeedRecord>> per_language(n);
    std::vector<std::exception_ptr> failures(n);

    // Files parse independently; exceptions are collected and re-thrown in
    // language order so diagnostics are deterministic.
#pragma omp parallel for schedule(dynamic)
    for (int l = 0; l < n; ++l) {
        try {
            per_language[l] = parse_language_file(paths[l].first, paths[l].second);
        } catch (...) {
            failures[l] = std::current_exception();
        }
    }
    for (int l = 0; l < n; ++l)
        if (failures[l]) std::rethrow_exception(failures[l]);

    std::vector<std::string> languages;
    languages.reserve(paths.size());
    for (const auto& [language, _] : paths) languages.push_back(language);

    return ParallelCorpus::from_records(std::move(languages), std::move(per_language));
}

void write_language_jsonl(const ParallelCorpus& corpus, const std::string& language,
                          std::ostream& out) {
    for (const auto& rec : corpus.records_for(language)) {
        ojson doc;
        doc["id"] = rec.id;
        doc["instruction"] = rec.instruction;
        if (rec.input) doc["input"] = *rec.input;
        doc["output"] = rec.output;
        out << doc.dump() << '\n';
    }
}

std::string CorpusViolation::describe() const {
    switch (kind) {
        case CorpusViolationKind::EmptyField:
            return "EmptyField(" + std::to_string(index) + ", " + language + ", " + field + ")";
        case CorpusViolationKind::IdMismatch:
            return "IdMismatch(" + std::to_string(index) + ", " + language + ")";
        case CorpusViolationKind::SuspiciousDuplicate:
            return "SuspiciousDuplicate(" + std::to_string(index) + ", " + language + ", " +
                   other_language + ")";
    }
    return "UnknownViolation";
}

ValidationReport validate_alignment(const ParallelCorpus& corpus) {
    ValidationReport report;
    const auto& languages = corpus.languages();

    for (size_t i = 0; i < corpus.size(); ++i) {
        const std::string& id0 = corpus.get(languages[0], i).id;
        for (size_t a = 0; a < languages.size(); ++a) {
            const SeedRecord& rec = corpus.get(languages[a], i);
            if (rec.id != id0)
                report.violations.push_back(
                    {CorpusViolationKind::IdMismatch, i, languages[a], "", ""});
            if (trim(rec.instruction).empty())
                report.violations.push_back(
                    {CorpusViolationKind::EmptyField, i, languages[a], "", "instruction"});
            if (trim(rec.output).empty())
                report.violations.push_back(
                    {CorpusViolationKind::EmptyField, i, languages[a], "", "output"});
            // Identical instruction bytes across languages usually mean the
            // translation step was skipped; flagged but tolerated.
            for (size_t b = a + 1; b < languages.size(); ++b) {
                const SeedRecord& other = corpus.get(languages[b], i);
                if (!rec.instruction.empty() && rec.instruction == other.instruction)
                    report.violations.push_back({CorpusViolationKind::SuspiciousDuplicate, i,
                                                 languages[a], languages[b], "", true});
            }
        }
    }
    return report;
}

}  // namespace crossin
