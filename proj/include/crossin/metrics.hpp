// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "crossin/common.hpp"

namespace crossin {

// N x L table of extracted option indices plus the gold key. Entries are
// option indices 0..3 or kAbstain. kAbstain never equals anything,
// including another kAbstain, and scores incorrect.
struct AnswerMatrix {
    std::vector<std::string> languages;  // length L, ordered
    std::vector<std::string> item_ids;   // length N
    std::vector<int8_t> answers;         // row-major, N*L
    std::vector<int8_t> key;             // length N, gold option per item

    size_t item_count() const { return item_ids.size(); }
    size_t language_count() const { return languages.size(); }

    int8_t answer(size_t item, size_t lang) const {
        return answers[item * languages.size() + lang];
    }
    int8_t& answer(size_t item, size_t lang) {
        return answers[item * languages.size() + lang];
    }

    size_t language_index(std::string_view language) const;

    // N >= 1, L >= 2, answers in {kAbstain, 0..3}, key in 0..3.
    void validate() const;
};

// Fraction of items answered identically (and not abstained) across the
// given languages. Duplicated codes collapse; throws UnknownLanguage /
// EmptySubset.
double subset_agreement(const AnswerMatrix& matrix,
                        const std::vector<std::string>& subset);

// Mean subset agreement over all size-`tolerance` language subsets,
// denominator C(L, tolerance). Computed by per-item answer counting:
// a size-s subset fully agrees on an item iff its s languages share one
// non-abstain option, so the agreeing-subset count per item is
// sum_v C(count_v, s). Integer arithmetic until the final division.
double consistency(const AnswerMatrix& matrix, int tolerance);

struct AccuracyResult {
    std::map<std::string, double> per_language;
    double overall = 0.0;  // unweighted mean over languages
};

AccuracyResult accuracy(const AnswerMatrix& matrix);

// Harmonic mean of accuracy and consistency; 0 when both are 0.
double ac3(double accuracy, double consistency);

// Entry (a,b) is pairwise agreement; diagonal entries are singleton
// agreement (1 unless the language abstained somewhere).
std::vector<std::vector<double>> pairwise_matrix(const AnswerMatrix& matrix);

struct EvalReport {
    std::string label;
    std::vector<std::string> languages;
    size_t item_count = 0;
    int tolerance = 3;  // the s the headline numbers are quoted at
    std::map<std::string, double> per_language_accuracy;
    double overall_accuracy = 0.0;
    std::map<int, double> consistency;  // s -> value, for every s in 1..L
    std::map<int, double> ac3;
    std::vector<std::vector<double>> pairwise;
};

// Computes the full report; `tolerance` selects the headline s (default 3).
EvalReport score_matrix(const AnswerMatrix& matrix, int tolerance = 3,
                        const std::string& label = "");

uint64_t binomial(uint64_t n, uint64_t k);

namespace serial {
// Definitional implementations: consistency enumerates every size-s subset
// and averages per-subset agreement; no OpenMP, no counting shortcut. Kept
// as the comparison baseline for the parallel kernels.
double subset_agreement(const AnswerMatrix& matrix,
                        const std::vector<std::string>& subset);
double consistency(const AnswerMatrix& matrix, int tolerance);
std::vector<std::vector<double>> pairwise_matrix(const AnswerMatrix& matrix);
}  // namespace serial

}  // namespace crossin
