// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "crossin/jsonl.hpp"
#include "crossin/metrics.hpp"

namespace crossin {

// AnswerMatrix JSON schema: {languages, item_ids, answers, key} with
// abstains serialized as null.
ojson matrix_to_json(const AnswerMatrix& matrix);
AnswerMatrix matrix_from_json(const json& doc);
AnswerMatrix load_answer_matrix(const std::filesystem::path& path);
void save_answer_matrix(const AnswerMatrix& matrix, const std::filesystem::path& path);

ojson report_to_json(const EvalReport& report);
EvalReport report_from_json(const json& doc);

// One metric per row: accuracy per language, overall, consistency and AC3
// per tolerance.
std::string report_to_csv(const EvalReport& report);

// Markdown table with the Acc / Consis / AC3 triple at the report's
// tolerance, percentages with one decimal.
std::string report_to_markdown(const EvalReport& report);
std::string reports_to_markdown(const std::vector<EvalReport>& reports);
std::string reports_to_csv(const std::vector<EvalReport>& reports);

// Square matrix with language header row/column, for heatmap plotting.
std::string pairwise_to_csv(const EvalReport& report);

}  // namespace crossin
