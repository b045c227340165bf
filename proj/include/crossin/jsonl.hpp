// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

#include "json.hpp"

namespace crossin {

using json = nlohmann::json;
// All emitted documents use ordered_json: insertion order is preserved, so
// serialization is deterministic and files stay human-readable.
using ojson = nlohmann::ordered_json;

// Calls fn(line_number, object) for every non-blank line. line_number is
// 0-based. Throws Error{ParseError} with the line number and context tag on
// malformed JSON, Error{MissingFile} if the path does not exist.
void for_each_jsonl(const std::filesystem::path& path, const std::string& context,
                    const std::function<void(size_t, const json&)>& fn);

void for_each_jsonl(std::istream& in, const std::string& context,
                    const std::function<void(size_t, const json&)>& fn);

// Writes content to path atomically (temp file + rename), creating parent
// directories as needed.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace crossin
