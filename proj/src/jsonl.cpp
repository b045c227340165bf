// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#include "crossin/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "crossin/common.hpp"
#include "crossin/errors.hpp"

namespace crossin {

void for_each_jsonl(std::istream& in, const std::string& context,
                    const std::function<void(size_t, const json&)>& fn) {
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            ++line_no;
            continue;
        }
        json doc = json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            throw Error(ErrorCode::ParseError,
                        context + ": line " + std::to_string(line_no) + " is not a JSON object");
        }
        fn(line_no, doc);
        ++line_no;
    }
}

void for_each_jsonl(const std::filesystem::path& path, const std::string& context,
                    const std::function<void(size_t, const json&)>& fn) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MissingFile, path.string());
    for_each_jsonl(in, context.empty() ? path.string() : context, fn);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path(), ec);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        out << content;
        if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::IoError, "rename to " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MissingFile, path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace crossin
