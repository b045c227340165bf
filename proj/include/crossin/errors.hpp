// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace crossin {

enum class ErrorCode {
    // corpus
    MissingLanguageFile,
    ParseError,
    MisalignedCorpus,
    DuplicateId,
    EmptyCorpus,
    UnknownLanguage,
    IndexOutOfRange,
    // synth
    InvalidRecipe,
    RecipeLanguageNotInCorpus,
    TranslationWithoutEnglish,
    SampleCountExceedsCorpus,
    // benchkit
    ChoiceCountError,
    AnswerIndexMismatch,
    MissingLanguage,
    DuplicateChoices,
    DistractorRejected,
    AlignmentRejected,
    RevalidationFailed,
    // metrics
    EmptySubset,
    InvalidTolerance,
    // runner
    ClientError,       // transient transport / 429 / 5xx
    FatalClientError,  // auth, 404-class; never retried
    MissingTranscript,
    MissingPlaceholder,
    // generic
    MissingFile,
    SchemaError,
    InvalidArgument,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// CLI contract: 0 success, 1 operational error, 2 usage/validation error.
int exit_code_for(ErrorCode code);

}  // namespace crossin
