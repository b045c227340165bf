// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#include "crossin/errors.hpp"

namespace crossin {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingLanguageFile: return "MissingLanguageFile";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MisalignedCorpus: return "MisalignedCorpus";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::UnknownLanguage: return "UnknownLanguage";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidRecipe: return "InvalidRecipe";
        case ErrorCode::RecipeLanguageNotInCorpus: return "RecipeLanguageNotInCorpus";
        case ErrorCode::TranslationWithoutEnglish: return "TranslationWithoutEnglish";
        case ErrorCode::SampleCountExceedsCorpus: return "SampleCountExceedsCorpus";
        case ErrorCode::ChoiceCountError: return "ChoiceCountError";
        case ErrorCode::AnswerIndexMismatch: return "AnswerIndexMismatch";
        case ErrorCode::MissingLanguage: return "MissingLanguage";
        case ErrorCode::DuplicateChoices: return "DuplicateChoices";
        case ErrorCode::DistractorRejected: return "DistractorRejected";
        case ErrorCode::AlignmentRejected: return "AlignmentRejected";
        case ErrorCode::RevalidationFailed: return "RevalidationFailed";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::InvalidTolerance: return "InvalidTolerance";
        case ErrorCode::ClientError: return "ClientError";
        case ErrorCode::FatalClientError: return "FatalClientError";
        case ErrorCode::MissingTranscript: return "MissingTranscript";
        case ErrorCode::MissingPlaceholder: return "MissingPlaceholder";
        case ErrorCode::MissingFile: return "MissingFile";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        // Bad inputs, bad flags, schema violations: usage/validation class.
        case ErrorCode::MissingLanguageFile:
        case ErrorCode::ParseError:
        case ErrorCode::MisalignedCorpus:
        case ErrorCode::DuplicateId:
        case ErrorCode::EmptyCorpus:
        case ErrorCode::UnknownLanguage:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::InvalidRecipe:
        case ErrorCode::RecipeLanguageNotInCorpus:
        case ErrorCode::TranslationWithoutEnglish:
        case ErrorCode::SampleCountExceedsCorpus:
        case ErrorCode::ChoiceCountError:
        case ErrorCode::AnswerIndexMismatch:
        case ErrorCode::MissingLanguage:
        case ErrorCode::DuplicateChoices:
        case ErrorCode::RevalidationFailed:
        case ErrorCode::EmptySubset:
        case ErrorCode::InvalidTolerance:
        case ErrorCode::MissingPlaceholder:
        case ErrorCode::MissingFile:
        case ErrorCode::SchemaError:
        case ErrorCode::InvalidArgument:
            return 2;
        // Runtime failures mid-operation.
        case ErrorCode::DistractorRejected:
        case ErrorCode::AlignmentRejected:
        case ErrorCode::ClientError:
        case ErrorCode::FatalClientError:
        case ErrorCode::MissingTranscript:
        case ErrorCode::IoError:
            return 1;
    }
    return 1;
}

}  // namespace crossin
