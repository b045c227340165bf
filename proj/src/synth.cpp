// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#include "crossin/synth.hpp"

#include <algorithm>
#include <ctime>
#include <numeric>
#include <ostream>
#include <sstream>

#include "crossin/errors.hpp"

namespace crossin {

const char* to_string(Variant v) {
    switch (v) {
        case Variant::en2x: return "en2x";
        case Variant::x2en: return "x2en";
        case Variant::x2x: return "x2x";
    }
    return "?";
}

Variant variant_from_string(std::string_view name) {
    if (name == "en2x") return Variant::en2x;
    if (name == "x2en") return Variant::x2en;
    if (name == "x2x") return Variant::x2x;
    throw Error(ErrorCode::InvalidRecipe, "unknown variant " + std::string(name));
}

const char* to_string(RecordKind k) {
    switch (k) {
        case RecordKind::base: return "base";
        case RecordKind::crossin: return "crossin";
        case RecordKind::trans: return "trans";
    }
    return "?";
}

RecordKind record_kind_from_string(std::string_view name) {
    if (name == "base") return RecordKind::base;
    if (name == "crossin") return RecordKind::crossin;
    if (name == "trans") return RecordKind::trans;
    throw Error(ErrorCode::SchemaError, "unknown record kind " + std::string(name));
}

void SynthRecipe::validate() const {
    if (sample_count < 1)
        throw Error(ErrorCode::InvalidRecipe, "sample_count must be >= 1");
    if (languages.size() < 2)
        throw Error(ErrorCode::InvalidRecipe, "recipe needs at least 2 languages");
    for (size_t a = 0; a < languages.size(); ++a)
        for (size_t b = a + 1; b < languages.size(); ++b)
            if (languages[a] == languages[b])
                throw Error(ErrorCode::InvalidRecipe, "duplicate language " + languages[a]);
    bool has_eng = std::find(languages.begin(), languages.end(), "eng") != languages.end();
    if ((variant == Variant::en2x || variant == Variant::x2en) && !has_eng)
        throw Error(ErrorCode::InvalidRecipe,
                    std::string(to_string(variant)) + " requires \"eng\" in the language set");
    if (include_translation && !has_eng)
        throw Error(ErrorCode::TranslationWithoutEnglish,
                    "translation records need \"eng\" in the language set");
    if (translation_prompt.empty() && include_translation)
        throw Error(ErrorCode::InvalidRecipe, "translation prompt must not be empty");
}

namespace {

size_t english_position(const std::vector<std::string>& languages) {
    auto it = std::find(languages.begin(), languages.end(), "eng");
    return static_cast<size_t>(it - languages.begin());  // callers validated presence
}

// Language-pair draw, as indices into recipe.languages. Stream order is
// l_in then l_out; fixed roles consume nothing; with identity pairs
// disallowed the later-drawn role is redrawn until the pair crosses
// languages.
std::pair<size_t, size_t> draw_pair(const SynthRecipe& recipe, size_t eng_pos,
                                    SplitMix64& rng) {
    const size_t n = recipe.languages.size();
    switch (recipe.variant) {
        case Variant::en2x: {
            size_t out = static_cast<size_t>(rng.bounded(n));
            while (!recipe.allow_identity_pair && out == eng_pos)
                out = static_cast<size_t>(rng.bounded(n));
            return {eng_pos, out};
        }
        case Variant::x2en: {
            size_t in = static_cast<size_t>(rng.bounded(n));
            while (!recipe.allow_identity_pair && in == eng_pos)
                in = static_cast<size_t>(rng.bounded(n));
            return {in, eng_pos};
        }
        case Variant::x2x: {
            size_t in = static_cast<size_t>(rng.bounded(n));
            size_t out = static_cast<size_t>(rng.bounded(n));
            while (!recipe.allow_identity_pair && out == in)
                out = static_cast<size_t>(rng.bounded(n));
            return {in, out};
        }
    }
    return {0, 0};
}

size_t draw_trans_lang(const SynthRecipe& recipe, size_t eng_pos, SplitMix64& rng) {
    const size_t n = recipe.languages.size();
    size_t t = static_cast<size_t>(rng.bounded(n));
    while (!recipe.allow_identity_pair && t == eng_pos)
        t = static_cast<size_t>(rng.bounded(n));
    return t;
}

// Row-index source: uniform with replacement by default, or a swap-pop pool
// when the recipe asks for distinct rows.
class RowSampler {
public:
    RowSampler(const SynthRecipe& recipe, size_t corpus_size) : size_(corpus_size) {
        if (recipe.without_replacement) {
            if (recipe.sample_count > corpus_size)
                throw Error(ErrorCode::SampleCountExceedsCorpus,
                            std::to_string(recipe.sample_count) + " draws from " +
                                std::to_string(corpus_size) + " rows without replacement");
            pool_.resize(corpus_size);
            std::iota(pool_.begin(), pool_.end(), size_t{0});
            remaining_ = corpus_size;
        }
    }

    size_t draw(SplitMix64& rng) {
        if (pool_.empty()) return static_cast<size_t>(rng.bounded(size_));
        // swap-pop keeps one bounded draw per row, matching the documented
        // one-index-per-iteration stream
        size_t j = static_cast<size_t>(rng.bounded(remaining_));
        size_t row = pool_[j];
        pool_[j] = pool_[--remaining_];
        return row;
    }

private:
    std::vector<size_t> pool_;
    size_t remaining_ = 0;
    size_t size_ = 0;
};

struct DrawTuple {
    size_t row;
    uint32_t in_lang;
    uint32_t out_lang;
    uint32_t trans_lang;
};

void check_recipe_against_corpus(const ParallelCorpus& corpus, const SynthRecipe& recipe) {
    recipe.validate();
    if (corpus.size() == 0) throw Error(ErrorCode::EmptyCorpus, "seed corpus has no rows");
    for (const auto& language : recipe.languages)
        if (!corpus.has_language(language))
            throw Error(ErrorCode::RecipeLanguageNotInCorpus, language);
}

// Consumes the PRNG stream exactly as documented: per iteration the row
// index, the language pair, then the translation language when enabled.
std::vector<DrawTuple> make_plan(const ParallelCorpus& corpus, const SynthRecipe& recipe) {
    SplitMix64 rng(recipe.seed);
    RowSampler rows(recipe, corpus.size());
    const size_t eng_pos = english_position(recipe.languages);

    std::vector<DrawTuple> plan(recipe.sample_count);
    for (auto& d : plan) {
        d.row = rows.draw(rng);
        auto [in, out] = draw_pair(recipe, eng_pos, rng);
        d.in_lang = static_cast<uint32_t>(in);
        d.out_lang = static_cast<uint32_t>(out);
        d.trans_lang =
            recipe.include_translation
                ? static_cast<uint32_t>(draw_trans_lang(recipe, eng_pos, rng))
                : 0;
    }
    return plan;
}

TuningRecord make_crossin_record(const ParallelCorpus& corpus, const SynthRecipe& recipe,
                                 const DrawTuple& d) {
    const std::string& in_lang = recipe.languages[d.in_lang];
    const std::string& out_lang = recipe.languages[d.out_lang];
    const SeedRecord& in_rec = corpus.get(in_lang, d.row);
    const SeedRecord& out_rec = corpus.get(out_lang, d.row);

    TuningRecord rec;
    rec.instruction = in_rec.instruction;
    rec.input = in_rec.input;  // auxiliary input stays on the instruction side
    rec.output = out_rec.output;
    rec.meta = {in_rec.id, in_lang, out_lang, RecordKind::crossin};
    return rec;
}

TuningRecord make_trans_record(const ParallelCorpus& corpus, const SynthRecipe& recipe,
                               const DrawTuple& d) {
    const std::string& trans_lang = recipe.languages[d.trans_lang];
    const SeedRecord& lang_rec = corpus.get(trans_lang, d.row);
    const SeedRecord& eng_rec = corpus.get("eng", d.row);

    TuningRecord rec;
    if (recipe.reverse_translation) {
        rec.instruction = recipe.translation_prompt + "\n" + eng_rec.instruction;
        rec.output = lang_rec.instruction;
        rec.meta = {eng_rec.id, "eng", trans_lang, RecordKind::trans};
    } else {
        rec.instruction = recipe.translation_prompt + "\n" + lang_rec.instruction;
        rec.output = eng_rec.instruction;
        rec.meta = {lang_rec.id, trans_lang, "eng", RecordKind::trans};
    }
    return rec;
}

}  // namespace

std::pair<std::string, std::string> sample_languages(const SynthRecipe& recipe,
                                                     SplitMix64& rng) {
    recipe.validate();
    size_t eng_pos = english_position(recipe.languages);
    auto [in, out] = draw_pair(recipe, eng_pos, rng);
    return {recipe.languages[in], recipe.languages[out]};
}

SynthOutput synthesize(const ParallelCorpus& corpus, const SynthRecipe& recipe) {
    check_recipe_against_corpus(corpus, recipe);
    auto plan = make_plan(corpus, recipe);

    SynthOutput out;
    out.crossin.resize(plan.size());
    if (recipe.include_translation) out.trans.resize(plan.size());

    // The stream was consumed serially above; materializing records is
    // pure per slot, so the final order and bytes match the serial result.
    const int64_t n = static_cast<int64_t>(plan.size());
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        out.crossin[i] = make_crossin_record(corpus, recipe, plan[i]);
        if (recipe.include_translation)
            out.trans[i] = make_trans_record(corpus, recipe, plan[i]);
    }
    return out;
}

std::vector<TuningRecord> generate_crossin(const ParallelCorpus& corpus,
                                           const SynthRecipe& recipe) {
    return synthesize(corpus, recipe).crossin;
}

std::vector<TuningRecord> generate_translation(const ParallelCorpus& corpus,
                                               const SynthRecipe& recipe) {
    if (!recipe.include_translation)
        throw Error(ErrorCode::InvalidRecipe,
                    "generate_translation called with include_translation=false");
    return synthesize(corpus, recipe).trans;
}

namespace serial {

// Reference generator: one pass, records built inline while drawing. Any
// divergence from synthesize() is a bug in one of the two.
SynthOutput synthesize(const ParallelCorpus& corpus, const SynthRecipe& recipe) {
    check_recipe_against_corpus(corpus, recipe);

    SplitMix64 rng(recipe.seed);
    RowSampler rows(recipe, corpus.size());
    const size_t eng_pos = english_position(recipe.languages);

    SynthOutput out;
    out.crossin.reserve(recipe.sample_count);
    if (recipe.include_translation) out.trans.reserve(recipe.sample_count);

    for (uint64_t i = 0; i < recipe.sample_count; ++i) {
        DrawTuple d{};
        d.row = rows.draw(rng);
        auto [in, outl] = draw_pair(recipe, eng_pos, rng);
        d.in_lang = static_cast<uint32_t>(in);
        d.out_lang = static_cast<uint32_t>(outl);
        if (recipe.include_translation)
            d.trans_lang = static_cast<uint32_t>(draw_trans_lang(recipe, eng_pos, rng));

        out.crossin.push_back(make_crossin_record(corpus, recipe, d));
        if (recipe.include_translation)
            out.trans.push_back(make_trans_record(corpus, recipe, d));
    }
    return out;
}

}  // namespace serial

TrainingSet compose_training_set(std::vector<TuningRecord> base,
                                 std::vector<TuningRecord> crossin,
                                 std::vector<TuningRecord> trans, uint64_t shuffle_seed) {
    for (const auto& rec : base)
        if (rec.meta.kind != RecordKind::base)
            throw Error(ErrorCode::InvalidArgument, "base list contains a non-base record");

    TrainingSet set;
    set.counts = {base.size(), crossin.size(), trans.size()};
    set.shuffle_seed = shuffle_seed;
    set.records = std::move(base);
    set.records.reserve(set.counts.total());
    std::move(crossin.begin(), crossin.end(), std::back_inserter(set.records));
    std::move(trans.begin(), trans.end(), std::back_inserter(set.records));

    SplitMix64 rng(shuffle_seed);
    fisher_yates(set.records, rng);
    return set;
}

std::vector<TuningRecord> load_base_records(const std::string& path) {
    std::vector<TuningRecord> records;
    for_each_jsonl(std::filesystem::path(path), "base", [&](size_t line, const json& doc) {
        TuningRecord rec;
        if (!doc.contains("instruction") || !doc["instruction"].is_string())
            throw Error(ErrorCode::ParseError,
                        "base: line " + std::to_string(line) + ": missing string 'instruction'");
        if (!doc.contains("output") || !doc["output"].is_string())
            throw Error(ErrorCode::ParseError,
                        "base: line " + std::to_string(line) + ": missing string 'output'");
        rec.instruction = doc["instruction"].get<std::string>();
        rec.output = doc["output"].get<std::string>();
        if (doc.contains("input") && doc["input"].is_string())
            rec.input = doc["input"].get<std::string>();
        std::string id = doc.contains("id") && doc["id"].is_string()
                             ? doc["id"].get<std::string>()
                             : std::to_string(line);
        // Base corpora are the English-side complex-task data.
        rec.meta = {id, "eng", "eng", RecordKind::base};
        records.push_back(std::move(rec));
    });
    return records;
}

namespace {

ojson record_to_json(const TuningRecord& rec) {
    ojson doc;
    doc["instruction"] = rec.instruction;
    if (rec.input) doc["input"] = *rec.input;
    doc["output"] = rec.output;
    ojson meta;
    meta["source_id"] = rec.meta.source_id;
    meta["instruction_lang"] = rec.meta.instruction_lang;
    meta["output_lang"] = rec.meta.output_lang;
    meta["kind"] = to_string(rec.meta.kind);
    doc["meta"] = std::move(meta);
    return doc;
}

std::string iso8601_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

void write_tuning_records(const std::vector<TuningRecord>& records, std::ostream& out) {
    for (const auto& rec : records) out << record_to_json(rec).dump() << '\n';
}

std::string serialize_tuning_records(const std::vector<TuningRecord>& records) {
    std::ostringstream out;
    write_tuning_records(records, out);
    return out.str();
}

std::vector<TuningRecord> parse_tuning_records(std::istream& in) {
    std::vector<TuningRecord> records;
    for_each_jsonl(in, "training set", [&](size_t line, const json& doc) {
        TuningRecord rec;
        try {
            rec.instruction = doc.at("instruction").get<std::string>();
            rec.output = doc.at("output").get<std::string>();
            if (doc.contains("input")) rec.input = doc["input"].get<std::string>();
            const json& meta = doc.at("meta");
            rec.meta.source_id = meta.at("source_id").get<std::string>();
            rec.meta.instruction_lang = meta.at("instruction_lang").get<std::string>();
            rec.meta.output_lang = meta.at("output_lang").get<std::string>();
            rec.meta.kind = record_kind_from_string(meta.at("kind").get<std::string>());
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError,
                        "training set: line " + std::to_string(line) + ": " + e.what());
        }
        records.push_back(std::move(rec));
    });
    return records;
}

ojson emit_manifest(const SynthRecipe& recipe, const KindCounts& counts,
                    uint64_t shuffle_seed) {
    ojson manifest;
    manifest["toolkit_version"] = kToolkitVersion;
    manifest["created_at"] = iso8601_now();  // only non-deterministic field

    ojson r;
    r["variant"] = to_string(recipe.variant);
    r["sample_count"] = recipe.sample_count;
    r["languages"] = recipe.languages;
    r["include_translation"] = recipe.include_translation;
    r["translation_prompt"] = recipe.translation_prompt;
    r["seed"] = recipe.seed;
    r["allow_identity_pair"] = recipe.allow_identity_pair;
    r["without_replacement"] = recipe.without_replacement;
    r["reverse_translation"] = recipe.reverse_translation;
    manifest["recipe"] = std::move(r);

    ojson c;
    c["base"] = counts.base;
    c["crossin"] = counts.crossin;
    c["trans"] = counts.trans;
    c["total"] = counts.total();
    manifest["counts"] = std::move(c);
    manifest["shuffle_seed"] = shuffle_seed;

    // Advisory settings for downstream fine-tuning jobs; nothing in this
    // toolkit consumes them.
    ojson advisory;
    advisory["learning_rate"] = 1e-4;
    advisory["batch_size"] = 16;
    advisory["epochs"] = 1;
    advisory["lora_rank"] = 64;
    advisory["lora_alpha"] = 128;
    advisory["lora_dropout"] = 0.05;
    advisory["warmup_ratio"] = 0.03;
    advisory["weight_decay"] = 0;
    advisory["optimizer"] = "Adam";
    advisory["bf16"] = true;
    manifest["training_advisory"] = std::move(advisory);
    return manifest;
}

}  // namespace crossin
