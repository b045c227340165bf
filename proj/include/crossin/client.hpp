// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

namespace crossin {

struct GenParams {
    std::string model_name;
    double temperature = 0.0;  // deterministic decoding by default
    int max_tokens = 64;
};

// Completion transport. Implementations must be callable from multiple
// threads and hold no toolkit state; every observable result flows through
// the transcript cache.
class ModelClient {
public:
    virtual ~ModelClient() = default;

    // Returns the model's text response. Throws Error{ClientError} for
    // transient failures (transport, 429, 5xx) and Error{FatalClientError}
    // for auth/404-class failures.
    virtual std::string complete(const std::string& prompt, const GenParams& params) = 0;
};

// Chat-completion HTTP client: POST {endpoint}/chat/completions with a JSON
// body {model, messages, temperature, max_tokens} and bearer-token auth.
// `endpoint` is a base URL such as https://api.example.com/v1.
class HttpChatClient : public ModelClient {
public:
    HttpChatClient(std::string endpoint, std::string api_token);

    std::string complete(const std::string& prompt, const GenParams& params) override;

private:
    std::string endpoint_;
    std::string api_token_;
};

// Scripted client for tests and recorded-fixture runs: answers from a
// user-supplied function.
class CallbackClient : public ModelClient {
public:
    explicit CallbackClient(std::function<std::string(const std::string&)> fn)
        : fn_(std::move(fn)) {}

    std::string complete(const std::string& prompt, const GenParams&) override {
        std::lock_guard<std::mutex> lock(mutex_);
        return fn_(prompt);
    }

private:
    std::mutex mutex_;
    std::function<std::string(const std::string&)> fn_;
};

// FIFO of canned responses; throws when the script runs dry.
class ScriptedClient : public ModelClient {
public:
    explicit ScriptedClient(std::vector<std::string> responses)
        : responses_(std::move(responses)) {}

    std::string complete(const std::string& prompt, const GenParams& params) override;

    const std::vector<std::string>& prompts_seen() const { return prompts_; }

private:
    std::mutex mutex_;
    std::vector<std::string> responses_;
    std::vector<std::string> prompts_;
    size_t next_ = 0;
};

}  // namespace crossin
