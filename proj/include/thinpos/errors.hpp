#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thinpos {

// Errors caused by the caller or by bad input data. The CLI maps these to
// exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedWord : InputError {
    using InputError::InputError;
};

struct NotLinkWord : InputError {
    using InputError::InputError;
};

struct NotBridgePosition : InputError {
    using InputError::InputError;
};

struct InconsistentShape : InputError {
    using InputError::InputError;
};

struct MalformedForest : InputError {
    using InputError::InputError;
};

struct MissingTableEntry : InputError {
    using InputError::InputError;
};

struct EmptyCandidateSet : InputError {
    using InputError::InputError;
};

struct CapExceeded : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    using InputError::InputError;
};

struct ValidationError : InputError {
    explicit ValidationError(std::vector<std::string> violations_)
        : InputError(join(violations_)), violations(std::move(violations_)) {}

    std::vector<std::string> violations;

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += '\n';
            out += s;
        }
        return out;
    }
};

// Inconsistencies between two internal computations that should agree.
// Reaching one of these means a defect, not bad input. Exit code 2.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConservationFailure : InternalError {
    using InternalError::InternalError;
};

struct InternalInconsistency : InternalError {
    using InternalError::InternalError;
};

}  // namespace thinpos
