#pragma once

#include <stdexcept>
#include <string>

namespace ergocap {

// Bad user-supplied data: malformed files, mismatched lengths, invalid events.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Conditioning on a zero-mass event.
class ConditioningError : public InputError {
public:
    explicit ConditioningError(const std::string& what) : InputError(what) {}
};

// Instance exceeds the configured dimension cap.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A checked statement failed while its hypotheses held. Raising this is a
// bug report against the mathematics, not against the caller.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ergocap
