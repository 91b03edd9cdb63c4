#pragma once

#include <stdexcept>
#include <string>

namespace faircover {

/// Malformed input: bad ids, inconsistent sizes, unparseable files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive-search oracle was asked to run past its hard size cap.
class CapExceeded : public InputError {
public:
    explicit CapExceeded(const std::string& what) : InputError(what) {}
};

/// A caller violated a documented precondition, or an internal invariant
/// failed (e.g. a solver produced a structurally impossible result).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace faircover
