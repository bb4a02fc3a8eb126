#pragma once

#include <stdexcept>
#include <string>

namespace qmat {

/// Every hard precondition violation in the library throws this.
/// `code` is a stable machine-readable tag; `what()` carries the details.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
    if (!cond) fail(code, message);
}

/// Outcome of a mathematical identity check. Not an error channel:
/// a failed check is a result, reported to the caller verbatim.
struct CheckResult {
    bool ok = true;
    std::string detail;

    static CheckResult pass() { return {true, {}}; }
    static CheckResult failure(std::string d) { return {false, std::move(d)}; }
    explicit operator bool() const { return ok; }
};

} // namespace qmat
