#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

// Error carrying a stable machine-readable code alongside the message.
// Codes are part of the CLI contract (they surface in diagnostics).
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

} // namespace rlab
