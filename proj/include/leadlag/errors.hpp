#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace leadlag {

// Domain error with a short machine-readable code ("bad-series",
// "time-order", ...). The CLI prints these as `error[code]: message`.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

}  // namespace leadlag
