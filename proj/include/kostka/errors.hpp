#ifndef KOSTKA_ERRORS_HPP
#define KOSTKA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kostka {

// Error hierarchy mirrored by CLI exit codes: invariant_error -> 2,
// budget_error -> 3, input_error -> 4.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A mathematical invariant failed; signals a bug, not bad input.
class invariant_error : public error {
public:
    invariant_error(const std::string& code, const std::string& message)
        : error(code, message) {}
};

class budget_error : public error {
public:
    budget_error(const std::string& code, const std::string& message)
        : error(code, message) {}
};

class input_error : public error {
public:
    input_error(const std::string& code, const std::string& message)
        : error(code, message) {}
};

} // namespace kostka

#endif
