#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patlas {

// Domain errors are caused by inputs outside an operation's contract
// (non-generic matrices, points outside a convergence region, ...).
// Internal errors indicate a bug or a broken installation.
enum class ErrorKind { domain, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

    Error& with_detail(const std::string& key, const std::string& value) {
        details_.emplace_back(key, value);
        return *this;
    }
    const std::vector<std::pair<std::string, std::string>>& details() const noexcept {
        return details_;
    }

private:
    ErrorKind kind_;
    std::string code_;
    std::vector<std::pair<std::string, std::string>> details_;
};

inline Error domain_error(const std::string& code, const std::string& message) {
    return Error(ErrorKind::domain, code, message);
}
inline Error internal_error(const std::string& code, const std::string& message) {
    return Error(ErrorKind::internal, code, message);
}

}  // namespace patlas
