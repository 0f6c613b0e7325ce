#ifndef TORIC_ERROR_HPP
#define TORIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

// Thrown by every module; `kind` is a stable machine-readable tag that the
// CLI serializes as error.kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message, std::string path = {})
        : std::runtime_error(message), kind_(std::move(kind)), path_(std::move(path)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::string kind_;
    std::string path_;
};

} // namespace toric

#endif
