#ifndef HUMBERT_ERROR_HPP
#define HUMBERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace humbert {

// Library-wide error carrying a machine-readable kind tag. The CLI maps
// kind() straight into the JSON "kind" field, so the tags are part of the
// external interface and must stay stable.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw error(kind, msg);
}

inline void check(bool cond, const std::string& kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace humbert

#endif
