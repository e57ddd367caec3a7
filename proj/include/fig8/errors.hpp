#pragma once

#include <stdexcept>
#include <string>

namespace fig8 {

// Every library failure derives from Error so the CLI can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define FIG8_ERROR(Name)                                                     \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

FIG8_ERROR(CutError);
FIG8_ERROR(PrecisionError);
FIG8_ERROR(DomainError);
FIG8_ERROR(BranchError);
FIG8_ERROR(NoRootError);
FIG8_ERROR(WindowError);
FIG8_ERROR(HypothesisError);
FIG8_ERROR(QuadratureError);
FIG8_ERROR(ConfigError);

#undef FIG8_ERROR

}  // namespace fig8
