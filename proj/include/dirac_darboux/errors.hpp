#pragma once

#include <stdexcept>
#include <string>

namespace dd {

// Base of every library error. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define DD_ERROR(Name)                                                                  \
    struct Name : Error {                                                               \
        explicit Name(const std::string& what) : Error(std::string(#Name ": ") + what) {} \
    }

DD_ERROR(DomainError);
DD_ERROR(SingularityError);
DD_ERROR(PoleError);
DD_ERROR(NoConvergence);
DD_ERROR(RegionError);
DD_ERROR(ZeroWavenumber);
DD_ERROR(GridError);
DD_ERROR(SingularFrame);
DD_ERROR(SignError);
DD_ERROR(NoRoot);
DD_ERROR(StepFailure);
DD_ERROR(QuadratureError);
DD_ERROR(ConfigError);
DD_ERROR(IoError);

#undef DD_ERROR

}  // namespace dd
