#ifndef QUATDIFF_ERRORS_HPP
#define QUATDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitInput : Error { using Error::Error; };
struct NonSPDInertia : Error { using Error::Error; };
struct AntipodalSingularity : Error { using Error::Error; };
struct SingularE0 : Error { using Error::Error; };
struct NonCompliantState : Error { using Error::Error; };
struct DegenerateFrame : Error { using Error::Error; };
struct DegenerateErrorVector : Error { using Error::Error; };
struct NonFiniteDerivative : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace qd

#endif
