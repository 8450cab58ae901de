#ifndef SEMIQ_ERRORS_HPP
#define SEMIQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiq {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// quat_algebra
struct NonSpatialInput : Error { using Error::Error; };
struct NonUnitInput : Error { using Error::Error; };

// curve_core
struct InsufficientSamples : Error { using Error::Error; };
struct NullTangent : Error {
    NullTangent(const std::string& msg, double at) : Error(msg), param(at) {}
    double param;   // offending parameter value
};
struct OutOfRange : Error { using Error::Error; };
struct InvalidCurve : Error { using Error::Error; };

// frenet3 / frenet4
struct DegenerateFrame : Error {
    DegenerateFrame(const std::string& msg, double at) : Error(msg), param(at) {}
    double param;
};
struct CausalFlip : Error {
    CausalFlip(const std::string& msg, double at) : Error(msg), param(at) {}
    double param;
};
struct NullRemainder : Error {
    NullRemainder(const std::string& msg, double at) : Error(msg), param(at) {}
    double param;
};
struct NotSpatial : Error { using Error::Error; };
struct NotUnitSpeed : Error { using Error::Error; };

// rectifying
struct VanishingCurvature : Error { using Error::Error; };

// constructors
struct InvalidFamilyParameter : Error { using Error::Error; };
struct PoleInRange : Error { using Error::Error; };
struct CausalMismatch : Error { using Error::Error; };
struct SingularOnRange : Error { using Error::Error; };
struct InvalidInitialFrame : Error { using Error::Error; };

} // namespace semiq

#endif
