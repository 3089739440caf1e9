#pragma once

#include <stdexcept>
#include <string>

namespace polydn {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// geometry
struct TooFewVertices : Error { using Error::Error; };
struct NonConvex : Error { using Error::Error; };
struct DegenerateEdge : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// transforms / quadrature
struct QuadratureUnderResolved : Error { using Error::Error; };
struct MissingData : Error { using Error::Error; };
struct NonRealData : Error { using Error::Error; };

// operators / solvers
struct OverflowGuard : Error { using Error::Error; };
struct InvalidResolution : Error { using Error::Error; };
struct AssemblyOverflow : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

// reconstruction
struct TooCloseToBoundary : Error { using Error::Error; };

// cli / config
struct ConfigError : Error { using Error::Error; };

}  // namespace polydn
