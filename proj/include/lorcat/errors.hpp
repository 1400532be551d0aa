#pragma once

#include <stdexcept>
#include <string>

namespace lorcat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public Error { using Error::Error; };
class ZeroAxisError : public Error { using Error::Error; };
class NonFiniteError : public Error { using Error::Error; };

/// A relativistic velocity with ‖v‖ ≥ c, or a non-positive light speed.
class SuperluminalError : public Error { using Error::Error; };
class NotLorentzError : public Error { using Error::Error; };
class NonOrthochronousError : public Error { using Error::Error; };

class UnknownFrameError : public Error { using Error::Error; };
class NonComposableError : public Error { using Error::Error; };
class InvariantError : public Error { using Error::Error; };

class DanglingEndpointError : public Error { using Error::Error; };
class IndexExplosionError : public Error { using Error::Error; };

/// M: Gal → Lor cannot embed a classical velocity at or above c.
class SuperluminalEmbeddingError : public SuperluminalError { using SuperluminalError::SuperluminalError; };

}  // namespace lorcat
