#ifndef CKGEOM_ERRORS_HPP
#define CKGEOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ckgeom {

// Base class for all library errors. Parse errors are kept separate so the
// CLI can map them to a different exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class NotInvertible : public DomainError {
 public:
  explicit NotInvertible(const std::string& what) : DomainError(what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

class ImproperVector : public Error {
 public:
  explicit ImproperVector(const std::string& what) : Error(what) {}
};

class DegenerateRotation : public Error {
 public:
  explicit DegenerateRotation(const std::string& what) : Error(what) {}
};

class NotOrthogonal : public Error {
 public:
  explicit NotOrthogonal(const std::string& what) : Error(what) {}
};

class NotABasis : public Error {
 public:
  explicit NotABasis(const std::string& what) : Error(what) {}
};

class DegenerateLineal : public Error {
 public:
  explicit DegenerateLineal(const std::string& what) : Error(what) {}
};

class MeasureUndefined : public Error {
 public:
  explicit MeasureUndefined(const std::string& what) : Error(what) {}
};

class DegenerateAngle : public Error {
 public:
  explicit DegenerateAngle(const std::string& what) : Error(what) {}
};

class SolveError : public Error {
 public:
  explicit SolveError(const std::string& what) : Error(what) {}
};

class DegenerateFigure : public Error {
 public:
  explicit DegenerateFigure(const std::string& what) : Error(what) {}
};

class UnsupportedSignature : public Error {
 public:
  explicit UnsupportedSignature(const std::string& what) : Error(what) {}
};

// Malformed textual input (specs, points, matrices, CLI values).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ckgeom

#endif  // CKGEOM_ERRORS_HPP
