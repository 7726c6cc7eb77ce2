#pragma once

#include <stdexcept>
#include <string>

namespace dbcohom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad construction parameters (resolutions, chart counts, degenerate meshes).
struct InvalidParameterError : Error {
  using Error::Error;
};

// Operands do not live on compatible complexes/covers/degrees.
struct ShapeMismatchError : Error {
  using Error::Error;
};

// Mesh quality failure; carries the offending simplices in the message.
struct MeshQualityError : Error {
  using Error::Error;
};

struct SolverError : Error {
  using Error::Error;
};

// The equation of motion on the boundary circle cannot be satisfied: the
// required winding p*n/k is not an integer, so no gerbe class works.
struct QuantizationObstructionError : Error {
  QuantizationObstructionError(long long k, long long p, long long n,
                               std::string msg)
      : Error(std::move(msg)), k(k), p(p), n(n) {}
  long long k, p, n;
};

// Scenario configuration failure; `path` is the offending JSON field path.
struct ConfigError : Error {
  ConfigError(std::string path_, const std::string& msg)
      : Error("config error at " + path_ + ": " + msg), path(std::move(path_)) {}
  std::string path;
};

}  // namespace dbcohom
