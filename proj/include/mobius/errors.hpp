#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid grid, bundle, or run configuration.
class config_error : public error {
public:
  using error::error;
};

/// An operation was called on input violating its contract.
class precondition_error : public error {
public:
  using error::error;
};

/// A sampled phase step was too large to track the winding; refine the grid.
class resolution_error : public error {
public:
  using error::error;
};

/// The accumulated phase of a loop failed to close on an integer multiple of 2*pi.
class normalization_error : public error {
public:
  using error::error;
};

/// The exponential of a lift did not land in unit + ideal; the lift is unusable.
class boundary_map_error : public error {
public:
  using error::error;
};

/// A computed value missed a required numerical tolerance.
class tolerance_error : public error {
public:
  using error::error;
};

/// Quadrature of a trace integrand did not decay below the tail tolerance.
class integrability_error : public error {
public:
  using error::error;
};

/// Neighbourhood probes on the two sides of a point disagree.
class ambiguity_error : public error {
public:
  using error::error;
};

/// Declared data of a bundle contradict the probed behaviour of its generator.
class inconsistency_error : public error {
public:
  using error::error;
};

/// A homotopy path is discontinuous at the chosen discretization.
class path_error : public error {
public:
  using error::error;
};

/// Six-term input leaves the middle groups undetermined.
class underdetermined_error : public error {
public:
  using error::error;
};

/// Bad subcommand or claim id.
class usage_error : public error {
public:
  using error::error;
};

} // namespace mobius
