#pragma once

#include <stdexcept>
#include <string>

namespace floatberg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidBody : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct EmptySection : Error {
  using Error::Error;
};
struct DeltaOutOfRange : Error {
  using Error::Error;
};
struct DegenerateBody : Error {
  using Error::Error;
};
struct EmptyFloatingBody : Error {
  using Error::Error;
};
struct PointOutsideBody : Error {
  using Error::Error;
};
struct MBelowMinimum : Error {
  using Error::Error;
};
struct IndeterminateAtTolerance : Error {
  using Error::Error;
};

// Panel cap hit with error estimate still above tolerance; carries the value
// reached and the achieved relative error so callers can flag-and-continue.
struct QuadratureNotConverged : Error {
  QuadratureNotConverged(const std::string& what, double value, double achieved)
      : Error(what), value_estimate(value), achieved_rel_error(achieved) {}
  double value_estimate;
  double achieved_rel_error;
};

}  // namespace floatberg
