#ifndef FRACDIM_ERRORS_HPP
#define FRACDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracdim {

// Base of every error this library throws. The concrete type selects the
// CLI exit code, so keep the taxonomy stable.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or violated preconditions (k_max vs N, alpha range, ...).
class ConfigError : public Error {
public:
  using Error::Error;
};

// Malformed input files.
class ParseError : public Error {
public:
  using Error::Error;
};

// Filesystem failures (open/read/write).
class IoError : public Error {
public:
  using Error::Error;
};

// Data that cannot support a dimension estimate: a constant window, a zero
// curve length, a profile too small to regress on. `scale()` names the
// offending k when one exists (0 otherwise).
class DegenerateDataError : public Error {
public:
  explicit DegenerateDataError(const std::string& what, int scale = 0)
      : Error(what), scale_(scale) {}
  int scale() const noexcept { return scale_; }

private:
  int scale_;
};

}  // namespace fracdim

#endif
