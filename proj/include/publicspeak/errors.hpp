// errors.hpp: exception hierarchy shared by all pipeline stages.
#ifndef PUBLICSPEAK_ERRORS_HPP
#define PUBLICSPEAK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace publicspeak {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input document: malformed JSON, missing fields, wrong types.
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input that violates a data invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Bad configuration: invalid regex, unknown rule id, unusable settings.
struct ConfigError : Error {
  using Error::Error;
};

// Template instantiation failure (unbound head variable and friends).
struct GroundingError : Error {
  using Error::Error;
};

// Assignment handed to the objective is outside the feasible set.
struct FeasibilityError : Error {
  using Error::Error;
};

// Remote annotator failure in strict mode.
struct NetworkError : Error {
  using Error::Error;
};

}  // namespace publicspeak

#endif
