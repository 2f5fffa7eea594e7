#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

// Invalid input: malformed graph data, bad parameters, failed generation.
// The command line tool maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  enum class Kind {
    BadEdge,
    DuplicatePoint,
    CollinearTriple,
    BadShear,
    GenerationFailed,
    NonGenericDirection,
    BadInput,
  };

  InputError(Kind k, std::string msg)
      : std::runtime_error(std::move(msg)), kind(k) {}

  Kind kind;
};

// A computed quantity violated a relation that must hold for every valid
// input.  This always indicates a bug in this library, never bad data.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace gkm
