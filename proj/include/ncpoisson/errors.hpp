#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ncpoisson {

/// Library error with a stable symbolic name.
///
/// The command line driver maps every thrown Error to exit code 3
/// (unusable input); usage problems are exit 2 and failed checks are
/// reported, not thrown.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), m_name(std::move(name)) {}

  /// Symbolic error name, e.g. "ParseError" or "NotCyclic".
  const std::string& name() const { return m_name; }

private:
  std::string m_name;
};

[[noreturn]] inline void raise(const std::string& name, const std::string& message) {
  throw Error(name, message);
}

} // namespace ncpoisson
