#pragma once

#include <stdexcept>
#include <string>

namespace lounesto {

/// Both phase factors vanish, so no spinor (and no Lounesto class) exists.
class NullSpinorError : public std::invalid_argument {
public:
  explicit NullSpinorError(const std::string &what)
      : std::invalid_argument(what) {}
};

/// Out-of-range construction parameter (angle, mass, momentum, tolerance).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// sigma = omega = 0 and K = S = 0 while J != 0. No Lounesto class matches.
class AnomalyError : public std::runtime_error {
public:
  explicit AnomalyError(const std::string &what) : std::runtime_error(what) {}
};

/// Two spinors were combined that do not share kind, mass, angles, momentum
/// and relative sign.
class FamilyMismatchError : public std::invalid_argument {
public:
  explicit FamilyMismatchError(const std::string &what)
      : std::invalid_argument(what) {}
};

class MassShellError : public std::domain_error {
public:
  explicit MassShellError(const std::string &what) : std::domain_error(what) {}
};

} // namespace lounesto
