#pragma once

#include <stdexcept>
#include <string>

namespace mtk {

/// The bundled MZV table does not cover a weight needed by the request.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact result failed its mandatory numeric re-verification, or an
/// internal consistency check tripped.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The summation bound needed for the requested accuracy exceeds the cap.
class PrecisionUnreachable : public std::runtime_error {
 public:
  PrecisionUnreachable(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved bound " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  [[nodiscard]] double achieved_bound() const { return achieved_; }

 private:
  double achieved_;
};

/// z lies inside the guard band around an integer.
class PoleProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The exact system has no solution for the requested target.
class ProjectionNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mtk
