#pragma once

#include <stdexcept>
#include <string>

namespace semiflag {

// Thrown when a semi-infinite comparison or a translation-stabilized value
// does not become constant within the configured translation depth.
class UndecidedError : public std::runtime_error {
 public:
  UndecidedError(const std::string& what, int depth_reached)
      : std::runtime_error(what), depth_reached_(depth_reached) {}
  int depth_reached() const { return depth_reached_; }

 private:
  int depth_reached_;
};

// A finite window (of alcoves, or of polynomial degrees) was too small to
// contain the requested object.
class WindowTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A projective cover found generators in the top stored degrees, so
// generators above the cutoff may have been missed.
class CutoffError : public std::runtime_error {
 public:
  CutoffError(const std::string& what, int cutoff)
      : std::runtime_error(what), cutoff_(cutoff) {}
  int cutoff() const { return cutoff_; }

 private:
  int cutoff_;
};

// An invariant guaranteed by the theory failed. Always a bug or a
// numerically impossible state, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace semiflag
