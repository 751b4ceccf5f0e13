#pragma once

#include <stdexcept>
#include <string>

namespace intransitive {

/// Thrown when an exact routine is asked for a size above its configured cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what_routine, int n, int cap)
      : std::length_error(what_routine + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

}  // namespace intransitive
