#pragma once

namespace semideg {

// Process-wide knobs, set once by the CLI / bindings before any computation.
struct Config {
  int max_cyclotomic = 360; // cap on the order n of Q(zeta_n)
  int threads = 1;          // worker cap for enumeration (advisory)
};

inline Config& config() {
  static Config c;
  return c;
}

} // namespace semideg
