#pragma once

#include <cstdint>

namespace fitkit {

/// Size limits for the exhaustive parts of the library. Operations that
/// would exceed a cap throw CapExceeded instead of approximating.
struct Caps {
  std::uint64_t subgroups = 500;          // full subgroup enumeration
  std::uint64_t normal_lattice = 2000;    // full normal-subgroup lattice
  std::uint64_t oracle = 300;             // brute-force F* oracle
  std::uint64_t tower_order = 10'000'000; // order of a single tower level
  std::uint64_t sylow_exhaustive = 2000;  // Sylow fallback search
  std::uint64_t elements = 200'000;       // explicit element enumeration
};

/// Process-wide caps. Set once at startup (CLI flags, FITKIT_CAP_* env);
/// tests override them through ScopedCaps.
const Caps& caps();

/// Applies FITKIT_CAP_SUBGROUPS, _LATTICE, _ORACLE, _TOWER_ORDER,
/// _SYLOW and _ELEMENTS from the environment.
void load_caps_from_env();

class ScopedCaps {
 public:
  explicit ScopedCaps(const Caps& c);
  ~ScopedCaps();
  ScopedCaps(const ScopedCaps&) = delete;
  ScopedCaps& operator=(const ScopedCaps&) = delete;

 private:
  Caps saved_;
};

void set_caps(const Caps& c);

}  // namespace fitkit
