#include "fitkit/caps.hpp"

#include <cstdlib>
#include <string>

#include "fitkit/errors.hpp"

namespace fitkit {

namespace {

Caps& current() {
  static Caps c;
  return c;
}

void read_env(const char* name, std::uint64_t& slot) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return;
  try {
    std::size_t used = 0;
    auto parsed = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    slot = parsed;
  } catch (const std::exception&) {
    throw ParseError(std::string("environment variable ") + name + " is not a non-negative integer");
  }
}

}  // namespace

const Caps& caps() { return current(); }

void set_caps(const Caps& c) { current() = c; }

void load_caps_from_env() {
  Caps& c = current();
  read_env("FITKIT_CAP_SUBGROUPS", c.subgroups);
  read_env("FITKIT_CAP_LATTICE", c.normal_lattice);
  read_env("FITKIT_CAP_ORACLE", c.oracle);
  read_env("FITKIT_CAP_TOWER_ORDER", c.tower_order);
  read_env("FITKIT_CAP_SYLOW", c.sylow_exhaustive);
  read_env("FITKIT_CAP_ELEMENTS", c.elements);
}

ScopedCaps::ScopedCaps(const Caps& c) : saved_(current()) { current() = c; }

ScopedCaps::~ScopedCaps() { current() = saved_; }

}  // namespace fitkit
