#pragma once

#include <string>

namespace socchoice {

// Deterministic self-check battery. The returned JSON is byte-stable across
// runs: no timing, no addresses, fixed ordering.
std::string selftest_json();

}  // namespace socchoice
