#pragma once

#include <string>

namespace halfstep {

// Shortest decimal text that parses back to the same binary64 value.
std::string shortest(double v);

}  // namespace halfstep
