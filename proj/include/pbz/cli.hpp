#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pbz/algebra.hpp"

namespace pbz {

// A catalog name, or else a path to an algebra file. Throws UnknownName
// when neither exists.
FiniteAlgebra resolve_algebra(const std::string& arg);

// Runs one command; `args` excludes the program name. Returns 0 on success
// or when a checked property holds, 1 when it fails, 2 on usage, parse,
// format or signature errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pbz
