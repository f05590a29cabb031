#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotmat::cli {

// Parses and runs one command-line invocation (program name excluded).
// Results go to `out` unless --out redirects them to a file; diagnostics go
// to `err` as a single "error: <kind>: <message>" line. Returns 0 on
// success, 1 on usage or domain errors, 2 when a cap is exceeded, 3 when an
// iteration fails to converge.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace knotmat::cli
