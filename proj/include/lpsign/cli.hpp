#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpsign {

/// Command-line front end. Parses argv (without the program name), runs the
/// requested analysis, writes the report to --out or `out`.
/// Exit codes: 0 = analysis verdict as expected, 1 = certified
/// counter-finding, 2 = usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpsign
