#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsg/core.hpp"

namespace nsg::cli {

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out, diagnostics to err. Exit codes: 0 success, 1 usage or parse error,
/// 2 invalid input, 3 overflow, 4 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv);

/// Strict integer parse of inline tokens; ParseError on non-integer tokens,
/// OverflowError on integers past 64 bits.
std::vector<Int> parse_generator_tokens(const std::vector<std::string>& tokens);

/// Generators file: integers separated by whitespace or newlines; blank
/// lines and '#' comments ignored.
std::vector<Int> parse_generators_file(const std::string& path);

}  // namespace nsg::cli
