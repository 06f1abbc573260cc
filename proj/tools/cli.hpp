#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

namespace hsob::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Exact rational from "3", "-0.25", "1.5e-3" or "2/7".
mpq_class parse_rational(const std::string& text);
/// Comma-separated list of rationals.
std::vector<mpq_class> parse_rational_list(const std::string& text);
/// Comma-separated positive integers, strictly increasing.
std::vector<int> parse_n_list(const std::string& text);

/// Runs one command line (argv[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsob::cli
