// cli.hpp - the debyekit command line, callable in-process.
#ifndef DEBYEKIT_CLI_HPP
#define DEBYEKIT_CLI_HPP

#include "debyekit/numerics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dk::cli {

/// Exit codes.
enum Exit { Ok = 0, Failure = 1, ParseFailure = 2, SectorViolation = 3, QuadratureFailure = 4 };

/// args excludes the program name. Records go to `out`, one-line JSON errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Literal grammar: sums, products, quotients and powers of numbers, `pi`, `i`
/// and exp/sqrt/cos/sin/tan/sec/log; juxtaposition multiplies ("1.6i pi").
/// exp(a + bi) keeps b as the argument, so 10*exp(1.6i*pi) has arg 1.6 pi.
Polar parse_complex(const std::string& text);
Real parse_real(const std::string& text);

/// Digits used when --digits is absent: DEBYEKIT_DIGITS or 60.
int default_digits();

}  // namespace dk::cli

#endif
