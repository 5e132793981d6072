#pragma once

// Command-line dispatch for the qg tool.

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qg/classical.hpp"
#include "qg/report.hpp"

namespace qg {

/// Bad arguments or inputs; the tool exits with code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Runs one command (argv without the program name) and returns its report.
/// Throws UsageError on bad input.
Report execute(const std::vector<std::string> &args);

/// Prints the report (JSON unless --text) and returns the exit code:
/// 0 when no result fails, 1 otherwise, 2 on usage errors.
int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err);

/// Matrix literal: diag(z1, ..., zn), a JSON array of rows of [re, im]
/// pairs, or "random" (Haar special unitary of size n from rng).
classical::UnitaryMatrix parse_unitary(const std::string &text, std::size_t n,
                                       std::mt19937_64 &rng);
/// Complex scalar: exact Gaussian rational syntax or a decimal number.
classical::cplx parse_complex(const std::string &text);

} // namespace qg
