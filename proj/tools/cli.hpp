// Copyright 2026 The cglmp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file cli.hpp
 * Subcommands of the cglmp tool. Everything here is callable in-process;
 * main() only forwards argv and the standard streams to run_cli().
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cglmp/error.hpp"
#include "cglmp/fit.hpp"

namespace cglmp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kIoError = 3,
};

inline constexpr const char *kTableHeader = "d,i_eig,i_app,i_mes,residual,iterations,wall_ms";

/// Reference grid of dimensions, d = 2 .. 600000.
std::vector<int> reference_grid();

/// Malformed table CSV; line() is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Unreadable or unwritable file.
class IoError : public Error {
  public:
    using Error::Error;
};

struct TableRow {
    int d = 0;
    std::optional<double> i_eig;
    double i_app = 0.0;
    double i_mes = 0.0;
    /// Set whenever the eigensolver ran, converged or not.
    std::optional<double> residual;
    std::optional<int> iterations;
    double wall_ms = 0.0;
    /// False when the eigensolver ran and failed to converge.
    bool converged = true;
};

struct TableOptions {
    double tol = 1e-10;
    int max_iter = 500;
    /// Largest d for which the eigenpair is computed.
    int eig_budget = 100000;
    /// Record wall-clock time per row; otherwise wall_ms is written as 0.
    bool timing = false;
    int jobs = 1;
};

/// One row per distinct d, sorted ascending. Non-convergence is reported on `log`.
std::vector<TableRow> compute_table(std::span<const int> dims, const TableOptions &options,
                                    std::ostream &log);

/// Writes the header and rows; numbers carry 10 significant digits.
void write_table_csv(std::ostream &out, std::span<const TableRow> rows);

/// Parses a table written by write_table_csv. Throws ParseError.
std::vector<TableRow> read_table_csv(std::istream &in);

/// (d, i_eig) for every row that has an eigenvalue.
std::vector<FitPoint> eig_points(std::span<const TableRow> rows);

struct VerifyCheck {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyOptions {
    /// Largest d for the dense oracles (full Bell matrix, probability route).
    int d_max_oracle = 16;
    /// Test mode: perturbs the operator-route coefficients so the route
    /// equivalence check must fail.
    bool inject_fault = false;
};

/// Runs the cross-route and oracle-equivalence checks. Throws DomainError
/// when d_max_oracle is outside [2, 64].
std::vector<VerifyCheck> run_verify(const VerifyOptions &options);

/// Entry point. Data goes to `out`, diagnostics to `err`; returns an ExitCode.
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace cglmp::cli
