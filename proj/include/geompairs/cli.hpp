/**
 * @file cli.hpp
 * @brief Command-line front end: one subcommand per method, cross-method
 *        comparison, and Table-1 style pattern emission.
 *
 * Report rows share the stable CSV schema
 *   n,q,method,value,tail_or_stderr,runtime_ms
 * (JSON mirrors it field-for-field).  Exit status: 0 on success, 1 when
 * `compare --check` finds a cross-method discrepancy beyond the combined
 * certified tolerances, 2 on invalid input (with a machine-readable error
 * object on stderr).
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geompairs::cli {

struct RunSpec {
    enum class Command { sample, exact, binomial, series, direct, asymp, mc, compare, table1 };
    enum class Format { csv, json };

    Command command = Command::compare;
    std::string q_text = "1/2";          // "a/b" = exact mode, decimal = float mode
    std::uint64_t n_lo = 4;
    std::uint64_t n_hi = 4;
    double eps = 1e-10;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 12345;
    unsigned fluctuation_terms = 3;      // K
    unsigned workers = 1;
    Format format = Format::csv;
    std::string out_path;                // empty = standard output
    bool check = false;                  // compare: gate cross-method agreement
    double check_tol = 1e-10;            // base tolerance added to certified tails
    bool with_mc = false;                // compare: also run the simulation row
    std::vector<std::string> methods;    // compare: restrict methods; empty = all
};

struct ParseResult {
    int status = 0;
    std::optional<RunSpec> spec;  // engaged iff status == 0 and not a help call
    std::string message;          // help or error text already emitted
};

/// Parses command-line arguments (excluding the program name).
ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

/// Executes a run and writes the report; returns the process exit status.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Full entry point used by the binary.
int main_entry(int argc, char** argv);

}  // namespace geompairs::cli
