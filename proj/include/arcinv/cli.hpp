#ifndef ARCINV_CLI_HPP
#define ARCINV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace arcinv {

enum class OutputFormat { plain, json, csv };

struct Config {
    int order = 0;  // 0: twice the largest exponent
    OutputFormat format = OutputFormat::plain;
    unsigned jobs = 0;  // 0: hardware concurrency
    int min_d = 1;
    int max_d = 3;
    int max_exp = 8;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int not_equivalent = 1;
constexpr int check_failed = 1;
constexpr int error = 2;
}  // namespace exit_code

/// Runs the command line `args` (without the program name). Polynomial
/// arguments may start with '-'; they never clash with options.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcinv

#endif  // ARCINV_CLI_HPP
