#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fig8 {

enum class Command { jones, tv, aef, saddle, verify, sweep };
enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::jones;
    // Unset: the default (256, or FIG8_PRECISION_BITS), raised to what the
    // largest requested colour needs.  Set: used as given, and rejected if too low.
    std::optional<long> precision_bits;
    double zeta = 0.05;
    double delta = 0.05;
    OutputFormat format = OutputFormat::csv;
    std::string output_path;  // empty: standard output
    unsigned workers = 1;

    std::vector<int> M;
    std::vector<int> N;
    std::vector<int> r;
    double u = 0.0;
    double a = 0.0;
    std::optional<double> s;
    std::optional<int> M_offset;  // sweep grids with M = N - offset
    bool half_root = false;       // jones: q = exp(2 pi i/(N + 1/2)) instead of exp(2 pi i/N)
    std::string estimate;         // aef / sweep: kashaev, murakami, fixed_a, ...
    std::string family;           // saddle: s, half, fixed_a
    std::string suite;            // verify: contour, laplace, riemann, windows

    void validate() const;
    long effective_precision() const;
};

long default_precision_bits();

// Exit status: 0 success, 2 configuration error, 3 numerical failure.  On failure
// a one-line JSON error record goes to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int cli_main(int argc, char** argv);

}  // namespace fig8
