#pragma once

#include "vgp/product.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace vgp::cli {

enum class Command { Pdf, Cdf, Quantile, Cf, ProbNeg, Sample, Table1, Figures, Verify };

enum class Format { Csv, Json };

struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
    double at(int i) const { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1); }
};

// lo:hi:n; throws std::invalid_argument
Grid parse_grid(const std::string& s);

// key = value lines overriding ProductPolicy fields; throws std::invalid_argument naming the bad key
void apply_config_file(const std::string& path, ProductPolicy& policy);

struct RunConfig {
    Command command = Command::Pdf;
    ProductDist dist = make_product(0.5, 1.0, 0.0, 0.5, 1.0, 0.0);
    std::optional<double> point;  // --z, --t or --p
    std::optional<Grid> grid;
    Format format = Format::Csv;
    std::string out;  // empty: stdout
    std::uint64_t seed = 1;
    std::size_t count = 10000;
    double tol = 1e-12;
    bool quick = false;
};

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;

// throws std::invalid_argument on an invalid config
void validate(const RunConfig& cfg);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse + run
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vgp::cli
