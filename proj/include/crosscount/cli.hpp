#ifndef CROSSCOUNT_CLI_HPP
#define CROSSCOUNT_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crosscount/generate.hpp"

namespace crosscount::cli {

enum class Command { Count, Patterns, Validate, Gen, Bench, Draw };
enum class Method { Auto, General, Convex, Layered, Oracle };
enum class Format { Plain, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;
inline constexpr int kExitInternal = 4;

// Scale exponent used by --perturb, lowered for inputs too wide to scale that far.
inline constexpr int kPerturbExponent = kLayeredPerturbExponent;

struct RunConfig {
    Command command = Command::Count;
    std::string input = "-";
    Method method = Method::Auto;
    Format format = Format::Plain;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::optional<std::uint64_t> perturb_seed;
    std::string out;  // empty: standard output

    // gen / bench
    Family family = Family::Complete;
    std::size_t n = 16;
    std::vector<std::size_t> layer_sizes;
    double density = 1.0;
    std::optional<Coord> range;
    std::vector<std::size_t> sizes;
    unsigned repeats = 1;
};

const char* to_string(Method method) noexcept;

// Executes one command. Returns the process exit status; diagnostics go to err.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and runs. Usage errors return kExitUsage.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace crosscount::cli

#endif  // CROSSCOUNT_CLI_HPP
