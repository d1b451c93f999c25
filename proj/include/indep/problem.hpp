#ifndef INDEP_PROBLEM_HPP
#define INDEP_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indep/kernel.hpp"
#include "indep/serialize.hpp"

namespace indep {

// Validation failure with a JSON-pointer-style location into the
// problem file.
class ProblemError : public Error {
public:
    ProblemError(std::string location, const std::string& message)
        : Error("invalid problem at " + location + ": " + message),
          location(std::move(location)) {}
    std::string location;
};

enum class Mode { Certify, Rank, KernelReduce, KernelRecover };

std::string mode_name(Mode m);

// A fully validated analysis: the field, the functions (built and
// pre-parsed), the pools, and for kernel modes the kernel itself plus
// its black-box sampler.
struct ProblemSpec {
    Json raw;                // the problem file as parsed, for report embedding
    Mode mode = Mode::Certify;
    FieldDescriptor field;
    std::optional<std::uint64_t> seed; // effective seed when any pool is random

    // certify / rank
    std::optional<FunctionColumn> column;
    std::optional<CandidatePool> pool;
    std::vector<std::string> function_names;

    // kernel modes
    std::optional<SeparableKernel> kernel;
    std::optional<KernelSampler> sampler;
    std::optional<CandidatePool> t_pool, s_pool;
};

// Parse and validate a problem file. Every expression is parsed here so
// errors surface before any computation. `seed_override`, when set,
// replaces the seed of every random pool spec.
ProblemSpec load_problem(const std::string& path,
                         std::optional<std::uint64_t> seed_override = std::nullopt);

ProblemSpec problem_from_json(const Json& file,
                              std::optional<std::uint64_t> seed_override = std::nullopt);

} // namespace indep

#endif // INDEP_PROBLEM_HPP
