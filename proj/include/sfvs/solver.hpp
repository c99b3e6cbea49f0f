#pragma once

#include <cstdint>
#include <optional>

#include "sfvs/solver_by_s.hpp"

namespace sfvs {

struct SolveOptions {
    bool by_s_only = false;                    // skip the compression loop
    std::optional<std::uint64_t> permute_seed;  // reorder vertices before compressing
    std::optional<double> timeout_seconds;
};

/// Exact solver. Grows the graph one vertex at a time, keeps a solution per
/// prefix, and compresses the previous solution plus the new vertex through
/// the reduction engine and the endpoint-parameterized core solver. Every
/// YES witness is re-verified before being returned; throws timeout_error
/// when the optional deadline passes.
std::optional<VertexSet> solve(const EsfvsInstance& inst, const SolveOptions& options = {},
                               SearchStats* stats = nullptr);

/// Greedy self-reduction: repeatedly commits the lowest-id vertex whose
/// removal keeps the decision positive with one budget less. Requires a YES
/// instance.
VertexSet extract_witness(const EsfvsInstance& inst, const SolveOptions& options = {});

}  // namespace sfvs
