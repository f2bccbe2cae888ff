#pragma once

// Brute-force cycle spectrum of an arbitrary simple graph. This is the
// independent oracle for the closed-form hub spectra: it knows nothing about
// hubs or spokes.

#include <cstdint>
#include <utility>
#include <vector>

#include "mcd/graph.hpp"
#include "mcd/spectra.hpp"

namespace mcd {

inline constexpr std::int64_t kDefaultCycleCap = 1'000'000;

struct EnumerateOptions {
    std::int64_t cap = kDefaultCycleCap;
    /// Prune trees and fold degree-2 chains into weighted edges before the
    /// circuit search. Turning this off runs the search on the raw graph.
    bool contract_chains = true;
};

/// Lengths of all simple cycles, each counted once regardless of orientation
/// or starting point. Throws CapExceededError once more than `cap` cycles have
/// been found, ValidationError for a non-simple graph.
CycleLengthMultiset enumerate_cycles(const AdjacencyGraph& graph, const EnumerateOptions& options);
CycleLengthMultiset enumerate_cycles(const AdjacencyGraph& graph,
                                     std::int64_t cap = kDefaultCycleCap);

struct McdReport {
    bool is_mcd = false;
    std::vector<std::pair<Length, std::int64_t>> collisions;
    CycleLengthMultiset lengths;
};

/// A graph is MCD when no two of its cycles share a length.
McdReport mcd_check(const AdjacencyGraph& graph, std::int64_t cap = kDefaultCycleCap);

}  // namespace mcd
