#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcd/family.hpp"
#include "mcd/rational.hpp"
#include "mcd/spectra.hpp"

namespace mcd {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct CollisionRecord {
    Length length = 0;
    std::int64_t multiplicity = 0;
    std::vector<std::string> sources;  // one entry per occurrence
};

struct SpectrumMismatch {
    std::string gadget;
    std::vector<Length> computed;
    std::vector<Length> claimed;
};

/// The squared liminf constant and its comparison with 12/5.
struct BoundConstant {
    ExactRational squared;
    ExactRational excess_over_two;  // squared - 2
    std::string decimal;            // sqrt(squared), 12 digits, truncated
    std::string sqrt_2_4_decimal;   // sqrt(12/5), 12 digits, truncated
    bool exceeds_sqrt_2_4 = false;
    BigInt witness_lhs;  // squared.num * 5
    BigInt witness_rhs;  // 12 * squared.den
};

struct Certificate {
    FamilyParams params;

    struct Counts {
        std::int64_t core_vertices = 0;
        std::int64_t total_vertices = 0;
        std::int64_t total_edges = 0;
        std::int64_t total_cycles = 0;
        std::int64_t hub_gadget_count = 0;
        std::int64_t simple_cycle_count = 0;
        std::int64_t path_len = 0;
    } counts;

    bool distinct = false;
    std::vector<CollisionRecord> collisions;
    std::vector<SpectrumMismatch> gadget_spectrum_mismatches;

    // Claims are reported against the computed values, never enforced.
    struct Claims {
        std::int64_t edge_total = 0;
        std::int64_t edge_total_delta = 0;  // total_edges - edge_total
        std::int64_t extra_edges = 0;       // total_edges - n
        std::int64_t claimed_extra_edges = 0;
        std::int64_t n_t = 0;
        std::int64_t n_t_delta = 0;  // core_vertices - n_t
    } claimed;

    BoundConstant bound;
    std::string tool_version{kToolVersion};

    bool passed() const noexcept { return distinct && gadget_spectrum_mismatches.empty(); }
};

Certificate verify(const FamilyParams& params);

/// Verifies an explicit gadget set. The tail path is re-derived as
/// n - core_vertices, so a tampered set still yields exactly n vertices.
Certificate verify_gadget_set(const GadgetSet& set, const FamilyParams& params);

BoundConstant bound_constant();

struct TrajectoryPoint {
    std::int64_t r = 0;
    std::int64_t t = 0;
    std::int64_t extra_edges = 0;  // (107t + 7) / 3
    std::int64_t n_t = 0;
    ExactRational squared;  // extra_edges^2 / n_t
    std::string decimal;    // extra_edges / sqrt(n_t)
};

std::vector<TrajectoryPoint> trajectory(std::span<const std::int64_t> rs);

/// Human-readable chain: upper constant 1.98, the liminf constant, the strict
/// gap over sqrt(2.4), and the finite-n trajectory for `rs`.
std::string conjecture_report(std::span<const std::int64_t> rs);

/// Canonical JSON: fixed key order, two-space indent, trailing newline.
std::string to_json(const Certificate& cert);

}  // namespace mcd
