#pragma once

// The construction for t = 1260r + 169: five one-spoke gadget families, the
// ten-spoke family, plain cycles, and a tail path hanging off the hub.

#include <array>
#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "mcd/spectra.hpp"

namespace mcd {

/// Largest supported r. Keeps every total inside int64.
inline constexpr std::int64_t kMaxR = 10'000;

struct FamilyParams {
    std::int64_t r = 0;
    std::int64_t t = 0;
    std::int64_t n = 0;
    std::int64_t n_t = 0;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws ParameterError when r < 1 (or r > kMaxR), ThresholdError when n < n_t.
FamilyParams params_from_r(std::int64_t r, std::optional<std::int64_t> n = std::nullopt);

/// Throws ParameterError unless t = 1260r + 169 for some supported r >= 1.
void require_valid_t(std::int64_t t);

enum class Family { A, B, C, D, E, Big };

inline constexpr std::array<Family, 6> kAllFamilies{Family::A, Family::B, Family::C,
                                                    Family::D, Family::E, Family::Big};

std::string_view to_string(Family family);
/// Accepts A..E and BIG, case-insensitive. Throws ParameterError otherwise.
Family parse_family(std::string_view text);

struct IndexRange {
    std::int64_t first = 0;
    std::int64_t last = 0;  // inclusive

    std::int64_t size() const noexcept { return last < first ? 0 : last - first + 1; }
    bool contains(std::int64_t i) const noexcept { return first <= i && i <= last; }
    auto indices() const { return std::views::iota(first, last + 1); }
};

IndexRange index_range(Family family, std::int64_t t);

/// One-spoke gadget of families A..E. Asserts the computed triple matches the
/// claimed one.
HubGadget build_small_gadget(Family family, std::int64_t t, std::int64_t i);
/// Ten-spoke gadget with id 27t + i - 57, for 58 <= i <= t - 742.
HubGadget build_big_gadget(std::int64_t t, std::int64_t i);
HubGadget build_gadget(Family family, std::int64_t t, std::int64_t i);

std::array<Length, 3> claimed_triple(Family family, std::int64_t t, std::int64_t i);

/// One entry of the 66-length table: t_coef * t + i_coef * i + constant.
struct TableRow {
    std::int64_t t_coef;
    std::int64_t i_coef;
    std::int64_t constant;
};

extern const std::array<TableRow, 66> kBigTable;

std::vector<Length> claimed_big_table(std::int64_t t, std::int64_t i);
std::vector<Length> claimed_lengths(Family family, std::int64_t t, std::int64_t i);

/// An inclusive run of plain cycle lengths together with a human label.
struct SimpleCycleRange {
    Length first;
    Length last;
    std::string label;
};

/// The index list of plain cycles, as the labelled runs it is built from.
std::vector<SimpleCycleRange> simple_cycle_ranges(std::int64_t t);
/// Sorted union of simple_cycle_ranges(t).
std::vector<Length> simple_cycle_lengths(std::int64_t t);

struct LabeledGadget {
    Family family;
    std::int64_t index;
    HubGadget gadget;

    std::string label() const;
};

struct GadgetSet {
    std::vector<LabeledGadget> hub_gadgets;  // ascending id
    std::vector<Length> simple_cycle_lengths;
    std::int64_t path_len = 0;
};

/// 1 (hub) + non-hub vertices of all gadgets and plain cycles.
std::int64_t core_vertex_count(const GadgetSet& set);

/// Throws CapacityError if params.n is below the core vertex count.
GadgetSet build_gadget_set(const FamilyParams& params);

std::int64_t n_threshold(std::int64_t t);
/// (107t + 7) / 3
std::int64_t claimed_extra_edges(std::int64_t t);
std::int64_t claimed_edge_total(std::int64_t t, std::int64_t n);

struct ReferenceBounds {
    std::int64_t n = 0;
    /// n + floor((sqrt(8n - 23) + 1) / 2), floored exactly.
    std::int64_t shi_lower = 0;
    /// n + 1.98 sqrt(n), truncated to six decimals.
    std::string boros_upper;
};

/// Throws ParameterError when n < 3.
ReferenceBounds reference_bounds(std::int64_t n);

}  // namespace mcd
