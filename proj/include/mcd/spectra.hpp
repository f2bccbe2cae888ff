#pragma once

// Hub gadgets: a cycle through a hub vertex plus spoke paths from the hub to
// cycle vertices. Every cycle of such a graph uses exactly two of the d + 2
// hub connections, so its spectrum has a closed form.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mcd {

using Length = std::int64_t;

/// A path of `length` edges from the hub to the cycle vertex `attach_pos`
/// edges away from the hub (counted toward the first cycle vertex).
struct Spoke {
    Length attach_pos = 0;
    Length length = 0;

    friend bool operator==(const Spoke&, const Spoke&) = default;
};

struct HubGadget {
    Length id = 0;          // design label, equal to the smallest cycle length
    Length cycle_len = 0;   // edges of the hub cycle
    std::vector<Spoke> spokes;

    std::int64_t spoke_count() const noexcept {
        return static_cast<std::int64_t>(spokes.size());
    }

    friend bool operator==(const HubGadget&, const HubGadget&) = default;
};

/// Length -> multiplicity. Zero multiplicities are never stored.
class CycleLengthMultiset {
public:
    using Entries = std::map<Length, std::int64_t>;

    CycleLengthMultiset() = default;
    CycleLengthMultiset(std::initializer_list<std::pair<const Length, std::int64_t>> init);

    void add(Length length, std::int64_t count = 1);
    void merge(const CycleLengthMultiset& other);

    const Entries& entries() const noexcept { return entries_; }
    std::int64_t multiplicity(Length length) const;
    std::int64_t total() const noexcept { return total_; }
    std::size_t distinct_count() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Length min() const;
    Length max() const;

    /// Every length repeated by its multiplicity, ascending.
    std::vector<Length> expanded() const;

    static CycleLengthMultiset from_lengths(const std::vector<Length>& lengths);

    friend bool operator==(const CycleLengthMultiset& a, const CycleLengthMultiset& b) {
        return a.entries_ == b.entries_;
    }

private:
    Entries entries_;
    std::int64_t total_ = 0;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Structural checks only: L >= 3, spoke bounds, strictly increasing attach
/// positions, and no spoke that duplicates a hub cycle edge.
ValidationReport validate_hub_gadget(const HubGadget& g);

/// Spectrum-derived checks: id equals the smallest cycle length, and the
/// spectrum has C(d+2, 2) members. Requires a structurally valid gadget.
ValidationReport check_spectrum_labels(const HubGadget& g);

/// Throws ValidationError listing every violation.
void require_valid(const HubGadget& g);

CycleLengthMultiset hub_spectrum(const HubGadget& g);

struct HubCounts {
    std::int64_t vertices_excluding_hub = 0;
    std::int64_t edges = 0;

    friend bool operator==(const HubCounts&, const HubCounts&) = default;
};

HubCounts hub_counts(const HubGadget& g);

/// (length, multiplicity) for every multiplicity >= 2, ascending by length.
std::vector<std::pair<Length, std::int64_t>> collisions(const CycleLengthMultiset& ms);

/// Number of cycles in a cycle with d chords: C(d + 2, 2).
std::int64_t chord_cycle_count(std::int64_t d);

}  // namespace mcd
