#include "mcd/spectra.hpp"

#include <algorithm>
#include <sstream>

#include "mcd/errors.hpp"

namespace mcd {

CycleLengthMultiset::CycleLengthMultiset(
    std::initializer_list<std::pair<const Length, std::int64_t>> init) {
    for (const auto& [length, count] : init) add(length, count);
}

void CycleLengthMultiset::add(Length length, std::int64_t count) {
    if (count <= 0) return;
    entries_[length] += count;
    total_ += count;
}

void CycleLengthMultiset::merge(const CycleLengthMultiset& other) {
    for (const auto& [length, count] : other.entries_) add(length, count);
}

std::int64_t CycleLengthMultiset::multiplicity(Length length) const {
    auto it = entries_.find(length);
    return it == entries_.end() ? 0 : it->second;
}

Length CycleLengthMultiset::min() const {
    if (entries_.empty()) throw Error("min() of an empty multiset");
    return entries_.begin()->first;
}

Length CycleLengthMultiset::max() const {
    if (entries_.empty()) throw Error("max() of an empty multiset");
    return entries_.rbegin()->first;
}

std::vector<Length> CycleLengthMultiset::expanded() const {
    std::vector<Length> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (const auto& [length, count] : entries_) out.insert(out.end(), count, length);
    return out;
}

CycleLengthMultiset CycleLengthMultiset::from_lengths(const std::vector<Length>& lengths) {
    CycleLengthMultiset ms;
    for (Length l : lengths) ms.add(l);
    return ms;
}

ValidationReport validate_hub_gadget(const HubGadget& g) {
    ValidationReport report;
    const Length L = g.cycle_len;
    if (L < 3) {
        report.violations.push_back("cycle_len " + std::to_string(L) + " < 3");
    }
    for (std::size_t k = 0; k < g.spokes.size(); ++k) {
        const auto& [q, s] = g.spokes[k];
        const std::string where = "spoke " + std::to_string(k) + ": ";
        if (q < 1 || q > L - 1) {
            report.violations.push_back(where + "attach_pos " + std::to_string(q) +
                                        " out of range [1, L-1] with L = " + std::to_string(L));
        }
        if (s < 1) {
            report.violations.push_back(where + "spoke_len " + std::to_string(s) + " < 1");
        }
        if (s == 1 && (q == 1 || q == L - 1)) {
            report.violations.push_back(where + "spoke of length 1 duplicates a hub cycle edge");
        }
        if (k > 0 && g.spokes[k - 1].attach_pos >= q) {
            report.violations.push_back(where + "attach positions not strictly increasing");
        }
    }
    return report;
}

ValidationReport check_spectrum_labels(const HubGadget& g) {
    require_valid(g);
    ValidationReport report;
    const auto spectrum = hub_spectrum(g);
    if (spectrum.min() != g.id) {
        report.violations.push_back("id " + std::to_string(g.id) +
                                    " differs from smallest cycle length " +
                                    std::to_string(spectrum.min()));
    }
    const auto expected = chord_cycle_count(g.spoke_count());
    if (spectrum.total() != expected) {
        report.violations.push_back("spectrum has " + std::to_string(spectrum.total()) +
                                    " members, expected " + std::to_string(expected));
    }
    return report;
}

void require_valid(const HubGadget& g) {
    auto report = validate_hub_gadget(g);
    if (report.ok()) return;
    std::ostringstream msg;
    msg << "invalid hub gadget (id " << g.id << "):";
    for (const auto& v : report.violations) msg << "\n  " << v;
    throw ValidationError(msg.str());
}

CycleLengthMultiset hub_spectrum(const HubGadget& g) {
    require_valid(g);
    CycleLengthMultiset ms;
    const Length L = g.cycle_len;
    ms.add(L);
    for (const auto& [q, s] : g.spokes) {
        ms.add(q + s);
        ms.add(L - q + s);
    }
    for (std::size_t a = 0; a < g.spokes.size(); ++a) {
        for (std::size_t b = a + 1; b < g.spokes.size(); ++b) {
            ms.add(g.spokes[a].length + g.spokes[b].length +
                   (g.spokes[b].attach_pos - g.spokes[a].attach_pos));
        }
    }
    return ms;
}

HubCounts hub_counts(const HubGadget& g) {
    require_valid(g);
    HubCounts counts{g.cycle_len - 1, g.cycle_len};
    for (const auto& spoke : g.spokes) {
        counts.vertices_excluding_hub += spoke.length - 1;
        counts.edges += spoke.length;
    }
    return counts;
}

std::vector<std::pair<Length, std::int64_t>> collisions(const CycleLengthMultiset& ms) {
    std::vector<std::pair<Length, std::int64_t>> out;
    for (const auto& [length, count] : ms.entries()) {
        if (count >= 2) out.emplace_back(length, count);
    }
    return out;
}

std::int64_t chord_cycle_count(std::int64_t d) {
    if (d < 0) throw ParameterError("chord count must be nonnegative");
    return (d + 2) * (d + 1) / 2;
}

}  // namespace mcd
