#include "mcd/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "mcd/errors.hpp"

namespace mcd {

namespace {

constexpr int kDecimalDigits = 12;

std::string simple_source(Length length, const std::vector<SimpleCycleRange>& ranges) {
    for (const auto& range : ranges) {
        if (range.first <= length && length <= range.last) {
            return "cycle:" + std::to_string(length) + " " + range.label;
        }
    }
    return "cycle:" + std::to_string(length);
}

}  // namespace

Certificate verify(const FamilyParams& params) {
    return verify_gadget_set(build_gadget_set(params), params);
}

Certificate verify_gadget_set(const GadgetSet& set, const FamilyParams& params) {
    require_valid_t(params.t);
    Certificate cert;
    cert.params = params;

    CycleLengthMultiset all;
    std::vector<CycleLengthMultiset> spectra;
    spectra.reserve(set.hub_gadgets.size());
    std::int64_t edges = 0;
    for (const auto& lg : set.hub_gadgets) {
        spectra.push_back(hub_spectrum(lg.gadget));
        all.merge(spectra.back());
        edges += hub_counts(lg.gadget).edges;

        std::vector<Length> claimed;
        try {
            claimed = claimed_lengths(lg.family, params.t, lg.index);
        } catch (const IndexError&) {
            // Out-of-range index: no claim exists, which is itself a mismatch.
        }
        if (spectra.back() != CycleLengthMultiset::from_lengths(claimed)) {
            std::sort(claimed.begin(), claimed.end());
            cert.gadget_spectrum_mismatches.push_back(
                {lg.label(), spectra.back().expanded(), std::move(claimed)});
        }
    }
    for (Length l : set.simple_cycle_lengths) {
        if (l < 3) throw ValidationError("plain cycle of length " + std::to_string(l) + " < 3");
        all.add(l);
        edges += l;
    }

    const std::int64_t core = core_vertex_count(set);
    if (params.n < core) throw CapacityError(params.n, core);
    const std::int64_t path_len = params.n - core;

    auto& c = cert.counts;
    c.core_vertices = core;
    c.path_len = path_len;
    c.total_vertices = core + path_len;
    c.total_edges = edges + path_len;
    c.total_cycles = all.total();
    c.hub_gadget_count = static_cast<std::int64_t>(set.hub_gadgets.size());
    c.simple_cycle_count = static_cast<std::int64_t>(set.simple_cycle_lengths.size());
    if (c.total_vertices != params.n) throw InternalError("vertex total differs from n");

    const auto repeated = collisions(all);
    if (!repeated.empty()) {
        std::map<Length, std::vector<std::string>> sources;
        for (const auto& [length, count] : repeated) sources[length];
        for (std::size_t k = 0; k < set.hub_gadgets.size(); ++k) {
            for (const auto& [length, count] : spectra[k].entries()) {
                if (auto it = sources.find(length); it != sources.end()) {
                    it->second.insert(it->second.end(), count, set.hub_gadgets[k].label());
                }
            }
        }
        const auto ranges = simple_cycle_ranges(params.t);
        for (Length l : set.simple_cycle_lengths) {
            if (auto it = sources.find(l); it != sources.end()) {
                it->second.push_back(simple_source(l, ranges));
            }
        }
        for (const auto& [length, count] : repeated) {
            cert.collisions.push_back({length, count, std::move(sources[length])});
        }
    }
    cert.distinct = cert.collisions.empty();

    auto& cl = cert.claimed;
    cl.edge_total = claimed_edge_total(params.t, params.n);
    cl.edge_total_delta = c.total_edges - cl.edge_total;
    cl.extra_edges = c.total_edges - params.n;
    cl.claimed_extra_edges = claimed_extra_edges(params.t);
    cl.n_t = params.n_t;
    cl.n_t_delta = core - params.n_t;

    cert.bound = bound_constant();
    return cert;
}

BoundConstant bound_constant() {
    // extra ~ (107/3) t and n ~ (2119/4) t^2, so (extra / sqrt n)^2 -> (214/3)^2 / 2119.
    const ExactRational ratio(214, 3);
    BoundConstant b;
    b.squared = ratio * ratio / ExactRational(2119);
    b.excess_over_two = b.squared - ExactRational(2);
    if (b.squared != ExactRational(2) + ExactRational(7654, 19071)) {
        throw InternalError("bound constant is not 2 + 7654/19071");
    }
    const ExactRational twelve_fifths(12, 5);
    b.witness_lhs = b.squared.num() * twelve_fifths.den();
    b.witness_rhs = twelve_fifths.num() * b.squared.den();
    b.exceeds_sqrt_2_4 = b.witness_lhs > b.witness_rhs;
    b.decimal = sqrt_decimal(b.squared, kDecimalDigits);
    b.sqrt_2_4_decimal = sqrt_decimal(twelve_fifths, kDecimalDigits);
    return b;
}

std::vector<TrajectoryPoint> trajectory(std::span<const std::int64_t> rs) {
    std::vector<TrajectoryPoint> out;
    for (std::int64_t r : rs) {
        const auto params = params_from_r(r);
        TrajectoryPoint p;
        p.r = r;
        p.t = params.t;
        p.extra_edges = claimed_extra_edges(params.t);
        p.n_t = params.n_t;
        p.squared = ExactRational(BigInt(p.extra_edges) * p.extra_edges, p.n_t);
        p.decimal = sqrt_decimal(p.squared, kDecimalDigits);
        out.push_back(std::move(p));
    }
    return out;
}

std::string conjecture_report(std::span<const std::int64_t> rs) {
    const auto b = bound_constant();
    std::ostringstream os;
    os << "upper constant (n sufficiently large): f(n) - n < 1.98 sqrt(n)\n";
    os << "lower constant squared: " << b.squared.str() << " = 2 + " << b.excess_over_two.str()
       << "\n";
    os << "lower constant: sqrt(" << b.squared.str() << ") = " << b.decimal << "...\n";
    os << "sqrt(12/5) = " << b.sqrt_2_4_decimal << "...\n";
    os << "strict gap: " << b.witness_lhs.str() << " = " << b.squared.num().str() << "*5 "
       << (b.exceeds_sqrt_2_4 ? ">" : "<=") << " 12*" << b.squared.den().str() << " = "
       << b.witness_rhs.str() << "\n";
    os << "limit sqrt(2.4) for (f(n) - n) / sqrt(n): "
       << (b.exceeds_sqrt_2_4 ? "refuted (liminf exceeds it)" : "not refuted") << "\n";
    os << "1.98^2 = 39204/10000 " << (ExactRational(39204, 10000) > b.squared ? ">" : "<=")
       << " " << b.squared.str() << "\n";
    if (!rs.empty()) {
        os << "trajectory ((107t+7)/3) / sqrt(n_t):\n";
        const auto points = trajectory(rs);
        for (std::size_t k = 0; k < points.size(); ++k) {
            const auto& p = points[k];
            os << "  r=" << p.r << " t=" << p.t << " n_t=" << p.n_t << " extra=" << p.extra_edges
               << " ratio=" << p.decimal;
            if (k > 0) os << (points[k - 1].squared < p.squared ? " (increasing)" : " (NOT increasing)");
            os << "\n";
        }
    }
    return os.str();
}

std::string to_json(const Certificate& cert) {
    using json = nlohmann::ordered_json;
    auto rational = [](const ExactRational& q) {
        return json{{"num", to_int64(q.num())}, {"den", to_int64(q.den())}};
    };

    json j;
    j["params"] = {{"r", cert.params.r},
                   {"t", cert.params.t},
                   {"n", cert.params.n},
                   {"n_t", cert.params.n_t}};
    const auto& c = cert.counts;
    j["counts"] = {{"core_vertices", c.core_vertices},
                   {"total_vertices", c.total_vertices},
                   {"total_edges", c.total_edges},
                   {"total_cycles", c.total_cycles},
                   {"hub_gadget_count", c.hub_gadget_count},
                   {"simple_cycle_count", c.simple_cycle_count},
                   {"path_len", c.path_len}};
    j["distinct"] = cert.distinct;
    j["collisions"] = json::array();
    for (const auto& col : cert.collisions) {
        j["collisions"].push_back(
            {{"length", col.length}, {"multiplicity", col.multiplicity}, {"sources", col.sources}});
    }
    j["gadget_spectrum_mismatches"] = json::array();
    for (const auto& m : cert.gadget_spectrum_mismatches) {
        j["gadget_spectrum_mismatches"].push_back(
            {{"gadget", m.gadget}, {"computed", m.computed}, {"claimed", m.claimed}});
    }
    const auto& cl = cert.claimed;
    j["claimed"] = {{"edge_total", cl.edge_total},
                    {"edge_total_delta", cl.edge_total_delta},
                    {"extra_edges", cl.extra_edges},
                    {"claimed_extra_edges", cl.claimed_extra_edges},
                    {"n_t", cl.n_t},
                    {"n_t_delta", cl.n_t_delta}};
    const auto& b = cert.bound;
    j["bound"] = {{"squared", rational(b.squared)},
                  {"excess_over_two", rational(b.excess_over_two)},
                  {"decimal", b.decimal},
                  {"sqrt_2_4_decimal", b.sqrt_2_4_decimal},
                  {"exceeds_sqrt_2_4", b.exceeds_sqrt_2_4},
                  {"witness", {{"lhs", to_int64(b.witness_lhs)}, {"rhs", to_int64(b.witness_rhs)}}}};
    j["tool_version"] = cert.tool_version;
    return j.dump(2) + "\n";
}

}  // namespace mcd
