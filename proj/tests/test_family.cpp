#include "doctest.h"

#include <algorithm>
#include <set>

#include "mcd/errors.hpp"
#include "mcd/family.hpp"

using namespace mcd;

namespace {

CycleLengthMultiset multiset_of(const std::vector<Length>& v) {
    return CycleLengthMultiset::from_lengths(v);
}

}  // namespace

TEST_CASE("params_from_r") {
    const auto p = params_from_r(1);
    CHECK(p.t == 1429);
    CHECK(p.n_t == 1'207'495'771);
    CHECK(p.n == p.n_t);
    CHECK(params_from_r(1, p.n_t + 5).n == p.n_t + 5);
    CHECK(params_from_r(2).t == 2689);

    CHECK_THROWS_AS(params_from_r(0), ParameterError);
    CHECK_THROWS_AS(params_from_r(-3), ParameterError);
    CHECK_THROWS_AS(params_from_r(kMaxR + 1), ParameterError);
    try {
        params_from_r(1, p.n_t - 1);
        FAIL("expected ThresholdError");
    } catch (const ThresholdError& e) {
        CHECK(e.n() == p.n_t - 1);
        CHECK(e.n_t() == p.n_t);
        CHECK(std::string(e.what()).find("1207495771") != std::string::npos);
    }
}

TEST_CASE("t must be 1260r + 169") {
    CHECK_NOTHROW(require_valid_t(1429));
    CHECK_THROWS_AS(require_valid_t(169), ParameterError);
    CHECK_THROWS_AS(require_valid_t(1430), ParameterError);
    CHECK_THROWS_AS(n_threshold(1431), ParameterError);
}

TEST_CASE("n_threshold and claimed edge totals") {
    // (2119 * 1429^2 + 15957) / 4 + 87978 * 1429
    CHECK(n_threshold(1429) == 1'207'495'771);
    CHECK(claimed_extra_edges(1429) == 50'970);
    CHECK(claimed_edge_total(1429, 1'207'495'771) == 1'207'495'771 + 50'970);
    CHECK(claimed_extra_edges(2689) == 95'910);
}

TEST_CASE("family A, t = 1429, i = 1") {
    const auto g = build_small_gadget(Family::A, 1429, 1);
    CHECK(g.cycle_len == 29533);
    REQUIRE(g.spokes.size() == 1);
    CHECK(g.spokes[0] == Spoke{14529, 14052});
    CHECK(g.id == 28581);
    CHECK(hub_spectrum(g) == CycleLengthMultiset{{28581, 1}, {29056, 1}, {29533, 1}});
}

TEST_CASE("family C, t = 1429") {
    const auto g = build_small_gadget(Family::C, 1429, 0);
    CHECK(g.cycle_len == 35725);
    CHECK(g.spokes[0] == Spoke{16434, 13576});
    CHECK(hub_spectrum(g) == CycleLengthMultiset{{30010, 1}, {32867, 1}, {35725, 1}});
    CHECK_THROWS_AS(build_small_gadget(Family::C, 1429, 1429), IndexError);
    CHECK_THROWS_AS(build_small_gadget(Family::A, 1429, 0), IndexError);
    CHECK_THROWS_AS(build_small_gadget(Family::D, 1429, 714), IndexError);
}

TEST_CASE("claimed_triple") {
    // 21t, 22t + 1, 25t + 1 at t = 1429.
    CHECK(claimed_triple(Family::D, 1429, 0) == std::array<Length, 3>{30009, 31439, 35726});
    CHECK(claimed_triple(Family::C, 1429, 0) == std::array<Length, 3>{30010, 32867, 35725});
    CHECK_THROWS_AS(claimed_triple(Family::Big, 1429, 58), ParameterError);
}

TEST_CASE("big gadget, t = 1429, i = 58") {
    const auto g = build_big_gadget(1429, 58);
    CHECK(g.cycle_len == 190160);
    CHECK(g.id == 27 * 1429 + 58 - 57);
    REQUIRE(g.spokes.size() == 10);
    for (std::size_t k = 1; k < g.spokes.size(); ++k) {
        CHECK(g.spokes[k - 1].attach_pos < g.spokes[k].attach_pos);
    }
    const auto spectrum = hub_spectrum(g);
    CHECK(spectrum.total() == 66);
    CHECK(spectrum.min() == 38584);
    CHECK(spectrum.max() == 190160);
    // spokes 9 and 10: s_9 + s_10 + (q_10 - q_9) = 36t + i + 3
    CHECK(g.spokes[8].length + g.spokes[9].length +
              (g.spokes[9].attach_pos - g.spokes[8].attach_pos) ==
          51505);
    CHECK(spectrum.multiplicity(51505) == 1);
    CHECK(spectrum == multiset_of(claimed_big_table(1429, 58)));

    CHECK_THROWS_AS(build_big_gadget(1429, 57), IndexError);
    CHECK_THROWS_AS(build_big_gadget(1429, 1429 - 741), IndexError);
}

TEST_CASE("claimed_big_table") {
    CHECK(kBigTable[0].t_coef == 27);
    CHECK(kBigTable[0].constant == -57);
    CHECK(kBigTable[1].constant == 7);
    CHECK(kBigTable[2].constant == 210);
    CHECK(kBigTable[3].constant == 0);
    const auto table = claimed_big_table(1429, 58);
    CHECK(table.size() == 66);
    CHECK(table.back() == 190160);
    CHECK(table.front() == 38584);
}

TEST_CASE("index ranges at t = 1429") {
    CHECK(index_range(Family::A, 1429).size() == 237);
    CHECK(index_range(Family::B, 1429).size() == 237);
    CHECK(index_range(Family::C, 1429).size() == 1429);
    CHECK(index_range(Family::D, 1429).size() == 714);
    CHECK(index_range(Family::E, 1429).size() == 714);
    CHECK(index_range(Family::Big, 1429).size() == 630);
}

TEST_CASE("simple_cycle_lengths") {
    const Length t = 1429;
    const auto lengths = simple_cycle_lengths(t);
    // Interval sizes summed by hand.
    const Length expected = (20 * t - 2) + 864 + 1002 + 589 + 800 + 798 + 799 + 794 + 807 + 799 +
                            1538 + 7;
    CHECK(expected == 37375);
    CHECK(static_cast<Length>(lengths.size()) == expected);
    CHECK(lengths.front() == 3);
    CHECK(std::adjacent_find(lengths.begin(), lengths.end(), std::greater_equal<>()) ==
          lengths.end());
    CHECK(std::binary_search(lengths.begin(), lengths.end(), 37154));
    CHECK_FALSE(std::binary_search(lengths.begin(), lengths.end(), 28581));
    CHECK(std::binary_search(lengths.begin(), lengths.end(), 27 * t));
    CHECK_FALSE(std::binary_search(lengths.begin(), lengths.end(), 27 * t + 1));
}

TEST_CASE("build_gadget_set at r = 1") {
    const auto params = params_from_r(1);
    const auto set = build_gadget_set(params);
    CHECK(set.hub_gadgets.size() == 3961);
    CHECK(set.simple_cycle_lengths.size() == 37375);

    std::int64_t cycles = static_cast<std::int64_t>(set.simple_cycle_lengths.size());
    for (const auto& lg : set.hub_gadgets) cycles += chord_cycle_count(lg.gadget.spoke_count());
    CHECK(cycles == 37375 + 3 * 3331 + 66 * 630);
    CHECK(cycles == 88'948);

    // n_t - V_core, from an independent Python evaluation of the layout.
    CHECK(set.path_len == 65'732);
    CHECK(core_vertex_count(set) + set.path_len == params.n);

    for (std::size_t k = 1; k < set.hub_gadgets.size(); ++k) {
        CHECK(set.hub_gadgets[k - 1].gadget.id < set.hub_gadgets[k].gadget.id);
    }
    std::set<Length> ids;
    for (const auto& lg : set.hub_gadgets) ids.insert(lg.gadget.id);
    for (Length l : set.simple_cycle_lengths) CHECK(ids.count(l) == 0);

    FamilyParams low = params;
    low.n = 100;
    CHECK_THROWS_AS(build_gadget_set(low), CapacityError);
}

TEST_CASE("self-labeling holds for every gadget at r = 1 and r = 2") {
    for (std::int64_t r : {1, 2}) {
        const auto t = params_from_r(r).t;
        for (Family f : kAllFamilies) {
            for (std::int64_t i : index_range(f, t).indices()) {
                const auto g = build_gadget(f, t, i);
                const auto spectrum = hub_spectrum(g);
                REQUIRE(spectrum.min() == g.id);
                REQUIRE(spectrum == multiset_of(claimed_lengths(f, t, i)));
            }
        }
    }
}

TEST_CASE("divisibility holds across r") {
    for (std::int64_t r = 1; r <= 12; ++r) {
        const auto t = params_from_r(r).t;
        for (Family f : kAllFamilies) {
            const auto range = index_range(f, t);
            CHECK_NOTHROW(build_gadget(f, t, range.first));
            CHECK_NOTHROW(build_gadget(f, t, range.last));
        }
        CHECK_NOTHROW(simple_cycle_ranges(t));
    }
}

TEST_CASE("parse_family") {
    CHECK(parse_family("a") == Family::A);
    CHECK(parse_family("BIG") == Family::Big);
    CHECK(parse_family("big") == Family::Big);
    CHECK_THROWS_AS(parse_family("F"), ParameterError);
}

TEST_CASE("reference_bounds") {
    CHECK(reference_bounds(27).shi_lower == 34);
    // Verbatim formula; exceeds the 3 edges a 3-vertex graph can have.
    CHECK(reference_bounds(3).shi_lower == 4);
    CHECK(reference_bounds(1'000'000).boros_upper == "1001980.000000");
    CHECK(reference_bounds(27).boros_upper.substr(0, 9) == "37.288381");
    CHECK_THROWS_AS(reference_bounds(2), ParameterError);

    // shi_lower - n = k iff (2k - 1)^2 <= 8n - 23 < (2k + 1)^2.
    for (std::int64_t n = 3; n <= 20000; ++n) {
        const std::int64_t k = reference_bounds(n).shi_lower - n;
        const std::int64_t m = 8 * n - 23;
        REQUIRE((2 * k - 1) * (2 * k - 1) <= m);
        REQUIRE(m < (2 * k + 1) * (2 * k + 1));
    }
    const auto nt = params_from_r(1).n_t;
    CHECK(reference_bounds(nt).shi_lower == 1'207'544'914);
}
