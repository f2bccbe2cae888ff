#include "mcd/family.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mcd/errors.hpp"
#include "mcd/rational.hpp"

namespace mcd {

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (num % den != 0) {
        throw InternalError(std::string("non-integral ") + what + ": " + std::to_string(num) +
                            " / " + std::to_string(den));
    }
    return num / den;
}

std::string family_index_label(Family family, std::int64_t i) {
    return std::string(to_string(family)) + ":" + std::to_string(i);
}

void require_index(Family family, std::int64_t t, std::int64_t i) {
    const auto range = index_range(family, t);
    if (!range.contains(i)) {
        throw IndexError("index " + std::to_string(i) + " outside family " +
                         std::string(to_string(family)) + " range [" +
                         std::to_string(range.first) + ", " + std::to_string(range.last) + "]");
    }
}

HubGadget assert_claims(HubGadget g, const std::vector<Length>& claimed, Family family,
                        std::int64_t i) {
    const auto computed = hub_spectrum(g);
    if (computed != CycleLengthMultiset::from_lengths(claimed)) {
        throw InternalError("gadget " + family_index_label(family, i) +
                            " spectrum does not match its claimed lengths");
    }
    return g;
}

// Offsets of the ten spokes: attach = (a t + b) / 2 + c i, and internal path
// vertices p = (p_coef t - 1) / 2.
struct BigSpokeRow {
    std::int64_t attach_t;
    std::int64_t attach_const;
    std::int64_t attach_i;
    std::int64_t path_t;
};

// Rows 8 and 9 break the pattern of their neighbours; transcribed as given.
constexpr std::array<BigSpokeRow, 10> kBigSpokes{{
    {37, -115, 1, 17},
    {57, -103, 2, 19},
    {77, 315, 3, 19},
    {97, 313, 4, 21},
    {117, 313, 5, 21},
    {137, 311, 6, 23},
    {157, 309, 7, 23},
    {177, 297, 8, 25},
    {197, 301, 9, 25},
    {217, 305, 10, 27},
}};

}  // namespace

const std::array<TableRow, 66> kBigTable{{
    {27, 1, -57},  {28, 1, 7},     {29, 1, 210},  {30, 1, 0},     {31, 1, 1},    {32, 1, 0},
    {33, 1, 0},    {34, 1, -5},    {35, 1, 3},    {36, 1, 3},     {37, 1, 742},  {38, 2, -51},
    {38, 2, 216},  {40, 2, 209},   {40, 2, 0},    {42, 2, 0},     {42, 2, -1},   {44, 2, -6},
    {44, 2, -3},   {46, 2, 5},     {46, 2, 744},  {48, 3, 158},   {49, 3, 215},  {50, 3, 209},
    {51, 3, -1},   {52, 3, -1},    {53, 3, -7},   {54, 3, -4},    {55, 3, -1},   {56, 3, 746},
    {59, 4, 157},  {59, 4, 215},   {61, 4, 208},  {61, 4, -2},    {63, 4, -7},   {63, 4, -5},
    {65, 4, -2},   {65, 4, 740},   {69, 5, 157},  {70, 5, 214},   {71, 5, 207},  {72, 5, -8},
    {73, 5, -5},   {74, 5, -3},    {75, 5, 739},  {80, 6, 156},   {80, 6, 213},  {82, 6, 201},
    {82, 6, -6},   {84, 6, -3},    {84, 6, 738},  {90, 7, 155},   {91, 7, 207},  {92, 7, 203},
    {93, 7, -4},   {94, 7, 738},   {101, 8, 149}, {101, 8, 209},  {103, 8, 205}, {103, 8, 737},
    {111, 9, 151}, {112, 9, 211},  {113, 9, 946}, {122, 10, 153}, {122, 10, 952}, {132, 11, 894},
}};

void require_valid_t(std::int64_t t) {
    if (t < 1429 || (t - 169) % 1260 != 0 || (t - 169) / 1260 > kMaxR) {
        throw ParameterError("t = " + std::to_string(t) +
                             " is not of the form 1260r + 169 with 1 <= r <= " +
                             std::to_string(kMaxR));
    }
}

std::int64_t n_threshold(std::int64_t t) {
    require_valid_t(t);
    return exact_div(2119 * t * t + 15957, 4, "n_t") + 87978 * t;
}

std::int64_t claimed_extra_edges(std::int64_t t) {
    require_valid_t(t);
    return exact_div(107 * t + 7, 3, "claimed extra edges");
}

std::int64_t claimed_edge_total(std::int64_t t, std::int64_t n) {
    return n + claimed_extra_edges(t);
}

FamilyParams params_from_r(std::int64_t r, std::optional<std::int64_t> n) {
    if (r < 1) throw ParameterError("r must be >= 1, got " + std::to_string(r));
    if (r > kMaxR) {
        throw ParameterError("r must be <= " + std::to_string(kMaxR) + ", got " +
                             std::to_string(r));
    }
    FamilyParams p;
    p.r = r;
    p.t = 1260 * r + 169;
    p.n_t = n_threshold(p.t);
    p.n = n.value_or(p.n_t);
    if (p.n < p.n_t) throw ThresholdError(p.n, p.n_t);
    return p;
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::Big: return "BIG";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Family f : kAllFamilies) {
        if (upper == to_string(f)) return f;
    }
    throw ParameterError("unknown gadget family '" + std::string(text) +
                         "' (expected A, B, C, D, E or BIG)");
}

IndexRange index_range(Family family, std::int64_t t) {
    require_valid_t(t);
    switch (family) {
        case Family::A:
        case Family::B: return {1, exact_div(t - 7, 6, "(t-7)/6")};
        case Family::C: return {0, t - 1};
        case Family::D:
        case Family::E: return {0, exact_div(t - 3, 2, "(t-3)/2")};
        case Family::Big: return {58, t - 742};
    }
    throw InternalError("unreachable family");
}

std::array<Length, 3> claimed_triple(Family family, std::int64_t t, std::int64_t i) {
    require_index(family, t, i);
    const std::int64_t sixth = exact_div(t - 1, 6, "(t-1)/6");
    const std::int64_t third = exact_div(t - 1, 3, "(t-1)/3");
    const std::int64_t two_thirds = exact_div(2 * t - 2, 3, "(2t-2)/3");
    switch (family) {
        case Family::A:
            return {20 * t + i, 20 * t + third + i - 1, 20 * t + two_thirds + 2 * i - 1};
        case Family::B:
            return {20 * t + sixth + i, 20 * t + third + sixth + i, 20 * t + two_thirds + 2 * i};
        case Family::C: return {21 * t + 2 * i + 1, 23 * t + 2 * i, 25 * t + 2 * i};
        case Family::D: return {21 * t + 2 * i, 22 * t + 2 * i + 1, 25 * t + 2 * i + 1};
        case Family::E: return {23 * t + 2 * i + 1, 24 * t + 2 * i + 2, 26 * t + 2 * i + 2};
        case Family::Big: break;
    }
    throw ParameterError("claimed_triple is defined for families A..E only");
}

std::vector<Length> claimed_big_table(std::int64_t t, std::int64_t i) {
    require_index(Family::Big, t, i);
    std::vector<Length> out;
    out.reserve(kBigTable.size());
    for (const auto& row : kBigTable) out.push_back(row.t_coef * t + row.i_coef * i + row.constant);
    return out;
}

std::vector<Length> claimed_lengths(Family family, std::int64_t t, std::int64_t i) {
    if (family == Family::Big) return claimed_big_table(t, i);
    const auto triple = claimed_triple(family, t, i);
    return {triple.begin(), triple.end()};
}

HubGadget build_small_gadget(Family family, std::int64_t t, std::int64_t i) {
    require_index(family, t, i);
    // Spokes are stored by edge count: s = internal path vertices + 1.
    Length cycle_len = 0;
    Spoke spoke;
    switch (family) {
        case Family::A:
            cycle_len = exact_div(62 * t - 8, 3, "(62t-8)/3") + 2 * i + 1;
            spoke = {exact_div(61 * t - 1, 6, "(61t-1)/6") + i,
                     exact_div(59 * t - 5, 6, "(59t-5)/6") + 1};
            break;
        case Family::B:
            cycle_len = exact_div(62 * t - 5, 3, "(62t-5)/3") + 2 * i + 1;
            spoke = {exact_div(61 * t - 1, 6, "(61t-1)/6") + i, (10 * t - 1) + 1};
            break;
        case Family::C:
            cycle_len = 25 * t + 2 * i;
            spoke = {exact_div(23 * t + 2 * i + 1, 2, "(23t+2i+1)/2"),
                     exact_div(19 * t + 2 * i - 1, 2, "(19t+2i-1)/2") + 1};
            break;
        case Family::D:
            cycle_len = 25 * t + 2 * i + 1;
            spoke = {12 * t + i, (9 * t + i - 1) + 1};
            break;
        case Family::E:
            cycle_len = 26 * t + 2 * i + 2;
            spoke = {exact_div(25 * t + 2 * i + 1, 2, "(25t+2i+1)/2"),
                     exact_div(21 * t + 2 * i - 1, 2, "(21t+2i-1)/2") + 1};
            break;
        case Family::Big: return build_big_gadget(t, i);
    }
    const auto claimed = claimed_triple(family, t, i);
    HubGadget g{*std::min_element(claimed.begin(), claimed.end()), cycle_len, {spoke}};
    return assert_claims(std::move(g), {claimed.begin(), claimed.end()}, family, i);
}

HubGadget build_big_gadget(std::int64_t t, std::int64_t i) {
    require_index(Family::Big, t, i);
    HubGadget g;
    g.id = 27 * t + i - 57;
    g.cycle_len = 132 * t + 11 * i + 893 + 1;
    g.spokes.reserve(kBigSpokes.size());
    for (const auto& row : kBigSpokes) {
        g.spokes.push_back({exact_div(row.attach_t * t + row.attach_const, 2, "spoke attach") +
                                row.attach_i * i,
                            exact_div(row.path_t * t - 1, 2, "spoke path") + 1});
    }
    return assert_claims(std::move(g), claimed_big_table(t, i), Family::Big, i);
}

HubGadget build_gadget(Family family, std::int64_t t, std::int64_t i) {
    return family == Family::Big ? build_big_gadget(t, i) : build_small_gadget(family, t, i);
}

std::string LabeledGadget::label() const { return family_index_label(family, index); }

std::vector<SimpleCycleRange> simple_cycle_ranges(std::int64_t t) {
    require_valid_t(t);
    const std::int64_t sixth = (t - 1) / 6;
    const std::int64_t third = (t - 1) / 3;
    const std::int64_t two_thirds = (2 * t - 2) / 3;
    std::vector<SimpleCycleRange> out{
        {3, 20 * t, "[3, 20t]"},
        {27 * t, 27 * t, "27t"},
        {28 * t - 798, 28 * t + 64, "[28t-798, 28t+64]"},
    };
    struct Band {
        std::int64_t coef, lo, hi;
    };
    constexpr std::array<Band, 9> bands{{{29, -734, 267},
                                         {30, -531, 57},
                                         {31, -741, 58},
                                         {32, -740, 57},
                                         {33, -741, 57},
                                         {34, -741, 52},
                                         {35, -746, 60},
                                         {36, -738, 60},
                                         {37, -738, 799}}};
    auto offset = [](std::int64_t c) {
        return c < 0 ? std::to_string(c) : "+" + std::to_string(c);
    };
    for (const auto& b : bands) {
        const std::string coef = std::to_string(b.coef) + "t";
        out.push_back({b.coef * t + b.lo, b.coef * t + b.hi,
                       "[" + coef + offset(b.lo) + ", " + coef + offset(b.hi) + "]"});
    }
    const std::array<std::pair<Length, const char*>, 7> singles{{
        {20 * t + sixth, "20t+(t-1)/6"},
        {20 * t + third + sixth - 1, "20t+(t-1)/3+(t-1)/6-1"},
        {20 * t + third + sixth, "20t+(t-1)/3+(t-1)/6"},
        {20 * t + two_thirds, "20t+(2t-2)/3"},
        {21 * t - 2, "21t-2"},
        {21 * t - 1, "21t-1"},
        {26 * t, "26t"},
    }};
    for (const auto& [len, label] : singles) out.push_back({len, len, label});
    return out;
}

std::vector<Length> simple_cycle_lengths(std::int64_t t) {
    std::set<Length> lengths;
    for (const auto& range : simple_cycle_ranges(t)) {
        for (Length l = range.first; l <= range.last; ++l) lengths.insert(l);
    }
    return {lengths.begin(), lengths.end()};
}

std::int64_t core_vertex_count(const GadgetSet& set) {
    std::int64_t v = 1;
    for (const auto& lg : set.hub_gadgets) v += hub_counts(lg.gadget).vertices_excluding_hub;
    for (Length l : set.simple_cycle_lengths) v += l - 1;
    return v;
}

GadgetSet build_gadget_set(const FamilyParams& params) {
    require_valid_t(params.t);
    GadgetSet set;
    for (Family f : kAllFamilies) {
        for (std::int64_t i : index_range(f, params.t).indices()) {
            set.hub_gadgets.push_back({f, i, build_gadget(f, params.t, i)});
        }
    }
    std::sort(set.hub_gadgets.begin(), set.hub_gadgets.end(),
              [](const LabeledGadget& a, const LabeledGadget& b) {
                  return a.gadget.id < b.gadget.id;
              });
    set.simple_cycle_lengths = simple_cycle_lengths(params.t);
    const std::int64_t core = core_vertex_count(set);
    if (params.n < core) throw CapacityError(params.n, core);
    set.path_len = params.n - core;
    return set;
}

ReferenceBounds reference_bounds(std::int64_t n) {
    if (n < 3) throw ParameterError("reference bounds need n >= 3, got " + std::to_string(n));
    ReferenceBounds b;
    b.n = n;
    // floor((sqrt(m) + 1) / 2) == floor((isqrt(m) + 1) / 2) for integer m >= 0.
    const BigInt root = isqrt(BigInt(8) * n - 23);
    b.shi_lower = n + to_int64((root + 1) / 2);
    // 1.98 sqrt(n) = sqrt(39204 n / 10^4)
    const std::string extra = sqrt_decimal(ExactRational(BigInt(39204) * n, 10000), 6);
    const auto dot = extra.find('.');
    const BigInt whole = BigInt(extra.substr(0, dot)) + n;
    b.boros_upper = whole.str() + extra.substr(dot);
    return b;
}

}  // namespace mcd
