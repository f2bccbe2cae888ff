#include "mcd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "mcd/cycles.hpp"
#include "mcd/edge_list.hpp"
#include "mcd/errors.hpp"
#include "mcd/graph.hpp"
#include "mcd/verifier.hpp"

namespace mcd::cli {

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    return file;
}

void print_lengths(std::ostream& out, const std::vector<Length>& lengths) {
    for (std::size_t k = 0; k < lengths.size(); ++k) out << (k ? " " : "") << lengths[k];
}

int cmd_params(const CommandPlan& plan, std::ostream& out) {
    const auto p = params_from_r(*plan.r, plan.n);
    out << "r " << p.r << "\n"
        << "t " << p.t << "\n"
        << "n_t " << p.n_t << "\n"
        << "n " << p.n << "\n"
        << "claimed_extra_edges " << claimed_extra_edges(p.t) << "\n"
        << "claimed_edge_total " << claimed_edge_total(p.t, p.n) << "\n";
    for (Family f : kAllFamilies) {
        const auto range = index_range(f, p.t);
        out << "family " << to_string(f) << " i in [" << range.first << ", " << range.last
            << "] (" << range.size() << " gadgets)\n";
    }
    const auto ref = reference_bounds(p.n);
    out << "shi_lower(n) " << ref.shi_lower << "\n"
        << "boros_upper(n) " << ref.boros_upper << "\n";
    return kSuccess;
}

int cmd_spectrum(const CommandPlan& plan, std::ostream& out) {
    const auto p = params_from_r(*plan.r);
    const auto ref = parse_gadget_ref(*plan.gadget);
    const auto g = build_gadget(ref.family, p.t, ref.index);
    const auto computed = hub_spectrum(g).expanded();
    auto claimed = claimed_lengths(ref.family, p.t, ref.index);
    std::sort(claimed.begin(), claimed.end());

    out << "gadget " << to_string(ref.family) << ":" << ref.index << " id " << g.id
        << " cycle_len " << g.cycle_len << "\n";
    for (const auto& s : g.spokes) {
        out << "  spoke attach_pos " << s.attach_pos << " spoke_len " << s.length << "\n";
    }
    out << "computed (" << computed.size() << "): ";
    print_lengths(out, computed);
    out << "\nclaimed  (" << claimed.size() << "): ";
    print_lengths(out, claimed);
    const bool match = computed == claimed;
    out << "\n" << (match ? "match" : "MISMATCH") << "\n";
    return match ? kSuccess : kCheckFailed;
}

int cmd_materialize(const CommandPlan& plan, std::ostream& out) {
    const auto p = params_from_r(*plan.r);
    const auto ref = parse_gadget_ref(*plan.gadget);
    const auto g = build_gadget(ref.family, p.t, ref.index);
    auto file = open_output(*plan.output);
    const auto stats = export_gadget(g, file);
    out << "wrote " << *plan.output << ": vertices " << stats.vertices << " edges " << stats.edges
        << " crc32 " << checksum_hex(stats.checksum) << "\n";
    return kSuccess;
}

int cmd_enumerate(const CommandPlan& plan, std::ostream& out) {
    const auto graph = read_edge_list_file(*plan.input);
    const auto ms = enumerate_cycles(graph, plan.cap);
    out << "vertices " << graph.vertex_count() << " edges " << graph.edge_count() << " cycles "
        << ms.total() << "\n";
    out << "length multiplicity\n";
    for (const auto& [length, count] : ms.entries()) out << length << " " << count << "\n";
    return kSuccess;
}

int cmd_check(const CommandPlan& plan, std::ostream& out) {
    const auto graph = read_edge_list_file(*plan.input);
    const auto report = mcd_check(graph, plan.cap);
    out << "cycles " << report.lengths.total() << "\n";
    out << "is_mcd " << (report.is_mcd ? "true" : "false") << "\n";
    for (const auto& [length, count] : report.collisions) {
        out << "collision length " << length << " multiplicity " << count << "\n";
    }
    return report.is_mcd ? kSuccess : kCheckFailed;
}

int cmd_bound(const CommandPlan& plan, std::ostream& out) {
    const auto b = bound_constant();
    out << "squared constant " << b.squared.str() << " = 2 + " << b.excess_over_two.str() << "\n"
        << "decimal " << b.decimal << "\n"
        << "sqrt(12/5) " << b.sqrt_2_4_decimal << "\n"
        << "compare " << b.squared.str() << " vs 12/5: " << b.witness_lhs.str()
        << (b.exceeds_sqrt_2_4 ? " > " : " <= ") << b.witness_rhs.str() << " ("
        << (b.exceeds_sqrt_2_4 ? "strictly greater" : "not greater") << ")\n\n";
    const std::vector<std::int64_t> rs = plan.rs.empty() ? std::vector<std::int64_t>{1, 2, 3, 4}
                                                         : plan.rs;
    out << conjecture_report(rs);
    return kSuccess;
}

int cmd_export(const CommandPlan& plan, std::ostream& out) {
    const auto p = params_from_r(*plan.r, plan.n);
    auto file = open_output(*plan.output);
    const auto stats = export_family(p, file);
    out << "wrote " << *plan.output << ": vertices " << stats.vertices << " edges " << stats.edges
        << " crc32 " << checksum_hex(stats.checksum) << "\n";
    return kSuccess;
}

// Cheap checks that need no construction work.
void validate(const CommandPlan& plan) {
    if (plan.r) params_from_r(*plan.r, plan.n);
    for (std::int64_t r : plan.rs) params_from_r(r);
    if (plan.gadget) {
        const auto ref = parse_gadget_ref(*plan.gadget);
        const auto t = params_from_r(*plan.r).t;
        claimed_lengths(ref.family, t, ref.index);  // throws IndexError when out of range
    }
    if (plan.cap < 1 && (plan.subcommand == "enumerate" || plan.subcommand == "check")) {
        throw ParameterError("--cap must be >= 1");
    }
}

}  // namespace

GadgetRef parse_gadget_ref(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParameterError("gadget must look like FAMILY:I, got '" + text + "'");
    }
    const Family family = parse_family(text.substr(0, colon));
    const std::string index = text.substr(colon + 1);
    std::size_t used = 0;
    std::int64_t i = 0;
    try {
        i = std::stoll(index, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != index.size()) {
        throw ParameterError("gadget index must be an integer, got '" + index + "'");
    }
    return {family, i};
}

int verify_and_report(const GadgetSet& set, const FamilyParams& params,
                      const std::optional<std::string>& certificate_path, std::ostream& out) {
    const auto cert = verify_gadget_set(set, params);
    const auto& c = cert.counts;
    const auto& cl = cert.claimed;
    out << "verify r=" << params.r << " t=" << params.t << " n=" << params.n << "\n"
        << "  hub gadgets " << c.hub_gadget_count << ", plain cycles " << c.simple_cycle_count
        << ", total cycles " << c.total_cycles << "\n"
        << "  distinct lengths: " << (cert.distinct ? "yes" : "NO") << " (" << cert.collisions.size()
        << " collisions)\n"
        << "  gadget spectrum mismatches: " << cert.gadget_spectrum_mismatches.size() << "\n"
        << "  vertices " << c.total_vertices << " (core " << c.core_vertices << ", tail path "
        << c.path_len << ")\n"
        << "  edges " << c.total_edges << ", extra edges " << cl.extra_edges << " (claimed "
        << cl.claimed_extra_edges << ", delta " << cl.edge_total_delta << ")\n"
        << "  core vertices - n_t = " << cl.n_t_delta << "\n";
    for (const auto& col : cert.collisions) {
        out << "  collision length " << col.length << " x" << col.multiplicity << ":";
        for (const auto& s : col.sources) out << " " << s;
        out << "\n";
    }
    for (const auto& m : cert.gadget_spectrum_mismatches) out << "  mismatch " << m.gadget << "\n";
    if (certificate_path) {
        auto file = open_output(*certificate_path);
        file << to_json(cert);
        file.flush();
        if (!file) throw IoError("failed to write certificate '" + *certificate_path + "'");
        out << "  certificate " << *certificate_path << "\n";
    }
    out << (cert.passed() ? "verification passed" : "verification failed") << "\n";
    return cert.passed() ? kSuccess : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Builds and verifies graphs whose cycles have pairwise distinct lengths."};
    app.name("mcdgraph");
    app.require_subcommand(1);

    CommandPlan plan;
    plan.cap = kDefaultCycleCap;
    auto add_r = [&](CLI::App* sub) {
        sub->add_option("--r", plan.r, "family parameter r >= 1 (t = 1260r + 169)")->required();
    };
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", plan.n, "vertex count, at least n_t (default n_t)");
    };
    auto add_gadget = [&](CLI::App* sub) {
        sub->add_option("--gadget", plan.gadget, "FAMILY:I with FAMILY in A,B,C,D,E,BIG")
            ->required();
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", plan.cap, "abort after this many cycles")
            ->default_val(kDefaultCycleCap);
    };

    auto* params = app.add_subcommand("params", "print t, n_t and index ranges for r");
    add_r(params);
    add_n(params);

    auto* verify = app.add_subcommand("verify", "check distinctness and audit all claims");
    add_r(verify);
    add_n(verify);
    verify->add_option("--out", plan.output, "write the JSON certificate here");

    auto* spectrum = app.add_subcommand("spectrum", "print computed vs claimed gadget lengths");
    add_r(spectrum);
    add_gadget(spectrum);

    auto* materialize = app.add_subcommand("materialize", "write one gadget as an edge list");
    add_r(materialize);
    add_gadget(materialize);
    materialize->add_option("--out", plan.output, "edge list file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "cycle length multiset of an edge list");
    enumerate->add_option("--input", plan.input, "edge list file")->required();
    add_cap(enumerate);

    auto* check = app.add_subcommand("check", "test an edge list for repeated cycle lengths");
    check->add_option("--input", plan.input, "edge list file")->required();
    add_cap(check);

    auto* bound = app.add_subcommand("bound", "exact bound constant and r trajectory");
    bound->add_option("--r", plan.rs, "r values for the trajectory (default 1 2 3 4)");

    auto* export_cmd = app.add_subcommand("export", "stream the whole graph as an edge list");
    add_r(export_cmd);
    add_n(export_cmd);
    export_cmd->add_option("--out", plan.output, "edge list file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }
    plan.subcommand = app.get_subcommands().front()->get_name();

    try {
        validate(plan);
        if (plan.subcommand == "params") return cmd_params(plan, out);
        if (plan.subcommand == "verify") {
            const auto p = params_from_r(*plan.r, plan.n);
            return verify_and_report(build_gadget_set(p), p, plan.output, out);
        }
        if (plan.subcommand == "spectrum") return cmd_spectrum(plan, out);
        if (plan.subcommand == "materialize") return cmd_materialize(plan, out);
        if (plan.subcommand == "enumerate") return cmd_enumerate(plan, out);
        if (plan.subcommand == "check") return cmd_check(plan, out);
        if (plan.subcommand == "bound") return cmd_bound(plan, out);
        if (plan.subcommand == "export") return cmd_export(plan, out);
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: unknown subcommand\n";
    return kUsageError;
}

}  // namespace mcd::cli
