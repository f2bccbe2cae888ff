#include "mcd/edge_list.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <zlib.h>

#include "mcd/errors.hpp"

namespace mcd {

namespace {

class EdgeWriter {
public:
    explicit EdgeWriter(std::ostream& sink) : sink_(sink), buffer_(kCapacity) {}

    void header(std::uint64_t vertices, std::uint64_t edges) {
        stats_.vertices = vertices;
        append("# vertices=");
        append_number(vertices);
        append(" edges=");
        append_number(edges);
        buffer_[used_++] = '\n';
    }

    void edge(VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        if (used_ + kMaxLine > kCapacity) flush();
        append_number(a);
        buffer_[used_++] = ' ';
        append_number(b);
        buffer_[used_++] = '\n';
        ++stats_.edges;
    }

    ExportStats finish() {
        flush();
        sink_.flush();
        if (!sink_) throw IoError("failed to flush edge list sink");
        return stats_;
    }

private:
    static constexpr std::size_t kCapacity = 1 << 20;
    static constexpr std::size_t kMaxLine = 48;

    void append(std::string_view text) {
        std::copy(text.begin(), text.end(), buffer_.data() + used_);
        used_ += text.size();
    }

    void append_number(std::uint64_t value) {
        char* begin = buffer_.data() + used_;
        auto [end, ec] = std::to_chars(begin, begin + kMaxLine, value);
        used_ += static_cast<std::size_t>(end - begin);
    }

    void flush() {
        if (used_ == 0) return;
        crc_ = crc32(crc_, reinterpret_cast<const Bytef*>(buffer_.data()),
                     static_cast<uInt>(used_));
        stats_.checksum = static_cast<std::uint32_t>(crc_);
        sink_.write(buffer_.data(), static_cast<std::streamsize>(used_));
        if (!sink_) throw IoError("failed to write edge list");
        used_ = 0;
    }

    std::ostream& sink_;
    std::vector<char> buffer_;
    std::size_t used_ = 0;
    uLong crc_ = crc32(0L, Z_NULL, 0);
    ExportStats stats_;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_id(std::string_view& rest, VertexId& out) {
    rest = rest.substr(std::min(rest.size(), rest.find_first_not_of(" \t")));
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
    if (ec != std::errc{} || ptr == rest.data()) return false;
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return true;
}

}  // namespace

std::string checksum_hex(std::uint32_t checksum) {
    std::array<char, 9> buf{};
    std::snprintf(buf.data(), buf.size(), "%08x", checksum);
    return buf.data();
}

AdjacencyGraph read_edge_list(std::istream& in) {
    AdjacencyGraph graph;
    VertexId declared = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (view.front() == '#') {
            constexpr std::string_view key = "vertices=";
            if (auto pos = view.find(key); pos != std::string_view::npos) {
                std::string_view rest = view.substr(pos + key.size());
                parse_id(rest, declared);
            }
            continue;
        }
        VertexId a = 0;
        VertexId b = 0;
        std::string_view rest = view;
        if (!parse_id(rest, a) || !parse_id(rest, b) || !trim(rest).empty()) {
            throw IoError("line " + std::to_string(line_no) + ": expected two vertex ids, got '" +
                          std::string(view) + "'");
        }
        graph.add_edge(a, b);
    }
    if (in.bad()) throw IoError("failed to read edge list");
    if (declared > graph.vertex_count()) graph.set_vertex_count(declared);
    graph.require_simple();
    return graph;
}

AdjacencyGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_edge_list(in);
}

ExportStats write_edge_list(const AdjacencyGraph& graph, std::ostream& sink) {
    EdgeWriter writer(sink);
    writer.header(graph.vertex_count(), graph.edge_count());
    for (const auto& e : graph.edges()) writer.edge(e.u, e.v);
    return writer.finish();
}

ExportStats export_gadget(const HubGadget& g, std::ostream& sink) {
    const auto counts = hub_counts(g);
    EdgeWriter writer(sink);
    writer.header(static_cast<std::uint64_t>(counts.vertices_excluding_hub) + 1,
                  static_cast<std::uint64_t>(counts.edges));
    for_each_gadget_edge(g, 0, 1, [&](VertexId a, VertexId b) { writer.edge(a, b); });
    return writer.finish();
}

ExportStats export_family(const FamilyParams& params, std::ostream& sink) {
    const GadgetSet set = build_gadget_set(params);
    std::uint64_t edges = static_cast<std::uint64_t>(set.path_len);
    for (const auto& lg : set.hub_gadgets) {
        edges += static_cast<std::uint64_t>(hub_counts(lg.gadget).edges);
    }
    for (Length l : set.simple_cycle_lengths) edges += static_cast<std::uint64_t>(l);

    EdgeWriter writer(sink);
    writer.header(static_cast<std::uint64_t>(params.n), edges);
    auto emit = [&](VertexId a, VertexId b) { writer.edge(a, b); };
    VertexId next = 1;
    for (const auto& lg : set.hub_gadgets) next = for_each_gadget_edge(lg.gadget, 0, next, emit);
    for (Length l : set.simple_cycle_lengths) next = for_each_cycle_edge(l, 0, next, emit);
    VertexId prev = 0;
    for (std::int64_t k = 0; k < set.path_len; ++k) {
        writer.edge(prev, next);
        prev = next++;
    }
    ExportStats stats = writer.finish();
    if (next != static_cast<VertexId>(params.n) || stats.edges != edges) {
        throw InternalError("export emitted " + std::to_string(next) + " vertices and " +
                            std::to_string(stats.edges) + " edges, expected " +
                            std::to_string(params.n) + " and " + std::to_string(edges));
    }
    return stats;
}

}  // namespace mcd
