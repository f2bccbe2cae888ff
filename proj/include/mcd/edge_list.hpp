#pragma once

// Text edge lists: optional '#' comment lines, then one "u v" line per
// undirected edge with u < v. Writers emit a "# vertices=N edges=M" header,
// which readers use to recover isolated trailing vertices.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mcd/family.hpp"
#include "mcd/graph.hpp"

namespace mcd {

struct ExportStats {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint32_t checksum = 0;  // crc32 of every byte written

    friend bool operator==(const ExportStats&, const ExportStats&) = default;
};

std::string checksum_hex(std::uint32_t checksum);

/// Throws IoError on malformed lines, ValidationError on self-loops or
/// parallel edges.
AdjacencyGraph read_edge_list(std::istream& in);
AdjacencyGraph read_edge_list_file(const std::string& path);

ExportStats write_edge_list(const AdjacencyGraph& graph, std::ostream& sink);

/// Same bytes as write_edge_list(materialize_gadget(g)) without building the
/// graph.
ExportStats export_gadget(const HubGadget& g, std::ostream& sink);

/// Streams the whole construction: hub 0, hub gadgets by ascending id, plain
/// cycles by ascending length, then the tail path. Memory use is independent
/// of n.
ExportStats export_family(const FamilyParams& params, std::ostream& sink);

}  // namespace mcd
