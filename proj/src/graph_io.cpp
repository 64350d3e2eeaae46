#include "scalabfs/graph_io.hpp"

#include <array>
#include <cstring>
#include <fstream>

namespace scalabfs {

namespace {

constexpr std::array<char, 4> kMagic = {'S', 'B', 'F', 'S'};

void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<unsigned char, 4> b{};
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b.data()), b.size());
}

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<unsigned char, 8> b{};
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b.data()), b.size());
}

std::uint32_t get_u32(std::istream& in) {
    std::array<unsigned char, 4> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), b.size()))
        throw ParseError("graph file truncated");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), b.size()))
        throw ParseError("graph file truncated");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
}

void check_offsets(const std::vector<EdgeIndex>& offsets, EdgeIndex m, const char* what) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != m)
        throw ParseError(std::string(what) + ": offsets must start at 0 and end at edge count");
    for (std::size_t i = 1; i < offsets.size(); ++i)
        if (offsets[i] < offsets[i - 1]) throw ParseError(std::string(what) + ": offsets not monotone");
}

}  // namespace

std::uint64_t serialized_size(const Graph& g) {
    return 24 + 2 * (static_cast<std::uint64_t>(g.num_vertices) + 1) * 8 + 2 * g.num_edges * 4;
}

void serialize(std::ostream& out, const Graph& g) {
    out.write(kMagic.data(), kMagic.size());
    put_u32(out, kGraphFormatVersion);
    put_u64(out, g.num_vertices);
    put_u64(out, g.num_edges);
    for (EdgeIndex off : g.csr_offsets) put_u64(out, off);
    for (VertexId v : g.csr_edges) put_u32(out, v);
    for (EdgeIndex off : g.csc_offsets) put_u64(out, off);
    for (VertexId v : g.csc_edges) put_u32(out, v);
    if (!out) throw ParseError("graph serialization failed (write error)");
}

Graph deserialize(std::istream& in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic)
        throw ParseError("bad magic: not a graph file");
    std::uint32_t version = get_u32(in);
    if (version != kGraphFormatVersion)
        throw ParseError("unsupported graph format version " + std::to_string(version));

    Graph g;
    std::uint64_t n = get_u64(in);
    std::uint64_t m = get_u64(in);
    if (n > std::numeric_limits<VertexId>::max())
        throw ParseError("vertex count exceeds 32-bit id space");
    g.num_vertices = static_cast<VertexId>(n);
    g.num_edges = m;

    auto read_side = [&](std::vector<EdgeIndex>& offsets, std::vector<VertexId>& edges, const char* what) {
        offsets.resize(n + 1);
        for (auto& off : offsets) off = get_u64(in);
        check_offsets(offsets, m, what);
        edges.resize(m);
        for (auto& v : edges) {
            v = get_u32(in);
            if (v >= g.num_vertices) throw ParseError(std::string(what) + ": edge id out of range");
        }
        for (VertexId u = 0; u < g.num_vertices; ++u) {
            for (EdgeIndex i = offsets[u] + 1; i < offsets[u + 1]; ++i)
                if (edges[i] < edges[i - 1])
                    throw ParseError(std::string(what) + ": neighbor list not sorted");
        }
    };
    read_side(g.csr_offsets, g.csr_edges, "csr");
    read_side(g.csc_offsets, g.csc_edges, "csc");

    // CSC must be the exact transpose of CSR. Counting-sorting the CSR in
    // source order keeps each rebuilt in-list sorted, so canonical forms
    // compare bit for bit.
    std::vector<EdgeIndex> t_offsets(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v : g.csr_edges) t_offsets[v + 1]++;
    for (std::size_t i = 1; i < t_offsets.size(); ++i) t_offsets[i] += t_offsets[i - 1];
    if (t_offsets != g.csc_offsets) throw ParseError("csc offsets are not the transpose of csr");
    std::vector<VertexId> t_edges(m);
    std::vector<EdgeIndex> cursor(t_offsets.begin(), t_offsets.end() - 1);
    for (VertexId u = 0; u < g.num_vertices; ++u)
        for (EdgeIndex i = g.csr_offsets[u]; i < g.csr_offsets[u + 1]; ++i)
            t_edges[cursor[g.csr_edges[i]]++] = u;
    if (t_edges != g.csc_edges) throw ParseError("csc edges are not the transpose of csr");
    return g;
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    serialize(out, g);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return deserialize(in);
}

}  // namespace scalabfs
