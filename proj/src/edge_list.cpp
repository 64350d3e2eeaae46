#include "scalabfs/edge_list.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <unordered_set>

namespace scalabfs {

namespace {

bool parse_u32(std::string_view tok, std::uint32_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

EdgeList load_edge_list(std::istream& in, bool directed) {
    EdgeList result;
    result.directed = directed;

    bool have_declared_n = false;
    VertexId declared_n = 0;
    VertexId max_id_seen = 0;
    bool any_edge = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            // "# vertices N" declares the vertex count up front.
            std::string_view rest = trim(sv.substr(1));
            constexpr std::string_view kw = "vertices";
            if (rest.substr(0, kw.size()) == kw) {
                std::string_view num = trim(rest.substr(kw.size()));
                VertexId n = 0;
                if (!num.empty() && parse_u32(num, n)) {
                    declared_n = n;
                    have_declared_n = true;
                }
            }
            continue;
        }

        std::size_t sep = sv.find_first_of(" \t");
        if (sep == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"src dst\"");
        std::string_view src_tok = trim(sv.substr(0, sep));
        std::string_view dst_tok = trim(sv.substr(sep));
        VertexId src = 0, dst = 0;
        if (!parse_u32(src_tok, src) || !parse_u32(dst_tok, dst))
            throw ParseError("line " + std::to_string(line_no) + ": malformed vertex id");
        if (have_declared_n && (src >= declared_n || dst >= declared_n))
            throw ParseError("line " + std::to_string(line_no) + ": vertex id >= declared count " +
                             std::to_string(declared_n));
        result.edges.emplace_back(src, dst);
        max_id_seen = std::max({max_id_seen, src, dst});
        any_edge = true;
    }

    if (have_declared_n && any_edge && max_id_seen >= declared_n)
        throw ParseError("vertex id " + std::to_string(max_id_seen) +
                         " >= declared count " + std::to_string(declared_n));
    result.num_vertices = have_declared_n ? declared_n : (any_edge ? max_id_seen + 1 : 0);
    return result;
}

void write_edge_list(std::ostream& out, const EdgeList& e) {
    out << "# vertices " << e.num_vertices << "\n";
    for (const auto& [u, v] : e.edges) out << u << " " << v << "\n";
}

EdgeList to_directed(const EdgeList& e) {
    if (e.directed) throw ConfigError("to_directed: input is already directed");
    EdgeList out;
    out.num_vertices = e.num_vertices;
    out.directed = true;
    out.edges.reserve(e.edges.size() * 2);
    for (const auto& [u, v] : e.edges) {
        out.edges.emplace_back(u, v);
        if (u != v) out.edges.emplace_back(v, u);
    }
    return out;
}

EdgeList dedup_edges(const EdgeList& e) {
    EdgeList out;
    out.num_vertices = e.num_vertices;
    out.directed = e.directed;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(e.edges.size() * 2);
    for (const auto& [u, v] : e.edges) {
        std::uint64_t key = (std::uint64_t{u} << 32) | v;
        if (seen.insert(key).second) out.edges.emplace_back(u, v);
    }
    return out;
}

}  // namespace scalabfs
