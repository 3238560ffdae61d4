#include "hyperind/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hyperind {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

bool parse_u64(const std::string& s, std::uint64_t& value) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, value);
    return ec == std::errc() && p == e;
}

std::uint64_t header_field(const std::string& token, const std::string& key, std::size_t line_no) {
    std::uint64_t value = 0;
    if (token.rfind(key + "=", 0) != 0 || !parse_u64(token.substr(key.size() + 1), value))
        throw Error(ErrorKind::ParseError, "expected " + key + "=<integer>, got '" + token + "'", line_no);
    return value;
}

}  // namespace

LayeredHypergraph read_hypergraph(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<LayeredHypergraph> h;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;
        if (!h) {
            if (toks.size() != 3 || toks[0] != "H")
                throw Error(ErrorKind::ParseError, "expected header 'H k=<k> n=<n>'", line_no);
            auto k = header_field(toks[1], "k", line_no);
            auto n = header_field(toks[2], "n", line_no);
            if (k < 2 || k > 64) throw Error(ErrorKind::ParseError, "k must lie in [2, 64]", line_no);
            h.emplace(static_cast<std::size_t>(n), static_cast<int>(k));
            continue;
        }
        if (toks.size() < 2 || toks.size() > static_cast<std::size_t>(h->k()))
            throw Error(ErrorKind::ParseError,
                        "edge with " + std::to_string(toks.size()) + " vertices outside [2, k]", line_no);
        std::vector<VertexId> vs;
        for (const auto& t : toks) {
            std::uint64_t v = 0;
            if (!parse_u64(t, v)) throw Error(ErrorKind::ParseError, "bad vertex id '" + t + "'", line_no);
            if (v >= h->n())
                throw Error(ErrorKind::InvalidVertex, "vertex " + t + " not below n", line_no);
            vs.push_back(static_cast<VertexId>(v));
        }
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw Error(ErrorKind::ParseError, "edge repeats a vertex", line_no);
        h->add_edge(Edge::from_sorted(std::move(vs)));
    }
    if (!h) throw Error(ErrorKind::ParseError, "missing header", line_no == 0 ? 1 : line_no);
    return std::move(*h);
}

LayeredHypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArguments, "cannot open " + path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const LayeredHypergraph& h) {
    out << "H k=" << h.k() << " n=" << h.n() << '\n';
    for (int i = 2; i <= h.k(); ++i) {
        std::vector<Edge> edges = h.layer(i);
        std::sort(edges.begin(), edges.end());
        for (const Edge& e : edges) {
            for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
            out << '\n';
        }
    }
}

void write_hypergraph_file(const std::string& path, const LayeredHypergraph& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArguments, "cannot write " + path);
    write_hypergraph(out, h);
}

std::string to_text(const LayeredHypergraph& h) {
    std::ostringstream ss;
    write_hypergraph(ss, h);
    return ss.str();
}

void write_certificate(std::ostream& out, const VertexSet& set, bool verified) {
    out << "# verified=" << (verified ? "true" : "false") << '\n';
    for (VertexId x : set) out << x << '\n';
}

void write_certificate_file(const std::string& path, const VertexSet& set, bool verified) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArguments, "cannot write " + path);
    write_certificate(out, set, verified);
}

Certificate read_certificate(std::istream& in) {
    Certificate c;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (raw.rfind("# verified=", 0) == 0) {
            c.verified = raw.substr(11) == "true";
            continue;
        }
        auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;
        std::uint64_t v = 0;
        if (toks.size() != 1 || !parse_u64(toks[0], v))
            throw Error(ErrorKind::ParseError, "expected one vertex id", line_no);
        c.vertices.push_back(static_cast<VertexId>(v));
    }
    c.vertices = make_vertex_set(std::move(c.vertices));
    return c;
}

}  // namespace hyperind
