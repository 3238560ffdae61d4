#ifndef HYPERIND_IO_HPP
#define HYPERIND_IO_HPP

#include <iosfwd>
#include <string>

#include "hyperind/core.hpp"

namespace hyperind {

// Text format:
//   H k=<k> n=<n>
//   <v1> <v2> ... <vi>      one edge per line, uniformity = token count
// '#' starts a comment. Edge lines may be unsorted; output is canonical
// (layers ascending, edges lexicographic within a layer).

LayeredHypergraph read_hypergraph(std::istream& in);
LayeredHypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const LayeredHypergraph& h);
void write_hypergraph_file(const std::string& path, const LayeredHypergraph& h);
std::string to_text(const LayeredHypergraph& h);

// Independent-set certificate: "# verified=<bool>" then one vertex per line.
void write_certificate(std::ostream& out, const VertexSet& set, bool verified);
void write_certificate_file(const std::string& path, const VertexSet& set, bool verified);

struct Certificate {
    bool verified = false;
    VertexSet vertices;
};
Certificate read_certificate(std::istream& in);

}  // namespace hyperind

#endif
