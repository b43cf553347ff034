#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hetperc/digraph.hpp"

namespace hetperc {

/// Malformed text input; the message names the source and line.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
  Edge-list grammar (one record per line, '#' starts a comment):

    n <count>          header, must precede every edge line
    <u> <v> d          arc u -> v
    <u> <v> u          undirected edge, i.e. arcs u -> v and v -> u

  Vertex ids are 0-based decimal integers below <count>. Blank lines are
  ignored. Structural problems (self-loops, duplicates) surface as
  GraphError from the Digraph factory, prefixed with the source name.
*/
Digraph read_edge_list(std::istream& in, const std::string& source = "<input>");
Digraph read_edge_list_file(const std::string& path);

/// Writes mutually inverse arc pairs as a single undirected line and every
/// other arc as a directed line, in arc order of the first member.
void write_edge_list(std::ostream& out, const Digraph& d);

/// One probability per line ('#' comments allowed); the count must equal n.
SiteProbabilities read_probabilities(std::istream& in, std::size_t n,
                                     const std::string& source = "<input>");

/// Accepts either a decimal scalar (homogeneous) or a path to a file in the
/// per-line format above.
SiteProbabilities parse_probability_spec(const std::string& spec, std::size_t n);

}  // namespace hetperc
