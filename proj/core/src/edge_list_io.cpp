#include "hetperc/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace hetperc {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

template <class T>
bool parse_number(const std::string& text, T& value) {
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw FormatError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Digraph read_edge_list(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<EdgeSpec> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (!n) {
      std::size_t count = 0;
      if (tok.size() != 2 || tok[0] != "n" || !parse_number(tok[1], count) || count == 0) {
        fail(source, line_no, "expected header 'n <count>' with count >= 1");
      }
      n = count;
      continue;
    }
    if (tok.size() != 3) fail(source, line_no, "expected '<u> <v> d|u'");
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_number(tok[0], u) || !parse_number(tok[1], v)) {
      fail(source, line_no, "vertex ids must be non-negative integers");
    }
    if (u >= *n || v >= *n) fail(source, line_no, "vertex id out of range [0, " + std::to_string(*n) + ")");
    if (u == v) fail(source, line_no, "self-loop " + tok[0] + " " + tok[1]);
    EdgeKind kind;
    if (tok[2] == "d") {
      kind = EdgeKind::directed;
    } else if (tok[2] == "u") {
      kind = EdgeKind::undirected;
    } else {
      fail(source, line_no, "edge kind must be 'd' or 'u', got '" + tok[2] + "'");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), kind});
  }
  if (!n) throw FormatError(source + ": missing 'n <count>' header");
  try {
    return Digraph::from_edge_list(*n, edges);
  } catch (const GraphError& e) {
    throw GraphError(source + ": " + e.what());
  }
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << "n " << d.vertex_count() << '\n';
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const Arc& arc = d.arc(a);
    if (d.has_inverse(a)) {
      if (d.inverse(a) < a) continue;
      out << arc.tail << ' ' << arc.head << " u\n";
    } else {
      out << arc.tail << ' ' << arc.head << " d\n";
    }
  }
}

SiteProbabilities read_probabilities(std::istream& in, std::size_t n, const std::string& source) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    double p = 0.0;
    if (tok.size() != 1 || !parse_number(tok[0], p)) {
      fail(source, line_no, "expected one probability per line");
    }
    if (!(p >= 0.0 && p <= 1.0)) fail(source, line_no, "probability outside [0, 1]");
    values.push_back(p);
  }
  if (values.size() != n) {
    throw FormatError(source + ": expected " + std::to_string(n) + " probabilities, found " +
                      std::to_string(values.size()));
  }
  return SiteProbabilities(std::move(values));
}

SiteProbabilities parse_probability_spec(const std::string& spec, std::size_t n) {
  double p = 0.0;
  if (parse_number(spec, p)) {
    if (!(p >= 0.0 && p <= 1.0)) throw FormatError("probability " + spec + " outside [0, 1]");
    return SiteProbabilities::homogeneous(n, p);
  }
  std::ifstream in(spec);
  if (!in) throw FormatError(spec + ": neither a probability nor a readable file");
  return read_probabilities(in, n, spec);
}

}  // namespace hetperc
