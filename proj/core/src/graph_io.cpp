#include "gammoid/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gammoid/error.hpp"

namespace gammoid {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::DirectedEdge: return "directed-edge";
    case Mode::DirectedVertex: return "directed-vertex";
    case Mode::UndirectedEdge: return "undirected-edge";
    case Mode::UndirectedVertex: return "undirected-vertex";
  }
  return "directed-edge";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::DirectedEdge, Mode::DirectedVertex, Mode::UndirectedEdge, Mode::UndirectedVertex}) {
    if (to_string(m) == text) return m;
  }
  throw PreconditionError("unknown mode " + std::string(text));
}

std::vector<VertexId> LinkageProblem::sinks() const {
  if (sink) return {*sink};
  return sink_set;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

}  // namespace

LinkageProblem parse_graph(std::string_view text) {
  LinkageProblem p;
  std::size_t line_no = 0;
  std::size_t start = 0;
  auto lookup = [&](std::string_view id) {
    auto v = p.graph.find(id);
    if (!v) throw ParseError("undeclared vertex " + std::string(id), line_no);
    return *v;
  };
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view directive = words[0];
    if (directive == "node") {
      if (words.size() != 2) throw ParseError("node expects one id", line_no);
      if (p.graph.find(words[1])) throw ParseError("duplicate vertex " + std::string(words[1]), line_no);
      p.graph.add_vertex(std::string(words[1]));
    } else if (directive == "edge") {
      if (words.size() != 3 && words.size() != 4) throw ParseError("edge expects tail head [multiplicity]", line_no);
      const VertexId tail = lookup(words[1]);
      const VertexId head = lookup(words[2]);
      int multiplicity = 1;
      if (words.size() == 4) {
        auto [ptr, ec] = std::from_chars(words[3].data(), words[3].data() + words[3].size(), multiplicity);
        if (ec != std::errc{} || ptr != words[3].data() + words[3].size() || multiplicity < 1) {
          throw ParseError("bad multiplicity " + std::string(words[3]), line_no);
        }
      }
      for (int k = 0; k < multiplicity; ++k) p.graph.add_edge(tail, head);
    } else if (directive == "B" || directive == "I") {
      auto& target = directive == "B" ? p.sink_set : p.sources;
      for (std::size_t k = 1; k < words.size(); ++k) target.push_back(lookup(words[k]));
    } else if (directive == "b") {
      if (words.size() != 2) throw ParseError("b expects one id", line_no);
      if (p.sink) throw ParseError("duplicate b", line_no);
      p.sink = lookup(words[1]);
    } else if (directive == "mode") {
      if (words.size() != 2) throw ParseError("mode expects one value", line_no);
      try {
        p.mode = parse_mode(words[1]);
      } catch (const PreconditionError&) {
        throw ParseError("unknown mode " + std::string(words[1]), line_no);
      }
    } else {
      throw ParseError("unknown directive " + std::string(directive), line_no);
    }
    if (end == text.size()) break;
  }
  p.sources = normalized(std::move(p.sources));
  p.sink_set = normalized(std::move(p.sink_set));
  return p;
}

std::string write_graph(const LinkageProblem& p) {
  std::ostringstream out;
  out << "mode " << to_string(p.mode) << '\n';
  for (const auto& name : p.graph.names()) out << "node " << name << '\n';
  for (const Edge& e : p.graph.edges()) {
    out << "edge " << p.graph.name(e.tail) << ' ' << p.graph.name(e.head) << '\n';
  }
  auto list = [&](char tag, const std::vector<VertexId>& vs) {
    if (vs.empty()) return;
    out << tag;
    for (VertexId v : vs) out << ' ' << p.graph.name(v);
    out << '\n';
  };
  list('B', p.sink_set);
  list('I', p.sources);
  if (p.sink) out << "b " << p.graph.name(*p.sink) << '\n';
  return out.str();
}

LinkageProblem read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace gammoid
