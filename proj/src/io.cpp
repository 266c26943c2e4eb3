#include "dfk/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dfk {

namespace {

bool read_int(std::istringstream& iss, int& out) {
  return static_cast<bool>(iss >> out);
}

bool has_trailing_junk(std::istringstream& iss) {
  std::string rest;
  return static_cast<bool>(iss >> rest);
}

}  // namespace

ParsedInstance parse_instance(std::istream& in) {
  ParsedInstance out;
  int lineno = 0;
  int n = -1, m = -1, seen_edges = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "c") {
      std::string word;
      if (iss >> word && word == "k") {
        int k;
        if (read_int(iss, k) && !out.k) {
          if (k < 0) throw ParseError(lineno, "negative budget in comment");
          out.k = k;
        }
      }
      continue;
    }
    if (tag == "p") {
      if (n != -1) throw ParseError(lineno, "duplicate problem line");
      std::string fmt;
      if (!(iss >> fmt) || fmt != "edge" || !read_int(iss, n) ||
          !read_int(iss, m) || n < 0 || m < 0 || has_trailing_junk(iss))
        throw ParseError(lineno, "malformed problem line, want `p edge n m`");
      out.graph = Graph::with_vertices(n);
      continue;
    }
    if (tag == "e") {
      if (n == -1) throw ParseError(lineno, "edge before the problem line");
      int u, v;
      if (!read_int(iss, u) || !read_int(iss, v) || has_trailing_junk(iss))
        throw ParseError(lineno, "malformed edge line, want `e u v`");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "vertex id out of range 1.." +
                                     std::to_string(n));
      if (u == v) throw ParseError(lineno, "self-loop");
      if (out.graph.has_edge(u, v)) throw ParseError(lineno, "duplicate edge");
      if (++seen_edges > m)
        throw ParseError(lineno, "more edges than the header declares");
      out.graph.add_edge(u, v);
      continue;
    }
    throw ParseError(lineno, "unrecognized line `" + line + "`");
  }
  if (n == -1) throw ParseError(lineno, "missing problem line");
  if (seen_edges != m)
    throw ParseError(lineno, "header declares " + std::to_string(m) +
                                 " edges but the body has " +
                                 std::to_string(seen_edges));
  return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Graph& g, int k) {
  auto vs = g.vertices();
  std::map<Vertex, int> id;
  for (std::size_t i = 0; i < vs.size(); ++i)
    id[vs[i]] = static_cast<int>(i) + 1;
  out << "c k " << k << "\n";
  out << "p edge " << vs.size() << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges())
    out << "e " << id[e.a] << " " << id[e.b] << "\n";
}

std::string instance_to_string(const Graph& g, int k) {
  std::ostringstream oss;
  write_instance(oss, g, k);
  return oss.str();
}

EditSet parse_edit_set(std::istream& in, const Graph& g) {
  EditSet out;
  int lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string op;
    int u, v;
    if (!(iss >> op) || (op != "add" && op != "del") || !read_int(iss, u) ||
        !read_int(iss, v) || has_trailing_junk(iss))
      throw ParseError(lineno, "want `add u v` or `del u v`");
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw ParseError(lineno, "unknown vertex id");
    if (u == v) throw ParseError(lineno, "self-loop");
    VertexPair p(u, v);
    if (out.additions.count(p) || out.deletions.count(p))
      throw ParseError(lineno, "pair edited twice");
    if (op == "add") {
      if (g.has_edge(p)) throw ParseError(lineno, "added pair is an edge");
      out.additions.insert(p);
    } else {
      if (!g.has_edge(p)) throw ParseError(lineno, "deleted pair is not an edge");
      out.deletions.insert(p);
    }
  }
  return out;
}

void write_edit_set(std::ostream& out, const EditSet& e) {
  for (const auto& p : e.additions) out << "add " << p.a << " " << p.b << "\n";
  for (const auto& p : e.deletions) out << "del " << p.a << " " << p.b << "\n";
}

void write_trace(std::ostream& out,
                 const std::vector<RuleApplication>& trace) {
  for (const auto& rec : trace) {
    out << to_string(rec.rule) << " ";
    if (rec.pair)
      out << rec.pair->a << " " << rec.pair->b;
    else if (rec.vertex)
      out << *rec.vertex;
    else
      out << "-";
    out << " " << rec.k_after << "\n";
  }
}

std::vector<RuleApplication> parse_trace(std::istream& in) {
  std::vector<RuleApplication> out;
  int lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    if (tokens.size() < 3 || tokens.size() > 4)
      throw ParseError(lineno, "malformed trace record");
    auto rule = rule_from_string(tokens[0]);
    if (!rule) throw ParseError(lineno, "unknown rule id " + tokens[0]);
    RuleApplication rec;
    rec.rule = *rule;
    try {
      if (tokens.size() == 3) {
        if (tokens[1] != "-") rec.vertex = std::stoi(tokens[1]);
        rec.k_after = std::stoi(tokens[2]);
      } else {
        rec.pair = VertexPair(std::stoi(tokens[1]), std::stoi(tokens[2]));
        rec.k_after = std::stoi(tokens[3]);
      }
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed trace record");
    }
    const bool wants_pair =
        rec.rule == RuleId::R1_add || rec.rule == RuleId::R2_delete;
    const bool wants_vertex = rec.rule == RuleId::R3_delete_vertex ||
                              rec.rule == RuleId::R4_delete_vertex ||
                              rec.rule == RuleId::R5_delete_vertex ||
                              rec.rule == RuleId::DD4_delete_vertex;
    const bool wants_none = rec.rule == RuleId::DD2_no_instance ||
                            rec.rule == RuleId::SIZE_NO_INSTANCE ||
                            rec.rule == RuleId::BUDGET_NO_INSTANCE;
    if ((wants_pair && !rec.pair) || (wants_vertex && !rec.vertex) ||
        (wants_none && (rec.pair || rec.vertex)) ||
        (rec.rule == RuleId::DD3_strip && !rec.pair && !rec.vertex))
      throw ParseError(lineno, "target does not fit the rule");
    if (!out.empty() && rec.k_after > out.back().k_after)
      throw ParseError(lineno, "k must be non-increasing");
    out.push_back(rec);
  }
  return out;
}

Instance replay_trace(const Graph& input, int k, Mode mode,
                      const std::vector<RuleApplication>& trace) {
  Graph g = input;
  int budget = k;
  for (const auto& rec : trace) {
    switch (rec.rule) {
      case RuleId::R1_add:
        g.add_edge(*rec.pair);
        break;
      case RuleId::R2_delete:
        g.remove_edge(*rec.pair);
        break;
      case RuleId::R3_delete_vertex:
      case RuleId::R4_delete_vertex:
      case RuleId::R5_delete_vertex:
      case RuleId::DD4_delete_vertex:
        g.remove_vertex(*rec.vertex);
        break;
      case RuleId::DD3_strip:
        if (rec.pair)
          g.remove_edge(*rec.pair);
        else
          g.remove_vertex(*rec.vertex);
        break;
      case RuleId::DD2_no_instance:
      case RuleId::SIZE_NO_INSTANCE:
      case RuleId::BUDGET_NO_INSTANCE:
        return canonical_no_instance(g, mode);
    }
    const bool edit = rec.rule == RuleId::R1_add || rec.rule == RuleId::R2_delete;
    if (rec.k_after != budget - (edit ? 1 : 0))
      throw std::invalid_argument("trace record breaks the budget invariant");
    budget = rec.k_after;
  }
  return Instance{std::move(g), budget, mode};
}

}  // namespace dfk
