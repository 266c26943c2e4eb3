#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dfk/reduction.hpp"

namespace dfk {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

struct ParsedInstance {
  Graph graph;
  std::optional<int> k;  // from an optional `c k <k>` comment
};

// DIMACS-flavored instance text: `p edge <n> <m>` followed by exactly m
// lines `e <u> <v>` with 1-indexed endpoints; `c` lines are comments and
// `c k <k>` carries an optional in-band budget.  Duplicate edges, id
// range violations and count mismatches are errors with line numbers.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_file(const std::string& path);

// Canonical serialization: `c k <k>`, the problem line, then the edges
// with vertices renumbered 1..n in ascending label order.  Two graphs
// with the same labels serialize identically byte for byte.
void write_instance(std::ostream& out, const Graph& g, int k);
std::string instance_to_string(const Graph& g, int k);

// Edit-set text: lines `add <u> <v>` and `del <u> <v>`, validated against
// the graph (additions must be non-edges, deletions edges).
EditSet parse_edit_set(std::istream& in, const Graph& g);
void write_edit_set(std::ostream& out, const EditSet& e);

// Trace text, one record per line: rule id, target (pair, vertex or "-"),
// k after.  k must be non-increasing.
void write_trace(std::ostream& out, const std::vector<RuleApplication>& trace);
std::vector<RuleApplication> parse_trace(std::istream& in);

// Fold a trace over the input; reproduces the kernel instance.
Instance replay_trace(const Graph& input, int k, Mode mode,
                      const std::vector<RuleApplication>& trace);

}  // namespace dfk
