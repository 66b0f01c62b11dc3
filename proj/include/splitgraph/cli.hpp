#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "splitgraph/multigraph.hpp"

namespace splitgraph {

inline constexpr int kFormatVersion = 1;

// Graph file: '#' comments, edge lines "<label> <u> <v>", and an optional
// "vertices: <tok> ..." line for isolated vertices.
Multigraph parse_graph(const std::string& text);
std::string print_graph(const Multigraph& g);

// FILE argument: a path, or builtin:NAME[:K].
Multigraph load_graph(const std::string& source);

// Exit codes: 0 success, 1 usage/parse/precondition errors, 2 scale caps.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitgraph
