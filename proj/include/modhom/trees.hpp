#pragma once

#include <string>
#include <vector>

#include "modhom/graph.hpp"

namespace modhom {

// Canonical string of a tree: least rooted parenthesis encoding over all roots.
std::string tree_canonical_form(const Graph& tree);

// Tree built from a rooted parenthesis encoding; vertices numbered in preorder.
Graph tree_from_encoding(const std::string& encoding);

// All non-isomorphic trees on n vertices, sorted by canonical form, each
// labelled by the preorder of its canonical encoding.
std::vector<Graph> enumerate_trees(int n);

}  // namespace modhom
