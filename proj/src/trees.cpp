#include "modhom/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

std::string rooted_encoding(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_encoding(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (tree.n() == 0) return "";
  std::string best;
  for (int r = 0; r < tree.n(); ++r) {
    std::string s = rooted_encoding(tree, r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

Graph tree_from_encoding(const std::string& encoding) {
  std::vector<Edge> es;
  std::vector<int> stack;
  int next = 0;
  for (char ch : encoding) {
    if (ch == '(') {
      int v = next++;
      if (!stack.empty()) es.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else if (ch == ')') {
      if (stack.empty()) throw InputError("unbalanced tree encoding");
      stack.pop_back();
    } else {
      throw InputError("bad character in tree encoding");
    }
  }
  if (!stack.empty()) throw InputError("unbalanced tree encoding");
  return Graph(next, es);
}

std::vector<Graph> enumerate_trees(int n) {
  if (n <= 0) return {};
  std::set<std::string> level{"()"};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> grown;
    for (const auto& enc : level) {
      Graph t = tree_from_encoding(enc);
      for (int v = 0; v < t.n(); ++v) {
        auto es = t.edges();
        es.emplace_back(v, t.n());
        grown.insert(tree_canonical_form(Graph(t.n() + 1, es)));
      }
    }
    level.swap(grown);
  }
  std::vector<Graph> out;
  for (const auto& enc : level) out.push_back(tree_from_encoding(enc));
  return out;
}

}  // namespace modhom
