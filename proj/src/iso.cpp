#include "modhom/iso.hpp"

#include <algorithm>
#include <string>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

void check_size(int n, const Budget& budget) {
  if (n > budget.iso_max_vertices) {
    throw BudgetExceeded("isomorphism search limited to " + std::to_string(budget.iso_max_vertices) +
                         " vertices, got " + std::to_string(n));
  }
}

// Backtracking over bijections a -> b, assigning vertices 0..n-1 in order and
// trying images in increasing order, so leaves come out lexicographically.
class MapSearch {
 public:
  MapSearch(const Graph& a, const Graph& b, std::vector<int> forced, int cycle_length,
            const std::function<bool(const std::vector<int>&)>& leaf)
      : a_(a), b_(b), n_(a.n()), forced_(std::move(forced)), cycle_length_(cycle_length), leaf_(leaf),
        img_(n_, -1), pre_(n_, -1) {}

  void run() { extend(0); }

 private:
  // Returns false once the leaf callback asked to stop.
  bool extend(int v) {
    if (v == n_) {
      if (cycle_length_ > 0 && is_identity()) return true;
      return leaf_(img_);
    }
    int lo = 0, hi = n_;
    if (forced_[v] >= 0) lo = forced_[v], hi = forced_[v] + 1;
    for (int w = lo; w < hi; ++w) {
      if (pre_[w] >= 0 || !compatible(v, w)) continue;
      img_[v] = w;
      pre_[w] = v;
      bool ok = cycle_length_ == 0 || cycle_ok(v);
      bool keep_going = !ok || extend(v + 1);
      img_[v] = -1;
      pre_[w] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  bool compatible(int v, int w) const {
    if (a_.degree(v) != b_.degree(w)) return false;
    for (int u = 0; u < v; ++u) {
      if (a_.adjacent(u, v) != b_.adjacent(img_[u], w)) return false;
    }
    return true;
  }

  // The chain through v must close into a cycle of length 1 or p, or stay
  // open with at most p vertices.
  bool cycle_ok(int v) const {
    int len = 1;
    int x = img_[v];
    while (x != v && x >= 0 && img_[x] >= 0 && len <= cycle_length_) {
      x = img_[x];
      ++len;
    }
    if (x == v) return len == 1 || len == cycle_length_;
    int back = 0;
    for (int y = pre_[v]; y >= 0 && y != v && back <= cycle_length_; y = pre_[y]) ++back;
    // Open chain: v, its forward images up to the unassigned end, and preimages.
    int forward = len + (x >= 0 && x != v ? 1 : 0);
    return forward + back <= cycle_length_;
  }

  bool is_identity() const {
    for (int v = 0; v < n_; ++v)
      if (img_[v] != v) return false;
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  std::vector<int> forced_;
  int cycle_length_;
  const std::function<bool(const std::vector<int>&)>& leaf_;
  std::vector<int> img_;
  std::vector<int> pre_;
};

}  // namespace

bool are_isomorphic(const DistinguishedGraph& a, const DistinguishedGraph& b, const Budget& budget) {
  if (a.marks.size() != b.marks.size()) throw InputError("mark tuples have different lengths");
  const int n = a.base.n();
  check_size(std::max(n, b.base.n()), budget);
  if (n != b.base.n() || a.base.m() != b.base.m()) return false;

  std::vector<int> forced(n, -1);
  for (std::size_t i = 0; i < a.marks.size(); ++i) {
    int x = a.marks[i], y = b.marks[i];
    if (x < 0 || x >= n || y < 0 || y >= n) throw InputError("mark out of range");
    if (forced[x] >= 0 && forced[x] != y) return false;
    forced[x] = y;
  }
  // Forced map must be injective as well.
  std::vector<int> hit(n, -1);
  for (int x = 0; x < n; ++x) {
    if (forced[x] < 0) continue;
    if (hit[forced[x]] >= 0 && hit[forced[x]] != x) return false;
    hit[forced[x]] = x;
  }

  bool found = false;
  std::function<bool(const std::vector<int>&)> leaf = [&](const std::vector<int>&) {
    found = true;
    return false;
  };
  MapSearch(a.base, b.base, std::move(forced), 0, leaf).run();
  return found;
}

void for_each_automorphism(const Graph& g, const std::function<bool(const Permutation&)>& visit,
                           std::uint64_t cycle_length, const Budget& budget) {
  check_size(g.n(), budget);
  // A cycle longer than n cannot occur; clamp to keep the search's int arithmetic safe.
  int cycle = static_cast<int>(std::min<std::uint64_t>(cycle_length, g.n() + 1));
  std::function<bool(const std::vector<int>&)> leaf = [&](const std::vector<int>& img) {
    return visit(Permutation(img));
  };
  MapSearch(g, g, std::vector<int>(g.n(), -1), cycle, leaf).run();
}

std::vector<Permutation> automorphism_group(const Graph& g, const Budget& budget) {
  std::vector<Permutation> out;
  for_each_automorphism(
      g,
      [&](const Permutation& rho) {
        if (out.size() >= budget.max_group_size) {
          throw BudgetExceeded("automorphism group larger than " + std::to_string(budget.max_group_size));
        }
        out.push_back(rho);
        return true;
      },
      0, budget);
  return out;
}

}  // namespace modhom
