#include "harmonic/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "harmonic/graph6.hpp"

namespace harmonic {

namespace {

// ---------------------------------------------------------------------------
// Trees: AHU encoding rooted at the centroid.

class TreeEncoder {
 public:
  explicit TreeEncoder(const Graph& g) : g_(g), code_(g.order()), kids_(g.order()) {}

  const std::string& encode(Vertex v, Vertex parent) {
    auto& kids = kids_[v];
    kids.clear();
    for (Vertex w : g_.neighbors(v)) {
      if (w != parent) {
        encode(w, v);
        kids.push_back(w);
      }
    }
    std::sort(kids.begin(), kids.end(),
              [&](Vertex a, Vertex b) { return code_[a] < code_[b]; });
    std::string s = "(";
    for (Vertex w : kids) s += code_[w];
    s += ")";
    code_[v] = std::move(s);
    return code_[v];
  }

  // Preorder labels following the sorted child order of the last encode().
  std::vector<Vertex> preorder_labels(Vertex root) const {
    std::vector<Vertex> label(g_.order(), -1);
    std::vector<Vertex> stack{root};
    Vertex next = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      label[v] = next++;
      const auto& kids = kids_[v];
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return label;
  }

 private:
  const Graph& g_;
  std::vector<std::string> code_;
  std::vector<std::vector<Vertex>> kids_;
};

std::vector<Vertex> centroids(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> sub(n, 1);
  std::vector<int> heaviest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v != 0) {
      sub[parent[v]] += sub[v];
      heaviest[parent[v]] = std::max(heaviest[parent[v]], sub[v]);
    }
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (std::max(heaviest[v], n - sub[v]) * 2 <= n) result.push_back(v);
  }
  return result;
}

std::string tree_canonical_form(const Graph& g) {
  TreeEncoder enc(g);
  Vertex best_root = -1;
  std::string best;
  for (Vertex c : centroids(g)) {
    std::string code = enc.encode(c, -1);
    if (best_root < 0 || code < best) {
      best = std::move(code);
      best_root = c;
    }
  }
  enc.encode(best_root, -1);
  const auto label = enc.preorder_labels(best_root);
  return to_graph6(g.relabeled(label));
}

// ---------------------------------------------------------------------------
// General graphs: individualization/refinement over bitmask adjacency.

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<Vertex>>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
    }
  }

  std::string run() {
    Cells cells(1);
    for (Vertex v = 0; v < n_; ++v) cells[0].push_back(v);
    search(std::move(cells));
    return best_;
  }

 private:
  void refine(Cells& cells) const {
    for (;;) {
      std::vector<Mask> cell_mask(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_mask[c] |= Mask{1} << v;
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> sig(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c) {
            sig[c] = std::popcount(adj_[v] & cell_mask[c]);
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const Mask ma = adj_[a] & ~(Mask{1} << b);
    const Mask mb = adj_[b] & ~(Mask{1} << a);
    return ma == mb;
  }

  std::string leaf_code(const Cells& cells) const {
    std::array<Vertex, kCanonicalMaxOrder> at{};
    for (std::size_t i = 0; i < cells.size(); ++i) at[i] = cells[i].front();
    std::string out;
    out.push_back(static_cast<char>(n_ + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | static_cast<int>((adj_[at[j]] >> at[i]) & 1U);
        if (++filled == 6) {
          out.push_back(static_cast<char>(acc + 63));
          acc = filled = 0;
        }
      }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::string code = leaf_code(cells);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : cells[idx]) {
      // Swapping twins is an automorphism fixing every individualized
      // vertex, so their subtrees produce the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); })) {
        continue;
      }
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != idx) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  int n_;
  std::array<Mask, kCanonicalMaxOrder> adj_{};
  std::string best_;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw GraphError("canonical_form supports n <= " + std::to_string(kCanonicalMaxOrder) +
                     ", got n=" + std::to_string(g.order()));
  }
  if (g.order() <= 1) return to_graph6(g);
  if (is_tree(g)) return tree_canonical_form(g);
  return CanonicalSearch(g).run();
}

}  // namespace harmonic
