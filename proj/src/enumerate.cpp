#include "harmonic/enumerate.hpp"

#include <algorithm>
#include <string>

namespace harmonic {

bool LevelSequence::valid() const {
  if (levels.empty() || levels[0] != 0) return false;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] < 1 || levels[i] > levels[i - 1] + 1) return false;
  }
  return true;
}

Graph to_graph(const LevelSequence& seq) {
  if (!seq.valid()) throw GraphError("invalid level sequence");
  const int n = static_cast<int>(seq.levels.size());
  std::vector<Edge> edges;
  edges.reserve(n);
  // last[d] = most recent vertex seen at depth d.
  std::vector<Vertex> last(n, 0);
  for (Vertex i = 1; i < n; ++i) {
    const int d = seq.levels[i];
    edges.push_back({last[d - 1], i});
    last[d] = i;
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Free trees

namespace {

using Layout = std::vector<int>;

std::optional<Layout> next_rooted_tree(const Layout& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = static_cast<std::size_t>(p); i < result.size(); ++i) {
    result[i] = result[i - p + q];
  }
  return result;
}

// Splits at the second child of the root: `left` is the first root subtree
// (levels shifted up by one), `rest` the root with its remaining subtrees.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Layout> next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  // Jump past the invalid block to the next candidate free tree.
  const int p = static_cast<int>(left.size());
  auto fresh = next_rooted_tree(candidate, p);
  if (!fresh) return std::nullopt;
  if (candidate[p] > 2) {
    const auto new_left = split_tree(*fresh).first;
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t k = 0; k < len; ++k) {
      (*fresh)[fresh->size() - len + k] = static_cast<int>(k) + 1;
    }
  }
  return fresh;
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw GraphError("free-tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  Layout start;
  for (int i = 0; i <= n / 2; ++i) start.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
  layout_ = std::move(start);
}

std::optional<Graph> FreeTreeStream::next() {
  if (!layout_) return std::nullopt;
  if (n_ <= 2) {
    // The successor rule needs a root with a child; K_1 and K_2 are unique.
    current_.levels = *layout_;
    layout_.reset();
    return to_graph(current_);
  }
  auto tree = next_tree(*layout_);
  if (!tree) {
    layout_.reset();
    return std::nullopt;
  }
  current_.levels = *tree;
  layout_ = next_rooted_tree(*tree);
  return to_graph(current_);
}

std::vector<Graph> all_free_trees(int n) {
  std::vector<Graph> out;
  FreeTreeStream stream(n);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

// ---------------------------------------------------------------------------
// Labeled sweeps

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > kMaxLabeledOrder) {
    throw GraphError("labeled sweeps support 0 <= n <= " + std::to_string(kMaxLabeledOrder));
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph_from_mask(int n, std::uint64_t mask) {
  if (mask >= labeled_graph_count(n)) throw GraphError("edge mask out of range");
  std::vector<Edge> edges;
  int k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

ConnectedGraphStream::ConnectedGraphStream(int n)
    : ConnectedGraphStream(n, 0, labeled_graph_count(n)) {}

ConnectedGraphStream::ConnectedGraphStream(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), cursor_(first), last_(std::min(last, labeled_graph_count(n))) {
  if (n < 1) throw GraphError("labeled sweeps need n >= 1");
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }
}

bool ConnectedGraphStream::connected(std::uint64_t mask) const {
  std::uint32_t adj[kMaxLabeledOrder] = {};
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((mask >> k) & 1U) {
      adj[pairs_[k].first] |= 1U << pairs_[k].second;
      adj[pairs_[k].second] |= 1U << pairs_[k].first;
    }
  }
  const std::uint32_t all = (1U << n_) - 1;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t reach = 0;
    for (int v = 0; v < n_; ++v) {
      if ((frontier >> v) & 1U) reach |= adj[v];
    }
    frontier = reach & ~seen;
    seen |= reach;
  }
  return seen == all;
}

std::optional<Graph> ConnectedGraphStream::next() {
  while (cursor_ < last_) {
    const std::uint64_t mask = cursor_++;
    if (connected(mask)) {
      current_ = mask;
      return labeled_graph_from_mask(n_, mask);
    }
  }
  return std::nullopt;
}

std::vector<Graph> all_connected_labeled_graphs(int n) {
  std::vector<Graph> out;
  ConnectedGraphStream stream(n);
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

// ---------------------------------------------------------------------------
// Random graphs

Xorshift64Star::Xorshift64Star(Seed seed) {
  std::uint64_t z = seed.value + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  state_ = z ^ (z >> 31);
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Graph prufer_decode(int n, std::span<const int> seq) {
  if (n < 2 || seq.size() != static_cast<std::size_t>(n - 2)) {
    throw GraphError("Prüfer sequence must have length n - 2 with n >= 2");
  }
  std::vector<int> degree(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw GraphError("Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    --degree[leaf];
    --degree[x];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
        break;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, int m, Seed seed) {
  if (n < 1) throw GraphError("random graph needs n >= 1");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m) {
    throw GraphError("infeasible edge count m=" + std::to_string(m) + " for n=" + std::to_string(n));
  }
  if (n == 1) return Graph(1);

  Xorshift64Star rng(seed);
  std::vector<int> code(n - 2);
  for (int& x : code) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  Graph g = prufer_decode(n, code);

  std::vector<Edge> missing;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) missing.push_back({u, v});
    }
  }
  const std::size_t extra = static_cast<std::size_t>(m - (n - 1));
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(missing.size() - i));
    std::swap(missing[i], missing[j]);
    g.add_edge(missing[i].u, missing[i].v);
  }
  return g;
}

std::vector<Graph> random_connected_sample(Seed seed, std::size_t count, int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw GraphError("invalid order range for random sample");
  Xorshift64Star master(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(master.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    const int lo = n - 1;
    const int hi = n * (n - 1) / 2;
    const int m = lo + static_cast<int>(master.below(static_cast<std::uint64_t>(hi - lo + 1)));
    out.push_back(random_connected_graph(n, m, Seed{master.next()}));
  }
  return out;
}

}  // namespace harmonic
