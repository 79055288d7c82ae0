#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "harmonic/graph.hpp"

namespace harmonic {

inline constexpr int kMaxTreeOrder = 16;
inline constexpr int kMaxLabeledOrder = 7;

/// Preorder depth list of a rooted tree; levels[0] = 0 and every later entry
/// is in [1, previous + 1].
struct LevelSequence {
  std::vector<int> levels;

  bool valid() const;
  bool operator==(const LevelSequence&) const = default;
};

/// Vertex i is the i-th vertex in preorder; its parent is the nearest
/// earlier vertex one level up.
Graph to_graph(const LevelSequence& seq);

/// Isomorph-free stream of the free trees on n vertices (1 <= n <= 16).
///
/// Wright, Richmond, Odlyzko and McKay's constant-amortized-time successor
/// on canonical level sequences, starting from the path rooted at its
/// center. Order is deterministic.
class FreeTreeStream {
 public:
  explicit FreeTreeStream(int n);

  std::optional<Graph> next();
  /// Level sequence of the tree most recently returned by next().
  const LevelSequence& current() const { return current_; }

 private:
  int n_;
  std::optional<std::vector<int>> layout_;
  LevelSequence current_;
};

std::vector<Graph> all_free_trees(int n);

/// Number of labeled graphs on n vertices, 2^C(n,2).
std::uint64_t labeled_graph_count(int n);

/// Labeled graph whose edge set is given by the bits of `mask`, bit k
/// standing for the k-th pair in graph6 order (0,1) (0,2) (1,2) (0,3) ...
Graph labeled_graph_from_mask(int n, std::uint64_t mask);

/// Streams every connected labeled graph on n vertices (1 <= n <= 7) whose
/// mask lies in [first, last). Disconnected candidates are skipped before a
/// Graph is materialized.
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n);
  ConnectedGraphStream(int n, std::uint64_t first, std::uint64_t last);

  std::optional<Graph> next();
  /// Mask of the graph most recently returned by next().
  std::uint64_t mask() const { return current_; }

 private:
  bool connected(std::uint64_t mask) const;

  int n_;
  std::uint64_t cursor_;
  std::uint64_t last_;
  std::uint64_t current_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

std::vector<Graph> all_connected_labeled_graphs(int n);

struct Seed {
  std::uint64_t value = 0;
};

/// xorshift64* (Vigna): state ^= state >> 12; state ^= state << 25;
/// state ^= state >> 27; output state * 0x2545F4914F6CDD1D. The seed is
/// passed through one splitmix64 step so that seed 0 is usable.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(Seed seed);

  std::uint64_t next();
  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Decodes a Prüfer sequence (length n - 2, entries in [0, n)) to a tree.
Graph prufer_decode(int n, std::span<const int> seq);

/// Uniform random spanning tree (random Prüfer sequence) plus m - (n - 1)
/// distinct random non-tree edges. Deterministic for a fixed seed. Throws
/// GraphError unless n >= 1 and n - 1 <= m <= C(n,2).
Graph random_connected_graph(int n, int m, Seed seed);

/// `count` random connected graphs; each draws n uniformly from
/// [n_min, n_max], m uniformly from [n - 1, C(n,2)] and its own seed from a
/// master generator seeded with `seed`.
std::vector<Graph> random_connected_sample(Seed seed, std::size_t count, int n_min, int n_max);

}  // namespace harmonic
