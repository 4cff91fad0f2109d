#pragma once

// Set partitions and the lattice NC(n) of non-crossing partitions.
//
// Ground sets are {0, ..., n-1} internally; the text form "{1,6|2,3,4|5|7}"
// and the diagrams are 1-based.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bifree {

/// Upper bound on the ground-set size of any enumeration. Defaults to 16;
/// the BIFREE_CAP environment variable raises (or lowers) it.
int enumeration_cap();

/// Catalan(n) = |NC(n)|.
std::uint64_t catalan(int n);

/// A set partition of {0..n-1} in canonical form: each block sorted, blocks
/// sorted by their minimum.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks);
  /// Builds from a block label per element (labels are arbitrary ints).
  static Partition from_labels(std::span<const int> labels);
  static Partition singletons(int n);
  static Partition full(int n);

  int size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// Index (into blocks()) of the block containing each element.
  std::vector<int> block_labels() const;
  const std::vector<int>& block_of(int element) const;

  bool is_noncrossing() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// A partition known to be non-crossing (checked on construction).
class NCPartition : public Partition {
 public:
  explicit NCPartition(Partition p);
  NCPartition(int n, std::vector<std::vector<int>> blocks) : NCPartition(Partition(n, std::move(blocks))) {}
  static NCPartition zero(int n) { return NCPartition(Partition::singletons(n)); }
  static NCPartition one(int n) { return NCPartition(Partition::full(n)); }
};

/// "{1,6|2,3,4|5|7}" (1-based). The ground-set size is the largest element.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);
/// Bracket diagram: elements on a dashed baseline, each block drawn as a bracket
/// above it with nested blocks below the blocks that enclose them.
std::string render_diagram(const Partition& p);

/// Every element of NC(n), graded by block count, then lexicographic on block_labels().
std::vector<NCPartition> enumerate_nc(int n);
/// The elements of NC(n) in which {1} is a singleton block; same ordering.
std::vector<NCPartition> enumerate_nc_prime(int n);

/// Reverse refinement order: every block of pi lies inside a block of sigma.
bool leq(const Partition& pi, const Partition& sigma);
/// True iff the union of the two block graphs is connected (set-partition join = 1_n).
bool join_is_full(const Partition& pi, const Partition& sigma);
/// Smallest non-crossing partition above both arguments.
NCPartition nc_join(const Partition& pi, const Partition& sigma);

/// Kreweras complement via the interleaved-points construction.
NCPartition kreweras(const NCPartition& pi);

/// Brute-force search over NC(n) on the primed points for the unique tau with
/// pi ∪ tau non-crossing on 1,1',...,n,n' and connected together with the
/// pairing {k,k'}; pi must lie in NC'(n). Throws UniquenessViolation unless
/// exactly one tau exists.
NCPartition unique_complement_check(const NCPartition& pi);

/// Cyclic relabelling k -> k + shift (mod n).
Partition rotate(const Partition& p, int shift);

// ---------------------------------------------------------------------------
// Constrained enumeration engine.
//
// Visits every non-crossing partition of n positions (in the given linear
// order) whose blocks are monochromatic. colors[k] < 0 marks a wildcard
// position that may join a block of any color. The visitor receives the block
// label of every position (labels numbered by first appearance).
//
// Non-crossing partitions are generated left to right with a stack of "open"
// blocks: position k either opens a new block or joins an open block, which
// closes every block opened above it. Incompatible colors prune the search.

constexpr int kMaxPositions = 32;

template <class Visitor>
void for_each_nc_labelling(int n, std::span<const int> colors, Visitor&& visit) {
  struct Frame {
    std::array<std::int8_t, kMaxPositions> stack;
    int depth;
  };
  std::array<int, kMaxPositions> labels{};
  std::array<int, kMaxPositions> block_color{};
  int blocks = 0;

  auto recurse = [&](auto&& self, int k, Frame frame) -> void {
    if (k == n) {
      visit(std::span<const int>(labels.data(), static_cast<std::size_t>(n)));
      return;
    }
    const int c = colors[static_cast<std::size_t>(k)];

    // Open a new block.
    {
      Frame next = frame;
      const int b = blocks++;
      labels[k] = b;
      block_color[b] = c;
      next.stack[next.depth++] = static_cast<std::int8_t>(b);
      self(self, k + 1, next);
      --blocks;
    }
    // Join an open block; blocks above it are closed.
    for (int i = 0; i < frame.depth; ++i) {
      const int b = frame.stack[i];
      const int bc = block_color[b];
      if (c >= 0 && bc >= 0 && bc != c) continue;
      Frame next = frame;
      next.depth = i + 1;
      labels[k] = b;
      block_color[b] = bc >= 0 ? bc : c;
      self(self, k + 1, next);
      block_color[b] = bc;
    }
  };

  if (n <= 0) return;
  Frame start{};
  start.depth = 0;
  recurse(recurse, 0, start);
}

/// Unconstrained variant: every element of NC(n) as block labels.
template <class Visitor>
void for_each_nc_labelling(int n, Visitor&& visit) {
  std::array<int, kMaxPositions> colors;
  colors.fill(-1);
  for_each_nc_labelling(n, std::span<const int>(colors.data(), static_cast<std::size_t>(n)),
                        std::forward<Visitor>(visit));
}

}  // namespace bifree
