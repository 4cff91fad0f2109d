#pragma once

// Bi-non-crossing partitions BNC(χ) for words χ over {ℓ, r}, the doubling
// partitions used by the product formulas, the lattice Möbius function, and a
// constrained enumeration engine over BNC(χ).

#include "bifree/ncpart.hpp"
#include "bifree/rational.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bifree {

enum class Face { Left, Right };

class BNCShape {
 public:
  explicit BNCShape(std::vector<Face> word);
  /// χ_{n,m}: n left nodes followed by m right nodes.
  static BNCShape chi(int lefts, int rights);
  /// Parses "LLR" / "lLr".
  static BNCShape parse(std::string_view word);

  int size() const { return static_cast<int>(word_.size()); }
  Face face(int node) const { return word_[static_cast<std::size_t>(node)]; }
  const std::vector<Face>& word() const { return word_; }
  /// 1-based ordinal of the node among nodes of its face ("3" in 3r).
  int ordinal(int node) const;
  /// "2ℓ" / "3r".
  std::string label(int node) const;
  std::string to_string() const;

  friend bool operator==(const BNCShape&, const BNCShape&) = default;

 private:
  std::vector<Face> word_;
};

/// Left nodes in increasing order followed by right nodes in decreasing
/// order; position k of the result holds the node placed k-th. Reading a
/// partition of the nodes in this order maps BNC(χ) onto NC(n).
std::vector<int> chi_permutation(const BNCShape& shape);

class BNCPartition {
 public:
  /// Throws NotNoncrossing unless the partition is bi-non-crossing for shape.
  BNCPartition(BNCShape shape, Partition blocks);

  const BNCShape& shape() const { return shape_; }
  const Partition& partition() const { return blocks_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_.blocks(); }

  /// Image in NC(n) under chi_permutation.
  NCPartition to_nc() const;
  static BNCPartition from_nc(const BNCShape& shape, const NCPartition& nc);

  friend bool operator==(const BNCPartition&, const BNCPartition&) = default;

 private:
  BNCShape shape_;
  Partition blocks_;
};

/// "{1ℓ,1r|2ℓ}"; blocks listed in canonical order.
std::string to_string(const BNCPartition& p);
/// Parses the same form (also accepts "l" for "ℓ").
BNCPartition parse_bnc(const BNCShape& shape, std::string_view text);
/// Two-column rendering: left nodes on the left line, right nodes on the
/// right line, each row tagged with the letter of its block.
std::string render_diagram(const BNCPartition& p);

/// All of BNC(χ), graded by block count, then lexicographic on the block labels of the nodes.
std::vector<BNCPartition> enumerate_bnc(const BNCShape& shape);

bool leq(const BNCPartition& pi, const BNCPartition& sigma);

enum class Doubling {
  LeftSingleRightDouble,  ///< on χ_{n,2m}: {kℓ}, {(2k-1)r,(2k)r}
  BothDouble,             ///< on χ_{2n,2m}: {(2k-1)ℓ,(2k)ℓ}, {(2k-1)r,(2k)r}
  PrimedT,                ///< on χ_{n,2m+1}: {kℓ}, {1r}, {(2k)r,(2k+1)r}
  PrimedS,                ///< on χ_{2n+1,2m+1}: {1ℓ,1r}, {(2k)ℓ,(2k+1)ℓ}, {(2k)r,(2k+1)r}
};

/// The grouping partition of each doubling pattern. n, m >= 0; the two
/// unprimed kinds also need n + m >= 1.
BNCPartition sigma_doubling(Doubling kind, int n, int m);

/// Möbius function of [pi, sigma] in NC(n): [pi, sigma] factors over the blocks
/// V of sigma into [pi|V, 1_V] ≅ [0, K(pi|V)], and μ(0_k, 1_k) = (-1)^{k-1} Catalan(k-1).
Rational mobius_nc(const NCPartition& pi, const NCPartition& sigma);
/// Same, transported to BNC(χ) through chi_permutation. Throws NotComparable unless pi <= sigma.
Rational mobius_bnc(const BNCPartition& pi, const BNCPartition& sigma);

// ---------------------------------------------------------------------------
// Constrained enumeration over BNC(χ).

/// A visited partition: the block label of every node (word order) and the number of blocks.
struct BlockView {
  std::span<const int> label_of_node;
  int block_count;
};

/// Restrictions applied during enumeration.
struct EnumerationConstraint {
  /// Per node: 0 = may share a block with anything, otherwise blocks may only
  /// combine nodes of equal nonzero tag (tag-0 nodes join any block).
  std::vector<int> tags;
  /// When set, only partitions whose join with this partition is 1 are visited.
  std::optional<Partition> connect_with;
};

/// Visits every π ∈ BNC(shape) satisfying the constraint. Tag purity prunes
/// the search; connectivity is tested on complete partitions.
void for_each_bnc(const BNCShape& shape, const EnumerationConstraint& constraint,
                  const std::function<void(const BlockView&)>& visit);

/// Materialises a BlockView as a Partition over the nodes.
Partition to_partition(const BlockView& view);

}  // namespace bifree
