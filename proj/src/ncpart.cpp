#include "bifree/ncpart.hpp"

#include "bifree/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace bifree {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

void require_same_size(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "partitions of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

void require_within_cap(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "ground set size must be positive");
  if (n > enumeration_cap() || n > kMaxPositions) {
    throw Error(ErrorCode::CapExceeded,
                "size " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(enumeration_cap()));
  }
}

bool graded_less(const Partition& a, const Partition& b) {
  if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
  return a.block_labels() < b.block_labels();
}

// Partition of {0..n-1} with blocks given by the union-find components.
Partition components(UnionFind& uf, int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = uf.find(i);
  return Partition::from_labels(labels);
}

}  // namespace

int enumeration_cap() {
  if (const char* env = std::getenv("BIFREE_CAP")) {
    int value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return std::min(value, kMaxPositions);
  }
  return 16;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
  return c;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw Error(ErrorCode::InvalidSize, "negative ground set size");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorCode::InvalidSize, "empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 0 || x >= n) throw Error(ErrorCode::InvalidSize, "element " + std::to_string(x + 1) + " out of range");
      if (seen[x]) throw Error(ErrorCode::InvalidSize, "element " + std::to_string(x + 1) + " repeated");
      seen[x] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::InvalidSize, "blocks do not cover the ground set");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::map<int, std::vector<int>> grouped;
  for (std::size_t i = 0; i < labels.size(); ++i) grouped[labels[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> blocks;
  blocks.reserve(grouped.size());
  for (auto& [label, block] : grouped) blocks.push_back(std::move(block));
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i});
  return Partition(n, std::move(blocks));
}

Partition Partition::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return Partition(n, {all});
}

std::vector<int> Partition::block_labels() const {
  std::vector<int> labels(static_cast<std::size_t>(n_));
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int x : blocks_[b]) labels[x] = static_cast<int>(b);
  }
  return labels;
}

const std::vector<int>& Partition::block_of(int element) const {
  for (const auto& block : blocks_) {
    if (std::binary_search(block.begin(), block.end(), element)) return block;
  }
  throw Error(ErrorCode::InvalidSize, "element " + std::to_string(element + 1) + " out of range");
}

bool Partition::is_noncrossing() const {
  // a < b < c < d with a, c in one block and b, d in another.
  const auto labels = block_labels();
  for (std::size_t x = 0; x < blocks_.size(); ++x) {
    const auto& block = blocks_[x];
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      // Elements strictly between consecutive members of a block must not
      // belong to a block that also has members outside [block[i], block[i+1]].
      for (int b = block[i] + 1; b < block[i + 1]; ++b) {
        const auto& other = blocks_[labels[b]];
        if (other.front() < block[i] || other.back() > block[i + 1]) return false;
      }
    }
  }
  return true;
}

NCPartition::NCPartition(Partition p) : Partition(std::move(p)) {
  if (!is_noncrossing()) throw Error(ErrorCode::NotNoncrossing, to_string(*this) + " is crossing");
}

// ---------------------------------------------------------------------------
// Text

Partition parse_partition(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "partition '" + std::string(text) + "': " + why);
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') fail("expected {..}");
  s = s.substr(1, s.size() - 2);

  std::vector<std::vector<int>> blocks(1);
  int n = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '|') {
      if (blocks.back().empty()) fail("empty block");
      blocks.emplace_back();
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
      if (ec != std::errc() || value < 1) fail("bad element");
      i = static_cast<std::size_t>(ptr - s.data());
      blocks.back().push_back(value - 1);
      n = std::max(n, value);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (blocks.back().empty()) fail("empty block");
  try {
    return Partition(n, std::move(blocks));
  } catch (const Error& e) {
    fail(e.what());
  }
  return Partition(0, {});
}

std::string to_string(const Partition& p) {
  std::string out = "{";
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) out += "|";
    for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(p.blocks()[b][i] + 1);
    }
  }
  return out + "}";
}

std::string render_diagram(const Partition& p) {
  const int n = p.size();
  const int width = std::max(3, static_cast<int>(std::to_string(n).size()) + 2);
  auto column = [&](int element) { return element * width + width / 2; };
  const int line_width = n * width;

  // Height of a block: one more than the tallest block strictly inside its span.
  const auto& blocks = p.blocks();
  std::vector<int> height(blocks.size(), 0);
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return blocks[a].back() - blocks[a].front() < blocks[b].back() - blocks[b].front();
  });
  for (std::size_t idx : order) {
    const auto& block = blocks[idx];
    if (block.size() == 1) continue;
    int h = 1;
    for (std::size_t other = 0; other < blocks.size(); ++other) {
      if (other == idx || blocks[other].size() == 1) continue;
      if (blocks[other].front() > block.front() && blocks[other].back() < block.back()) {
        h = std::max(h, height[other] + 1);
      }
    }
    height[idx] = h;
  }
  const int top = height.empty() ? 0 : *std::max_element(height.begin(), height.end());

  std::ostringstream out;
  for (int level = top; level >= 1; --level) {
    std::string row(static_cast<std::size_t>(line_width), ' ');
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (height[b] < level) continue;
      if (height[b] == level) {
        for (int x = column(blocks[b].front()); x <= column(blocks[b].back()); ++x) row[x] = '-';
        for (int e : blocks[b]) row[column(e)] = '+';
      } else {
        for (int e : blocks[b]) row[column(e)] = '|';
      }
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  std::string base(static_cast<std::size_t>(line_width), '-');
  for (int e = 0; e < n; ++e) {
    const std::string label = std::to_string(e + 1);
    const int start = column(e) - static_cast<int>(label.size()) / 2;
    base.replace(static_cast<std::size_t>(start), label.size(), label);
  }
  out << base << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Lattice operations

std::vector<NCPartition> enumerate_nc(int n) {
  require_within_cap(n);
  std::vector<NCPartition> out;
  out.reserve(catalan(n));
  for_each_nc_labelling(n, [&](std::span<const int> labels) { out.emplace_back(Partition::from_labels(labels)); });
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

std::vector<NCPartition> enumerate_nc_prime(int n) {
  require_within_cap(n);
  std::vector<NCPartition> out;
  for (auto& p : enumerate_nc(n)) {
    if (p.blocks().front().size() == 1) out.push_back(std::move(p));
  }
  return out;
}

bool leq(const Partition& pi, const Partition& sigma) {
  require_same_size(pi, sigma);
  const auto labels = sigma.block_labels();
  for (const auto& block : pi.blocks()) {
    for (int x : block) {
      if (labels[x] != labels[block.front()]) return false;
    }
  }
  return true;
}

bool join_is_full(const Partition& pi, const Partition& sigma) {
  require_same_size(pi, sigma);
  if (pi.size() == 0) return true;
  UnionFind uf(pi.size());
  for (const auto* p : {&pi, &sigma}) {
    for (const auto& block : p->blocks()) {
      for (int x : block) uf.unite(x, block.front());
    }
  }
  const int root = uf.find(0);
  for (int x = 1; x < pi.size(); ++x) {
    if (uf.find(x) != root) return false;
  }
  return true;
}

NCPartition nc_join(const Partition& pi, const Partition& sigma) {
  require_same_size(pi, sigma);
  const int n = pi.size();
  UnionFind uf(n);
  for (const auto* p : {&pi, &sigma}) {
    for (const auto& block : p->blocks()) {
      for (int x : block) uf.unite(x, block.front());
    }
  }
  // Merge crossing blocks until none remain.
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n && !changed; ++a) {
      for (int b = a + 1; b < n && !changed; ++b) {
        for (int c = b + 1; c < n && !changed; ++c) {
          for (int d = c + 1; d < n && !changed; ++d) {
            if (uf.find(a) == uf.find(c) && uf.find(b) == uf.find(d) && uf.find(a) != uf.find(b)) {
              uf.unite(a, b);
              changed = true;
            }
          }
        }
      }
    }
  }
  return NCPartition(components(uf, n));
}

NCPartition kreweras(const NCPartition& pi) {
  const int n = pi.size();
  const auto labels = pi.block_labels();
  const auto& blocks = pi.blocks();
  // Primed point k' sits between k and k+1. A chord k'--j' (k < j) encloses
  // exactly {k+1, ..., j}; it avoids pi iff every block of pi lies entirely
  // inside or entirely outside that interval. K(pi) joins exactly those pairs.
  UnionFind uf(n);
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      bool crosses = false;
      for (int x = k + 1; x <= j && !crosses; ++x) {
        const auto& block = blocks[labels[x]];
        crosses = block.front() <= k || block.back() > j;
      }
      if (!crosses) uf.unite(k, j);
    }
  }
  return NCPartition(components(uf, n));
}

NCPartition unique_complement_check(const NCPartition& pi) {
  const int n = pi.size();
  if (pi.blocks().front() != std::vector<int>{0}) {
    throw Error(ErrorCode::InvalidSize, to_string(pi) + " is not in NC'(n)");
  }
  // Interleaved positions: k -> 2k, k' -> 2k + 1.
  std::vector<std::vector<int>> pairs;
  for (int k = 0; k < n; ++k) pairs.push_back({2 * k, 2 * k + 1});
  const Partition sigma(2 * n, pairs);

  std::vector<NCPartition> found;
  for (const auto& tau : enumerate_nc(n)) {
    std::vector<std::vector<int>> merged;
    for (const auto& block : pi.blocks()) {
      auto& b = merged.emplace_back();
      for (int x : block) b.push_back(2 * x);
    }
    for (const auto& block : tau.blocks()) {
      auto& b = merged.emplace_back();
      for (int x : block) b.push_back(2 * x + 1);
    }
    const Partition combined(2 * n, std::move(merged));
    if (combined.is_noncrossing() && join_is_full(combined, sigma)) found.push_back(tau);
  }
  if (found.size() != 1) {
    throw Error(ErrorCode::UniquenessViolation,
                std::to_string(found.size()) + " complements found for " + to_string(pi));
  }
  return found.front();
}

Partition rotate(const Partition& p, int shift) {
  const int n = p.size();
  std::vector<std::vector<int>> blocks;
  for (const auto& block : p.blocks()) {
    auto& b = blocks.emplace_back();
    for (int x : block) b.push_back((((x + shift) % n) + n) % n);
  }
  return Partition(n, std::move(blocks));
}

}  // namespace bifree
