#include "bifree/bnc.hpp"

#include "bifree/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace bifree {

namespace {

constexpr const char* kEll = "ℓ";

Partition permute_to_positions(const Partition& p, const std::vector<int>& order) {
  std::vector<int> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> blocks;
  for (const auto& block : p.blocks()) {
    auto& b = blocks.emplace_back();
    for (int x : block) b.push_back(position[x]);
  }
  return Partition(p.size(), std::move(blocks));
}

Partition positions_to_nodes(const Partition& p, const std::vector<int>& order) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : p.blocks()) {
    auto& b = blocks.emplace_back();
    for (int x : block) b.push_back(order[x]);
  }
  return Partition(p.size(), std::move(blocks));
}

// Restriction of pi to the sorted element set `support`, relabelled 0..|support|-1.
NCPartition restrict_to(const Partition& pi, const std::vector<int>& support) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : pi.blocks()) {
    if (!std::binary_search(support.begin(), support.end(), block.front())) continue;
    auto& b = blocks.emplace_back();
    for (int x : block) {
      b.push_back(static_cast<int>(std::lower_bound(support.begin(), support.end(), x) - support.begin()));
    }
  }
  return NCPartition(static_cast<int>(support.size()), std::move(blocks));
}

Rational full_interval_mobius(int k) {
  Rational value(static_cast<long>(catalan(k - 1)));
  return (k % 2 == 1) ? value : Rational(-value);
}

}  // namespace

// ---------------------------------------------------------------------------
// Shapes

BNCShape::BNCShape(std::vector<Face> word) : word_(std::move(word)) {
  if (word_.empty()) throw Error(ErrorCode::InvalidSize, "a shape needs at least one node");
}

BNCShape BNCShape::chi(int lefts, int rights) {
  if (lefts < 0 || rights < 0) throw Error(ErrorCode::InvalidSize, "negative node count");
  std::vector<Face> word(static_cast<std::size_t>(lefts), Face::Left);
  word.insert(word.end(), static_cast<std::size_t>(rights), Face::Right);
  return BNCShape(std::move(word));
}

BNCShape BNCShape::parse(std::string_view text) {
  std::vector<Face> word;
  for (char c : text) {
    if (c == 'L' || c == 'l') {
      word.push_back(Face::Left);
    } else if (c == 'R' || c == 'r') {
      word.push_back(Face::Right);
    } else {
      throw Error(ErrorCode::ParseError, "shape letters must be L or R, got '" + std::string(text) + "'");
    }
  }
  return BNCShape(std::move(word));
}

int BNCShape::ordinal(int node) const {
  const Face f = face(node);
  return static_cast<int>(std::count(word_.begin(), word_.begin() + node + 1, f));
}

std::string BNCShape::label(int node) const {
  return std::to_string(ordinal(node)) + (face(node) == Face::Left ? kEll : "r");
}

std::string BNCShape::to_string() const {
  std::string s;
  for (Face f : word_) s += f == Face::Left ? 'L' : 'R';
  return s;
}

std::vector<int> chi_permutation(const BNCShape& shape) {
  std::vector<int> order;
  for (int i = 0; i < shape.size(); ++i) {
    if (shape.face(i) == Face::Left) order.push_back(i);
  }
  for (int i = shape.size() - 1; i >= 0; --i) {
    if (shape.face(i) == Face::Right) order.push_back(i);
  }
  return order;
}

// ---------------------------------------------------------------------------
// Partitions

BNCPartition::BNCPartition(BNCShape shape, Partition blocks) : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (blocks_.size() != shape_.size()) throw Error(ErrorCode::SizeMismatch, "partition size differs from shape");
  if (!permute_to_positions(blocks_, chi_permutation(shape_)).is_noncrossing()) {
    throw Error(ErrorCode::NotNoncrossing, to_string(*this) + " is not bi-non-crossing for " + shape_.to_string());
  }
}

NCPartition BNCPartition::to_nc() const { return NCPartition(permute_to_positions(blocks_, chi_permutation(shape_))); }

BNCPartition BNCPartition::from_nc(const BNCShape& shape, const NCPartition& nc) {
  if (nc.size() != shape.size()) throw Error(ErrorCode::SizeMismatch, "partition size differs from shape");
  return BNCPartition(shape, positions_to_nodes(nc, chi_permutation(shape)));
}

std::string to_string(const BNCPartition& p) {
  std::string out = "{";
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) out += "|";
    for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
      if (i > 0) out += ",";
      out += p.shape().label(p.blocks()[b][i]);
    }
  }
  return out + "}";
}

BNCPartition parse_bnc(const BNCShape& shape, std::string_view text) {
  auto fail = [&](const std::string& why) -> BNCPartition {
    throw Error(ErrorCode::ParseError, "bi-partition '" + std::string(text) + "': " + why);
  };
  std::string s(text);
  for (std::size_t pos; (pos = s.find(kEll)) != std::string::npos;) s.replace(pos, std::string(kEll).size(), "l");
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') return fail("expected {..}");
  s = s.substr(1, s.size() - 2);

  std::vector<std::vector<int>> blocks(1);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',' || s[i] == ' ') {
      ++i;
    } else if (s[i] == '|') {
      blocks.emplace_back();
      ++i;
    } else {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i || j >= s.size() || (s[j] != 'l' && s[j] != 'r')) return fail("bad node near '" + s.substr(i) + "'");
      const int ordinal = std::stoi(s.substr(i, j - i));
      const Face f = s[j] == 'l' ? Face::Left : Face::Right;
      int node = -1;
      for (int k = 0; k < shape.size(); ++k) {
        if (shape.face(k) == f && shape.ordinal(k) == ordinal) node = k;
      }
      if (node < 0) return fail("node " + s.substr(i, j - i + 1) + " not in shape " + shape.to_string());
      blocks.back().push_back(node);
      i = j + 1;
    }
  }
  try {
    return BNCPartition(shape, Partition(shape.size(), std::move(blocks)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotNoncrossing) throw;
    return fail(e.what());
  }
}

std::string render_diagram(const BNCPartition& p) {
  const auto labels = p.partition().block_labels();
  auto block_name = [](int b) {
    std::string name;
    do {
      name.insert(name.begin(), static_cast<char>('A' + b % 26));
      b = b / 26 - 1;
    } while (b >= 0);
    return name;
  };
  // Display width; "ℓ" is three bytes but one column.
  auto width = [](const std::string& s) {
    return static_cast<int>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  auto pad = [&](std::string s, int w) { return s + std::string(static_cast<std::size_t>(std::max(0, w - width(s))), ' '); };

  std::ostringstream out;
  for (int node = 0; node < p.shape().size(); ++node) {
    const std::string name = block_name(labels[node]);
    const std::string label = p.shape().label(node);
    if (p.shape().face(node) == Face::Left) {
      out << pad(label, 4) << "*--" << pad(name, 4) << "|\n";
    } else {
      out << std::string(11, ' ') << "|" << pad("", 4 - width(name)) << name << "--* " << label << '\n';
    }
  }
  return out.str();
}

std::vector<BNCPartition> enumerate_bnc(const BNCShape& shape) {
  if (shape.size() > enumeration_cap() || shape.size() > kMaxPositions) {
    throw Error(ErrorCode::CapExceeded, "shape of length " + std::to_string(shape.size()) +
                                            " exceeds enumeration cap " + std::to_string(enumeration_cap()));
  }
  std::vector<BNCPartition> out;
  out.reserve(catalan(shape.size()));
  for_each_bnc(shape, {}, [&](const BlockView& view) { out.emplace_back(shape, to_partition(view)); });
  std::sort(out.begin(), out.end(), [](const BNCPartition& a, const BNCPartition& b) {
    const auto& pa = a.partition();
    const auto& pb = b.partition();
    if (pa.block_count() != pb.block_count()) return pa.block_count() < pb.block_count();
    return pa.block_labels() < pb.block_labels();
  });
  return out;
}

bool leq(const BNCPartition& pi, const BNCPartition& sigma) {
  if (!(pi.shape() == sigma.shape())) throw Error(ErrorCode::SizeMismatch, "partitions of different shapes");
  return leq(pi.partition(), sigma.partition());
}

BNCPartition sigma_doubling(Doubling kind, int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorCode::InvalidSize, "negative doubling size");
  std::vector<std::vector<int>> blocks;
  switch (kind) {
    case Doubling::LeftSingleRightDouble: {
      if (n + m == 0) throw Error(ErrorCode::InvalidSize, "empty doubling");
      for (int k = 0; k < n; ++k) blocks.push_back({k});
      for (int k = 0; k < m; ++k) blocks.push_back({n + 2 * k, n + 2 * k + 1});
      return BNCPartition(BNCShape::chi(n, 2 * m), Partition(n + 2 * m, std::move(blocks)));
    }
    case Doubling::BothDouble: {
      if (n + m == 0) throw Error(ErrorCode::InvalidSize, "empty doubling");
      for (int k = 0; k < n; ++k) blocks.push_back({2 * k, 2 * k + 1});
      for (int k = 0; k < m; ++k) blocks.push_back({2 * n + 2 * k, 2 * n + 2 * k + 1});
      return BNCPartition(BNCShape::chi(2 * n, 2 * m), Partition(2 * n + 2 * m, std::move(blocks)));
    }
    case Doubling::PrimedT: {
      for (int k = 0; k < n; ++k) blocks.push_back({k});
      blocks.push_back({n});
      for (int k = 0; k < m; ++k) blocks.push_back({n + 2 * k + 1, n + 2 * k + 2});
      return BNCPartition(BNCShape::chi(n, 2 * m + 1), Partition(n + 2 * m + 1, std::move(blocks)));
    }
    case Doubling::PrimedS: {
      const int lefts = 2 * n + 1;
      blocks.push_back({0, lefts});
      for (int k = 0; k < n; ++k) blocks.push_back({2 * k + 1, 2 * k + 2});
      for (int k = 0; k < m; ++k) blocks.push_back({lefts + 2 * k + 1, lefts + 2 * k + 2});
      return BNCPartition(BNCShape::chi(lefts, 2 * m + 1), Partition(lefts + 2 * m + 1, std::move(blocks)));
    }
  }
  throw Error(ErrorCode::InvalidSize, "unknown doubling kind");
}

Rational mobius_nc(const NCPartition& pi, const NCPartition& sigma) {
  if (!leq(pi, sigma)) throw Error(ErrorCode::NotComparable, to_string(pi) + " is not below " + to_string(sigma));
  Rational value = 1;
  for (const auto& block : sigma.blocks()) {
    const NCPartition complement = kreweras(restrict_to(pi, block));
    for (const auto& w : complement.blocks()) {
      value *= full_interval_mobius(static_cast<int>(w.size()));
    }
  }
  return value;
}

Rational mobius_bnc(const BNCPartition& pi, const BNCPartition& sigma) {
  if (!(pi.shape() == sigma.shape())) throw Error(ErrorCode::SizeMismatch, "partitions of different shapes");
  if (!leq(pi.partition(), sigma.partition())) {
    throw Error(ErrorCode::NotComparable, to_string(pi) + " is not below " + to_string(sigma));
  }
  return mobius_nc(pi.to_nc(), sigma.to_nc());
}

// ---------------------------------------------------------------------------
// Enumeration engine

void for_each_bnc(const BNCShape& shape, const EnumerationConstraint& constraint,
                  const std::function<void(const BlockView&)>& visit) {
  const int n = shape.size();
  if (n > kMaxPositions) throw Error(ErrorCode::CapExceeded, "shape longer than " + std::to_string(kMaxPositions));
  if (!constraint.tags.empty() && static_cast<int>(constraint.tags.size()) != n) {
    throw Error(ErrorCode::SizeMismatch, "one tag per node required");
  }
  const auto order = chi_permutation(shape);

  std::array<int, kMaxPositions> colors{};
  for (int k = 0; k < n; ++k) {
    const int tag = constraint.tags.empty() ? 0 : constraint.tags[order[k]];
    colors[k] = tag > 0 ? tag : -1;
  }

  std::vector<std::vector<int>> connect_blocks;
  if (constraint.connect_with) {
    if (constraint.connect_with->size() != n) throw Error(ErrorCode::SizeMismatch, "connecting partition size");
    for (const auto& block : constraint.connect_with->blocks()) {
      if (block.size() > 1) connect_blocks.push_back(block);
    }
  }

  std::array<int, kMaxPositions> node_labels{};
  std::array<int, kMaxPositions> parent{};
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for_each_nc_labelling(n, std::span<const int>(colors.data(), static_cast<std::size_t>(n)),
                        [&](std::span<const int> labels) {
                          int blocks = 0;
                          for (int k = 0; k < n; ++k) {
                            node_labels[order[k]] = labels[k];
                            blocks = std::max(blocks, labels[k] + 1);
                          }
                          if (constraint.connect_with) {
                            for (int b = 0; b < blocks; ++b) parent[b] = b;
                            int components = blocks;
                            for (const auto& block : connect_blocks) {
                              const int root = find(node_labels[block.front()]);
                              for (std::size_t i = 1; i < block.size(); ++i) {
                                const int other = find(node_labels[block[i]]);
                                if (other != root) {
                                  parent[other] = root;
                                  --components;
                                }
                              }
                            }
                            if (components != 1) return;
                          }
                          visit(BlockView{std::span<const int>(node_labels.data(), static_cast<std::size_t>(n)),
                                          blocks});
                        });
}

Partition to_partition(const BlockView& view) { return Partition::from_labels(view.label_of_node); }

}  // namespace bifree
