#pragma once

// Brute-force class sums behind the T- and S-product formulas: enumerate the
// restricted partition classes, add up their cumulant products directly, and
// compare against closed forms assembled from pinched convolutions.

#include "bifree/bicum.hpp"
#include "bifree/bnc.hpp"
#include "bifree/transforms.hpp"

#include <string>
#include <vector>

namespace bifree {

enum class ClassFamily { T, TPrimed, S, SPrimed };
enum class Subclass { All, E, O, O0, OR, OL, OLR };

/// T:        BNC(n,2m), n,m >= 1, coefficient z^n w^m.
/// TPrimed:  BNC(n,2m+1), n >= 1, m >= 0, coefficient z^n w^{m+1}.
/// S:        BNC(2n,2m), n,m >= 1, coefficient z^n w^m.
/// SPrimed:  BNC(2n+1,2m+1), n,m >= 0, coefficient z^{n+1} w^{m+1}.
struct PartitionClassSpec {
  ClassFamily family;
  int n;
  int m;
  Subclass subclass = Subclass::All;
};

/// Nodes of the underlying shape.
int class_nodes(const PartitionClassSpec& spec);

/// The class members, in the order of enumerate_bnc. InvalidSubclass when the
/// subclass does not belong to the family, InvalidSize for out-of-range n, m.
std::vector<BNCPartition> enumerate_class(const PartitionClassSpec& spec);

/// Sum of kappa_pi over the class, with the alternating entries of the family's word.
Rational psi_sum(const PartitionClassSpec& spec, const BiFreeFamily& fam);

/// The class sums as a series: every cell whose shape has at most node_bound
/// nodes is filled; other cells are 0. The series is declared at `order`.
Series2 psi_series(ClassFamily family, Subclass subclass, const BiFreeFamily& fam, int node_bound, int order);

enum class LemmaId { T1, T2, T3, S1, S2, S3, S4, S5, S6 };

std::string to_string(LemmaId id);
const std::vector<LemmaId>& all_lemmas();

/// Compares the enumerated class sum with the lemma's closed form on every
/// cell whose shape has at most node_bound nodes. Both pairs need unit means
/// (unit right means suffice for T1-T3); the tables are extended with zeros
/// when shorter than the closed forms require.
CheckReport check_lemma(LemmaId id, const BiFreeFamily& fam, int node_bound);

}  // namespace bifree
