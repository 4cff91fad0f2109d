#include "bifree/oracle.hpp"

#include "bifree/error.hpp"

#include <algorithm>

namespace bifree {

namespace {

struct ClassSetup {
  BNCShape shape;
  EnumerationConstraint constraint;
  int lefts;
  int z_degree;
  int w_degree;
};

void require_range(bool ok, const PartitionClassSpec& spec) {
  if (!ok) {
    throw Error(ErrorCode::InvalidSize, "class cell (" + std::to_string(spec.n) + "," + std::to_string(spec.m) +
                                            ") out of range");
  }
}

// Tags 1/2 name the pair an entry belongs to; 0 marks an a1+a2 entry.
ClassSetup setup(const PartitionClassSpec& spec) {
  const int n = spec.n;
  const int m = spec.m;
  const bool sub_ok = [&] {
    switch (spec.family) {
      case ClassFamily::T:
      case ClassFamily::S:
        return spec.subclass == Subclass::All || spec.subclass == Subclass::E || spec.subclass == Subclass::O;
      case ClassFamily::TPrimed:
        return spec.subclass == Subclass::All;
      case ClassFamily::SPrimed:
        return spec.subclass == Subclass::All || spec.subclass == Subclass::O0 || spec.subclass == Subclass::OR ||
               spec.subclass == Subclass::OL || spec.subclass == Subclass::OLR;
    }
    return false;
  }();
  if (!sub_ok) throw Error(ErrorCode::InvalidSubclass, "subclass does not belong to this class family");

  auto alternating = [](int count, int odd_tag, int even_tag, std::vector<int>& tags) {
    for (int k = 0; k < count; ++k) tags.push_back(k % 2 == 0 ? odd_tag : even_tag);
  };

  switch (spec.family) {
    case ClassFamily::T: {
      require_range(n >= 1 && m >= 1, spec);
      ClassSetup s{BNCShape::chi(n, 2 * m), {}, n, n, m};
      s.constraint.tags.assign(static_cast<std::size_t>(n), 0);
      alternating(2 * m, 1, 2, s.constraint.tags);
      s.constraint.connect_with = sigma_doubling(Doubling::LeftSingleRightDouble, n, m).partition();
      return s;
    }
    case ClassFamily::TPrimed: {
      require_range(n >= 1 && m >= 0, spec);
      ClassSetup s{BNCShape::chi(n, 2 * m + 1), {}, n, n, m + 1};
      s.constraint.tags.assign(static_cast<std::size_t>(n), 0);
      alternating(2 * m + 1, 2, 1, s.constraint.tags);
      s.constraint.connect_with = sigma_doubling(Doubling::PrimedT, n, m).partition();
      return s;
    }
    case ClassFamily::S: {
      require_range(n >= 1 && m >= 1, spec);
      ClassSetup s{BNCShape::chi(2 * n, 2 * m), {}, 2 * n, n, m};
      alternating(2 * n, 1, 2, s.constraint.tags);
      alternating(2 * m, 1, 2, s.constraint.tags);
      s.constraint.connect_with = sigma_doubling(Doubling::BothDouble, n, m).partition();
      return s;
    }
    case ClassFamily::SPrimed: {
      require_range(n >= 0 && m >= 0, spec);
      ClassSetup s{BNCShape::chi(2 * n + 1, 2 * m + 1), {}, 2 * n + 1, n + 1, m + 1};
      alternating(2 * n + 1, 2, 1, s.constraint.tags);
      alternating(2 * m + 1, 2, 1, s.constraint.tags);
      s.constraint.connect_with = sigma_doubling(Doubling::PrimedS, n, m).partition();
      return s;
    }
  }
  throw Error(ErrorCode::InvalidSubclass, "unknown class family");
}

struct BlockCounts {
  int lefts = 0;
  int rights = 0;
  int tag = 0;
  int min_ordinal = 1 << 20;
};

std::vector<BlockCounts> block_counts(const ClassSetup& s, const BlockView& view) {
  std::vector<BlockCounts> blocks(static_cast<std::size_t>(view.block_count));
  for (int node = 0; node < s.shape.size(); ++node) {
    auto& b = blocks[static_cast<std::size_t>(view.label_of_node[node])];
    const bool left = node < s.lefts;
    (left ? b.lefts : b.rights) += 1;
    b.tag = std::max(b.tag, s.constraint.tags[node]);
    b.min_ordinal = std::min(b.min_ordinal, left ? node + 1 : node - s.lefts + 1);
  }
  return blocks;
}

bool in_subclass(const PartitionClassSpec& spec, const ClassSetup& s, const BlockView& view) {
  if (spec.subclass == Subclass::All) return true;
  const auto blocks = block_counts(s, view);
  switch (spec.family) {
    case ClassFamily::T: {
      // Right parity of the block holding 1l: tag 2 = even rights.
      const auto& first = blocks[static_cast<std::size_t>(view.label_of_node[0])];
      return (first.tag == 2) == (spec.subclass == Subclass::E);
    }
    case ClassFamily::S: {
      int best = 1 << 20;
      for (const auto& b : blocks) {
        if (b.lefts > 0 && b.rights > 0) best = std::min(best, b.min_ordinal);
      }
      return (best % 2 == 0) == (spec.subclass == Subclass::E);
    }
    case ClassFamily::SPrimed: {
      const int vl = view.label_of_node[0];
      const int vr = view.label_of_node[s.lefts];
      const bool l_has_rights = blocks[static_cast<std::size_t>(vl)].rights > 0;
      const bool r_has_lefts = blocks[static_cast<std::size_t>(vr)].lefts > 0;
      Subclass actual;
      if (vl == vr) {
        actual = Subclass::OLR;
      } else if (!l_has_rights && !r_has_lefts) {
        actual = Subclass::O0;
      } else if (!l_has_rights) {
        actual = Subclass::OR;
      } else if (!r_has_lefts) {
        actual = Subclass::OL;
      } else {
        throw Error(ErrorCode::InvalidSubclass, "partition outside the four o-subclasses");
      }
      return actual == spec.subclass;
    }
    case ClassFamily::TPrimed:
      break;
  }
  return true;
}

template <class Visit>
void for_each_in_class(const PartitionClassSpec& spec, const ClassSetup& s, Visit&& visit) {
  if (s.shape.size() > enumeration_cap()) {
    throw Error(ErrorCode::CapExceeded, "class needs " + std::to_string(s.shape.size()) + " nodes; cap is " +
                                            std::to_string(enumeration_cap()));
  }
  for_each_bnc(s.shape, s.constraint, [&](const BlockView& view) {
    if (in_subclass(spec, s, view)) visit(view);
  });
}

Rational kappa_pi(const ClassSetup& s, const BlockView& view, const BiFreeFamily& fam) {
  Rational value = 1;
  for (const auto& b : block_counts(s, view)) {
    if (b.tag == 0) {
      value *= fam.first.kappa(b.lefts, b.rights) + fam.second.kappa(b.lefts, b.rights);
    } else {
      value *= (b.tag == 1 ? fam.first : fam.second).kappa(b.lefts, b.rights);
    }
    if (value == 0) break;
  }
  return value;
}

PairDistribution extended(const PairDistribution& d, int trunc) {
  if (d.trunc() >= trunc) return d.truncated(trunc);
  PairDistribution out(trunc);
  for (int total = 1; total <= d.trunc(); ++total) {
    for (int n = 0; n <= total; ++n) out.set_kappa(n, total - n, d.kappa(n, total - n));
  }
  return out;
}

// Keeps the cells of `f` selected by `region`, zero elsewhere.
template <class Region>
Series2 masked(const Series2& f, int order, Region&& region) {
  if (f.order() < order) throw Error(ErrorCode::TruncationExceeded, "closed form computed to too low an order");
  Series2 out(order);
  for (int total = 0; total <= order; ++total) {
    for (int a = 0; a <= total; ++a) {
      if (region(a, total - a)) out.set(a, total - a, f(a, total - a));
    }
  }
  return out;
}

Series1 pinched_phi(const MultFn& f, const MultFn& g) { return phi_series(pinched_convolve(f, g)); }

int max_cell_degree(ClassFamily family, int node_bound) {
  int best = 0;
  for (int n = 0; n <= node_bound; ++n) {
    for (int m = 0; m <= node_bound; ++m) {
      const bool valid = (family == ClassFamily::T || family == ClassFamily::S) ? (n >= 1 && m >= 1) : (n >= 1 || family == ClassFamily::SPrimed);
      if (!valid) continue;
      const PartitionClassSpec spec{family, n, m, Subclass::All};
      if (class_nodes(spec) > node_bound) continue;
      const int dz = family == ClassFamily::SPrimed ? n + 1 : n;
      const int dw = (family == ClassFamily::T || family == ClassFamily::S) ? m : m + 1;
      best = std::max(best, dz + dw);
    }
  }
  return best;
}

}  // namespace

int class_nodes(const PartitionClassSpec& spec) {
  switch (spec.family) {
    case ClassFamily::T:
      return spec.n + 2 * spec.m;
    case ClassFamily::TPrimed:
      return spec.n + 2 * spec.m + 1;
    case ClassFamily::S:
      return 2 * spec.n + 2 * spec.m;
    case ClassFamily::SPrimed:
      return 2 * spec.n + 2 * spec.m + 2;
  }
  return 0;
}

std::vector<BNCPartition> enumerate_class(const PartitionClassSpec& spec) {
  const ClassSetup s = setup(spec);
  std::vector<BNCPartition> out;
  for_each_in_class(spec, s, [&](const BlockView& view) { out.emplace_back(s.shape, to_partition(view)); });
  std::sort(out.begin(), out.end(), [](const BNCPartition& a, const BNCPartition& b) {
    if (a.partition().block_count() != b.partition().block_count()) {
      return a.partition().block_count() < b.partition().block_count();
    }
    return a.blocks() < b.blocks();
  });
  return out;
}

Rational psi_sum(const PartitionClassSpec& spec, const BiFreeFamily& fam) {
  const ClassSetup s = setup(spec);
  Rational sum = 0;
  for_each_in_class(spec, s, [&](const BlockView& view) { sum += kappa_pi(s, view, fam); });
  return sum;
}

Series2 psi_series(ClassFamily family, Subclass subclass, const BiFreeFamily& fam, int node_bound, int order) {
  Series2 out(order);
  for (int n = 0; n <= node_bound; ++n) {
    for (int m = 0; m <= node_bound; ++m) {
      const PartitionClassSpec spec{family, n, m, subclass};
      const bool primed = family == ClassFamily::TPrimed || family == ClassFamily::SPrimed;
      if (family == ClassFamily::T || family == ClassFamily::S) {
        if (n < 1 || m < 1) continue;
      } else if (family == ClassFamily::TPrimed && n < 1) {
        continue;
      }
      if (class_nodes(spec) > node_bound) continue;
      const int dz = family == ClassFamily::SPrimed ? n + 1 : n;
      const int dw = primed ? m + 1 : m;
      if (dz + dw > order) continue;
      out.set(dz, dw, psi_sum(spec, fam));
    }
  }
  return out;
}

std::string to_string(LemmaId id) {
  static const char* names[] = {"T1", "T2", "T3", "S1", "S2", "S3", "S4", "S5", "S6"};
  return names[static_cast<int>(id)];
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = {LemmaId::T1, LemmaId::T2, LemmaId::T3, LemmaId::S1, LemmaId::S2,
                                           LemmaId::S3, LemmaId::S4, LemmaId::S5, LemmaId::S6};
  return ids;
}

CheckReport check_lemma(LemmaId id, const BiFreeFamily& fam, int node_bound) {
  const bool t_side = id == LemmaId::T1 || id == LemmaId::T2 || id == LemmaId::T3;
  ClassFamily lhs_family = ClassFamily::T;
  Subclass lhs_sub = Subclass::All;
  switch (id) {
    case LemmaId::T1: lhs_family = ClassFamily::T; lhs_sub = Subclass::E; break;
    case LemmaId::T2: lhs_family = ClassFamily::TPrimed; lhs_sub = Subclass::All; break;
    case LemmaId::T3: lhs_family = ClassFamily::T; lhs_sub = Subclass::O; break;
    case LemmaId::S1: lhs_family = ClassFamily::S; lhs_sub = Subclass::E; break;
    case LemmaId::S2: lhs_family = ClassFamily::SPrimed; lhs_sub = Subclass::O0; break;
    case LemmaId::S3: lhs_family = ClassFamily::SPrimed; lhs_sub = Subclass::OR; break;
    case LemmaId::S4: lhs_family = ClassFamily::SPrimed; lhs_sub = Subclass::OL; break;
    case LemmaId::S5: lhs_family = ClassFamily::SPrimed; lhs_sub = Subclass::OLR; break;
    case LemmaId::S6: lhs_family = ClassFamily::S; lhs_sub = Subclass::O; break;
  }

  // Closed forms are computed a few orders past the largest compared cell so
  // that divisions by z and w never cut into the compared region.
  const int degree = std::max(1, max_cell_degree(lhs_family, node_bound));
  const int work = degree + 3;
  const int trunc = std::max(work, node_bound);
  const BiFreeFamily f{extended(fam.first, trunc), extended(fam.second, trunc)};
  if (f.first.kappa(0, 1) != 1 || f.second.kappa(0, 1) != 1 ||
      (!t_side && (f.first.kappa(1, 0) != 1 || f.second.kappa(1, 0) != 1))) {
    throw Error(ErrorCode::NotNormalized, "lemma checks need unit means; rescale the pairs first");
  }

  const MultFn f1 = f.first.left_cumulants().truncated(work);
  const MultFn f2 = f.second.left_cumulants().truncated(work);
  const MultFn g1 = f.first.right_cumulants().truncated(work);
  const MultFn g2 = f.second.right_cumulants().truncated(work);
  const Series2 k1 = series_K(f.first).truncated(work);
  const Series2 k2 = series_K(f.second).truncated(work);
  const Series1 z = Series1::variable(work);

  auto zs = [](int order) { return Series2::z(order); };
  auto ws = [](int order) { return Series2::w(order); };

  Series2 rhs(work);
  switch (id) {
    case LemmaId::T1:
      rhs = compose_each_variable(k2, z, pinched_phi(g2, g1));
      break;
    case LemmaId::T2: {
      const Series1 q = pinched_phi(g2, g1);
      rhs = Series2::in_w(reciprocal(q.div_z())) * compose_each_variable(k2, z, q);
      break;
    }
    case LemmaId::T3: {
      const Series1 qp = pinched_phi(g1, g2);
      // Only cells with fewer nodes than the compared ones enter the product.
      const Series2 psi_o_prime = psi_series(ClassFamily::TPrimed, Subclass::All, f, node_bound, work);
      const Series2 factor = Series2::constant(work, 1) + psi_o_prime.div_w() * Series2::in_w(reciprocal(qp.div_z()));
      rhs = factor * compose_each_variable(k1, z, qp);
      break;
    }
    case LemmaId::S1:
      rhs = compose_each_variable(k2, pinched_phi(f2, f1), pinched_phi(g2, g1));
      break;
    case LemmaId::S2: {
      const Series1 p = pinched_phi(f2, f1);
      const Series1 q = pinched_phi(g2, g1);
      const Series1 left = compose(phi_series(f2), p).div_z() * reciprocal(p.div_z());
      const Series1 right = compose(phi_series(g2), q).div_z() * reciprocal(q.div_z());
      const Series2 body = Series2::in_z(left) * Series2::in_w(right);
      rhs = zs(body.order()) * ws(body.order()) * body;
      break;
    }
    case LemmaId::S3: {
      const Series2 body =
          Series2::in_z(pinched_phi(f1, f2)) * compose_each_variable(k2.div_w(), pinched_phi(f2, f1), pinched_phi(g2, g1));
      rhs = ws(body.order()) * body;
      break;
    }
    case LemmaId::S4: {
      const Series2 body =
          Series2::in_w(pinched_phi(g1, g2)) * compose_each_variable(k2.div_z(), pinched_phi(f2, f1), pinched_phi(g2, g1));
      rhs = zs(body.order()) * body;
      break;
    }
    case LemmaId::S5: {
      const Series2 body = compose_each_variable(k2.div_zw(), pinched_phi(f2, f1), pinched_phi(g2, g1));
      rhs = zs(body.order()) * ws(body.order()) * body;
      break;
    }
    case LemmaId::S6: {
      const Series2 psi_o_prime = psi_series(ClassFamily::SPrimed, Subclass::All, f, node_bound, work);
      rhs = psi_o_prime * compose_each_variable(k1.div_zw(), pinched_phi(f1, f2), pinched_phi(g1, g2));
      break;
    }
  }

  auto region = [&](int a, int b) {
    const bool primed = lhs_family == ClassFamily::TPrimed || lhs_family == ClassFamily::SPrimed;
    const int n = lhs_family == ClassFamily::SPrimed ? a - 1 : a;
    const int m = primed ? b - 1 : b;
    if (lhs_family == ClassFamily::T || lhs_family == ClassFamily::S) {
      if (n < 1 || m < 1) return false;
    } else if (n < (lhs_family == ClassFamily::TPrimed ? 1 : 0) || m < 0) {
      return false;
    }
    return class_nodes({lhs_family, n, m, Subclass::All}) <= node_bound;
  };

  const Series2 lhs = psi_series(lhs_family, lhs_sub, f, node_bound, degree);
  CheckReport report{"lemma " + to_string(id), node_bound, {}, std::nullopt};
  const Series2 closed = masked(rhs, degree, region);
  report.checks.push_back({to_string(id) + " closed form", lhs, closed, compare(lhs, closed)});

  if (id == LemmaId::S4) {
    // Exchanging the faces turns the o,l class into the o,r class.
    const BiFreeFamily mirror{f.first.mirrored(), f.second.mirrored()};
    const Series2 swapped = psi_series(ClassFamily::SPrimed, Subclass::OR, mirror, node_bound, degree);
    Series2 back(degree);
    for (int total = 0; total <= degree; ++total) {
      for (int a = 0; a <= total; ++a) back.set(a, total - a, swapped(total - a, a));
    }
    report.checks.push_back({"S4 mirror of S3 class", lhs, back, compare(lhs, back)});
  }
  return report;
}

}  // namespace bifree
