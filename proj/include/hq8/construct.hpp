#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "hq8/code.hpp"
#include "hq8/structure.hpp"

namespace hq8 {

/// Parameters of a base Hadamard Z2Z4-linear code of type 2^gamma 4^delta.
/// With `contains_u_square` the code is Z4-only and its first generator is
/// the all-ones vector (square u); otherwise gamma counts u itself and the
/// code has both binary and quaternary coordinates.
struct BaseHadamardSpec {
  int gamma = 0;
  int delta = 0;
  bool contains_u_square = false;

  int m() const { return gamma + 2 * delta - 1; }
};

/// Generators are ordered: the delta order-4 rows first, then the order-2
/// rows.  Columns enumerate their tuples in mixed radix, least significant
/// first.  Throws Error(InvalidArgument) for impossible parameters.
CodeGroup base_hadamard(const BaseHadamardSpec& spec);

/// The base code whose lift gives A(C) for a code of this shape.
BaseHadamardSpec base_spec_for(Shape shape, int m, int tau);

int chi1(int x);
Q8 chi2(int x);
std::array<int, 2> chi3(int x);

/// Applies the shape's lift componentwise to every generator of `base`.
/// Duplicated columns are placed next to each other.
CodeGroup lift_to_A(const CodeGroup& base, Shape shape);

struct ConstructionPlan {
  int m = 0;
  Shape shape = Shape::One;
  int sigma = 0;
  int tau = 0;
  int target_k = 0;
  int target_r = 0;
  /// Global component indices whose s-entry is ab rather than b.
  std::vector<int> dial;

  friend bool operator==(const ConstructionPlan&, const ConstructionPlan&) = default;
};

struct AllowablePair {
  int k = 0;
  int r = 0;
  std::string case_tag;

  friend bool operator==(const AllowablePair& a, const AllowablePair& b) { return a.k == b.k && a.r == b.r; }
  friend std::strong_ordering operator<=>(const AllowablePair& a, const AllowablePair& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.r <=> b.r;
  }
};

/// Pairs the rank/kernel case analysis admits for this shape and tau,
/// sorted by (k, r).  Throws Error(NotAllowable) when the shape does not
/// exist for (m, tau) or sigma is inconsistent.
std::vector<AllowablePair> allowable_pairs(int m, Shape shape, int sigma, int tau);
/// Union over every shape and tau at length 2^m, one entry per (k, r).
std::vector<AllowablePair> allowable_pairs(int m);

/// s generators for A per the plan's shape and dial.  Throws
/// Error(Infeasible) for shapes without a recipe.
std::vector<GroupElement> build_s_generators(const CodeGroup& A, const ConstructionPlan& plan);

/// Plan realizing (k, r) with the given shape and tau, dial filled in.
ConstructionPlan plan_for(int m, Shape shape, int tau, int k, int r);

struct Construction {
  ConstructionPlan plan;
  CodeGroup group;
  StructureReport report;
  Measurement measurement;
};

/// Runs base -> lift -> s generators and verifies the result: Hadamard,
/// expected shape, case-consistent measurement, shape-table row and column
/// duplication.  With `check_target`, the measured (k, r) must equal the
/// plan's target.  Failures raise Error(Infeasible).
Construction build(const ConstructionPlan& plan, bool check_target = true);

/// First shape in the order 1, 1*, 2, 3, 5 (and smallest tau) admitting
/// (k, r) at length 2^m.  Error(NotAllowable) lists the nearest pairs.
Construction construct_for(int m, int k, int r);

struct SweepEntry {
  int m = 0;
  Shape shape = Shape::One;
  int tau = 0;
  AllowablePair pair;
  bool ok = false;
  Shape built_shape = Shape::One;
  std::string detail;
};

/// construct_for on every allowable pair of every existing (shape, tau)
/// for m in [m_min, m_max].
std::vector<SweepEntry> coverage_sweep(int m_min, int m_max);

}  // namespace hq8
