#include "hq8/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hq8/error.hpp"

namespace hq8 {
namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidArgument, why); }
[[noreturn]] void infeasible(const std::string& why) { throw Error(ErrorCode::Infeasible, why); }

std::string describe(Shape shape, int m, int tau) {
  std::ostringstream os;
  os << "shape " << shape_label(shape) << " at m=" << m << ", tau=" << tau;
  return os.str();
}

// One row per generator, one column per coordinate; columns are appended.
struct Matrix {
  std::vector<std::vector<std::uint8_t>> rows;

  explicit Matrix(int height) : rows(static_cast<std::size_t>(height)) {}
  void push_column(const std::vector<int>& column) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(static_cast<std::uint8_t>(column[i]));
  }
};

CodeGroup z4_only_base(int gamma, int delta) {
  if (delta < 1) invalid("a Z4-only base code needs delta >= 1");
  if (gamma < 0) invalid("gamma must be non-negative");
  const int height = delta + gamma;
  Matrix mat(height);
  const long long columns = (1LL << (2 * (delta - 1))) << gamma;
  for (long long c = 0; c < columns; ++c) {
    std::vector<int> col(static_cast<std::size_t>(height));
    long long rest = c;
    col[0] = 1;
    for (int i = 1; i < delta; ++i, rest /= 4) col[static_cast<std::size_t>(i)] = static_cast<int>(rest % 4);
    for (int j = 0; j < gamma; ++j, rest /= 2) col[static_cast<std::size_t>(delta + j)] = 2 * static_cast<int>(rest % 2);
    mat.push_column(col);
  }
  const AmbientSpace space{0, static_cast<int>(columns), 0};
  std::vector<GroupElement> gens;
  for (auto& row : mat.rows) gens.push_back(GroupElement::from_codes(space, std::move(row)));
  return CodeGroup::closure(space, std::move(gens));
}

// Rows: r_1..r_delta, u, x_2..x_gamma.
CodeGroup mixed_base(int gamma, int delta) {
  if (gamma < 1) invalid("a mixed base code needs gamma >= 1 (gamma counts u)");
  if (delta < 0) invalid("delta must be non-negative");
  const int height = delta + gamma;
  Matrix binary(height), quaternary(height);

  const long long free_x = 1LL << (gamma - 1);
  for (long long c = 0; c < (1LL << delta) * free_x; ++c) {
    std::vector<int> col(static_cast<std::size_t>(height));
    long long rest = c;
    for (int i = 0; i < delta; ++i, rest /= 2) col[static_cast<std::size_t>(i)] = static_cast<int>(rest % 2);
    col[static_cast<std::size_t>(delta)] = 1;
    for (int j = 1; j < gamma; ++j, rest /= 2) col[static_cast<std::size_t>(delta + j)] = static_cast<int>(rest % 2);
    binary.push_column(col);
  }

  // Lifts w of each nonzero v in Z2^delta, one per sign class (the first
  // odd coordinate of w is 1); v varies fastest, then the lift, then x.
  if (delta > 0) {
    const long long lifts = 1LL << (delta - 1);
    for (long long x = 0; x < free_x; ++x) {
      for (long long e = 0; e < lifts; ++e) {
        for (long long v = 1; v < (1LL << delta); ++v) {
          std::vector<int> col(static_cast<std::size_t>(height));
          int lead = 0;
          while (((v >> lead) & 1) == 0) ++lead;
          long long bits = e;
          for (int i = 0; i < delta; ++i) {
            int w = static_cast<int>((v >> i) & 1);
            if (i != lead) {
              w += 2 * static_cast<int>(bits & 1);
              bits >>= 1;
            }
            col[static_cast<std::size_t>(i)] = w;
          }
          col[static_cast<std::size_t>(delta)] = 2;
          for (int j = 1; j < gamma; ++j) col[static_cast<std::size_t>(delta + j)] = 2 * static_cast<int>((x >> (j - 1)) & 1);
          quaternary.push_column(col);
        }
      }
    }
  }

  const AmbientSpace space{static_cast<int>(binary.rows[0].size()), static_cast<int>(quaternary.rows[0].size()), 0};
  std::vector<GroupElement> gens;
  for (int i = 0; i < height; ++i) {
    auto codes = binary.rows[static_cast<std::size_t>(i)];
    const auto& q = quaternary.rows[static_cast<std::size_t>(i)];
    codes.insert(codes.end(), q.begin(), q.end());
    gens.push_back(GroupElement::from_codes(space, std::move(codes)));
  }
  return CodeGroup::closure(space, std::move(gens));
}

std::uint8_t q8_code(int z4) { return chi2(z4).code(); }

GroupElement lift_element(const GroupElement& x, Shape shape, const AmbientSpace& target) {
  const AmbientSpace& src = x.space();
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(target.components()));
  const auto push_pair = [&](std::array<int, 2> p) {
    out.push_back(static_cast<std::uint8_t>(p[0]));
    out.push_back(static_cast<std::uint8_t>(p[1]));
  };
  switch (shape) {
    case Shape::One:
    case Shape::OneStar: return x;
    case Shape::Two:
      for (int i = 0; i < src.k2; ++i) out.push_back(q8_code(x.z4(i)));
      break;
    case Shape::Three:
      for (int i = 0; i < src.k1; ++i) out.push_back(static_cast<std::uint8_t>(chi1(x.z2(i))));
      for (int i = 0; i < src.k2; ++i) out.push_back(q8_code(x.z4(i)));
      break;
    case Shape::Four:
      for (int i = 0; i < src.k1; ++i) push_pair(chi3(x.z2(i)));
      for (int i = 0; i < src.k2; ++i) out.push_back(q8_code(x.z4(i)));
      break;
    case Shape::FourStar:
      for (int i = 0; i < src.k2 / 2; ++i) push_pair(chi3(x.z4(i)));
      for (int i = src.k2 / 2; i < src.k2; ++i) out.push_back(q8_code(x.z4(i)));
      break;
    case Shape::Five:
      for (int i = 0; i < src.k2; ++i) {
        const auto p = chi3(x.z4(i));
        out.push_back(q8_code(p[0]));
        out.push_back(q8_code(p[1]));
      }
      break;
  }
  return GroupElement::from_codes(target, std::move(out));
}

bool order4_at(const GroupElement& x, int component) {
  const AmbientSpace& s = x.space();
  if (component < s.k1) return false;
  if (component < s.k1 + s.k2) return x.z4(component - s.k1) % 2 == 1;
  const Q8 q = x.q8(component - s.k1 - s.k2);
  return q.b_exponent() == 1 || q.a_exponent() % 2 == 1;
}

std::vector<int> q8_components(const AmbientSpace& space) {
  std::vector<int> out;
  for (int c = space.k1 + space.k2; c < space.components(); ++c) out.push_back(c);
  return out;
}

// Components grouped by which of `rows` have order 4 there; classes keyed by
// the bit pattern, members in ascending order.
std::map<unsigned, std::vector<int>> pattern_classes(const std::vector<int>& components,
                                                     const std::vector<GroupElement>& rows) {
  std::map<unsigned, std::vector<int>> classes;
  for (int c : components) {
    unsigned key = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (order4_at(rows[i], c)) key |= 1u << i;
    classes[key].push_back(c);
  }
  return classes;
}

// Rank-dial fill: classes whose pattern meets `coarse` stay all b, every
// other class receives one ab at its lowest component.
std::vector<int> one_per_class(const std::map<unsigned, std::vector<int>>& classes, unsigned coarse) {
  std::vector<int> dial;
  for (const auto& [key, members] : classes)
    if ((key & coarse) == 0) dial.push_back(members.front());
  std::sort(dial.begin(), dial.end());
  return dial;
}

std::vector<int> all_but_first(std::vector<int> v) {
  if (!v.empty()) v.erase(v.begin());
  return v;
}

std::vector<int> dial_for(const CodeGroup& A, Shape shape, int tau, int sigma, int r, const std::string& tag) {
  const std::span<const GroupElement> gens = A.generators();
  const std::vector<GroupElement> rs(gens.begin(), gens.begin() + tau);
  const std::vector<int> q8 = q8_components(A.space());
  const auto where_r2 = [&](bool order4) {
    std::vector<int> out;
    for (int c : q8)
      if (order4_at(rs[1], c) == order4) out.push_back(c);
    return out;
  };

  if (tag == "1a" || tag == "1b" || tag == "1c" || tag == "2a" || tag == "3a" || tag == "4a" || tag == "5a") return {};
  if (tag == "2b") return all_but_first(q8);
  if (tag == "3b") return all_but_first(where_r2(false));
  if (tag == "3c") {
    // One b among the components where r2 has order <= 2 and one where it
    // has order 4.  A single b would leave (s1 : r2) or (s1 : r1 r2) equal
    // to a square of A.
    const int keep_even = where_r2(false).front(), keep_odd = where_r2(true).front();
    std::vector<int> out;
    for (int c : q8)
      if (c != keep_even && c != keep_odd) out.push_back(c);
    return out;
  }
  if (tag == "4b") {
    std::unordered_set<GroupElement, GroupElementHash> squares;
    for (const auto& a : A.elements()) squares.insert(square(a));
    for (const auto& x : A.elements()) {
      if (order(x) > 2 || squares.contains(x)) continue;
      std::vector<int> out;
      for (int c : q8)
        if (x.q8(c - A.space().k1 - A.space().k2) == Q8(2, 0)) out.push_back(c);
      return out;
    }
    infeasible("case 4b needs a torsion element that is not a square in A");
  }
  if (tag == "4c") {
    const int t = r - (sigma + tau + 1);
    if (shape == Shape::Two) {
      const std::vector<GroupElement> tail(rs.begin() + 1, rs.end());
      const auto classes = pattern_classes(q8, tail);
      if (t == binomial(tau - 1, 2)) return classes.at(0u);
      const int j = binomial(tau, 2) + 1 - t;
      return one_per_class(classes, (1u << j) - 1);
    }
    if (shape == Shape::Three) {
      const auto classes = pattern_classes(q8, rs);
      const int j = binomial(tau + 1, 2) - t;
      return one_per_class(classes, (1u << j) - 1);
    }
  }
  if (tag == "5b" || tag == "5c") {
    std::vector<int> out{where_r2(false).front()};
    if (tag == "5c") out.push_back(where_r2(true).front());
    std::sort(out.begin(), out.end());
    return out;
  }
  infeasible("no s-generator recipe for case " + tag + " in shape " + std::string(shape_label(shape)));
}

const AllowablePair* find_pair(const std::vector<AllowablePair>& pairs, int k, int r) {
  const auto it = std::find(pairs.begin(), pairs.end(), AllowablePair{k, r, {}});
  return it == pairs.end() ? nullptr : &*it;
}

constexpr Shape kConstructible[] = {Shape::One, Shape::OneStar, Shape::Two, Shape::Three, Shape::Five};

bool constructible(Shape shape) {
  return std::find(std::begin(kConstructible), std::end(kConstructible), shape) != std::end(kConstructible);
}

}  // namespace

CodeGroup base_hadamard(const BaseHadamardSpec& spec) {
  CodeGroup group = spec.contains_u_square ? z4_only_base(spec.gamma, spec.delta) : mixed_base(spec.gamma, spec.delta);
  const HadamardCheck check = is_hadamard(BinaryCode::from_group(group));
  if (!check.ok) throw Error(ErrorCode::NotHadamard, "base code is not Hadamard: " + check.diagnosis);
  return group;
}

BaseHadamardSpec base_spec_for(Shape shape, int m, int tau) {
  if (!table3_exists(shape, m, tau)) throw Error(ErrorCode::NotAllowable, describe(shape, m, tau) + " does not exist");
  const int sigma = m + 1 - tau - shape_upsilon(shape);
  switch (shape) {
    case Shape::One:
    case Shape::Three: return {sigma - tau, tau, false};
    case Shape::OneStar:
    case Shape::Two:
    case Shape::FourStar:
    case Shape::Five: return {sigma - tau, tau, true};
    case Shape::Four: return {sigma - 1, 1, false};
  }
  invalid("unknown shape");
}

int chi1(int x) { return (2 * x) % 4; }
Q8 chi2(int x) { return Q8(x, 0); }
std::array<int, 2> chi3(int x) { return {x, x}; }

CodeGroup lift_to_A(const CodeGroup& base, Shape shape) {
  const AmbientSpace& s = base.space();
  const auto mismatch = [&](const char* need) {
    throw Error(ErrorCode::InvalidArgument,
                "base code does not fit shape " + std::string(shape_label(shape)) + ": " + need);
  };
  if (s.k3 != 0) mismatch("base must lie in Z2^k1 x Z4^k2");
  AmbientSpace target;
  switch (shape) {
    case Shape::One:
    case Shape::OneStar: return base;
    case Shape::Two:
      if (s.k1 != 0) mismatch("needs a Z4-only base");
      target = {0, 0, s.k2};
      break;
    case Shape::Three:
      if (s.k1 == 0) mismatch("needs a base with binary coordinates");
      target = {0, s.k1, s.k2};
      break;
    case Shape::Four:
      if (s.k1 == 0) mismatch("needs a base with binary coordinates");
      target = {2 * s.k1, 0, s.k2};
      break;
    case Shape::FourStar:
      if (s.k1 != 0 || s.k2 % 2 != 0) mismatch("needs a Z4-only base of even length");
      target = {0, s.k2, s.k2 / 2};
      break;
    case Shape::Five:
      if (s.k1 != 0) mismatch("needs a Z4-only base");
      target = {0, 0, 2 * s.k2};
      break;
  }
  std::vector<GroupElement> gens;
  for (const auto& g : base.generators()) gens.push_back(lift_element(g, shape, target));
  return CodeGroup::closure(target, std::move(gens));
}

std::vector<AllowablePair> allowable_pairs(int m, Shape shape, int sigma, int tau) {
  if (!table3_exists(shape, m, tau)) throw Error(ErrorCode::NotAllowable, describe(shape, m, tau) + " does not exist");
  if (sigma != m + 1 - tau - shape_upsilon(shape))
    throw Error(ErrorCode::NotAllowable, "sigma=" + std::to_string(sigma) + " is inconsistent with " + describe(shape, m, tau));
  const int s = sigma;
  std::vector<AllowablePair> out;
  const auto add = [&](int k, int r, const char* tag) { out.push_back({k, r, tag}); };
  switch (shape) {
    case Shape::One:
      if (tau <= 1) add(m + 1, m + 1, "1a");
      else add(s, s + tau + binomial(tau, 2), "1c");
      break;
    case Shape::OneStar:
      if (tau <= 2) add(m + 1, m + 1, "1a");
      else add(s + 1, s + tau + binomial(tau - 1, 2), "1b");
      break;
    case Shape::Two:
      if (tau == 1) {
        add(s + 2, s + 2, "2a");
        if (m > 3) add(s, s + 3, "2b");
      } else if (tau == 2) {
        add(s + 3, s + 3, "3a");
        add(s + 1, s + 4, "3b");
        add(s, s + 5, "3c");
      } else {
        const int base = s + tau + 1;
        add(s + 2, base + binomial(tau - 1, 2), "4a");
        add(s + 1, base + binomial(tau, 2), "4b");
        for (int r = base + binomial(tau - 1, 2); r <= base + binomial(tau, 2) + 1; ++r) add(s, r, "4c");
      }
      break;
    case Shape::Three:
      if (tau == 1) {
        add(s + 2, s + 2, "2a");
        if (m > 3) add(s, s + 3, "2b");
      } else {
        const int base = s + tau + 1;
        add(s + 1, base + binomial(tau, 2), "4a");
        for (int r = base + binomial(tau, 2) + 1; r <= base + binomial(tau + 1, 2); ++r) add(s, r, "4c");
      }
      break;
    case Shape::Four:
      add(s + 2, s + 2, "2a");
      add(s, s + 3, "2b");
      break;
    case Shape::FourStar:
      add(s + 3, s + 3, "3a");
      add(s + 1, s + 4, "3b");
      add(s, s + 5, "3c");
      break;
    case Shape::Five:
      add(s + 4, s + 4, "5a");
      add(s + 2, s + 5, "5b");
      add(s, s + 6, "5c");
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AllowablePair> allowable_pairs(int m) {
  std::set<AllowablePair> all;
  for (Shape shape : kAllShapes)
    for (int tau = 0; tau <= m; ++tau)
      if (table3_exists(shape, m, tau))
        for (auto& p : allowable_pairs(m, shape, m + 1 - tau - shape_upsilon(shape), tau)) all.insert(p);
  return {all.begin(), all.end()};
}

std::vector<GroupElement> build_s_generators(const CodeGroup& A, const ConstructionPlan& plan) {
  const AmbientSpace& space = A.space();
  const int first_q8 = space.k1 + space.k2;
  std::set<int> dial(plan.dial.begin(), plan.dial.end());
  for (int c : dial)
    if (c < first_q8 || c >= space.components())
      invalid("dial component " + std::to_string(c) + " is not a Q8 component of A");

  const auto fill = [&](int from, int to, std::vector<std::uint8_t>& codes) {
    for (int c = from; c < to; ++c)
      codes[static_cast<std::size_t>(c)] = (dial.contains(c) ? Q8(1, 1) : Q8::b()).code();
  };
  std::vector<std::uint8_t> s1(static_cast<std::size_t>(space.components()), 0);
  switch (plan.shape) {
    case Shape::One:
    case Shape::OneStar:
      if (!dial.empty()) invalid("shapes 1 and 1* take no dial");
      return {};
    case Shape::Two:
      fill(first_q8, space.components(), s1);
      return {GroupElement::from_codes(space, std::move(s1))};
    case Shape::Three:
      for (int c = space.k1; c < first_q8; ++c) s1[static_cast<std::size_t>(c)] = 1;
      fill(first_q8, space.components(), s1);
      return {GroupElement::from_codes(space, std::move(s1))};
    case Shape::Five: {
      // s1 carries b/ab where r2 has order <= 2 and s2 where r2 has order 4;
      // each takes (1, a^2) on the duplicated pairs of the other block.
      if (A.generators().size() < 2) invalid("shape 5 needs r1 and r2 in A");
      const GroupElement& r2 = A.generators()[1];
      std::vector<std::uint8_t> s2(s1.size(), 0);
      for (int c = first_q8; c < space.components(); ++c) {
        const std::uint8_t pair = Q8(2 * ((c - first_q8) % 2), 0).code();
        const std::uint8_t flip = (dial.contains(c) ? Q8(1, 1) : Q8::b()).code();
        const bool second = order4_at(r2, c);
        s1[static_cast<std::size_t>(c)] = second ? pair : flip;
        s2[static_cast<std::size_t>(c)] = second ? flip : pair;
      }
      return {GroupElement::from_codes(space, std::move(s1)), GroupElement::from_codes(space, std::move(s2))};
    }
    case Shape::Four:
    case Shape::FourStar: break;
  }
  infeasible("shape " + std::string(shape_label(plan.shape)) + " has no s-generator recipe; supply generators directly");
}

ConstructionPlan plan_for(int m, Shape shape, int tau, int k, int r) {
  if (!constructible(shape))
    infeasible("shape " + std::string(shape_label(shape)) + " has no s-generator recipe; supply generators directly");
  const int sigma = m + 1 - tau - shape_upsilon(shape);
  const auto pairs = allowable_pairs(m, shape, sigma, tau);
  const AllowablePair* pair = find_pair(pairs, k, r);
  if (pair == nullptr) {
    std::ostringstream os;
    os << "(k, r) = (" << k << ", " << r << ") is not allowable for " << describe(shape, m, tau);
    throw Error(ErrorCode::NotAllowable, os.str());
  }
  ConstructionPlan plan{m, shape, sigma, tau, k, r, {}};
  const CodeGroup A = lift_to_A(base_hadamard(base_spec_for(shape, m, tau)), shape);
  plan.dial = dial_for(A, shape, tau, sigma, r, pair->case_tag);
  return plan;
}

Construction build(const ConstructionPlan& plan, bool check_target) {
  if (!table3_exists(plan.shape, plan.m, plan.tau))
    throw Error(ErrorCode::NotAllowable, describe(plan.shape, plan.m, plan.tau) + " does not exist");
  if (plan.sigma != plan.m + 1 - plan.tau - shape_upsilon(plan.shape))
    invalid("plan sigma is inconsistent with m, tau and the shape");
  const CodeGroup A = lift_to_A(base_hadamard(base_spec_for(plan.shape, plan.m, plan.tau)), plan.shape);
  std::vector<GroupElement> gens(A.generators().begin(), A.generators().end());
  for (auto& s : build_s_generators(A, plan)) gens.push_back(std::move(s));
  CodeGroup group = CodeGroup::closure(A.space(), std::move(gens));

  const HadamardCheck check = is_hadamard(BinaryCode::from_group(group));
  if (!check.ok) infeasible("plan does not give a Hadamard code: " + check.diagnosis);
  StructureReport report = standardize(group);
  if (report.shape != plan.shape)
    infeasible("plan for shape " + std::string(shape_label(plan.shape)) + " produced a code of shape " +
               std::string(shape_label(report.shape)));
  Measurement measurement = measure(group, report);
  if (check_target && (measurement.k != plan.target_k || measurement.r != plan.target_r)) {
    std::ostringstream os;
    os << "plan targets k=" << plan.target_k << " r=" << plan.target_r << " but the code measures k=" << measurement.k
       << " r=" << measurement.r;
    infeasible(os.str());
  }
  if (Verdict v = verify_table3(report, group.space()); !v) infeasible("constructed code fails its shape-table row: " + v.failure);
  if (Verdict v = verify_duplication(report); !v) infeasible("constructed code fails column duplication: " + v.failure);
  return {plan, std::move(group), std::move(report), std::move(measurement)};
}

Construction construct_for(int m, int k, int r) {
  if (m < 1) invalid("m must be at least 1");
  for (Shape shape : kConstructible) {
    for (int tau = 0; tau <= m; ++tau) {
      if (!table3_exists(shape, m, tau)) continue;
      const auto pairs = allowable_pairs(m, shape, m + 1 - tau - shape_upsilon(shape), tau);
      if (find_pair(pairs, k, r) != nullptr) return build(plan_for(m, shape, tau, k, r));
    }
  }
  auto pairs = allowable_pairs(m);
  const auto gap = [&](const AllowablePair& p) { return std::abs(p.k - k) + std::abs(p.r - r); };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) { return gap(a) < gap(b); });
  std::ostringstream os;
  os << "(k, r) = (" << k << ", " << r << ") is not allowable at m=" << m << "; nearest allowable pairs:";
  for (std::size_t i = 0; i < std::min<std::size_t>(pairs.size(), 5); ++i)
    os << " (" << pairs[i].k << ", " << pairs[i].r << ")";
  throw Error(ErrorCode::NotAllowable, os.str());
}

std::vector<SweepEntry> coverage_sweep(int m_min, int m_max) {
  std::vector<SweepEntry> out;
  // Several (shape, tau) rows share pairs; construct_for is deterministic.
  std::map<std::array<int, 3>, SweepEntry> done;
  for (int m = m_min; m <= m_max; ++m) {
    for (Shape shape : kAllShapes) {
      for (int tau = 0; tau <= m; ++tau) {
        if (!table3_exists(shape, m, tau)) continue;
        for (const auto& pair : allowable_pairs(m, shape, m + 1 - tau - shape_upsilon(shape), tau)) {
          SweepEntry e{m, shape, tau, pair, false, shape, {}};
          if (const auto it = done.find({m, pair.k, pair.r}); it != done.end()) {
            e.ok = it->second.ok;
            e.built_shape = it->second.built_shape;
            e.detail = it->second.detail;
            out.push_back(std::move(e));
            continue;
          }
          try {
            const Construction c = construct_for(m, pair.k, pair.r);
            e.built_shape = c.report.shape;
            e.ok = c.measurement.k == pair.k && c.measurement.r == pair.r;
            if (!e.ok) e.detail = "measured k=" + std::to_string(c.measurement.k) + " r=" + std::to_string(c.measurement.r);
          } catch (const Error& err) {
            e.detail = err.what();
          }
          done.emplace(std::array<int, 3>{m, pair.k, pair.r}, e);
          out.push_back(std::move(e));
        }
      }
    }
  }
  return out;
}

}  // namespace hq8
