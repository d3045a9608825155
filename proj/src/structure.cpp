#include "hq8/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

#include "hq8/error.hpp"

namespace hq8 {
namespace {

using ElementSet = std::unordered_set<GroupElement, GroupElementHash>;

void require_hadamard(const CodeGroup& group) {
  BinaryCode code;
  try {
    code = BinaryCode::from_group(group);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotHadamard, e.what());
  }
  if (auto check = is_hadamard(code); !check.ok) {
    throw Error(ErrorCode::NotHadamard, "not a Hadamard code: " + check.diagnosis);
  }
}

// Adds each candidate that enlarges the builder's subgroup; returns the
// candidates taken, in order.
template <typename Range>
std::vector<GroupElement> greedy_extend(GroupBuilder& builder, const Range& candidates) {
  std::vector<GroupElement> taken;
  for (const auto& c : candidates) {
    if (builder.add_generator(c)) taken.push_back(c);
  }
  return taken;
}

GroupBuilder builder_from(const AmbientSpace& space, const std::vector<GroupElement>& gens) {
  GroupBuilder b(space);
  for (const auto& g : gens) b.add_generator(g);
  return b;
}

std::size_t span_size(const AmbientSpace& space, const std::vector<GroupElement>& gens) {
  return builder_from(space, gens).size();
}

// Everything classification and standardization need, computed once.
struct Analysis {
  const CodeGroup* group = nullptr;
  CodeGroup torsion;
  NormalizedGenerators norm;
  std::vector<GroupElement> reps;  // one element per non-trivial coset of T(C)
  GroupElement u;
  bool abelian = false;
  bool u_is_square = false;
};

std::vector<GroupElement> coset_representatives(const CodeGroup& group, const CodeGroup& T) {
  std::vector<GroupElement> reps;
  ElementSet seen;
  for (const auto& x : group.elements()) {
    if (seen.contains(x)) continue;
    for (const auto& t : T.elements()) seen.insert(mul(x, t));
    if (!T.contains(x)) reps.push_back(x);
  }
  return reps;
}

NormalizedGenerators normalize_unchecked(const CodeGroup& group, const CodeGroup& T, const CodeGroup& Z) {
  NormalizedGenerators norm;
  GroupBuilder b(group.space());
  norm.x = greedy_extend(b, T.elements());
  norm.y = greedy_extend(b, Z.elements());
  norm.z = greedy_extend(b, group.elements());
  const std::size_t total = norm.x.size() + norm.y.size() + norm.z.size();
  if (total >= 63 || group.size() != (std::size_t{1} << total)) {
    throw Error(ErrorCode::InvalidArgument, "|C| = " + std::to_string(group.size()) + " is not 2^(sigma+delta+rho)");
  }
  return norm;
}

Analysis analyse(const CodeGroup& group) {
  require_hadamard(group);
  Analysis a;
  a.group = &group;
  a.torsion = torsion(group);
  a.norm = normalize_unchecked(group, a.torsion, center(group));
  a.reps = coset_representatives(group, a.torsion);
  a.u = GroupElement::all_ones(group.space());
  a.abelian = group.is_abelian();
  a.u_is_square = std::any_of(a.reps.begin(), a.reps.end(), [&](const auto& x) { return square(x) == a.u; });
  return a;
}

// z1^2 = z2^2 = [z1, z2] = w, with w = u or w outside {e, u}.
bool u_pair(const Analysis& a, const GroupElement& z1, const GroupElement& z2) {
  return square(z1) == a.u && square(z2) == a.u && commutator(z1, z2) == a.u;
}

bool non_u_pair(const Analysis& a, const GroupElement& z1, const GroupElement& z2) {
  const GroupElement w = square(z1);
  return w != a.u && !w.is_identity() && square(z2) == w && commutator(z1, z2) == w;
}

bool has_pair(const Analysis& a, bool (*pred)(const Analysis&, const GroupElement&, const GroupElement&)) {
  for (std::size_t i = 0; i < a.reps.size(); ++i) {
    for (std::size_t j = i + 1; j < a.reps.size(); ++j) {
      if (pred(a, a.reps[i], a.reps[j])) return true;
    }
  }
  return false;
}

Shape classify(const Analysis& a) {
  if (a.abelian) return a.u_is_square ? Shape::OneStar : Shape::One;
  const std::size_t delta = a.norm.y.size();
  if (delta == 1) return Shape::FourStar;
  if (delta != 0) throw Error(ErrorCode::Unclassifiable, "non-abelian code with delta = " + std::to_string(delta));
  if (has_pair(a, u_pair)) return has_pair(a, non_u_pair) ? Shape::Five : Shape::Two;
  if (a.u_is_square) return Shape::Three;
  if (has_pair(a, non_u_pair)) return Shape::Four;
  throw Error(ErrorCode::Unclassifiable, "no shape matches this code");
}

// Candidate standard generator sets for one shape, in deterministic order.
// `emit` returns true to stop the enumeration.
using Emit = std::function<bool(StandardGenerators)>;

void candidates_abelian(const Analysis& a, const Emit& emit) {
  const AmbientSpace& space = a.group->space();
  std::vector<GroupElement> firsts;
  for (const auto& x : a.reps) {
    if (!a.u_is_square || square(x) == a.u) firsts.push_back(x);
  }
  if (firsts.empty()) {
    emit({a.norm.x, {}, {}});
    return;
  }
  for (const auto& r1 : firsts) {
    GroupBuilder b = builder_from(space, a.norm.x);
    b.add_generator(r1);
    StandardGenerators g{a.norm.x, {r1}, {}};
    for (auto& r : greedy_extend(b, a.reps)) g.r.push_back(std::move(r));
    if (emit(std::move(g))) return;
  }
}

void candidates_two(const Analysis& a, const Emit& emit) {
  const AmbientSpace& space = a.group->space();
  for (const auto& z1 : a.reps) {
    for (const auto& z2 : a.reps) {
      if (z1 == z2 || !u_pair(a, z1, z2)) continue;
      const GroupElement r1 = mul(z1, z2);
      std::vector<GroupElement> pool;
      for (const auto& w : a.reps) {
        const GroupElement w2 = square(w);
        if (commutator(z1, w) == w2 && commutator(z2, w) == w2) pool.push_back(w);
      }
      GroupBuilder b = builder_from(space, a.norm.x);
      b.add_generator(r1);
      StandardGenerators g{a.norm.x, {r1}, {z1}};
      for (auto& r : greedy_extend(b, pool)) g.r.push_back(std::move(r));
      if (emit(std::move(g))) return;
    }
  }
}

void candidates_three(const Analysis& a, const Emit& emit) {
  const AmbientSpace& space = a.group->space();
  std::vector<GroupElement> pool;
  for (const auto& w : a.reps) {
    if (square(w) != a.u) pool.push_back(w);
  }
  for (const auto& z1 : a.reps) {
    if (square(z1) != a.u) continue;
    GroupBuilder b = builder_from(space, a.norm.x);
    StandardGenerators g{a.norm.x, greedy_extend(b, pool), {z1}};
    if (emit(std::move(g))) return;
  }
}

void candidates_four(const Analysis& a, const Emit& emit) {
  const AmbientSpace& space = a.group->space();
  for (const auto& z1 : a.reps) {
    for (const auto& z2 : a.reps) {
      if (z1 == z2 || !non_u_pair(a, z1, z2)) continue;
      std::vector<GroupElement> gens = a.norm.x;
      gens.push_back(z1);
      gens.push_back(z2);
      if (span_size(space, gens) != a.group->size()) continue;
      if (emit({a.norm.x, {z1}, {z2}})) return;
    }
  }
}

void candidates_four_star(const Analysis& a, const Emit& emit) {
  const AmbientSpace& space = a.group->space();
  std::vector<GroupElement> central;
  for (const auto& y : a.reps) {
    const bool is_central = std::all_of(a.group->generators().begin(), a.group->generators().end(),
                                        [&](const GroupElement& g) { return commutator(y, g).is_identity(); });
    if (is_central) central.push_back(y);
  }
  for (const auto& y1 : central) {
    for (const auto& z1 : a.reps) {
      for (const auto& z2 : a.reps) {
        if (z1 == z2 || !non_u_pair(a, z1, z2)) continue;
        std::vector<GroupElement> gens = a.norm.x;
        gens.insert(gens.end(), {y1, z1, z2});
        if (span_size(space, gens) != a.group->size()) continue;
        if (emit({a.norm.x, {mul(y1, z1), z1}, {z2}})) return;
      }
    }
  }
}

void candidates_five(const Analysis& a, const Emit& emit) {
  const AmbientSpace& space = a.group->space();
  std::vector<std::pair<GroupElement, GroupElement>> upairs, wpairs;
  for (const auto& p : a.reps) {
    for (const auto& q : a.reps) {
      if (p == q) continue;
      if (u_pair(a, p, q)) upairs.emplace_back(p, q);
      if (non_u_pair(a, p, q)) wpairs.emplace_back(p, q);
    }
  }
  auto in_square_span = [&](const GroupElement& c, const GroupElement& z) {
    return c.is_identity() || c == square(z);
  };
  for (const auto& [z1, z2] : upairs) {
    for (const auto& [z3, z4] : wpairs) {
      bool ok = true;
      for (const auto* zi : {&z1, &z2}) {
        for (const auto* zj : {&z3, &z4}) ok = ok && in_square_span(commutator(*zi, *zj), *zj);
      }
      if (!ok) continue;
      std::vector<GroupElement> gens = a.norm.x;
      gens.insert(gens.end(), {z1, z2, z3, z4});
      if (span_size(space, gens) != a.group->size()) continue;
      auto f = [&](const GroupElement& z) {
        if (commutator(z, z3).is_identity()) return z3;
        if (commutator(z, z4).is_identity()) return z4;
        return mul(z3, z4);
      };
      if (emit({a.norm.x, {z1, f(z1)}, {z2, f(z2)}})) return;
    }
  }
}

Verdict fail(std::string why) { return {false, std::move(why)}; }

std::string str(const GroupElement& x) { return "(" + to_string(x) + ")"; }

Verdict validate(const CodeGroup& group, const CodeGroup& T, Shape shape, const StandardGenerators& g) {
  const AmbientSpace& space = group.space();
  const GroupElement u = GroupElement::all_ones(space);
  for (const auto& x : g.all()) {
    if (!(x.space() == space)) return fail("generator lives in another space");
    if (!group.contains(x)) return fail("generator " + str(x) + " is not in C");
  }
  for (const auto& x : g.x) {
    if (order(x) != 2) return fail("x generator " + str(x) + " does not have order 2");
  }
  if (span_size(space, g.x) != T.size()) return fail("x generators do not span T(C)");
  for (const auto& r : g.r) {
    if (order(r) != 4) return fail("r generator " + str(r) + " does not have order 4");
  }
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    for (std::size_t j = i + 1; j < g.r.size(); ++j) {
      if (!commutator(g.r[i], g.r[j]).is_identity()) return fail("r generators do not commute");
    }
  }
  std::vector<GroupElement> r_squares;
  for (const auto& r : g.r) r_squares.push_back(square(r));
  const bool u_in_r_squares = builder_from(space, r_squares).contains(u);
  if (u_in_r_squares) {
    if (r_squares.front() != u) return fail("u is a square in A(C) but r1^2 != u");
    if (builder_from(space, {r_squares.begin() + 1, r_squares.end()}).contains(u)) {
      return fail("u lies in <r2^2 .. r_tau^2>");
    }
  }
  const std::size_t ups = g.s.size();
  if (ups > 2) return fail("more than two s generators");
  if (ups == 2) {
    if (square(g.s[0]) != u || square(g.s[1]) == u) return fail("need s1^2 = u != s2^2");
    if (!commutator(g.s[0], g.s[1]).is_identity()) return fail("[s1, s2] != e");
  }
  if (!g.r.empty() && ups > 0 && square(g.r[0]) == u && square(g.s[0]) == u && commutator(g.r[0], g.s[0]) != u) {
    return fail("r1^2 = s1^2 = u but [r1, s1] != u");
  }

  // A(C) = <x, r>: abelian (x's are central), normal, index 2^upsilon.
  std::vector<GroupElement> a_gens = g.x;
  a_gens.insert(a_gens.end(), g.r.begin(), g.r.end());
  const GroupBuilder A = builder_from(space, a_gens);
  for (const auto& c : group.generators()) {
    for (const auto& x : a_gens) {
      if (!A.contains(mul(mul(inverse(c), x), c))) return fail("A(C) is not normal");
    }
  }
  if (group.size() != A.size() << ups) {
    return fail("|C / A(C)| != 2^upsilon");
  }
  const std::size_t exponent = g.x.size() + g.r.size() + ups;
  if (group.size() != (std::size_t{1} << exponent)) return fail("|C| != 2^(sigma+tau+upsilon)");
  if (span_size(space, g.all()) != group.size()) return fail("standard generators do not regenerate C");

  const auto r2 = [&](std::size_t i) { return r_squares[i]; };
  const auto s2 = [&](std::size_t i) { return square(g.s[i]); };
  const std::size_t tau = g.r.size();
  switch (shape) {
    case Shape::One:
      if (ups != 0 || u_in_r_squares) return fail("shape 1 needs upsilon = 0 and no square equal to u");
      break;
    case Shape::OneStar:
      if (ups != 0 || tau == 0 || r2(0) != u) return fail("shape 1* needs upsilon = 0 and r1^2 = u");
      break;
    case Shape::Two:
      if (ups != 1 || tau == 0 || r2(0) != u || s2(0) != u || commutator(g.r[0], g.s[0]) != u) {
        return fail("shape 2 needs r1^2 = s1^2 = [r1, s1] = u");
      }
      break;
    case Shape::Three:
      if (ups != 1 || tau == 0 || s2(0) != u || u_in_r_squares) {
        return fail("shape 3 needs s1^2 = u outside <r_i^2>");
      }
      break;
    case Shape::Four: {
      if (ups != 1 || tau != 1) return fail("shape 4 needs tau = upsilon = 1");
      const GroupElement w = r2(0);
      if (w == u || w.is_identity() || s2(0) != w || commutator(g.r[0], g.s[0]) != w) {
        return fail("shape 4 needs r1^2 = s1^2 = [r1, s1] outside {e, u}");
      }
      break;
    }
    case Shape::FourStar:
      if (ups != 1 || tau != 2) return fail("shape 4* needs tau = 2, upsilon = 1");
      if (r2(0) != u || r2(1) == u || s2(0) == u || s2(0) != r2(1) || commutator(g.r[0], g.s[0]).is_identity()) {
        return fail("shape 4* needs r1^2 = u != r2^2 = s1^2 and [r1, s1] != e");
      }
      break;
    case Shape::Five:
      if (ups != 2 || tau != 2) return fail("shape 5 needs tau = upsilon = 2");
      if (r2(0) != u || s2(0) != u || r2(1) == u || r2(1) != s2(1)) {
        return fail("shape 5 needs r1^2 = s1^2 = u != r2^2 = s2^2");
      }
      break;
  }
  return {};
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view shape_label(Shape shape) {
  switch (shape) {
    case Shape::One: return "1";
    case Shape::OneStar: return "1*";
    case Shape::Two: return "2";
    case Shape::Three: return "3";
    case Shape::Four: return "4";
    case Shape::FourStar: return "4*";
    case Shape::Five: return "5";
  }
  return "?";
}

std::optional<Shape> parse_shape(std::string_view label) {
  for (Shape s : kAllShapes) {
    if (shape_label(s) == label) return s;
  }
  return std::nullopt;
}

int shape_upsilon(Shape shape) {
  switch (shape) {
    case Shape::One:
    case Shape::OneStar: return 0;
    case Shape::Five: return 2;
    default: return 1;
  }
}

bool shape_has_u_square(Shape shape) {
  return shape == Shape::OneStar || shape == Shape::Two || shape == Shape::FourStar || shape == Shape::Five;
}

int binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return static_cast<int>(out);
}

std::vector<GroupElement> StandardGenerators::all() const {
  std::vector<GroupElement> out = x;
  out.insert(out.end(), r.begin(), r.end());
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

CodeGroup torsion(const CodeGroup& group) {
  GroupBuilder b(group.space());
  std::vector<GroupElement> gens;
  for (const auto& x : group.elements()) {
    if (order(x) <= 2 && b.add_generator(x)) gens.push_back(x);
  }
  return CodeGroup::from_elements(group.space(), std::move(gens), b.elements());
}

CodeGroup center(const CodeGroup& group) {
  GroupBuilder b(group.space());
  std::vector<GroupElement> gens;
  for (const auto& x : group.elements()) {
    const bool central = std::all_of(group.generators().begin(), group.generators().end(),
                                     [&](const GroupElement& g) { return commutator(x, g).is_identity(); });
    if (central && b.add_generator(x)) gens.push_back(x);
  }
  return CodeGroup::from_elements(group.space(), std::move(gens), b.elements());
}

NormalizedGenerators normalized_generators(const CodeGroup& group) {
  require_hadamard(group);
  return normalize_unchecked(group, torsion(group), center(group));
}

Shape classify_shape(const CodeGroup& group) { return classify(analyse(group)); }

Verdict validate_standard_form(const CodeGroup& group, Shape shape, const StandardGenerators& gens) {
  return validate(group, torsion(group), shape, gens);
}

StructureReport standardize(const CodeGroup& group) {
  const Analysis a = analyse(group);
  const Shape shape = classify(a);
  std::optional<StandardGenerators> found;
  std::string last_failure = "no candidate generators";
  const Emit emit = [&](StandardGenerators g) {
    Verdict v = validate(group, a.torsion, shape, g);
    if (v.ok) {
      found = std::move(g);
      return true;
    }
    last_failure = std::move(v.failure);
    return false;
  };
  switch (shape) {
    case Shape::One:
    case Shape::OneStar: candidates_abelian(a, emit); break;
    case Shape::Two: candidates_two(a, emit); break;
    case Shape::Three: candidates_three(a, emit); break;
    case Shape::Four: candidates_four(a, emit); break;
    case Shape::FourStar: candidates_four_star(a, emit); break;
    case Shape::Five: candidates_five(a, emit); break;
  }
  if (!found) {
    throw Error(ErrorCode::Unclassifiable,
                "no standard generator set for shape " + std::string(shape_label(shape)) + ": " + last_failure);
  }

  StructureReport report;
  report.shape = shape;
  report.std_gens = std::move(*found);
  report.torsion = a.torsion;
  report.center = center(group);
  const StandardGenerators& g = report.std_gens;
  std::vector<GroupElement> a_gens = g.x;
  a_gens.insert(a_gens.end(), g.r.begin(), g.r.end());
  report.abelian_max = CodeGroup::closure(group.space(), a_gens);
  const bool r1_u = !g.r.empty() && square(g.r.front()) == a.u;
  if (r1_u) {
    std::vector<GroupElement> r_gens = g.x;
    r_gens.insert(r_gens.end(), g.r.begin() + 1, g.r.end());
    report.r_part = CodeGroup::closure(group.space(), r_gens);
  } else {
    report.r_part = report.abelian_max;
  }

  CodeProfile& p = report.profile;
  p.n = group.space().n();
  p.m = std::countr_zero(static_cast<unsigned>(p.n));
  p.sigma = static_cast<int>(g.x.size());
  p.tau = static_cast<int>(g.r.size());
  p.tau_bar = p.tau - (r1_u ? 1 : 0);
  p.upsilon = static_cast<int>(g.s.size());
  p.delta = static_cast<int>(a.norm.y.size());
  p.rho = static_cast<int>(a.norm.z.size());
  if (p.m + 1 != p.sigma + p.tau + p.upsilon || p.sigma + p.delta + p.rho - 1 != p.m) {
    throw Error(ErrorCode::Unclassifiable, "profile does not satisfy m+1 = sigma+tau+upsilon = sigma+delta+rho");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Existence conditions and block sizes per shape

namespace {

std::optional<int> pow2(int e) {
  if (e < 0 || e > 30) return std::nullopt;
  return 1 << e;
}

std::optional<int> times(int factor, std::optional<int> v) {
  if (!v) return std::nullopt;
  return factor * *v;
}

}  // namespace

bool table3_exists(Shape shape, int m, int tau) {
  if (m < 1) return false;
  const int sigma = m + 1 - tau - shape_upsilon(shape);
  switch (shape) {
    case Shape::One: return tau >= 0 && tau <= m / 2;
    case Shape::OneStar: return tau >= 1 && tau <= (m + 1) / 2;
    case Shape::Two: return tau >= 1 && tau <= m / 2;
    case Shape::Three: return tau >= 1 && tau <= (m - 1) / 2;
    case Shape::Four: return m % 2 == 0 && tau == 1 && sigma >= 2;
    case Shape::FourStar: return m % 2 == 0 && tau == 2 && sigma >= 2;
    case Shape::Five: return tau == 2 && sigma >= 2;
  }
  return false;
}

std::optional<AmbientSpace> table3_space(Shape shape, int m, int tau) {
  if (!table3_exists(shape, m, tau)) return std::nullopt;
  const int sigma = m + 1 - tau - shape_upsilon(shape);
  const int odd_classes = (1 << tau) - 1;
  std::optional<int> k1 = 0, k2 = 0, k3 = 0;
  switch (shape) {
    case Shape::OneStar: k2 = pow2(sigma + tau - 2); break;
    case Shape::One:
      k1 = pow2(sigma - 1);
      k2 = tau == 0 ? std::optional<int>(0) : times(odd_classes, pow2(sigma - 2));
      break;
    case Shape::Two: k3 = pow2(sigma + tau - 2); break;
    case Shape::Three:
      k2 = pow2(sigma - 1);
      k3 = times(odd_classes, pow2(sigma - 2));
      break;
    case Shape::Four:
      k1 = pow2(sigma);
      k3 = pow2(sigma - 2);
      break;
    case Shape::FourStar:
      k2 = pow2(sigma);
      k3 = pow2(sigma - 1);
      break;
    case Shape::Five: k3 = pow2(sigma + 1); break;
  }
  if (!k1 || !k2 || !k3) return std::nullopt;
  return AmbientSpace{*k1, *k2, *k3};
}

Verdict verify_table3(const StructureReport& report, const AmbientSpace& space) {
  const CodeProfile& p = report.profile;
  const std::string label(shape_label(report.shape));
  if (p.m + 1 != p.sigma + p.tau + p.upsilon) return fail("m+1 != sigma+tau+upsilon");
  if (p.sigma + p.delta + p.rho - 1 != p.m) return fail("m != sigma+delta+rho-1");
  if (p.upsilon != shape_upsilon(report.shape)) return fail("upsilon does not match shape " + label);
  const int expected_bar = p.tau - (shape_has_u_square(report.shape) ? 1 : 0);
  if (p.tau_bar != expected_bar) return fail("tau_bar does not match shape " + label);
  if (!table3_exists(report.shape, p.m, p.tau)) {
    return fail("existence condition of shape " + label + " fails at m=" + std::to_string(p.m) +
                ", tau=" + std::to_string(p.tau));
  }
  const AmbientSpace expected = *table3_space(report.shape, p.m, p.tau);
  if (!(expected == space)) {
    return fail("space " + to_string(space) + " differs from the shape " + label + " row " + to_string(expected));
  }
  return {};
}

Verdict verify_duplication(const StructureReport& report) {
  const int ups = report.profile.upsilon;
  if (ups == 0) return {};
  const CodeGroup& A = report.abelian_max;
  const AmbientSpace& space = A.space();
  const std::size_t n = static_cast<std::size_t>(space.n());
  const std::size_t fold = ups == 1 ? 2 : 4;

  if (ups == 2) {
    // Each Q8 column of A(C) must appear an even number of times.
    std::map<std::vector<std::uint8_t>, int> q8_columns;
    for (int c = space.k1 + space.k2; c < space.components(); ++c) {
      std::vector<std::uint8_t> col;
      for (const auto& x : A.elements()) col.push_back(x.codes()[static_cast<std::size_t>(c)]);
      ++q8_columns[col];
    }
    for (const auto& [col, count] : q8_columns) {
      if (count % 2 != 0) return fail("a Q8 column of A(C) is not duplicated");
    }
  }

  std::vector<BinaryWord> rows;
  for (const auto& x : A.elements()) rows.push_back(gray(x));
  std::map<BinaryWord, std::size_t> columns;
  for (std::size_t j = 0; j < n; ++j) {
    BinaryWord col(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) col.set(i, rows[i].bit(j));
    ++columns[col];
  }
  for (const auto& [col, count] : columns) {
    if (count % fold != 0) {
      return fail("a binary column of A(C) occurs " + std::to_string(count) + " times, not a multiple of " +
                  std::to_string(fold));
    }
  }
  const std::size_t reduced_length = n / fold;
  std::vector<BinaryWord> reduced(rows.size(), BinaryWord(reduced_length));
  std::size_t pos = 0;
  for (const auto& [col, count] : columns) {
    for (std::size_t rep = 0; rep < count / fold; ++rep, ++pos) {
      for (std::size_t i = 0; i < rows.size(); ++i) reduced[i].set(pos, col.bit(i));
    }
  }
  const BinaryCode code(reduced_length, std::move(reduced));
  if (code.size() != A.size()) return fail("reduced image of A(C) has repeated codewords");
  if (auto check = is_hadamard(code); !check.ok) return fail("reduced image of A(C) is not Hadamard: " + check.diagnosis);
  return {};
}

// ---------------------------------------------------------------------------
// Rank/kernel case analysis

Measurement measure(const CodeGroup& group) { return measure(group, standardize(group)); }

Measurement measure(const CodeGroup& group, const StructureReport& report) {
  const BinaryCode code = BinaryCode::from_group(group);
  Measurement out;
  out.k = kernel_bruteforce(code).dimension;
  out.r = rank_gf2(code);

  const CodeProfile& p = report.profile;
  const StandardGenerators& g = report.std_gens;
  const int sg = p.sigma, tau = p.tau, bar = p.tau_bar;
  const GroupElement u = GroupElement::all_ones(group.space());
  const auto in_c = [&](const GroupElement& x) { return group.contains(x); };
  const auto set = [&](std::string tag, int k, int r_min, int r_max) {
    out.case_tag = std::move(tag);
    out.predicted_k = k;
    out.r_min = r_min;
    out.r_max = r_max;
  };

  if (p.upsilon == 0) {
    const bool r1_u = tau > 0 && square(g.r[0]) == u;
    if (bar <= 1) {
      set("1a", sg + tau, sg + tau, sg + tau);
    } else if (r1_u) {
      set("1b", sg + 1, sg + tau + binomial(tau - 1, 2), sg + tau + binomial(tau - 1, 2));
    } else {
      set("1c", sg, sg + tau + binomial(tau, 2), sg + tau + binomial(tau, 2));
    }
  } else if (p.upsilon == 1 && tau == 1) {
    if (in_c(swapper(g.s[0], g.r[0]))) {
      set("2a", sg + 2, sg + 2, sg + 2);
    } else {
      set("2b", sg, sg + 3, sg + 3);
    }
  } else if (p.upsilon == 1 && tau == 2 && bar == 1) {
    const int inside = static_cast<int>(in_c(swapper(g.s[0], g.r[0]))) +
                       static_cast<int>(in_c(swapper(g.s[0], g.r[1]))) +
                       static_cast<int>(in_c(swapper(g.s[0], mul(g.r[0], g.r[1]))));
    if (inside == 3) {
      set("3a", sg + 3, sg + 3, sg + 3);
    } else if (inside == 1) {
      set("3b", sg + 1, sg + 4, sg + 4);
    } else if (inside == 0) {
      set("3c", sg, sg + 5, sg + 5);
    } else {
      throw Error(ErrorCode::CaseMismatch, "exactly two of the swappers (s1 : r1), (s1 : r2), (s1 : r1 r2) lie in C");
    }
  } else if (p.upsilon == 1 && bar >= 2) {
    const CodeGroup& A = report.abelian_max;
    const bool cond_a = std::any_of(report.r_part.elements().begin(), report.r_part.elements().end(), [&](const auto& b) {
      const GroupElement bs = mul(b, g.s[0]);
      return std::all_of(A.generators().begin(), A.generators().end(),
                         [&](const GroupElement& x) { return in_c(swapper(bs, x)); });
    });
    const bool r1_u = square(g.r[0]) == u;
    if (cond_a) {
      const int r = sg + tau + 1 + binomial(bar, 2);
      set("4a", sg + tau - bar + 1, r, r);
    } else if (r1_u && in_c(swapper(g.r[0], g.s[0]))) {
      const int r = sg + tau + 1 + binomial(bar + 1, 2);
      set("4b", sg + 1, r, r);
    } else if (tau == bar + 1) {
      set("4c", sg, sg + tau + 1 + binomial(tau - 1, 2), sg + tau + 1 + binomial(tau, 2) + 1);
    } else {
      set("4c", sg, sg + tau + 1 + binomial(tau, 2) + 1, sg + tau + 1 + binomial(tau + 1, 2));
    }
  } else if (p.upsilon == 2 && tau == 2) {
    const int inside = static_cast<int>(in_c(swapper(g.r[1], g.s[1]))) +
                       static_cast<int>(in_c(swapper(mul(g.r[0], g.r[1]), mul(g.s[0], g.s[1]))));
    if (inside == 2) {
      set("5a", sg + 4, sg + 4, sg + 4);
    } else if (inside == 1) {
      set("5b", sg + 2, sg + 5, sg + 5);
    } else {
      set("5c", sg, sg + 6, sg + 6);
    }
  } else {
    throw Error(ErrorCode::CaseMismatch, "no rank/kernel case covers tau=" + std::to_string(tau) +
                                             ", upsilon=" + std::to_string(p.upsilon));
  }

  if (out.k != out.predicted_k || out.r < out.r_min || out.r > out.r_max) {
    std::ostringstream os;
    os << "case " << out.case_tag << " predicts k=" << out.predicted_k << ", r in [" << out.r_min << ", "
       << out.r_max << "] but measured k=" << out.k << ", r=" << out.r;
    throw Error(ErrorCode::CaseMismatch, os.str());
  }
  return out;
}

std::string classify_line(const StructureReport& report) {
  const CodeProfile& p = report.profile;
  std::ostringstream os;
  os << "shape=" << shape_label(report.shape) << " sigma=" << p.sigma << " tau=" << p.tau
     << " tau_bar=" << p.tau_bar << " upsilon=" << p.upsilon << " delta=" << p.delta << " rho=" << p.rho;
  return os.str();
}

std::string render_report(const StructureReport& report, const Measurement* measurement) {
  const CodeProfile& p = report.profile;
  std::ostringstream os;
  os << "shape=" << shape_label(report.shape) << "\n"
     << "m=" << p.m << "\n"
     << "n=" << p.n << "\n"
     << "sigma=" << p.sigma << "\n"
     << "tau=" << p.tau << "\n"
     << "tau_bar=" << p.tau_bar << "\n"
     << "upsilon=" << p.upsilon << "\n"
     << "delta=" << p.delta << "\n"
     << "rho=" << p.rho << "\n";
  if (measurement != nullptr) {
    os << "k=" << measurement->k << "\n"
       << "r=" << measurement->r << "\n"
       << "case=" << measurement->case_tag << "\n";
  }
  return os.str();
}

}  // namespace hq8
