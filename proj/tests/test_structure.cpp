#include <string>

#include "doctest.h"
#include "hq8/error.hpp"
#include "hq8/fixtures.hpp"
#include "hq8/structure.hpp"

using namespace hq8;

namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hq8::Error");
  return ErrorCode::Io;
}

CodeGroup close(const Fixture& f) { return CodeGroup::closure(f.space, f.generators); }

bool normal_in(const CodeGroup& sub, const CodeGroup& group) {
  for (const auto& g : group.generators())
    for (const auto& a : sub.generators())
      if (!sub.contains(mul(mul(g, a), inverse(g)))) return false;
  return true;
}

// Structural properties every Hadamard code of this library must satisfy.
void check_structure(const CodeGroup& group, const StructureReport& rep) {
  const CodeProfile& p = rep.profile;
  CHECK(p.m + 1 == p.sigma + p.tau + p.upsilon);
  CHECK(p.m + 1 == p.sigma + p.delta + p.rho);
  CHECK(group.size() == rep.abelian_max.size() << p.upsilon);
  CHECK((p.upsilon >= 0 && p.upsilon <= 2));
  CHECK(rep.abelian_max.is_abelian());
  CHECK(normal_in(rep.abelian_max, group));
  CHECK(rep.torsion.log2_size() == p.sigma);
  CHECK(validate_standard_form(group, rep.shape, rep.std_gens).ok);
  CHECK(verify_duplication(rep).ok);

  const CodeGroup again = CodeGroup::closure(group.space(), rep.std_gens.all());
  CHECK(same_elements(group, again));
  CHECK(standardize(again).shape == rep.shape);
}

}  // namespace

TEST_CASE("shape labels round-trip") {
  for (Shape s : kAllShapes) CHECK(parse_shape(shape_label(s)) == s);
  CHECK_FALSE(parse_shape("6").has_value());
  CHECK(shape_upsilon(Shape::Five) == 2);
  CHECK(shape_upsilon(Shape::OneStar) == 0);
  CHECK(shape_has_u_square(Shape::FourStar));
  CHECK_FALSE(shape_has_u_square(Shape::Three));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 2) == 1);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("shape-2 family of length 128") {
  const int expected[][2] = {{6, 9}, {5, 11}, {4, 12}, {4, 11}, {4, 10}, {4, 9}};
  const char* cases[] = {"4a", "4b", "4c", "4c", "4c", "4c"};
  const auto family = shape2_length128_family();
  REQUIRE(family.size() == 6);
  for (std::size_t i = 0; i < family.size(); ++i) {
    CAPTURE(family[i].name);
    const CodeGroup g = close(family[i]);
    CHECK(g.size() == 256);
    const StructureReport rep = standardize(g);
    CHECK(rep.shape == Shape::Two);
    CHECK(rep.profile.sigma == 4);
    CHECK(rep.profile.tau == 3);
    CHECK(rep.profile.tau_bar == 2);
    CHECK(rep.profile.upsilon == 1);
    CHECK(rep.torsion.size() == 16);
    const Measurement ms = measure(g, rep);
    CHECK(ms.k == expected[i][0]);
    CHECK(ms.r == expected[i][1]);
    CHECK(ms.case_tag == cases[i]);
    CHECK(verify_table3(rep, g.space()).ok);
    check_structure(g, rep);
  }
}

TEST_CASE("shape-3 family of length 32") {
  const int expected[][2] = {{4, 7}, {3, 9}, {3, 8}};
  const auto family = shape3_length32_family();
  REQUIRE(family.size() == 3);
  for (std::size_t i = 0; i < family.size(); ++i) {
    CAPTURE(family[i].name);
    const CodeGroup g = close(family[i]);
    const StructureReport rep = standardize(g);
    CHECK(rep.shape == Shape::Three);
    CHECK(rep.profile.sigma == 3);
    CHECK(rep.profile.tau == 2);
    CHECK(rep.profile.tau_bar == 2);
    CHECK(classify_line(rep).rfind("shape=3 sigma=3 tau=2", 0) == 0);
    const Measurement ms = measure(g, rep);
    CHECK(ms.k == expected[i][0]);
    CHECK(ms.r == expected[i][1]);
    CHECK(verify_table3(rep, g.space()).ok);
    check_structure(g, rep);
  }
}

TEST_CASE("shape-4 code of length 8 lies outside the tabulated existence rule") {
  // A genuine Hadamard code of shape 4 at m = 3, although the existence
  // column only admits even m.  Classification and measurement still work;
  // the shape-table check reports the disagreement.
  const CodeGroup g = close(shape4_length8());
  const StructureReport rep = standardize(g);
  CHECK(rep.shape == Shape::Four);
  CHECK(rep.profile.m == 3);
  CHECK(rep.profile.sigma == 2);
  CHECK(rep.profile.tau == 1);
  CHECK(rep.profile.upsilon == 1);
  const Measurement ms = measure(g, rep);
  CHECK(ms.k == 4);
  CHECK(ms.r == 4);
  CHECK(ms.case_tag == "2a");
  const Verdict v = verify_table3(rep, g.space());
  CHECK_FALSE(v.ok);
  CHECK(v.failure.find("existence") != std::string::npos);
  check_structure(g, rep);
}

TEST_CASE("classify_shape agrees with standardize") {
  for (const auto& f : shape3_length32_family()) CHECK(classify_shape(close(f)) == Shape::Three);
  CHECK(classify_shape(close(shape2_length128_family()[0])) == Shape::Two);
}

TEST_CASE("normalized generators span T, Z and C") {
  const CodeGroup g = close(shape3_length32_family()[1]);
  const NormalizedGenerators n = normalized_generators(g);
  const StructureReport rep = standardize(g);
  CHECK(static_cast<int>(n.x.size()) == rep.profile.sigma);
  CHECK(static_cast<int>(n.y.size()) == rep.profile.delta);
  CHECK(static_cast<int>(n.z.size()) == rep.profile.rho);
  std::vector<GroupElement> all = n.x;
  all.insert(all.end(), n.y.begin(), n.y.end());
  all.insert(all.end(), n.z.begin(), n.z.end());
  CHECK(same_elements(CodeGroup::closure(g.space(), all), g));
  CHECK(torsion(g).size() == 8);
  CHECK(center(g).log2_size() == rep.profile.sigma + rep.profile.delta);
}

TEST_CASE("tampered standard generators are rejected") {
  const CodeGroup g = close(shape3_length32_family()[0]);
  const StructureReport rep = standardize(g);
  StandardGenerators bad = rep.std_gens;
  std::swap(bad.r[0], bad.s[0]);
  CHECK_FALSE(validate_standard_form(g, rep.shape, bad).ok);
  CHECK_FALSE(validate_standard_form(g, Shape::Two, rep.std_gens).ok);
  bad = rep.std_gens;
  bad.x.pop_back();
  CHECK_FALSE(validate_standard_form(g, rep.shape, bad).ok);
}

TEST_CASE("non-Hadamard input is reported") {
  const CodeGroup g = CodeGroup::closure(AmbientSpace{0, 0, 2}, {parse_element("| | a 1")});
  CHECK(error_of([&] { standardize(g); }) == ErrorCode::NotHadamard);
  CHECK(error_of([&] { measure(g); }) == ErrorCode::NotHadamard);
  CHECK(error_of([&] { classify_shape(g); }) == ErrorCode::NotHadamard);
}

TEST_CASE("existence conditions") {
  CHECK(table3_exists(Shape::One, 7, 3));
  CHECK_FALSE(table3_exists(Shape::One, 7, 4));
  CHECK(table3_exists(Shape::OneStar, 7, 4));
  CHECK_FALSE(table3_exists(Shape::Two, 7, 4));
  CHECK(table3_exists(Shape::Three, 7, 3));
  CHECK_FALSE(table3_exists(Shape::Three, 6, 3));
  CHECK_FALSE(table3_exists(Shape::Four, 5, 1));
  CHECK(table3_exists(Shape::Four, 6, 1));
  CHECK_FALSE(table3_exists(Shape::FourStar, 7, 2));
  CHECK(table3_exists(Shape::Five, 5, 2));
  CHECK_FALSE(table3_exists(Shape::Five, 4, 2));
  CHECK_FALSE(table3_exists(Shape::Five, 7, 3));
}

TEST_CASE("block sizes of each shape") {
  CHECK(table3_space(Shape::Two, 7, 3) == AmbientSpace{0, 0, 32});
  CHECK(table3_space(Shape::Three, 5, 2) == AmbientSpace{0, 4, 6});
  CHECK(table3_space(Shape::One, 4, 0) == AmbientSpace{16, 0, 0});
  CHECK(table3_space(Shape::OneStar, 5, 2) == AmbientSpace{0, 16, 0});
  CHECK(table3_space(Shape::Five, 6, 2) == AmbientSpace{0, 0, 16});
  CHECK_FALSE(table3_space(Shape::Four, 3, 1).has_value());
  for (Shape s : kAllShapes)
    for (int m = 1; m <= 9; ++m)
      for (int tau = 0; tau <= m; ++tau)
        if (const auto space = table3_space(s, m, tau)) CHECK(space->n() == (1 << m));
}

TEST_CASE("report rendering") {
  const CodeGroup g = close(shape3_length32_family()[0]);
  const StructureReport rep = standardize(g);
  const Measurement ms = measure(g, rep);
  CHECK(render_report(rep, &ms) ==
        "shape=3\nm=5\nn=32\nsigma=3\ntau=2\ntau_bar=2\nupsilon=1\ndelta=0\nrho=3\nk=4\nr=7\ncase=4a\n");
  CHECK(classify_line(rep) == "shape=3 sigma=3 tau=2 tau_bar=2 upsilon=1 delta=0 rho=3");
}
