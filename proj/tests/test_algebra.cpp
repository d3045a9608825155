#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "hq8/algebra.hpp"
#include "hq8/error.hpp"

using namespace hq8;

namespace {

constexpr AmbientSpace kZ4{0, 1, 0};
constexpr AmbientSpace kQ8{0, 0, 1};

GroupElement z4(int v) { return GroupElement::from_codes(kZ4, {static_cast<std::uint8_t>(v)}); }
GroupElement q8(const char* name) { return parse_element(kQ8, std::string("| | ") + name); }
GroupElement q8(Q8 x) { return GroupElement::from_codes(kQ8, {x.code()}); }

std::vector<GroupElement> all_z4() {
  std::vector<GroupElement> out;
  for (int v = 0; v < 4; ++v) out.push_back(z4(v));
  return out;
}

std::vector<GroupElement> all_q8() {
  std::vector<GroupElement> out;
  for (std::uint8_t c = 0; c < 8; ++c) out.push_back(q8(Q8::from_code(c)));
  return out;
}

GroupElement random_element(const AmbientSpace& space, std::mt19937& rng) {
  std::vector<std::uint8_t> codes;
  for (int i = 0; i < space.k1; ++i) codes.push_back(static_cast<std::uint8_t>(rng() % 2));
  for (int i = 0; i < space.k2; ++i) codes.push_back(static_cast<std::uint8_t>(rng() % 4));
  for (int i = 0; i < space.k3; ++i) codes.push_back(static_cast<std::uint8_t>(rng() % 8));
  return GroupElement::from_codes(space, std::move(codes));
}

AmbientSpace random_space(std::mt19937& rng) {
  AmbientSpace s{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 5)};
  if (s.components() == 0) s.k3 = 1;
  return s;
}

// The seven swapper/commutator identities on one triple.
void check_identities(const GroupElement& a, const GroupElement& b, const GroupElement& c) {
  const GroupElement e = GroupElement::identity(a.space());
  const GroupElement u = GroupElement::all_ones(a.space());
  CHECK(commutator(a, b) == commutator(b, a));
  CHECK(swapper(mul(a, b), c) == mul(swapper(a, c), swapper(b, c)));
  CHECK(swapper(c, mul(a, b)) == mul(swapper(c, a), swapper(c, b)));
  CHECK(commutator(mul(a, b), c) == mul(commutator(a, c), commutator(b, c)));
  CHECK(mul(swapper(a, b), swapper(b, a)) == commutator(a, b));
  CHECK(swapper(a, a) == square(a));
  if (square(a) == e) {
    CHECK(commutator(a, b) == e);
    CHECK(swapper(a, b) == e);
    CHECK(swapper(b, a) == e);
  }
  if (square(a) == u && commutator(a, b) == e) {
    CHECK(swapper(a, b) == square(b));
    CHECK(swapper(b, a) == square(b));
  }
}

}  // namespace

TEST_CASE("Q8 Gray images") {
  const std::pair<const char*, const char*> expected[] = {
      {"1", "0000"}, {"b", "0110"},  {"a", "0101"},  {"ab", "1100"},
      {"a2", "1111"}, {"a2b", "1001"}, {"a3", "1010"}, {"a3b", "0011"},
  };
  for (const auto& [name, bits] : expected) {
    CAPTURE(name);
    CHECK(gray(q8(name)).to_string() == bits);
  }
}

TEST_CASE("Z4 Gray images are the usual ones") {
  const char* expected[] = {"00", "01", "11", "10"};
  for (int v = 0; v < 4; ++v) CHECK(gray(z4(v)).to_string() == expected[v]);
}

TEST_CASE("Z2 Gray map is the identity") {
  const AmbientSpace s{1, 0, 0};
  CHECK(gray(GroupElement::from_codes(s, {0})).to_string() == "0");
  CHECK(gray(GroupElement::from_codes(s, {1})).to_string() == "1");
}

TEST_CASE("swapper table in Z4 and Q8, every cell") {
  for (const auto& x : all_z4())
    for (const auto& y : all_z4()) {
      const int want = (x.z4(0) % 2 == 1 && y.z4(0) % 2 == 1) ? 2 : 0;
      CHECK(swapper(x, y) == z4(want));
    }

  // Row and column classes: {1,a2}, {a,a3}, {b,a2b}, {ab,a3b}.
  const char* table[4][4] = {
      {"1", "1", "1", "1"},
      {"1", "a2", "a2", "1"},
      {"1", "1", "a2", "a2"},
      {"1", "a2", "1", "a2"},
  };
  const auto cls = [](Q8 x) { return (x.a_exponent() & 1) + 2 * x.b_exponent(); };
  for (const auto& x : all_q8())
    for (const auto& y : all_q8()) {
      CAPTURE(to_string(x));
      CAPTURE(to_string(y));
      CHECK(swapper(x, y) == q8(table[cls(x.q8(0))][cls(y.q8(0))]));
    }
}

TEST_CASE("commutator table in Z4 and Q8, every cell") {
  for (const auto& x : all_z4())
    for (const auto& y : all_z4()) CHECK(commutator(x, y) == z4(0));

  const char* table[4][4] = {
      {"1", "1", "1", "1"},
      {"1", "1", "a2", "a2"},
      {"1", "a2", "1", "a2"},
      {"1", "a2", "a2", "1"},
  };
  const auto cls = [](Q8 x) { return (x.a_exponent() & 1) + 2 * x.b_exponent(); };
  for (const auto& x : all_q8())
    for (const auto& y : all_q8()) CHECK(commutator(x, y) == q8(table[cls(x.q8(0))][cls(y.q8(0))]));
}

TEST_CASE("swapper and commutator satisfy their defining equations") {
  for (const auto& x : all_q8())
    for (const auto& y : all_q8()) {
      CHECK(gray(mul(swapper(x, y), mul(x, y))) == (gray(x) ^ gray(y)));
      CHECK(mul(x, y) == mul(commutator(x, y), mul(y, x)));
    }
  for (const auto& x : all_z4())
    for (const auto& y : all_z4()) CHECK(gray(mul(swapper(x, y), mul(x, y))) == (gray(x) ^ gray(y)));
}

TEST_CASE("Q8 is a group with the quaternion relations") {
  const auto g = all_q8();
  const GroupElement e = q8("1");
  for (const auto& x : g) {
    CHECK(mul(x, e) == x);
    CHECK(mul(e, x) == x);
    CHECK(mul(x, inverse(x)) == e);
    for (const auto& y : g)
      for (const auto& z : g) CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
  }
  const GroupElement a = q8("a"), b = q8("b");
  CHECK(mul(mul(a, a), mul(a, a)) == e);
  CHECK(square(b) == square(a));
  CHECK(mul(mul(b, a), inverse(b)) == inverse(a));
  int counts[5] = {};
  for (const auto& x : g) ++counts[order(x)];
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[4] == 6);
}

TEST_CASE("swapper identities hold exhaustively on single components") {
  for (const auto& a : all_z4())
    for (const auto& b : all_z4())
      for (const auto& c : all_z4()) check_identities(a, b, c);
  for (const auto& a : all_q8())
    for (const auto& b : all_q8())
      for (const auto& c : all_q8()) check_identities(a, b, c);
}

TEST_CASE("swapper identities hold on random mixed vectors") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 10000; ++trial) {
    const AmbientSpace s = random_space(rng);
    check_identities(random_element(s, rng), random_element(s, rng), random_element(s, rng));
  }
}

TEST_CASE("last identity on random vectors where its premise holds") {
  // a has an order-4 entry everywhere (so a^2 = u) and b commutes with it.
  std::mt19937 rng(7);
  const Q8 order4[] = {Q8(1, 0), Q8(3, 0), Q8(0, 1), Q8(1, 1), Q8(2, 1), Q8(3, 1)};
  for (int trial = 0; trial < 2000; ++trial) {
    const AmbientSpace s{0, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 4)};
    std::vector<std::uint8_t> ac, bc;
    for (int i = 0; i < s.k2; ++i) {
      ac.push_back(static_cast<std::uint8_t>(rng() % 2 ? 1 : 3));
      bc.push_back(static_cast<std::uint8_t>(rng() % 4));
    }
    for (int i = 0; i < s.k3; ++i) {
      const Q8 ai = order4[rng() % 6];
      Q8 bi;
      do bi = Q8::from_code(static_cast<std::uint8_t>(rng() % 8));
      while (q8_mul(ai, bi) != q8_mul(bi, ai));
      ac.push_back(ai.code());
      bc.push_back(bi.code());
    }
    const GroupElement a = GroupElement::from_codes(s, ac), b = GroupElement::from_codes(s, bc);
    REQUIRE(square(a) == GroupElement::all_ones(s));
    REQUIRE(commutator(a, b).is_identity());
    CHECK(swapper(a, b) == square(b));
    CHECK(swapper(b, a) == square(b));
  }
}

TEST_CASE("gray of a product: translation invariance of distances") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const AmbientSpace s = random_space(rng);
    const GroupElement x = random_element(s, rng), y = random_element(s, rng);
    CHECK(distance(gray(x), gray(mul(x, y))) == weight(gray(y)));
  }
}

TEST_CASE("u maps to the all-ones word and e to zeros") {
  const AmbientSpace s{2, 3, 4};
  const BinaryWord ones = gray(GroupElement::all_ones(s));
  CHECK(static_cast<int>(ones.size()) == s.n());
  CHECK(ones.weight() == s.n());
  CHECK(gray(GroupElement::identity(s)).weight() == 0);
}

TEST_CASE("M-set") {
  const GroupElement x = parse_element("| | 1 a2 a2 1 1 a2");
  CHECK(m_set(x) == std::vector<int>{1, 2, 5});
  CHECK(m_set(parse_element("1 0 | 2 0 |")) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(m_set(parse_element("| 1 |")), Error);
}

TEST_CASE("element text round-trips") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const AmbientSpace s = random_space(rng);
    const GroupElement x = random_element(s, rng);
    CHECK(parse_element(s, to_string(x)) == x);
    CHECK(parse_element(to_string(x)) == x);
  }
  CHECK(to_string(parse_element("0 1 | 2 3 | a b a2b")) == "0 1 | 2 3 | a b a2b");
}

TEST_CASE("malformed element text is rejected") {
  CHECK_THROWS_AS(parse_element("0 1 | 2 3"), Error);
  CHECK_THROWS_AS(parse_element("2 | | "), Error);
  CHECK_THROWS_AS(parse_element("| 4 |"), Error);
  CHECK_THROWS_AS(parse_element("| | c"), Error);
  CHECK_THROWS_AS(parse_element(AmbientSpace{0, 0, 2}, "| | a"), Error);
}

TEST_CASE("mixing spaces is an error") {
  CHECK_THROWS_AS(mul(z4(1), q8("a")), Error);
}
