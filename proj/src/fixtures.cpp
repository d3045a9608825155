#include "hq8/fixtures.hpp"

#include <string_view>

namespace hq8 {
namespace {

std::string twice(std::string_view half) {
  std::string out(half);
  out += ' ';
  out += half;
  return out;
}

GroupElement q8_vector(const std::string& tokens) { return parse_element("| | " + tokens); }

}  // namespace

std::vector<Fixture> shape2_length128_family() {
  constexpr std::string_view r1 = "a a a a a a a a a a a a a a a a";
  constexpr std::string_view r2 = "a a a3 a3 a a a3 a3 1 1 a2 a2 1 1 a2 a2";
  constexpr std::string_view r3 = "a a3 a a3 1 a2 1 a2 a a3 a a3 1 a2 1 a2";
  constexpr std::string_view x1 = "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1";
  constexpr std::string_view x2 = "a2 a2 a2 a2 a2 a2 a2 a2 a2 a2 a2 a2 a2 a2 a2 a2";

  constexpr std::string_view y[] = {
      "b b b b b b b b b b b b b b b b",
      "ab ab ab ab ab ab ab ab ab ab ab ab ab ab ab ab",
      "b b b ab b b b ab b b b ab b b b ab",
      "b b b b b b b b b b b ab b b b ab",
      "b b b b b b b b b b b b b b b ab",
      "b b b b b b b b b b b b ab ab ab ab",
  };
  struct Choice {
    const char* name;
    int left, right;  // 0-based indices into y
  };
  constexpr Choice choices[] = {{"y1y1", 0, 0}, {"y2y1", 1, 0}, {"y3y3", 2, 2},
                                {"y4y4", 3, 3}, {"y5y5", 4, 4}, {"y6y6", 5, 5}};

  const std::vector<GroupElement> base = {
      q8_vector(twice(r1)),
      q8_vector(twice(r2)),
      q8_vector(twice(r3)),
      q8_vector(std::string(x1) + " " + std::string(x2)),
  };
  std::vector<Fixture> out;
  for (const auto& c : choices) {
    Fixture f{std::string("shape2_length128_") + c.name, AmbientSpace{0, 0, 32}, base};
    f.generators.push_back(q8_vector(std::string(y[c.left]) + " " + std::string(y[c.right])));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Fixture> shape3_length32_family() {
  const std::vector<GroupElement> base = {
      parse_element("| 0 2 0 2 | 1 a2 a a a a"),
      parse_element("| 0 0 2 2 | a a 1 a2 a a3"),
  };
  struct Choice {
    const char* name;
    const char* s1;
  };
  constexpr Choice choices[] = {
      {"all_b", "| 1 1 1 1 | b b b b b b"},
      {"alternating_ab", "| 1 1 1 1 | b ab b ab b ab"},
      {"one_ab", "| 1 1 1 1 | b ab b b b b"},
  };
  std::vector<Fixture> out;
  for (const auto& c : choices) {
    Fixture f{std::string("shape3_length32_") + c.name, AmbientSpace{0, 4, 6}, base};
    f.generators.push_back(parse_element(c.s1));
    out.push_back(std::move(f));
  }
  return out;
}

Fixture shape4_length8() {
  return Fixture{"shape4_length8",
                 AmbientSpace{4, 0, 1},
                 {
                     parse_element("1 1 1 1 | | 1"),
                     parse_element("0 0 0 0 | | a2"),
                     parse_element("1 1 0 0 | | a"),
                     parse_element("1 0 1 0 | | b"),
                 }};
}

}  // namespace hq8
