#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hq8/error.hpp"
#include "hq8/fixtures.hpp"
#include "hq8/io.hpp"

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

std::string error_text(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("generator files round-trip") {
  std::vector<Fixture> all = shape3_length32_family();
  all.push_back(shape4_length8());
  all.push_back(shape2_length128_family()[2]);
  for (const auto& f : all) {
    const std::string text = format_generator_file(f.space, f.generators);
    const GeneratorFile back = parse_generator_file(text);
    CHECK(back.space == f.space);
    CHECK(back.generators == f.generators);
    CHECK(format_generator_file(back.space, back.generators) == text);
  }
}

TEST_CASE("generator files allow comments and blank lines") {
  const GeneratorFile f = parse_generator_file("# a comment\n\nspace 0 2 0\n| 1 1 |\n\n# more\n| 0 2 |\n");
  CHECK(f.space == AmbientSpace{0, 2, 0});
  CHECK(f.generators.size() == 2);
}

TEST_CASE("generator file errors name the line") {
  CHECK(error_of([] { parse_generator_file(""); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_generator_file("space 0 1\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_generator_file("spice 0 1 0\n"); }) == ErrorCode::Parse);
  CHECK(error_text([] { parse_generator_file("space 0 1 0\n| 1 |\n| 5 |\n"); }).find("line 3") != std::string::npos);
  CHECK(error_of([] { parse_generator_file("space 0 1 0\n| | a\n"); }) == ErrorCode::Parse);
}

TEST_CASE("binary export lists every codeword once, sorted") {
  const Fixture f = shape4_length8();
  const CodeGroup g = CodeGroup::closure(f.space, f.generators);
  const std::string text = format_binary_export(g);
  std::istringstream in(text);
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  CHECK(rows.size() == 16);
  CHECK(std::is_sorted(rows.begin(), rows.end()));
  CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
  for (const auto& r : rows) CHECK(r.size() == 8);
  CHECK(rows.front() == "00000000");
  CHECK(rows.back() == "11111111");
}

TEST_CASE("plans round-trip") {
  const ConstructionPlan plan = plan_for(7, Shape::Two, 3, 4, 11);
  CHECK(!plan.dial.empty());
  const std::string text = format_plan(plan);
  CHECK(parse_plan(text) == plan);
  CHECK(text.rfind("m=7\nshape=2\nsigma=4\ntau=3\nk=4\nr=11\ndial=", 0) == 0);

  const ConstructionPlan no_dial = parse_plan("m=5\nshape=1*\nsigma=4\ntau=2\nk=6\nr=6\n");
  CHECK(no_dial.shape == Shape::OneStar);
  CHECK(no_dial.dial.empty());
}

TEST_CASE("plan parse errors") {
  CHECK(error_of([] { parse_plan("m=5\nshape=9\nsigma=4\ntau=2\nk=6\nr=6\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_plan("m=5\nm=5\nshape=1\nsigma=4\ntau=2\nk=6\nr=6\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_plan("m=5\ncolour=blue\nshape=1\nsigma=4\ntau=2\nk=6\nr=6\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_plan("m=5\nshape=1\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_plan("m=five\nshape=1\nsigma=4\ntau=2\nk=6\nr=6\n"); }) == ErrorCode::Parse);
}

TEST_CASE("index lists") {
  CHECK(parse_index_list("").empty());
  CHECK(parse_index_list("3,1,20") == std::vector<int>{3, 1, 20});
  CHECK(error_of([] { parse_index_list("1,,2"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_index_list("-1"); }) == ErrorCode::Parse);
}

TEST_CASE("pairs table") {
  const std::string t = format_pairs_table(7);
  CHECK(t.rfind("# m=7 n=128\n", 0) == 0);
  CHECK(t.find("\n2 3 4: (4,9)[4c] (4,10)[4c] (4,11)[4c] (4,12)[4c] (5,11)[4b] (6,9)[4a]\n") != std::string::npos);
}

TEST_CASE("text files") {
  const auto dir = std::filesystem::temp_directory_path() / "hq8_test_io" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  write_text_file(dir / "x.txt", "hello\n");
  CHECK(read_text_file(dir / "x.txt") == "hello\n");
  CHECK(error_of([&] { read_text_file(dir / "missing.txt"); }) == ErrorCode::Io);
  std::filesystem::remove_all(dir.parent_path());
}
