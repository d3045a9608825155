#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <thread>

#include "doctest.h"
#include "hq8/hq8.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hq8_string_free(s);
  return out;
}

const char* kShape4 =
    "space 4 0 1\n"
    "1 1 1 1 | | a2\n"
    "1 1 1 1 | | 1\n"
    "1 1 0 0 | | a\n"
    "1 0 1 0 | | b\n";

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(hq8_status_name(HQ8_OK)) == "ok");
  CHECK(std::string(hq8_status_name(HQ8_ERR_NOT_ALLOWABLE)) == "not allowable");
  CHECK(std::string(hq8_status_name(static_cast<hq8_status>(99))) == "unknown status");
}

TEST_CASE("construct, measure and export") {
  hq8_code* code = nullptr;
  REQUIRE(hq8_construct(5, 3, 9, &code) == HQ8_OK);
  size_t elements = 0;
  int length = 0;
  CHECK(hq8_code_size(code, &elements, &length) == HQ8_OK);
  CHECK(elements == 64);
  CHECK(length == 32);

  int k = 0, r = 0;
  char* tag = nullptr;
  CHECK(hq8_measure(code, &k, &r, &tag) == HQ8_OK);
  CHECK(k == 3);
  CHECK(r == 9);
  CHECK(take(tag) == "4c");

  char* line = nullptr;
  CHECK(hq8_classify(code, &line) == HQ8_OK);
  CHECK(take(line).rfind("shape=3 sigma=3 tau=2", 0) == 0);

  char* plan = nullptr;
  CHECK(hq8_code_plan(code, &plan) == HQ8_OK);
  CHECK(take(plan).rfind("m=5\nshape=3\n", 0) == 0);

  char* gens = nullptr;
  CHECK(hq8_export_generators(code, &gens) == HQ8_OK);
  hq8_code* again = nullptr;
  CHECK(hq8_code_from_text(take(gens).c_str(), &again) == HQ8_OK);
  CHECK(hq8_measure(again, &k, &r, &tag) == HQ8_OK);
  CHECK(k == 3);
  CHECK(r == 9);
  hq8_string_free(tag);
  char* plan2 = nullptr;
  CHECK(hq8_code_plan(again, &plan2) == HQ8_ERR_INVALID_ARG);

  char* bin = nullptr;
  CHECK(hq8_export_binary(again, &bin) == HQ8_OK);
  const std::string rows = take(bin);
  CHECK(static_cast<size_t>(std::count(rows.begin(), rows.end(), '\n')) == 64);

  hq8_code_free(again);
  hq8_code_free(code);
  hq8_code_free(nullptr);
}

TEST_CASE("error codes and messages") {
  hq8_code* code = nullptr;
  CHECK(hq8_construct(4, 4, 9, &code) == HQ8_ERR_NOT_ALLOWABLE);
  CHECK(code == nullptr);
  CHECK(std::string(hq8_last_error()).find("nearest") != std::string::npos);

  CHECK(hq8_code_from_text("space 0 1\n", &code) == HQ8_ERR_PARSE);
  CHECK(hq8_code_from_text(nullptr, &code) == HQ8_ERR_INVALID_ARG);
  CHECK(hq8_construct(5, 3, 9, nullptr) == HQ8_ERR_INVALID_ARG);
  CHECK(hq8_code_from_file("/nonexistent/file.gens", &code) == HQ8_ERR_IO);

  char* plan = nullptr;
  CHECK(hq8_plan_for(6, "2", 3, 4, 10, &plan) == HQ8_ERR_INFEASIBLE);
  CHECK(hq8_plan_for(6, "7", 3, 4, 10, &plan) == HQ8_ERR_PARSE);
}

TEST_CASE("non-Hadamard codes load but do not classify") {
  hq8_code* code = nullptr;
  REQUIRE(hq8_code_from_text("space 0 0 2\n| | a 1\n", &code) == HQ8_OK);
  char* line = nullptr;
  CHECK(hq8_classify(code, &line) == HQ8_ERR_NOT_HADAMARD);
  int passed = 1;
  char* text = nullptr;
  CHECK(hq8_verify(code, &passed, &text) == HQ8_ERR_NOT_HADAMARD);
  hq8_code_free(code);
}

TEST_CASE("verify reports each check") {
  hq8_code* code = nullptr;
  REQUIRE(hq8_construct(6, 3, 9, &code) == HQ8_OK);
  int passed = 0;
  char* text = nullptr;
  CHECK(hq8_verify(code, &passed, &text) == HQ8_OK);
  CHECK(passed == 1);
  const std::string v = take(text);
  for (const char* key : {"hadamard=pass", "standard_form=pass", "table3=pass", "duplication=pass",
                          "kernel_oracles=pass", "rank_oracles=pass", "measure=pass"})
    CHECK(v.find(key) != std::string::npos);
  hq8_code_free(code);

  // The length-8 shape-4 code is Hadamard but lies outside the tabulated rows.
  REQUIRE(hq8_code_from_text(kShape4, &code) == HQ8_OK);
  CHECK(hq8_verify(code, &passed, &text) == HQ8_OK);
  CHECK(passed == 0);
  const std::string v4 = take(text);
  CHECK(v4.find("table3=fail") != std::string::npos);
  CHECK(v4.find("hadamard=pass") != std::string::npos);
  hq8_code_free(code);
}

TEST_CASE("plans through the C API") {
  char* plan = nullptr;
  REQUIRE(hq8_plan_for(7, "2", 3, 4, 10, &plan) == HQ8_OK);
  const std::string text = take(plan);
  hq8_code* code = nullptr;
  REQUIRE(hq8_construct_plan(text.c_str(), 1, &code) == HQ8_OK);
  char* report = nullptr;
  CHECK(hq8_report(code, &report) == HQ8_OK);
  const std::string rep = take(report);
  CHECK(rep.find("shape=2\n") != std::string::npos);
  CHECK(rep.find("k=4\nr=10\ncase=4c\n") != std::string::npos);
  hq8_code_free(code);
}

TEST_CASE("pairs table and seed corpus") {
  char* table = nullptr;
  CHECK(hq8_pairs_table(5, &table) == HQ8_OK);
  CHECK(take(table).rfind("# m=5 n=32\n", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "hq8_capi_seed";
  std::filesystem::remove_all(dir);
  char* listing = nullptr;
  REQUIRE(hq8_seed_corpus(dir.c_str(), &listing) == HQ8_OK);
  hq8_string_free(listing);
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    hq8_code* code = nullptr;
    REQUIRE(hq8_code_from_file(entry.path().c_str(), &code) == HQ8_OK);
    int k = 0, r = 0;
    char* tag = nullptr;
    CHECK(hq8_measure(code, &k, &r, &tag) == HQ8_OK);
    hq8_string_free(tag);
    hq8_code_free(code);
  }
  CHECK(files == 10);
  std::filesystem::remove_all(dir);
}

TEST_CASE("last error is per thread") {
  hq8_code* code = nullptr;
  CHECK(hq8_construct(4, 4, 9, &code) == HQ8_ERR_NOT_ALLOWABLE);
  std::string other;
  std::thread t([&] {
    hq8_code* c = nullptr;
    hq8_code_from_text("garbage", &c);
    other = hq8_last_error();
  });
  t.join();
  CHECK(std::string(hq8_last_error()).find("nearest") != std::string::npos);
  CHECK(other.find("nearest") == std::string::npos);
}
