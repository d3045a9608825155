#include "hq8/hq8.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "hq8/construct.hpp"
#include "hq8/error.hpp"
#include "hq8/fixtures.hpp"
#include "hq8/io.hpp"

struct hq8_code {
  hq8::CodeGroup group;
  std::optional<hq8::ConstructionPlan> plan;
  std::optional<hq8::StructureReport> report;
  std::optional<hq8::Measurement> measurement;

  const hq8::StructureReport& structure() {
    if (!report) report = hq8::standardize(group);
    return *report;
  }
  const hq8::Measurement& measured() {
    if (!measurement) measurement = hq8::measure(group, structure());
    return *measurement;
  }
};

namespace {

thread_local std::string last_error;

hq8_status status_of(hq8::ErrorCode code) {
  using hq8::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return HQ8_ERR_PARSE;
    case ErrorCode::NotAllowable: return HQ8_ERR_NOT_ALLOWABLE;
    case ErrorCode::Infeasible: return HQ8_ERR_INFEASIBLE;
    case ErrorCode::NotHadamard: return HQ8_ERR_NOT_HADAMARD;
    case ErrorCode::InvalidArgument:
    case ErrorCode::SpaceMismatch: return HQ8_ERR_INVALID_ARG;
    case ErrorCode::SizeCap: return HQ8_ERR_SIZE_CAP;
    case ErrorCode::Unclassifiable: return HQ8_ERR_UNCLASSIFIABLE;
    case ErrorCode::CaseMismatch: return HQ8_ERR_CASE_MISMATCH;
    case ErrorCode::Io: return HQ8_ERR_IO;
  }
  return HQ8_ERR_INTERNAL;
}

template <class F>
hq8_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HQ8_OK;
  } catch (const hq8::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HQ8_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HQ8_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HQ8_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw hq8::Error(hq8::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put(char** dst, const std::string& s) {
  if (dst != nullptr) *dst = dup(s);
}

hq8_code* adopt(hq8::Construction c) {
  auto* code = new hq8_code{std::move(c.group), std::move(c.plan), std::move(c.report), std::move(c.measurement)};
  return code;
}

hq8_code* load(const std::string& text) {
  hq8::GeneratorFile file = hq8::parse_generator_file(text);
  return new hq8_code{hq8::CodeGroup::closure(file.space, std::move(file.generators)), {}, {}, {}};
}

std::string verdict_line(const char* name, const hq8::Verdict& v) {
  return std::string(name) + (v.ok ? "=pass" : "=fail: " + v.failure) + "\n";
}

}  // namespace

extern "C" {

const char* hq8_last_error(void) { return last_error.c_str(); }

const char* hq8_status_name(hq8_status status) {
  switch (status) {
    case HQ8_OK: return "ok";
    case HQ8_ERR_PARSE: return "parse error";
    case HQ8_ERR_NOT_ALLOWABLE: return "not allowable";
    case HQ8_ERR_INFEASIBLE: return "infeasible";
    case HQ8_ERR_NOT_HADAMARD: return "not hadamard";
    case HQ8_ERR_INVALID_ARG: return "invalid argument";
    case HQ8_ERR_SIZE_CAP: return "size cap exceeded";
    case HQ8_ERR_UNCLASSIFIABLE: return "unclassifiable";
    case HQ8_ERR_CASE_MISMATCH: return "case mismatch";
    case HQ8_ERR_IO: return "i/o error";
    case HQ8_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hq8_string_free(char* s) { std::free(s); }

hq8_status hq8_code_from_text(const char* generator_text, hq8_code** out) {
  return guarded([&] {
    require(generator_text != nullptr && out != nullptr, "null argument");
    *out = load(generator_text);
  });
}

hq8_status hq8_code_from_file(const char* path, hq8_code** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = load(hq8::read_text_file(path));
  });
}

hq8_status hq8_construct(int m, int k, int r, hq8_code** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = adopt(hq8::construct_for(m, k, r));
  });
}

hq8_status hq8_construct_plan(const char* plan_text, int check_target, hq8_code** out) {
  return guarded([&] {
    require(plan_text != nullptr && out != nullptr, "null argument");
    *out = adopt(hq8::build(hq8::parse_plan(plan_text), check_target != 0));
  });
}

void hq8_code_free(hq8_code* code) { delete code; }

hq8_status hq8_plan_for(int m, const char* shape, int tau, int k, int r, char** plan_text) {
  return guarded([&] {
    require(shape != nullptr && plan_text != nullptr, "null argument");
    const auto parsed = hq8::parse_shape(shape);
    if (!parsed) throw hq8::Error(hq8::ErrorCode::Parse, std::string("unknown shape ") + shape);
    put(plan_text, hq8::format_plan(hq8::plan_for(m, *parsed, tau, k, r)));
  });
}

hq8_status hq8_code_plan(const hq8_code* code, char** plan_text) {
  return guarded([&] {
    require(code != nullptr && plan_text != nullptr, "null argument");
    require(code->plan.has_value(), "code was not constructed from a plan");
    put(plan_text, hq8::format_plan(*code->plan));
  });
}

hq8_status hq8_code_size(const hq8_code* code, size_t* elements, int* length) {
  return guarded([&] {
    require(code != nullptr, "null argument");
    if (elements != nullptr) *elements = code->group.size();
    if (length != nullptr) *length = code->group.space().n();
  });
}

hq8_status hq8_classify(hq8_code* code, char** line) {
  return guarded([&] {
    require(code != nullptr && line != nullptr, "null argument");
    put(line, hq8::classify_line(code->structure()));
  });
}

hq8_status hq8_measure(hq8_code* code, int* k, int* r, char** case_tag) {
  return guarded([&] {
    require(code != nullptr, "null argument");
    const hq8::Measurement& ms = code->measured();
    if (k != nullptr) *k = ms.k;
    if (r != nullptr) *r = ms.r;
    put(case_tag, ms.case_tag);
  });
}

hq8_status hq8_report(hq8_code* code, char** text) {
  return guarded([&] {
    require(code != nullptr && text != nullptr, "null argument");
    put(text, hq8::render_report(code->structure(), &code->measured()));
  });
}

hq8_status hq8_verify(hq8_code* code, int* passed, char** text) {
  return guarded([&] {
    require(code != nullptr, "null argument");
    const hq8::CodeGroup& group = code->group;
    const hq8::BinaryCode binary = hq8::BinaryCode::from_group(group);
    const hq8::HadamardCheck h = hq8::is_hadamard(binary);
    if (!h.ok) throw hq8::Error(hq8::ErrorCode::NotHadamard, "not a Hadamard code: " + h.diagnosis);

    std::string out = "hadamard=pass\n";
    bool ok = true;
    const auto record = [&](const char* name, const hq8::Verdict& v) {
      ok = ok && v.ok;
      out += verdict_line(name, v);
    };
    const hq8::StructureReport& report = code->structure();
    record("standard_form", hq8::validate_standard_form(group, report.shape, report.std_gens));
    record("table3", hq8::verify_table3(report, group.space()));
    record("duplication", hq8::verify_duplication(report));

    const hq8::KernelResult brute = hq8::kernel_bruteforce(binary);
    const hq8::KernelResult by_swappers = hq8::kernel_by_swappers(group);
    record("kernel_oracles", brute.words == by_swappers.words
                                 ? hq8::Verdict{}
                                 : hq8::Verdict{false, "swapper kernel differs from brute-force kernel"});
    const int rank = hq8::rank_gf2(binary);
    const int span = hq8::rank_by_span_group(group);
    record("rank_oracles", rank == span ? hq8::Verdict{}
                                        : hq8::Verdict{false, "span-group rank " + std::to_string(span) +
                                                                  " differs from GF(2) rank " + std::to_string(rank)});
    try {
      const hq8::Measurement& ms = code->measured();
      out += "case=" + ms.case_tag + "\n";
      record("measure", hq8::Verdict{});
    } catch (const hq8::Error& e) {
      if (e.code() != hq8::ErrorCode::CaseMismatch) throw;
      record("measure", hq8::Verdict{false, e.what()});
    }
    if (passed != nullptr) *passed = ok ? 1 : 0;
    put(text, out);
  });
}

hq8_status hq8_export_generators(const hq8_code* code, char** text) {
  return guarded([&] {
    require(code != nullptr && text != nullptr, "null argument");
    put(text, hq8::format_generator_file(code->group.space(), code->group.generators()));
  });
}

hq8_status hq8_export_binary(const hq8_code* code, char** text) {
  return guarded([&] {
    require(code != nullptr && text != nullptr, "null argument");
    put(text, hq8::format_binary_export(code->group));
  });
}

hq8_status hq8_pairs_table(int m, char** text) {
  return guarded([&] {
    require(text != nullptr, "null argument");
    require(m >= 1 && m <= 30, "m must lie in [1, 30]");
    put(text, hq8::format_pairs_table(m));
  });
}

hq8_status hq8_seed_corpus(const char* directory, char** listing) {
  return guarded([&] {
    require(directory != nullptr, "null argument");
    std::vector<hq8::Fixture> all = hq8::shape2_length128_family();
    for (auto& f : hq8::shape3_length32_family()) all.push_back(std::move(f));
    all.push_back(hq8::shape4_length8());
    std::string names;
    for (const auto& f : all) {
      const std::string file = f.name + ".gens";
      hq8::write_text_file(std::filesystem::path(directory) / file,
                           "# " + f.name + "\n" + hq8::format_generator_file(f.space, f.generators));
      names += file + "\n";
    }
    put(listing, names);
  });
}

}  // extern "C"
