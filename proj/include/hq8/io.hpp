#pragma once

// Text formats: generator files, binary matrix export, plan files.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hq8/code.hpp"
#include "hq8/construct.hpp"

namespace hq8 {

/// Header line `space k1 k2 k3`, then one rendered element per line.
/// Blank lines and lines starting with `#` are ignored.
struct GeneratorFile {
  AmbientSpace space;
  std::vector<GroupElement> generators;
};

/// Throws Error(Parse) with the offending line number.
GeneratorFile parse_generator_file(std::string_view text);
std::string format_generator_file(const AmbientSpace& space, std::span<const GroupElement> generators);

/// One codeword per line, `0`/`1` characters, rows sorted.
std::string format_binary_export(const CodeGroup& group);

/// key=value lines m, shape, sigma, tau, k, r, dial (comma separated).
ConstructionPlan parse_plan(std::string_view text);
std::string format_plan(const ConstructionPlan& plan);

/// Every existing (shape, tau) at length 2^m with its allowable pairs.
std::string format_pairs_table(int m);

/// Comma separated non-negative integers; empty text gives an empty list.
std::vector<int> parse_index_list(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hq8
