#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hq8/algebra.hpp"

namespace hq8 {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// Incremental subgroup closure under right multiplication by generators.
/// Elements are kept in discovery order; nothing is sorted.
class GroupBuilder {
 public:
  explicit GroupBuilder(AmbientSpace space, std::size_t cap = kDefaultClosureCap);

  /// Adds g as a generator.  Returns false (and does nothing) if g is
  /// already in the current subgroup.
  bool add_generator(const GroupElement& g);
  bool contains(const GroupElement& x) const { return index_.contains(x); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const AmbientSpace& space() const { return space_; }

 private:
  void insert(GroupElement x);

  AmbientSpace space_;
  std::size_t cap_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_set<GroupElement, GroupElementHash> index_;
};

/// A subgroup given by generators together with its full element list,
/// sorted lexicographically on the rendered text of each element.
class CodeGroup {
 public:
  CodeGroup() = default;

  /// Throws Error(SpaceMismatch) for mixed spaces and Error(SizeCap) when
  /// the closure outgrows `cap`.
  static CodeGroup closure(AmbientSpace space, std::vector<GroupElement> generators,
                           std::size_t cap = kDefaultClosureCap);

  /// Group over an element list already known to be closed (e.g. a scan of
  /// a larger group).  Verifies closure under products of `generators`.
  static CodeGroup from_elements(AmbientSpace space, std::vector<GroupElement> generators,
                                 std::vector<GroupElement> elements);

  const AmbientSpace& space() const { return space_; }
  std::span<const GroupElement> generators() const { return generators_; }
  std::span<const GroupElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// log2 |group|; every group here is a 2-group.
  int log2_size() const;

  bool contains(const GroupElement& x) const { return index_.contains(x); }
  std::optional<std::size_t> index_of(const GroupElement& x) const;
  bool is_abelian() const;

 private:
  void build_index();

  AmbientSpace space_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

bool same_elements(const CodeGroup& lhs, const CodeGroup& rhs);

/// Gray image of a group.  Codewords are sorted; injectivity of the Gray
/// map on the group is checked at construction (Error(InvalidArgument)).
class BinaryCode {
 public:
  BinaryCode() = default;
  BinaryCode(std::size_t length, std::vector<BinaryWord> words);
  static BinaryCode from_group(const CodeGroup& group);

  std::size_t length() const { return length_; }
  std::span<const BinaryWord> words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(const BinaryWord& w) const { return index_.contains(w); }

 private:
  std::size_t length_ = 0;
  std::vector<BinaryWord> words_;
  std::unordered_set<BinaryWord, BinaryWordHash> index_;
};

struct HadamardCheck {
  bool ok = false;
  std::string diagnosis;  // names the first failed clause; empty when ok
};

HadamardCheck is_hadamard(const BinaryCode& code);

/// Kernel K(C) both as a full sorted word list and as a GF(2) basis.
struct KernelResult {
  std::vector<BinaryWord> words;
  std::vector<BinaryWord> basis;
  int dimension = 0;
};

/// Words z of C with C + z = C.  Only z in C is searched: 0 in C forces
/// K(C) to lie inside C.
KernelResult kernel_bruteforce(const BinaryCode& code);
/// {gray(c) : (c : b) in the group for every b}.
KernelResult kernel_by_swappers(const CodeGroup& group);

/// Reduced row-echelon basis of the GF(2) span of `words`.
std::vector<BinaryWord> gf2_basis(std::span<const BinaryWord> words);
int rank_gf2(const BinaryCode& code);
/// log2 |<group, all pairwise swappers>|.
int rank_by_span_group(const CodeGroup& group, std::size_t cap = kDefaultClosureCap);

struct RankKernelReport {
  int r = 0;
  int k = 0;
  std::vector<BinaryWord> kernel_words;  // basis of K(C)
  int span_dimension_check = 0;          // rank recomputed through the span group
};

/// Rank by Gaussian elimination, kernel by brute force, rank cross-checked
/// through the span group.
RankKernelReport rank_and_kernel(const CodeGroup& group);

}  // namespace hq8
