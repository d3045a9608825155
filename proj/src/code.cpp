#include "hq8/code.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "hq8/error.hpp"

namespace hq8 {
namespace {

int exact_log2(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw Error(ErrorCode::InvalidArgument, "size " + std::to_string(n) + " is not a power of two");
  }
  return std::countr_zero(n);
}

KernelResult kernel_from_words(std::vector<BinaryWord> words) {
  std::sort(words.begin(), words.end());
  KernelResult out;
  out.basis = gf2_basis(words);
  out.dimension = static_cast<int>(out.basis.size());
  out.words = std::move(words);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupBuilder

GroupBuilder::GroupBuilder(AmbientSpace space, std::size_t cap) : space_(space), cap_(cap) {
  insert(GroupElement::identity(space));
}

void GroupBuilder::insert(GroupElement x) {
  if (elements_.size() >= cap_) {
    throw Error(ErrorCode::SizeCap, "closure exceeds cap of " + std::to_string(cap_) + " elements");
  }
  index_.insert(x);
  elements_.push_back(std::move(x));
}

bool GroupBuilder::add_generator(const GroupElement& g) {
  if (!(g.space() == space_)) {
    throw Error(ErrorCode::SpaceMismatch, "generator lives in " + to_string(g.space()) + ", expected " +
                                              to_string(space_));
  }
  if (contains(g)) return false;
  generators_.push_back(g);
  // Old elements have been multiplied by every old generator already, so
  // only the new generator is applied to them; new elements get all of them.
  const std::size_t old_size = elements_.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    GroupElement y = mul(elements_[i], g);
    if (!contains(y)) insert(std::move(y));
  }
  for (std::size_t i = old_size; i < elements_.size(); ++i) {
    for (const auto& h : generators_) {
      GroupElement y = mul(elements_[i], h);
      if (!contains(y)) insert(std::move(y));
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// CodeGroup

CodeGroup CodeGroup::closure(AmbientSpace space, std::vector<GroupElement> generators, std::size_t cap) {
  GroupBuilder builder(space, cap);
  for (const auto& g : generators) builder.add_generator(g);
  CodeGroup group;
  group.space_ = space;
  group.generators_ = std::move(generators);
  group.elements_ = builder.elements();
  group.build_index();
  return group;
}

CodeGroup CodeGroup::from_elements(AmbientSpace space, std::vector<GroupElement> generators,
                                   std::vector<GroupElement> elements) {
  CodeGroup group;
  group.space_ = space;
  group.generators_ = std::move(generators);
  group.elements_ = std::move(elements);
  group.build_index();
  if (!group.contains(GroupElement::identity(space))) {
    throw Error(ErrorCode::InvalidArgument, "element set does not contain the identity");
  }
  for (const auto& x : group.elements_) {
    for (const auto& g : group.generators_) {
      if (!group.contains(mul(x, g))) throw Error(ErrorCode::InvalidArgument, "element set is not closed");
    }
  }
  return group;
}

void CodeGroup::build_index() {
  std::vector<std::pair<std::string, GroupElement>> keyed;
  keyed.reserve(elements_.size());
  for (auto& x : elements_) keyed.emplace_back(to_string(x), std::move(x));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  elements_.clear();
  index_.clear();
  index_.reserve(keyed.size());
  for (auto& [key, x] : keyed) {
    if (!index_.emplace(x, elements_.size()).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate element " + key);
    }
    elements_.push_back(std::move(x));
  }
}

int CodeGroup::log2_size() const { return exact_log2(elements_.size()); }

std::optional<std::size_t> CodeGroup::index_of(const GroupElement& x) const {
  if (auto it = index_.find(x); it != index_.end()) return it->second;
  return std::nullopt;
}

bool CodeGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commutator(generators_[i], generators_[j]).is_identity()) return false;
    }
  }
  return true;
}

bool same_elements(const CodeGroup& lhs, const CodeGroup& rhs) {
  if (!(lhs.space() == rhs.space()) || lhs.size() != rhs.size()) return false;
  return std::equal(lhs.elements().begin(), lhs.elements().end(), rhs.elements().begin());
}

// ---------------------------------------------------------------------------
// BinaryCode

BinaryCode::BinaryCode(std::size_t length, std::vector<BinaryWord> words) : length_(length) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (const auto& w : words) {
    if (w.size() != length) throw Error(ErrorCode::InvalidArgument, "codeword length mismatch");
  }
  words_ = std::move(words);
  index_.insert(words_.begin(), words_.end());
}

BinaryCode BinaryCode::from_group(const CodeGroup& group) {
  std::vector<BinaryWord> words;
  words.reserve(group.size());
  for (const auto& x : group.elements()) words.push_back(gray(x));
  BinaryCode code(static_cast<std::size_t>(group.space().n()), std::move(words));
  if (code.size() != group.size()) {
    throw Error(ErrorCode::InvalidArgument, "Gray map is not injective on this group");
  }
  return code;
}

HadamardCheck is_hadamard(const BinaryCode& code) {
  const std::size_t n = code.length();
  if (n == 0 || !std::has_single_bit(n)) return {false, "length " + std::to_string(n) + " is not a power of two"};
  if (code.size() != 2 * n) {
    return {false, "code has " + std::to_string(code.size()) + " codewords, expected " + std::to_string(2 * n)};
  }
  BinaryWord zero(n);
  BinaryWord ones(n);
  for (std::size_t i = 0; i < n; ++i) ones.set(i, true);
  if (!code.contains(zero)) return {false, "all-zeros word missing"};
  if (!code.contains(ones)) return {false, "all-ones word missing"};
  const int half = static_cast<int>(n / 2);
  for (const auto& w : code.words()) {
    const int wt = w.weight();
    if (wt != 0 && wt != half && wt != static_cast<int>(n)) {
      return {false, "codeword " + w.to_string() + " has weight " + std::to_string(wt)};
    }
  }
  const auto words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const int d = distance(words[i], words[j]);
      if (d != half && d != static_cast<int>(n)) {
        return {false, "codewords " + std::to_string(i) + " and " + std::to_string(j) + " at distance " +
                           std::to_string(d)};
      }
    }
  }
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Kernel and rank

KernelResult kernel_bruteforce(const BinaryCode& code) {
  std::vector<BinaryWord> kernel;
  for (const auto& z : code.words()) {
    const bool translates = std::all_of(code.words().begin(), code.words().end(),
                                        [&](const BinaryWord& c) { return code.contains(c ^ z); });
    if (translates) kernel.push_back(z);
  }
  return kernel_from_words(std::move(kernel));
}

KernelResult kernel_by_swappers(const CodeGroup& group) {
  std::vector<BinaryWord> kernel;
  for (const auto& c : group.elements()) {
    const bool internal = std::all_of(group.elements().begin(), group.elements().end(),
                                      [&](const GroupElement& b) { return group.contains(swapper(c, b)); });
    if (internal) kernel.push_back(gray(c));
  }
  return kernel_from_words(std::move(kernel));
}

std::vector<BinaryWord> gf2_basis(std::span<const BinaryWord> words) {
  std::vector<BinaryWord> rows(words.begin(), words.end());
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].bit(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].bit(col)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

int rank_gf2(const BinaryCode& code) { return static_cast<int>(gf2_basis(code.words()).size()); }

int rank_by_span_group(const CodeGroup& group, std::size_t cap) {
  GroupBuilder span(group.space(), cap);
  for (const auto& g : group.generators()) span.add_generator(g);
  std::unordered_set<GroupElement, GroupElementHash> swappers;
  for (const auto& x : group.elements()) {
    for (const auto& y : group.elements()) swappers.insert(swapper(x, y));
  }
  // Deterministic insertion order keeps the builder's element order stable.
  std::vector<GroupElement> ordered(swappers.begin(), swappers.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const GroupElement& a, const GroupElement& b) {
              return std::lexicographical_compare(a.codes().begin(), a.codes().end(), b.codes().begin(),
                                                  b.codes().end());
            });
  for (const auto& s : ordered) span.add_generator(s);
  return exact_log2(span.size());
}

RankKernelReport rank_and_kernel(const CodeGroup& group) {
  const BinaryCode code = BinaryCode::from_group(group);
  RankKernelReport report;
  report.r = rank_gf2(code);
  KernelResult kernel = kernel_bruteforce(code);
  report.k = kernel.dimension;
  report.kernel_words = std::move(kernel.basis);
  report.span_dimension_check = rank_by_span_group(group);
  return report;
}

}  // namespace hq8
