#pragma once

// Exact arithmetic in Z2, Z4, Q8 and the mixed direct product
// Z2^k1 x Z4^k2 x Q8^k3, together with the Gray map, commutators, swappers
// and M-sets.  Every value here is immutable once built.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hq8 {

/// Element a^i b^j of the quaternion group, stored in canonical form
/// with 0 <= i <= 3 and j in {0, 1}.
class Q8 {
 public:
  constexpr Q8() = default;
  constexpr Q8(int a_exp, int b_exp)
      : code_(static_cast<std::uint8_t>(((a_exp % 4) + 4) % 4 + 4 * (b_exp & 1))) {}

  static constexpr Q8 from_code(std::uint8_t code) { return Q8(code & 3, code >> 2); }
  static constexpr Q8 one() { return Q8(0, 0); }
  static constexpr Q8 a() { return Q8(1, 0); }
  static constexpr Q8 b() { return Q8(0, 1); }

  constexpr int a_exponent() const { return code_ & 3; }
  constexpr int b_exponent() const { return code_ >> 2; }
  /// Dense code in [0, 8): a_exponent + 4 * b_exponent.
  constexpr std::uint8_t code() const { return code_; }

  friend constexpr bool operator==(Q8, Q8) = default;

 private:
  std::uint8_t code_ = 0;
};

/// Product under a^4 = 1, b^2 = a^2, b a b^-1 = a^-1.
constexpr Q8 q8_mul(Q8 x, Q8 y) {
  const int i = x.a_exponent(), j = x.b_exponent();
  const int k = y.a_exponent(), l = y.b_exponent();
  if (j == 0) return Q8(i + k, l);
  // b a^k = a^-k b
  if (l == 0) return Q8(i - k, 1);
  return Q8(i - k + 2, 0);
}

constexpr Q8 q8_inverse(Q8 x) {
  return x.b_exponent() == 0 ? Q8(-x.a_exponent(), 0) : Q8(x.a_exponent() + 2, 1);
}

std::string_view q8_name(Q8 x);

/// Shape (k1, k2, k3) of Z2^k1 x Z4^k2 x Q8^k3.  Components are ordered
/// Z2 block, then Z4 block, then Q8 block, and indexed from 0.
struct AmbientSpace {
  int k1 = 0;
  int k2 = 0;
  int k3 = 0;

  constexpr int components() const { return k1 + k2 + k3; }
  /// Binary length of the Gray image.
  constexpr int n() const { return k1 + 2 * k2 + 4 * k3; }

  friend constexpr bool operator==(const AmbientSpace&, const AmbientSpace&) = default;
};

std::string to_string(const AmbientSpace& space);

enum class Alphabet : std::uint8_t { Z2, Z4, Q8 };

/// Packed binary word.  Bit 0 is the leftmost character of the rendered
/// string, so lexicographic order on words agrees with string order.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::size_t length);
  static BinaryWord parse(std::string_view bits);

  std::size_t size() const { return length_; }
  bool bit(std::size_t i) const;
  void set(std::size_t i, bool value);
  int weight() const;
  std::string to_string() const;
  std::span<const std::uint64_t> blocks() const { return blocks_; }

  BinaryWord& operator^=(const BinaryWord& other);
  friend BinaryWord operator^(BinaryWord lhs, const BinaryWord& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> blocks_;
};

int weight(const BinaryWord& w);
/// Throws Error(InvalidArgument) on length mismatch.
int distance(const BinaryWord& lhs, const BinaryWord& rhs);

struct BinaryWordHash {
  std::size_t operator()(const BinaryWord& w) const noexcept;
};

/// One vector of the ambient group.  Component values are stored densely:
/// Z2 as 0/1, Z4 as residues 0..3, Q8 as Q8::code().
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(AmbientSpace space, std::vector<int> z2, std::vector<int> z4, std::vector<Q8> q8);

  static GroupElement identity(AmbientSpace space);
  /// The element u mapping to the all-ones word: 1, 2 and a^2 componentwise.
  static GroupElement all_ones(AmbientSpace space);
  /// Raw constructor from dense component codes; validates ranges.
  static GroupElement from_codes(AmbientSpace space, std::vector<std::uint8_t> codes);

  const AmbientSpace& space() const { return space_; }
  Alphabet alphabet(int component) const;
  int z2(int i) const { return codes_[static_cast<std::size_t>(i)]; }
  int z4(int i) const { return codes_[static_cast<std::size_t>(space_.k1 + i)]; }
  Q8 q8(int i) const { return Q8::from_code(codes_[static_cast<std::size_t>(space_.k1 + space_.k2 + i)]); }
  std::span<const std::uint8_t> codes() const { return codes_; }

  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  AmbientSpace space_;
  std::vector<std::uint8_t> codes_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

GroupElement mul(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement square(const GroupElement& x);
/// 1, 2 or 4.
int order(const GroupElement& x);

BinaryWord gray(const GroupElement& x);

/// [x, y] with xy = [x, y] yx.
GroupElement commutator(const GroupElement& x, const GroupElement& y);
/// (x : y) with gray((x : y) x y) = gray(x) XOR gray(y).
GroupElement swapper(const GroupElement& x, const GroupElement& y);

/// 0-based indices of the components where x has an entry of order two.
/// Throws Error(InvalidArgument) when x has order 4.
std::vector<int> m_set(const GroupElement& x);

/// Tokens separated by spaces, blocks separated by `|`:
/// `0 1 | 2 3 | a b a2b`.
std::string to_string(const GroupElement& x);
GroupElement parse_element(const AmbientSpace& space, std::string_view text);
/// Infers the space from the token counts of the three blocks.
GroupElement parse_element(std::string_view text);

}  // namespace hq8
