#include "hq8/algebra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "hq8/error.hpp"

namespace hq8 {
namespace {

constexpr std::array<std::string_view, 8> kQ8Names = {"1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};

// Gray images indexed by Q8::code(), most significant nibble bit first.
constexpr std::array<std::uint8_t, 8> kQ8Gray = {
    0b0000,  // 1
    0b0101,  // a
    0b1111,  // a2
    0b1010,  // a3
    0b0110,  // b
    0b1100,  // ab
    0b1001,  // a2b
    0b0011,  // a3b
};

// Z4: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
constexpr std::array<std::uint8_t, 4> kZ4Gray = {0b00, 0b01, 0b11, 0b10};

void require_same_space(const GroupElement& x, const GroupElement& y) {
  if (!(x.space() == y.space())) {
    throw Error(ErrorCode::SpaceMismatch,
                "space mismatch: " + to_string(x.space()) + " vs " + to_string(y.space()));
  }
}

// Parity bits (a-exponent mod 2, b-exponent) select the coset of <a^2>.
constexpr int q8_p(Q8 x) { return x.a_exponent() & 1; }
constexpr int q8_q(Q8 x) { return x.b_exponent(); }

template <typename ComponentOp>
GroupElement componentwise(const GroupElement& x, const GroupElement& y, ComponentOp op) {
  require_same_space(x, y);
  const AmbientSpace& s = x.space();
  std::vector<std::uint8_t> out(static_cast<std::size_t>(s.components()));
  const auto xc = x.codes();
  const auto yc = y.codes();
  for (int i = 0; i < s.components(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = op(x.alphabet(i), xc[idx], yc[idx]);
  }
  return GroupElement::from_codes(s, std::move(out));
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
    } else if (c == '|') {
      tokens.push_back(text.substr(i, 1));
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '|' && text[j] != '\r' &&
             text[j] != '\n') {
        ++j;
      }
      tokens.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

struct Blocks {
  std::vector<std::string_view> z2, z4, q8;
};

Blocks split_blocks(std::string_view text) {
  Blocks blocks;
  int block = 0;
  for (auto tok : split_tokens(text)) {
    if (tok == "|") {
      if (++block > 2) throw Error(ErrorCode::Parse, "too many '|' separators in '" + std::string(text) + "'");
      continue;
    }
    (block == 0 ? blocks.z2 : block == 1 ? blocks.z4 : blocks.q8).push_back(tok);
  }
  if (block != 2) throw Error(ErrorCode::Parse, "expected two '|' separators in '" + std::string(text) + "'");
  return blocks;
}

std::uint8_t parse_z2(std::string_view tok) {
  if (tok == "0") return 0;
  if (tok == "1") return 1;
  throw Error(ErrorCode::Parse, "bad Z2 entry '" + std::string(tok) + "'");
}

std::uint8_t parse_z4(std::string_view tok) {
  if (tok.size() == 1 && tok[0] >= '0' && tok[0] <= '3') return static_cast<std::uint8_t>(tok[0] - '0');
  throw Error(ErrorCode::Parse, "bad Z4 entry '" + std::string(tok) + "'");
}

std::uint8_t parse_q8(std::string_view tok) {
  for (std::size_t c = 0; c < kQ8Names.size(); ++c) {
    if (kQ8Names[c] == tok) return static_cast<std::uint8_t>(c);
  }
  throw Error(ErrorCode::Parse, "bad Q8 entry '" + std::string(tok) + "'");
}

}  // namespace

std::string_view q8_name(Q8 x) { return kQ8Names[x.code()]; }

std::string to_string(const AmbientSpace& space) {
  std::ostringstream os;
  os << "Z2^" << space.k1 << " x Z4^" << space.k2 << " x Q8^" << space.k3;
  return os.str();
}

// ---------------------------------------------------------------------------
// BinaryWord

BinaryWord::BinaryWord(std::size_t length) : length_(length), blocks_((length + 63) / 64, 0) {}

BinaryWord BinaryWord::parse(std::string_view bits) {
  BinaryWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i, true);
    } else if (bits[i] != '0') {
      throw Error(ErrorCode::Parse, "binary word contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return w;
}

bool BinaryWord::bit(std::size_t i) const { return (blocks_[i / 64] >> (63 - i % 64)) & 1u; }

void BinaryWord::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (63 - i % 64);
  if (value) {
    blocks_[i / 64] |= mask;
  } else {
    blocks_[i / 64] &= ~mask;
  }
}

int BinaryWord::weight() const {
  int w = 0;
  for (auto b : blocks_) w += std::popcount(b);
  return w;
}

std::string BinaryWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

BinaryWord& BinaryWord::operator^=(const BinaryWord& other) {
  if (other.length_ != length_) throw Error(ErrorCode::InvalidArgument, "binary word length mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= other.blocks_[i];
  return *this;
}

std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs) {
  if (auto c = lhs.blocks_ <=> rhs.blocks_; c != 0) return c;
  return lhs.length_ <=> rhs.length_;
}

int weight(const BinaryWord& w) { return w.weight(); }

int distance(const BinaryWord& lhs, const BinaryWord& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorCode::InvalidArgument, "binary word length mismatch");
  int d = 0;
  const auto a = lhs.blocks();
  const auto b = rhs.blocks();
  for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
  return d;
}

std::size_t BinaryWordHash::operator()(const BinaryWord& w) const noexcept {
  std::size_t h = w.size();
  for (auto b : w.blocks()) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(AmbientSpace space, std::vector<int> z2, std::vector<int> z4, std::vector<Q8> q8)
    : space_(space) {
  if (static_cast<int>(z2.size()) != space.k1 || static_cast<int>(z4.size()) != space.k2 ||
      static_cast<int>(q8.size()) != space.k3) {
    throw Error(ErrorCode::InvalidArgument, "block lengths do not match " + to_string(space));
  }
  codes_.reserve(static_cast<std::size_t>(space.components()));
  for (int v : z2) codes_.push_back(static_cast<std::uint8_t>(((v % 2) + 2) % 2));
  for (int v : z4) codes_.push_back(static_cast<std::uint8_t>(((v % 4) + 4) % 4));
  for (Q8 v : q8) codes_.push_back(v.code());
}

GroupElement GroupElement::identity(AmbientSpace space) {
  return from_codes(space, std::vector<std::uint8_t>(static_cast<std::size_t>(space.components()), 0));
}

GroupElement GroupElement::all_ones(AmbientSpace space) {
  std::vector<std::uint8_t> codes;
  codes.reserve(static_cast<std::size_t>(space.components()));
  codes.insert(codes.end(), static_cast<std::size_t>(space.k1), 1);
  codes.insert(codes.end(), static_cast<std::size_t>(space.k2), 2);
  codes.insert(codes.end(), static_cast<std::size_t>(space.k3), Q8(2, 0).code());
  return from_codes(space, std::move(codes));
}

GroupElement GroupElement::from_codes(AmbientSpace space, std::vector<std::uint8_t> codes) {
  if (static_cast<int>(codes.size()) != space.components()) {
    throw Error(ErrorCode::InvalidArgument, "component count does not match " + to_string(space));
  }
  GroupElement x;
  x.space_ = space;
  for (int i = 0; i < space.components(); ++i) {
    const int limit = i < space.k1 ? 2 : i < space.k1 + space.k2 ? 4 : 8;
    if (codes[static_cast<std::size_t>(i)] >= limit) {
      throw Error(ErrorCode::InvalidArgument, "component value out of range");
    }
  }
  x.codes_ = std::move(codes);
  return x;
}

Alphabet GroupElement::alphabet(int component) const {
  if (component < space_.k1) return Alphabet::Z2;
  if (component < space_.k1 + space_.k2) return Alphabet::Z4;
  return Alphabet::Q8;
}

bool GroupElement::is_identity() const {
  return std::all_of(codes_.begin(), codes_.end(), [](std::uint8_t c) { return c == 0; });
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  const auto c = x.codes();
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(c.data()), c.size()));
}

GroupElement mul(const GroupElement& x, const GroupElement& y) {
  return componentwise(x, y, [](Alphabet a, std::uint8_t u, std::uint8_t v) -> std::uint8_t {
    switch (a) {
      case Alphabet::Z2: return u ^ v;
      case Alphabet::Z4: return static_cast<std::uint8_t>((u + v) & 3);
      case Alphabet::Q8: break;
    }
    return q8_mul(Q8::from_code(u), Q8::from_code(v)).code();
  });
}

GroupElement inverse(const GroupElement& x) {
  std::vector<std::uint8_t> out(x.codes().begin(), x.codes().end());
  for (int i = 0; i < x.space().components(); ++i) {
    auto& c = out[static_cast<std::size_t>(i)];
    switch (x.alphabet(i)) {
      case Alphabet::Z2: break;
      case Alphabet::Z4: c = static_cast<std::uint8_t>((4 - c) & 3); break;
      case Alphabet::Q8: c = q8_inverse(Q8::from_code(c)).code(); break;
    }
  }
  return GroupElement::from_codes(x.space(), std::move(out));
}

GroupElement square(const GroupElement& x) { return mul(x, x); }

int order(const GroupElement& x) {
  if (x.is_identity()) return 1;
  return square(x).is_identity() ? 2 : 4;
}

BinaryWord gray(const GroupElement& x) {
  const AmbientSpace& s = x.space();
  BinaryWord w(static_cast<std::size_t>(s.n()));
  std::size_t pos = 0;
  const auto codes = x.codes();
  for (int i = 0; i < s.components(); ++i) {
    const std::uint8_t c = codes[static_cast<std::size_t>(i)];
    switch (x.alphabet(i)) {
      case Alphabet::Z2:
        w.set(pos++, c != 0);
        break;
      case Alphabet::Z4:
        w.set(pos++, (kZ4Gray[c] >> 1) & 1);
        w.set(pos++, kZ4Gray[c] & 1);
        break;
      case Alphabet::Q8:
        for (int b = 3; b >= 0; --b) w.set(pos++, (kQ8Gray[c] >> b) & 1);
        break;
    }
  }
  return w;
}

// Closed forms read off the swapper and commutator tables.  With
// p = (a-exponent mod 2) and q = b-exponent, Q8 entries give
//   (x : y) = a^(2 (p1 p2 + q1 q2 + p1 q2)),   [x, y] = a^(2 (p1 q2 + q1 p2)),
// and Z4 entries give (x : y) = 2 (x mod 2)(y mod 2), [x, y] = 0.
GroupElement commutator(const GroupElement& x, const GroupElement& y) {
  return componentwise(x, y, [](Alphabet a, std::uint8_t u, std::uint8_t v) -> std::uint8_t {
    if (a != Alphabet::Q8) return 0;
    const Q8 s = Q8::from_code(u), t = Q8::from_code(v);
    const int bit = (q8_p(s) & q8_q(t)) ^ (q8_q(s) & q8_p(t));
    return Q8(2 * bit, 0).code();
  });
}

GroupElement swapper(const GroupElement& x, const GroupElement& y) {
  return componentwise(x, y, [](Alphabet a, std::uint8_t u, std::uint8_t v) -> std::uint8_t {
    switch (a) {
      case Alphabet::Z2: return 0;
      case Alphabet::Z4: return static_cast<std::uint8_t>(2 * (u & v & 1));
      case Alphabet::Q8: break;
    }
    const Q8 s = Q8::from_code(u), t = Q8::from_code(v);
    const int bit = (q8_p(s) & q8_p(t)) ^ (q8_q(s) & q8_q(t)) ^ (q8_p(s) & q8_q(t));
    return Q8(2 * bit, 0).code();
  });
}

std::vector<int> m_set(const GroupElement& x) {
  if (order(x) == 4) throw Error(ErrorCode::InvalidArgument, "M-set is defined only for elements of order <= 2");
  std::vector<int> out;
  const auto codes = x.codes();
  for (int i = 0; i < x.space().components(); ++i) {
    if (codes[static_cast<std::size_t>(i)] != 0) out.push_back(i);
  }
  return out;
}

std::string to_string(const GroupElement& x) {
  std::string out;
  auto put = [&out](std::string_view tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  };
  const AmbientSpace& s = x.space();
  for (int i = 0; i < s.k1; ++i) put(x.z2(i) ? "1" : "0");
  put("|");
  static constexpr std::array<std::string_view, 4> kDigits = {"0", "1", "2", "3"};
  for (int i = 0; i < s.k2; ++i) put(kDigits[static_cast<std::size_t>(x.z4(i))]);
  put("|");
  for (int i = 0; i < s.k3; ++i) put(q8_name(x.q8(i)));
  return out;
}

GroupElement parse_element(const AmbientSpace& space, std::string_view text) {
  GroupElement x = parse_element(text);
  if (!(x.space() == space)) {
    throw Error(ErrorCode::Parse, "element '" + std::string(text) + "' does not fit " + to_string(space));
  }
  return x;
}

GroupElement parse_element(std::string_view text) {
  const Blocks blocks = split_blocks(text);
  AmbientSpace space{static_cast<int>(blocks.z2.size()), static_cast<int>(blocks.z4.size()),
                     static_cast<int>(blocks.q8.size())};
  std::vector<std::uint8_t> codes;
  codes.reserve(static_cast<std::size_t>(space.components()));
  for (auto t : blocks.z2) codes.push_back(parse_z2(t));
  for (auto t : blocks.z4) codes.push_back(parse_z4(t));
  for (auto t : blocks.q8) codes.push_back(parse_q8(t));
  return GroupElement::from_codes(space, std::move(codes));
}

}  // namespace hq8
