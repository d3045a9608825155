#pragma once

#include <string>
#include <vector>

#include "hq8/algebra.hpp"

namespace hq8 {

/// A named generator list, ready to close into a CodeGroup.
struct Fixture {
  std::string name;
  AmbientSpace space;
  std::vector<GroupElement> generators;
};

/// Shape-2 codes of length 128 in Q8^32: r1, r2, r3, x1 plus one s1 per
/// member, s1 in {(y1,y1), (y2,y1), (y3,y3), (y4,y4), (y5,y5), (y6,y6)}.
std::vector<Fixture> shape2_length128_family();

/// Shape-3 codes of length 32 in Z4^4 x Q8^6: r1, r2 plus three choices of s1.
std::vector<Fixture> shape3_length32_family();

/// Shape-4 code of length 8 in Z2^4 x Q8: T = <u, (1111;1), (0000;a2)>,
/// r1 = (1100; a), s1 = (1010; b).
Fixture shape4_length8();

}  // namespace hq8
