#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hq8/code.hpp"

namespace hq8 {

enum class Shape { One, OneStar, Two, Three, Four, FourStar, Five };

inline constexpr Shape kAllShapes[] = {Shape::One,  Shape::OneStar,  Shape::Two, Shape::Three,
                                       Shape::Four, Shape::FourStar, Shape::Five};

/// "1", "1*", "2", "3", "4", "4*", "5".
std::string_view shape_label(Shape shape);
std::optional<Shape> parse_shape(std::string_view label);
/// log2 |C / A(C)| for codes of this shape.
int shape_upsilon(Shape shape);
/// True for shapes where u is the square of an order-4 element.
bool shape_has_u_square(Shape shape);

struct CodeProfile {
  int m = 0;
  int n = 0;
  int sigma = 0;
  int tau = 0;
  int tau_bar = 0;
  int upsilon = 0;
  int delta = 0;
  int rho = 0;

  friend bool operator==(const CodeProfile&, const CodeProfile&) = default;
};

/// x's span T(C), y's extend them to Z(C), z's extend to C.
struct NormalizedGenerators {
  std::vector<GroupElement> x, y, z;
};

struct StandardGenerators {
  std::vector<GroupElement> x, r, s;

  std::vector<GroupElement> all() const;
};

struct StructureReport {
  CodeGroup torsion;
  CodeGroup center;
  CodeGroup abelian_max;
  CodeGroup r_part;
  CodeProfile profile;
  Shape shape = Shape::One;
  StandardGenerators std_gens;
};

/// Outcome of a verification; `failure` names the first failed clause.
struct Verdict {
  bool ok = true;
  std::string failure;

  explicit operator bool() const { return ok; }
};

CodeGroup torsion(const CodeGroup& group);
CodeGroup center(const CodeGroup& group);

/// Throws Error(NotHadamard) when the Gray image is not Hadamard and
/// Error(InvalidArgument) when |C| != 2^(sigma+delta+rho).
NormalizedGenerators normalized_generators(const CodeGroup& group);

/// Throws Error(NotHadamard) or Error(Unclassifiable).
Shape classify_shape(const CodeGroup& group);

/// Standardized generators and the subgroups T, Z, A, R.  Every invariant
/// of the standard form is validated; Error(Unclassifiable) if no
/// candidate choice satisfies them.
StructureReport standardize(const CodeGroup& group);

/// Checks every invariant of a standard generator set against `group`.
Verdict validate_standard_form(const CodeGroup& group, Shape shape, const StandardGenerators& gens);

/// Existence condition of the shape's row at length 2^m, including the
/// lower bounds on sigma needed for the row's block sizes to be integers.
bool table3_exists(Shape shape, int m, int tau);
/// (k1, k2, k3) of the shape's row; nullopt when the row does not exist.
std::optional<AmbientSpace> table3_space(Shape shape, int m, int tau);
Verdict verify_table3(const StructureReport& report, const AmbientSpace& space);

/// Column duplication of A(C) for upsilon = 1, quadruplication for
/// upsilon = 2; vacuous for upsilon = 0.
Verdict verify_duplication(const StructureReport& report);

struct Measurement {
  int k = 0;
  int r = 0;
  std::string case_tag;  // "1a" .. "5c"
  int predicted_k = 0;
  int r_min = 0;  // predicted rank range; equal bounds except in case 4c
  int r_max = 0;
};

/// Rank and kernel dimension together with the matching case of the
/// rank/kernel case analysis.  Throws Error(CaseMismatch) when the
/// measured values disagree with the case's formula.
Measurement measure(const CodeGroup& group);
Measurement measure(const CodeGroup& group, const StructureReport& report);

/// `shape=3 sigma=3 tau=2 tau_bar=2 upsilon=1 delta=0 rho=3`
std::string classify_line(const StructureReport& report);
/// key=value lines: shape, m, n, sigma, tau, tau_bar, upsilon, delta, rho,
/// then k, r, case when a measurement is given.
std::string render_report(const StructureReport& report, const Measurement* measurement = nullptr);

int binomial(int n, int k);

}  // namespace hq8
