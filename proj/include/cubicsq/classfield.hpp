#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubicsq/binsq.hpp"

namespace cubicsq {

/// The element alpha = a - b e^2 w attached to a point with x = a/e^2 on
/// y^2 = x^3 - m b^3, with the checks that decide whether K(sqrt(alpha))
/// is an unramified quadratic extension of K.
struct KappaReport {
  Int m;
  Int b;
  CurvePoint point;
  Int a;
  /// e > 0, gcd(a, e) = 1.
  Int e;
  CubicElement alpha;
  /// a^3 - m b^3 e^6.
  Rat norm;
  /// |y| e^3; present iff the norm is a rational square.
  std::optional<Rat> norm_sqrt;

  bool eligible_mod9 = false;
  bool gcd_ab_ok = false;
  bool two_divides_e = false;
  /// a > 0 and a = 1 mod 4.
  bool a_pos_1mod4 = false;
  /// a = 1 mod 4, any sign.
  bool a_1mod4 = false;
  /// alpha > 0 under the real embedding.
  bool alpha_positive = false;
  bool claims_unramified = false;

  /// x^6 - 3a x^4 + 3a^2 x^2 - norm.
  IntPoly sextic;
  /// P in 2E(Q), i.e. alpha is a square in K. Empty if halving ran out of effort.
  std::optional<bool> already_square;
};

/// m not = 0, +-1 mod 9.
bool eligible_mod9(const Int& m);

/// Builds the report for an affine point on y^2 = x^3 - m b^3 and fills the
/// condition flags. Throws InvalidField, InvalidPoint, EffortExceeded.
KappaReport kappa_element(const Int& m, const Int& b, const CurvePoint& p,
                          std::uint64_t effort = kDefaultEffort);

/// Recomputes the flags. claims_unramified requires e even, a = 1 mod 4,
/// alpha > 0 at the real place, m eligible mod 9 and gcd(a, b) = 1.
KappaReport unramified_conditions(KappaReport report);

/// Defining polynomial of sqrt(alpha) over Q. Throws AlphaIsSquare when P
/// is in 2E(Q). If the square check cannot finish within the effort the
/// polynomial is returned and report.already_square stays empty.
IntPoly sqrt_ext_minpoly(const KappaReport& report, std::uint64_t effort = kDefaultEffort);

/// True iff no underlying point lies in 2E(Q). All reports must share m and
/// b (FieldMismatch otherwise). This is the necessary condition for the
/// extensions to be pairwise distinct.
bool kappa_pairwise_distinct(const std::vector<KappaReport>& reports,
                             std::uint64_t effort = kDefaultEffort);

/// One row of the table of unramified quadratic extensions.
///
/// The printed element is alpha_a + alpha_b_coeff * W where
/// W = omega_sign * cbrt(m)^omega_power.
struct Table1Row {
  Int m;
  int omega_power = 1;
  int omega_sign = 1;
  Int k;
  Rat x;
  Int alpha_a;
  Int alpha_b_coeff;
  std::string cl2;
  std::vector<IntPoly> expected_sextics;
  std::string note;
};

/// Parses the JSON dataset. Throws ParseError.
std::vector<Table1Row> parse_table1(std::string_view json_text);
std::vector<Table1Row> load_table1(const std::string& path);
/// The dataset compiled into the library.
const std::vector<Table1Row>& builtin_table1();

struct Table1RowResult {
  Table1Row row;
  /// Cube of the working generator W; the row is evaluated in Q(W).
  Int generator;
  Int b;
  std::optional<KappaReport> report;
  bool on_curve = false;
  bool alpha_match = false;
  bool norm_square = false;
  /// e even, a = 1 mod 4, alpha > 0: the local conditions at 2 and infinity.
  bool local_conditions = false;
  bool sextic_match = true;
  std::vector<std::string> notes;

  bool pass() const { return on_curve && alpha_match && norm_square && local_conditions && sextic_match; }
};

struct Table1Report {
  std::vector<Table1RowResult> rows;
  bool all_pass() const;
};

Table1Report table1_verify(const std::vector<Table1Row>& rows, std::uint64_t effort = kDefaultEffort);
Table1Report table1_verify();

}  // namespace cubicsq
