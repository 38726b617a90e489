#include "cubicsq/classfield.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cubicsq/error.hpp"
#include "json.hpp"
#include "table1_data.hpp"

namespace cubicsq {

namespace {

Int mod(const Int& a, unsigned long n) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

IntPoly sextic_for(const Int& a, const Int& n) {
  return IntPoly({-n, 0, 3 * a * a, 0, -3 * a, 0, 1});
}

std::optional<bool> try_in_two_e(const MordellCurve& curve, const CurvePoint& p, std::uint64_t effort) {
  try {
    return !halve(curve, p, effort).empty();
  } catch (const EffortExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

bool eligible_mod9(const Int& m) {
  const Int r = mod(m, 9);
  return r != 0 && r != 1 && r != 8;
}

KappaReport kappa_element(const Int& m, const Int& b, const CurvePoint& p, std::uint64_t effort) {
  if (b == 0) throw std::invalid_argument("kappa_element: b must be nonzero");
  const CubicField field(m, effort);
  if (p.is_infinity()) throw InvalidPoint("kappa_element needs an affine point");
  const MordellCurve curve = MordellCurve::twist(m, Rat(b));
  if (!on_curve(curve, p)) throw InvalidPoint(p.str() + " is not on " + curve.str());
  const auto e = perfect_square_root(p.x().den());
  if (!e) throw InvalidPoint("denominator of x(P) is not a square");

  const Int& a = p.x().num();
  const Int e2 = *e * *e;
  const Int e6 = e2 * e2 * e2;
  CubicElement alpha(field, Rat(a), Rat(-b * e2));
  const Rat n = Rat(a * a * a - m * b * b * b * e6);
  // y^2 e^6 = a^3 - m b^3 e^6 for any point on the twist.
  const Rat expected_root = abs(p.y()) * Rat(*e * e2);
  if (expected_root * expected_root != n)
    throw std::logic_error("kappa_element: norm identity failed for " + p.str());

  KappaReport report{.m = m, .b = b, .point = p, .a = a, .e = *e, .alpha = std::move(alpha), .norm = n,
                     .norm_sqrt = perfect_square_root(n), .sextic = sextic_for(a, n.num()), .already_square = std::nullopt};
  report.already_square = try_in_two_e(curve, p, effort);
  return unramified_conditions(std::move(report));
}

KappaReport unramified_conditions(KappaReport r) {
  r.eligible_mod9 = eligible_mod9(r.m);
  Int g;
  mpz_gcd(g.get_mpz_t(), r.a.get_mpz_t(), r.b.get_mpz_t());
  r.gcd_ab_ok = g == 1;
  r.two_divides_e = mpz_even_p(r.e.get_mpz_t()) != 0;
  r.a_1mod4 = mod(r.a, 4) == 1;
  r.a_pos_1mod4 = r.a > 0 && r.a_1mod4;
  r.alpha_positive = canonical_sign(r.alpha) == r.alpha;
  r.claims_unramified = r.two_divides_e && r.a_1mod4 && r.alpha_positive && r.eligible_mod9 && r.gcd_ab_ok;
  return r;
}

IntPoly sqrt_ext_minpoly(const KappaReport& report, std::uint64_t effort) {
  std::optional<bool> square = report.already_square;
  if (!square) square = try_in_two_e(MordellCurve::twist(report.m, Rat(report.b)), report.point, effort);
  if (square.value_or(false))
    throw AlphaIsSquare(report.alpha.str() + " is a square in K; P is in 2E(Q)");
  return report.sextic;
}

bool kappa_pairwise_distinct(const std::vector<KappaReport>& reports, std::uint64_t effort) {
  bool distinct = true;
  for (const KappaReport& r : reports) {
    if (r.m != reports.front().m || r.b != reports.front().b)
      throw FieldMismatch("reports come from different curves");
    const bool in_two_e = r.already_square ? *r.already_square
                                           : !halve(MordellCurve::twist(r.m, Rat(r.b)), r.point, effort).empty();
    if (in_two_e) distinct = false;
  }
  return distinct;
}

namespace {

Int json_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("table row missing '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_string()) return parse_int(v.get<std::string>());
  if (v.is_number_integer()) return Int(v.get<long>());
  throw ParseError(std::string("table field '") + key + "' must be an integer string");
}

Table1Row parse_row(const nlohmann::json& j) {
  Table1Row row;
  row.m = json_int(j, "m");
  row.omega_power = j.value("omega_power", 1);
  row.omega_sign = j.value("omega_sign", 1);
  if (row.omega_power != 1 && row.omega_power != 2) throw ParseError("omega_power must be 1 or 2");
  if (row.omega_sign != 1 && row.omega_sign != -1) throw ParseError("omega_sign must be 1 or -1");
  row.k = json_int(j, "k");
  row.x = Rat(json_int(j, "x_num"), json_int(j, "x_den"));
  row.alpha_a = json_int(j, "alpha_a");
  row.alpha_b_coeff = json_int(j, "alpha_b_coeff");
  row.cl2 = j.value("cl2", "");
  row.note = j.value("note", "");
  for (const auto& poly : j.value("expected_sextics", nlohmann::json::array())) {
    std::vector<Int> desc;
    for (const auto& c : poly) desc.push_back(parse_int(c.get<std::string>()));
    row.expected_sextics.emplace_back(std::vector<Int>(desc.rbegin(), desc.rend()));
  }
  return row;
}

struct Generator {
  Int cube;   // W^3 after removing cubes
  Int scale;  // W = scale * cbrt(cube)
};

Generator working_generator(const Table1Row& row) {
  const Int power = row.omega_power == 2 ? row.m * row.m : row.m;
  const Factorization f = factorize(power);
  Generator g{Int(row.omega_sign * f.sign), 1};
  for (const auto& [p, e] : f.prime_powers) {
    g.scale *= pow(p, e / 3);
    g.cube *= pow(p, e % 3);
  }
  return g;
}

Table1RowResult verify_row(const Table1Row& row, std::uint64_t effort) {
  Table1RowResult out;
  out.row = row;
  const Generator gen = working_generator(row);
  out.generator = gen.cube;
  if (gen.cube != row.m) out.notes.push_back("evaluated in Q(cbrt(" + gen.cube.get_str() + "))");

  // k = -generator * b^3.
  const Int neg_k = -row.k;
  if (!mpz_divisible_p(neg_k.get_mpz_t(), gen.cube.get_mpz_t())) {
    out.notes.push_back("curve is not a twist y^2 = x^3 - m b^3");
    return out;
  }
  const Int b3 = neg_k / gen.cube;
  Int b;
  if (mpz_root(b.get_mpz_t(), b3.get_mpz_t(), 3) == 0) {
    out.notes.push_back("-k / m is not a cube");
    return out;
  }
  out.b = b;

  const MordellCurve curve(Rat(row.k));
  const auto y = perfect_square_root(curve.rhs(row.x));
  out.on_curve = y.has_value();
  if (!out.on_curve) {
    out.notes.push_back("x_P is not the abscissa of a rational point");
    return out;
  }
  KappaReport rep = kappa_element(gen.cube, b, CurvePoint(curve, row.x, *y), effort);

  const CubicElement printed(rep.alpha.field(), Rat(row.alpha_a), Rat(row.alpha_b_coeff * gen.scale));
  out.alpha_match = rep.alpha == printed;
  if (!out.alpha_match) out.notes.push_back("recomputed alpha = " + rep.alpha.str());
  out.norm_square = rep.norm_sqrt.has_value();
  out.local_conditions = rep.two_divides_e && rep.a_1mod4 && rep.alpha_positive;
  for (const IntPoly& f : row.expected_sextics) {
    if (f != rep.sextic) {
      out.sextic_match = false;
      out.notes.push_back("sextic mismatch: computed " + rep.sextic.str() + ", expected " + f.str());
    }
  }
  if (!rep.eligible_mod9) {
    const Int r = mod(gen.cube, 9);
    out.notes.push_back(r == 0 ? "generator " + gen.cube.get_str() + " = 0 mod 9: outside the stated range"
                               : "m = +-1 mod 9: outside the range of the ideal-square argument");
    if (gen.cube != row.m && eligible_mod9(row.m))
      out.notes.push_back("the same field is generated by cbrt(" + row.m.get_str() + "), which is in range");
  }
  if (!rep.gcd_ab_ok) {
    Int g;
    mpz_gcd(g.get_mpz_t(), rep.a.get_mpz_t(), rep.b.get_mpz_t());
    out.notes.push_back("gcd(a, b) = " + g.get_str() + ": the coprimality hypothesis does not apply");
  }
  if (!rep.already_square) out.notes.push_back("2E(Q) membership undecided within effort");
  else if (*rep.already_square) out.notes.push_back("P is in 2E(Q): alpha is a square");
  out.report = std::move(rep);
  return out;
}

}  // namespace

std::vector<Table1Row> parse_table1(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("table dataset: ") + ex.what());
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw ParseError("table dataset has no 'rows' array");
  std::vector<Table1Row> rows;
  try {
    for (const auto& j : doc["rows"]) rows.push_back(parse_row(j));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("table dataset: ") + ex.what());
  }
  return rows;
}

std::vector<Table1Row> load_table1(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table1(buf.str());
}

const std::vector<Table1Row>& builtin_table1() {
  static const std::vector<Table1Row> rows = parse_table1(detail::kTable1Json);
  return rows;
}

bool Table1Report::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass()) return false;
  return !rows.empty();
}

Table1Report table1_verify(const std::vector<Table1Row>& rows, std::uint64_t effort) {
  Table1Report report;
  report.rows.reserve(rows.size());
  for (const Table1Row& row : rows) report.rows.push_back(verify_row(row, effort));
  return report;
}

Table1Report table1_verify() { return table1_verify(builtin_table1()); }

}  // namespace cubicsq
