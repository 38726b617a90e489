#include "cli.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "CLI11.hpp"
#include "cubicsq/cubicsq.hpp"
#include "json.hpp"

namespace cubicsq::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  bool json_output = false;
  std::uint64_t effort = kDefaultEffort;
  long precision = kDefaultPrecisionDigits;
  std::string table_path;
  std::ostream* out = nullptr;
};

class Tokens {
 public:
  Tokens(const std::vector<std::string>& t, std::string usage) : t_(t), usage_(std::move(usage)) {}

  const std::string& next(const char* what) {
    if (i_ >= t_.size()) throw UsageError(std::string("missing ") + what + "; usage: " + usage_);
    return t_[i_++];
  }
  Rat rat(const char* what) { return Rat::parse(next(what)); }
  Int integer(const char* what) { return parse_int(next(what)); }
  bool peek_inf() const { return i_ < t_.size() && t_[i_] == "inf"; }
  void done() const {
    if (i_ != t_.size()) throw UsageError("unexpected argument '" + t_[i_] + "'; usage: " + usage_);
  }

  // A point is "inf" or two rationals; validated against the curve.
  CurvePoint point(const MordellCurve& curve, const char* what) {
    if (peek_inf()) {
      ++i_;
      return CurvePoint::infinity();
    }
    Rat x = rat(what);
    Rat y = rat(what);
    return CurvePoint(curve, std::move(x), std::move(y));
  }

  // Parses everything up front so malformed input fails before computing.
  struct PointArgs {
    bool inf = false;
    Rat x, y;
  };
  PointArgs point_args(const char* what) {
    if (peek_inf()) {
      ++i_;
      return {true, {}, {}};
    }
    PointArgs p;
    p.x = rat(what);
    p.y = rat(what);
    return p;
  }

 private:
  const std::vector<std::string>& t_;
  std::string usage_;
  std::size_t i_ = 0;
};

CurvePoint make_point(const MordellCurve& curve, const Tokens::PointArgs& p) {
  return p.inf ? CurvePoint::infinity() : CurvePoint(curve, p.x, p.y);
}

json point_json(const CurvePoint& p) {
  if (p.is_infinity()) return "inf";
  return json{{"x", p.x().str()}, {"y", p.y().str()}};
}

json element_json(const CubicElement& a) {
  return json{{"m", a.m().get_str()}, {"r", a.r().str()}, {"s", a.s().str()}, {"t", a.t().str()}};
}

json poly_json(const IntPoly& p) {
  json desc = json::array();
  for (int i = p.degree(); i >= 0; --i) desc.push_back(p[static_cast<std::size_t>(i)].get_str());
  return desc;
}

std::string element_text(const CubicElement& a) {
  return a.str() + "   (w = cbrt(" + a.m().get_str() + "))";
}

void emit(const Context& ctx, const std::string& command, json fields, const std::vector<std::string>& text) {
  if (ctx.json_output) {
    json record = std::move(fields);
    record["command"] = command;
    *ctx.out << record.dump() << '\n';
  } else {
    for (const auto& line : text) *ctx.out << line << '\n';
  }
}

int curve_binary(const Context& ctx, const std::vector<std::string>& args, const std::string& command) {
  Tokens tok(args, command + " k P Q   (a point is 'x y' or 'inf')");
  const Rat k = tok.rat("k");
  const auto p = tok.point_args("P");
  const auto q = tok.point_args("Q");
  tok.done();
  const MordellCurve curve(k);
  const CurvePoint sum = add(curve, make_point(curve, p), make_point(curve, q));
  emit(ctx, command, {{"k", k.str()}, {"result", point_json(sum)}}, {sum.str()});
  return kExitOk;
}

int curve_double(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "curve-double k P");
  const Rat k = tok.rat("k");
  const auto p = tok.point_args("P");
  tok.done();
  const MordellCurve curve(k);
  const CurvePoint r = double_point(curve, make_point(curve, p));
  emit(ctx, "curve-double", {{"k", k.str()}, {"result", point_json(r)}}, {r.str()});
  return kExitOk;
}

int curve_mul(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "curve-mul k n P");
  const Rat k = tok.rat("k");
  const Int n = tok.integer("n");
  const auto p = tok.point_args("P");
  tok.done();
  const MordellCurve curve(k);
  const CurvePoint r = scalar_mul(curve, n, make_point(curve, p));
  emit(ctx, "curve-mul", {{"k", k.str()}, {"n", n.get_str()}, {"result", point_json(r)}}, {r.str()});
  return kExitOk;
}

int halve_cmd(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "halve k P");
  const Rat k = tok.rat("k");
  const auto p = tok.point_args("P");
  tok.done();
  const MordellCurve curve(k);
  const auto pre = halve(curve, make_point(curve, p), ctx.effort);
  json list = json::array();
  std::vector<std::string> text;
  for (const auto& q : pre) {
    list.push_back(point_json(q));
    text.push_back(q.str());
  }
  if (text.empty()) text.push_back("no rational preimage");
  emit(ctx, "halve", {{"k", k.str()}, {"preimages", list}}, text);
  return kExitOk;
}

int search_cmd(const Context& ctx, const std::vector<std::string>& args, long e_bound, long a_bound) {
  Tokens tok(args, "search k --e-bound E --a-bound A");
  const Rat k = tok.rat("k");
  tok.done();
  const auto pts = search_points(MordellCurve(k), e_bound, a_bound);
  json list = json::array();
  std::vector<std::string> text;
  for (const auto& q : pts) {
    list.push_back(point_json(q));
    text.push_back(q.str());
  }
  text.push_back(std::to_string(pts.size()) + " points");
  emit(ctx, "search",
       {{"k", k.str()}, {"e_bound", std::to_string(e_bound)}, {"a_bound", std::to_string(a_bound)}, {"points", list}},
       text);
  return kExitOk;
}

int from_point(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "from-point m b x y");
  const Int m = tok.integer("m");
  const Rat b = tok.rat("b");
  const Rat x = tok.rat("x");
  const Rat y = tok.rat("y");
  tok.done();
  const CubicField field(m, ctx.effort);
  const MordellCurve curve = MordellCurve::twist(m, b);
  const auto w = elem_from_point(field, b, CurvePoint(curve, x, y));
  emit(ctx, "from-point",
       {{"b", b.str()}, {"point", point_json(w.point)}, {"alpha", element_json(w.alpha)}, {"a", w.a.str()}},
       {"alpha = " + element_text(w.alpha), "alpha^2 = " + CubicElement(field, w.a, -b).str()});
  return kExitOk;
}

int to_point(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "to-point m r s t");
  const Int m = tok.integer("m");
  const Rat r = tok.rat("r"), s = tok.rat("s"), t = tok.rat("t");
  tok.done();
  const CubicElement alpha(CubicField(m, ctx.effort), r, s, t);
  const TwistPoint tp = point_from_elem(alpha);
  emit(ctx, "to-point", {{"alpha", element_json(alpha)}, {"b", tp.b.str()}, {"point", point_json(tp.point)}},
       {"b = " + tp.b.str(), "P = " + tp.point.str()});
  return kExitOk;
}

int star_cmd(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "star m r1 s1 t1 r2 s2 t2");
  const Int m = tok.integer("m");
  const Rat r1 = tok.rat("r1"), s1 = tok.rat("s1"), t1 = tok.rat("t1");
  const Rat r2 = tok.rat("r2"), s2 = tok.rat("s2"), t2 = tok.rat("t2");
  tok.done();
  const CubicField field(m, ctx.effort);
  const CubicElement a1(field, r1, s1, t1), a2(field, r2, s2, t2);
  const CubicElement result = star(a1, a2);
  json fields = {{"alpha1", element_json(a1)}, {"alpha2", element_json(a2)}, {"result", element_json(result)}};
  std::vector<std::string> text;
  const bool chord = !a1.t().is_zero() && !a2.t().is_zero() && a1.s() * a2.t() != a2.s() * a1.t();
  if (chord) {
    const StarTerms st = star_terms(a1, a2);
    fields["terms"] = {{"S_minus", st.s_minus.str()}, {"S_plus", st.s_plus.str()}, {"T_minus", st.t_minus.str()},
                       {"T_plus", st.t_plus.str()},   {"Sigma", st.sigma.str()}, {"r3", st.r3.str()},
                       {"s3", st.s3.str()},           {"t3", st.t3.str()}};
    text = {"S- = " + st.s_minus.str(), "S+ = " + st.s_plus.str(), "T- = " + st.t_minus.str(),
            "T+ = " + st.t_plus.str(),  "Sigma = " + st.sigma.str(), "r3 = " + st.r3.str(),
            "s3 = " + st.s3.str(),      "t3 = " + st.t3.str()};
  }
  text.push_back("star = " + element_text(result));
  emit(ctx, "star", fields, text);
  return kExitOk;
}

int square_test(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "square-test m a b");
  const Int m = tok.integer("m");
  const Rat a = tok.rat("a"), b = tok.rat("b");
  tok.done();
  const CubicField field(m, ctx.effort);
  const auto root = is_square_binomial(field, a, b, ctx.effort);
  // Independent numeric route; only a disagreement is an error.
  std::string numeric = "agrees";
  try {
    const auto approx = sqrt_in_field(CubicElement(field, a, -b), ctx.precision);
    if (approx.has_value() != root.has_value()) throw std::logic_error("square-test: numeric square root disagrees");
  } catch (const PrecisionExceeded&) {
    numeric = "inconclusive";
  }
  json fields = {{"m", m.get_str()}, {"a", a.str()}, {"b", b.str()}, {"square", root.has_value()},
                 {"numeric_check", numeric}};
  if (root) fields["root"] = element_json(*root);
  emit(ctx, "square-test", fields,
       {root ? "square: " + element_text(*root) : "not a square", "numeric check: " + numeric});
  return kExitOk;
}

int norm_cmd(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "norm m r s t");
  const Int m = tok.integer("m");
  const Rat r = tok.rat("r"), s = tok.rat("s"), t = tok.rat("t");
  tok.done();
  const CubicElement alpha(CubicField(m, ctx.effort), r, s, t);
  const Rat n = norm(alpha), tr = trace(alpha);
  emit(ctx, "norm", {{"alpha", element_json(alpha)}, {"norm", n.str()}, {"trace", tr.str()}},
       {"norm = " + n.str(), "trace = " + tr.str()});
  return kExitOk;
}

KappaReport kappa_from(const Context& ctx, Tokens& tok) {
  const Int m = tok.integer("m");
  const Int b = tok.integer("b");
  const Rat x = tok.rat("x"), y = tok.rat("y");
  tok.done();
  return kappa_element(m, b, CurvePoint(MordellCurve::twist(m, Rat(b)), x, y), ctx.effort);
}

json kappa_json(const KappaReport& r) {
  json j = {{"m", r.m.get_str()},
            {"b", r.b.get_str()},
            {"point", point_json(r.point)},
            {"a", r.a.get_str()},
            {"e", r.e.get_str()},
            {"alpha", element_json(r.alpha)},
            {"norm", r.norm.str()},
            {"eligible_mod9", r.eligible_mod9},
            {"gcd_ab_ok", r.gcd_ab_ok},
            {"two_divides_e", r.two_divides_e},
            {"a_pos_1mod4", r.a_pos_1mod4},
            {"a_1mod4", r.a_1mod4},
            {"alpha_positive", r.alpha_positive},
            {"claims_unramified", r.claims_unramified},
            {"sextic", poly_json(r.sextic)}};
  j["norm_sqrt"] = r.norm_sqrt ? json(r.norm_sqrt->str()) : json(nullptr);
  j["already_square"] = r.already_square ? json(*r.already_square) : json(nullptr);
  return j;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

int kappa_cmd(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "kappa m b x y");
  const KappaReport r = kappa_from(ctx, tok);
  emit(ctx, "kappa", kappa_json(r),
       {"alpha = " + element_text(r.alpha), "a = " + r.a.get_str() + ", e = " + r.e.get_str(),
        "norm = " + r.norm.str() + (r.norm_sqrt ? " = (" + r.norm_sqrt->str() + ")^2" : ""),
        "eligible mod 9: " + yes_no(r.eligible_mod9), "gcd(a, b) = 1: " + yes_no(r.gcd_ab_ok),
        "e even: " + yes_no(r.two_divides_e), "a = 1 mod 4: " + yes_no(r.a_1mod4),
        "a > 0 and a = 1 mod 4: " + yes_no(r.a_pos_1mod4), "alpha > 0: " + yes_no(r.alpha_positive),
        "P in 2E(Q): " + (r.already_square ? yes_no(*r.already_square) : std::string("undecided")),
        "claims unramified: " + yes_no(r.claims_unramified), "sextic: " + r.sextic.str()});
  return kExitOk;
}

int ext_poly_cmd(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "ext-poly m b x y");
  const KappaReport r = kappa_from(ctx, tok);
  const IntPoly f = sqrt_ext_minpoly(r, ctx.effort);
  emit(ctx, "ext-poly", {{"alpha", element_json(r.alpha)}, {"polynomial", poly_json(f)}}, {f.str()});
  return kExitOk;
}

int table1_cmd(const Context& ctx, const std::vector<std::string>& args) {
  Tokens tok(args, "table1 [--table PATH]");
  tok.done();
  const Table1Report report =
      ctx.table_path.empty() ? table1_verify() : table1_verify(load_table1(ctx.table_path), ctx.effort);
  for (const auto& row : report.rows) {
    json j = {{"m", row.row.m.get_str()},
              {"k", row.row.k.get_str()},
              {"x", row.row.x.str()},
              {"generator", row.generator.get_str()},
              {"b", row.b.get_str()},
              {"on_curve", row.on_curve},
              {"alpha_match", row.alpha_match},
              {"norm_square", row.norm_square},
              {"local_conditions", row.local_conditions},
              {"sextic_match", row.sextic_match},
              {"pass", row.pass()},
              {"notes", row.notes}};
    std::vector<std::string> text;
    std::string line = "m = " + row.row.m.get_str() + "  x_P = " + row.row.x.str();
    if (row.report) {
      j["kappa"] = kappa_json(*row.report);
      line += "  alpha = " + row.report->alpha.str() + "  claims unramified: " + yes_no(row.report->claims_unramified);
    }
    line += row.pass() ? "  PASS" : "  FAIL";
    text.push_back(line);
    if (row.report && !row.row.expected_sextics.empty()) text.push_back("    f = " + row.report->sextic.str());
    for (const auto& n : row.notes) text.push_back("    note: " + n);
    emit(ctx, "table1", j, text);
  }
  const bool ok = report.all_pass();
  emit(ctx, "table1-summary", {{"rows", report.rows.size()}, {"all_pass", ok}},
       {std::to_string(report.rows.size()) + " rows, " + (ok ? "all pass" : "FAILURES")});
  return ok ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial squares in pure cubic fields and rational points on Mordell curves", "cubicsq"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  ctx.out = &out;
  app.add_flag("--json", ctx.json_output, "Emit one JSON record per result");
  app.add_option("--effort", ctx.effort, "Work bound for factoring and root enumeration")->capture_default_str();
  app.add_option("--precision", ctx.precision, "Decimal digits for numeric square roots")->capture_default_str();

  std::vector<std::string> positional;
  long e_bound = 10, a_bound = 1000;
  using Handler = std::function<int(const Context&, const std::vector<std::string>&)>;
  std::map<CLI::App*, Handler> handlers;

  auto sub = [&](const std::string& name, const std::string& desc, Handler h) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("args", positional, "Arguments")->expected(0, -1);
    s->prefix_command(false);
    handlers[s] = std::move(h);
    return s;
  };
  sub("curve-add", "P + Q on y^2 = x^3 + k", [](const Context& c, const auto& a) { return curve_binary(c, a, "curve-add"); });
  sub("curve-double", "2P on y^2 = x^3 + k", curve_double);
  sub("curve-mul", "nP on y^2 = x^3 + k", curve_mul);
  sub("halve", "All Q with 2Q = P", halve_cmd);
  CLI::App* search = sub("search", "Points with x = a/e^2 in a box",
                         [&](const Context& c, const auto& a) { return search_cmd(c, a, e_bound, a_bound); });
  search->add_option("--e-bound", e_bound, "Largest e")->capture_default_str();
  search->add_option("--a-bound", a_bound, "Largest |a|")->capture_default_str();
  sub("from-point", "Element attached to a point on y^2 = x^3 - m b^3", from_point);
  sub("to-point", "Point attached to r + s w + t w^2", to_point);
  sub("star", "Transported group law on binomial roots", star_cmd);
  sub("square-test", "Decide whether a - b w is a square", square_test);
  sub("norm", "Norm and trace of r + s w + t w^2", norm_cmd);
  sub("kappa", "alpha = a - b e^2 w and its unramifiedness checks", kappa_cmd);
  sub("ext-poly", "Defining sextic of K(sqrt(alpha))", ext_poly_cmd);
  CLI::App* table = sub("table1", "Verify the table of unramified quadratic extensions", table1_cmd);
  table->add_option("--table", ctx.table_path, "Dataset path (default: built in)");

  // Negative rationals such as -3/5 are arguments, not options.
  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it) argv.push_back(*it);
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (const auto& [s, h] : handlers)
      if (s->parsed()) return h(ctx, positional);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: ParseError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: InvalidArgument: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::domain_error& e) {
    err << "error: DomainError: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace cubicsq::cli
