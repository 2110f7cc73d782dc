#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sympow/criterion.hpp"

namespace sympow::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms << " ms";
  return s.str();
}

const char* verdict_text(bool contained) { return contained ? "contained" : "not contained"; }

struct Common {
  std::string target;
  std::optional<std::string> field;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("target", c.target, "builtin (fermat:<n>, klein, star3) or ideal file")->required();
  cmd->add_option("--field", c.field, "coefficient field: Q, GF(p), GF(p)[c], Q[c]");
  cmd->add_flag("--json", c.json, "machine-readable output");
}

json header(const Target& t) {
  json j;
  j["target"] = t.descriptor;
  j["field"] = t.field->name();
  return j;
}

json strings(std::span<const Polynomial> polys) {
  json a = json::array();
  for (const Polynomial& p : polys) a.push_back(p.to_string());
  return a;
}

struct CheckOptions {
  Common common;
  int m = 3;
  int r = 2;
  std::string method = "both";
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  Target t = load_target(o.common.target, o.common.field);
  bool want_criterion = o.method == "criterion" || o.method == "both";
  bool want_oracle = o.method == "oracle" || o.method == "both";
  if ((want_criterion || o.method == "prop6") && (o.m != 3 || o.r != 2))
    throw CLI::ValidationError("--method " + o.method, "only (m, r) = (3, 2) is supported; use --method oracle");

  json report = header(t);
  report["m"] = o.m;
  report["r"] = o.r;
  report["results"] = json::array();
  json timings;
  std::vector<std::string> lines;
  std::optional<bool> criterion_verdict, oracle_verdict;
  bool refused = false;

  if (want_criterion) {
    Stopwatch sw;
    try {
      Verdict v = thm_main_check(t.ideal);
      json r{{"method", "criterion"}, {"contained", v.contained}};
      if (v.contained) r["certificate"] = strings(v.certificate);
      if (v.characteristic_note) r["note"] = *v.characteristic_note;
      report["results"].push_back(r);
      criterion_verdict = v.contained;
      lines.push_back("criterion: " + std::string(verdict_text(v.contained)) + " (" + format_ms(sw.ms()) + ")");
      if (v.characteristic_note) lines.push_back("  note: " + *v.characteristic_note);
    } catch (const CharacteristicError& e) {
      refused = true;
      report["results"].push_back({{"method", "criterion"}, {"contained", nullptr}, {"note", e.what()}});
      lines.push_back(std::string("criterion: refused: ") + e.what());
    }
    timings["criterion"] = sw.ms();
  }
  if (o.method == "prop6") {
    Stopwatch sw;
    try {
      Prop6Report rep = prop6_check(hilbert_burch(t.ideal));
      json r{{"method", "prop6"}};
      // The test only ever proves non-containment.
      if (rep.implies_not_contained()) r["contained"] = false;
      else r["contained"] = nullptr;
      r["condition1"] = rep.condition1;
      r["condition2"] = rep.condition2 ? json(*rep.condition2) : json(nullptr);
      r["canonical_decomposition"] = rep.canonical_decomposition;
      report["results"].push_back(r);
      lines.push_back(std::string("prop6: condition (1) ") + (rep.condition1 ? "holds" : "fails") +
                      ", condition (2) " +
                      (rep.condition2 ? (*rep.condition2 ? "holds" : "fails") : "not evaluated") + " (" +
                      format_ms(sw.ms()) + ")");
      lines.push_back(rep.implies_not_contained() ? "  => not contained" : "  => inconclusive");
    } catch (const CharacteristicError& e) {
      refused = true;
      report["results"].push_back({{"method", "prop6"}, {"contained", nullptr}, {"note", e.what()}});
      lines.push_back(std::string("prop6: refused: ") + e.what());
    }
    timings["prop6"] = sw.ms();
  }
  if (want_oracle) {
    Stopwatch sw;
    Verdict v = oracle_check(t.ideal, o.m, o.r);
    json r{{"method", "oracle"}, {"contained", v.contained}};
    if (v.witness) r["witness"] = v.witness->to_string();
    if (v.characteristic_note) r["note"] = *v.characteristic_note;
    report["results"].push_back(r);
    oracle_verdict = v.contained;
    lines.push_back("oracle: " + std::string(verdict_text(v.contained)) + " (" + format_ms(sw.ms()) + ")");
    if (v.witness) lines.push_back("  witness: " + v.witness->to_string());
    if (v.characteristic_note) lines.push_back("  note: " + *v.characteristic_note);
    timings["oracle"] = sw.ms();
  }

  bool disagree = criterion_verdict && oracle_verdict && *criterion_verdict != *oracle_verdict;
  if (criterion_verdict && oracle_verdict) lines.push_back(disagree ? "METHODS DISAGREE" : "methods agree");
  report["timings_ms"] = timings;
  report["version"] = kVersion;

  if (o.common.json) {
    out << report.dump(2) << '\n';
  } else {
    out << t.descriptor << " over " << t.field->name() << ": I^(" << o.m << ") in I^" << o.r << "?\n";
    for (const std::string& l : lines) out << "  " << l << '\n';
  }
  if (disagree) return disagreement;
  if (refused) return characteristic_refused;
  return ok;
}

json shape_json(const ResolutionShape& s) { return {{"ranks", s.ranks}, {"twists", s.twists}}; }

int cmd_resolve(const Common& c, int power, std::ostream& out) {
  Target t = load_target(c.target, c.field);
  Stopwatch sw;
  PowerResolution res = resolve_power(t.ideal, power);
  double resolve_ms = sw.ms();
  std::optional<bool> last_map;
  double last_ms = 0;
  if (power == 3) {
    Stopwatch lw;
    last_map = check_last_map_equivalence(t.ideal);
    last_ms = lw.ms();
  }
  if (c.json) {
    json report = header(t);
    report["power"] = power;
    report["betti"] = shape_json(res.shape);
    report["betti"]["predicted"] = shape_json(res.predicted);
    if (last_map) report["last_map_matches_Y"] = *last_map;
    report["timings_ms"] = {{"resolve", resolve_ms}};
    if (last_map) report["timings_ms"]["last_map"] = last_ms;
    report["version"] = kVersion;
    out << report.dump(2) << '\n';
  } else {
    out << t.descriptor << " over " << t.field->name() << ", power " << power << '\n';
    out << "  resolution: " << res.shape.to_string() << '\n';
    out << "  ranks:";
    for (int r : res.shape.ranks) out << ' ' << r;
    out << "\n  Hilbert-Burch degrees: " << res.hb.d0 << ", " << res.hb.d1 << '\n';
    if (last_map) out << "  last map agrees with Y: " << (*last_map ? "yes" : "no") << '\n';
    out << "  time: " << format_ms(resolve_ms + last_ms) << '\n';
  }
  return last_map.value_or(true) ? ok : hypothesis_failed;
}

int cmd_syzygy(const Common& c, std::ostream& out) {
  Target t = load_target(c.target, c.field);
  Stopwatch sw;
  HilbertBurchData hb = hilbert_burch(t.ideal);
  double ms = sw.ms();
  if (c.json) {
    json report = header(t);
    report["degrees"] = {hb.d0, hb.d1};
    report["columns"] = {strings(hb.p), strings(hb.q)};
    report["minors"] = strings(hb.minors);
    report["timings_ms"] = {{"syzygy", ms}};
    report["version"] = kVersion;
    out << report.dump(2) << '\n';
  } else {
    out << t.descriptor << " over " << t.field->name() << '\n';
    out << "  column degrees: " << hb.d0 << ", " << hb.d1 << '\n';
    for (std::size_t i = 0; i < 3; ++i)
      out << "  P" << i + 1 << " = " << hb.p[i].to_string() << "\n  Q" << i + 1 << " = " << hb.q[i].to_string()
          << '\n';
    out << "  time: " << format_ms(ms) << '\n';
  }
  return ok;
}

const PointConfiguration& require_config(const Target& t, const char* command) {
  if (!t.config) throw CLI::ValidationError(command, "needs a builtin configuration");
  return *t.config;
}

int cmd_points(const Common& c, std::ostream& out) {
  Target t = load_target(c.target, c.field);
  const PointConfiguration& cfg = require_config(t, "points");
  Stopwatch sw;
  Incidence inc = cfg.lines.empty() ? Incidence{} : incidence(cfg);
  long long mult = multiplicity(cfg.ideal);
  double ms = sw.ms();
  auto point_text = [](const Point& p) {
    return "(" + p[0].to_string() + " : " + p[1].to_string() + " : " + p[2].to_string() + ")";
  };
  if (c.json) {
    json report = header(t);
    report["points"] = json::array();
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
      json p{{"coordinates", {cfg.points[i][0].to_string(), cfg.points[i][1].to_string(),
                              cfg.points[i][2].to_string()}}};
      if (!inc.counts.empty()) p["lines"] = inc.counts[i];
      report["points"].push_back(p);
    }
    report["multiplicity"] = mult;
    report["line_count"] = cfg.lines.size();
    json hist = json::array();
    for (const auto& [count, n] : inc.histogram) hist.push_back({{"lines", count}, {"points", n}});
    report["incidence"] = hist;
    report["pair_count"] = inc.pair_count;
    report["line_pairs"] = inc.line_pairs;
    report["timings_ms"] = {{"points", ms}};
    report["version"] = kVersion;
    out << report.dump(2) << '\n';
  } else {
    out << t.descriptor << " over " << t.field->name() << ": " << cfg.points.size() << " points, "
        << cfg.lines.size() << " lines, multiplicity " << mult << '\n';
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
      out << "  " << point_text(cfg.points[i]);
      if (!inc.counts.empty()) out << "  on " << inc.counts[i] << " lines";
      out << '\n';
    }
    for (const auto& [count, n] : inc.histogram) out << "  " << n << " points on " << count << " lines\n";
    out << "  pairs of lines through points: " << inc.pair_count << " of " << inc.line_pairs << '\n';
  }
  return ok;
}

int cmd_witness(const Common& c, int m, int r, const std::optional<std::string>& form, std::ostream& out) {
  Target t = load_target(c.target, c.field);
  Polynomial f = form ? parse_polynomial(*form, t.ideal.ring_handle())
                      : product_of_lines(require_config(t, "witness"));
  Stopwatch sw;
  WitnessResult w = witness_check(f, t.ideal, m, r);
  double ms = sw.ms();
  bool witness = w.in_symbolic && !w.in_ordinary;
  if (c.json) {
    json report = header(t);
    report["m"] = m;
    report["r"] = r;
    report["form"] = f.to_string();
    report["in_symbolic_power"] = w.in_symbolic;
    report["in_ordinary_power"] = w.in_ordinary;
    report["witness"] = witness;
    report["timings_ms"] = {{"witness", ms}};
    report["version"] = kVersion;
    out << report.dump(2) << '\n';
  } else {
    out << t.descriptor << " over " << t.field->name() << '\n';
    out << "  form of degree " << f.degree() << (form ? "" : " (product of the lines)") << '\n';
    out << "  in I^(" << m << "): " << (w.in_symbolic ? "yes" : "no") << '\n';
    out << "  in I^" << r << ": " << (w.in_ordinary ? "yes" : "no") << '\n';
    out << "  " << (witness ? "witnesses non-containment" : "not a witness") << " (" << format_ms(ms) << ")\n";
  }
  return ok;
}

}  // namespace

Target read_ideal_file(const std::string& path, const std::optional<std::string>& field_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::optional<std::string> declared;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("field:", 0) == 0) {
      if (declared || !lines.empty()) throw ParseError(path + ": field header must come first, once");
      declared = trim(line.substr(6));
      continue;
    }
    lines.push_back(line);
  }
  if (!declared && !field_override) throw ParseError(path + ": no field header and no --field");
  FieldHandle field = Field::parse(declared ? *declared : *field_override);
  if (declared && field_override && !(Field::parse(*field_override)->spec() == field->spec()))
    throw ParseError(path + ": --field " + *field_override + " contradicts the header " + *declared);
  if (lines.empty()) throw ParseError(path + ": no generators");
  RingHandle ring = Ring::standard(field);
  std::vector<Polynomial> gens;
  for (const std::string& l : lines) gens.push_back(parse_polynomial(l, ring));
  return Target{path, field, Ideal(ring, std::move(gens)), std::nullopt};
}

Target load_target(const std::string& name, const std::optional<std::string>& field) {
  if (is_builtin(name)) {
    FieldHandle f = Field::parse(field.value_or("Q"));
    PointConfiguration cfg = builtin(name, f);
    Ideal ideal = cfg.ideal;
    return Target{name, f, ideal, std::move(cfg)};
  }
  return read_ideal_file(name, field);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Containment of symbolic cubes in ordinary squares for ideals of points in P^2", "sympow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "decide whether I^(m) is contained in I^r");
  add_common(check_cmd, check.common);
  check_cmd->add_option("--m", check.m, "symbolic exponent")->check(CLI::PositiveNumber);
  check_cmd->add_option("--r", check.r, "ordinary exponent")->check(CLI::PositiveNumber);
  check_cmd->add_option("--method", check.method)
      ->check(CLI::IsMember({"criterion", "oracle", "both", "prop6"}));

  Common resolve;
  int power = 3;
  CLI::App* resolve_cmd = app.add_subcommand("resolve", "minimal free resolution of I^k");
  add_common(resolve_cmd, resolve);
  resolve_cmd->add_option("--power", power, "k = 1, 2 or 3")->check(CLI::Range(1, 3));

  Common syzygy;
  CLI::App* syzygy_cmd = app.add_subcommand("syzygy", "Hilbert-Burch columns of the ideal");
  add_common(syzygy_cmd, syzygy);

  Common points;
  CLI::App* points_cmd = app.add_subcommand("points", "points and line incidences of a builtin");
  add_common(points_cmd, points);

  Common witness;
  int wm = 3, wr = 2;
  std::optional<std::string> form;
  CLI::App* witness_cmd = app.add_subcommand("witness", "test a form against I^(m) and I^r");
  add_common(witness_cmd, witness);
  witness_cmd->add_option("--m", wm)->check(CLI::PositiveNumber);
  witness_cmd->add_option("--r", wr)->check(CLI::PositiveNumber);
  witness_cmd->add_option("--form", form, "form to test (default: product of the configuration lines)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*resolve_cmd) return cmd_resolve(resolve, power, out);
    if (*syzygy_cmd) return cmd_syzygy(syzygy, out);
    if (*points_cmd) return cmd_points(points, out);
    if (*witness_cmd) return cmd_witness(witness, wm, wr, form, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const FieldError& e) {
    err << "field error: " << e.what() << '\n';
    return usage_error;
  } catch (const CharacteristicError& e) {
    err << "refused: " << e.what() << '\n';
    return characteristic_refused;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return hypothesis_failed;
  }
  return usage_error;
}

}  // namespace sympow::cli
