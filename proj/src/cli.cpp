#include "zonodeep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zonodeep/asymmetry.hpp"
#include "zonodeep/errors.hpp"
#include "zonodeep/exactmath.hpp"
#include "zonodeep/lonelyrunner.hpp"
#include "zonodeep/numtheory.hpp"
#include "zonodeep/parallelepiped.hpp"
#include "zonodeep/rabbit.hpp"
#include "zonodeep/zonotope.hpp"

namespace zonodeep {

namespace {

// Flat report with deterministic field order; every value is a string in the
// same syntax the CLI accepts, so printed output reparses to equal values.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

IntVec parse_int_vector(const std::string& text) {
  IntVec v;
  for (const std::string& tok : split(text, ',')) v.push_back(parse_int(tok));
  if (v.empty()) fail(ErrorKind::Parse, "expected a comma-separated integer vector");
  return v;
}

RatVec parse_rat_vector(const std::string& text) {
  RatVec v;
  for (const std::string& tok : split(text, ',')) v.push_back(parse_rat(tok));
  if (v.empty()) fail(ErrorKind::Parse, "expected a comma-separated rational vector");
  return v;
}

std::vector<IntVec> parse_vector_list(const std::string& text) {
  std::vector<IntVec> vs;
  for (const std::string& chunk : split(text, ';')) vs.push_back(parse_int_vector(chunk));
  for (const IntVec& v : vs)
    if (v.size() != vs.front().size())
      fail(ErrorKind::Parse, "all vectors in a list must share one dimension");
  return vs;
}

std::string render_vector_list(const std::vector<IntVec>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ";";
    out += render_vector(vs[i]);
  }
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

LatticeParallelepiped parse_pep(const std::string& text) {
  std::vector<IntVec> vs = parse_vector_list(text);
  if (vs.size() < 2)
    fail(ErrorKind::Parse, "--pep expects base;generator;... with at least one generator");
  IntVec base = vs.front();
  vs.erase(vs.begin());
  return LatticeParallelepiped(std::move(base), std::move(vs));
}

LatticeZonotope parse_zonotope(const std::string& text) {
  std::vector<IntVec> gens = parse_vector_list(text);
  std::size_t dim = gens.front().size();
  return LatticeZonotope(dim, std::move(gens));
}

RatVec pep_center(const LatticeParallelepiped& p) {
  RatVec c = to_rat(p.base());
  for (const IntVec& g : p.generators()) c = add(c, scale(make_rat(1, 2), to_rat(g)));
  return c;
}

// ---- subcommand handlers ------------------------------------------------

OutputRecord run_constants(long d_max) {
  if (d_max < 1) fail(ErrorKind::Domain, "--d-max must be at least 1");
  OutputRecord rec{"constants", {{"d-max", std::to_string(d_max)}}, {}};
  for (long d = 1; d <= d_max; ++d) {
    RabbitConstants c = rabbit_constants(d);
    std::string tag = "(" + std::to_string(d) + ")";
    rec.results.emplace_back("w" + tag, std::to_string(c.w));
    rec.results.emplace_back("rab" + tag, to_string(c.rab));
    rec.results.emplace_back("delta" + tag, to_string(c.delta));
  }
  return rec;
}

OutputRecord run_summatory(long d_max) {
  if (d_max < 1) fail(ErrorKind::Domain, "--d-max must be at least 1");
  OutputRecord rec{"summatory", {{"d-max", std::to_string(d_max)}}, {}};
  for (long d = 1; d <= d_max; ++d)
    rec.results.emplace_back("Phi(" + std::to_string(d) + ")",
                             std::to_string(totient_summatory(d)));
  return rec;
}

OutputRecord run_extremal_alpha(long z) {
  RationalAlphaVector alpha = extremal_alpha(z);
  PsiResult p = psi(alpha);
  OutputRecord rec{"extremal-alpha", {{"z", std::to_string(z)}}, {}};
  rec.results.emplace_back("alpha", render_vector(alpha.entries));
  rec.results.emplace_back("size", std::to_string(alpha.size()));
  rec.results.emplace_back("common-denominator", to_string(alpha.common_denominator));
  rec.results.emplace_back("psi", to_string(p.value));
  rec.results.emplace_back("argmax-q", to_string(p.argmax_q));
  return rec;
}

void summarize_pep(const LatticeParallelepiped& p, OutputRecord& rec) {
  rec.results.emplace_back("dim", std::to_string(p.dim()));
  rec.results.emplace_back("base", render_vector(p.base()));
  rec.results.emplace_back("generators", render_vector_list(p.generators()));
  rec.results.emplace_back("det", to_string(p.det_abs()));
  std::vector<IntVec> pts = interior_lattice_points(p);
  rec.results.emplace_back("interior-count", std::to_string(pts.size()));
  Rat ca_min, ca_max;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rat ca = ca_parallelepiped(coefficients_of(p, to_rat(pts[i])));
    if (i == 0 || ca < ca_min) ca_min = ca;
    if (i == 0 || ca > ca_max) ca_max = ca;
  }
  if (!pts.empty()) {
    rec.results.emplace_back("ca-min", to_string(ca_min));
    rec.results.emplace_back("ca-max", to_string(ca_max));
  }
}

OutputRecord run_extremal_pep(long z) {
  OutputRecord rec{"extremal-pep", {{"z", std::to_string(z)}}, {}};
  summarize_pep(extremal_parallelepiped(z), rec);
  return rec;
}

OutputRecord run_lifted_pep(long d) {
  OutputRecord rec{"lifted-pep", {{"d", std::to_string(d)}}, {}};
  summarize_pep(lifted_extremal(d), rec);
  return rec;
}

OutputRecord run_psi(const std::string& alpha_text) {
  RationalAlphaVector alpha(parse_rat_vector(alpha_text));
  PsiResult p = psi(alpha);
  OutputRecord rec{"psi", {{"alpha", render_vector(alpha.entries)}}, {}};
  rec.results.emplace_back("psi", to_string(p.value));
  rec.results.emplace_back("argmax-q", to_string(p.argmax_q));
  return rec;
}

OutputRecord run_ca(const std::string& pep_text, const std::string& zono_text,
                    const std::string& point_text) {
  if (pep_text.empty() == zono_text.empty())
    fail(ErrorKind::Parse, "ca expects exactly one of --pep or --zonotope");
  RatVec w = to_rat(parse_int_vector(point_text));
  OutputRecord rec{"ca", {}, {}};
  AsymmetryReport report{{}, Rat(0), Rat(0)};
  RatVec center;
  if (!pep_text.empty()) {
    LatticeParallelepiped p = parse_pep(pep_text);
    rec.inputs.emplace_back("pep", render_vector(p.base()) + ";" +
                                       render_vector_list(p.generators()));
    std::vector<RatVec> gens;
    for (const IntVec& g : p.generators()) gens.push_back(to_rat(g));
    SymmetricZonotopeBody body(p.dim(), std::move(gens));
    center = pep_center(p);
    report = ca_symmetric(body, center, w);
  } else {
    LatticeZonotope z = parse_zonotope(zono_text);
    rec.inputs.emplace_back("zonotope", render_vector_list(z.generators()));
    center = z.center();
    report = ca_symmetric(z.body(), center, w);
  }
  rec.inputs.emplace_back("point", point_text);
  rec.results.emplace_back("center", render_vector(center));
  rec.results.emplace_back("norm", to_string(report.norm));
  rec.results.emplace_back("ca", to_string(report.ca));
  return rec;
}

OutputRecord run_deep(const std::string& pep_text, const std::string& zono_text) {
  if (pep_text.empty() == zono_text.empty())
    fail(ErrorKind::Parse, "deep expects exactly one of --pep or --zonotope");
  OutputRecord rec{"deep", {}, {}};
  if (!pep_text.empty()) {
    LatticeParallelepiped p = parse_pep(pep_text);
    rec.inputs.emplace_back("pep", render_vector(p.base()) + ";" +
                                       render_vector_list(p.generators()));
    std::vector<IntVec> pts = interior_lattice_points(p);
    if (pts.empty())
      fail(ErrorKind::NoInteriorPoint, "the parallelepiped has no interior lattice point");
    DeepPointResult r = deep_point(p, pts.front());
    rec.results.emplace_back("start", render_vector(pts.front()));
    rec.results.emplace_back("point", render_vector(r.point));
    rec.results.emplace_back("multiplier", to_string(r.multiplier));
    rec.results.emplace_back("ca", to_string(r.ca));
    rec.results.emplace_back("bound", std::to_string(rabbit_constants(long(p.dim())).w - 1));
  } else {
    LatticeZonotope z = parse_zonotope(zono_text);
    rec.inputs.emplace_back("zonotope", render_vector_list(z.generators()));
    ZonotopeDeepPoint r = deep_point(z);
    rec.results.emplace_back("start", render_vector(r.start));
    rec.results.emplace_back("pep-base", render_vector(r.pep.base()));
    rec.results.emplace_back("pep-generators", render_vector_list(r.pep.generators()));
    rec.results.emplace_back("point", render_vector(r.point));
    rec.results.emplace_back("ca", to_string(r.ca));
    rec.results.emplace_back("bound", std::to_string(rabbit_constants(long(z.dim())).w - 1));
  }
  return rec;
}

OutputRecord run_gap(const std::string& n_text) {
  VelocityVector n(parse_int_vector(n_text));
  GapResult g = gap(n);
  OutputRecord rec{"gap", {{"n", render_vector(n.speeds())}}, {}};
  rec.results.emplace_back("gap", to_string(g.value));
  rec.results.emplace_back("witness", to_string(g.witness));
  return rec;
}

OutputRecord run_lrc(const std::string& n_text) {
  VelocityVector n(parse_int_vector(n_text));
  LrcResult r = lrc_holds(n);
  OutputRecord rec{"lrc", {{"n", render_vector(n.speeds())}}, {}};
  rec.results.emplace_back("holds", bool_str(r.holds));
  rec.results.emplace_back("threshold", to_string(r.threshold));
  rec.results.emplace_back("gap", to_string(r.gap_value));
  rec.results.emplace_back("witness", to_string(r.witness));
  return rec;
}

OutputRecord run_sweep(long d, long max_speed, unsigned jobs) {
  SweepReport r = sweep(d, max_speed, jobs);
  // jobs is deliberately not echoed: the report must not depend on it.
  OutputRecord rec{
      "sweep", {{"d", std::to_string(d)}, {"max-speed", std::to_string(max_speed)}}, {}};
  rec.results.emplace_back("visited", to_string(r.visited));
  rec.results.emplace_back("threshold", to_string(r.threshold));
  rec.results.emplace_back("min-gap", to_string(r.min_gap));
  rec.results.emplace_back("argmin", render_vector(r.argmin));
  rec.results.emplace_back("tight-count", std::to_string(r.tight.size()));
  for (std::size_t i = 0; i < r.tight.size(); ++i)
    rec.results.emplace_back("tight(" + std::to_string(i + 1) + ")",
                             render_vector(r.tight[i]));
  rec.results.emplace_back("violation-count", std::to_string(r.violations.size()));
  for (std::size_t i = 0; i < r.violations.size(); ++i)
    rec.results.emplace_back("violation(" + std::to_string(i + 1) + ")",
                             render_vector(r.violations[i]));
  return rec;
}

OutputRecord run_count(const std::string& n_text) {
  VelocityVector n(parse_int_vector(n_text));
  Int volume = count_zonohedron(n, ZonohedronCount::Volume);
  Int interior = count_zonohedron(n, ZonohedronCount::Interior);
  Int closed = count_zonohedron(n, ZonohedronCount::Closed);
  // Independent route: the counting polynomial of the compact zonotope.
  LatticeZonotope z = lonely_runner_zonotope(n);
  bool agrees = interior == count_lattice_points(z, CountMode::Interior) &&
                closed == count_lattice_points(z, CountMode::Closed) &&
                volume == ehrhart_coefficients(z).back();
  OutputRecord rec{"count", {{"n", render_vector(n.speeds())}}, {}};
  rec.results.emplace_back("volume", to_string(volume));
  rec.results.emplace_back("interior", to_string(interior));
  rec.results.emplace_back("closed", to_string(closed));
  rec.results.emplace_back("oracle-agrees", bool_str(agrees));
  return rec;
}

OutputRecord run_ehrhart(const std::string& zono_text) {
  LatticeZonotope z = parse_zonotope(zono_text);
  std::vector<Int> g = ehrhart_coefficients(z);
  OutputRecord rec{"ehrhart", {{"zonotope", render_vector_list(z.generators())}}, {}};
  for (std::size_t i = 0; i < g.size(); ++i)
    rec.results.emplace_back("g" + std::to_string(i), to_string(g[i]));
  return rec;
}

// ---- rendering -----------------------------------------------------------

// Decimal rendering of a scalar value, empty for vectors/booleans. Only used
// for the optional non-authoritative column; everything else stays exact.
std::string approx_of(const std::string& value) {
  if (value.empty() || value == "true" || value == "false") return "";
  if (value.find(',') != std::string::npos || value.find(';') != std::string::npos) return "";
  Rat r;
  try {
    r = parse_rat(value);
  } catch (const Error&) {
    return "";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", r.get_d());
  return buf;
}

void render_json(const OutputRecord& rec, bool approx, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = rec.command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rec.inputs) inputs[k] = v;
  j["inputs"] = std::move(inputs);
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rec.results) results[k] = v;
  j["results"] = std::move(results);
  if (approx) {
    nlohmann::ordered_json ap = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.results) {
      std::string a = approx_of(v);
      if (!a.empty()) ap[k] = a;
    }
    j["approx-non-authoritative"] = std::move(ap);
  }
  out << j.dump(2) << "\n";
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    q.push_back(c);
  }
  q += "\"";
  return q;
}

void render_csv(const OutputRecord& rec, bool approx, std::ostream& out) {
  auto row = [&](const std::string& section, const std::string& name,
                 const std::string& value) {
    out << csv_quote(section) << "," << csv_quote(name) << "," << csv_quote(value);
    if (approx) out << "," << csv_quote(approx_of(value));
    out << "\n";
  };
  out << csv_quote("section") << "," << csv_quote("name") << "," << csv_quote("value");
  if (approx) out << "," << csv_quote("approx-non-authoritative");
  out << "\n";
  row("command", "command", rec.command);
  for (const auto& [k, v] : rec.inputs) row("input", k, v);
  for (const auto& [k, v] : rec.results) row("result", k, v);
}

void render_table(const OutputRecord& rec, bool approx, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : rec.inputs) width = std::max(width, k.size());
  for (const auto& [k, v] : rec.results) width = std::max(width, k.size());
  auto row = [&](const std::string& name, const std::string& value) {
    out << "  " << name << std::string(width - name.size() + 2, ' ') << value;
    if (approx) {
      std::string a = approx_of(value);
      if (!a.empty()) out << "  ~ " << a << " (non-authoritative)";
    }
    out << "\n";
  };
  out << "command: " << rec.command << "\n";
  out << "inputs:\n";
  for (const auto& [k, v] : rec.inputs) row(k, v);
  out << "results:\n";
  for (const auto& [k, v] : rec.results) row(k, v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact asymmetry, deep lattice points and lonely-runner instances",
               "zonodeep"};
  app.require_subcommand(1);
  std::string format = "json";
  bool approx = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_flag("--approx", approx, "add a decimal column (non-authoritative)");

  long d_max = 0, z = 0, d = 0, max_speed = 0;
  unsigned jobs = 1;
  std::string alpha_text, pep_text, zono_text, point_text, n_text;
  OutputRecord rec;

  CLI::App* constants = app.add_subcommand("constants", "Diophantine constants w, rab, delta");
  constants->add_option("--d-max", d_max)->required();
  constants->callback([&] { rec = run_constants(d_max); });

  CLI::App* summatory = app.add_subcommand("summatory", "totient summatory function");
  summatory->add_option("--d-max", d_max)->required();
  summatory->callback([&] { rec = run_summatory(d_max); });

  CLI::App* ealpha = app.add_subcommand("extremal-alpha", "extremal rational direction");
  ealpha->add_option("--z", z)->required();
  ealpha->callback([&] { rec = run_extremal_alpha(z); });

  CLI::App* epep = app.add_subcommand("extremal-pep", "extremal parallelepiped");
  epep->add_option("--z", z)->required();
  epep->callback([&] { rec = run_extremal_pep(z); });

  CLI::App* lpep = app.add_subcommand("lifted-pep", "extremal parallelepiped in dimension d");
  lpep->add_option("--d", d)->required();
  lpep->callback([&] { rec = run_lifted_pep(d); });

  CLI::App* psi_cmd = app.add_subcommand("psi", "best simultaneous approximation distance");
  psi_cmd->add_option("--alpha", alpha_text)->required();
  psi_cmd->callback([&] { rec = run_psi(alpha_text); });

  CLI::App* ca_cmd = app.add_subcommand("ca", "coefficient of asymmetry about a point");
  ca_cmd->add_option("--pep", pep_text);
  ca_cmd->add_option("--zonotope", zono_text);
  ca_cmd->add_option("--point", point_text)->required();
  ca_cmd->callback([&] { rec = run_ca(pep_text, zono_text, point_text); });

  CLI::App* deep_cmd = app.add_subcommand("deep", "deep interior lattice point");
  deep_cmd->add_option("--pep", pep_text);
  deep_cmd->add_option("--zonotope", zono_text);
  deep_cmd->callback([&] { rec = run_deep(pep_text, zono_text); });

  CLI::App* gap_cmd = app.add_subcommand("gap", "gap of loneliness");
  gap_cmd->add_option("--n", n_text)->required();
  gap_cmd->callback([&] { rec = run_gap(n_text); });

  CLI::App* lrc_cmd = app.add_subcommand("lrc", "check one lonely-runner instance");
  lrc_cmd->add_option("--n", n_text)->required();
  lrc_cmd->callback([&] { rec = run_lrc(n_text); });

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "check all instances up to a speed bound");
  sweep_cmd->add_option("--d", d)->required();
  sweep_cmd->add_option("--max-speed", max_speed)->required();
  sweep_cmd->add_option("--jobs", jobs);
  sweep_cmd->callback([&] { rec = run_sweep(d, max_speed, jobs); });

  CLI::App* count_cmd = app.add_subcommand("count", "lattice point counts of the zonotope");
  count_cmd->add_option("--n", n_text)->required();
  count_cmd->callback([&] { rec = run_count(n_text); });

  CLI::App* ehrhart_cmd = app.add_subcommand("ehrhart", "counting polynomial coefficients");
  ehrhart_cmd->add_option("--zonotope", zono_text)->required();
  ehrhart_cmd->callback([&] { rec = run_ehrhart(zono_text); });

  // let --format/--approx be written after the subcommand as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }

  if (format == "json")
    render_json(rec, approx, out);
  else if (format == "csv")
    render_csv(rec, approx, out);
  else
    render_table(rec, approx, out);
  return 0;
}

}  // namespace zonodeep
