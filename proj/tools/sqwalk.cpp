// Command-line front end: evolve a walk, solve bond-to-bond generating
// functions, extract first-arrival amplitudes, filter trajectory families,
// and run the built-in verification battery.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqw/coins.hpp"
#include "sqw/evolution.hpp"
#include "sqw/exact.hpp"
#include "sqw/graph_spec.hpp"
#include "sqw/greenfn.hpp"
#include "sqw/operators.hpp"
#include "sqw/polynomial.hpp"
#include "sqw/reference.hpp"
#include "sqw/topology.hpp"
#include "sqw/types.hpp"
#include "sqw/verify.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using sqw::BondState;
using sqw::Complex;
using sqw::DirectionIndex;
using sqw::Rational;
using sqw::SiteId;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// All output is assembled in memory first so a failed computation never
// leaves a partial file behind.
void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

// "SITE:DIR" literal, or the name of a mark in the spec file.
BondState resolve_state(const sqw::GraphSpec& spec, const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos) return spec.mark(text);
  BondState s;
  try {
    s.site = static_cast<SiteId>(std::stoi(text.substr(0, pos)));
    s.dir = static_cast<DirectionIndex>(std::stoi(text.substr(pos + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("expected SITE:DIR or a mark name, got \"" + text + "\"");
  }
  if (!spec.graph.contains(s))
    throw std::invalid_argument("state " + sqw::to_string(s) + " is not in the graph");
  return s;
}

ordered_json state_json(const BondState& s) {
  return {{"site", s.site}, {"dir", s.dir}};
}

// --- evolve ------------------------------------------------------------------

int cmd_evolve(const std::string& graph_path, int steps, const std::string& initial,
               double gamma, const std::string& out_path) {
  if (steps < 0) throw std::invalid_argument("--steps must be >= 0");
  const sqw::GraphSpec spec = sqw::load_graph_spec(graph_path);
  const BondState init = resolve_state(spec, initial);
  std::ostringstream csv;
  csv << "# schema_version 1\n";
  csv << "step,site,dir,re,im,prob\n";
  sqw::WalkState w = sqw::WalkState::unit(init);
  for (int n = 0; n <= steps; ++n) {
    const Complex phase = std::polar(1.0, gamma * n);
    for (const auto& [s, a] : w.amplitudes) {
      const Complex v = a * phase;
      csv << n << ',' << s.site << ',' << s.dir << ',' << fmt(v.real()) << ','
          << fmt(v.imag()) << ',' << fmt(std::norm(v)) << '\n';
    }
    if (n < steps) w = sqw::apply_step(spec.graph, spec.coins, w);
  }
  write_file(out_path, csv.str());
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

// --- green -------------------------------------------------------------------

int cmd_green(const std::string& graph_path, const std::string& entry_name,
              const std::string& exit_name, const std::string& mode, bool exact,
              const std::string& out_path) {
  if (mode != "trans" && mode != "refl")
    throw std::invalid_argument("--mode must be trans or refl");
  const sqw::GraphSpec spec = sqw::load_graph_spec(graph_path);
  const BondState entry = resolve_state(spec, entry_name);
  const BondState exit =
      mode == "refl" ? spec.graph.partner(entry) : resolve_state(spec, exit_name);
  const sqw::GreenRequest req{entry, exit, true};

  ordered_json doc;
  doc["schema_version"] = 1;
  doc["mode"] = mode;
  doc["entry"] = state_json(entry);
  doc["exit"] = state_json(exit);
  doc["exact"] = exact;
  doc["numerator"] = ordered_json::array();
  doc["denominator"] = ordered_json::array();
  if (exact) {
    const auto g = sqw::green_function_exact(spec.graph, spec.coins, req);
    const sqw::IntegerForm f = sqw::integer_form(g);
    for (const auto& c : f.num) doc["numerator"].push_back({rat_str(c.re), rat_str(c.im)});
    for (const auto& c : f.den)
      doc["denominator"].push_back({rat_str(c.re), rat_str(c.im)});
  } else {
    const auto g = sqw::green_function(spec.graph, spec.coins, req);
    for (int k = 0; k <= g.num.degree(); ++k)
      doc["numerator"].push_back({g.num.coeff(k).real(), g.num.coeff(k).imag()});
    for (int k = 0; k <= g.den.degree(); ++k)
      doc["denominator"].push_back({g.den.coeff(k).real(), g.den.coeff(k).imag()});
  }
  write_file(out_path, doc.dump(2) + "\n");
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

// --- hitting -------------------------------------------------------------------

int cmd_hitting(const std::string& graph_path, const std::string& entry_name,
                const std::string& exit_name, int n_max, bool exact,
                const std::string& out_path) {
  if (n_max < 0) throw std::invalid_argument("--nmax must be >= 0");
  const sqw::GraphSpec spec = sqw::load_graph_spec(graph_path);
  const sqw::GreenRequest req{resolve_state(spec, entry_name),
                              resolve_state(spec, exit_name), true};
  std::ostringstream csv;
  csv << "# schema_version 1\n";
  csv << "n,re,im,prob,cumulative\n";
  if (exact) {
    const auto g = sqw::green_function_exact(spec.graph, spec.coins, req);
    const auto cs = sqw::step_coefficients(g, n_max);
    Rational cumulative(0);
    for (int n = 0; n <= n_max; ++n) {
      const sqw::ExactComplex& c = cs[static_cast<size_t>(n)];
      const Rational prob = c.re * c.re + c.im * c.im;
      cumulative += prob;
      csv << n << ',' << rat_str(c.re) << ',' << rat_str(c.im) << ',' << rat_str(prob)
          << ',' << rat_str(cumulative) << '\n';
    }
  } else {
    const auto g = sqw::green_function(spec.graph, spec.coins, req);
    const auto cs = sqw::step_coefficients(g, n_max);
    double cumulative = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      const Complex c = cs[static_cast<size_t>(n)];
      cumulative += std::norm(c);
      csv << n << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << ','
          << fmt(std::norm(c)) << ',' << fmt(cumulative) << '\n';
    }
  }
  write_file(out_path, csv.str());
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

// --- paths -------------------------------------------------------------------

struct EventRef {
  SiteId site;
  DirectionIndex in, out;
};

struct DescriptorBuild {
  sqw::SymbolAssignment sym;
  std::vector<std::vector<EventRef>> events_of;  // per symbol id
  std::vector<sqw::PathDescriptor> clauses;
};

int bind_tracked(DescriptorBuild& b, const std::string& name, SiteId site,
                 DirectionIndex in, DirectionIndex out) {
  const int id = b.sym.bind(name, site, in, out);
  if (static_cast<size_t>(id) >= b.events_of.size()) b.events_of.resize(id + 1);
  b.events_of[static_cast<size_t>(id)].push_back({site, in, out});
  return id;
}

// A factor or exempt entry names either one coin event {site, in, out} or a
// whole site {site}, whose events all merge into one symbol.
int resolve_symbol(DescriptorBuild& b, const sqw::GraphTopology& g, const json& v,
                   const std::string& path) {
  if (!v.is_object()) throw std::invalid_argument(path + ": expected an object");
  if (!v.contains("site") || !v["site"].is_number_integer())
    throw std::invalid_argument(path + ".site: expected an integer");
  const SiteId site = v["site"].get<SiteId>();
  if (site < 0 || site >= g.site_count())
    throw std::invalid_argument(path + ".site: no such site");
  if (g.is_free(site))
    throw std::invalid_argument(path + ".site: site " + std::to_string(site) +
                                " is free (no scattering events)");
  const bool has_in = v.contains("in"), has_out = v.contains("out");
  if (has_in != has_out)
    throw std::invalid_argument(path + ": give both \"in\" and \"out\" or neither");
  if (v.contains("kind")) {
    const std::string kind = v["kind"].get<std::string>();
    if (kind != (has_in ? "event" : "site"))
      throw std::invalid_argument(path + ".kind: \"" + kind +
                                  "\" does not match the fields present");
  }
  if (has_in) {
    const DirectionIndex in = v["in"].get<DirectionIndex>();
    const DirectionIndex out = v["out"].get<DirectionIndex>();
    if (in < 1 || in > g.valence(site) || out < 1 || out > g.valence(site))
      throw std::invalid_argument(path + ": direction out of range for site " +
                                  std::to_string(site));
    const int existing = b.sym.lookup(site, in, out);
    if (existing >= 0) return existing;
    const char kind = in == out ? 'r' : 't';
    return bind_tracked(b, sqw::to_string(sqw::CoinSymbol{kind, site, in, out}), site,
                        in, out);
  }
  const std::string name = "site[" + std::to_string(site) + "]";
  for (DirectionIndex in = 1; in <= g.valence(site); ++in)
    for (DirectionIndex out = 1; out <= g.valence(site); ++out) {
      const int existing = b.sym.lookup(site, in, out);
      if (existing < 0)
        bind_tracked(b, name, site, in, out);
      else if (b.sym.name(existing) != name)
        throw std::invalid_argument(path + ": site " + std::to_string(site) +
                                    " overlaps the event symbol \"" +
                                    b.sym.name(existing) + "\"");
    }
  return b.sym.id_of(name);
}

DescriptorBuild parse_descriptor(const sqw::GraphTopology& g, const std::string& text,
                                 bool exact_mode) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("descriptor: not valid JSON: ") + e.what());
  }
  DescriptorBuild b;
  if (!doc.contains("clauses") || !doc["clauses"].is_array() || doc["clauses"].empty())
    throw std::invalid_argument("descriptor: expected a non-empty \"clauses\" array");
  const json& clauses = doc["clauses"];
  for (size_t i = 0; i < clauses.size(); ++i) {
    const std::string cpath = "clauses[" + std::to_string(i) + "]";
    const json& c = clauses[i];
    sqw::PathDescriptor d;
    d.exact = exact_mode;
    if (!c.contains("factors") || !c["factors"].is_array())
      throw std::invalid_argument("descriptor: " + cpath + ".factors: expected an array");
    for (size_t k = 0; k < c["factors"].size(); ++k) {
      const std::string fpath = cpath + ".factors[" + std::to_string(k) + "]";
      const json& f = c["factors"][k];
      int power = 1;
      if (f.contains("power")) {
        if (!f["power"].is_number_integer() || f["power"].get<int>() < 0)
          throw std::invalid_argument("descriptor: " + fpath +
                                      ".power: expected an integer >= 0");
        power = f["power"].get<int>();
      }
      d.factors.emplace_back(resolve_symbol(b, g, f, "descriptor: " + fpath), power);
    }
    if (c.contains("exempt")) {
      if (!c["exempt"].is_array())
        throw std::invalid_argument("descriptor: " + cpath + ".exempt: expected an array");
      for (size_t k = 0; k < c["exempt"].size(); ++k) {
        const std::string epath = cpath + ".exempt[" + std::to_string(k) + "]";
        const json& e = c["exempt"][k];
        if (e.contains("power"))
          throw std::invalid_argument("descriptor: " + epath + ": exempt entries take no power");
        d.exempt.push_back(resolve_symbol(b, g, e, "descriptor: " + epath));
      }
    }
    b.clauses.push_back(std::move(d));
  }
  return b;
}

int cmd_paths(const std::string& graph_path, const std::string& descriptor_path,
              const std::string& mode_flag, int n_max, const std::string& entry_name,
              const std::string& exit_name, const std::string& out_path) {
  if (n_max < 1) throw std::invalid_argument("--nmax must be >= 1");
  const sqw::GraphSpec spec = sqw::load_graph_spec(graph_path);
  const std::string dtext = read_file(descriptor_path);

  std::string mode = mode_flag;
  if (mode.empty()) {
    const json doc = json::parse(dtext, nullptr, false);
    mode = doc.is_object() && doc.contains("mode") && doc["mode"].is_string()
               ? doc["mode"].get<std::string>()
               : "partial";
  }
  if (mode != "partial" && mode != "exact")
    throw std::invalid_argument("mode must be partial or exact");

  DescriptorBuild b = parse_descriptor(spec.graph, dtext, mode == "exact");
  if (mode == "exact") {
    // Everything not named by the descriptor merges into one symbol whose
    // exponent the exact filter pins at zero: the families reported below
    // contain the listed events and nothing else.
    for (SiteId site = 0; site < spec.graph.site_count(); ++site) {
      if (spec.graph.is_free(site)) continue;
      for (DirectionIndex in = 1; in <= spec.graph.valence(site); ++in)
        for (DirectionIndex out = 1; out <= spec.graph.valence(site); ++out)
          if (b.sym.lookup(site, in, out) < 0) bind_tracked(b, "(other)", site, in, out);
    }
  }

  const BondState entry = resolve_state(spec, entry_name);
  const BondState exit = resolve_state(spec, exit_name);
  sqw::SeriesLimits limits;
  if (n_max > limits.max_steps) limits.max_steps = n_max;
  const sqw::MultivariateSeries series =
      sqw::symbolic_series(spec.graph, spec.coins, b.sym, entry, exit, n_max, limits);

  sqw::MultivariateSeries combined;
  combined.symbol_count = b.sym.count();
  for (const sqw::PathDescriptor& d : b.clauses)
    for (const auto& [m, c] : sqw::path_filter(series, d).terms) {
      auto [it, fresh] = combined.terms.emplace(m, c);
      if (!fresh && (it->second += c) == Complex{0.0, 0.0}) combined.terms.erase(it);
    }

  // Numeric substitution only makes sense when every merged symbol stands for
  // one amplitude value.
  std::vector<Complex> values(static_cast<size_t>(b.sym.count()));
  bool uniform = true;
  for (int id = 0; id < b.sym.count(); ++id) {
    const auto& events = b.events_of[static_cast<size_t>(id)];
    values[static_cast<size_t>(id)] =
        spec.coins.at(events.front().site).amp(events.front().in, events.front().out);
    for (const EventRef& e : events)
      if (spec.coins.at(e.site).amp(e.in, e.out) != values[static_cast<size_t>(id)])
        uniform = false;
  }

  ordered_json doc;
  doc["schema_version"] = 1;
  doc["mode"] = mode;
  doc["nmax"] = n_max;
  doc["entry"] = state_json(entry);
  doc["exit"] = state_json(exit);
  doc["symbols"] = ordered_json::array();
  for (int id = 0; id < b.sym.count(); ++id) {
    ordered_json events = ordered_json::array();
    for (const EventRef& e : b.events_of[static_cast<size_t>(id)])
      events.push_back({{"site", e.site}, {"in", e.in}, {"out", e.out}});
    doc["symbols"].push_back(
        {{"id", id}, {"name", b.sym.name(id)}, {"events", std::move(events)}});
  }
  doc["terms"] = ordered_json::array();
  for (const auto& [m, c] : combined.terms) {
    ordered_json t;
    t["steps"] = m.steps;
    t["exponents"] = m.exponents;
    t["coefficient"] = {c.real(), c.imag()};
    doc["terms"].push_back(std::move(t));
  }
  if (uniform) {
    doc["amplitude_by_step"] = ordered_json::array();
    for (const Complex& c : sqw::substitute(combined, values))
      doc["amplitude_by_step"].push_back({c.real(), c.imag()});
  }
  write_file(out_path, doc.dump(2) + "\n");
  std::cout << "wrote " << out_path << " (" << combined.terms.size() << " terms)\n";
  return 0;
}

// --- verify --------------------------------------------------------------------

void report_line(const std::string& name, bool passed, const std::string& rhs) {
  std::cout << (passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(34) << name
            << ' ' << rhs << '\n';
}

std::string residual_text(double residual, double tolerance) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << "residual " << residual << "  tol "
     << tolerance;
  return os.str();
}

bool check_data_files(const std::string& dir, double tol) {
  const double num_tol = tol > 0.0 ? tol : 1e-10;
  bool all_ok = true;

  {
    const std::string name = "data: interferometer spec";
    try {
      const sqw::GraphSpec spec = sqw::load_graph_spec(dir + "/diamond_grover.json");
      const auto g = sqw::green_function_exact(
          spec.graph, spec.coins, {spec.mark("entry"), spec.mark("exit"), true});
      const sqw::IntegerForm f = sqw::integer_form(g);
      const auto ic = [](int v) { return sqw::ExactComplex{Rational(v)}; };
      const std::vector<sqw::ExactComplex> num = {ic(0), ic(0), ic(0), ic(8)};
      const std::vector<sqw::ExactComplex> den = {ic(9), ic(0), ic(0), ic(0), ic(-1)};
      const std::string s1 =
          sqw::serialize_graph_spec(spec.graph, spec.coins, spec.marks);
      const sqw::GraphSpec round = sqw::parse_graph_spec(s1);
      const std::string s2 =
          sqw::serialize_graph_spec(round.graph, round.coins, round.marks);
      std::string why;
      if (f.num != num || f.den != den) why = "crossing amplitude is not 8 z^3 / (9 - z^4)";
      if (s1 != s2) why = "serializer round trip is not stable";
      report_line(name, why.empty(), why.empty() ? "exact form and round trip" : why);
      all_ok = all_ok && why.empty();
    } catch (const std::exception& e) {
      report_line(name, false, e.what());
      all_ok = false;
    }
  }

  {
    const std::string name = "data: two-site spec";
    try {
      const sqw::GraphSpec spec = sqw::load_graph_spec(dir + "/line_twosite.json");
      const BondState entry = spec.mark("entry");
      const auto g_t = sqw::green_function(spec.graph, spec.coins,
                                           {entry, spec.mark("exit"), true});
      const auto g_r = sqw::green_function(spec.graph, spec.coins,
                                           {entry, spec.graph.partner(entry), true});
      double worst = 0.0;
      for (const double gamma : {0.4, 1.9, 5.0}) {
        const Complex z = std::polar(1.0, gamma);
        const sqw::TwoSiteCoefficients ref =
            sqw::reference_twosite_coefficients(spec.coins.at(1), spec.coins.at(2), z);
        worst = std::max(worst, std::abs(sqw::eval_rational(g_t, z) - z * z * ref.t));
        worst = std::max(worst, std::abs(sqw::eval_rational(g_r, z) - z * ref.r));
      }
      const std::string s1 =
          sqw::serialize_graph_spec(spec.graph, spec.coins, spec.marks);
      const sqw::GraphSpec round = sqw::parse_graph_spec(s1);
      const std::string s2 =
          sqw::serialize_graph_spec(round.graph, round.coins, round.marks);
      const bool ok = worst <= num_tol && s1 == s2;
      report_line(name, ok,
                  s1 != s2 ? "serializer round trip is not stable"
                           : residual_text(worst, num_tol));
      all_ok = all_ok && ok;
    } catch (const std::exception& e) {
      report_line(name, false, e.what());
      all_ok = false;
    }
  }
  return all_ok;
}

int cmd_verify(std::uint64_t seed, double tol, const std::string& data_dir) {
  const auto results = sqw::run_verification(seed, tol);
  for (const sqw::CheckResult& r : results)
    report_line(r.name, r.passed,
                r.passed ? residual_text(r.residual, r.tolerance) : r.detail);
  bool ok = sqw::all_passed(results);
  if (!data_dir.empty()) ok = check_data_files(data_dir, tol) && ok;
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattering quantum walk toolkit"};
  app.require_subcommand(1);

  bool exact = false;
  double tol = 0.0;
  std::uint64_t seed = 20260819;
  app.add_flag("--exact", exact,
               "compute over exact rationals (green, hitting); coins must have "
               "exact entries");
  app.add_option("--tol", tol, "tolerance override for verify and data checks");
  app.add_option("--seed", seed, "seed for the verification battery");

  std::string ev_graph, ev_initial, ev_out;
  int ev_steps = 0;
  double ev_gamma = 0.0;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "step a unit excitation and dump every amplitude per step");
  evolve->fallthrough();
  evolve->add_option("--graph", ev_graph, "graph spec JSON file")->required();
  evolve->add_option("--steps", ev_steps, "number of steps")->required();
  evolve
      ->add_option("--initial", ev_initial,
                   "starting bond state, SITE:DIR or a mark name")
      ->required();
  evolve->add_option("--gamma", ev_gamma,
                     "per-step phase applied to the reported amplitudes");
  evolve->add_option("--out", ev_out, "output CSV path")->required();

  std::string gr_graph, gr_entry = "entry", gr_exit = "exit", gr_mode = "trans", gr_out;
  CLI::App* green = app.add_subcommand(
      "green", "bond-to-bond generating function as a rational function of z");
  green->fallthrough();
  green->add_option("--graph", gr_graph, "graph spec JSON file")->required();
  green->add_option("--entry", gr_entry, "entry state (mark name or SITE:DIR)");
  green->add_option("--exit", gr_exit, "exit state (mark name or SITE:DIR)");
  green->add_option("--mode", gr_mode,
                    "trans: entry -> exit; refl: exit is the entry's reversal");
  green->add_option("--out", gr_out, "output JSON path")->required();

  std::string ht_graph, ht_entry = "entry", ht_exit = "exit", ht_out;
  int ht_nmax = 0;
  CLI::App* hitting = app.add_subcommand(
      "hitting", "first-arrival amplitude and probability per step");
  hitting->fallthrough();
  hitting->add_option("--graph", ht_graph, "graph spec JSON file")->required();
  hitting->add_option("--entry", ht_entry, "entry state (mark name or SITE:DIR)");
  hitting->add_option("--exit", ht_exit, "exit state (mark name or SITE:DIR)");
  hitting->add_option("--nmax", ht_nmax, "largest step number")->required();
  hitting->add_option("--out", ht_out, "output CSV path")->required();

  std::string pt_graph, pt_descriptor, pt_mode, pt_entry = "entry", pt_exit = "exit",
                                       pt_out;
  int pt_nmax = 0;
  CLI::App* paths = app.add_subcommand(
      "paths", "trajectory families: filtered symbolic first-arrival series");
  paths->fallthrough();
  paths->add_option("--graph", pt_graph, "graph spec JSON file")->required();
  paths->add_option("--descriptor", pt_descriptor, "family descriptor JSON file")
      ->required();
  paths->add_option("--mode", pt_mode,
                    "partial or exact (default: descriptor's mode, else partial)");
  paths->add_option("--nmax", pt_nmax, "series horizon in steps")->required();
  paths->add_option("--entry", pt_entry, "entry state (mark name or SITE:DIR)");
  paths->add_option("--exit", pt_exit, "exit state (mark name or SITE:DIR)");
  paths->add_option("--out", pt_out, "output JSON path")->required();

  std::string vf_data;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the built-in cross-check battery (nonzero exit on failure)");
  verify->fallthrough();
  verify->add_option("--data", vf_data, "directory with the shipped spec files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*evolve) return cmd_evolve(ev_graph, ev_steps, ev_initial, ev_gamma, ev_out);
    if (*green) return cmd_green(gr_graph, gr_entry, gr_exit, gr_mode, exact, gr_out);
    if (*hitting) return cmd_hitting(ht_graph, ht_entry, ht_exit, ht_nmax, exact, ht_out);
    if (*paths)
      return cmd_paths(pt_graph, pt_descriptor, pt_mode, pt_nmax, pt_entry, pt_exit,
                       pt_out);
    if (*verify) return cmd_verify(seed, tol, vf_data);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
