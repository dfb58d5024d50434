#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pairinfo/pairinfo.hpp"

namespace {

using namespace pairinfo;

struct GlobalOpts {
  std::string format;
  long long seed = 0;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

KTuple parse_point(const std::string& text) {
  std::vector<Nat> coords;
  for (const std::string& part : split_commas(text)) coords.push_back(from_decimal(part));
  return KTuple(std::move(coords));
}

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }

void write_common_config(JsonWriter& w, const char* command, const GlobalOpts& g) {
  w.key("command").string(command);
  w.key("format").string(g.format);
  w.key("seed").integer(g.seed);
}

// ---- pair ----------------------------------------------------------------

void run_pair(const std::vector<std::string>& args, const GlobalOpts& g) {
  std::vector<Nat> xs;
  for (const std::string& a : args) xs.push_back(from_decimal(a));
  KTuple tuple(std::move(xs));
  Nat value = pair_k(tuple);

  if (g.format == "plain") {
    emit(to_decimal(value) + "\n");
  } else if (g.format == "csv") {
    CsvWriter csv({"value"});
    csv.append_row({to_decimal(value)});
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "pair", g);
    w.key("inputs").begin_array();
    for (std::size_t i = 0; i < tuple.arity(); ++i) w.nat(tuple[i]);
    w.end_array();
    w.end_object();
    w.key("value").nat(value);
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

// ---- unpair --------------------------------------------------------------

void run_unpair(const std::string& n_text, unsigned arity, const GlobalOpts& g) {
  Nat n = from_decimal(n_text);
  KTuple coords = unpair_k(n, arity);

  if (g.format == "plain") {
    std::string line;
    for (std::size_t i = 0; i < coords.arity(); ++i) {
      if (i) line += ' ';
      line += to_decimal(coords[i]);
    }
    emit(line + "\n");
  } else if (g.format == "csv") {
    std::vector<std::string> header, row;
    for (std::size_t i = 0; i < coords.arity(); ++i) {
      header.push_back("coord" + std::to_string(i + 1));
      row.push_back(to_decimal(coords[i]));
    }
    CsvWriter csv(header);
    csv.append_row(row);
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "unpair", g);
    w.key("n").nat(n);
    w.key("arity").integer(arity);
    w.end_object();
    w.key("coords").begin_array();
    for (std::size_t i = 0; i < coords.arity(); ++i) w.nat(coords[i]);
    w.end_array();
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

// ---- delta ---------------------------------------------------------------

void run_delta(const std::string& poly_text, const std::string& at_text,
               const GlobalOpts& g) {
  KTuple point = parse_point(at_text);
  MultiPoly p = parse_poly(poly_text, point.arity());
  Nat output = eval_nat(p, point);
  Real output_bits = info_content(output);
  Real input_bits = info_content(point);
  Real d = output_bits - input_bits;

  if (g.format == "plain") {
    emit(format_real(d) + "\n");
  } else if (g.format == "csv") {
    CsvWriter csv({"delta", "output_bits", "input_bits", "output"});
    csv.append_row({format_real(d), format_real(output_bits),
                    format_real(input_bits), to_decimal(output)});
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "delta", g);
    w.key("poly").string(poly_text);
    w.key("at").begin_array();
    for (std::size_t i = 0; i < point.arity(); ++i) w.nat(point[i]);
    w.end_array();
    w.end_object();
    w.key("poly_canonical").string(to_string(p));
    w.key("output").nat(output);
    w.key("output_bits").real(output_bits);
    w.key("input_bits").real(input_bits);
    w.key("delta").real(d);
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

// ---- ray -----------------------------------------------------------------

struct RayCliOpts {
  std::string poly;
  std::string h;
  std::string x0;
  unsigned ratio = 4;
  std::size_t steps = 12;
  Real tol = 1e-6L;
  Real slope_tol = 1e-3L;
};

void run_ray(const RayCliOpts& opt, const GlobalOpts& g) {
  MultiPoly p = parse_poly(opt.poly, 2);
  Rational h = rational_from_string(opt.h);
  RaySpec spec = default_ray_spec(h);
  if (!opt.x0.empty()) spec.x_start = from_decimal(opt.x0);
  spec.growth_ratio = opt.ratio;
  spec.steps = opt.steps;
  spec.tol = opt.tol;
  spec.slope_tol = opt.slope_tol;
  RayReport report = ray_limit_estimate(poly_ray_fn(p), spec);

  if (g.format == "plain") {
    std::string out;
    out += "c_estimate " + format_real(report.c_estimate) + "\n";
    out += "drift_slope " + format_real(report.drift_slope) + "\n";
    out += "residual " + format_real(report.residual) + "\n";
    out += std::string("converged ") + (report.converged ? "true" : "false") + "\n";
    out += std::string("classification ") + to_string(classify(report)) + "\n";
    emit(out);
  } else if (g.format == "csv") {
    CsvWriter csv({"x", "delta_bits"});
    for (const RaySample& s : report.samples)
      csv.append_row({to_decimal(s.x), format_real(s.delta_bits)});
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "ray", g);
    w.key("poly").string(opt.poly);
    w.key("h").rational(h);
    w.key("x0").nat(spec.x_start);
    w.key("ratio").integer(spec.growth_ratio);
    w.key("steps").integer(static_cast<long long>(spec.steps));
    w.key("tol").real(spec.tol);
    w.key("slope_tol").real(spec.slope_tol);
    w.end_object();
    w.key("samples").begin_array();
    for (const RaySample& s : report.samples) {
      w.begin_object();
      w.key("x").nat(s.x);
      w.key("delta_bits").real(s.delta_bits);
      w.end_object();
    }
    w.end_array();
    w.key("c_estimate").real(report.c_estimate);
    w.key("drift_slope").real(report.drift_slope);
    w.key("residual").real(report.residual);
    w.key("converged").boolean(report.converged);
    w.key("classification").string(to_string(classify(report)));
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

// ---- check ---------------------------------------------------------------

void write_point(JsonWriter& w, const std::pair<Nat, Nat>& pt) {
  w.begin_array();
  w.nat(pt.first);
  w.nat(pt.second);
  w.end_array();
}

void run_check(const std::string& poly_text, const std::string& box_text,
               const GlobalOpts& g) {
  MultiPoly p = parse_poly(poly_text, 2);
  Nat box = from_decimal(box_text);
  ScanReport report = scan_bijectivity(p, box);

  if (g.format == "plain") {
    std::string out;
    out += std::string("verdict ") + to_string(report.verdict) + "\n";
    out += "collisions " + std::to_string(report.collision_count) + "\n";
    out += "integrality_violations " + std::to_string(report.integrality_count) + "\n";
    out += "missing_below_threshold " + std::to_string(report.missing_count) + "\n";
    emit(out);
  } else if (g.format == "csv") {
    CsvWriter csv({"verdict", "collision_count", "integrality_count", "min_value",
                   "max_value", "safe_threshold", "missing_count"});
    csv.append_row({to_string(report.verdict), std::to_string(report.collision_count),
                    std::to_string(report.integrality_count),
                    report.min_value ? to_decimal(*report.min_value) : "",
                    report.max_value ? to_decimal(*report.max_value) : "",
                    to_decimal(report.safe_threshold),
                    std::to_string(report.missing_count)});
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "check", g);
    w.key("poly").string(poly_text);
    w.key("box").nat(box);
    w.end_object();
    w.key("poly_canonical").string(to_string(p));
    w.key("verdict").string(to_string(report.verdict));
    w.key("collisions").begin_array();
    for (const CollisionWitness& c : report.collisions) {
      w.begin_object();
      w.key("first");
      write_point(w, c.first_point);
      w.key("second");
      write_point(w, c.second_point);
      w.key("value").nat(c.value);
      w.end_object();
    }
    w.end_array();
    w.key("collision_count").integer(static_cast<long long>(report.collision_count));
    w.key("integrality_violations").begin_array();
    for (const IntegralityWitness& v : report.integrality_violations) {
      w.begin_object();
      w.key("point");
      write_point(w, v.point);
      w.key("value").rational(v.value);
      w.end_object();
    }
    w.end_array();
    w.key("integrality_count").integer(static_cast<long long>(report.integrality_count));
    if (report.min_value)
      w.key("min_value").nat(*report.min_value);
    else
      w.key("min_value").null();
    if (report.max_value)
      w.key("max_value").nat(*report.max_value);
    else
      w.key("max_value").null();
    w.key("safe_threshold").nat(report.safe_threshold);
    w.key("missing_below").begin_array();
    for (const Nat& v : report.missing_below) w.nat(v);
    w.end_array();
    w.key("missing_count").integer(static_cast<long long>(report.missing_count));
    w.key("missing_truncated").boolean(report.missing_truncated);
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

// ---- refute ----------------------------------------------------------------

struct RefuteCliOpts {
  std::string poly;
  std::string rays = "1/3,1/2,1,2,3";
  unsigned ratio = 4;
  std::size_t steps = 12;
  Real tol = 1e-6L;
  Real slope_tol = 1e-3L;
  Real slope_floor = 0.5L;
};

void run_refute(const RefuteCliOpts& opt, const GlobalOpts& g) {
  MultiPoly p = parse_poly(opt.poly, 2);
  std::vector<Rational> rays;
  for (const std::string& part : split_commas(opt.rays))
    rays.push_back(rational_from_string(part));
  RefuteOptions options;
  options.growth_ratio = opt.ratio;
  options.steps = opt.steps;
  options.tol = opt.tol;
  options.slope_tol = opt.slope_tol;
  options.slope_floor = opt.slope_floor;
  RefutationReport report = refute_degree(p, rays, options);

  if (g.format == "plain") {
    std::string out;
    out += std::string("verdict ") + to_string(report.verdict) + "\n";
    out += "estimated_degree " + std::to_string(report.estimated_degree) + "\n";
    out += "max_abs_drift " + format_real(report.max_abs_drift) + "\n";
    emit(out);
  } else if (g.format == "csv") {
    CsvWriter csv({"h", "leading_form_vanishes", "drift_slope", "estimated_degree",
                   "c_estimate", "verdict"});
    for (const RayFinding& f : report.rays) {
      if (f.leading_form_vanishes) {
        csv.append_row({rational_to_string(f.h), "true", "", "",
                        "", to_string(report.verdict)});
      } else {
        csv.append_row({rational_to_string(f.h), "false",
                        format_real(f.report.drift_slope),
                        format_real(f.estimated_degree),
                        format_real(f.report.c_estimate), to_string(report.verdict)});
      }
    }
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "refute", g);
    w.key("poly").string(opt.poly);
    w.key("rays").begin_array();
    for (const Rational& h : rays) w.rational(h);
    w.end_array();
    w.key("ratio").integer(opt.ratio);
    w.key("steps").integer(static_cast<long long>(opt.steps));
    w.key("tol").real(opt.tol);
    w.key("slope_tol").real(opt.slope_tol);
    w.key("slope_floor").real(opt.slope_floor);
    w.end_object();
    w.key("poly_canonical").string(to_string(p));
    w.key("rays").begin_array();
    for (const RayFinding& f : report.rays) {
      w.begin_object();
      w.key("h").rational(f.h);
      w.key("leading_form_vanishes").boolean(f.leading_form_vanishes);
      if (f.leading_form_vanishes) {
        w.key("drift_slope").null();
        w.key("estimated_degree").null();
        w.key("c_estimate").null();
        w.key("converged").null();
      } else {
        w.key("drift_slope").real(f.report.drift_slope);
        w.key("estimated_degree").real(f.estimated_degree);
        w.key("c_estimate").real(f.report.c_estimate);
        w.key("converged").boolean(f.report.converged);
      }
      w.end_object();
    }
    w.end_array();
    w.key("verdict").string(to_string(report.verdict));
    w.key("estimated_degree").integer(report.estimated_degree);
    w.key("max_abs_drift").real(report.max_abs_drift);
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

// ---- census ----------------------------------------------------------------

void run_census(const std::string& n_text, unsigned c, const GlobalOpts& g) {
  Nat n = from_decimal(n_text);
  CensusReport report = census(n, c);

  if (g.format == "plain") {
    std::string out;
    out += "count " + std::to_string(report.count_compressible) + "\n";
    out += "fraction " + format_real(report.fraction) + "\n";
    out += "bound " + format_real(report.bound) + "\n";
    emit(out);
  } else if (g.format == "csv") {
    CsvWriter csv({"N", "c", "count", "fraction", "bound"});
    csv.append_row({to_decimal(report.range_size), std::to_string(report.slack_bits),
                    std::to_string(report.count_compressible),
                    format_real(report.fraction), format_real(report.bound)});
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "census", g);
    w.key("n").nat(n);
    w.key("c").integer(c);
    w.end_object();
    w.key("N").nat(report.range_size);
    w.key("c").integer(report.slack_bits);
    w.key("count").integer(static_cast<long long>(report.count_compressible));
    w.key("fraction").real(report.fraction);
    w.key("bound").real(report.bound);
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

// ---- wedge -----------------------------------------------------------------

void run_wedge(const std::string& h_text, const std::string& eps_text,
               const std::string& box_text, const GlobalOpts& g) {
  WedgeSpec spec{rational_from_string(h_text), rational_from_string(eps_text),
                 from_decimal(box_text)};
  WedgeReport report = wedge_points(spec);

  if (g.format == "plain") {
    std::string out;
    out += "count " + to_decimal(report.lattice_count) + "\n";
    out += "fraction " + format_real(report.lattice_fraction) + "\n";
    out += "area_fraction " + format_real(report.area_fraction) + "\n";
    emit(out);
  } else if (g.format == "csv") {
    CsvWriter csv({"h", "eps", "box", "count", "fraction", "area_fraction"});
    csv.append_row({rational_to_string(spec.h), rational_to_string(spec.epsilon),
                    to_decimal(spec.box_side), to_decimal(report.lattice_count),
                    format_real(report.lattice_fraction),
                    format_real(report.area_fraction)});
    emit(std::move(csv).take());
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    write_common_config(w, "wedge", g);
    w.key("h").rational(spec.h);
    w.key("eps").rational(spec.epsilon);
    w.key("box").nat(spec.box_side);
    w.end_object();
    w.key("count").nat(report.lattice_count);
    w.key("fraction").real(report.lattice_fraction);
    w.key("area_fraction").real(report.area_fraction);
    w.end_object();
    emit(std::move(w).take() + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairing-function analysis toolkit: exact pairing codecs,\n"
               "information-efficiency estimates along rays, candidate\n"
               "bijectivity scans, compressibility censuses and wedge counts"};
  app.require_subcommand(1);

  std::array<GlobalOpts, 8> per_command;
  std::size_t next_slot = 0;

  auto add_format = [&](CLI::App* sub, const char* default_format) -> GlobalOpts& {
    GlobalOpts& g = per_command[next_slot++];
    g.format = default_format;
    sub->add_option("--format", g.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--seed", g.seed,
                    "random seed echoed in reports (all analyses here are "
                    "deterministic)")
        ->capture_default_str();
    return g;
  };

  // pair
  std::vector<std::string> pair_values;
  CLI::App* pair_cmd = app.add_subcommand("pair", "fold naturals into one");
  pair_cmd->add_option("values", pair_values, "naturals to pair, left to right")
      ->required()
      ->expected(-1);
  GlobalOpts& pair_g = add_format(pair_cmd, "plain");
  pair_cmd->callback([&] { run_pair(pair_values, pair_g); });

  // unpair
  std::string unpair_n;
  unsigned unpair_arity = 2;
  CLI::App* unpair_cmd = app.add_subcommand("unpair", "invert the pairing fold");
  unpair_cmd->add_option("n", unpair_n, "natural to unfold")->required();
  unpair_cmd->add_option("--arity", unpair_arity, "tuple length to recover")
      ->capture_default_str()
      ->check(CLI::Range(1u, 64u));
  GlobalOpts& unpair_g = add_format(unpair_cmd, "plain");
  unpair_cmd->callback([&] { run_unpair(unpair_n, unpair_arity, unpair_g); });

  // delta
  std::string delta_poly, delta_at;
  CLI::App* delta_cmd = app.add_subcommand(
      "delta", "information efficiency of a candidate at one point");
  delta_cmd->add_option("--poly", delta_poly, "candidate expression")->required();
  delta_cmd->add_option("--at", delta_at, "evaluation point, comma-separated naturals")
      ->required();
  GlobalOpts& delta_g = add_format(delta_cmd, "json");
  delta_cmd->callback([&] { run_delta(delta_poly, delta_at, delta_g); });

  // ray
  RayCliOpts ray_opts;
  CLI::App* ray_cmd = app.add_subcommand(
      "ray", "limit of delta along y = h*x under geometric sampling");
  ray_cmd->set_help_flag("--help", "print help");
  ray_cmd->add_option("--poly", ray_opts.poly, "candidate expression, variables x,y")
      ->required();
  ray_cmd->add_option("--h", ray_opts.h, "ray slope, rational p/q")->required();
  ray_cmd->add_option("--x0", ray_opts.x0,
                      "first sample; must be a positive multiple of denominator(h) "
                      "(default: near 2^20)");
  ray_cmd->add_option("--ratio", ray_opts.ratio, "geometric growth between samples")
      ->capture_default_str();
  ray_cmd->add_option("--steps", ray_opts.steps, "number of samples")
      ->capture_default_str();
  ray_cmd->add_option("--tol", ray_opts.tol, "terminal oscillation tolerance, bits")
      ->capture_default_str();
  ray_cmd->add_option("--slope_tol", ray_opts.slope_tol,
                      "drift tolerance, bits per log2(x)")
      ->capture_default_str();
  GlobalOpts& ray_g = add_format(ray_cmd, "json");
  ray_cmd->callback([&] { run_ray(ray_opts, ray_g); });

  // check
  std::string check_poly, check_box;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "scan a candidate for bijectivity violations on [0,N)^2");
  check_cmd->add_option("--poly", check_poly, "candidate expression, variables x,y")
      ->required();
  check_cmd->add_option("--box", check_box, "box side N")->required();
  GlobalOpts& check_g = add_format(check_cmd, "json");
  check_cmd->callback([&] { run_check(check_poly, check_box, check_g); });

  // refute
  RefuteCliOpts refute_opts;
  CLI::App* refute_cmd = app.add_subcommand(
      "refute", "degree-drift interrogation of a candidate along rays");
  refute_cmd->add_option("--poly", refute_opts.poly,
                         "candidate expression, variables x,y")
      ->required();
  refute_cmd->add_option("--rays", refute_opts.rays, "comma-separated rational slopes")
      ->capture_default_str();
  refute_cmd->add_option("--ratio", refute_opts.ratio, "geometric growth between samples")
      ->capture_default_str();
  refute_cmd->add_option("--steps", refute_opts.steps, "samples per ray")
      ->capture_default_str();
  refute_cmd->add_option("--tol", refute_opts.tol, "terminal oscillation tolerance, bits")
      ->capture_default_str();
  refute_cmd->add_option("--slope_tol", refute_opts.slope_tol,
                         "drift tolerance, bits per log2(x)")
      ->capture_default_str();
  refute_cmd->add_option("--slope_floor", refute_opts.slope_floor,
                         "|drift| at or above this refutes the candidate")
      ->capture_default_str();
  GlobalOpts& refute_g = add_format(refute_cmd, "json");
  refute_cmd->callback([&] { run_refute(refute_opts, refute_g); });

  // census
  std::string census_n;
  unsigned census_c = 0;
  CLI::App* census_cmd = app.add_subcommand(
      "census", "count values below N whose codewords undercut log2(N) - c");
  census_cmd->add_option("--n", census_n, "range size N")->required();
  census_cmd->add_option("--c", census_c, "slack bits")->required();
  GlobalOpts& census_g = add_format(census_cmd, "json");
  census_cmd->callback([&] { run_census(census_n, census_c, census_g); });

  // wedge
  std::string wedge_h, wedge_eps, wedge_box;
  CLI::App* wedge_cmd = app.add_subcommand(
      "wedge", "lattice density of { (x,y) : h*x <= y <= (h+eps)*x } in [0,N]^2");
  wedge_cmd->set_help_flag("--help", "print help");
  wedge_cmd->add_option("--h", wedge_h, "lower slope, rational p/q")->required();
  wedge_cmd->add_option("--eps", wedge_eps, "wedge width, rational p/q")->required();
  wedge_cmd->add_option("--box", wedge_box, "box side N")->required();
  GlobalOpts& wedge_g = add_format(wedge_cmd, "json");
  wedge_cmd->callback([&] { run_wedge(wedge_h, wedge_eps, wedge_box, wedge_g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const pairinfo::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
