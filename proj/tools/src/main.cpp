// msqc: two-photon spin entanglement through a metasurface coupler.
// Subcommands cover state evolution, Bell-condition timing, Werner-state
// discord decay, platform coherence comparisons, and g(r) extraction from
// measured power maps. Outputs are deterministic CSV/JSON/SVG files.
#include <clocale>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msqc/constants.hpp"
#include "msqc/coupling_report.hpp"
#include "msqc/evolution.hpp"
#include "msqc/gaussian_fit.hpp"
#include "msqc/metrics.hpp"
#include "msqc/platforms.hpp"
#include "msqc/power_map.hpp"
#include "msqc/radial_profile.hpp"
#include "msqc/spin_state.hpp"
#include "msqc/version.hpp"
#include "msqc/werner.hpp"
#include "output.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace msqc;
using cli::sci;

struct Common {
  std::string out;
  std::string format = "csv";
  std::string config_path;
  bool legacy_c = false;
  std::map<std::string, std::string> config;
  std::string command_line;
  std::string preset_note;

  double light_speed() const {
    return legacy_c ? kSpeedOfLightLegacy : kSpeedOfLight;
  }
};

void add_common(CLI::App* cmd, Common& common, bool with_legacy_c = false) {
  cmd->add_option("--out", common.out, "Output file path")->required();
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  cmd->add_option("--config", common.config_path,
                  "key = value overrides (applied where flags are absent)");
  if (with_legacy_c) {
    cmd->add_flag("--legacy-c", common.legacy_c,
                  "Use c = 3e8 m/s to match the usual quoted arithmetic");
  }
}

double parse_number(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad number for '" + key + "'");
  }
  if (used != text.size()) {
    throw std::runtime_error("config: trailing characters for '" + key + "'");
  }
  return value;
}

// Precedence: built-in default < config file < explicit flag.
void merge_config(const CLI::App& cmd, const Common& common,
                  const std::string& flag, const std::string& key,
                  double& value) {
  if (cmd.count(flag) > 0) return;
  if (auto it = common.config.find(key); it != common.config.end()) {
    value = parse_number(it->second, key);
  }
}

void merge_config(const CLI::App& cmd, const Common& common,
                  const std::string& flag, const std::string& key, int& value) {
  if (cmd.count(flag) > 0) return;
  if (auto it = common.config.find(key); it != common.config.end()) {
    value = static_cast<int>(parse_number(it->second, key));
  }
}

void load_config(Common& common) {
  if (!common.config_path.empty()) {
    common.config = load_key_value_file(common.config_path);
  }
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

json meta_json(const Common& common) {
  json meta;
  meta["tool"] = "msqc";
  meta["version"] = kVersion;
  meta["command"] = common.command_line;
  if (!common.preset_note.empty()) meta["preset"] = common.preset_note;
  return meta;
}

void emit(const Common& common, const std::string& content) {
  cli::write_atomic(common.out, content);
}

// Preset lookup honoring the optional MSQC_PRESET_DIR override directory
// (files named <preset>.conf in the key = value format).
PlatformModel resolve_preset(const std::string& name, double c) {
  if (const char* dir = std::getenv("MSQC_PRESET_DIR")) {
    const std::filesystem::path candidate =
        std::filesystem::path(dir) / (name + ".conf");
    if (std::filesystem::exists(candidate)) {
      return platform_from_config(name, load_key_value_file(candidate.string()),
                                  c);
    }
  }
  return platform_preset(name, c);
}

// --------------------------------------------------------------------------
// evolve: probabilities and concurrence of the |+-> start along a time grid.
// --------------------------------------------------------------------------
struct EvolveOpts {
  double g = 0.0;
  double omega0 = 0.0;
  double omega1 = 0.0;
  double t_max = 0.0;
  int steps = 0;
};

int run_evolve(const CLI::App& cmd, Common& common, EvolveOpts& opt) {
  load_config(common);
  merge_config(cmd, common, "--g", "g", opt.g);
  merge_config(cmd, common, "--omega0", "omega0", opt.omega0);
  merge_config(cmd, common, "--omega1", "omega1", opt.omega1);
  merge_config(cmd, common, "--t-max", "t_max", opt.t_max);
  merge_config(cmd, common, "--steps", "steps", opt.steps);

  if (!(opt.g > 0.0)) throw std::domain_error("evolve: --g must be > 0");
  if (!(opt.t_max > 0.0)) throw std::domain_error("evolve: --t-max must be > 0");
  if (opt.steps < 2) throw std::domain_error("evolve: --steps must be >= 2");

  const SystemParams params{opt.omega0, opt.omega1, opt.g, 1.0};
  struct Row {
    double t;
    std::array<double, 4> p;
    double concurrence;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(opt.steps));
  for (int i = 0; i < opt.steps; ++i) {
    const double t = opt.t_max * i / (opt.steps - 1);
    const SpinState psi = evolve_analytic(basis_state(kPM), params, t);
    rows.push_back({t, measurement_probabilities(psi), concurrence_pure(psi)});
  }

  if (common.format == "csv") {
    std::string out = cli::csv_header(common.command_line, common.preset_note);
    out += "t_s,P++,P+-,P-+,P--,concurrence\n";
    for (const auto& r : rows) {
      out += sci(r.t) + ',' + sci(r.p[0]) + ',' + sci(r.p[1]) + ',' +
             sci(r.p[2]) + ',' + sci(r.p[3]) + ',' + sci(r.concurrence) + '\n';
    }
    emit(common, out);
  } else if (common.format == "json") {
    json doc;
    doc["_meta"] = meta_json(common);
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      doc["rows"].push_back({{"t_s", r.t},
                             {"P_pp", r.p[0]},
                             {"P_pm", r.p[1]},
                             {"P_mp", r.p[2]},
                             {"P_mm", r.p[3]},
                             {"concurrence", r.concurrence}});
    }
    emit(common, doc.dump(2) + "\n");
  } else {
    std::vector<cli::SvgSeries> series(5);
    const char* labels[5] = {"P++", "P+-", "P-+", "P--", "concurrence"};
    const char* colors[5] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                             "#ff7f0e"};
    for (int k = 0; k < 5; ++k) {
      series[k].label = labels[k];
      series[k].color = colors[k];
    }
    for (const auto& r : rows) {
      for (int k = 0; k < 4; ++k) series[k].points.emplace_back(r.t, r.p[k]);
      series[4].points.emplace_back(r.t, r.concurrence);
    }
    emit(common,
         cli::render_svg(common.command_line, common.preset_note, "t (s)",
                         "probability / concurrence", series,
                         {{bell_time(opt.g), "g t = pi/4"}}));
  }
  return 0;
}

// --------------------------------------------------------------------------
// bell: Bell-condition time for a coupling strength, with the state reached.
// --------------------------------------------------------------------------
struct BellOpts {
  double g = 0.0;
  double omega0 = 0.0;
  double omega1 = 0.0;
};

int run_bell(const CLI::App& cmd, Common& common, BellOpts& opt) {
  load_config(common);
  merge_config(cmd, common, "--g", "g", opt.g);
  merge_config(cmd, common, "--omega0", "omega0", opt.omega0);
  merge_config(cmd, common, "--omega1", "omega1", opt.omega1);

  const double t = bell_time(opt.g);
  const SpinState psi = evolve_analytic(
      basis_state(kPM), {opt.omega0, opt.omega1, opt.g, 1.0}, t);
  const auto p = measurement_probabilities(psi);
  const double c = concurrence_pure(psi);
  const double f = bell_fidelity(psi, bell_state());

  if (common.format == "csv") {
    std::string out = cli::csv_header(common.command_line, common.preset_note);
    out += "g_rad_s,t_bell_s,P++,P+-,P-+,P--,concurrence,bell_fidelity\n";
    out += sci(opt.g) + ',' + sci(t) + ',' + sci(p[0]) + ',' + sci(p[1]) + ',' +
           sci(p[2]) + ',' + sci(p[3]) + ',' + sci(c) + ',' + sci(f) + '\n';
    emit(common, out);
  } else if (common.format == "json") {
    json doc;
    doc["_meta"] = meta_json(common);
    doc["g_rad_s"] = opt.g;
    doc["t_bell_s"] = t;
    doc["probabilities"] = {p[0], p[1], p[2], p[3]};
    doc["concurrence"] = c;
    doc["bell_fidelity"] = f;
    emit(common, doc.dump(2) + "\n");
  } else {
    throw std::runtime_error("bell: svg output is not supported");
  }
  return 0;
}

// --------------------------------------------------------------------------
// discord-decay: Werner discord/concurrence along an exponential purity decay.
// --------------------------------------------------------------------------
struct DecayOpts {
  std::string preset;
  double gamma = 0.0;
  double t_max = 0.0;
  int steps = 200;
  int grid = 64;
  double threshold = 1.0 / 3.0;
};

int run_discord_decay(const CLI::App& cmd, Common& common, DecayOpts& opt) {
  load_config(common);
  merge_config(cmd, common, "--gamma", "gamma", opt.gamma);
  merge_config(cmd, common, "--t-max", "t_max", opt.t_max);
  merge_config(cmd, common, "--steps", "steps", opt.steps);
  merge_config(cmd, common, "--grid", "grid", opt.grid);
  merge_config(cmd, common, "--threshold", "threshold", opt.threshold);

  double gamma = opt.gamma;
  if (!opt.preset.empty()) {
    const PlatformModel model = resolve_preset(opt.preset, common.light_speed());
    common.preset_note = model.name + " (gamma = " + sci(model.gamma) + " 1/s)";
    if (cmd.count("--gamma") == 0) gamma = model.gamma;
  }
  if (!(gamma > 0.0)) {
    throw std::domain_error("discord-decay: needs --gamma > 0 or --preset");
  }

  const double t_star = discord_vanishing_time(gamma, opt.threshold);
  const bool t_max_given =
      cmd.count("--t-max") > 0 || common.config.count("t_max") > 0;
  if (t_max_given && !(opt.t_max > 0.0)) {
    throw std::domain_error("discord-decay: --t-max must be > 0");
  }
  const double t_max = t_max_given ? opt.t_max : 2.0 * t_star;
  const auto series = discord_decay_series(gamma, t_max, opt.steps, opt.grid);

  if (common.format == "csv") {
    std::string out = cli::csv_header(common.command_line, common.preset_note);
    out += "t_s,z,discord_bits,concurrence\n";
    for (const auto& pt : series) {
      out += sci(pt.t) + ',' + sci(pt.z) + ',' + sci(pt.discord_bits) + ',' +
             sci(pt.concurrence) + '\n';
    }
    emit(common, out);
  } else if (common.format == "json") {
    json doc;
    doc["_meta"] = meta_json(common);
    doc["gamma_per_s"] = gamma;
    doc["threshold"] = opt.threshold;
    doc["separability_time_s"] = t_star;
    doc["rows"] = json::array();
    for (const auto& pt : series) {
      doc["rows"].push_back({{"t_s", pt.t},
                             {"z", pt.z},
                             {"discord_bits", pt.discord_bits},
                             {"concurrence", pt.concurrence}});
    }
    emit(common, doc.dump(2) + "\n");
  } else {
    cli::SvgSeries discord{"discord (bits)", "#1f77b4", {}};
    cli::SvgSeries concurrence{"concurrence", "#d62728", {}};
    for (const auto& pt : series) {
      discord.points.emplace_back(pt.t, pt.discord_bits);
      concurrence.points.emplace_back(pt.t, pt.concurrence);
    }
    std::vector<cli::SvgMarker> markers;
    if (t_star <= t_max) {
      markers.push_back({t_star, "z = " + sci(opt.threshold)});
    }
    emit(common,
         cli::render_svg(common.command_line, common.preset_note, "t (s)",
                         "discord (bits) / concurrence",
                         {discord, concurrence}, markers));
  }
  return 0;
}

// --------------------------------------------------------------------------
// platforms: decoherence rates, coherence times, and discord-vanishing times.
// --------------------------------------------------------------------------
struct PlatformsOpts {
  std::vector<std::string> names;
  double gamma = 0.0;
  double threshold = 1.0 / 3.0;
};

int run_platforms(const CLI::App& cmd, Common& common, PlatformsOpts& opt) {
  load_config(common);
  merge_config(cmd, common, "--gamma", "gamma", opt.gamma);
  merge_config(cmd, common, "--threshold", "threshold", opt.threshold);

  std::vector<PlatformModel> models;
  if (opt.names.empty()) {
    for (const char* name : {"metasurface", "sfwm", "spdc"}) {
      models.push_back(resolve_preset(name, common.light_speed()));
    }
  } else {
    for (const auto& name : opt.names) {
      models.push_back(resolve_preset(name, common.light_speed()));
    }
  }
  if (cmd.count("--gamma") > 0) {
    if (models.size() != 1) {
      throw std::runtime_error(
          "platforms: --gamma override requires exactly one --platform");
    }
    models[0].gamma = opt.gamma;
    models[0].coherence_time = 1.0 / opt.gamma;
    models[0].validate();
  }

  struct Row {
    PlatformModel model;
    double t_star;
  };
  std::vector<Row> rows;
  for (auto& m : models) {
    rows.push_back({m, discord_vanishing_time(m.gamma, opt.threshold)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.t_star != b.t_star) return a.t_star > b.t_star;
    return a.model.name < b.model.name;
  });

  if (common.format == "csv") {
    std::string out = cli::csv_header(common.command_line, common.preset_note);
    out += "platform,gamma_per_s,coherence_time_s,discord_vanishing_time_s,"
           "annotation\n";
    for (const auto& r : rows) {
      out += quote_csv(r.model.name) + ',' + sci(r.model.gamma) + ',' +
             sci(r.model.coherence_time) + ',' + sci(r.t_star) + ',' +
             quote_csv(r.model.annotation) + '\n';
    }
    emit(common, out);
  } else if (common.format == "json") {
    json doc;
    doc["_meta"] = meta_json(common);
    doc["threshold"] = opt.threshold;
    doc["platforms"] = json::array();
    for (const auto& r : rows) {
      json entry;
      entry["name"] = r.model.name;
      entry["gamma_per_s"] = r.model.gamma;
      entry["coherence_time_s"] = r.model.coherence_time;
      entry["discord_vanishing_time_s"] = r.t_star;
      entry["annotation"] = r.model.annotation;
      entry["source_params"] = r.model.source_params;
      doc["platforms"].push_back(entry);
    }
    emit(common, doc.dump(2) + "\n");
  } else {
    throw std::runtime_error("platforms: svg output is not supported");
  }
  return 0;
}

// --------------------------------------------------------------------------
// fit-g: power map -> radial average -> g(r) -> Gaussian fit.
// --------------------------------------------------------------------------
struct FitGOpts {
  std::string in;
  double bin_width = 0.0;
  std::string normalization = "peak";
  double g_peak = 0.0;
};

RadialProfile load_g_profile(const FitGOpts& opt, double* bin_width_out) {
  const PowerMap map = load_power_map(opt.in);
  const auto [cx, cy] = centroid(map);
  const double extent = std::max(map.extent_x, map.extent_y);
  const double bin_width =
      opt.bin_width > 0.0 ? opt.bin_width : extent / 64.0;
  if (!(bin_width > 0.0)) {
    throw std::domain_error("fit-g: bin width must be positive");
  }
  if (bin_width_out) *bin_width_out = bin_width;
  const RadialProfile power = radial_average(map, cx, cy, bin_width);
  const GNormalization norm =
      opt.normalization == "physical"
          ? GNormalization::physical(opt.g_peak)
          : GNormalization::peak_unit();
  return g_profile(power, norm);
}

int run_fit_g(const CLI::App& cmd, Common& common, FitGOpts& opt) {
  load_config(common);
  merge_config(cmd, common, "--bin-width", "bin_width", opt.bin_width);
  merge_config(cmd, common, "--g-peak", "g_peak", opt.g_peak);

  double bin_width = 0.0;
  const RadialProfile g = load_g_profile(opt, &bin_width);
  const GaussianFit fit = fit_gaussian(g);

  if (common.format == "csv") {
    std::string out = cli::csv_header(common.command_line, common.preset_note);
    out += "# g(r) profile, normalization = " + opt.normalization +
           ", bin_width = " + sci(bin_width) + " m\n";
    out += "# fit: A = " + sci(fit.amplitude) + ", s = " + sci(fit.width) +
           " m, c = " + sci(fit.offset) + ", rms = " + sci(fit.rms_residual) +
           ", converged = " + (fit.converged ? std::string("true") : "false") +
           "\n";
    out += "r,mean,std,count\n";
    for (const auto& b : g.bins) {
      out += sci(b.r_center) + ',' + sci(b.mean) + ',' + sci(b.std) + ',' +
             std::to_string(b.count) + '\n';
    }
    emit(common, out);
  } else if (common.format == "json") {
    json doc;
    doc["_meta"] = meta_json(common);
    doc["A"] = fit.amplitude;
    doc["s"] = fit.width;
    doc["c"] = fit.offset;
    doc["rms_residual"] = fit.rms_residual;
    doc["iterations"] = fit.iterations;
    doc["converged"] = fit.converged;
    doc["normalization"] = opt.normalization;
    doc["bin_width_m"] = bin_width;
    emit(common, doc.dump(2) + "\n");
  } else {
    cli::SvgSeries data{"g(r)", "#1f77b4", {}};
    cli::SvgSeries model{"gaussian fit", "#d62728", {}};
    for (const auto& b : g.bins) {
      data.points.emplace_back(b.r_center, b.mean);
      model.points.emplace_back(
          b.r_center, fit.amplitude * std::exp(-b.r_center * b.r_center /
                                               (2.0 * fit.width * fit.width)) +
                          fit.offset);
    }
    emit(common, cli::render_svg(common.command_line, common.preset_note,
                                 "r (m)", "g(r)", {data, model}, {}));
  }
  return 0;
}

// --------------------------------------------------------------------------
// concurrence-stats: spatially averaged concurrence over an aperture.
// --------------------------------------------------------------------------
struct StatsOpts {
  std::string in;
  double bin_width = 0.0;
  double g_peak = 0.0;
  double aperture = 0.0;
};

int run_concurrence_stats(const CLI::App& cmd, Common& common, StatsOpts& opt) {
  load_config(common);
  merge_config(cmd, common, "--bin-width", "bin_width", opt.bin_width);
  merge_config(cmd, common, "--g-peak", "g_peak", opt.g_peak);
  merge_config(cmd, common, "--aperture", "aperture", opt.aperture);

  if (!(opt.g_peak > 0.0)) {
    throw std::domain_error("concurrence-stats: --g-peak (rad/s) must be > 0");
  }
  FitGOpts fit_opt{opt.in, opt.bin_width, "physical", opt.g_peak};
  const RadialProfile g = load_g_profile(fit_opt, nullptr);
  const double aperture =
      opt.aperture > 0.0 ? opt.aperture : g.bins.back().r_center;
  const ConcurrenceStats stats = concurrence_statistics(g, aperture);

  const std::string convention =
      "power-weighted bins (count * g^2); t fixed to pi/(4 g_peak)";
  if (common.format == "csv") {
    std::string out = cli::csv_header(common.command_line, common.preset_note);
    out += "# convention: " + convention + "\n";
    out += "mean,std,g_peak_rad_s,bell_time_s,aperture_m,bins_used\n";
    out += sci(stats.mean) + ',' + sci(stats.std) + ',' + sci(stats.g_peak) +
           ',' + sci(stats.bell_time) + ',' + sci(aperture) + ',' +
           std::to_string(stats.bins_used) + '\n';
    emit(common, out);
  } else if (common.format == "json") {
    json doc;
    doc["_meta"] = meta_json(common);
    doc["convention"] = convention;
    doc["mean"] = stats.mean;
    doc["std"] = stats.std;
    doc["g_peak_rad_s"] = stats.g_peak;
    doc["bell_time_s"] = stats.bell_time;
    doc["aperture_m"] = aperture;
    doc["bins_used"] = stats.bins_used;
    emit(common, doc.dump(2) + "\n");
  } else {
    throw std::runtime_error("concurrence-stats: svg output is not supported");
  }
  return 0;
}

// --------------------------------------------------------------------------
// compare-materials: rank named power maps by peak coupling and fit quality.
// --------------------------------------------------------------------------
struct CompareOpts {
  std::vector<std::string> inputs;  // name=path
  double bin_width = 0.0;
};

int run_compare_materials(const CLI::App& cmd, Common& common,
                          CompareOpts& opt) {
  load_config(common);
  merge_config(cmd, common, "--bin-width", "bin_width", opt.bin_width);

  std::vector<std::pair<std::string, RadialProfile>> profiles;
  for (const auto& spec : opt.inputs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw std::runtime_error("compare-materials: --in expects name=path, got '" +
                               spec + "'");
    }
    // Materials are compared in shared sqrt(power) units: per-map peak
    // normalization would erase the relative coupling strengths.
    const PowerMap map = load_power_map(spec.substr(eq + 1));
    const auto [cx, cy] = centroid(map);
    const double extent = std::max(map.extent_x, map.extent_y);
    const double bin_width =
        opt.bin_width > 0.0 ? opt.bin_width : extent / 64.0;
    const RadialProfile power = radial_average(map, cx, cy, bin_width);
    profiles.emplace_back(
        spec.substr(0, eq),
        g_profile(power, GNormalization::physical(
                             std::sqrt(power.peak_mean()))));
  }
  auto metrics = compare_materials(profiles);
  std::sort(metrics.begin(), metrics.end(),
            [](const MaterialMetrics& a, const MaterialMetrics& b) {
              return a.rank_by_peak < b.rank_by_peak;
            });

  if (common.format == "csv") {
    std::string out = cli::csv_header(common.command_line, common.preset_note);
    out += "material,peak_g,fit_width_m,fit_rms,fit_converged,rank_by_peak,"
           "rank_by_residual\n";
    for (const auto& m : metrics) {
      out += quote_csv(m.name) + ',' + sci(m.peak_g) + ',' + sci(m.fit_width) +
             ',' + sci(m.fit_rms) + ',' + (m.fit_converged ? "true" : "false") +
             ',' + std::to_string(m.rank_by_peak) + ',' +
             std::to_string(m.rank_by_residual) + '\n';
    }
    emit(common, out);
  } else if (common.format == "json") {
    json doc;
    doc["_meta"] = meta_json(common);
    doc["materials"] = json::array();
    for (const auto& m : metrics) {
      doc["materials"].push_back({{"name", m.name},
                                  {"peak_g", m.peak_g},
                                  {"fit_width_m", m.fit_width},
                                  {"fit_rms", m.fit_rms},
                                  {"fit_converged", m.fit_converged},
                                  {"rank_by_peak", m.rank_by_peak},
                                  {"rank_by_residual", m.rank_by_residual}});
    }
    emit(common, doc.dump(2) + "\n");
  } else {
    throw std::runtime_error("compare-materials: svg output is not supported");
  }
  return 0;
}

// --------------------------------------------------------------------------
// synth-map: deterministic seeded Gaussian power-map fixtures.
// --------------------------------------------------------------------------
int run_synth_map(const CLI::App&, Common& common, SyntheticMapSpec& spec) {
  if (common.format != "csv") {
    throw std::runtime_error("synth-map: only csv output is supported");
  }
  const PowerMap map = synthetic_gaussian_map(spec);
  std::string out = cli::csv_header(common.command_line, common.preset_note);
  out += "# synthetic gaussian map: grid = " + std::to_string(spec.grid) +
         ", extent = " + sci(spec.extent) + " m, width = " + sci(spec.width) +
         " m, amplitude = " + sci(spec.amplitude) +
         ", offset = " + sci(spec.offset) + ", noise = " + sci(spec.noise) +
         "\n";
  out += "# seed=" + std::to_string(*map.seed) + "\n";
  out += "x,y,p\n";
  for (const auto& s : map.samples) {
    out += sci(s.x) + ',' + sci(s.y) + ',' + sci(s.p) + '\n';
  }
  emit(common, out);
  return 0;
}

std::string reconstruct_command_line(int argc, char** argv) {
  std::string line;
  for (int i = 0; i < argc; ++i) {
    if (i) line += ' ';
    // Basename for argv[0] so emitted provenance does not depend on where
    // the binary was built.
    const std::string arg =
        i == 0 ? std::filesystem::path(argv[0]).filename().string() : argv[i];
    if (arg.find_first_of(" \t\"") != std::string::npos) {
      line += '\'' + arg + '\'';
    } else {
      line += arg;
    }
  }
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"metasurface spin-entanglement toolkit"};
  app.set_version_flag("--version", std::string("msqc ") + msqc::kVersion);
  app.require_subcommand(1);

  Common common;
  common.command_line = reconstruct_command_line(argc, argv);

  EvolveOpts evolve_opt;
  auto* evolve_cmd = app.add_subcommand(
      "evolve", "Time evolution of |+-> under the coupled Hamiltonian");
  evolve_cmd->add_option("--g", evolve_opt.g, "Coupling strength (rad/s)");
  evolve_cmd->add_option("--omega0", evolve_opt.omega0, "Photon 1 frequency");
  evolve_cmd->add_option("--omega1", evolve_opt.omega1, "Photon 2 frequency");
  evolve_cmd->add_option("--t-max", evolve_opt.t_max, "End of the time grid (s)");
  evolve_cmd->add_option("--steps", evolve_opt.steps, "Grid points (>= 2)");
  add_common(evolve_cmd, common);

  BellOpts bell_opt;
  auto* bell_cmd = app.add_subcommand(
      "bell", "Bell-condition time pi/(4g) and the state it produces");
  bell_cmd->add_option("--g", bell_opt.g, "Coupling strength (rad/s)")
      ->required();
  bell_cmd->add_option("--omega0", bell_opt.omega0, "Photon 1 frequency");
  bell_cmd->add_option("--omega1", bell_opt.omega1, "Photon 2 frequency");
  add_common(bell_cmd, common);

  DecayOpts decay_opt;
  auto* decay_cmd = app.add_subcommand(
      "discord-decay", "Werner discord/concurrence decay time series");
  decay_cmd->add_option("--preset", decay_opt.preset, "Platform preset name");
  decay_cmd->add_option("--gamma", decay_opt.gamma, "Decoherence rate (1/s)");
  decay_cmd->add_option("--t-max", decay_opt.t_max,
                        "Series end (s); default 2x the separability time");
  decay_cmd->add_option("--steps", decay_opt.steps, "Series points")
      ->capture_default_str();
  decay_cmd->add_option("--grid", decay_opt.grid, "Discord search grid (>= 32)")
      ->capture_default_str();
  decay_cmd->add_option("--threshold", decay_opt.threshold,
                        "Separability purity threshold");
  add_common(decay_cmd, common, true);

  PlatformsOpts platforms_opt;
  auto* platforms_cmd = app.add_subcommand(
      "platforms", "Coherence and discord-vanishing times per source");
  platforms_cmd->add_option("--platform,--preset", platforms_opt.names,
                            "Preset subset (default: metasurface, sfwm, spdc)");
  platforms_cmd->add_option("--gamma", platforms_opt.gamma,
                            "Rate override (single platform only)");
  platforms_cmd->add_option("--threshold", platforms_opt.threshold,
                            "Separability purity threshold");
  add_common(platforms_cmd, common, true);

  FitGOpts fitg_opt;
  auto* fitg_cmd = app.add_subcommand(
      "fit-g", "Radially averaged g(r) from a power map, with Gaussian fit");
  fitg_cmd->add_option("--in", fitg_opt.in, "Power map CSV (x,y,p)")->required();
  fitg_cmd->add_option("--bin-width", fitg_opt.bin_width,
                       "Radial bin width (m); default extent/64");
  fitg_cmd->add_option("--normalization", fitg_opt.normalization,
                       "peak | physical")
      ->check(CLI::IsMember({"peak", "physical"}))
      ->capture_default_str();
  fitg_cmd->add_option("--g-peak", fitg_opt.g_peak,
                       "Peak coupling (rad/s) for physical normalization");
  add_common(fitg_cmd, common);

  StatsOpts stats_opt;
  auto* stats_cmd = app.add_subcommand(
      "concurrence-stats", "Aperture-averaged concurrence of a g(r) profile");
  stats_cmd->add_option("--in", stats_opt.in, "Power map CSV (x,y,p)")
      ->required();
  stats_cmd->add_option("--bin-width", stats_opt.bin_width,
                        "Radial bin width (m); default extent/64");
  stats_cmd->add_option("--g-peak", stats_opt.g_peak, "Peak coupling (rad/s)");
  stats_cmd->add_option("--aperture", stats_opt.aperture,
                        "Aperture radius (m); default: full profile");
  add_common(stats_cmd, common);

  CompareOpts compare_opt;
  auto* compare_cmd = app.add_subcommand(
      "compare-materials", "Rank materials by peak coupling and fit quality");
  compare_cmd
      ->add_option("--in", compare_opt.inputs, "Repeatable name=path pairs")
      ->required();
  compare_cmd->add_option("--bin-width", compare_opt.bin_width,
                          "Radial bin width (m); default extent/64");
  add_common(compare_cmd, common);

  SyntheticMapSpec synth_spec;
  auto* synth_cmd = app.add_subcommand(
      "synth-map", "Seeded synthetic Gaussian power-map fixture");
  synth_cmd->add_option("--grid", synth_spec.grid, "Grid points per axis")
      ->capture_default_str();
  synth_cmd->add_option("--extent", synth_spec.extent, "Domain half-width (m)")
      ->capture_default_str();
  synth_cmd->add_option("--amplitude", synth_spec.amplitude, "Peak power")
      ->capture_default_str();
  synth_cmd->add_option("--width", synth_spec.width, "Gaussian sigma (m)")
      ->capture_default_str();
  synth_cmd->add_option("--offset", synth_spec.offset, "Constant baseline");
  synth_cmd->add_option("--center-x", synth_spec.center_x, "Peak x (m)");
  synth_cmd->add_option("--center-y", synth_spec.center_y, "Peak y (m)");
  synth_cmd->add_option("--noise", synth_spec.noise,
                        "Relative uniform noise amplitude");
  synth_cmd->add_option("--seed", synth_spec.seed, "RNG seed")
      ->capture_default_str();
  add_common(synth_cmd, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (evolve_cmd->parsed()) return run_evolve(*evolve_cmd, common, evolve_opt);
    if (bell_cmd->parsed()) return run_bell(*bell_cmd, common, bell_opt);
    if (decay_cmd->parsed()) {
      return run_discord_decay(*decay_cmd, common, decay_opt);
    }
    if (platforms_cmd->parsed()) {
      return run_platforms(*platforms_cmd, common, platforms_opt);
    }
    if (fitg_cmd->parsed()) return run_fit_g(*fitg_cmd, common, fitg_opt);
    if (stats_cmd->parsed()) {
      return run_concurrence_stats(*stats_cmd, common, stats_opt);
    }
    if (compare_cmd->parsed()) {
      return run_compare_materials(*compare_cmd, common, compare_opt);
    }
    if (synth_cmd->parsed()) return run_synth_map(*synth_cmd, common, synth_spec);
  } catch (const std::exception& e) {
    std::cerr << "msqc: error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "msqc: no subcommand\n";
  return 1;
}
