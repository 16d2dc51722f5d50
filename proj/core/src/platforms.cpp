#include "msqc/platforms.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace msqc {

namespace {

double require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive");
  }
  return value;
}

double parse_double(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for key '" + key + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) {
    throw std::invalid_argument("config: trailing junk for key '" + key + "'");
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

double spdc_coherence_time(double lambda, double delta_lambda, double c) {
  require_positive(lambda, "spdc: lambda");
  require_positive(delta_lambda, "spdc: delta_lambda");
  require_positive(c, "spdc: c");
  return 0.44 * lambda * lambda / (c * delta_lambda);
}

double sfwm_rate(const std::vector<double>& components) {
  if (components.empty()) {
    throw std::domain_error("sfwm_rate: no rate components");
  }
  double sum = 0.0;
  for (double r : components) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw std::domain_error("sfwm_rate: negative or non-finite component");
    }
    sum += r;
  }
  if (!(sum > 0.0)) throw std::domain_error("sfwm_rate: all components zero");
  return sum;
}

double interaction_time(double thickness, double speed) {
  require_positive(thickness, "interaction_time: thickness");
  require_positive(speed, "interaction_time: speed");
  return thickness / speed;
}

double rayleigh_mean_free_path(double number_density, double cross_section) {
  require_positive(number_density, "rayleigh: number density");
  require_positive(cross_section, "rayleigh: cross-section");
  return 1.0 / (number_density * cross_section);
}

double decoherence_rate_from_path(double mean_free_path, double c) {
  require_positive(mean_free_path, "decoherence rate: mean free path");
  require_positive(c, "decoherence rate: c");
  return c / mean_free_path;
}

void PlatformModel::validate() const {
  require_positive(gamma, "platform: gamma");
  require_positive(coherence_time, "platform: coherence time");
  if (std::abs(coherence_time * gamma - 1.0) > 1e-12) {
    throw std::invalid_argument("platform: coherence_time != 1/gamma");
  }
}

PlatformModel platform_preset(const std::string& name, double c) {
  PlatformModel m;
  m.name = name;

  if (name == "metasurface" || name == "metasurface-formula") {
    const double n_density = 2.5e25;   // air molecules per m^3
    const double sigma_r = 5.1e-31;    // Rayleigh cross-section at 1550 nm, m^2
    const double lr_formula = rayleigh_mean_free_path(n_density, sigma_r);
    const double lr = (name == "metasurface") ? 7.8e3 : lr_formula;
    m.gamma = decoherence_rate_from_path(lr, c);
    m.source_params = {
        {"n_density_m^-3", n_density},
        {"sigma_r_m^2", sigma_r},
        {"mean_free_path_m", lr},
        {"mean_free_path_formula_m", lr_formula},
        {"thickness_m", 790e-9},
        {"in_medium_speed_m_s", 8e7},
        {"interaction_time_s", interaction_time(790e-9, 8e7)},
        {"c_m_s", c},
    };
    m.annotation =
        "quoted discord lifetime 29.6 us; ln(3)/gamma gives 28.56 us";
  } else if (name == "sfwm") {
    m.gamma = 1.0 / 40e-9;  // spin-wave lifetime 40 ns
    m.source_params = {{"spin_wave_lifetime_s", 40e-9}};
    m.annotation = "rate components sum to 16 MHz, commonly rounded to 20 MHz";
  } else if (name == "sfwm-components") {
    const std::vector<double> parts{10e6, 5e6, 1e6};  // motion, magnetic, collisions
    m.gamma = sfwm_rate(parts);
    m.source_params = {{"gamma_motion_s^-1", parts[0]},
                       {"gamma_magnetic_s^-1", parts[1]},
                       {"gamma_collisions_s^-1", parts[2]}};
    m.annotation = "component sum; quoted rounded value is 20 MHz";
  } else if (name == "sfwm-20mhz") {
    m.gamma = 20e6;
    m.source_params = {{"gamma_total_s^-1", 20e6}};
    m.annotation = "rounded total rate; components sum to 16 MHz";
  } else if (name == "spdc") {
    m.gamma = 1.0 / 300e-12;  // pair coherence 300 ps
    const double lambda = 1550e-9, dlambda = 5e-9;
    m.source_params = {
        {"lambda_m", lambda},
        {"delta_lambda_m", dlambda},
        {"transform_limited_tc_s", spdc_coherence_time(lambda, dlambda, c)},
        {"c_m_s", c},
    };
    m.annotation =
        "transform-limited formula gives 7.047e-13 s, often quoted as 220 fs; "
        "filtered experiments reach 285 ps";
  } else {
    throw std::invalid_argument("unknown platform preset '" + name + "'");
  }

  m.coherence_time = 1.0 / m.gamma;
  m.validate();
  return m;
}

std::vector<PlatformModel> default_platforms(double c) {
  return {platform_preset("metasurface", c), platform_preset("sfwm", c),
          platform_preset("spdc", c)};
}

std::vector<std::string> preset_names() {
  return {"metasurface", "metasurface-formula", "sfwm", "sfwm-components",
          "sfwm-20mhz", "spdc"};
}

std::map<std::string, std::string> load_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);

  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": empty key");
    }
    kv[key] = value;
  }
  return kv;
}

PlatformModel platform_from_config(const std::string& fallback_name,
                                   const std::map<std::string, std::string>& kv,
                                   double c) {
  PlatformModel m;
  m.name = fallback_name;
  if (auto it = kv.find("name"); it != kv.end()) m.name = it->second;
  if (auto it = kv.find("annotation"); it != kv.end()) m.annotation = it->second;

  auto num = [&kv](const char* key) -> std::optional<double> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return parse_double(it->second, key);
  };

  if (auto gamma = num("gamma")) {
    m.gamma = require_positive(*gamma, "config: gamma");
  } else if (auto lr = num("lr")) {
    m.gamma = decoherence_rate_from_path(*lr, c);
    m.source_params["mean_free_path_m"] = *lr;
  } else if (num("n") && num("sigma_r")) {
    const double lr_value = rayleigh_mean_free_path(*num("n"), *num("sigma_r"));
    m.gamma = decoherence_rate_from_path(lr_value, c);
    m.source_params = {{"n_density_m^-3", *num("n")},
                       {"sigma_r_m^2", *num("sigma_r")},
                       {"mean_free_path_m", lr_value}};
  } else if (auto it = kv.find("components"); it != kv.end()) {
    std::vector<double> parts;
    std::stringstream ss(it->second);
    std::string token;
    while (std::getline(ss, token, ',')) {
      parts.push_back(parse_double(trim(token), "components"));
    }
    m.gamma = sfwm_rate(parts);
  } else if (num("lambda") && num("delta_lambda")) {
    m.gamma = 1.0 / spdc_coherence_time(*num("lambda"), *num("delta_lambda"), c);
    m.source_params = {{"lambda_m", *num("lambda")},
                       {"delta_lambda_m", *num("delta_lambda")}};
  } else {
    throw std::invalid_argument(
        "platform config needs one of: gamma, lr, n+sigma_r, components, "
        "lambda+delta_lambda");
  }

  m.source_params["c_m_s"] = c;
  m.coherence_time = 1.0 / m.gamma;
  m.validate();
  return m;
}

}  // namespace msqc
