#pragma once

#include <map>
#include <string>
#include <vector>

#include "msqc/constants.hpp"

namespace msqc {

/// Transform-limited Gaussian-pulse coherence time of a down-conversion
/// pair source: T_c = 0.44 lambda^2 / (c dlambda). Inputs in meters.
/// Throws std::domain_error on nonpositive inputs.
double spdc_coherence_time(double lambda, double delta_lambda,
                           double c = kSpeedOfLight);

/// Total spin-wave dephasing rate of a four-wave-mixing source: the sum of
/// its components (motion, magnetic gradients, collisions, ...), 1/s.
/// Requires at least one strictly positive component, none negative.
double sfwm_rate(const std::vector<double>& components);

/// Photon transit time through a structure of thickness L at speed v.
double interaction_time(double thickness, double speed);

/// Rayleigh-scattering mean free path L_R = 1 / (N sigma_R).
double rayleigh_mean_free_path(double number_density, double cross_section);

/// Scattering-limited decoherence rate gamma = c / L_R; coherence time 1/gamma.
double decoherence_rate_from_path(double mean_free_path,
                                  double c = kSpeedOfLight);

/// Named rate/coherence parameter set for one Bell-state source.
/// `source_params` keeps every physical input (SI units) the rate was
/// derived from; `annotation` carries commonly quoted literature figures
/// when they differ from the formula arithmetic.
struct PlatformModel {
  std::string name;
  double gamma = 0.0;           ///< decoherence rate, 1/s
  double coherence_time = 0.0;  ///< 1/gamma, s
  std::map<std::string, double> source_params;
  std::string annotation;

  void validate() const;
};

/// Builds one of the named presets. Known names:
///   metasurface          Rayleigh-limited, L_R = 7.8 km override
///   metasurface-formula  L_R = 1/(N sigma_R) from the tabulated inputs
///   sfwm                 gamma = 1/40 ns
///   sfwm-components      gamma = 10 + 5 + 1 MHz
///   sfwm-20mhz           gamma = 20 MHz
///   spdc                 gamma = 1/300 ps
/// `c` selects the speed-of-light convention for the Rayleigh/SPDC numbers.
/// Throws std::invalid_argument for unknown names.
PlatformModel platform_preset(const std::string& name, double c = kSpeedOfLight);

/// The default comparison set {metasurface, sfwm, spdc}.
std::vector<PlatformModel> default_platforms(double c = kSpeedOfLight);

/// All preset names accepted by platform_preset.
std::vector<std::string> preset_names();

/// Key = value text (one pair per line, '#' comments). Used for preset
/// override files and CLI --config.
std::map<std::string, std::string> load_key_value_file(const std::string& path);

/// Builds a PlatformModel from a key/value map. Recognized keys, most
/// specific wins: gamma | lr | n + sigma_r | components (comma list) |
/// lambda + delta_lambda. Optional: name, annotation.
PlatformModel platform_from_config(const std::string& fallback_name,
                                   const std::map<std::string, std::string>& kv,
                                   double c = kSpeedOfLight);

}  // namespace msqc
