#include "msqc/power_map.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace msqc {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_field(const std::string& text, const std::string& origin,
                   int lineno, const char* column) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                             ": cannot parse column '" + column + "'");
  }
  if (used != text.size()) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                             ": trailing characters in column '" + column + "'");
  }
  if (!std::isfinite(value)) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                             ": non-finite value in column '" + column + "'");
  }
  return value;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

}  // namespace

double PowerMap::total_power() const {
  double total = 0.0;
  for (const auto& s : samples) total += s.p;
  return total;
}

PowerMap parse_power_map_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  PowerMap map;
  std::string line;
  int lineno = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped[0] == '#') {
      // Fixture metadata round-trips through comments; anything else in a
      // comment is inert.
      const auto eq = stripped.find("seed=");
      if (eq != std::string::npos) {
        try {
          map.seed = std::stoull(stripped.substr(eq + 5));
        } catch (const std::exception&) {
        }
      }
      continue;
    }
    if (!header_seen) {
      std::string squashed;
      for (char ch : stripped) {
        if (!std::isspace(static_cast<unsigned char>(ch))) squashed += ch;
      }
      if (squashed != "x,y,p") {
        throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                 ": expected header 'x,y,p'");
      }
      header_seen = true;
      continue;
    }

    std::array<std::string, 3> fields;
    std::stringstream ss(stripped);
    std::string token;
    int n = 0;
    while (std::getline(ss, token, ',')) {
      if (n >= 3) { ++n; break; }
      fields[n++] = trim(token);
    }
    if (n != 3) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": expected 3 comma-separated fields");
    }

    PowerSample s;
    s.x = parse_field(fields[0], origin, lineno, "x");
    s.y = parse_field(fields[1], origin, lineno, "y");
    s.p = parse_field(fields[2], origin, lineno, "p");
    if (s.p < 0.0) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": negative power " + fields[2]);
    }
    map.samples.push_back(s);
    map.extent_x = std::max(map.extent_x, std::abs(s.x));
    map.extent_y = std::max(map.extent_y, std::abs(s.y));
  }

  if (!header_seen) throw std::runtime_error(origin + ": missing 'x,y,p' header");
  if (map.samples.empty()) throw std::runtime_error(origin + ": empty power map");
  return map;
}

PowerMap load_power_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open power map: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_power_map_csv(buffer.str(), path);
}

void write_power_map_csv(const PowerMap& map, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write power map: " + path);
  out << "# power map: " << map.samples.size() << " samples, extent "
      << format_sci(map.extent_x) << " x " << format_sci(map.extent_y) << " m\n";
  if (map.seed) out << "# seed=" << *map.seed << "\n";
  out << "x,y,p\n";
  for (const auto& s : map.samples) {
    out << format_sci(s.x) << ',' << format_sci(s.y) << ',' << format_sci(s.p)
        << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

PowerMap synthetic_gaussian_map(const SyntheticMapSpec& spec) {
  if (spec.grid < 2) throw std::domain_error("synthetic map: grid too small");
  if (!(spec.extent > 0.0) || !(spec.width > 0.0)) {
    throw std::domain_error("synthetic map: extent and width must be positive");
  }
  if (spec.amplitude < 0.0 || spec.offset < 0.0 || spec.noise < 0.0) {
    throw std::domain_error("synthetic map: negative amplitude/offset/noise");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);

  PowerMap map;
  map.seed = spec.seed;
  map.samples.reserve(static_cast<std::size_t>(spec.grid) * spec.grid);
  for (int iy = 0; iy < spec.grid; ++iy) {
    for (int ix = 0; ix < spec.grid; ++ix) {
      PowerSample s;
      s.x = -spec.extent + 2.0 * spec.extent * ix / (spec.grid - 1);
      s.y = -spec.extent + 2.0 * spec.extent * iy / (spec.grid - 1);
      const double dx = s.x - spec.center_x;
      const double dy = s.y - spec.center_y;
      const double r2 = dx * dx + dy * dy;
      s.p = spec.amplitude * std::exp(-r2 / (2.0 * spec.width * spec.width)) +
            spec.offset;
      if (spec.noise > 0.0) {
        s.p = std::max(0.0, s.p * (1.0 + spec.noise * jitter(rng)));
      }
      map.samples.push_back(s);
      map.extent_x = std::max(map.extent_x, std::abs(s.x));
      map.extent_y = std::max(map.extent_y, std::abs(s.y));
    }
  }
  return map;
}

std::pair<double, double> centroid(const PowerMap& map) {
  const double total = map.total_power();
  if (!(total > 0.0)) {
    throw std::domain_error("centroid: total power is zero");
  }
  double cx = 0.0, cy = 0.0;
  for (const auto& s : map.samples) {
    cx += s.p * s.x;
    cy += s.p * s.y;
  }
  return {cx / total, cy / total};
}

}  // namespace msqc
