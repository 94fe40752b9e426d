#include "beamtrain/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "beamtrain/errors.hpp"

namespace beamtrain {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "N",        "M",         "N_r",           "K",
      "L",        "d_over_lambda", "aod_min",   "aod_max",
      "aoa_min",  "aoa_max",   "snr_grid",      "snr_min",
      "snr_max",  "snr_step",  "mc_iterations", "seed",
      "signal_mode", "normalization_mode", "trn_t_p", "trn_t_m"};
  return keys;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* expected) {
  throw ConfigError(key + ": expected " + expected + ", got '" + value + "'");
}

double parse_real(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out))
    bad_value(key, value, "a finite real number");
  return out;
}

template <typename Int>
Int parse_integer(const std::string& key, const std::string& value) {
  Int out = 0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value, "an integer");
  return out;
}

// Accepts plain radians or [-][coef*]pi[/div], e.g. "pi", "-pi/6", "0.5*pi".
double parse_angle(const std::string& key, const std::string& value) {
  const auto pos = value.find("pi");
  if (pos == std::string::npos) return parse_real(key, value);

  std::string head = value.substr(0, pos);
  double coef = 1.0;
  if (head == "-") {
    coef = -1.0;
  } else if (!head.empty() && head != "+") {
    if (head.back() != '*') bad_value(key, value, "an angle such as -pi/6");
    head.pop_back();
    coef = parse_real(key, head);
  }
  std::string tail = value.substr(pos + 2);
  double div = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') bad_value(key, value, "an angle such as -pi/6");
    div = parse_real(key, tail.substr(1));
    if (div == 0.0) bad_value(key, value, "a nonzero divisor");
  }
  return coef * std::numbers::pi / div;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(key, trim(item)));
  if (out.empty()) bad_value(key, value, "a comma-separated list of reals");
  return out;
}

struct SnrSpec {
  std::optional<std::vector<double>> grid;
  double min = 0.0, max = 20.0, step = 5.0;
};

void apply(SimConfig& c, SnrSpec& snr, const std::string& key,
           const std::string& value) {
  if (!known_keys().contains(key)) throw ConfigError("unknown key '" + key + "'");

  if (key == "N") c.streams = parse_integer<int>(key, value);
  else if (key == "M") c.subarray_size = parse_integer<int>(key, value);
  else if (key == "N_r") c.rx_antennas = parse_integer<int>(key, value);
  else if (key == "K") c.rx_chains = parse_integer<int>(key, value);
  else if (key == "L") c.paths = parse_integer<int>(key, value);
  else if (key == "d_over_lambda") c.d_over_lambda = parse_real(key, value);
  else if (key == "aod_min") c.aod_range.lo = parse_angle(key, value);
  else if (key == "aod_max") c.aod_range.hi = parse_angle(key, value);
  else if (key == "aoa_min") c.aoa_range.lo = parse_angle(key, value);
  else if (key == "aoa_max") c.aoa_range.hi = parse_angle(key, value);
  else if (key == "snr_grid") snr.grid = parse_list(key, value);
  else if (key == "snr_min") { snr.min = parse_real(key, value); snr.grid.reset(); }
  else if (key == "snr_max") { snr.max = parse_real(key, value); snr.grid.reset(); }
  else if (key == "snr_step") { snr.step = parse_real(key, value); snr.grid.reset(); }
  else if (key == "mc_iterations") c.mc_iterations = parse_integer<int>(key, value);
  else if (key == "seed") c.master_seed = parse_integer<std::uint64_t>(key, value);
  else if (key == "signal_mode") c.signal_mode = parse_signal_mode(value);
  else if (key == "normalization_mode") c.normalization_mode = parse_normalization(value);
  else if (key == "trn_t_p") c.trn_t_p = parse_integer<int>(key, value);
  else if (key == "trn_t_m") c.trn_t_m = parse_integer<int>(key, value);
}

}  // namespace

std::vector<double> snr_grid(double min_db, double max_db, double step_db) {
  if (!(step_db > 0.0)) throw ConfigError("snr_step: must be > 0");
  if (min_db > max_db) throw ConfigError("snr_min: exceeds snr_max");
  const auto count =
      static_cast<long>(std::floor((max_db - min_db) / step_db + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) grid.push_back(min_db + static_cast<double>(i) * step_db);
  return grid;
}

void validate(const SimConfig& c) {
  auto require = [](bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
  };
  require(c.streams >= 1, "N: must be >= 1");
  require(c.subarray_size >= 1, "M: must be >= 1");
  require(c.streams <= c.subarray_size,
          "N: orthogonal constant-modulus codebook needs N <= M");
  require(c.rx_antennas >= 1, "N_r: must be >= 1");
  require(c.rx_chains >= 1, "K: must be >= 1");
  require(c.rx_antennas % c.rx_chains == 0,
          "K: " + std::to_string(c.rx_chains) + " does not divide N_r = " +
              std::to_string(c.rx_antennas));
  require(c.paths >= 1, "L: must be >= 1");
  require(c.d_over_lambda > 0.0, "d_over_lambda: must be > 0");
  require(c.aod_range.lo <= c.aod_range.hi, "aod_min: exceeds aod_max");
  require(c.aoa_range.lo <= c.aoa_range.hi, "aoa_min: exceeds aoa_max");
  require(!c.snr_grid_db.empty(), "snr_grid: must not be empty");
  for (double s : c.snr_grid_db) require(std::isfinite(s), "snr_grid: non-finite value");
  for (std::size_t i = 1; i < c.snr_grid_db.size(); ++i)
    require(c.snr_grid_db[i] > c.snr_grid_db[i - 1],
            "snr_grid: values must be strictly increasing");
  require(c.mc_iterations >= 1, "mc_iterations: must be >= 1");
  require(c.trn_t_p >= 0, "trn_t_p: must be >= 0");
  require(c.trn_t_m >= 1, "trn_t_m: must be >= 1");
}

SimConfig parse_config(const std::string& text, const ConfigOverrides& overrides,
                       const std::string& source) {
  SimConfig config;
  SnrSpec snr;

  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(source + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (!seen.insert(key).second)
      throw ConfigError(source + ":" + std::to_string(line_no) + ": " + key +
                        ": duplicate key");
    try {
      apply(config, snr, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (seen.contains("snr_grid") &&
      (seen.contains("snr_min") || seen.contains("snr_max") || seen.contains("snr_step")))
    throw ConfigError(source + ": snr_grid: conflicts with snr_min/snr_max/snr_step");

  for (const auto& [key, value] : overrides) apply(config, snr, key, value);

  config.snr_grid_db = snr.grid ? *snr.grid : snr_grid(snr.min, snr.max, snr.step);
  validate(config);
  return config;
}

SimConfig load_config(const std::optional<std::string>& path,
                      const ConfigOverrides& overrides) {
  if (!path) return parse_config("", overrides, "<defaults>");
  std::ifstream file(*path);
  if (!file) throw IoError("cannot open config file '" + *path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), overrides, *path);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string to_text(const SimConfig& c) {
  std::ostringstream out;
  out << "N = " << c.streams << "\n"
      << "M = " << c.subarray_size << "\n"
      << "N_r = " << c.rx_antennas << "\n"
      << "K = " << c.rx_chains << "\n"
      << "L = " << c.paths << "\n"
      << "d_over_lambda = " << format_double(c.d_over_lambda) << "\n"
      << "aod_min = " << format_double(c.aod_range.lo) << "\n"
      << "aod_max = " << format_double(c.aod_range.hi) << "\n"
      << "aoa_min = " << format_double(c.aoa_range.lo) << "\n"
      << "aoa_max = " << format_double(c.aoa_range.hi) << "\n"
      << "snr_grid = ";
  for (std::size_t i = 0; i < c.snr_grid_db.size(); ++i)
    out << (i ? ", " : "") << format_double(c.snr_grid_db[i]);
  out << "\n"
      << "mc_iterations = " << c.mc_iterations << "\n"
      << "seed = " << c.master_seed << "\n"
      << "signal_mode = " << to_string(c.signal_mode) << "\n"
      << "normalization_mode = " << to_string(c.normalization_mode) << "\n"
      << "trn_t_p = " << c.trn_t_p << "\n"
      << "trn_t_m = " << c.trn_t_m << "\n";
  return out.str();
}

std::string fingerprint(const SimConfig& config) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_text(config)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace beamtrain
