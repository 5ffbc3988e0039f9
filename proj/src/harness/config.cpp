#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gkdv/harness.hpp"
#include "gkdv/initial_data.hpp"

namespace gkdv {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw std::invalid_argument(key + ": expected a number, got '" + value + "'");
  return v;
}

long to_integer(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw std::invalid_argument(key + ": expected an integer, got '" + value + "'");
  return v;
}

const std::vector<std::string> kInitialKinds = {"gaussian", "sech", "soliton", "scaled_ground_state", "from_file", "random"};

std::string checked_kind(const std::string& value) {
  if (std::find(kInitialKinds.begin(), kInitialKinds.end(), value) == kInitialKinds.end()) {
    throw std::invalid_argument("unknown initial-data kind '" + value + "'");
  }
  return value;
}

void set_initial_value(InitialSpec& spec, const std::string& key, const std::string& value) {
  if (key == "kind") spec.kind = checked_kind(value);
  else if (key == "amplitude") spec.amplitude = to_real(key, value);
  else if (key == "width") spec.width = to_real(key, value);
  else if (key == "center") spec.center = to_real(key, value);
  else if (key == "c") spec.c = to_real(key, value);
  else if (key == "scale") spec.scale = to_real(key, value);
  else if (key == "file") spec.file = value;
  else if (key == "max_mode") spec.max_mode = static_cast<int>(to_integer(key, value));
  else if (key == "decay") spec.decay = to_real(key, value);
  else throw std::invalid_argument("unknown initial-data key '" + key + "'");
}

}  // namespace

InitialSpec parse_initial_spec(const std::string& text) {
  InitialSpec spec;
  const auto colon = text.find(':');
  spec.kind = checked_kind(trim(text.substr(0, colon)));
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("initial spec: expected key=value, got '" + item + "'");
    set_initial_value(spec, trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return spec;
}

void set_config_value(SimConfig& c, const std::string& key, const std::string& value) {
  if (key == "scenario") c.scenario = value;
  else if (key == "k") c.k = static_cast<int>(to_integer(key, value));
  else if (key == "mu") {
    c.mu = static_cast<int>(to_integer(key, value));
    if (c.mu != 1 && c.mu != -1) throw std::invalid_argument("mu must be 1 or -1, got " + value);
  }
  else if (key == "grid.n") c.n = static_cast<int>(to_integer(key, value));
  else if (key == "grid.length") c.length = to_real(key, value);
  else if (key == "dt_override") c.dt_override = to_real(key, value);
  else if (key == "t_final") c.t_final = to_real(key, value);
  else if (key == "record_every") c.record_every = static_cast<int>(to_integer(key, value));
  else if (key == "s_track") c.s_track = to_real(key, value);
  else if (key.starts_with("initial.")) set_initial_value(c.initial, key.substr(8), value);
  else if (key == "imethod.N_list") {
    c.n_list.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) c.n_list.push_back(to_real(key, trim(item)));
  } else if (key == "imethod.s") c.imethod_s = to_real(key, value);
  else if (key == "output.dir") c.output_dir = value;
  else if (key == "seed") c.seed = static_cast<std::uint64_t>(to_integer(key, value));
  else if (key == "workers") c.workers = static_cast<int>(to_integer(key, value));
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

SimConfig parse_config(const std::string& text) {
  SimConfig c;
  std::stringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected 'key = value'");
    }
    try {
      set_config_value(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  return c;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  SimConfig c = parse_config(buf.str());
  // Relative checkpoint paths are taken relative to the config file.
  if (!c.initial.file.empty() && std::filesystem::path(c.initial.file).is_relative()) {
    c.initial.file = (path.parent_path() / c.initial.file).string();
  }
  return c;
}

std::map<std::string, std::string> config_echo(const SimConfig& c) {
  std::map<std::string, std::string> m;
  m["scenario"] = c.scenario;
  m["k"] = std::to_string(c.k);
  m["mu"] = std::to_string(c.mu);
  m["grid.n"] = std::to_string(c.n);
  m["grid.length"] = format_real(c.length);
  if (c.dt_override) m["dt_override"] = format_real(*c.dt_override);
  m["t_final"] = format_real(c.t_final);
  m["record_every"] = std::to_string(c.record_every);
  m["s_track"] = format_real(c.s_track);
  m["initial.kind"] = c.initial.kind;
  m["initial.amplitude"] = format_real(c.initial.amplitude);
  m["initial.width"] = format_real(c.initial.width);
  m["initial.center"] = format_real(c.initial.center);
  m["initial.c"] = format_real(c.initial.c);
  m["initial.scale"] = format_real(c.initial.scale);
  if (!c.initial.file.empty()) m["initial.file"] = c.initial.file;
  m["initial.max_mode"] = std::to_string(c.initial.max_mode);
  m["initial.decay"] = format_real(c.initial.decay);
  if (!c.n_list.empty()) {
    std::string list;
    for (double v : c.n_list) list += (list.empty() ? "" : ",") + format_real(v);
    m["imethod.N_list"] = list;
  }
  if (c.imethod_s) m["imethod.s"] = format_real(*c.imethod_s);
  m["output.dir"] = c.output_dir;
  m["seed"] = std::to_string(c.seed);
  return m;
}

Field build_initial(const SimConfig& c) {
  const InitialSpec& s = c.initial;
  if (s.kind == "from_file") {
    if (s.file.empty()) throw std::invalid_argument("initial.kind = from_file needs initial.file");
    if (!std::filesystem::exists(s.file)) throw std::invalid_argument("initial.file does not exist: " + s.file);
    return read_checkpoint(s.file).field;
  }
  const Grid grid = c.grid();
  if (s.kind == "gaussian") return sample(GaussianProfile{s.amplitude, s.width, s.center}, grid);
  if (s.kind == "sech") return sample(SechProfile{s.amplitude, s.width, s.center}, grid);
  if (s.kind == "soliton") return soliton(c.k, s.c, s.center, grid, 0.0);
  if (s.kind == "scaled_ground_state") {
    const ClosedForm q = GroundStateFamily{c.k, s.amplitude, 1.0, s.center};
    return sample(rescale(q, s.scale, c.k), grid);
  }
  if (s.kind == "random") {
    const int modes = s.max_mode > 0 ? s.max_mode : c.n / 8;
    return random_band_limited(grid, c.seed, modes, s.decay, s.amplitude);
  }
  throw std::invalid_argument("unknown initial.kind '" + s.kind + "'");
}

std::filesystem::path resolve_output_dir(const SimConfig& c) {
  if (const char* env = std::getenv("GKDV_OUT"); env != nullptr && *env != '\0') return env;
  return c.output_dir;
}

}  // namespace gkdv
