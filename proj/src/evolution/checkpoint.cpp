#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkdv/evolution.hpp"

namespace gkdv {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_checkpoint(const std::string& path, const SimState& st) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path);
  const Grid& g = st.field.grid();
  out << "# gkdv spectral checkpoint\n";
  out << "# n=" << g.n() << "\n";
  out << "# length=" << format_double(g.length()) << "\n";
  out << "# t=" << format_double(st.t) << "\n";
  out << "# k=" << st.params.k << "\n";
  out << "# mu=" << st.params.mu << "\n";
  out << "# dt=" << format_double(st.dt) << "\n";
  out << "# step_count=" << st.step_count << "\n";
  out << "# ordering=transform (j = 0..n-1, j >= n/2 negative), forward unnormalized\n";
  for (const auto& c : st.field.coefficients()) out << format_double(c.real()) << "," << format_double(c.imag()) << "\n";
}

SimState read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  int n = 0;
  double length = 0.0;
  double t = 0.0;
  double dt = 0.0;
  long step_count = 0;
  ModelParams params{};
  std::vector<cplx> coefficients;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      const std::string value = line.substr(eq + 1);
      if (key == "n") n = std::stoi(value);
      else if (key == "length") length = std::stod(value);
      else if (key == "t") t = std::stod(value);
      else if (key == "k") params.k = std::stoi(value);
      else if (key == "mu") params.mu = std::stoi(value);
      else if (key == "dt") dt = std::stod(value);
      else if (key == "step_count") step_count = std::stol(value);
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("checkpoint " + path + ": malformed line '" + line + "'");
    coefficients.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  if (n == 0 || static_cast<int>(coefficients.size()) != n) {
    throw std::runtime_error("checkpoint " + path + ": expected n coefficients after the header");
  }
  const Grid grid(n, length);
  coefficients.resize(static_cast<std::size_t>(grid.half_size()));
  return SimState{t, Field::from_spectrum(grid, coefficients), params, dt, step_count};
}

}  // namespace gkdv
