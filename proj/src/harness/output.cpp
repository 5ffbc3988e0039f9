#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gkdv/ground_state.hpp"
#include "gkdv/harness.hpp"

namespace gkdv {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

nlohmann::json real_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_series_csv(const std::filesystem::path& path, const InvariantSeries& s) {
  auto out = open_for_write(path);
  out << "time,mass,energy,hs_norm,grad_l2";
  for (const auto& track : s.modified_energy) out << ",e1_N" << format_real(track.params.N);
  out << "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << format_real(s.times[i]) << "," << format_real(s.mass[i]) << "," << format_real(s.energy[i]) << ","
        << format_real(s.hs_norm[i]) << "," << format_real(s.grad_l2[i]);
    for (const auto& track : s.modified_energy) out << "," << format_real(track.values[i]);
    out << "\n";
  }
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep) {
  auto out = open_for_write(path);
  out << "N,sup_increment,final_e1,resolved_flag\n";
  for (const auto& p : sweep.points) {
    out << format_real(p.N) << "," << format_real(p.sup_increment) << "," << format_real(p.final_e1) << ","
        << (p.resolved ? 1 : 0) << "\n";
  }
}

std::string threshold_csv(const ThresholdReport& r) {
  std::ostringstream out;
  out << "k,s_k,mass,energy,lhs1,rhs1,lhs2,rhs2,gr1_holds,gr2_holds,energy_nonneg,classification\n";
  out << r.k << "," << format_real(r.s_k) << "," << format_real(r.mass) << "," << format_real(r.energy) << ","
      << format_real(r.lhs1) << "," << format_real(r.rhs1) << "," << format_real(r.lhs2) << "," << format_real(r.rhs2)
      << "," << r.gr1_holds << "," << r.gr2_holds << "," << r.energy_nonneg << "," << to_string(r.classification)
      << "\n";
  return out.str();
}

std::string exponents_csv(const ExponentTable& t) {
  std::ostringstream out;
  out << "k,s_k,alpha_k,beta_k,p_k,q_k,gwp_threshold,s,gamma_k,growth_exponent\n";
  out << t.k << "," << format_real(t.s_k) << "," << format_real(t.alpha_k) << "," << format_real(t.beta_k) << ","
      << format_real(t.p_k) << "," << format_real(t.q_k) << "," << format_real(t.gwp_threshold) << ","
      << optional_real(t.s) << "," << optional_real(t.gamma_k) << "," << optional_real(t.growth_exponent) << "\n";
  return out.str();
}

std::string groundstate_csv_header() {
  return "k,mass,grad_sq,lkp2,energy,pohozhaev1_residual,pohozhaev2_residual,kopt_via_psi,kopt_via_Q\n";
}

std::string groundstate_csv_row(int k) {
  const auto profile = ground_state_profile(k, reference_grid(k));
  const auto identities = pohozhaev_report(profile);
  std::ostringstream out;
  out << k << "," << format_real(profile.mass) << "," << format_real(profile.grad_sq) << ","
      << format_real(profile.lkp2) << "," << format_real(profile.energy) << ","
      << format_real(identities.lkp2_identity) << "," << format_real(identities.gradient_identity) << ","
      << format_real(sharp_gn_constant(k, GnMethod::via_psi)) << "," << format_real(sharp_gn_constant(k, GnMethod::via_Q))
      << "\n";
  return out.str();
}

std::string report_json(const RunReport& r) {
  nlohmann::json j;
  j["scenario"] = r.scenario;
  j["config"] = r.config;
  j["started"] = r.started;
  j["finished"] = r.finished;
  j["files"] = r.files;
  j["under_resolved"] = r.under_resolved;
  j["passed"] = r.passed();
  if (r.error) j["error"] = *r.error;
  if (r.sweep_slope) j["sweep_slope"] = real_or_null(*r.sweep_slope);
  if (r.threshold) {
    const auto& t = *r.threshold;
    j["threshold"] = {{"k", t.k},
                      {"s_k", t.s_k},
                      {"mass", t.mass},
                      {"energy", t.energy},
                      {"lhs1", t.lhs1},
                      {"rhs1", t.rhs1},
                      {"lhs2", t.lhs2},
                      {"rhs2", t.rhs2},
                      {"gr1_holds", t.gr1_holds},
                      {"gr2_holds", t.gr2_holds},
                      {"energy_nonneg", t.energy_nonneg},
                      {"classification", to_string(t.classification)}};
  }
  j["assertions"] = nlohmann::json::array();
  for (const auto& a : r.assertions) {
    j["assertions"].push_back({{"name", a.name}, {"invariant", a.invariant}, {"passed", a.passed}, {"detail", a.detail}});
  }
  return j.dump(2);
}

void write_report(const std::filesystem::path& path, const RunReport& report) {
  auto out = open_for_write(path);
  out << report_json(report) << "\n";
}

}  // namespace gkdv
