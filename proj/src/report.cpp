#include "rfh/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rfh {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // prefer the shortest representation that still round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

const char* to_string(EigenMode mode) {
  switch (mode) {
    case EigenMode::None: return "none";
    case EigenMode::Paper: return "paper";
    case EigenMode::Randomized: return "random";
  }
  return "none";
}

EigenMode eigen_mode_from_string(std::string_view s) {
  if (s == "none") return EigenMode::None;
  if (s == "paper") return EigenMode::Paper;
  if (s == "random" || s == "randomized") return EigenMode::Randomized;
  throw std::invalid_argument("unknown eigen mode: " + std::string(s) +
                              " (expected none|paper|random)");
}

namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_same_v<T, double>)
      out += format_double(xs[i]);
    else
      out += std::to_string(xs[i]);
  }
  return out;
}

void echo_config(std::ostringstream& os, const ExperimentConfig& cfg) {
  os << "# trials=" << cfg.trials << '\n'
     << "# epsilon=" << format_double(cfg.epsilon) << '\n'
     << "# eps_prime=" << format_double(cfg.eps_prime) << '\n'
     << "# C=" << format_double(cfg.C) << '\n'
     << "# orders=" << join(cfg.orders) << '\n'
     << "# y_grid=" << join(cfg.y_grid) << '\n'
     << "# truncation=" << format_double(cfg.truncation) << '\n'
     << "# step=" << format_double(cfg.step) << '\n'
     << "# alpha=" << format_double(cfg.alpha) << '\n'
     << "# master_seed=" << cfg.master_seed << '\n'
     << "# reference_order=" << cfg.reference_order << '\n';
}

nlohmann::json config_json(const ExperimentConfig& cfg) {
  return {{"trials", cfg.trials},
          {"epsilon", cfg.epsilon},
          {"eps_prime", cfg.eps_prime},
          {"C", cfg.C},
          {"orders", cfg.orders},
          {"y_grid", cfg.y_grid},
          {"truncation", cfg.truncation},
          {"step", cfg.step},
          {"alpha", cfg.alpha},
          {"master_seed", cfg.master_seed},
          {"reference_order", cfg.reference_order}};
}

}  // namespace

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "# f=" << report.function_name << '\n'
     << "# eigen=" << to_string(report.eigen_mode) << '\n';
  echo_config(os, report.config);
  os << "n,y,prob_exceed,prob_ci_halfwidth,mean_abs_err,mean_ci_halfwidth\n";
  for (const auto& r : report.rows)
    os << r.n << ',' << format_double(r.y) << ',' << format_double(r.prob_exceed)
       << ',' << format_double(r.prob_ci) << ',' << format_double(r.mean_abs_err)
       << ',' << format_double(r.mean_ci) << '\n';
  return os.str();
}

std::string to_csv(const CauchyReport& report) {
  std::ostringstream os;
  os << "# f=" << report.function_name << '\n'
     << "# truncations=" << join(report.truncations) << '\n';
  echo_config(os, report.config);
  os << "T_lo,T_hi,mean_abs_diff,ci_halfwidth\n";
  for (const auto& r : report.rows)
    os << format_double(r.t_lo) << ',' << format_double(r.t_hi) << ','
       << format_double(r.mean_abs) << ',' << format_double(r.mean_ci) << '\n';
  return os.str();
}

std::string to_csv(const BoundReport& report) {
  std::ostringstream os;
  os << "# f=" << report.function_name << '\n';
  echo_config(os, report.config);
  os << "lemma,f,alpha,a,b,eps_prime,C,bound,epsilon,empirical,ci_halfwidth,pass\n";
  for (const auto& r : report.rows)
    os << r.lemma << ',' << report.function_name << ','
       << format_double(report.alpha) << ',' << format_double(r.a) << ','
       << format_double(r.b) << ',' << format_double(r.eps_prime) << ','
       << format_double(r.C) << ',' << format_double(r.bound) << ','
       << format_double(r.epsilon) << ',' << format_double(r.empirical) << ','
       << format_double(r.ci) << ',' << (r.pass ? "1" : "0") << '\n';
  return os.str();
}

std::string to_json(const ConvergenceReport& report) {
  nlohmann::json j;
  j["f"] = report.function_name;
  j["eigen"] = to_string(report.eigen_mode);
  j["config"] = config_json(report.config);
  j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"n", r.n},
                         {"y", r.y},
                         {"prob_exceed", r.prob_exceed},
                         {"prob_ci_halfwidth", r.prob_ci},
                         {"mean_abs_err", r.mean_abs_err},
                         {"mean_ci_halfwidth", r.mean_ci}});
  return j.dump(2);
}

std::string to_json(const CauchyReport& report) {
  nlohmann::json j;
  j["f"] = report.function_name;
  j["truncations"] = report.truncations;
  j["config"] = config_json(report.config);
  j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"T_lo", r.t_lo},
                         {"T_hi", r.t_hi},
                         {"mean_abs_diff", r.mean_abs},
                         {"ci_halfwidth", r.mean_ci}});
  return j.dump(2);
}

std::string to_json(const BoundReport& report) {
  nlohmann::json j;
  j["f"] = report.function_name;
  j["alpha"] = report.alpha;
  j["config"] = config_json(report.config);
  j["assertions"] = nlohmann::json::array();
  for (const auto& r : report.rows)
    j["assertions"].push_back({{"lemma", r.lemma},
                               {"quantity", r.quantity},
                               {"a", r.a},
                               {"b", r.b},
                               {"epsilon", r.epsilon},
                               {"eps_prime", r.eps_prime},
                               {"C", r.C},
                               {"empirical", r.empirical},
                               {"ci_halfwidth", r.ci},
                               {"bound", r.bound},
                               {"pass", r.pass}});
  return j.dump(2);
}

std::string expansion_csv(const RfhExpansion& exp, std::string_view f_name,
                          std::string_view extra_meta) {
  std::ostringstream os;
  os << "# f=" << f_name << '\n'
     << "# order=" << exp.order << '\n'
     << "# eigen=" << to_string(exp.eigen_mode) << '\n'
     << "# path_seed=" << exp.path_seed << '\n'
     << extra_meta << "n,c_n,A_n,lambda_re,lambda_im\n";
  for (int n = 0; n <= exp.order; ++n) {
    const auto k = static_cast<std::size_t>(n);
    os << n << ',' << format_double(exp.coeffs[k]) << ','
       << format_double(exp.random_coeffs[k]) << ','
       << format_double(exp.eigenvalues[k].real()) << ','
       << format_double(exp.eigenvalues[k].imag()) << '\n';
  }
  return os.str();
}

std::string trace_csv(const RfhExpansion& exp, std::span<const int> orders,
                      std::span<const double> ys) {
  if (exp.eigen_mode == EigenMode::Randomized)
    throw std::invalid_argument(
        "trace_csv: partial sums are complex under random eigenvalues; "
        "use eigen mode none or paper");
  std::ostringstream os;
  os << "# eigen=" << to_string(exp.eigen_mode) << '\n'
     << "# path_seed=" << exp.path_seed << '\n'
     << "n,y,S_n\n";
  for (int n : orders)
    for (double y : ys)
      os << n << ',' << format_double(y) << ','
         << format_double(partial_sum(exp, y, n).real()) << '\n';
  return os.str();
}

std::string coefficients_csv(std::span<const double> coeffs,
                             std::string_view f_name,
                             WeightConvention convention,
                             std::string_view extra_meta) {
  std::ostringstream os;
  os << "# f=" << f_name << '\n'
     << "# convention="
     << (convention == WeightConvention::PaperLiteral ? "paper" : "half")
     << '\n'
     << extra_meta << "n,c_n\n";
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    os << n << ',' << format_double(coeffs[n]) << '\n';
  return os.str();
}

}  // namespace rfh
