#include "wam/cli.hpp"

#include <fstream>
#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "wam/error.hpp"
#include "wam/experiments.hpp"
#include "wam/parallel.hpp"

namespace wam {
namespace {

struct Outputs {
  std::string config_path;
  std::string json_path;
  std::string csv_path;
  std::size_t threads = 0;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

Range parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InvalidArgument("range must look like lo:hi, got " + s);
  try {
    std::size_t used = 0;
    Range r{std::stod(s.substr(0, colon), &used), 0.0};
    r.hi = std::stod(s.substr(colon + 1));
    if (!(r.hi > r.lo)) throw InvalidArgument("range needs lo < hi: " + s);
    return r;
  } catch (const std::logic_error&) {
    throw InvalidArgument("range must look like lo:hi, got " + s);
  }
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v[i]);
    out += (i ? "," : "") + std::string(buf);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open " + path + " for writing");
  f << content;
  if (!f) throw InvalidArgument("failed writing " + path);
}

void add_common(CLI::App* sub, Outputs& o) {
  sub->add_option("--config", o.config_path,
                  "Read options from a key = value file (flags take precedence)");
  sub->add_option("--out-json", o.json_path, "Write the report as JSON");
  sub->add_option("--out-csv", o.csv_path, "Write the checks as CSV");
  sub->add_option("--threads", o.threads, "Worker threads (default: AMALGAM_THREADS or cores)");
}

template <typename T>
void set_if(const CLI::Option* opt, T& field, const T& value) {
  if (opt->count() > 0) field = value;
}

struct Listing {
  const char* name;
  const char* anchor;
  std::string defaults;
};

std::vector<Listing> listings() {
  const ChirpNormConfig chirp;
  const DispersiveConfig disp;
  const FixedTimeConfig fixed;
  const PhiAlphaConfig phi;
  const StrichartzConfig stri;
  const HolderConfig hold;
  const BupuCheckConfig bupu;
  const PotentialConfig pot;
  auto num = [](double v) { return join({v}); };
  return {
      {"chirp-norm", "Eq. chirpnorm",
       "dim=1 a=" + join(chirp.a_values) + " extent=" + num(chirp.extent) +
           " n=" + std::to_string(chirp.points) + " tol=" + num(chirp.tol)},
      {"dispersive", "Eq. dispersive",
       "dim=1 small-t=" + num(disp.small_lo) + ":" + num(disp.small_hi) +
           " large-t=" + num(disp.large_lo) + ":" + num(disp.large_hi) +
           " n-points=" + std::to_string(disp.n_points)},
      {"fixed-time", "Eq. est2",
       "dim=1 r=" + join(fixed.r_values) + " t-range=" + num(fixed.t_lo) + ":" +
           num(fixed.t_hi) + " extent=" + num(fixed.extent) + " n=" +
           std::to_string(fixed.points)},
      {"phi-alpha-tail", "Lemma 4.1",
       "alpha=" + join(phi.alphas) + " x=" + join(phi.x_values) + " n=" +
           std::to_string(phi.points)},
      {"strichartz", "Theorem 1.1, Theorem 1.2",
       "dim=1 q=" + num(stri.pair.q) + " r=" + num(stri.pair.r) + " c=" + join(stri.c_values) +
           " time-scale=" + num(stri.time_scale) + " extent=" + num(stri.extent) +
           " n=" + std::to_string(stri.points)},
      {"holder", "Eq. holder",
       "samples=" + std::to_string(hold.n_samples) + " seed=" + std::to_string(hold.seed) +
           " s=" + num(hold.s) + " q=" + num(hold.q) + " r=" + num(hold.r)},
      {"bupu-check", "Eq. retr",
       "dim=1 extent=" + num(bupu.extent) + " n=" + std::to_string(bupu.points) +
           " spacing=" + num(bupu.spacing) + " p=" + num(bupu.p)},
      {"potential", "Section 6",
       "V=cos(t)exp(-x^2) T=" + num(pot.T) + " dt=" + num(pot.dt) + " q=" + num(pot.pair.q) +
           " r=" + num(pot.pair.r)},
  };
}

std::string option_name(const std::string& token) {
  if (token.rfind("--", 0) != 0) return {};
  return token.substr(2, token.find('=') - 2);
}

// Subcommand config files are not read by CLI11 itself, so the file is
// expanded into --key=value tokens placed before the explicit flags. Keys that
// also appear as flags are dropped, which lets the flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  std::size_t at = args.size();
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      at = i;
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      at = i;
      args.erase(args.begin() + i);
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream probe(path);
  if (!probe) throw InvalidArgument("cannot read config file " + path);

  std::set<std::string> given;
  for (const auto& a : args) given.insert(option_name(a));
  std::vector<std::string> tokens;
  for (const auto& item : CLI::ConfigTOML().from_file(path)) {
    if (!item.parents.empty()) throw InvalidArgument("config sections are not supported: " + item.fullname());
    if (given.count(item.name)) continue;
    std::string joined;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) joined += (i ? "," : "") + item.inputs[i];
    tokens.push_back("--" + item.name + "=" + joined);
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(std::min(at, args.size())), tokens.begin(),
              tokens.end());
  return args;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wiener amalgam norms and dispersive estimates for the free Schrodinger flow",
               "amalgam"};
  app.require_subcommand(1);
  Outputs o;
  std::function<ExperimentReport()> job;

  // chirp-norm
  auto* chirp = app.add_subcommand("chirp-norm", "Numeric chirp norms against the closed form");
  add_common(chirp, o);
  int chirp_dim = 1;
  std::vector<double> chirp_a;
  double chirp_extent = 0.0, chirp_tol = 0.0;
  std::size_t chirp_n = 0;
  chirp->add_option("--dim", chirp_dim)->check(CLI::IsMember({1, 2}));
  auto* chirp_a_opt = chirp->add_option("--a", chirp_a, "Chirp parameters")->delimiter(',');
  auto* chirp_extent_opt = chirp->add_option("--extent", chirp_extent);
  auto* chirp_n_opt = chirp->add_option("--n", chirp_n);
  auto* chirp_tol_opt = chirp->add_option("--tol", chirp_tol);
  chirp->callback([&] {
    job = [&] {
      ChirpNormConfig cfg = chirp_norm_defaults(chirp_dim);
      set_if(chirp_a_opt, cfg.a_values, chirp_a);
      set_if(chirp_extent_opt, cfg.extent, chirp_extent);
      set_if(chirp_n_opt, cfg.points, chirp_n);
      set_if(chirp_tol_opt, cfg.tol, chirp_tol);
      return verify_chirp_norm(cfg);
    };
  });

  // dispersive
  auto* disp = app.add_subcommand("dispersive", "Small- and large-time decay exponents");
  add_common(disp, o);
  int disp_dim = 1;
  std::string small_t, large_t;
  std::size_t disp_points = 0, disp_small_n = 0, disp_large_n = 0;
  double disp_small_extent = 0.0, disp_large_extent = 0.0;
  disp->add_option("--dim", disp_dim)->check(CLI::IsMember({1, 2}));
  auto* small_opt = disp->add_option("--small-t", small_t, "lo:hi");
  auto* large_opt = disp->add_option("--large-t", large_t, "lo:hi");
  auto* disp_points_opt = disp->add_option("--n-points", disp_points);
  auto* small_extent_opt = disp->add_option("--small-extent", disp_small_extent);
  auto* small_n_opt = disp->add_option("--small-n", disp_small_n);
  auto* large_extent_opt = disp->add_option("--large-extent", disp_large_extent);
  auto* large_n_opt = disp->add_option("--large-n", disp_large_n);
  disp->callback([&] {
    job = [&] {
      DispersiveConfig cfg = dispersive_defaults(disp_dim);
      if (small_opt->count()) std::tie(cfg.small_lo, cfg.small_hi) = [&] {
          const Range r = parse_range(small_t);
          return std::pair{r.lo, r.hi};
        }();
      if (large_opt->count()) std::tie(cfg.large_lo, cfg.large_hi) = [&] {
          const Range r = parse_range(large_t);
          return std::pair{r.lo, r.hi};
        }();
      set_if(disp_points_opt, cfg.n_points, disp_points);
      set_if(small_extent_opt, cfg.small_extent, disp_small_extent);
      set_if(small_n_opt, cfg.small_points, disp_small_n);
      set_if(large_extent_opt, cfg.large_extent, disp_large_extent);
      set_if(large_n_opt, cfg.large_points, disp_large_n);
      return dispersive_experiment(cfg);
    };
  });

  // fixed-time
  auto* fixed = app.add_subcommand("fixed-time", "Large-time exponents of W(FL^r', L^r) norms");
  add_common(fixed, o);
  FixedTimeConfig fixed_cfg;
  std::string fixed_range;
  fixed->add_option("--dim", fixed_cfg.dim)->check(CLI::IsMember({1, 2}));
  fixed->add_option("--r", fixed_cfg.r_values, "Exponents r >= 2 (inf allowed)")->delimiter(',');
  auto* fixed_range_opt = fixed->add_option("--t-range", fixed_range, "lo:hi");
  fixed->add_option("--n-points", fixed_cfg.n_points);
  fixed->add_option("--extent", fixed_cfg.extent);
  fixed->add_option("--n", fixed_cfg.points);
  fixed->callback([&] {
    job = [&] {
      FixedTimeConfig cfg = fixed_cfg;
      if (fixed_range_opt->count()) {
        const Range r = parse_range(fixed_range);
        cfg.t_lo = r.lo;
        cfg.t_hi = r.hi;
      }
      return fixed_time_amalgam_experiment(cfg);
    };
  });

  // phi-alpha-tail
  auto* phi = app.add_subcommand("phi-alpha-tail", "Tail decay of the local weak norms of phi_alpha");
  add_common(phi, o);
  PhiAlphaConfig phi_cfg;
  phi->add_option("--alpha", phi_cfg.alphas)->delimiter(',');
  phi->add_option("--x", phi_cfg.x_values)->delimiter(',');
  phi->add_option("--n", phi_cfg.points);
  phi->add_option("--profile-n", phi_cfg.profile_points);
  phi->add_option("--profile-ranges", phi_cfg.profile_ranges)->delimiter(',');
  phi->callback([&] { job = [&] { return phi_alpha_tail_experiment(phi_cfg); }; });

  // strichartz
  auto* stri = app.add_subcommand("strichartz", "Strichartz ratios over a Gaussian family");
  add_common(stri, o);
  int stri_dim = 1;
  bool stri_endpoint = false, stri_exploratory = false;
  double stri_q = 0.0, stri_r = 0.0, stri_T = 0.0, stri_scale = 0.0, stri_div = 0.0,
         stri_step = 0.0, stri_extent = 0.0;
  std::size_t stri_n = 0;
  std::vector<double> stri_c;
  stri->add_option("--dim", stri_dim)->check(CLI::IsMember({1, 2}));
  stri->add_flag("--endpoint", stri_endpoint, "Use the endpoint pair (4, 2d/(d-1))");
  stri->add_flag("--exploratory", stri_exploratory, "Allow 2 <= q < 4; no assertions");
  auto* q_opt = stri->add_option("--q", stri_q);
  auto* r_opt = stri->add_option("--r", stri_r);
  auto* c_opt = stri->add_option("--c", stri_c, "Gaussian widths of the data family")->delimiter(',');
  auto* T_opt = stri->add_option("--T", stri_T, "Truncation [-T, T] for every datum");
  auto* scale_opt = stri->add_option("--time-scale", stri_scale, "T = time-scale * c when --T is unset");
  auto* div_opt = stri->add_option("--dt-divisor", stri_div, "dt <= c / dt-divisor");
  auto* step_opt = stri->add_option("--time-step", stri_step);
  auto* stri_extent_opt = stri->add_option("--extent", stri_extent);
  auto* stri_n_opt = stri->add_option("--n", stri_n);
  stri->callback([&] {
    job = [&] {
      StrichartzConfig cfg = strichartz_defaults(stri_dim, stri_endpoint);
      if (stri_endpoint && stri_dim == 1)
        throw InvalidArgument("the endpoint pair needs dim 2");
      cfg.pair.dim = stri_dim;
      set_if(q_opt, cfg.pair.q, stri_q);
      set_if(r_opt, cfg.pair.r, stri_r);
      cfg.exploratory = stri_exploratory;
      set_if(c_opt, cfg.c_values, stri_c);
      if (T_opt->count()) cfg.T = stri_T;
      set_if(scale_opt, cfg.time_scale, stri_scale);
      set_if(div_opt, cfg.dt_divisor, stri_div);
      set_if(step_opt, cfg.time_step, stri_step);
      set_if(stri_extent_opt, cfg.extent, stri_extent);
      set_if(stri_n_opt, cfg.points, stri_n);
      return strichartz_ratio_experiment(cfg);
    };
  });

  // holder
  auto* hold = app.add_subcommand("holder", "Duality pairing against products of mixed norms");
  add_common(hold, o);
  HolderConfig hold_cfg;
  hold->add_option("--samples", hold_cfg.n_samples);
  hold->add_option("--seed", hold_cfg.seed);
  hold->add_option("--s", hold_cfg.s);
  hold->add_option("--q", hold_cfg.q);
  hold->add_option("--r", hold_cfg.r);
  hold->add_option("--extent", hold_cfg.extent);
  hold->add_option("--n", hold_cfg.points);
  hold->add_option("--time-samples", hold_cfg.time_samples);
  hold->add_option("--dt", hold_cfg.dt);
  hold->add_option("--time-step", hold_cfg.time_step);
  hold->callback([&] { job = [&] { return holder_duality_experiment(hold_cfg); }; });

  // bupu-check
  auto* bupu = app.add_subcommand("bupu-check", "Partition of unity and lattice-norm equivalence");
  add_common(bupu, o);
  int bupu_dim = 1;
  double bupu_extent = 0.0, bupu_spacing = 0.0, bupu_p = 0.0;
  std::size_t bupu_n = 0;
  std::vector<double> bupu_c;
  bupu->add_option("--dim", bupu_dim)->check(CLI::IsMember({1, 2}));
  auto* bupu_extent_opt = bupu->add_option("--extent", bupu_extent);
  auto* bupu_n_opt = bupu->add_option("--n", bupu_n);
  auto* bupu_spacing_opt = bupu->add_option("--spacing", bupu_spacing);
  auto* bupu_c_opt = bupu->add_option("--c", bupu_c)->delimiter(',');
  auto* bupu_p_opt = bupu->add_option("--p", bupu_p);
  bupu->callback([&] {
    job = [&] {
      BupuCheckConfig cfg = bupu_check_defaults(bupu_dim);
      set_if(bupu_extent_opt, cfg.extent, bupu_extent);
      set_if(bupu_n_opt, cfg.points, bupu_n);
      set_if(bupu_spacing_opt, cfg.spacing, bupu_spacing);
      set_if(bupu_c_opt, cfg.c_values, bupu_c);
      set_if(bupu_p_opt, cfg.p, bupu_p);
      return bupu_check_experiment(cfg);
    };
  });

  // potential
  auto* pot = app.add_subcommand("potential", "Split-step solution with V = cos(t) exp(-x^2)");
  add_common(pot, o);
  PotentialConfig pot_cfg;
  pot->add_option("--extent", pot_cfg.extent);
  pot->add_option("--n", pot_cfg.points);
  pot->add_option("--c", pot_cfg.c);
  pot->add_option("--T", pot_cfg.T);
  pot->add_option("--dt", pot_cfg.dt);
  pot->add_option("--q", pot_cfg.pair.q);
  pot->add_option("--r", pot_cfg.pair.r);
  pot->add_option("--alpha", pot_cfg.claimed_alpha, "Claimed time exponent of V");
  pot->add_option("--p", pot_cfg.claimed_p, "Claimed space exponent of V");
  pot->callback([&] { job = [&] { return potential_experiment(pot_cfg); }; });

  auto* list = app.add_subcommand("list", "List experiments with their defaults");
  list->callback([&] {
    for (const auto& l : listings())
      out << l.name << " (" << l.anchor << ")  defaults: " << l.defaults << '\n';
  });

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    args.pop_back();
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? exit_pass : exit_config_error;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_config_error;
  }
  if (!job) return exit_pass;

  try {
    set_worker_count(o.threads);
    const ExperimentReport rep = job();
    const std::string csv = to_csv(rep);
    const std::string json = to_json(rep).dump(2) + "\n";
    if (!o.json_path.empty()) write_file(o.json_path, json);
    if (!o.csv_path.empty()) write_file(o.csv_path, csv);
    out << verdict_lines(rep);
    if (rep.name == "strichartz")
      out << "verdict: " << (rep.pass() ? "bounded" : "not bounded") << '\n';
    else
      out << "verdict: " << (rep.pass() ? "pass" : "fail") << '\n';
    return rep.pass() ? exit_pass : exit_check_failed;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_config_error;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return exit_numerical_error;
  }
}

}  // namespace wam
