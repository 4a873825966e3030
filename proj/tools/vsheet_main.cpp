// vsheet: command-line access to the vortex-sheet front library.
//
// Exit codes: 0 success, 2 invalid arguments, 3 regime refusal, 4 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vsheet/field.hpp"
#include "vsheet/front.hpp"
#include "vsheet/pressure.hpp"
#include "vsheet/symbol.hpp"

namespace {

using json = nlohmann::json;
using vsheet::Complex;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitRegime = 3;
constexpr int kExitIo = 4;

struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  long count = 0;

  [[nodiscard]] double at(long i) const {
    if (count == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

Axis parse_axis(const std::string& text) {
  std::istringstream is(text);
  Axis a;
  char c1 = 0, c2 = 0;
  std::string rest;
  if (!(is >> a.lo >> c1 >> a.hi >> c2 >> a.count) || c1 != ':' || c2 != ':' ||
      (is >> rest)) {
    throw vsheet::DomainError("window axis must look like lo:hi:count, got '" + text + "'");
  }
  if (a.count < 1) throw vsheet::DomainError("window is empty: count must be >= 1");
  return a;
}

std::vector<Axis> parse_window(const std::string& text) {
  std::vector<Axis> axes;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) axes.push_back(parse_axis(item));
  if (axes.size() != 3) {
    throw vsheet::DomainError("window needs three axes gamma,delta,eta");
  }
  return axes;
}

std::string fmt17(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw vsheet::IoError("cannot open " + path + " for writing");
  os << text;
  if (!os) throw vsheet::IoError("failed writing " + path);
}

std::filesystem::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw vsheet::IoError("cannot create output directory " + dir);
  }
  return dir;
}

vsheet::FieldGrid load_field(const std::string& path) {
  if (path.empty()) throw vsheet::DomainError("--in is required");
  return vsheet::read_vfgrid(path);
}

struct Options {
  double v = 0.0;
  double c = 1.0;
  double s = 0.0;
  double eta = 1.0;
  std::vector<double> gammas;
  std::string window;
  std::string in;
  std::string out;
  long kt = 0;
  long kx = 1;
};

vsheet::MediumParams medium(const Options& o) {
  auto p = vsheet::MediumParams::symmetric(o.c, o.v);
  vsheet::require_symmetric(p);
  return p;
}

double single_gamma(const Options& o) {
  if (o.gammas.size() != 1) throw vsheet::DomainError("exactly one --gamma value is required");
  return o.gammas.front();
}

int cmd_classify(const Options& o) {
  const auto rep = vsheet::classify(medium(o));
  std::ostringstream os;
  os << std::setprecision(12);
  os << "mach_class: " << vsheet::to_string(rep.mach_class) << '\n';
  os << "stability_class: " << vsheet::to_string(rep.stability_class) << '\n';
  os << "Y0: " << rep.Y0 << '\n';
  if (rep.Y1) os << "Y1: " << *rep.Y1 << '\n';
  if (rep.Y2) os << "Y2: " << *rep.Y2 << '\n';
  std::cout << os.str();

  if (!o.out.empty()) {
    json j;
    j["v"] = o.v;
    j["c"] = o.c;
    j["mach_class"] = std::string(vsheet::to_string(rep.mach_class));
    j["stability_class"] = std::string(vsheet::to_string(rep.stability_class));
    j["Y0"] = rep.Y0;
    j["Y1"] = rep.Y1 ? json(*rep.Y1) : json(nullptr);
    j["Y2"] = rep.Y2 ? json(*rep.Y2) : json(nullptr);
    write_text(o.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_grid(const Options& o) {
  const auto params = medium(o);
  if (o.window.empty()) throw vsheet::DomainError("--window is required");
  const auto axes = parse_window(o.window);
  for (long i = 0; i < axes[0].count; ++i) {
    if (axes[0].at(i) < 0.0) throw vsheet::DomainError("gamma must be >= 0");
  }

  std::ostringstream os;
  os << std::setprecision(17);
  os << "gamma,delta,eta,re_sigma,im_sigma,abs_sigma,re_mu_plus,im_mu_plus,"
        "re_mu_minus,im_mu_minus\n";
  for (long ig = 0; ig < axes[0].count; ++ig) {
    for (long id = 0; id < axes[1].count; ++id) {
      for (long ie = 0; ie < axes[2].count; ++ie) {
        const vsheet::Frequency f{axes[0].at(ig), axes[1].at(id), axes[2].at(ie)};
        if (!f.in_frequency_set()) {
          throw vsheet::DomainError("window contains the excluded point (0,0,0)");
        }
        const Complex sg = vsheet::sigma(f, params);
        const auto roots = vsheet::mu_pair(f, params);
        os << f.gamma << ',' << f.delta << ',' << f.eta << ',' << sg.real() << ','
           << sg.imag() << ',' << std::abs(sg) << ',' << roots.mu_plus.real() << ','
           << roots.mu_plus.imag() << ',' << roots.mu_minus.real() << ','
           << roots.mu_minus.imag() << '\n';
      }
    }
  }
  write_text(o.out, os.str());
  return kExitOk;
}

int cmd_roots(const Options& o) {
  const auto params = medium(o);
  const auto roots = vsheet::symbol_roots(params, o.eta);
  std::ostringstream os;
  os << std::setprecision(17) << "re_tau,im_tau,abs_sigma\n";
  for (Complex t : roots) {
    const double s = std::abs(vsheet::sigma({t.real(), t.imag(), o.eta}, params));
    os << t.real() << ',' << t.imag() << ',' << s << '\n';
  }
  write_text(o.out, os.str());
  return kExitOk;
}

int cmd_solve(const Options& o) {
  const auto params = medium(o);
  const double gamma = single_gamma(o);
  vsheet::require_solvable(params, gamma);
  if (o.out.empty()) throw vsheet::DomainError("--out directory is required");
  const auto field = load_field(o.in);
  field.check();

  const vsheet::TransformedField transformed(field, gamma);
  const auto sol = vsheet::solve_front(transformed, params, {o.s, o.s + 1.0});
  const auto forcing = vsheet::forcing_norm_sq(transformed, o.s);

  std::ostringstream csv;
  csv << std::setprecision(17) << "t,x1,f\n";
  const auto& g = sol.grid;
  for (std::size_t it = 0; it < g.n_t; ++it) {
    for (std::size_t ix = 0; ix < g.n_x1; ++ix) {
      csv << g.dt() * static_cast<double>(it) << ',' << g.dx1() * static_cast<double>(ix)
          << ',' << sol.f_phys[it * g.n_x1 + ix] << '\n';
    }
  }

  json norms = json::object();
  for (const auto& [s, value] : sol.norms) norms[fmt17(s)] = value;
  const double f_sq = sol.norms.at(o.s + 1.0) * sol.norms.at(o.s + 1.0);
  const double total = forcing.plus_sq + forcing.minus_sq;
  json j;
  j["gamma"] = gamma;
  j["s"] = o.s;
  j["norms"] = norms;
  j["forcing_plus_sq"] = forcing.plus_sq;
  j["forcing_minus_sq"] = forcing.minus_sq;
  j["r"] = total > 0.0 ? gamma * gamma * gamma * f_sq / total : 0.0;
  j["imag_residual"] = sol.imag_residual;

  const auto dir = prepare_dir(o.out);
  write_text((dir / "front.csv").string(), csv.str());
  write_text((dir / "norms.json").string(), j.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto params = medium(o);
  std::vector<double> gammas = o.gammas;
  if (gammas.empty()) gammas = {1, 2, 4, 8, 16, 32, 64};
  for (double g : gammas) vsheet::require_solvable(params, g);
  const auto field = load_field(o.in);
  const auto table = vsheet::verify_estimate(field, params, gammas, o.s);

  std::ostringstream os;
  os << std::setprecision(17);
  os << "gamma,r,r_prime,g1_ratio,g2_ratio,pointwise_margin,pointwise_ok\n";
  for (const auto& row : table.rows) {
    os << row.gamma << ',' << row.r << ',' << row.r_prime << ',' << row.g1_ratio << ','
       << row.g2_ratio << ',' << row.pointwise_margin << ',' << (row.pointwise_ok ? 1 : 0)
       << '\n';
  }
  write_text(o.out, os.str());
  std::cerr << std::setprecision(12) << "C_ell=" << table.constants.C_ell
            << " C_H=" << table.constants.C_H << " C=" << table.constants.C
            << " sigma_max=" << table.constants.sigma_max << '\n';
  return kExitOk;
}

int cmd_probe(const Options& o) {
  const auto params = medium(o);
  const auto table = vsheet::blowup_probe(params, o.eta, o.gammas);
  std::ostringstream os;
  os << std::setprecision(17) << "gamma,distance,abs_inv_sigma\n";
  for (const auto& row : table.rows) {
    os << row.gamma << ',' << row.distance << ',' << row.abs_inv_sigma << '\n';
  }
  write_text(o.out, os.str());
  std::cerr << std::setprecision(12) << "root=" << table.root
            << " exponent=" << table.exponent << '\n';
  return kExitOk;
}

int cmd_reconstruct(const Options& o) {
  const auto params = medium(o);
  const double gamma = single_gamma(o);
  vsheet::require_solvable(params, gamma);
  const auto field = load_field(o.in);
  field.check();
  const auto& g = field.grid();
  if (o.kt < 0 || o.kx < 0 || static_cast<std::size_t>(o.kt) >= g.n_t ||
      static_cast<std::size_t>(o.kx) >= g.n_x1) {
    throw vsheet::DomainError("--kt/--kx outside the frequency grid");
  }
  const auto kt = static_cast<std::size_t>(o.kt);
  const auto kx = static_cast<std::size_t>(o.kx);
  const vsheet::TransformedField transformed(field, gamma);
  const auto freq = transformed.frequency(kt, kx);
  const auto fp = transformed.plus(kt, kx);
  const auto fm = transformed.minus(kt, kx);
  const auto bin = vsheet::solve_bin(fp, fm, transformed.h(), freq, params);
  const auto state = vsheet::solve_boundary_system(freq, params, bin.f_hat,
                                                   bin.m.I_plus, bin.m.I_minus);
  const auto profile = vsheet::reconstruct(freq, params, state, fp, fm, transformed.h());
  if (profile.growth_warning) {
    std::cerr << "warning: boundary data violate the decay condition; growing mode kept\n";
  }

  std::ostringstream os;
  os << std::setprecision(17) << "x2,re_p_plus,im_p_plus,re_p_minus,im_p_minus\n";
  for (std::size_t k = 0; k < profile.x2_nodes.size(); ++k) {
    os << profile.x2_nodes[k] << ',' << profile.p_plus[k].real() << ','
       << profile.p_plus[k].imag() << ',' << profile.p_minus[k].real() << ','
       << profile.p_minus[k].imag() << '\n';
  }
  write_text(o.out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vortex-sheet front symbol analysis and spectral solver"};
  app.require_subcommand(1);
  Options o;

  auto add_medium = [&o](CLI::App* sub) {
    sub->add_option("--v", o.v, "Half tangential velocity jump")->required();
    sub->add_option("--c", o.c, "Sound speed")->capture_default_str();
  };
  auto add_gamma = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--gamma", o.gammas, "Weight gamma (comma-separated list)")
                    ->delimiter(',');
    if (required) opt->required();
  };

  auto* classify = app.add_subcommand("classify", "Mach and stability regime");
  add_medium(classify);
  classify->add_option("--out", o.out, "Write a JSON report to this path");

  auto* grid = app.add_subcommand("grid", "Sample Sigma and mu+- on a frequency window");
  add_medium(grid);
  grid->add_option("--window", o.window, "g0:g1:ng,d0:d1:nd,e0:e1:ne")->required();
  grid->add_option("--out", o.out, "CSV output path (default stdout)");

  auto* roots = app.add_subcommand("roots", "Zeros of Sigma for fixed eta");
  add_medium(roots);
  roots->add_option("--eta", o.eta, "Space frequency")->capture_default_str();
  roots->add_option("--out", o.out, "CSV output path (default stdout)");

  auto* solve = app.add_subcommand("solve", "Solve the front equation for a VFGRID field");
  add_medium(solve);
  add_gamma(solve, true);
  solve->add_option("--s", o.s, "Sobolev index")->capture_default_str();
  solve->add_option("--in", o.in, "VFGRID field file")->required();
  solve->add_option("--out", o.out, "Output directory")->required();

  auto* verify = app.add_subcommand("verify", "Energy-estimate ratios over a gamma sweep");
  add_medium(verify);
  add_gamma(verify, false);
  verify->add_option("--s", o.s, "Sobolev index")->capture_default_str();
  verify->add_option("--in", o.in, "VFGRID field file")->required();
  verify->add_option("--out", o.out, "CSV output path (default stdout)");

  auto* probe = app.add_subcommand("probe", "|1/Sigma| approaching the unstable root");
  add_medium(probe);
  add_gamma(probe, true);
  probe->add_option("--eta", o.eta, "Space frequency")->capture_default_str();
  probe->add_option("--out", o.out, "CSV output path (default stdout)");

  auto* recon = app.add_subcommand("reconstruct", "Pressure profiles at one frequency bin");
  add_medium(recon);
  add_gamma(recon, true);
  recon->add_option("--in", o.in, "VFGRID field file")->required();
  recon->add_option("--kt", o.kt, "Time-frequency bin index")->capture_default_str();
  recon->add_option("--kx", o.kx, "Space-frequency bin index")->capture_default_str();
  recon->add_option("--out", o.out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (classify->parsed()) return cmd_classify(o);
    if (grid->parsed()) return cmd_grid(o);
    if (roots->parsed()) return cmd_roots(o);
    if (solve->parsed()) return cmd_solve(o);
    if (verify->parsed()) return cmd_verify(o);
    if (probe->parsed()) return cmd_probe(o);
    if (recon->parsed()) return cmd_reconstruct(o);
  } catch (const vsheet::RegimeError& e) {
    std::cerr << "regime refused (" << vsheet::to_string(e.regime()) << "): " << e.what()
              << '\n';
    return kExitRegime;
  } catch (const vsheet::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const vsheet::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitInvalid;
}
