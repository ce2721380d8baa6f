// polynet: exact critical exponents of polymer networks, an exact-enumeration
// lab, and the fitting pipeline that connects the two.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <polynet/acceptance.hpp>
#include <polynet/census_io.hpp>
#include <polynet/network.hpp>
#include <polynet/sle_kpz.hpp>
#include <polynet/verify.hpp>

using namespace polynet;

namespace {

// exit codes promised in --help
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;  // verification or fit failure
constexpr int kExitUsage = 2;
constexpr int kExitInputFile = 3;

// errors produced while digesting a user-supplied file
bool is_input_file_error(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::DuplicateVertex:
    case Errc::UnknownVertexReference:
    case Errc::DisconnectedNetwork:
    case Errc::IsolatedVertex:
    case Errc::DegreeCapExceeded:
    case Errc::EmptyNetwork:
    case Errc::BadCensusFile:
      return true;
    default:
      return false;
  }
}

int classify(const Error& e) {
  return is_input_file_error(e.code()) ? kExitInputFile : kExitUsage;
}

struct MetaFlag {
  bool no_meta = false;
};

UniversalityClass class_from(const std::string& s) {
  if (s == "saw") return UniversalityClass::SAW;
  if (s == "theta") return UniversalityClass::Theta;
  if (s == "ideal") return UniversalityClass::Brownian;
  return UniversalityClass::MutuallyAvoiding;  // "mutual"
}

BoundaryCondition bc_from(const std::string& s) {
  if (s == "ordinary") return BoundaryCondition::Ordinary;
  if (s == "special") return BoundaryCondition::Special;
  return BoundaryCondition::Mixed;
}

// "2d", "d=<p/q>", "eps", "eps2"
DimensionSetting setting_from(const std::string& s) {
  if (s == "2d") return DimensionSetting::exact2d();
  if (s == "eps") return DimensionSetting::epsilon(1);
  if (s == "eps2") return DimensionSetting::epsilon(2);
  return DimensionSetting::general_d(Rational::parse(s.substr(2)));
}

std::string check_setting(const std::string& s) {
  if (s == "2d" || s == "eps" || s == "eps2") return "";
  if (s.rfind("d=", 0) == 0) {
    try {
      if (Rational::parse(s.substr(2)).sign() > 0) return "";
    } catch (const Error&) {
    }
  }
  return "expected 2d, d=<p/q>, eps or eps2, got '" + s + "'";
}

std::string value_str(const ExponentValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

int env_threads() {
  const char* raw = std::getenv("POLYNET_THREADS");
  if (!raw) return 1;
  try {
    const int n = std::stoi(raw);
    return n >= 1 ? n : 1;
  } catch (...) {
    return 1;
  }
}

std::string fmt6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// exponent: tables of x_L and x_L^S
// ---------------------------------------------------------------------------

struct ExponentArgs {
  std::string cls = "saw";
  std::string bc = "ordinary";
  std::string setting = "2d";
  long long l_max = 8;
  MetaFlag meta;
};

int run_exponent(const ExponentArgs& args) {
  const auto cls = class_from(args.cls);
  const auto bc = bc_from(args.bc);
  const auto setting = setting_from(args.setting);

  if (!args.meta.no_meta) {
    std::cout << "# class: " << args.cls << "\n";
    std::cout << "# boundary: " << args.bc << "\n";
    std::cout << "# setting: " << setting.str() << "\n";
  }
  std::cout << "L,x,xs\n";

  long long printed = 0;
  std::string first_error;
  for (long long L = 1; L <= args.l_max; ++L) {
    std::string xb = "-", xs = "-";
    try {
      xb = value_str(x_bulk(L, cls, setting));
      ++printed;
    } catch (const Error& e) {
      if (first_error.empty()) first_error = e.what();
    }
    try {
      xs = value_str(x_surface(L, cls, bc, setting));
      ++printed;
    } catch (const Error& e) {
      if (first_error.empty()) first_error = e.what();
    }
    std::cout << L << "," << xb << "," << xs << "\n";
  }
  if (printed == 0) {
    // the whole table is unsupported: report why instead of a wall of dashes
    std::cerr << "error: " << first_error << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gamma: census and entropic exponent of a network file
// ---------------------------------------------------------------------------

struct GammaArgs {
  std::string file;
  std::string cls = "saw";
  std::string bc_default = "ordinary";
  std::string setting = "2d";
  MetaFlag meta;
};

NetworkTopology load_network(const std::string& path, const std::string& bc_default) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(kExitInputFile);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  NetworkTopology net = parse_network(buffer.str());
  if (bc_default == "ordinary") return net;

  // reinterpret plain wall vertices under the requested condition
  const VertexKind target = bc_default == "special" ? VertexKind::SurfaceSpecial
                                                    : VertexKind::SurfaceMixed;
  std::vector<NetworkVertex> vertices = net.vertices();
  for (auto& v : vertices)
    if (v.kind == VertexKind::Surface) v.kind = target;
  return NetworkTopology(std::move(vertices), net.chains());
}

int run_gamma(const GammaArgs& args) {
  NetworkTopology net = [&] {
    try {
      return load_network(args.file, args.bc_default);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(kExitInputFile);
    }
  }();

  const auto setting = setting_from(args.setting);
  const auto value = gamma_exponent(net, class_from(args.cls), setting);

  if (!args.meta.no_meta) {
    const VertexCensus c = census(net);
    long long wall = c.V_S;
    long long bridges = 0;
    for (const auto& [L, n] : c.n_bridge) bridges += n;
    std::cout << "# file: " << args.file << "\n";
    std::cout << "# class: " << args.cls << "\n";
    std::cout << "# setting: " << setting.str() << "\n";
    std::cout << "# vertices: " << net.vertices().size() << " (wall " << wall
              << ", bridge " << bridges << ")\n";
    std::cout << "# chains: " << c.N_chains << ", independent loops: " << c.loops
              << "\n";
  }
  std::cout << "gamma = " << value_str(value) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// kpz: quantum dimensions and Euclidean exponents of the (L, j) families
// ---------------------------------------------------------------------------

struct KpzArgs {
  std::string kappa = "8/3";
  long long l_max = 8;
  MetaFlag meta;
};

int run_kpz(const KpzArgs& args) {
  const Kappa kappa(Rational::parse(args.kappa));
  if (!args.meta.no_meta) {
    std::cout << "# kappa: " << kappa.str() << " ("
              << phase_name(kappa.phase()) << " phase)\n";
    std::cout << "# x is defined for j <= L, xs for j <= L+1\n";
  }
  std::cout << "L,j,delta,x,xs\n";
  for (long long L = 1; L <= args.l_max; ++L)
    for (long long j = 0; j <= L + 1; ++j) {
      const std::string x =
          j <= L ? x_bulk_Lj(kappa, L, j).str() : std::string("-");
      std::cout << L << "," << j << "," << delta_Lj(kappa, L, j).value.str()
                << "," << x << "," << x_surface_Lj(kappa, L, j).str() << "\n";
    }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate: run the engine, emit a census CSV
// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string lattice = "square";
  std::string ensemble = "free";
  std::string weighting = "unit";
  std::string fugacity = "1";
  int n_max = 20;
  int threads = 0;  // 0: take POLYNET_THREADS (default 1)
  std::string out;
  MetaFlag meta;
};

int run_enumerate(const EnumerateArgs& args) {
  Lattice lattice{args.lattice == "square" ? LatticeTag::Square
                                           : LatticeTag::Hexagonal};
  Ensemble ensemble;
  if (args.ensemble == "taw") ensemble.tag = EnsembleTag::TAW;
  else if (args.ensemble == "arch") ensemble.tag = EnsembleTag::Arch;
  else if (args.ensemble == "bridge") ensemble.tag = EnsembleTag::Bridge;
  else if (args.ensemble == "polygon") ensemble.tag = EnsembleTag::Polygon;
  ensemble.surface_fugacity = ExactScalar::parse(args.fugacity);
  ensemble.weighting = args.weighting == "contacts" ? PolygonWeighting::ContactCount
                                                    : PolygonWeighting::Unit;

  const int threads = args.threads > 0 ? args.threads : env_threads();
  const auto t0 = std::chrono::steady_clock::now();
  const WalkCensus census = enumerate(lattice, ensemble, args.n_max, threads);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (args.out.empty()) {
    write_census(std::cout, census, !args.meta.no_meta, seconds);
    return kExitOk;
  }
  std::ofstream out(args.out);
  if (!out) {
    std::cerr << "error: cannot open '" << args.out << "' for writing\n";
    return kExitInputFile;
  }
  write_census(out, census, !args.meta.no_meta, seconds);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fit: exponent estimates from census CSVs, and the slow acceptance battery
// ---------------------------------------------------------------------------

struct FitArgs {
  std::string in;
  std::string weighted;  // second census for the weighting shift
  std::string quantity = "entropic";
  std::string method = "both";
  bool acceptance = false;
  int threads = 0;
};

WalkCensus read_census_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadCensusFile, "cannot open '" + path + "'");
  return read_census(in);
}

void print_fit_row(const std::string& quantity, const FitResult& r) {
  std::cout << quantity << "," << fmt6(r.exponent_estimate) << ","
            << fmt6(r.exponent_spread) << "," << fit_method_name(r.method) << ","
            << r.window_lo << "," << r.window_hi << "\n";
}

int run_lab(int threads) {
  bool ok = true;
  for (const auto& check : run_lab_battery(threads > 0 ? threads : env_threads())) {
    const char* tag = check.informational ? "info" : (check.passed ? "ok  " : "FAIL");
    std::cout << tag << " " << check.name << ": " << check.detail << "\n";
    if (!check.informational && !check.passed) ok = false;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_fit(const FitArgs& args) {
  if (args.acceptance) return run_lab(args.threads);
  if (args.in.empty()) {
    std::cerr << "error: fit needs --in (or --acceptance)\n";
    return kExitUsage;
  }

  WalkCensus census;
  try {
    census = read_census_file(args.in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputFile;
  }

  std::cout << "quantity,estimate,spread,method,window_lo,window_hi\n";
  try {
    if (args.quantity == "entropic") {
      if (args.method != "ratio")
        print_fit_row("entropic", fit_entropic(census, FitMethod::ThreePointSolve));
      if (args.method != "three-point")
        print_fit_row("entropic",
                      fit_entropic(census, FitMethod::RatioExtrapolation));
    } else if (args.quantity == "nu") {
      print_fit_row("nu", fit_nu(census));
    } else {  // weighting-shift
      if (args.weighted.empty()) {
        std::cerr << "error: --quantity weighting-shift needs --weighted FILE\n";
        return kExitUsage;
      }
      WalkCensus weighted;
      try {
        weighted = read_census_file(args.weighted);
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputFile;
      }
      print_fit_row("weighting-shift", fit_polygon_shift(census, weighted));
    }
  } catch (const Error& e) {
    // structurally fine input that does not support the requested estimate
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: the exact identity battery
// ---------------------------------------------------------------------------

struct VerifyArgs {
  bool list = false;
  std::string suite;
};

int run_verify(const VerifyArgs& args) {
  if (args.list) {
    for (const auto& suite : verification_suites())
      std::cout << suite.name << "  " << suite.summary << "\n";
    return kExitOk;
  }

  bool ok = true;
  bool matched = false;
  for (const auto& suite : verification_suites()) {
    if (!args.suite.empty() && args.suite != suite.name) continue;
    matched = true;
    const SuiteResult r = suite.run();
    if (r.passed) {
      std::cout << "ok   " << r.name << " (" << r.checks << " checks)\n";
    } else {
      std::cout << "FAIL " << r.name << ": " << r.first_fail << "\n";
      ok = false;
    }
  }
  if (!matched) {
    std::cerr << "error: no suite named '" << args.suite
              << "' (see verify --list)\n";
    return kExitUsage;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "polynet: exact polymer-network exponents, SLE/KPZ dimension maps,\n"
      "an exact-enumeration lab, and series fitting.\n"
      "Exit codes: 0 ok, 1 verification/fit failure, 2 usage, 3 input file."};
  app.require_subcommand(1);

  const auto setting_check = CLI::Validator(check_setting, "SETTING");

  ExponentArgs exp_args;
  auto* exp_cmd = app.add_subcommand(
      "exponent", "print x_L and x_L^S tables for a walk class");
  exp_cmd->add_option("--class", exp_args.cls, "walk class")
      ->check(CLI::IsMember({"saw", "theta", "ideal", "mutual"}))
      ->capture_default_str();
  exp_cmd->add_option("--bc", exp_args.bc, "wall condition for x_L^S")
      ->check(CLI::IsMember({"ordinary", "special", "mixed"}))
      ->capture_default_str();
  exp_cmd->add_option("--setting", exp_args.setting,
                      "dimension: 2d, d=<p/q>, eps, eps2")
      ->check(setting_check)
      ->capture_default_str();
  exp_cmd->add_option("--L-max", exp_args.l_max, "largest leg number")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  exp_cmd->add_flag("--no-meta", exp_args.meta.no_meta, "suppress '#' comments");

  GammaArgs gamma_args;
  auto* gamma_cmd = app.add_subcommand(
      "gamma", "entropic exponent of a polymer network file");
  gamma_cmd->add_option("file", gamma_args.file, "network description file")
      ->required();
  gamma_cmd->add_option("--class", gamma_args.cls, "walk class")
      ->check(CLI::IsMember({"saw", "theta", "ideal", "mutual"}))
      ->capture_default_str();
  gamma_cmd
      ->add_option("--bc-default", gamma_args.bc_default,
                   "reinterpret plain 'surface' vertices under this condition")
      ->check(CLI::IsMember({"ordinary", "special", "mixed"}))
      ->capture_default_str();
  gamma_cmd->add_option("--setting", gamma_args.setting,
                        "dimension: 2d, d=<p/q>, eps, eps2")
      ->check(setting_check)
      ->capture_default_str();
  gamma_cmd->add_flag("--no-meta", gamma_args.meta.no_meta,
                      "suppress '#' comments");

  KpzArgs kpz_args;
  auto* kpz_cmd = app.add_subcommand(
      "kpz", "quantum dimensions and exponents of the SLE (L, j) families");
  kpz_cmd->add_option("--kappa", kpz_args.kappa, "SLE parameter as p/q")
      ->capture_default_str();
  kpz_cmd->add_option("--L-max", kpz_args.l_max, "largest leg number")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  kpz_cmd->add_flag("--no-meta", kpz_args.meta.no_meta, "suppress '#' comments");

  EnumerateArgs enum_args;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "exact walk census on a lattice");
  enum_cmd->add_option("--lattice", enum_args.lattice, "lattice")
      ->check(CLI::IsMember({"square", "hexagonal"}))
      ->capture_default_str();
  enum_cmd->add_option("--ensemble", enum_args.ensemble, "walk ensemble")
      ->check(CLI::IsMember({"free", "taw", "arch", "bridge", "polygon"}))
      ->capture_default_str();
  enum_cmd->add_option("--n-max", enum_args.n_max, "largest walk length")
      ->check(CLI::Range(1, kNMaxLimit))
      ->capture_default_str();
  enum_cmd->add_option("--threads", enum_args.threads,
                       "worker threads (default: POLYNET_THREADS or 1)")
      ->check(CLI::Range(1, 64));
  enum_cmd->add_option("--fugacity", enum_args.fugacity,
                       "wall-contact fugacity, e.g. 3/2 or 1+sqrt(2)")
      ->capture_default_str();
  enum_cmd->add_option("--weighting", enum_args.weighting,
                       "polygon weighting")
      ->check(CLI::IsMember({"unit", "contacts"}))
      ->capture_default_str();
  enum_cmd->add_option("--out", enum_args.out, "write CSV here (default stdout)");
  enum_cmd->add_flag("--no-meta", enum_args.meta.no_meta,
                     "suppress '#' comments (wall time lives there)");

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand(
      "fit", "exponent estimates from census CSVs");
  fit_cmd->add_option("--in", fit_args.in, "census CSV (from 'enumerate')");
  fit_cmd->add_option("--quantity", fit_args.quantity, "what to fit")
      ->check(CLI::IsMember({"entropic", "nu", "weighting-shift"}))
      ->capture_default_str();
  fit_cmd->add_option("--method", fit_args.method, "fitting method(s)")
      ->check(CLI::IsMember({"three-point", "ratio", "both"}))
      ->capture_default_str();
  fit_cmd->add_option("--weighted", fit_args.weighted,
                      "contact-weighted census for --quantity weighting-shift");
  fit_cmd->add_flag("--acceptance", fit_args.acceptance,
                    "run the slow enumeration-backed acceptance battery");
  fit_cmd->add_option("--threads", fit_args.threads,
                      "worker threads for --acceptance")
      ->check(CLI::Range(1, 64));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the exact identity suites (sub-second)");
  verify_cmd->add_flag("--list", verify_args.list, "print suite names and exit");
  verify_cmd->add_option("--suite", verify_args.suite, "run one suite only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(exp_cmd)) return run_exponent(exp_args);
    if (app.got_subcommand(gamma_cmd)) return run_gamma(gamma_args);
    if (app.got_subcommand(kpz_cmd)) return run_kpz(kpz_args);
    if (app.got_subcommand(enum_cmd)) return run_enumerate(enum_args);
    if (app.got_subcommand(fit_cmd)) return run_fit(fit_args);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  }
  return kExitOk;
}
