#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ddinv/approx_inverse.hpp"
#include "ddinv/bounds.hpp"
#include "ddinv/ddp_matrix.hpp"
#include "ddinv/error.hpp"
#include "ddinv/matrix_io.hpp"
#include "ddinv/solvers.hpp"
#include "ddinv/sweep.hpp"

namespace ddinv::cli {

namespace {

std::string fmt(double v) { return format_double(v, 6); }

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string("n/a"); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Matrix violates the dominance/positivity/symmetry conditions, as opposed
// to I/O or syntax problems.
bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveEntry:
    case ErrorKind::DominanceViolated:
    case ErrorKind::NotSymmetric:
    case ErrorKind::OrderTooSmall:
      return true;
    default:
      return false;
  }
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Where a command gets its matrix from: a file or a generated family.
struct MatrixSource {
  std::string path;
  std::string family;
  std::size_t n = 0;
  double m = 1.0;
  double M = 2.0;
  double slack = 1.0;
  std::uint64_t seed = 1;
  bool require_symmetric = true;

  void add_options(CLI::App& cmd) {
    cmd.add_option("path", path, "Matrix text file");
    cmd.add_option("--family", family, "Generated family instead of a file")
        ->check(CLI::IsMember({"worstcase", "random"}));
    cmd.add_option("--n", n, "Order of the generated matrix");
    cmd.add_option("--m", m, "Off-diagonal value (worstcase) or lower bound (random)");
    cmd.add_option("--M", M, "Large diagonal scale (worstcase) or off-diagonal upper bound (random)");
    cmd.add_option("--slack", slack, "Random family: row slack drawn from [0, slack]");
    cmd.add_option("--seed", seed, "Random family seed");
  }

  DdpMatrix load() const {
    if (!family.empty()) {
      if (!path.empty()) throw Error(ErrorKind::InvalidParams, ": give either a path or --family");
      if (family == "worstcase") return worst_case_example(n, m, M);
      return random_ddp({n, m, M, slack, seed});
    }
    if (path.empty()) throw Error(ErrorKind::InvalidParams, ": no matrix path or --family given");
    return validate_ddp(parse_matrix(read_file(path)), require_symmetric);
  }
};

int report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  if (const auto* de = dynamic_cast<const Error*>(&e); de && is_validation_error(de->kind())) {
    return kInvalidMatrix;
  }
  return kFailure;
}

int cmd_validate(const std::string& path, bool require_symmetric, std::ostream& out) {
  const DdpMatrix t = validate_ddp(parse_matrix(read_file(path)), require_symmetric);
  const auto p = dominance_params(t);
  const auto n = t.order();
  const auto [dmin, dmax] = std::minmax_element(p.delta.begin(), p.delta.end());
  const auto bound = theorem1_bound(n, p.m, p.M);
  out << "n=" << n << '\n'
      << "m=" << fmt(p.m) << '\n'
      << "M=" << fmt(p.M) << '\n'
      << "delta_min=" << fmt(*dmin) << '\n'
      << "delta_max=" << fmt(*dmax) << '\n'
      << "symmetric=" << yes_no(t.symmetric()) << '\n'
      << "positive_definite=" << (t.symmetric() ? yes_no(is_positive_definite(t)) : "n/a") << '\n'
      << "C=" << (n >= 3 ? fmt(bound.c_value) : std::string("n/a")) << '\n'
      << "applicable=" << yes_no(bound.applicable()) << '\n';
  return kOk;
}

int cmd_bound(std::size_t n, double m, double M, std::ostream& out) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, ": n must be >= 3 for the error bound");
  const auto b = theorem1_bound(n, m, M);
  out << "C=" << fmt(b.c_value) << " bound=" << fmt(b.bound)
      << " limit=" << fmt(corollary_limit(m, M)) << '\n';
  return kOk;
}

int cmd_error(const MatrixSource& src, std::ostream& out) {
  const DdpMatrix t = src.load();
  const ErrorReport rep = error_report(t);
  const double nm1 = static_cast<double>(t.order() - 1);
  out << "n=" << t.order() << " m=" << fmt(rep.params.m) << " M=" << fmt(rep.params.M) << '\n'
      << "error=" << fmt(rep.max_norm) << " bound=" << fmt(rep.bound.bound)
      << " ratio=" << fmt(rep.ratio) << '\n'
      << "C=" << (t.order() >= 3 ? fmt(rep.bound.c_value) : std::string("n/a"))
      << " scaled_error=" << fmt(rep.max_norm * nm1 * nm1 * rep.params.m) << '\n'
      << "inverse_offdiag_nonpositive=" << yes_no(rep.inverse_nonpositive_offdiag) << '\n';
  if (rep.ratio && *rep.ratio > 1.0 + kBoundSlack) {
    out << "BOUND VIOLATED\n";
    return kBoundViolated;
  }
  return kOk;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> ns;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::InvalidParams, ": bad --n-list entry '" + item + "'");
    }
    ns.push_back(v);
  }
  return ns;
}

int cmd_sweep(const SweepConfig& config, const std::string& out_path, std::ostream& out) {
  const auto rows = run_sweep(config, sweep_threads_from_env());
  const std::string csv = format_sweep_csv(rows);
  if (out_path.empty()) {
    out << csv;
  } else {
    // Written beside the target and renamed, so a failure leaves no partial file.
    const std::string tmp = out_path + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw IoError("cannot write '" + tmp + "'");
      f << csv;
      f.flush();
      if (!f) {
        std::filesystem::remove(tmp);
        throw IoError("write failed for '" + tmp + "'");
      }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, out_path, ec);
    if (ec) {
      std::filesystem::remove(tmp);
      throw IoError("cannot rename to '" + out_path + "': " + ec.message());
    }
  }
  for (const auto& row : rows) {
    if (row.ratio && *row.ratio > 1.0 + kBoundSlack) return kBoundViolated;
  }
  return kOk;
}

struct SolveOptions {
  std::string rhs_path;
  bool rhs_ones = false;
  std::string method = "jacobi";
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  bool compare = false;
};

void print_solve(const SolveReport& rep, double b_norm, const std::vector<double>* exact,
                 std::ostream& out) {
  out << "method=" << to_string(rep.method) << " iterations=" << rep.iterations
      << " converged=" << yes_no(rep.converged)
      << " residual=" << fmt(rep.final_relative_residual(b_norm));
  if (exact) {
    double worst = 0.0;
    for (std::size_t i = 0; i < exact->size(); ++i)
      worst = std::max(worst, std::abs(rep.solution[i] - (*exact)[i]));
    out << " max_error=" << fmt(worst);
  }
  out << '\n';
}

int cmd_solve(const MatrixSource& src, const SolveOptions& opt, std::ostream& out) {
  const DdpMatrix t = src.load();
  std::vector<double> b;
  std::optional<std::vector<double>> exact;
  if (!opt.rhs_path.empty()) {
    if (opt.rhs_ones) throw Error(ErrorKind::InvalidParams, ": give either --rhs or --rhs-ones");
    b = parse_vector(read_file(opt.rhs_path));
  } else {
    exact = std::vector<double>(t.order(), 1.0);
    b = multiply(t.matrix(), *exact);
  }
  if (b.size() != t.order()) {
    throw Error(ErrorKind::DimensionMismatch, ": matrix order " + std::to_string(t.order()) +
                                                  ", right-hand side length " +
                                                  std::to_string(b.size()));
  }
  const double b_norm = norm2(b);
  const auto* exact_ptr = exact ? &*exact : nullptr;

  if (opt.compare) {
    const auto cg = pcg_solve(t, b, false, opt.tol, opt.max_iter);
    const auto pcg = pcg_solve(t, b, true, opt.tol, opt.max_iter);
    print_solve(cg, b_norm, exact_ptr, out);
    print_solve(pcg, b_norm, exact_ptr, out);
    out << "cg_iterations=" << cg.iterations << " pcg_iterations=" << pcg.iterations << '\n';
    return kOk;
  }
  SolveReport rep;
  if (opt.method == "jacobi") {
    rep = jacobi_solve(t, b, opt.tol, opt.max_iter);
  } else {
    rep = pcg_solve(t, b, opt.method == "pcg", opt.tol, opt.max_iter);
  }
  print_solve(rep, b_norm, exact_ptr, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diagonal approximate inverse of diagonally dominant positive matrices", "ddinv"};
  app.require_subcommand(1);

  std::string validate_path;
  bool require_symmetric = true;
  auto* validate = app.add_subcommand("validate", "Check a matrix file and print its parameters");
  validate->add_option("path", validate_path, "Matrix text file")->required();
  validate->add_flag("--require-symmetric,!--no-require-symmetric", require_symmetric,
                     "Reject asymmetric matrices (default on)");

  std::size_t bound_n = 0;
  double bound_m = 0.0, bound_M = 0.0;
  auto* bound = app.add_subcommand("bound", "Evaluate C(m,M), the error bound and its limit");
  bound->add_option("--n", bound_n)->required();
  bound->add_option("--m", bound_m)->required();
  bound->add_option("--M", bound_M)->required();

  MatrixSource error_src;
  auto* error = app.add_subcommand("error", "Measure ||T^-1 - S|| against the bound");
  error_src.add_options(*error);

  SweepConfig sweep_cfg;
  std::string family_name = "worstcase", n_list, sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a family over several orders, CSV output");
  sweep->add_option("--family", family_name)->check(CLI::IsMember({"worstcase", "random"}));
  sweep->add_option("--n-list", n_list, "Comma-separated orders")->required();
  sweep->add_option("--m", sweep_cfg.m);
  sweep->add_option("--M", sweep_cfg.M);
  sweep->add_option("--slack", sweep_cfg.slack);
  sweep->add_option("--seed", sweep_cfg.seed);
  sweep->add_option("--reps", sweep_cfg.reps, "Random family: seeds per order");
  sweep->add_option("--out", sweep_out, "Output CSV path (default stdout)");

  MatrixSource solve_src;
  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Solve Tx = b with Jacobi or (preconditioned) CG");
  solve_src.add_options(*solve);
  solve->add_option("--rhs", solve_opt.rhs_path, "Right-hand side vector file");
  solve->add_flag("--rhs-ones", solve_opt.rhs_ones, "Use b = T*ones (default)");
  solve->add_option("--method", solve_opt.method)->check(CLI::IsMember({"jacobi", "cg", "pcg"}));
  solve->add_option("--tol", solve_opt.tol);
  solve->add_option("--max-iter", solve_opt.max_iter);
  solve->add_flag("--compare", solve_opt.compare, "Run cg and pcg and report both");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("ddinv");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*validate) return cmd_validate(validate_path, require_symmetric, out);
    if (*bound) return cmd_bound(bound_n, bound_m, bound_M, out);
    if (*error) return cmd_error(error_src, out);
    if (*sweep) {
      sweep_cfg.family = *parse_family(family_name);
      sweep_cfg.n_list = parse_n_list(n_list);
      return cmd_sweep(sweep_cfg, sweep_out, out);
    }
    if (*solve) return cmd_solve(solve_src, solve_opt, out);
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
  return kFailure;
}

}  // namespace ddinv::cli
