#include "ddinv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "ddinv/approx_inverse.hpp"
#include "ddinv/ddp_matrix.hpp"
#include "ddinv/error.hpp"
#include "ddinv/matrix_io.hpp"

namespace ddinv {

std::optional<SweepFamily> parse_family(std::string_view name) noexcept {
  if (name == "worstcase") return SweepFamily::WorstCase;
  if (name == "random") return SweepFamily::Random;
  return std::nullopt;
}

std::string_view to_string(SweepFamily family) noexcept {
  return family == SweepFamily::WorstCase ? "worstcase" : "random";
}

void validate_sweep(const SweepConfig& config) {
  if (config.n_list.empty()) throw Error(ErrorKind::InvalidParams, ": empty n list");
  for (auto n : config.n_list) {
    if (n < 3) throw Error(ErrorKind::InvalidParams, ": n must be >= 3 for the error bound");
  }
  if (!(config.m > 0.0) || !(config.M >= config.m)) {
    throw Error(ErrorKind::InvalidParams, ": need 0 < m <= M");
  }
  if (config.family == SweepFamily::Random && (!(config.slack >= 0.0) || config.reps == 0)) {
    throw Error(ErrorKind::InvalidParams, ": need slack >= 0 and reps >= 1");
  }
}

namespace {

struct Cell {
  std::size_t n;
  std::optional<std::uint64_t> seed;
};

SweepRow evaluate(const SweepConfig& config, const Cell& cell) {
  const DdpMatrix t = config.family == SweepFamily::WorstCase
                          ? worst_case_example(cell.n, config.m, config.M)
                          : random_ddp({cell.n, config.m, config.M, config.slack, *cell.seed});
  const ErrorReport rep = error_report(t);
  const double nm1 = static_cast<double>(cell.n - 1);
  SweepRow row;
  row.family = std::string(to_string(config.family));
  row.n = cell.n;
  row.m = rep.params.m;
  row.M = rep.params.M;
  row.c_value = rep.bound.c_value;
  row.bound = rep.bound.bound;
  row.error = rep.max_norm;
  row.scaled_error = rep.max_norm * nm1 * nm1 * rep.params.m;
  row.ratio = rep.ratio;
  row.seed = cell.seed;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config, std::size_t threads) {
  validate_sweep(config);
  std::vector<Cell> cells;
  for (auto n : config.n_list) {
    if (config.family == SweepFamily::WorstCase) {
      cells.push_back({n, std::nullopt});
    } else {
      for (std::size_t r = 0; r < config.reps; ++r) cells.push_back({n, config.seed + r});
    }
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cells.size());

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < cells.size();) {
      try {
        rows[k] = evaluate(config, cells[k]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::size_t sweep_threads_from_env() {
  if (const char* env = std::getenv("DDINV_THREADS")) {
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 0;
}

std::string format_sweep_row(const SweepRow& row) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  std::string out = row.family;
  out += ',' + std::to_string(row.n);
  out += ',' + format_double(row.m);
  out += ',' + format_double(row.M);
  out += ',' + format_double(row.c_value);
  out += ',' + opt(row.bound);
  out += ',' + format_double(row.error);
  out += ',' + format_double(row.scaled_error);
  out += ',' + opt(row.ratio);
  out += ',' + (row.seed ? std::to_string(*row.seed) : std::string());
  return out;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& row : rows) out += format_sweep_row(row) + '\n';
  return out;
}

}  // namespace ddinv
