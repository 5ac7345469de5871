#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddinv {

enum class SweepFamily { WorstCase, Random };

std::optional<SweepFamily> parse_family(std::string_view name) noexcept;
std::string_view to_string(SweepFamily family) noexcept;

struct SweepConfig {
  SweepFamily family = SweepFamily::WorstCase;
  std::vector<std::size_t> n_list;
  double m = 1.0;
  double M = 2.0;  ///< worst-case M, or the upper off-diagonal bound for random
  double slack = 1.0;
  std::uint64_t seed = 1;
  std::size_t reps = 1;  ///< random family: seeds seed, seed+1, ...
};

struct SweepRow {
  std::string family;
  std::size_t n = 0;
  double m = 0.0;  ///< realized
  double M = 0.0;  ///< realized
  double c_value = 0.0;
  std::optional<double> bound;
  double error = 0.0;
  double scaled_error = 0.0;  ///< error * (n-1)^2 * m
  std::optional<double> ratio;
  std::optional<std::uint64_t> seed;
};

/// Throws InvalidParams for an empty list or any n < 3.
void validate_sweep(const SweepConfig& config);

/// Cells run on up to `threads` workers; rows come back in input order
/// (n-major, then seed). threads == 0 means one per hardware thread.
std::vector<SweepRow> run_sweep(const SweepConfig& config, std::size_t threads = 1);

/// Worker count from DDINV_THREADS, falling back to hardware concurrency.
std::size_t sweep_threads_from_env();

inline constexpr std::string_view kSweepCsvHeader =
    "family,n,m,M,c_value,bound,error,scaled_error,ratio,seed";

std::string format_sweep_row(const SweepRow& row);
std::string format_sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace ddinv
