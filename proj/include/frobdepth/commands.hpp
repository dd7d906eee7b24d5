#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "frobdepth/ideal_file.hpp"
#include "frobdepth/invariants.hpp"

namespace frobdepth {

struct Options {
  int max_e = 8;
  OrderKind order = OrderKind::Grevlex;
  std::optional<std::filesystem::path> json;
  int j = 0;
  std::uint64_t pair_cap = Limits{}.pair_cap;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 1;
inline constexpr int failed_check = 2;
inline constexpr int capped = 3;
inline constexpr int resources = 4;
}  // namespace exit_code

/// Fixed key order; integers only. `label` may be empty.
std::string report_json(const InvariantReport& rep, const std::string& label);
void print_report(std::ostream& out, const InvariantReport& rep, const std::string& label);
/// Exit code for a finished report: failed check, then capped.
int report_exit_code(const InvariantReport& rep);

int cmd_analyze(const std::filesystem::path& path, const Options& opt, std::ostream& out,
                std::ostream& err);
int cmd_verify(const std::filesystem::path& dir, const Options& opt, std::ostream& out,
               std::ostream& err);
int cmd_ext(const std::filesystem::path& path, const Options& opt, std::ostream& out,
            std::ostream& err);
int cmd_gb(const std::filesystem::path& path, const Options& opt, std::ostream& out,
           std::ostream& err);
int cmd_resolve(const std::filesystem::path& path, const Options& opt, std::ostream& out,
                std::ostream& err);

}  // namespace frobdepth
