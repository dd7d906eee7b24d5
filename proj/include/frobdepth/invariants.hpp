#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobdepth/fmodule.hpp"

namespace frobdepth {

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string anchor;  // statement being checked
};

struct InvariantReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  int depth = 0;
  int dim = 0;
  int pd = 0;
  int height = 0;
  // absent when a chain they depend on was capped
  std::optional<int> cd;
  std::optional<int> fgrade;
  std::optional<int> fdepth;
  std::vector<ChainResult> chains;  // j = 0..n
  std::vector<Check> checks;
  std::vector<int> unknowns;
  bool strict_gap = false;  // depth < F-depth

  bool any_failed() const;
  const Check* check(const std::string& name) const;
};

/// max j with a non-nilpotent chain. Throws Capped, UnitIdeal, NotHomogeneous.
int cd(const Ideal& ideal, int max_e = 8);
int fdepth_quotient(const Ideal& ideal, int max_e = 8);
int fgrade(const Ideal& ideal, int max_e = 8);
/// pd of R modulo the radical; equals cd for monomial ideals. Throws NotMonomial.
int monomial_oracle_cd(const Ideal& ideal);

InvariantReport report(const Ideal& ideal, int max_e = 8);

}  // namespace frobdepth
