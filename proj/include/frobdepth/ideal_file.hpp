#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobdepth/groebner.hpp"

namespace frobdepth {

/// Line-oriented ideal description:
///
///   # comment
///   label = two planes
///   p = 2
///   vars = x, y, z, w
///   expect.cd = 3
///   I:
///   x*z
///   x*w
struct IdealFile {
  std::string label;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  // (key, value) for expect.<key>, in file order
  std::vector<std::pair<std::string, int>> expect;

  std::optional<int> expected(std::string_view key) const;
  RingCtx ring(MonomialOrder order = {}, Limits limits = {}) const;
  Ideal ideal(const RingCtx& ctx) const;

  friend bool operator==(const IdealFile&, const IdealFile&) = default;
};

/// Expectation keys accepted after "expect.".
const std::vector<std::string>& expect_keys();

/// Throws ParseError.
IdealFile parse_ideal_file(std::string_view text);
IdealFile read_ideal_file(const std::filesystem::path& path);
std::string print_ideal_file(const IdealFile& file);

}  // namespace frobdepth
