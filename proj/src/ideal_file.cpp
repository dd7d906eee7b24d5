#include "frobdepth/ideal_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace frobdepth {

const std::vector<std::string>& expect_keys() {
  static const std::vector<std::string> keys{"depth", "dim", "pd", "cd", "fgrade", "fdepth"};
  return keys;
}

std::optional<int> IdealFile::expected(std::string_view key) const {
  for (const auto& [k, v] : expect)
    if (k == key) return v;
  return std::nullopt;
}

RingCtx IdealFile::ring(MonomialOrder order, Limits limits) const {
  return RingCtx(p, vars, order, limits);
}

Ideal IdealFile::ideal(const RingCtx& ctx) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(g, ctx));
  return Ideal(ctx, std::move(gens));
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

int to_int(const std::string& s, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile f;
  bool have_p = false, have_vars = false, in_gens = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line == "I:") {
      if (in_gens) fail(lineno, "duplicate 'I:'");
      in_gens = true;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (!in_gens) fail(lineno, "generator before 'I:'");
      f.generators.push_back(line);
      continue;
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "p") {
      if (have_p) fail(lineno, "duplicate key 'p'");
      int v = to_int(value, lineno);
      if (v < 2) fail(lineno, "p must be a prime");
      f.p = static_cast<std::uint32_t>(v);
      have_p = true;
    } else if (key == "vars") {
      if (have_vars) fail(lineno, "duplicate key 'vars'");
      std::stringstream ss(value);
      std::string name;
      while (std::getline(ss, name, ',')) f.vars.push_back(trim(name));
      have_vars = true;
    } else if (key == "label") {
      f.label = value;
    } else if (key.starts_with("expect.")) {
      std::string k = key.substr(7);
      const auto& keys = expect_keys();
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) fail(lineno, "unknown expectation '" + k + "'");
      if (f.expected(k)) fail(lineno, "duplicate expectation '" + k + "'");
      f.expect.emplace_back(k, to_int(value, lineno));
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_p) throw Error(ErrorKind::ParseError, "missing 'p = <prime>'");
  if (!have_vars) throw Error(ErrorKind::ParseError, "missing 'vars = ...'");
  if (f.generators.empty()) throw Error(ErrorKind::ParseError, "empty generator list");
  // validate p, variable names and generators against the ring
  try {
    RingCtx ctx = f.ring();
    for (const auto& g : f.generators) parse_polynomial(g, ctx);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return f;
}

IdealFile read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

std::string print_ideal_file(const IdealFile& f) {
  std::ostringstream out;
  if (!f.label.empty()) out << "label = " << f.label << "\n";
  out << "p = " << f.p << "\n";
  out << "vars = ";
  for (std::size_t i = 0; i < f.vars.size(); ++i) out << (i ? ", " : "") << f.vars[i];
  out << "\n";
  for (const auto& [k, v] : f.expect) out << "expect." << k << " = " << v << "\n";
  out << "I:\n";
  for (const auto& g : f.generators) out << g << "\n";
  return out.str();
}

}  // namespace frobdepth
