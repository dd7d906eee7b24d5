#include "frobdepth/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "json.hpp"

namespace frobdepth {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(); }

RingCtx ring_for(const IdealFile& f, const Options& opt) {
  return f.ring(MonomialOrder{opt.order, 0}, Limits{opt.pair_cap});
}

// Maps library errors onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceExhausted: return exit_code::resources;
      case ErrorKind::Capped: return exit_code::capped;
      case ErrorKind::CertificateFailed:
      case ErrorKind::LiftFailed: return exit_code::failed_check;
      default: return exit_code::parse;
    }
  }
}

}  // namespace

std::string report_json(const InvariantReport& rep, const std::string& label) {
  ordered_json j;
  j["schema_version"] = "1";
  j["label"] = label;
  j["p"] = rep.p;
  j["n"] = rep.n;
  j["vars"] = rep.vars;
  j["ideal"] = rep.generators;
  j["depth"] = rep.depth;
  j["dim"] = rep.dim;
  j["pd"] = rep.pd;
  j["cd"] = opt_int(rep.cd);
  j["fgrade"] = opt_int(rep.fgrade);
  j["fdepth"] = opt_int(rep.fdepth);
  j["strict_gap"] = rep.strict_gap;
  ordered_json chains = ordered_json::array();
  for (const auto& c : rep.chains) {
    ordered_json r;
    r["j"] = c.j;
    r["verdict"] = to_string(c.verdict);
    r["stab_e"] = c.capped ? ordered_json() : ordered_json(c.stab_e);
    r["capped"] = c.capped;
    chains.push_back(std::move(r));
  }
  j["chains"] = std::move(chains);
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json r;
    r["name"] = c.name;
    r["status"] = to_string(c.status);
    r["paper_anchor"] = c.anchor;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  j["unknowns"] = rep.unknowns;
  return j.dump(2) + "\n";
}

void print_report(std::ostream& out, const InvariantReport& rep, const std::string& label) {
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
  if (!label.empty()) out << label << "\n";
  out << "p = " << rep.p << ", n = " << rep.n << "\n";
  out << "  depth  dim  pd  cd  fgrade  F-depth\n";
  out << "  " << std::left << std::setw(7) << rep.depth << std::setw(5) << rep.dim << std::setw(4)
      << rep.pd << std::setw(4) << cell(rep.cd) << std::setw(8) << cell(rep.fgrade)
      << cell(rep.fdepth) << std::right << "\n";
  out << "chains:\n";
  for (const auto& c : rep.chains) {
    out << "  j=" << c.j << "  " << to_string(c.verdict);
    if (c.capped)
      out << " (capped)";
    else
      out << " (stable at e=" << c.stab_e << ")";
    out << "\n";
  }
  out << "checks:\n";
  for (const auto& c : rep.checks)
    out << "  " << c.name << "  " << std::left << std::setw(8) << to_string(c.status) << std::right
        << c.anchor << "\n";
  if (rep.strict_gap) out << "strict gap: depth < F-depth\n";
}

int report_exit_code(const InvariantReport& rep) {
  if (rep.any_failed()) return exit_code::failed_check;
  if (!rep.unknowns.empty()) return exit_code::capped;
  return exit_code::ok;
}

int cmd_analyze(const std::filesystem::path& path, const Options& opt, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    IdealFile f = read_ideal_file(path);
    RingCtx ctx = ring_for(f, opt);
    InvariantReport rep = report(f.ideal(ctx), opt.max_e);
    print_report(out, rep, f.label);
    if (opt.json) {
      std::ofstream js(*opt.json, std::ios::binary);
      if (!js) throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.json->string());
      js << report_json(rep, f.label);
    }
    return report_exit_code(rep);
  });
}

int cmd_verify(const std::filesystem::path& dir, const Options& opt, std::ostream& out,
               std::ostream& err) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".ideal") files.push_back(e.path());
  if (ec) {
    err << "error: cannot list " << dir.string() << ": " << ec.message() << "\n";
    return exit_code::parse;
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "warning: no .ideal files in " << dir.string() << "\n";
    return exit_code::ok;
  }
  int result = exit_code::ok;
  std::size_t passed = 0;
  out << std::left << std::setw(32) << "file" << "depth dim pd cd fgrade fdepth  status\n";
  for (const auto& path : files) {
    std::vector<std::string> problems;
    bool printed = false;
    int code = guarded(err, [&] {
      IdealFile f = read_ideal_file(path);
      RingCtx ctx = ring_for(f, opt);
      InvariantReport rep = report(f.ideal(ctx), opt.max_e);
      auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
      out << std::setw(32) << path.filename().string() << std::setw(6) << rep.depth << std::setw(4)
          << rep.dim << std::setw(3) << rep.pd << std::setw(3) << show(rep.cd) << std::setw(7)
          << show(rep.fgrade) << std::setw(8) << show(rep.fdepth);
      printed = true;
      std::vector<std::pair<std::string, std::optional<int>>> actual{
          {"depth", rep.depth}, {"dim", rep.dim}, {"pd", rep.pd},
          {"cd", rep.cd},       {"fgrade", rep.fgrade}, {"fdepth", rep.fdepth}};
      for (const auto& [key, want] : f.expect)
        for (const auto& [k, got] : actual)
          if (k == key && got != want)
            problems.push_back(key + " expected " + std::to_string(want) + " got " +
                               (got ? std::to_string(*got) : std::string("?")));
      for (const auto& c : rep.checks)
        if (c.status == CheckStatus::Fail) problems.push_back(c.name + " failed");
      if (!problems.empty()) return exit_code::failed_check;
      return report_exit_code(rep);
    });
    if (code == exit_code::ok) {
      out << "PASS\n";
      ++passed;
    } else {
      if (!printed) out << std::setw(32) << path.filename().string() << std::setw(31) << "";
      out << "FAIL";
      for (const auto& p : problems) out << "  " << p;
      out << "\n";
      if (result == exit_code::ok) result = code;
    }
  }
  out << std::right << passed << "/" << files.size() << " passed\n";
  return result;
}

int cmd_ext(const std::filesystem::path& path, const Options& opt, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    IdealFile f = read_ideal_file(path);
    RingCtx ctx = ring_for(f, opt);
    FrobeniusAnalysis a(f.ideal(ctx));
    Subquotient e = a.ext(opt.j);
    Submodule gens = minimal_generators(e.numerator);
    out << "Ext^" << opt.j << " inside R^" << e.ambient_rank() << "\n";
    out << "generators: " << gens.gens().size() << "\n";
    for (const auto& g : gens.gens()) out << "  " << to_string(g, ctx) << "\n";
    const auto& rel = e.denominator.groebner_basis();
    out << "relations: " << rel.size() << "\n";
    for (const auto& g : rel) out << "  " << to_string(g, ctx) << "\n";
    out << (e.is_zero() ? "zero\n" : "nonzero\n");
    return exit_code::ok;
  });
}

int cmd_gb(const std::filesystem::path& path, const Options& opt, std::ostream& out,
           std::ostream& err) {
  return guarded(err, [&] {
    IdealFile f = read_ideal_file(path);
    RingCtx ctx = ring_for(f, opt);
    Ideal I = f.ideal(ctx);
    for (const auto& g : I.groebner_basis()) out << to_string(g, ctx) << "\n";
    return exit_code::ok;
  });
}

int cmd_resolve(const std::filesystem::path& path, const Options& opt, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    IdealFile f = read_ideal_file(path);
    RingCtx ctx = ring_for(f, opt);
    FreeComplex c = free_resolution(f.ideal(ctx));
    out << "betti:";
    for (auto b : c.betti()) out << " " << b;
    out << "\n";
    for (std::size_t k = 0; k < c.modules.size(); ++k) {
      out << "F" << k << ":";
      for (int s : c.modules[k].shifts) out << " " << s;
      out << "\n";
    }
    return exit_code::ok;
  });
}

}  // namespace frobdepth
