#include "frobdepth/invariants.hpp"

#include <algorithm>

namespace frobdepth {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool InvariantReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* InvariantReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

int cd_scan(const FrobeniusAnalysis& a, int max_e) {
  const int ht = height(a.ideal());
  for (int j = a.pd(); j >= ht; --j) {
    ChainResult r = a.chain(j, max_e);
    if (r.capped)
      throw Error(ErrorKind::Capped, "kernel chain at j=" + std::to_string(j) + " did not stabilize");
    if (r.verdict == Verdict::NonNilpotent) return j;
  }
  throw Error(ErrorKind::CertificateFailed, "no non-nilpotent chain at or above the height");
}

CheckStatus status(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

}  // namespace

int cd(const Ideal& ideal, int max_e) { return cd_scan(FrobeniusAnalysis(ideal), max_e); }

int fdepth_quotient(const Ideal& ideal, int max_e) {
  return static_cast<int>(ideal.ring().n()) - cd(ideal, max_e);
}

int fgrade(const Ideal& ideal, int max_e) { return fdepth_quotient(ideal, max_e); }

int monomial_oracle_cd(const Ideal& ideal) { return pd(radical_monomial(ideal)); }

InvariantReport report(const Ideal& ideal, int max_e) {
  const RingCtx& ctx = ideal.ring();
  FrobeniusAnalysis a(ideal);
  InvariantReport rep;
  rep.p = ctx.p();
  rep.n = ctx.n();
  rep.vars = ctx.var_names();
  for (const auto& g : ideal.gens()) rep.generators.push_back(to_string(g, ctx));
  const int n = static_cast<int>(ctx.n());
  rep.pd = a.pd();
  rep.depth = n - rep.pd;
  rep.dim = dim_quotient(ideal);
  rep.height = height(ideal);

  for (int j = 0; j <= n; ++j) {
    rep.chains.push_back(a.chain(j, max_e));
    if (rep.chains.back().capped) rep.unknowns.push_back(j);
  }
  // cd is known once every index above the topmost non-nilpotent one is decided
  for (int j = n; j >= 0; --j) {
    const ChainResult& c = rep.chains[static_cast<std::size_t>(j)];
    if (c.capped) break;
    if (c.verdict == Verdict::NonNilpotent) {
      rep.cd = j;
      break;
    }
  }
  if (rep.cd) {
    rep.fdepth = n - *rep.cd;
    rep.fgrade = n - *rep.cd;
  }

  auto add = [&](const char* name, const char* anchor, CheckStatus s) {
    rep.checks.push_back(Check{name, s, anchor});
  };
  const bool known = rep.fdepth.has_value();
  const int fd = known ? *rep.fdepth : 0;
  add("C1", "depth(R/I) <= F-depth(R/I)",
      known ? status(rep.depth <= fd) : CheckStatus::Skipped);
  add("C2", "F-depth(R/I) <= dim(R/I)", known ? status(fd <= rep.dim) : CheckStatus::Skipped);
  // fgrade and F-depth come from the same verdict vector
  add("C3", "fgrade(I) = F-depth(R/I)",
      known ? status(*rep.fgrade == fd) : CheckStatus::Skipped);
  add("C4", "0 <= F-depth(R/I) <= dim(R/I)",
      known ? status(0 <= fd && fd <= rep.dim) : CheckStatus::Skipped);
  add("C5", "F-depth(R/I) > 0 iff dim(R/I) > 0",
      known ? status((fd > 0) == (rep.dim > 0)) : CheckStatus::Skipped);
  CheckStatus c6 = CheckStatus::Skipped;
  if (known && ideal.is_monomial())
    c6 = fd <= 1 ? CheckStatus::Pass : status(punctured_connected(radical_monomial(ideal)));
  add("C6", "F-depth(R/I) > 1 implies the punctured spectrum is connected", c6);
  const ChainResult& at_ht = rep.chains[static_cast<std::size_t>(rep.height)];
  add("C7", "local cohomology is nonzero at the height",
      at_ht.capped ? CheckStatus::Skipped : status(at_ht.verdict == Verdict::NonNilpotent));

  rep.strict_gap = known && rep.depth < fd;
  return rep;
}

}  // namespace frobdepth
