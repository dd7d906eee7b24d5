#include "gb_engine.hpp"

#include <algorithm>
#include <set>

namespace frobdepth::detail {

Engine::Engine(const RingCtx& ctx, std::vector<int> shifts)
    : ctx_(&ctx), shifts_(std::move(shifts)) {}

void Engine::normalize(Vec& v) const {
  for (auto& t : v) t.c %= ctx_->p();
  std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return cmp(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (const auto& t : v) {
    if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m)
      out.back().c = ctx_->add(out.back().c, t.c);
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const MTerm& t) { return t.c == 0; });
  v = std::move(out);
}

void Engine::make_monic(Vec& v) const {
  if (v.empty() || v.front().c == 1) return;
  Coeff inv = ctx_->inv(v.front().c);
  for (auto& t : v) t.c = ctx_->mul(t.c, inv);
}

int Engine::degree(const Vec& v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : v) {
    int td = static_cast<int>(t.m.degree()) + shifts_[t.pos];
    if (first || td > d) d = td;
    first = false;
  }
  return d;
}

bool Engine::is_homogeneous(const Vec& v) const {
  if (v.empty()) return true;
  int d0 = static_cast<int>(v.front().m.degree()) + shifts_[v.front().pos];
  for (const auto& t : v)
    if (static_cast<int>(t.m.degree()) + shifts_[t.pos] != d0) return false;
  return true;
}

Vec Engine::sub_mul(const Vec& f, std::size_t from, Coeff c, const Monomial& m, const Vec& g,
                    std::size_t g_from) const {
  Vec out;
  out.reserve(f.size() - from + g.size() - g_from);
  const Coeff negc = ctx_->neg(c % ctx_->p());
  std::size_t i = from, j = g_from;
  if (j < g.size()) {
    MTerm gt{g[j].m * m, g[j].pos, 0};
    while (true) {
      gt.c = g[j].c;
      int r = i < f.size() ? cmp(f[i], gt) : -1;
      if (r > 0) {
        out.push_back(f[i++]);
        continue;
      }
      if (r < 0) {
        out.push_back(MTerm{gt.m, gt.pos, ctx_->mul(negc, g[j].c)});
      } else {
        Coeff s = ctx_->add(f[i].c, ctx_->mul(negc, g[j].c));
        if (s != 0) out.push_back(MTerm{f[i].m, f[i].pos, s});
        ++i;
      }
      if (++j == g.size()) break;
      gt.m = g[j].m * m;
      gt.pos = g[j].pos;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  return out;
}

Vec Engine::mul(const Vec& g, Coeff c, const Monomial& m) const {
  Vec out;
  c %= ctx_->p();
  if (c == 0) return out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back(MTerm{t.m * m, t.pos, ctx_->mul(t.c, c)});
  return out;
}

void DivisorIndex::add(std::size_t id, const MTerm& lead) {
  if (lead.pos >= by_pos_.size()) by_pos_.resize(lead.pos + 1);
  by_pos_[lead.pos].push_back(Entry{lead.m, id});
}

long DivisorIndex::find(const MTerm& t) const {
  if (t.pos >= by_pos_.size()) return -1;
  for (const auto& e : by_pos_[t.pos])
    if (e.m.divides(t.m)) return static_cast<long>(e.id);
  return -1;
}

Vec reduce_full(Vec f, const std::vector<Vec>& basis, const DivisorIndex& index,
                const Engine& eng) {
  const RingCtx& ctx = eng.ring();
  Vec rem;
  std::size_t head = 0;
  while (head < f.size()) {
    const MTerm& lt = f[head];
    long id = index.find(lt);
    if (id < 0) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const Vec& g = basis[static_cast<std::size_t>(id)];
    Coeff c = g.front().c == 1 ? lt.c : ctx.mul(lt.c, ctx.inv(g.front().c));
    Monomial q = lt.m / g.front().m;
    f = eng.sub_mul(f, head + 1, c, q, g, 1);
    head = 0;
  }
  return rem;
}

Vec reduce_top(Vec f, const std::vector<Vec>& basis, const DivisorIndex& index,
               const Engine& eng, std::uint32_t stop_pos) {
  const RingCtx& ctx = eng.ring();
  while (!f.empty() && f.front().pos < stop_pos) {
    long id = index.find(f.front());
    if (id < 0) break;
    const Vec& g = basis[static_cast<std::size_t>(id)];
    Coeff c = g.front().c == 1 ? f.front().c : ctx.mul(f.front().c, ctx.inv(g.front().c));
    Monomial q = f.front().m / g.front().m;
    f = eng.sub_mul(f, 1, c, q, g, 1);
  }
  return f;
}

namespace {

struct Item {
  int sugar;
  int kind;  // 0: S-pair, 1: input generator
  std::uint32_t pos;
  Monomial lcm;
  std::size_t i, j;
};

struct ItemLess {
  const Engine* eng;
  bool operator()(const Item& a, const Item& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.pos != b.pos) return a.pos > b.pos;
    int c = eng->ring().cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

struct Elem {
  Vec v;
  int sugar;
  bool redundant = false;
};

Vec s_vector(const Vec& a, const Vec& b, const Engine& eng) {
  Monomial l = lcm(a.front().m, b.front().m);
  Vec left = eng.mul(Vec(a.begin() + 1, a.end()), 1, l / a.front().m);
  return eng.sub_mul(left, 0, 1, l / b.front().m, b, 1);
}

class Buchberger {
 public:
  Buchberger(const Engine& eng, bool product_criterion)
      : eng_(eng),
        product_(product_criterion),
        queue_(ItemLess{&eng}),
        index_(eng.rank()) {}

  GbResult run(const std::vector<Vec>& gens) {
    GbResult out;
    out.input_redundant.assign(gens.size(), false);
    std::vector<Vec> inputs = gens;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      eng_.normalize(inputs[i]);
      if (inputs[i].empty()) {
        out.input_redundant[i] = true;
        continue;
      }
      eng_.make_monic(inputs[i]);
      queue_.insert(Item{eng_.degree(inputs[i]), 1, inputs[i].front().pos, inputs[i].front().m,
                         i, 0});
    }
    const std::uint64_t cap = eng_.ring().limits().pair_cap;
    std::uint64_t steps = 0;
    while (!queue_.empty()) {
      Item it = *queue_.begin();
      queue_.erase(queue_.begin());
      if (++steps > cap)
        throw Error(ErrorKind::ResourceExhausted,
                    "Groebner basis exceeded the pair cap of " + std::to_string(cap));
      Vec h = it.kind == 1 ? inputs[it.i] : s_vector(elems_[it.i].v, elems_[it.j].v, eng_);
      h = reduce_full(std::move(h), basis_, index_, eng_);
      if (h.empty()) {
        if (it.kind == 1) out.input_redundant[it.i] = true;
        continue;
      }
      eng_.make_monic(h);
      insert(std::move(h), it.sugar);
    }
    out.basis = finish();
    return out;
  }

 private:
  void insert(Vec h, int sugar) {
    const std::size_t t = elems_.size();
    const MTerm lead = h.front();
    std::vector<Item> cand;
    for (std::size_t i = 0; i < t; ++i) {
      const Elem& e = elems_[i];
      if (e.redundant || e.v.front().pos != lead.pos) continue;
      const Monomial& lm = e.v.front().m;
      Monomial l = lcm(lm, lead.m);
      int s = std::max(e.sugar + static_cast<int>(l.degree() - lm.degree()),
                       sugar + static_cast<int>(l.degree() - lead.m.degree()));
      cand.push_back(Item{s, 0, lead.pos, l, i, t});
    }

    // Criterion B on queued pairs.
    std::erase_if(queue_, [&](const Item& it) {
      if (it.kind != 0 || it.pos != lead.pos || !lead.m.divides(it.lcm)) return false;
      Monomial li = lcm(elems_[it.i].v.front().m, lead.m);
      Monomial lj = lcm(elems_[it.j].v.front().m, lead.m);
      return !(li == it.lcm) && !(lj == it.lcm);
    });

    // Criterion M.
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < cand.size(); ++b)
        if (a != b && cand[b].lcm.divides(cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) {
          keep[a] = false;
          break;
        }

    // Criterion F, plus the coprime-leads criterion for ideals.
    std::vector<bool> done(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a] || done[a]) continue;
      bool any_coprime = false;
      std::vector<std::size_t> group;
      for (std::size_t b = a; b < cand.size(); ++b)
        if (keep[b] && !done[b] && cand[b].lcm == cand[a].lcm) {
          group.push_back(b);
          done[b] = true;
          if (coprime(elems_[cand[b].i].v.front().m, lead.m)) any_coprime = true;
        }
      if (product_ && any_coprime) continue;
      queue_.insert(cand[group.front()]);
    }

    for (std::size_t i = 0; i < t; ++i) {
      Elem& e = elems_[i];
      if (!e.redundant && e.v.front().pos == lead.pos && lead.m.divides(e.v.front().m))
        e.redundant = true;
    }

    index_.add(t, lead);
    basis_.push_back(h);
    elems_.push_back(Elem{std::move(h), sugar});
  }

  std::vector<Vec> finish() {
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < elems_.size(); ++a) {
      const MTerm& la = elems_[a].v.front();
      bool drop = false;
      for (std::size_t b = 0; b < elems_.size() && !drop; ++b) {
        if (a == b) continue;
        const MTerm& lb = elems_[b].v.front();
        if (lb.pos != la.pos || !lb.m.divides(la.m)) continue;
        if (!(lb.m == la.m) || b < a) drop = true;
      }
      if (!drop) kept.push_back(a);
    }
    std::vector<Vec> min_basis;
    DivisorIndex idx(eng_.rank());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      min_basis.push_back(elems_[kept[k]].v);
      idx.add(k, min_basis.back().front());
    }
    std::vector<Vec> out;
    out.reserve(min_basis.size());
    for (const auto& g : min_basis) {
      Vec tail(g.begin() + 1, g.end());
      Vec r = reduce_full(std::move(tail), min_basis, idx, eng_);
      Vec full;
      full.reserve(r.size() + 1);
      full.push_back(g.front());
      full.insert(full.end(), r.begin(), r.end());
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return eng_.cmp(a.front(), b.front()) > 0; });
    return out;
  }

  const Engine& eng_;
  bool product_;
  std::set<Item, ItemLess> queue_;
  std::vector<Elem> elems_;
  std::vector<Vec> basis_;
  DivisorIndex index_;
};

}  // namespace

GbResult groebner(const std::vector<Vec>& gens, const Engine& eng, bool product_criterion) {
  GbResult res = Buchberger(eng, product_criterion).run(gens);
  if (verification_enabled() && !check_certificate(gens, res.basis, eng))
    throw Error(ErrorKind::CertificateFailed, "Buchberger certificate failed");
  return res;
}

bool check_certificate(const std::vector<Vec>& gens, const std::vector<Vec>& basis,
                       const Engine& eng) {
  DivisorIndex idx(eng.rank());
  for (std::size_t k = 0; k < basis.size(); ++k) idx.add(k, basis[k].front());
  for (Vec g : gens) {
    eng.normalize(g);
    if (!reduce_full(std::move(g), basis, idx, eng).empty()) return false;
  }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (basis[a].front().pos != basis[b].front().pos) continue;
      if (!reduce_full(s_vector(basis[a], basis[b], eng), basis, idx, eng).empty()) return false;
    }
  return true;
}

}  // namespace frobdepth::detail
