#include "skms/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace skms {

namespace {

struct ElimRecord {
  size_t var = 0;
  bool is_eq = false;
  LinCon eq;                     // valid when is_eq
  std::vector<LinCon> involved;  // valid when !is_eq
};

// Canonical positive integer scaling for dedup keys.
void normalize(LinCon& c) {
  Int l(1);
  for (const Rat& x : c.a) l = lcm(l, x.get_den());
  l = lcm(l, c.b.get_den());
  Int g(0);
  for (const Rat& x : c.a) g = gcd(g, Int(x * Rat(l)));
  g = gcd(g, Int(c.b * Rat(l)));
  if (sign(g) == 0) return;
  Rat f = Rat(l) / Rat(g);
  for (Rat& x : c.a) x *= f;
  c.b *= f;
}

// Returns false on detected infeasibility. Constraints with zero coefficient
// vectors are resolved and removed; duplicates merged (Lt dominates Le).
bool simplify(std::vector<LinCon>& cons) {
  std::vector<LinCon> kept;
  std::map<std::pair<std::vector<std::string>, std::string>, size_t> seen;
  for (LinCon& c : cons) {
    if (qvec_is_zero(c.a)) {
      int sb = sign(c.b);
      bool ok = (c.rel == Rel::Le && sb >= 0) || (c.rel == Rel::Lt && sb > 0) ||
                (c.rel == Rel::Eq && sb == 0);
      if (!ok) return false;
      continue;
    }
    normalize(c);
    std::vector<std::string> akey;
    akey.reserve(c.a.size());
    for (const Rat& x : c.a) akey.push_back(x.get_str());
    std::pair<std::vector<std::string>, std::string> key{std::move(akey), c.b.get_str()};
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), kept.size());
      kept.push_back(std::move(c));
    } else {
      LinCon& prev = kept[it->second];
      if (prev.rel == c.rel) continue;
      if (prev.rel == Rel::Eq || c.rel == Rel::Eq) {
        // a.x = b together with a.x <= b is fine; keep the equation unless
        // the other is strict, which is infeasible.
        if (prev.rel == Rel::Lt || c.rel == Rel::Lt) return false;
        prev.rel = Rel::Eq;
      } else {
        prev.rel = Rel::Lt;  // Le + Lt
      }
    }
  }
  cons = std::move(kept);
  return true;
}

struct ElimResult {
  bool feasible = false;
  std::vector<ElimRecord> records;
  std::vector<LinCon> residual;  // constraints only on protected vars
};

ElimResult eliminate(const LinSystem& sys, const std::vector<bool>& protect) {
  ElimResult res;
  std::vector<LinCon> cons = sys.cons;
  std::vector<bool> active(sys.dim, true);
  for (size_t i = 0; i < sys.dim; ++i)
    if (protect[i]) active[i] = false;

  while (true) {
    if (!simplify(cons)) return res;
    // Prefer substituting an equation.
    size_t eq_idx = cons.size();
    size_t eq_var = 0;
    for (size_t i = 0; i < cons.size(); ++i) {
      if (cons[i].rel != Rel::Eq) continue;
      for (size_t v = 0; v < sys.dim; ++v) {
        if (active[v] && sign(cons[i].a[v]) != 0) {
          eq_idx = i;
          eq_var = v;
          break;
        }
      }
      if (eq_idx != cons.size()) break;
    }
    if (eq_idx != cons.size()) {
      LinCon eq = cons[eq_idx];
      cons.erase(cons.begin() + static_cast<long>(eq_idx));
      const Rat& piv = eq.a[eq_var];
      for (LinCon& c : cons) {
        if (sign(c.a[eq_var]) == 0) continue;
        Rat f = c.a[eq_var] / piv;
        for (size_t j = 0; j < sys.dim; ++j) c.a[j] -= f * eq.a[j];
        c.b -= f * eq.b;
        c.a[eq_var] = 0;
      }
      res.records.push_back({eq_var, true, std::move(eq), {}});
      active[eq_var] = false;
      continue;
    }
    // Pick the active variable with the cheapest Fourier-Motzkin step.
    size_t best = sys.dim;
    size_t best_cost = 0;
    for (size_t v = 0; v < sys.dim; ++v) {
      if (!active[v]) continue;
      size_t nlo = 0, nhi = 0;
      for (const LinCon& c : cons) {
        int s = sign(c.a[v]);
        if (s > 0) ++nhi;
        else if (s < 0) ++nlo;
      }
      if (nlo + nhi == 0) continue;
      size_t cost = nlo * nhi;
      if (best == sys.dim || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    if (best == sys.dim) break;  // no active variable appears
    std::vector<LinCon> rest, lowers, uppers;
    std::vector<LinCon> involved;
    for (LinCon& c : cons) {
      int s = sign(c.a[best]);
      if (s == 0)
        rest.push_back(std::move(c));
      else {
        involved.push_back(c);
        if (s > 0)
          uppers.push_back(std::move(c));
        else
          lowers.push_back(std::move(c));
      }
    }
    for (const LinCon& up : uppers) {
      for (const LinCon& lo : lowers) {
        LinCon nc;
        nc.a = qvec_zero(sys.dim);
        const Rat& cu = up.a[best];
        const Rat& cl = lo.a[best];
        for (size_t j = 0; j < sys.dim; ++j) nc.a[j] = up.a[j] / cu - lo.a[j] / cl;
        nc.b = up.b / cu - lo.b / cl;
        nc.a[best] = 0;
        nc.rel = (up.rel == Rel::Lt || lo.rel == Rel::Lt) ? Rel::Lt : Rel::Le;
        rest.push_back(std::move(nc));
      }
    }
    cons = std::move(rest);
    res.records.push_back({best, false, {}, std::move(involved)});
    active[best] = false;
  }
  res.residual = std::move(cons);
  res.feasible = true;
  return res;
}

// Evaluates a . x - a[skip] * x[skip].
Rat eval_except(const QVec& a, const QVec& x, size_t skip) {
  Rat s(0);
  for (size_t j = 0; j < a.size(); ++j) {
    if (j == skip || sign(a[j]) == 0) continue;
    s += a[j] * x[j];
  }
  return s;
}

void back_substitute(const std::vector<ElimRecord>& records, QVec& x) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const ElimRecord& r = *it;
    if (r.is_eq) {
      x[r.var] = (r.eq.b - eval_except(r.eq.a, x, r.var)) / r.eq.a[r.var];
      continue;
    }
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const LinCon& c : r.involved) {
      Rat bound = (c.b - eval_except(c.a, x, r.var)) / c.a[r.var];
      bool strict = c.rel == Rel::Lt;
      if (sign(c.a[r.var]) > 0) {
        if (!hi || bound < *hi) {
          hi = bound;
          hi_strict = strict;
        } else if (bound == *hi) {
          hi_strict = hi_strict || strict;
        }
      } else {
        if (!lo || bound > *lo) {
          lo = bound;
          lo_strict = strict;
        } else if (bound == *lo) {
          lo_strict = lo_strict || strict;
        }
      }
    }
    if (lo && hi) {
      assert(*lo <= *hi);
      if (*lo == *hi) {
        assert(!lo_strict && !hi_strict);
        x[r.var] = *lo;
      } else {
        x[r.var] = (*lo + *hi) / 2;
      }
    } else if (lo) {
      x[r.var] = *lo + 1;
    } else if (hi) {
      x[r.var] = *hi - 1;
    } else {
      x[r.var] = 0;
    }
  }
}

}  // namespace

bool lp_feasible(const LinSystem& sys) {
  std::vector<bool> protect(sys.dim, false);
  return eliminate(sys, protect).feasible;
}

std::optional<QVec> lp_point(const LinSystem& sys) {
  std::vector<bool> protect(sys.dim, false);
  ElimResult res = eliminate(sys, protect);
  if (!res.feasible) return std::nullopt;
  QVec x = qvec_zero(sys.dim);
  back_substitute(res.records, x);
  return x;
}

VarRange lp_range(const LinSystem& sys, const QVec& objective) {
  assert(objective.size() == sys.dim);
  LinSystem aug;
  aug.dim = sys.dim + 1;
  for (const LinCon& c : sys.cons) {
    LinCon ce = c;
    ce.a.push_back(Rat(0));
    aug.cons.push_back(std::move(ce));
  }
  QVec t_def = objective;
  t_def.push_back(Rat(-1));
  aug.add(std::move(t_def), Rat(0), Rel::Eq);

  std::vector<bool> protect(aug.dim, false);
  protect[sys.dim] = true;
  ElimResult res = eliminate(aug, protect);
  VarRange out;
  if (!res.feasible) return out;
  out.feasible = true;
  for (const LinCon& c : res.residual) {
    const Rat& ct = c.a[sys.dim];
    assert(sign(ct) != 0);
    Rat bound = c.b / ct;
    bool strict = c.rel == Rel::Lt;
    if (c.rel == Rel::Eq) {
      if (!out.lo || bound > *out.lo) {
        out.lo = bound;
        out.lo_strict = false;
      }
      if (!out.hi || bound < *out.hi) {
        out.hi = bound;
        out.hi_strict = false;
      }
      continue;
    }
    if (sign(ct) > 0) {
      if (!out.hi || bound < *out.hi) {
        out.hi = bound;
        out.hi_strict = strict;
      } else if (bound == *out.hi) {
        out.hi_strict = out.hi_strict || strict;
      }
    } else {
      if (!out.lo || bound > *out.lo) {
        out.lo = bound;
        out.lo_strict = strict;
      } else if (bound == *out.lo) {
        out.lo_strict = out.lo_strict || strict;
      }
    }
  }
  // Protected-variable contradictions surface here, not in eliminate().
  if (out.lo && out.hi &&
      (*out.lo > *out.hi || (*out.lo == *out.hi && (out.lo_strict || out.hi_strict))))
    out.feasible = false;
  return out;
}

}  // namespace skms
