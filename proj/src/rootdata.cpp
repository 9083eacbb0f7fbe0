#include "skms/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace skms {

namespace {

QMat reflection_on_weights(const QVec& root, const QVec& coroot) {
  size_t n = root.size();
  QMat s = qmat_identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s[i][j] -= root[i] * coroot[j];
  return s;
}

bool weyl_invariant_form(const RootDatum& d, const QMat& g) {
  for (const WeylElement& w : d.weyl) {
    QMat t = qmat_mul(qmat_transpose(w.on_coweights), qmat_mul(g, w.on_coweights));
    if (!qmat_equal(t, g)) return false;
  }
  return true;
}

}  // namespace

RootDatum build_torus(size_t rank) {
  GroupSpec spec;
  spec.rank = rank;
  return build_root_datum(spec);
}

RootDatum build_root_datum(const GroupSpec& spec) {
  RootDatum d;
  d.rank = spec.rank;
  if (spec.simple_roots.size() != spec.simple_coroots.size())
    throw std::invalid_argument("simple root/coroot counts differ");
  for (const ZVec& r : spec.simple_roots)
    if (r.size() != spec.rank) throw std::invalid_argument("simple root has wrong dimension");
  for (const ZVec& r : spec.simple_coroots)
    if (r.size() != spec.rank) throw std::invalid_argument("simple coroot has wrong dimension");

  size_t m = spec.simple_roots.size();
  for (const ZVec& r : spec.simple_roots) d.simple_roots.push_back({qvec_from_ints(r)});
  for (const ZVec& r : spec.simple_coroots) d.simple_coroots.push_back({qvec_from_ints(r)});

  // Cartan pairing: diagonal 2, off-diagonal <= 0.
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      Rat c = pair(d.simple_coroots[i], d.simple_roots[j]);
      if (c.get_den() != 1)
        throw std::invalid_argument("non-integral root/coroot pairing");
      if (i == j && c != 2)
        throw std::invalid_argument("Cartan diagonal entry is not 2");
      if (i != j && sign(c) > 0)
        throw std::invalid_argument("positive off-diagonal Cartan entry");
    }
  }
  {
    QMat roots_rows;
    for (const Weight& r : d.simple_roots) roots_rows.push_back(r.v);
    if (!roots_rows.empty() && qmat_rank(roots_rows) != m)
      throw std::invalid_argument("simple roots are linearly dependent");
  }

  // Materialize the Weyl group by closure under the simple reflections.
  std::vector<QMat> gens;
  for (size_t i = 0; i < m; ++i)
    gens.push_back(reflection_on_weights(d.simple_roots[i].v, d.simple_coroots[i].v));

  auto key_of = [](const QMat& a) {
    std::string k;
    for (const QVec& row : a)
      for (const Rat& x : row) {
        k += x.get_str();
        k += ',';
      }
    return k;
  };

  std::map<std::string, std::pair<QMat, QMat>> elems;  // key -> (w, w^{-1})
  QMat id = qmat_identity(spec.rank);
  elems.emplace(key_of(id), std::make_pair(id, id));
  std::vector<std::pair<QMat, QMat>> frontier{{id, id}};
  while (!frontier.empty()) {
    std::vector<std::pair<QMat, QMat>> next;
    for (const auto& [w, winv] : frontier) {
      for (size_t i = 0; i < gens.size(); ++i) {
        QMat nw = qmat_mul(gens[i], w);
        std::string k = key_of(nw);
        if (elems.count(k)) continue;
        QMat ninv = qmat_mul(winv, gens[i]);  // (s w)^{-1} = w^{-1} s
        if (elems.size() >= spec.weyl_bound)
          throw std::invalid_argument("Weyl group exceeds element bound; group not finite?");
        elems.emplace(k, std::make_pair(nw, ninv));
        next.emplace_back(nw, ninv);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [k, pairm] : elems) {
    (void)k;
    d.weyl.push_back({pairm.first, qmat_transpose(pairm.second)});
  }

  // Roots = Weyl orbits of the simple roots; positivity read off from the
  // coefficients over the simple roots.
  std::set<QVec, bool (*)(const QVec&, const QVec&)> roots(qvec_lex_less);
  for (const Weight& a : d.simple_roots)
    for (const WeylElement& w : d.weyl) roots.insert(qmat_apply(w.on_weights, a.v));
  QMat simple_cols;  // rank x m, columns = simple roots
  if (m > 0) {
    simple_cols.assign(spec.rank, qvec_zero(m));
    for (size_t j = 0; j < m; ++j)
      for (size_t i = 0; i < spec.rank; ++i) simple_cols[i][j] = d.simple_roots[j].v[i];
  }
  QVec rho = qvec_zero(spec.rank);
  for (const QVec& r : roots) {
    std::optional<QVec> c = qmat_solve(simple_cols, r);
    if (!c) throw std::invalid_argument("root outside the span of simple roots");
    bool nonneg = true, nonpos = true;
    for (const Rat& x : *c) {
      if (sign(x) < 0) nonneg = false;
      if (sign(x) > 0) nonpos = false;
    }
    if (nonneg == nonpos) throw std::invalid_argument("root with mixed simple-root coefficients");
    if (nonneg) {
      d.positive_roots.push_back({r});
      rho = qvec_add(rho, r);
    }
  }
  d.rho_bar = {qvec_scale(Rat(1, 2), rho)};

  // w0: the unique element sending every simple root to a negative root.
  std::set<QVec, bool (*)(const QVec&, const QVec&)> neg(qvec_lex_less);
  for (const Weight& r : d.positive_roots) neg.insert(qvec_scale(Rat(-1), r.v));
  size_t found = 0;
  for (const WeylElement& w : d.weyl) {
    bool all_neg = true;
    for (const Weight& a : d.simple_roots)
      if (!neg.count(qmat_apply(w.on_weights, a.v))) {
        all_neg = false;
        break;
      }
    if (all_neg) {
      d.w0 = w.on_weights;
      ++found;
    }
  }
  if (found != 1) throw std::invalid_argument("longest element not unique; invalid root data");

  if (spec.gram) {
    if (spec.gram->size() != spec.rank)
      throw std::invalid_argument("gram matrix has wrong dimension");
    if (!qmat_positive_definite(*spec.gram))
      throw std::invalid_argument("gram matrix is not symmetric positive definite");
    d.gram = *spec.gram;
    d.gram_invariant = weyl_invariant_form(d, d.gram);
    if (!d.gram_invariant)
      throw std::invalid_argument("supplied gram matrix is not Weyl-invariant");
  } else {
    // Average of the identity form over the group. On a torus this is the
    // identity; in general it is W-invariant and positive definite.
    QMat g(spec.rank, qvec_zero(spec.rank));
    for (const WeylElement& w : d.weyl)
      g = qmat_add(g, qmat_mul(qmat_transpose(w.on_coweights), w.on_coweights));
    d.gram = qmat_scale(Rat(1, static_cast<unsigned long>(d.weyl.size())), g);
    d.gram_invariant = true;
  }
  return d;
}

bool is_dominant(const RootDatum& d, const Weight& chi) {
  for (const Coweight& c : d.simple_coroots)
    if (sign(pair(c, chi)) < 0) return false;
  return true;
}

bool is_antidominant(const RootDatum& d, const Coweight& lambda) {
  for (const Weight& a : d.simple_roots)
    if (sign(pair(lambda, a)) > 0) return false;
  return true;
}

std::optional<Weight> dominant_dotted(const RootDatum& d, const Weight& chi) {
  QVec mu = qvec_add(chi.v, d.rho_bar.v);
  size_t guard = 4 * d.weyl.size() * (d.simple_roots.size() + 1) + 8;
  for (size_t step = 0; step < guard; ++step) {
    bool moved = false;
    for (size_t i = 0; i < d.simple_roots.size(); ++i) {
      Rat p = pair(d.simple_coroots[i], Weight{mu});
      if (sign(p) < 0) {
        mu = qvec_sub(mu, qvec_scale(p, d.simple_roots[i].v));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  for (const Coweight& c : d.simple_coroots)
    if (sign(pair(c, Weight{mu})) == 0) return std::nullopt;
  return Weight{qvec_sub(mu, d.rho_bar.v)};
}

Weight minus_w0(const RootDatum& d, const Weight& chi) {
  return {qvec_scale(Rat(-1), qmat_apply(d.w0, chi.v))};
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& v) {
  std::set<QVec, bool (*)(const QVec&, const QVec&)> orbit(qvec_lex_less);
  for (const WeylElement& w : d.weyl) orbit.insert(qmat_apply(w.on_weights, v.v));
  std::vector<Weight> out;
  for (const QVec& x : orbit) out.push_back({x});
  return out;
}

std::vector<Coweight> weyl_orbit(const RootDatum& d, const Coweight& v) {
  std::set<QVec, bool (*)(const QVec&, const QVec&)> orbit(qvec_lex_less);
  for (const WeylElement& w : d.weyl) orbit.insert(qmat_apply(w.on_coweights, v.v));
  std::vector<Coweight> out;
  for (const QVec& x : orbit) out.push_back({x});
  return out;
}

Rat gram_norm2(const RootDatum& d, const QVec& lambda) {
  return qvec_dot(lambda, qmat_apply(d.gram, lambda));
}

}  // namespace skms
