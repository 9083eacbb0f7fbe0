#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skms/linalg.hpp"
#include "skms/rat.hpp"

namespace skms {

/// Point of X(T)_R (characters and their real combinations).
struct Weight {
  QVec v;
  friend bool operator==(const Weight& a, const Weight& b) { return a.v == b.v; }
  friend bool operator<(const Weight& a, const Weight& b) { return qvec_lex_less(a.v, b.v); }
};

/// Point of Y(T)_R (one-parameter subgroups and their real combinations).
struct Coweight {
  QVec v;
  friend bool operator==(const Coweight& a, const Coweight& b) { return a.v == b.v; }
  friend bool operator<(const Coweight& a, const Coweight& b) { return qvec_lex_less(a.v, b.v); }
};

/// The standard integer pairing Y(T) x X(T) -> Z, extended to R.
inline Rat pair(const Coweight& l, const Weight& x) { return qvec_dot(l.v, x.v); }

struct GroupSpec {
  size_t rank = 0;
  ZMat simple_roots;   // rows: simple roots in X(T) = Z^n
  ZMat simple_coroots; // rows: simple coroots in Y(T) = Z^n
  std::optional<QMat> gram;  // positive definite W-invariant form on Y(T)_R
  size_t weyl_bound = 1000000;
};

struct WeylElement {
  QMat on_weights;    // action on X(T)
  QMat on_coweights;  // contragredient action on Y(T)
};

struct RootDatum {
  size_t rank = 0;
  std::vector<Weight> simple_roots;
  std::vector<Coweight> simple_coroots;
  std::vector<Weight> positive_roots;
  Weight rho_bar;  // half the sum of positive roots
  QMat w0;         // longest element, acting on X(T)
  QMat gram;       // W-invariant form on Y(T)_R
  bool gram_invariant = true;
  std::vector<WeylElement> weyl;  // whole group, canonically ordered

  bool is_torus() const { return simple_roots.empty(); }
};

/// Validates the spec and materializes the Weyl group. Throws
/// std::invalid_argument on non-Cartan pairings, a group exceeding the
/// element bound, or a supplied gram that is not W-invariant.
RootDatum build_root_datum(const GroupSpec& spec);

RootDatum build_torus(size_t rank);

bool is_dominant(const RootDatum& d, const Weight& chi);
bool is_antidominant(const RootDatum& d, const Coweight& lambda);

/// chi^+ under the dotted action w*chi = w(chi+rho)-rho; nullopt when
/// chi+rho lies on a wall.
std::optional<Weight> dominant_dotted(const RootDatum& d, const Weight& chi);

Weight minus_w0(const RootDatum& d, const Weight& chi);

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& v);
std::vector<Coweight> weyl_orbit(const RootDatum& d, const Coweight& v);

/// lambda^T gram lambda.
Rat gram_norm2(const RootDatum& d, const QVec& lambda);

}  // namespace skms
