#pragma once

#include <optional>
#include <vector>

#include "skms/linalg.hpp"
#include "skms/rat.hpp"

namespace skms {

// Exact linear feasibility via Fourier-Motzkin elimination. Supports strict
// inequalities and equations, returns exact rational witnesses. Intended for
// desk-scale systems (dimension and constraint counts in the low dozens).

enum class Rel { Le, Lt, Eq };

struct LinCon {
  QVec a;  // a . x  rel  b
  Rat b;
  Rel rel;
};

struct LinSystem {
  size_t dim = 0;
  std::vector<LinCon> cons;

  void add(QVec a, Rat b, Rel rel) { cons.push_back({std::move(a), std::move(b), rel}); }
};

bool lp_feasible(const LinSystem& sys);

/// Exact witness of the (possibly open) solution set, or nullopt if empty.
std::optional<QVec> lp_point(const LinSystem& sys);

struct VarRange {
  bool feasible = false;
  std::optional<Rat> lo;  // absent = unbounded below
  bool lo_strict = false;
  std::optional<Rat> hi;
  bool hi_strict = false;
};

/// Exact range of objective . x over the solution set.
VarRange lp_range(const LinSystem& sys, const QVec& objective);

}  // namespace skms
