#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include "gardner/montecarlo.hpp"

namespace gardner {

// 17 significant digits: parse(print(x)) == x for every finite double.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  os << "axis_value,p_feasible,n_trials,n_undecided,wilson_halfwidth\n";
  for (std::size_t k = 0; k < sweep.grid.size(); ++k) {
    os << format_g17(sweep.grid[k]) << ',' << format_g17(sweep.p_feasible[k]) << ','
       << sweep.n_trials[k] << ',' << sweep.n_undecided[k] << ','
       << format_g17(sweep.wilson_halfwidth[k]) << '\n';
  }
}

}  // namespace gardner
