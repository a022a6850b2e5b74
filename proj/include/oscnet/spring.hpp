#pragma once

#include <optional>

#include "oscnet/types.hpp"

namespace oscnet {

/// Masses on a line between two walls (left wall at 0, right wall at
/// wall_gap). Spring i of the n-1 internal springs joins masses i and i+1;
/// one anchor spring ties each end mass to its wall. When the natural
/// lengths do not fit the gap the chain is pre-stressed and cutting an
/// internal spring shifts each segment to a new, biased equilibrium.
struct SpringChain {
  int n = 0;                // mass count
  Vector spring_constants;  // n-1 internal stiffnesses
  Vector natural_lengths;   // n+1 rest lengths: anchor, internals..., anchor
  double wall_stiffness = 1.0;
  double wall_gap = 1.0;

  static SpringChain uniform(int n, double stiffness, double natural_length,
                             double wall_gap);
};

struct SpringEquilibrium {
  Vector uncut;        // mass positions of the intact chain
  Vector cut;          // positions after the cut (empty when no cut)
  int cut_after = -1;  // index of the removed internal spring
  double left_mean_shift = 0.0;   // mean(cut) - mean(uncut) over masses 0..c
  double right_mean_shift = 0.0;  // same over masses c+1..n-1
};

/// Solves the linear force balance for the intact chain, and, when
/// cut_after is given (removing the spring between masses cut_after and
/// cut_after+1), for the two independently anchored segments.
SpringEquilibrium spring_equilibrium(const SpringChain& chain,
                                     std::optional<int> cut_after = {});

}  // namespace oscnet
