#pragma once

#include <string>
#include <vector>

#include "sympair/involution.hpp"

namespace sympair {

// A symmetric pair datum: the root system together with the validated
// involution.
struct PairSpec {
  RootSystemPtr rs;
  InvolutionSpec theta;
  std::string label;
};

PairSpec make_pair(RootSystemPtr rs, InvolutionSpec theta, std::string label = "");
PairSpec galois_split_pair(RootSystemPtr rs);

// One row of the open-orbit criterion check for a twisted involution w.
// The composite action a -> w(theta(a)) partitions the positive roots into
//   s1: moved but still positive,
//   s2: fixed,
//   s3: sent negative;
// the criterion holds when sum_{a in s3} (a + w theta(a)) vanishes.
struct StarRow {
  TwistedInvolution w;
  std::vector<int> s1, s2, s3; // positive root indices
  Weight s3_sum;
  bool holds = false;
};

struct StarReport {
  std::vector<StarRow> rows; // canonical twisted-involution order
  bool all_hold = true;
};

StarReport verify_star(const PairSpec& pair, const WeylGroup& group, int workers = 1);

} // namespace sympair
