// Random well-sorted formulas and random natural deduction proofs.
#pragma once

#include <random>

#include "dispnet/formula.hpp"
#include "dispnet/nd.hpp"

namespace dispnet {

// np, s, n of sort 0 and inf of sort 1.
Signature random_signature();

// Random well-sorted formula of the given sort with at most depth nested
// connectives; sorts of subformulas stay at most max_sort.
Formula random_formula(std::mt19937_64& rng, int depth, int sort, int max_sort = 2, bool discontinuous = true);

struct RandomProofOptions {
  int max_depth = 6;
  int min_depth = 2;
  double detour_rate = 0.15;
  bool discontinuous = true;
};

// Proof checked by construction; its free hypotheses carry fresh words and
// are numbered in the order they occur in the conclusion string.
NDProof random_nd_proof(std::mt19937_64& rng, const RandomProofOptions& opt = {});

}  // namespace dispnet
