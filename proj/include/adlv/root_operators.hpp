#pragma once

#include "adlv/galleries.hpp"

#include <optional>

namespace adlv {

// Root operators e_alpha, f_alpha on vertex-to-vertex galleries starting at the
// origin and positively folded for the standard orientation. Roots are simple,
// given by index 1..n.

struct OperatorIndices {
  int m = 0;
  int j = -1;
  int k = -1;
  bool defined = false;
};

// alpha-level of every face p_0, p_1..p_n (panels), p_{n+1}; nullopt if the face
// is not contained in a hyperplane H_{alpha,k}
std::vector<std::optional<int>> face_levels(const RootSystem& R, const Gallery& g, int alpha);
// throws unless g satisfies the operator hypotheses
void check_operator_hypotheses(const RootSystem& R, const Gallery& g);

int m_value(const RootSystem& R, const Gallery& g, int alpha);
// no alcove lies below H_{alpha, m(alpha)} for any simple alpha. Every gallery reachable from
// the minimal one satisfies this; outside it the operator laws can fail (a fold flips sign).
bool in_operator_domain(const RootSystem& R, const Gallery& g);
OperatorIndices e_indices(const RootSystem& R, const Gallery& g, int alpha);
OperatorIndices f_indices(const RootSystem& R, const Gallery& g, int alpha);
std::optional<Gallery> apply_e(const RootSystem& R, const Gallery& g, int alpha);
std::optional<Gallery> apply_f(const RootSystem& R, const Gallery& g, int alpha);
int max_e(const RootSystem& R, const Gallery& g, int alpha);
int max_f(const RootSystem& R, const Gallery& g, int alpha);

}  // namespace adlv
