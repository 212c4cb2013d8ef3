#pragma once

#include "adlv/adlv.hpp"
#include "adlv/root_operators.hpp"

#include <string>

namespace adlv {

// Every construction re-scores what it builds and throws if a claimed count fails.

// c_f ~> c_f of type a reduced word for a0 = t^{2 rho} w0, positively folded for -phi_0,
// l(w0) folds, dim = l(t^rho)
Gallery build_sigma_a0(const RootSystem& R);
AffineElement a0_element(const RootSystem& R);

struct Gamma0 {
  Gallery gallery;    // c_f ~> t^mu c_f, type a reduced word for t^lambda w0
  Gallery tau_sharp;  // the LS-gallery before the final w0 action
  Gallery start;      // w0 gamma^sharp
  IVec coefficients;  // number of e_{alpha_i} applications
  int dim = 0;        // under -phi_0
};
Gamma0 build_gamma0(const RootSystem& R, const IVec& lambda, const IVec& mu);

// t^mu gamma appended to a minimal gallery c_f ~> t^mu c_f
Gallery forward_shift_gallery(const RootSystem& R, const Gallery& g, const Orientation& o, const IVec& mu);

enum class Provenance { Constructed, UnverifiedByConstruction };
struct Conjugated {
  Gallery gallery;
  Orientation orientation;  // phi_{sw}
  AffineElement type_element;
  int dim = 0;
  Provenance provenance = Provenance::Constructed;
  std::string note;
};
Conjugated conjugate_gallery(const RootSystem& R, const Gallery& sigma, const Orientation& o, int s);

struct Transported {
  Gallery gallery;
  Orientation orientation;
};
Transported transport_by_diagram_automorphism(const RootSystem& R, const Gallery& g, const Orientation& o,
                                              const DiagramAutomorphism& aut);

}  // namespace adlv
