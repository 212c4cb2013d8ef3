#pragma once

#include "adlv/affine_weyl.hpp"

#include <vector>

namespace adlv {

enum class StepKind { Cross, Fold };

struct Step {
  int gen = 0;
  StepKind kind = StepKind::Cross;
  bool operator==(const Step&) const = default;
};

// Alcove sequence c_0 = first, c_i = c_{i-1} s_gen (CROSS) or c_{i-1} (FOLD).
// When vertex_marked, p_0 = first * 0 and p_{n+1} = last * 0.
struct Gallery {
  AffineElement first;
  std::vector<Step> steps;
  bool vertex_marked = false;
  bool operator==(const Gallery&) const = default;
};

// phi_w^partial: the positive side of H_{alpha,k} is {<alpha,.> > k} iff w^{-1} alpha > 0
struct Orientation {
  FiniteWeylElement w;
  bool operator==(const Orientation&) const = default;
};

struct Wall {
  int root = 0;  // positive root index
  int k = 0;
  bool operator==(const Wall&) const = default;
};

struct DimStats {
  int P = 0, N = 0, F = 0, C = 0, dim = 0;
  bool operator==(const DimStats&) const = default;
};

struct NotPositivelyFolded : Error {
  int index;
  explicit NotPositivelyFolded(int i)
      : Error("fold at step " + std::to_string(i) + " is not positive"), index(i) {}
};

Orientation standard_orientation(const RootSystem& R);
Orientation opposite_orientation(const RootSystem& R);  // -phi_0 = phi_{w0}

Gallery minimal_gallery(const RootSystem& R, const AffineElement& x);  // from c_f, lex-least word
Word gallery_type(const Gallery& g);
std::vector<AffineElement> gallery_alcoves(const RootSystem& R, const Gallery& g);
AffineElement gallery_end(const RootSystem& R, const Gallery& g);
int fold_count(const Gallery& g);

Wall wall_of_step(const RootSystem& R, const AffineElement& c, int gen);
bool on_positive_side(const RootSystem& R, const Orientation& o, const AffineElement& c, const Wall& h);
int step_sign(const RootSystem& R, const Orientation& o, const AffineElement& c, int gen, StepKind kind);

DimStats dim_gallery(const RootSystem& R, const Gallery& g, const Orientation& o);
bool is_positively_folded(const RootSystem& R, const Gallery& g, const Orientation& o);
// positive crossings of any minimal gallery c_f -> y c_f
int alcove_dim(const RootSystem& R, const Orientation& o, const AffineElement& y);

Gallery fold_at(const Gallery& g, int i);    // 1-based step index
Gallery unfold_at(const Gallery& g, int i);

int load_at_start(const RootSystem& R, const Gallery& g, const Orientation& o);
int vertex_dim(const RootSystem& R, const Gallery& g, const Orientation& o);
IVec start_vertex(const Gallery& g);
IVec end_vertex(const RootSystem& R, const Gallery& g);

Gallery act_finite(const FiniteWeylElement& v, const Gallery& g);
Orientation act_orientation(const FiniteWeylElement& v, const Orientation& o);
// `extended` permits coweights outside R^vee (geometric translations inside constructions)
Gallery translate(const RootSystem& R, const Gallery& g, const IVec& mu, bool extended = false);
Gallery concatenate(const RootSystem& R, const Gallery& a, const Gallery& b);  // b is re-based at end of a

}  // namespace adlv
