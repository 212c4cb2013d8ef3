#include "adlv/galleries.hpp"

namespace adlv {

namespace {

bool above(const RootSystem& R, const AffineElement& c, const Wall& h)
{
  return alcove_coords_fast(R, c)[h.root] >= h.k;
}

bool root_up(const RootSystem& R, const Orientation& o, int r)
{
  // w^{-1} alpha > 0
  IVec img = weyl_act_root(R, weyl_inv(R, o.w), R.pos_roots[r]);
  for (int v : img)
    if (v != 0) return v > 0;
  return true;
}

}  // namespace

Orientation standard_orientation(const RootSystem& R) { return {weyl_identity(R)}; }
Orientation opposite_orientation(const RootSystem& R) { return {longest_element(R)}; }

Gallery minimal_gallery(const RootSystem& R, const AffineElement& x)
{
  Gallery g{affine_identity(R), {}, false};
  for (int s : reduced_word_affine(R, x)) g.steps.push_back({s, StepKind::Cross});
  return g;
}

Word gallery_type(const Gallery& g)
{
  Word w;
  for (auto& s : g.steps) w.push_back(s.gen);
  return w;
}

std::vector<AffineElement> gallery_alcoves(const RootSystem& R, const Gallery& g)
{
  std::vector<AffineElement> out{g.first};
  for (auto& s : g.steps) {
    if (s.kind == StepKind::Cross)
      out.push_back(affine_mul(out.back(), affine_generator(R, s.gen)));
    else
      out.push_back(out.back());
  }
  return out;
}

AffineElement gallery_end(const RootSystem& R, const Gallery& g) { return gallery_alcoves(R, g).back(); }

int fold_count(const Gallery& g)
{
  int f = 0;
  for (auto& s : g.steps) f += s.kind == StepKind::Fold;
  return f;
}

Wall wall_of_step(const RootSystem& R, const AffineElement& c, int gen)
{
  AlcoveCoords a = alcove_coords_fast(R, c);
  AlcoveCoords b = alcove_coords_fast(R, affine_mul(c, affine_generator(R, gen)));
  for (size_t r = 0; r < a.size(); ++r)
    if (a[r] != b[r]) return {int(r), std::max(a[r], b[r])};
  throw Error("wall_of_step: adjacent alcoves coincide");
}

bool on_positive_side(const RootSystem& R, const Orientation& o, const AffineElement& c, const Wall& h)
{
  return above(R, c, h) == root_up(R, o, h.root);
}

int step_sign(const RootSystem& R, const Orientation& o, const AffineElement& c, int gen, StepKind kind)
{
  Wall h = wall_of_step(R, c, gen);
  bool pos = on_positive_side(R, o, c, h);
  if (kind == StepKind::Fold) return pos ? 1 : -1;
  return pos ? -1 : 1;  // crossing out of the negative side is positive
}

DimStats dim_gallery(const RootSystem& R, const Gallery& g, const Orientation& o)
{
  DimStats d;
  AffineElement c = g.first;
  for (size_t i = 0; i < g.steps.size(); ++i) {
    const Step& s = g.steps[i];
    int sign = step_sign(R, o, c, s.gen, s.kind);
    if (s.kind == StepKind::Fold) {
      if (sign < 0) throw NotPositivelyFolded(int(i) + 1);
      ++d.F;
    } else {
      ++d.C;
      (sign > 0 ? d.P : d.N) += 1;
      c = affine_mul(c, affine_generator(R, s.gen));
    }
  }
  d.dim = d.P + d.F;
  return d;
}

bool is_positively_folded(const RootSystem& R, const Gallery& g, const Orientation& o)
{
  try {
    dim_gallery(R, g, o);
    return true;
  } catch (const NotPositivelyFolded&) {
    return false;
  }
}

int alcove_dim(const RootSystem& R, const Orientation& o, const AffineElement& y)
{
  AlcoveCoords k = alcove_coords_fast(R, y);
  int d = 0;
  for (size_t r = 0; r < k.size(); ++r) {
    bool up = root_up(R, o, int(r));
    if (up && k[r] > 0) d += k[r];
    if (!up && k[r] < 0) d += -k[r];
  }
  return d;
}

Gallery fold_at(const Gallery& g, int i)
{
  if (i < 1 || i > int(g.steps.size())) throw Error("fold_at: index out of range");
  if (g.steps[i - 1].kind == StepKind::Fold) throw Error("fold_at: step already folded");
  Gallery h = g;
  h.steps[i - 1].kind = StepKind::Fold;
  return h;
}

Gallery unfold_at(const Gallery& g, int i)
{
  if (i < 1 || i > int(g.steps.size())) throw Error("unfold_at: index out of range");
  if (g.steps[i - 1].kind == StepKind::Cross) throw Error("unfold_at: step is a crossing");
  Gallery h = g;
  h.steps[i - 1].kind = StepKind::Cross;
  return h;
}

IVec start_vertex(const Gallery& g) { return g.first.lambda; }
IVec end_vertex(const RootSystem& R, const Gallery& g) { return gallery_end(R, g).lambda; }

int load_at_start(const RootSystem& R, const Gallery& g, const Orientation& o)
{
  if (!g.vertex_marked) throw Error("gallery is not vertex-marked");
  const IVec& p = g.first.lambda;
  int load = 0;
  for (int r = 0; r < R.num_positive_roots(); ++r)
    load += on_positive_side(R, o, g.first, {r, R.root_pairing(r, p)});
  return load;
}

int vertex_dim(const RootSystem& R, const Gallery& g, const Orientation& o)
{
  return load_at_start(R, g, o) + dim_gallery(R, g, o).dim;
}

Gallery act_finite(const FiniteWeylElement& v, const Gallery& g)
{
  Gallery h = g;
  h.first = affine_mul({IVec(g.first.lambda.size(), 0), v}, g.first);
  return h;
}

Orientation act_orientation(const FiniteWeylElement& v, const Orientation& o) { return {weyl_mul(v, o.w)}; }

Gallery translate(const RootSystem& R, const Gallery& g, const IVec& mu, bool extended)
{
  if (!extended && !in_coroot_lattice(R, mu))
    throw Error("translation " + format_vec(mu) + " is not in the coroot lattice");
  Gallery h = g;
  for (size_t i = 0; i < mu.size(); ++i) h.first.lambda[i] += mu[i];
  return h;
}

Gallery concatenate(const RootSystem& R, const Gallery& a, const Gallery& b)
{
  (void)R;
  Gallery h = a;
  h.steps.insert(h.steps.end(), b.steps.begin(), b.steps.end());
  return h;
}

}  // namespace adlv
