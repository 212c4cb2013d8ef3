#include "adlv/root_operators.hpp"

#include <algorithm>

namespace adlv {

namespace {

// rebuild step form from an alcove sequence of the given type
Gallery from_alcoves(const RootSystem& R, const std::vector<AffineElement>& c, const Word& type)
{
  Gallery g{c[0], {}, true};
  for (size_t i = 1; i < c.size(); ++i) {
    int s = type[i - 1];
    if (c[i] == c[i - 1])
      g.steps.push_back({s, StepKind::Fold});
    else if (affine_mul(c[i - 1], affine_generator(R, s)) == c[i])
      g.steps.push_back({s, StepKind::Cross});
    else
      throw Error("root operator produced a sequence that is not a gallery of the same type");
  }
  return g;
}

Gallery surgery(const RootSystem& R, const Gallery& g, int alpha, int j, int k, int reflect_level, int shift)
{
  auto c = gallery_alcoves(R, g);
  AffineElement refl = affine_reflection(R, alpha - 1, reflect_level);
  IVec co = R.pos_coroots[alpha - 1];
  for (int& v : co) v *= shift;
  AffineElement tr = translation(R, co);
  for (int i = 0; i < int(c.size()); ++i) {
    if (i < j) continue;
    c[i] = i < k ? affine_mul(refl, c[i]) : affine_mul(tr, c[i]);
  }
  return from_alcoves(R, c, gallery_type(g));
}

}  // namespace

void check_operator_hypotheses(const RootSystem& R, const Gallery& g)
{
  if (!g.vertex_marked) throw Error("root operators need a vertex-marked gallery");
  for (int v : g.first.lambda)
    if (v != 0) throw Error("root operators need galleries starting at the origin");
  AffineElement x = affine_from_word(R, gallery_type(g));
  if (affine_length(R, x) != int(g.steps.size())) throw Error("gallery type is not reduced");
  if (x.w != longest_element(R) || !is_dominant(x.lambda) || !is_regular(R, x.lambda))
    throw Error("gallery type is not a minimal gallery to a dominant regular vertex");
  if (!is_positively_folded(R, g, standard_orientation(R)))
    throw Error("gallery is not positively folded for the standard orientation");
}

std::vector<std::optional<int>> face_levels(const RootSystem& R, const Gallery& g, int alpha)
{
  if (alpha < 1 || alpha > R.rank) throw Error("root operator index out of range");
  int r = alpha - 1;
  std::vector<std::optional<int>> lev;
  lev.push_back(R.root_pairing(r, g.first.lambda));
  AffineElement c = g.first;
  for (auto& s : g.steps) {
    Wall h = wall_of_step(R, c, s.gen);
    lev.push_back(h.root == r ? std::optional<int>(h.k) : std::nullopt);
    if (s.kind == StepKind::Cross) c = affine_mul(c, affine_generator(R, s.gen));
  }
  lev.push_back(R.root_pairing(r, c.lambda));
  return lev;
}

int m_value(const RootSystem& R, const Gallery& g, int alpha)
{
  check_operator_hypotheses(R, g);
  int m = 0;
  for (auto& l : face_levels(R, g, alpha))
    if (l) m = std::min(m, *l);
  return m;
}

bool in_operator_domain(const RootSystem& R, const Gallery& g)
{
  check_operator_hypotheses(R, g);
  auto cs = gallery_alcoves(R, g);
  for (int a = 1; a <= R.rank; ++a) {
    int m = 0;
    for (auto& l : face_levels(R, g, a))
      if (l) m = std::min(m, *l);
    for (auto& c : cs)
      if (alcove_coords_fast(R, c)[a - 1] < m) return false;
  }
  return true;
}

OperatorIndices e_indices(const RootSystem& R, const Gallery& g, int alpha)
{
  check_operator_hypotheses(R, g);
  auto lev = face_levels(R, g, alpha);
  OperatorIndices ix;
  for (auto& l : lev)
    if (l) ix.m = std::min(ix.m, *l);
  if (ix.m > -1) return ix;
  for (int i = 0; i < int(lev.size()); ++i)
    if (lev[i] && *lev[i] == ix.m) {
      ix.k = i;
      break;
    }
  for (int i = ix.k; i >= 0; --i)
    if (lev[i] && *lev[i] == ix.m + 1) {
      ix.j = i;
      break;
    }
  if (ix.j < 0) throw Error("e: no face at level m+1 before the first face at level m");
  ix.defined = true;
  return ix;
}

OperatorIndices f_indices(const RootSystem& R, const Gallery& g, int alpha)
{
  check_operator_hypotheses(R, g);
  auto lev = face_levels(R, g, alpha);
  OperatorIndices ix;
  for (auto& l : lev)
    if (l) ix.m = std::min(ix.m, *l);
  if (ix.m > *lev.back() - 1) return ix;
  for (int i = int(lev.size()) - 1; i >= 0; --i)
    if (lev[i] && *lev[i] == ix.m) {
      ix.j = i;
      break;
    }
  for (int i = ix.j; i < int(lev.size()); ++i)
    if (lev[i] && *lev[i] == ix.m + 1) {
      ix.k = i;
      break;
    }
  if (ix.k < 0) throw Error("f: no face at level m+1 after the last face at level m");
  ix.defined = true;
  return ix;
}

std::optional<Gallery> apply_e(const RootSystem& R, const Gallery& g, int alpha)
{
  auto ix = e_indices(R, g, alpha);
  if (!ix.defined) return std::nullopt;
  return surgery(R, g, alpha, ix.j, ix.k, ix.m + 1, +1);
}

std::optional<Gallery> apply_f(const RootSystem& R, const Gallery& g, int alpha)
{
  auto ix = f_indices(R, g, alpha);
  if (!ix.defined) return std::nullopt;
  return surgery(R, g, alpha, ix.j, ix.k, ix.m, -1);
}

int max_e(const RootSystem& R, const Gallery& g, int alpha)
{
  int count = 0;
  Gallery cur = g;
  while (auto next = apply_e(R, cur, alpha)) {
    cur = *next;
    ++count;
  }
  return count;
}

int max_f(const RootSystem& R, const Gallery& g, int alpha)
{
  int count = 0;
  Gallery cur = g;
  while (auto next = apply_f(R, cur, alpha)) {
    cur = *next;
    ++count;
  }
  return count;
}

}  // namespace adlv
