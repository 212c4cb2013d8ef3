#include "adlv/constructions.hpp"

#include <algorithm>
#include <set>

namespace adlv {

namespace {

IVec vsub(IVec a, const IVec& b)
{
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

void append(Gallery& g, const Word& w, StepKind kind)
{
  for (int s : w) g.steps.push_back({s, kind});
}

void require(bool ok, const std::string& what)
{
  if (!ok) throw Error("construction check failed: " + what);
}

bool reduced(const RootSystem& R, const Word& w)
{
  return affine_length(R, affine_from_word(R, w)) == int(w.size());
}

std::optional<Gallery> search_gallery(const RootSystem& R, const Word& word, const Orientation& o,
                                      const AffineElement& target)
{
  SearchSpec spec;
  spec.word = word;
  spec.orientation = o;
  spec.target = target;
  spec.count_maximal = false;
  auto m = max_dim_folded(R, spec);
  if (!m.found) return std::nullopt;
  return m.witness;
}

int rho_length(const RootSystem& R)
{
  int s = 0;
  for (int h : R.heights) s += h;
  return s;
}

// most negative m first, then index; memoized DFS on the remaining counts
std::optional<Gallery> schedule_operators(const RootSystem& R, const Gallery& g, IVec left,
                                          std::set<IVec>* dead = nullptr)
{
  std::set<IVec> local;
  if (!dead) dead = &local;
  if (std::all_of(left.begin(), left.end(), [](int v) { return v == 0; })) return g;
  if (dead->count(left)) return std::nullopt;
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < R.rank; ++i)
    if (left[i] > 0) {
      int m = m_value(R, g, i + 1);
      if (m <= -2) order.push_back({m, i});
    }
  std::sort(order.begin(), order.end());
  for (auto [m, i] : order) {
    auto next = apply_e(R, g, i + 1);
    if (!next) continue;
    --left[i];
    if (auto done = schedule_operators(R, *next, left, dead)) return done;
    ++left[i];
  }
  dead->insert(left);
  return std::nullopt;
}

}  // namespace

AffineElement a0_element(const RootSystem& R) { return make_affine(R, IVec(R.rank, 2), longest_element(R)); }

Gallery build_sigma_a0(const RootSystem& R)
{
  // A sits just below the walls H_{alpha, ht(alpha)}, B just above; all l(w0) folds
  // happen in panels of A, which lies on the positive side of each of them for -phi_0
  IVec hA = R.heights, hB = R.heights;
  for (int& v : hA) v -= 1;
  AffineElement A = alcove_from_coords(R, hA);
  AffineElement B = alcove_from_coords(R, hB);
  AffineElement a0 = a0_element(R);

  Gallery g{affine_identity(R), {}, false};
  append(g, reduced_word_affine(R, A), StepKind::Cross);
  append(g, reduced_word_affine(R, affine_mul(affine_inv(R, A), B)), StepKind::Fold);
  append(g, reduced_word_affine(R, affine_mul(affine_inv(R, B), a0)), StepKind::Cross);

  Word type = gallery_type(g);
  require(affine_from_word(R, type) == a0, "sigma type evaluates to a0");
  require(reduced(R, type), "sigma type is reduced");
  require(gallery_end(R, g) == affine_identity(R), "sigma returns to the base alcove");
  require(fold_count(g) == weyl_length(R, longest_element(R)), "sigma has l(w0) folds");
  DimStats d = dim_gallery(R, g, opposite_orientation(R));
  require(d.dim == rho_length(R), "dim sigma = l(t^rho)");
  return g;
}

Gamma0 build_gamma0(const RootSystem& R, const IVec& lambda, const IVec& mu)
{
  FiniteWeylElement w0 = longest_element(R);
  AffineElement x0 = make_affine(R, lambda, w0);
  ChamberInfo ch = chamber_and_shrunken(R, x0);
  if (!is_identity(ch.chamber) || !ch.shrunken)
    throw Error("gamma0: t^lambda w0 c_f is not in the shrunken dominant chamber");
  if (!in_coroot_lattice(R, mu) || !is_dominant(mu)) throw Error("gamma0: mu must be dominant in R^vee");
  IVec base = vsub(lambda, IVec(R.rank, 2));
  if (!negative_cone_member(R, mu, base)) throw Error("gamma0: mu is not in the negative cone at lambda - 2rho");

  Gallery sigma = build_sigma_a0(R);
  Gallery gamma = minimal_gallery(R, translation(R, base));
  gamma = concatenate(R, gamma, sigma);
  require(affine_from_word(R, gallery_type(gamma)) == x0, "gamma has type x0");
  require(reduced(R, gallery_type(gamma)), "gamma type is reduced");

  Gallery sharp = gamma;
  sharp.vertex_marked = true;
  Gamma0 out;
  out.start = act_finite(w0, sharp);
  require(is_positively_folded(R, out.start, standard_orientation(R)), "w0 gamma^sharp positively folded");

  // end vertex of tau^sharp is w0 mu, so that w0 tau^sharp ends at mu
  IVec shift = vsub(weyl_act(w0, mu), end_vertex(R, out.start));
  auto c = coroot_coefficients(R, shift);
  if (!c || std::any_of(c->begin(), c->end(), [](int v) { return v < 0; }))
    throw Error("gamma0: endpoint shift is not a nonnegative combination of simple coroots");
  out.coefficients = *c;

  // an application of e_alpha keeps the first alcove w0 c_f iff m(alpha) <= -2 at that moment;
  // the counts alone do not guarantee this for every order, so schedule them
  std::optional<Gallery> tau = schedule_operators(R, out.start, out.coefficients);
  if (!tau) throw Error("gamma0: no order of the root operators keeps the first alcove fixed");
  out.tau_sharp = *tau;
  const Gallery& t = *tau;
  int target_dim = R.rho_pairing(vsub(lambda, mu));
  int lw0 = weyl_length(R, w0);
  require(end_vertex(R, t) == weyl_act(w0, mu), "tau^sharp ends at w0 mu");
  require(t.first == finite_part(R, w0), "tau^sharp starts at w0 c_f");
  require(vertex_dim(R, t, standard_orientation(R)) == target_dim, "tau^sharp is an LS-gallery");
  require(fold_count(t) == lw0, "tau^sharp keeps l(w0) folds");

  Gallery g0 = act_finite(w0, t);
  g0.vertex_marked = false;
  require(g0.first == affine_identity(R), "gamma0 starts at c_f");
  require(gallery_end(R, g0) == translation(R, mu), "gamma0 ends at t^mu c_f");
  DimStats d = dim_gallery(R, g0, opposite_orientation(R));
  require(d.F == lw0, "gamma0 has l(w0) folds");
  require(d.dim == target_dim, "dim gamma0 = <rho, lambda - mu>");
  out.gallery = g0;
  out.dim = d.dim;
  return out;
}

Gallery forward_shift_gallery(const RootSystem& R, const Gallery& g, const Orientation& o, const IVec& mu)
{
  if (g.first != affine_identity(R) || gallery_end(R, g) != affine_identity(R))
    throw Error("forward shift: gallery must run c_f ~> c_f");
  Gallery out = minimal_gallery(R, translation(R, mu));
  out = concatenate(R, out, g);
  if (!reduced(R, gallery_type(out)))
    throw Error("forward shift: t^mu c_f is not in the convex hull of c_f and the shifted type alcove");
  DimStats d0 = dim_gallery(R, g, o);
  DimStats d = dim_gallery(R, out, o);
  require(gallery_end(R, out) == translation(R, mu), "shifted gallery ends at t^mu c_f");
  require(d.dim == d0.dim + alcove_dim(R, o, translation(R, mu)), "dimension is additive");
  return out;
}

Conjugated conjugate_gallery(const RootSystem& R, const Gallery& sigma, const Orientation& o, int s)
{
  if (s < 1 || s > R.rank) throw Error("conjugation needs a finite simple reflection");
  if (sigma.first != affine_identity(R)) throw Error("conjugation: gallery must start at c_f");
  AffineElement end = gallery_end(R, sigma);
  if (!is_translation(end)) throw Error("conjugation: gallery must end at a translation alcove");
  Word type = gallery_type(sigma);
  AffineElement x = affine_from_word(R, type);
  FiniteWeylElement u = chamber_and_shrunken(R, x).chamber;
  FiniteWeylElement sv = simple_reflection(R, s);
  if (weyl_length(R, weyl_mul(sv, u)) <= weyl_length(R, u)) throw Error("conjugation: l(su) <= l(u)");
  AffineElement S = affine_generator(R, s);
  AffineElement y = affine_mul(affine_mul(S, x), S);
  int lx = affine_length(R, x), ly = affine_length(R, y);
  if (ly == lx - 2) throw Error("internal: l(sxs) = l(x) - 2 under the hypotheses");

  Conjugated out;
  out.orientation = {weyl_mul(sv, o.w)};
  AffineElement target = translation(R, weyl_act(sv, end.lambda));
  Gallery g{affine_identity(R), {{s, StepKind::Cross}}, false};

  if (ly == lx + 2) {
    append(g, type, StepKind::Cross);
    for (size_t i = 0; i < sigma.steps.size(); ++i) g.steps[i + 1] = sigma.steps[i];
    g.steps.push_back({s, StepKind::Cross});
    out.type_element = y;
  } else {
    Gallery base = sigma;
    if (type.empty() || type.back() != s) {
      // refold along a braid-equivalent word ending in s; max dim at the endpoint is word independent
      std::optional<Gallery> alt;
      for (const Word& w : all_reduced_words_affine(R, x))
        if (!w.empty() && w.back() == s) {
          alt = search_gallery(R, w, o, end);
          break;
        }
      if (!alt) {
        out.provenance = Provenance::UnverifiedByConstruction;
        out.note = "no reduced word of x ends in s";
        auto found = search_gallery(R, reduced_word_affine(R, y), out.orientation, target);
        if (!found) throw Error("conjugation: no positively folded gallery to t^{s mu}");
        out.gallery = *found;
        out.type_element = y;
        out.dim = dim_gallery(R, out.gallery, out.orientation).dim;
        return out;
      }
      if (dim_gallery(R, *alt, o).dim < dim_gallery(R, sigma, o).dim)
        throw Error("internal: braid-equivalent word lost dimension");
      base = *alt;
      out.note = "refolded along a braid-equivalent word";
    }
    Step last = base.steps.back();
    base.steps.pop_back();
    g.steps.insert(g.steps.end(), base.steps.begin(), base.steps.end());
    if (last.kind == StepKind::Fold) g.steps.push_back({s, StepKind::Cross});
    out.type_element = affine_from_word(R, gallery_type(g));
  }
  out.gallery = g;
  require(reduced(R, gallery_type(g)), "conjugated type is reduced");
  require(gallery_end(R, g) == target, "conjugated gallery ends at t^{s mu} c_f");
  out.dim = dim_gallery(R, g, out.orientation).dim;
  return out;
}

Transported transport_by_diagram_automorphism(const RootSystem& R, const Gallery& g, const Orientation& o,
                                              const DiagramAutomorphism& aut)
{
  Transported t;
  t.gallery = g;
  t.gallery.first = apply_automorphism(R, aut, g.first);
  for (auto& st : t.gallery.steps) st.gen = aut[st.gen];
  t.orientation = transport_orientation(R, aut, o);
  require(dim_gallery(R, t.gallery, t.orientation) == dim_gallery(R, g, o), "transport preserves counts");
  return t;
}

}  // namespace adlv
