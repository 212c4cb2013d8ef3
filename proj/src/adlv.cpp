#include "adlv/adlv.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace adlv {

namespace {

IVec two_rho(const RootSystem& R) { return IVec(R.rank, 2); }

IVec sub(const IVec& a, const IVec& b)
{
  IVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool is_zero(const IVec& v)
{
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// minimal length representative of the coset W_I z
FiniteWeylElement min_left_coset_rep(const RootSystem& R, const std::vector<int>& I, FiniteWeylElement z)
{
  int len = weyl_length(R, z);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : I) {
      auto y = weyl_mul(simple_reflection(R, i), z);
      int ly = weyl_length(R, y);
      if (ly < len) {
        z = y;
        len = ly;
        moved = true;
      }
    }
  }
  return z;
}

}  // namespace

TranslationClass translation_class(const RootSystem& R, const IVec& mu)
{
  TranslationClass t;
  t.mu = mu;
  t.mu_plus = dominant_rep(R, mu).dominant;
  t.mu_antidom = weyl_act(longest_element(R), t.mu_plus);
  t.correction = R.rho_pairing(t.mu_plus) - R.rho_pairing(mu);
  t.regular = is_regular(R, mu);
  return t;
}

int correction_literal(const RootSystem& R, const IVec& mu)
{
  IVec anti = antidominant_rep(R, mu);
  IVec s = mu;
  for (size_t i = 0; i < s.size(); ++i) s[i] += anti[i];
  return -R.rho_pairing(s);
}

AdlvAnswer adlv_dim_oracle(const RootSystem& R, const AffineElement& x, const IVec& mu, const OracleOptions& opt)
{
  if (!in_coroot_lattice(R, mu)) throw Error("b must be a translation by a coroot-lattice element");
  const WeylTable& T = R.weyl();
  AdlvAnswer ans;
  ans.b = translation_class(R, mu);
  Word word = reduced_word_affine(R, x);
  int best = -1;
  for (int wi = 0; wi < T.size(); ++wi) {
    OrientationResult res;
    res.w = T.elems[wi];
    res.orientation = {T.elems[T.mul(wi, T.longest)]};  // w applied to -phi_0
    AffineElement target = translation(R, weyl_act(res.w, mu));
    SearchSpec spec;
    spec.word = word;
    spec.orientation = res.orientation;
    spec.target = target;
    spec.max_branches = opt.max_branches;
    spec.prune_distance = spec.prune_fold_bound = spec.prune_bound = opt.prune;
    MaxDimResult m = max_dim_folded(R, spec);
    ans.branches += m.stats.branches;
    ans.exhaustive = ans.exhaustive && m.stats.exhaustive;
    if (m.found) {
      res.found = true;
      res.raw_dim = m.dim;
      res.folds = m.folds;
      res.maximal_count = m.maximal_count;
      res.witness = m.witness;
      if (m.dim > best) {
        best = m.dim;
        ans.orientation = res.orientation;
        ans.witness = m.witness;
        ans.target = target;
      }
    }
    ans.per_orientation.push_back(std::move(res));
  }
  if (best >= 0) {
    ans.nonempty = true;
    ans.witness_raw_dim = best;
    ans.dim = best - ans.b.correction;
  }
  return ans;
}

int rescore_witness(const RootSystem& R, const AdlvAnswer& a, const AffineElement& x)
{
  if (!a.witness || !a.orientation || !a.target) throw Error("answer carries no witness");
  if (affine_from_word(R, gallery_type(*a.witness)) != x) throw Error("witness has the wrong type");
  if (gallery_end(R, *a.witness) != *a.target) throw Error("witness ends at the wrong alcove");
  return dim_gallery(R, *a.witness, *a.orientation).dim - a.b.correction;
}

FiniteWeylElement reuman_element(const RootSystem& R, const AffineElement& x)
{
  FiniteWeylElement u = chamber_and_shrunken(R, x).chamber;
  return weyl_mul(weyl_mul(weyl_inv(R, u), x.w), u);
}

std::optional<int> reuman_predict(const RootSystem& R, const AffineElement& x)
{
  if (!chamber_and_shrunken(R, x).shrunken) throw NotShrunken();
  FiniteWeylElement e = reuman_element(R, x);
  if (!has_full_support(R, e)) return std::nullopt;
  int s = affine_length(R, x) + weyl_length(R, e);
  if (s % 2) throw Error("internal: odd Reuman dimension numerator");
  return s / 2;
}

FiniteWeylElement eta_sigma(const RootSystem& R, const AffineElement& x)
{
  DominantRep d = dominant_rep(R, x.lambda);
  std::vector<int> I;
  for (int i = 0; i < R.rank; ++i)
    if (d.dominant[i] == 0) I.push_back(i + 1);
  FiniteWeylElement vp = min_left_coset_rep(R, I, weyl_mul(weyl_inv(R, d.v_min), x.w));
  FiniteWeylElement v = weyl_mul(x.w, weyl_inv(R, vp));
  return weyl_mul(vp, v);
}

int strip_dim_predict(const RootSystem& R, const AffineElement& x)
{
  int s = affine_length(R, x) + weyl_length(R, eta_sigma(R, x));
  if (s % 2) throw Error("internal: odd virtual dimension numerator");
  return s / 2;
}

std::string ShrunkenHypotheses::report() const
{
  std::ostringstream os;
  os << "mu_dominant=" << mu_dominant << " star_in_shrunken=" << star_in_shrunken << " b_in_hull=" << b_in_hull
     << " shifted_in_shrunken=" << shifted_in_shrunken << " negative_cone=" << negative_cone
     << " reuman=" << reuman;
  return os.str();
}

ShrunkenHypotheses shrunken_hypotheses(const RootSystem& R, const AffineElement& x, const IVec& mu)
{
  ShrunkenHypotheses h;
  FiniteWeylElement id = weyl_identity(R);
  h.mu_dominant = is_dominant(mu);
  h.star_in_shrunken = star_in_shrunken(R, x.lambda, id);
  h.b_in_hull = in_convex_hull(R, translation(R, mu), x);
  IVec neg = mu;
  for (int& v : neg) v = -v;
  ChamberInfo c = chamber_and_shrunken(R, affine_mul(translation(R, neg), x));
  h.shifted_in_shrunken = c.shrunken && is_identity(c.chamber);
  h.negative_cone = negative_cone_member(R, mu, sub(x.lambda, two_rho(R)));
  h.reuman = has_full_support(R, x.w);
  return h;
}

ShrunkenPrediction shrunken_translation_predict(const RootSystem& R, const AffineElement& x, const IVec& mu)
{
  ShrunkenPrediction p;
  p.hyp = shrunken_hypotheses(R, x, mu);
  if (!p.hyp.all()) return p;
  auto d = reuman_predict(R, x);
  if (d) p.dim = *d - R.rho_pairing(mu);
  return p;
}

ForwardShift forward_shift_bound(const RootSystem& R, const AffineElement& x, const IVec& mu,
                                 const OracleOptions& opt)
{
  ForwardShift f;
  AffineElement shifted = affine_mul(translation(R, mu), x);
  f.hypothesis = in_convex_hull(R, translation(R, mu), shifted);
  if (!f.hypothesis) return f;
  AdlvAnswer a = adlv_dim_oracle(R, x, IVec(R.rank, 0), opt);
  if (!a.nonempty) return f;
  f.base_dim = a.dim;
  f.lower_bound = *a.dim - translation_class(R, mu).correction;
  return f;
}

int conjugation_correction(const RootSystem& R, const FiniteWeylElement& w, const FiniteWeylElement& u)
{
  int c = 0;
  FiniteWeylElement cur = w;
  int len = weyl_length(R, cur);
  for (int s : weyl_reduced_word(R, u)) {
    FiniteWeylElement next = weyl_mul(cur, simple_reflection(R, s));
    int ln = weyl_length(R, next);
    c += std::max(0, len - ln);
    cur = next;
    len = ln;
  }
  return c;
}

ConjugationBound conjugation_bound(const RootSystem& R, const AffineElement& x, const FiniteWeylElement& u,
                                   const IVec& mu)
{
  ConjugationBound b;
  b.hypothesis = star_in_shrunken(R, x.lambda, weyl_identity(R));
  if (!b.hypothesis) return b;
  AffineElement uu = finite_part(R, u);
  AffineElement y = affine_mul(affine_mul(affine_inv(R, uu), x), uu);
  int diff = affine_length(R, y) - affine_length(R, x);
  if (diff % 2) throw Error("internal: odd length difference under conjugation");
  b.shift = diff / 2;
  b.equality = is_zero(mu);
  return b;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& R)
{
  int n = R.rank;
  IMat a(n + 1, IVec(n + 1, 0));
  a[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i + 1][j + 1] = R.cartan[i][j];
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += R.highest_root[i] * R.cartan[i][j];
    a[0][j + 1] = -s;
    a[j + 1][0] = -R.highest_coroot[j];
  }
  std::vector<DiagramAutomorphism> out;
  DiagramAutomorphism p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      for (int j = 0; j <= n && ok; ++j) ok = a[p[i]][p[j]] == a[i][j];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

AffineElement apply_automorphism(const RootSystem& R, const DiagramAutomorphism& g, const AffineElement& x)
{
  Word w = reduced_word_affine(R, x);
  for (int& s : w) s = g[s];
  return affine_from_word(R, w);
}

Orientation transport_orientation(const RootSystem& R, const DiagramAutomorphism& g, const Orientation& o)
{
  // linear part on directions: alpha_i -> direction of a_{g(i)}, with a_0 pointing along -theta.
  // The chamber at infinity w C_0 is determined by {beta : w^{-1} beta > 0}; carry that set over.
  int n = R.rank;
  auto dir = [&](int i) {
    if (i > 0) {
      IVec e(n, 0);
      e[i - 1] = 1;
      return e;
    }
    IVec t = R.highest_root;
    for (int& v : t) v = -v;
    return t;
  };
  auto lin = [&](const IVec& beta) {
    IVec out(n, 0);
    for (int i = 0; i < n; ++i) {
      IVec d = dir(g[i + 1]);
      for (int j = 0; j < n; ++j) out[j] += beta[i] * d[j];
    }
    return out;
  };
  auto positive = [](const IVec& v) { return std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; }); };
  auto side = [&](const FiniteWeylElement& w) {
    std::set<IVec> s;
    FiniteWeylElement wi = weyl_inv(R, w);
    for (const IVec& a : R.pos_roots) {
      IVec na = a;
      for (int& v : na) v = -v;
      s.insert(positive(weyl_act_root(R, wi, a)) ? a : na);
    }
    return s;
  };
  std::set<IVec> want;
  for (const IVec& b : side(o.w)) want.insert(lin(b));
  for (const FiniteWeylElement& w : R.weyl().elems)
    if (side(w) == want) return {w};
  throw Error("transport_orientation: no chamber matches");
}

bool class_shrunken_hypotheses(const RootSystem& R, const AffineElement& x, const IVec& mu)
{
  return is_regular(R, mu) && shrunken_hypotheses(R, x, mu).all();
}

ClassDegree class_poly_degree(const RootSystem& R, const AffineElement& x, const IVec& mu, const OracleOptions& opt)
{
  if (!is_regular(R, mu)) throw Error("NotRegular: b has a nontrivial stabilizer");
  AdlvAnswer a = adlv_dim_oracle(R, x, mu, opt);
  if (!a.nonempty) throw Error("empty variety: class polynomial vanishes");
  ClassDegree d;
  d.degree = 2 * (*a.dim + R.rho_pairing(a.b.mu_plus)) - affine_length(R, x);
  d.hypotheses = class_shrunken_hypotheses(R, x, mu);
  if (d.hypotheses) d.predicted = weyl_length(R, x.w);
  return d;
}

int finite_reflection_length(const RootSystem& R, const FiniteWeylElement& w)
{
  const WeylTable& T = R.weyl();
  std::vector<int> refl;
  for (int r = 0; r < R.num_positive_roots(); ++r) refl.push_back(T.find(root_reflection(R, r)));
  std::vector<int> dist(T.size(), -1);
  std::vector<int> queue{T.identity};
  dist[T.identity] = 0;
  for (size_t q = 0; q < queue.size(); ++q) {
    int a = queue[q];
    for (int r : refl) {
      int b = T.mul(a, r);
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist[T.find(w)];
}

bool is_coxeter_element(const RootSystem& R, const FiniteWeylElement& w)
{
  return weyl_length(R, w) == R.rank && has_full_support(R, w);
}

int reflection_length_bruteforce(const RootSystem& R, const AffineElement& x, int level_bound)
{
  if (R.rank > 3) throw Error("reflection length brute force is limited to rank <= 3");
  const WeylTable& T = R.weyl();
  int n = R.rank;
  int K = level_bound >= 0 ? level_bound : affine_length(R, x) + 2;
  int N = T.size();
  // finite multiplication and action tables
  std::vector<int> mul(N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) mul[a * N + b] = T.index.at(weyl_mul(T.elems[a], T.elems[b]).matrix);
  struct E {
    int l[3];
    int w;
  };
  auto act = [&](int w, const int* v, int* out) {
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += T.elems[w].matrix[i][j] * v[j];
      out[i] = s;
    }
  };
  auto times = [&](const E& a, const E& b) {
    E c{};
    int t[3] = {0, 0, 0};
    act(a.w, b.l, t);
    for (int i = 0; i < n; ++i) c.l[i] = a.l[i] + t[i];
    c.w = mul[a.w * N + b.w];
    return c;
  };
  auto key = [&](const E& e) {
    unsigned long long k = (unsigned long long)e.w;
    for (int i = 0; i < n; ++i) k = k * 8192ull + (unsigned long long)(e.l[i] + 4096);
    return k;
  };
  auto inv = [&](const E& e) {
    E r{};
    r.w = T.inverse[e.w];
    int t[3];
    act(r.w, e.l, t);
    for (int i = 0; i < n; ++i) r.l[i] = -t[i];
    return r;
  };
  std::vector<E> refl;
  for (int r = 0; r < R.num_positive_roots(); ++r)
    for (int k = -K; k <= K; ++k) {
      AffineElement s = affine_reflection(R, r, k);
      E e{};
      for (int i = 0; i < n; ++i) e.l[i] = s.lambda[i];
      e.w = T.find(s.w);
      refl.push_back(e);
    }
  E target{};
  for (int i = 0; i < n; ++i) target.l[i] = x.lambda[i];
  target.w = T.find(x.w);
  E one{};
  one.w = T.identity;
  if (key(target) == key(one)) return 0;
  int half = n;  // products of up to n reflections are tabulated
  std::vector<std::unordered_set<unsigned long long>> S(half + 1);
  std::vector<std::vector<E>> layer(half + 1);
  S[0].insert(key(one));
  layer[0].push_back(one);
  for (int d = 1; d <= half; ++d)
    for (const E& a : layer[d - 1])
      for (const E& r : refl) {
        E b = times(a, r);
        auto kb = key(b);
        if (S[d].insert(kb).second) layer[d].push_back(b);
      }
  int parity = affine_length(R, x) % 2;
  for (int d = 1; d <= 2 * n; ++d) {
    if (d % 2 != parity) continue;
    if (d <= half) {
      if (S[d].count(key(target))) return d;
      continue;
    }
    for (const E& y : layer[d - half])
      if (S[half].count(key(times(inv(y), target)))) return d;
  }
  throw Error("reflection length exceeds 2n within the level bound");
}

ReflectionBounds reflection_length_bounds(const RootSystem& R, const AffineElement& x, const OracleOptions& opt)
{
  ReflectionBounds b;
  b.lo = finite_reflection_length(R, x.w);
  b.hi = 2 * R.rank;
  b.source = "general";
  ChamberInfo c = chamber_and_shrunken(R, x);
  if (c.shrunken) {
    FiniteWeylElement e = reuman_element(R, x);
    if (has_full_support(R, e)) {
      b.hi = weyl_length(R, e);
      b.source = "shrunken";
    }
    return b;
  }
  if (adlv_dim_oracle(R, x, IVec(R.rank, 0), opt).nonempty) {
    b.hi = weyl_length(R, eta_sigma(R, x));
    b.source = "strip";
  }
  return b;
}

}  // namespace adlv
