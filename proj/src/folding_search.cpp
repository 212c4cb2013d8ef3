#include "adlv/folding_search.hpp"

#include <array>
#include <limits>
#include <sstream>

namespace adlv {

namespace {

constexpr int kMaxRank = 8;

struct Elt {
  std::array<int, kMaxRank> lam{};
  int w = 0;
};

// Index-based alcove arithmetic over the materialized Weyl table.
struct Engine {
  const RootSystem& R;
  const WeylTable& T;
  int n, nr;
  std::vector<std::array<int, kMaxRank>> roots;

  explicit Engine(const RootSystem& rs) : R(rs), T(rs.weyl()), n(rs.rank), nr(rs.num_positive_roots())
  {
    roots.resize(nr);
    for (int r = 0; r < nr; ++r)
      for (int i = 0; i < n; ++i) roots[r][i] = R.pos_roots[r][i];
  }

  Elt from(const AffineElement& x) const
  {
    Elt e;
    for (int i = 0; i < n; ++i) e.lam[i] = x.lambda[i];
    e.w = T.find(x.w);
    return e;
  }
  AffineElement to(const Elt& e) const
  {
    AffineElement x{IVec(e.lam.begin(), e.lam.begin() + n), T.elems[e.w]};
    return x;
  }
  int pair(int r, const Elt& e) const
  {
    int s = 0;
    for (int i = 0; i < n; ++i) s += roots[r][i] * e.lam[i];
    return s;
  }
  int k(const Elt& e, int r) const { return pair(r, e) - T.inv_bit[e.w][r]; }
  Elt step(const Elt& e, int j) const
  {
    Elt f = e;
    if (j == 0) {
      const IVec& c = T.theta_coroot[e.w];
      for (int i = 0; i < n; ++i) f.lam[i] += c[i];
    }
    f.w = T.rmul[e.w][j];
    return f;
  }
  // wall of the j-panel of e: (root, level)
  std::pair<int, int> wall(const Elt& e, int j) const
  {
    int r = T.panel_root[e.w][j];
    int sign = T.panel_sign[e.w][j];
    int lev = pair(r, e);
    if (j == 0) lev += sign > 0 ? 1 : -1;
    return {r, lev};
  }
  int distance(const Elt& e, const std::vector<int>& K) const
  {
    int d = 0;
    for (int r = 0; r < nr; ++r) d += std::abs(k(e, r) - K[r]);
    return d;
  }
};

struct Dfs {
  const Engine& E;
  const SearchSpec& spec;
  std::vector<char> up;  // up[r]: positive side of H_{alpha_r,k} is above
  std::vector<int> K;    // target coordinates
  bool has_target = false;
  int fold_cap = std::numeric_limits<int>::max();
  int L = 0;
  std::vector<Step> steps;
  SearchStats stats;
  bool aborted = false;

  // maximisation state
  bool maximize = false;
  bool found = false;
  int best_obj = -1;
  int best_dim = -1;
  int best_F = 0;
  long long ties = 0;
  std::vector<Step> best_steps;
  Elt best_end;

  const GalleryVisitor* visit = nullptr;

  Dfs(const Engine& e, const SearchSpec& s) : E(e), spec(s)
  {
    int wi = E.T.find(s.orientation.w);
    up.resize(E.nr);
    for (int r = 0; r < E.nr; ++r) up[r] = !E.T.inv_bit[wi][r];
    if (s.target) {
      has_target = true;
      Elt t = E.from(*s.target);
      K.resize(E.nr);
      for (int r = 0; r < E.nr; ++r) K[r] = E.k(t, r);
    }
    if (s.prune_fold_bound) fold_cap = E.T.length[E.T.longest];
    if (s.max_folds) fold_cap = std::min(fold_cap, *s.max_folds);
    L = int(s.word.size());
    steps.resize(L);
  }

  void emit(const Elt& e, int P, int F)
  {
    int dim = P + F;
    if (maximize) {
      int obj = has_target ? F : dim;
      if (obj > best_obj) {
        found = true;
        best_obj = obj;
        best_dim = dim;
        best_F = F;
        ties = 1;
        best_steps = steps;
        best_end = e;
      } else if (obj == best_obj) {
        if (has_target && dim != best_dim)
          throw Error("internal: equal fold counts with different dimensions at a fixed endpoint");
        ++ties;
      }
      return;
    }
    Gallery g{spec.start ? *spec.start : affine_identity(E.R), steps, false};
    DimStats d{P, int(steps.size()) - F - P, F, int(steps.size()) - F, dim};
    (*visit)(g, d);
  }

  void run(int i, const Elt& e, int P, int F)
  {
    if (aborted) return;
    if (++stats.branches > spec.max_branches) {
      stats.exhaustive = false;
      aborted = true;
      return;
    }
    int remaining = L - i;
    int d = 0;
    if (has_target) {
      d = E.distance(e, K);
      if (spec.prune_distance && d > remaining) return;
    }
    if (i == L) {
      if (has_target && d != 0) return;
      emit(e, P, F);
      return;
    }
    if (maximize && spec.prune_bound && found) {
      int bound;
      if (has_target)
        bound = std::min(F + std::max(0, remaining - d), fold_cap);
      else
        bound = P + F + remaining;
      if (spec.count_maximal ? bound < best_obj : bound <= best_obj) return;
    }
    int j = spec.word[i];
    auto [r, lev] = E.wall(e, j);
    bool pos = (E.k(e, r) >= lev) == bool(up[r]);
    steps[i] = {j, StepKind::Cross};
    run(i + 1, E.step(e, j), P + (pos ? 0 : 1), F);
    if (pos && F < fold_cap) {
      steps[i] = {j, StepKind::Fold};
      run(i + 1, e, P, F + 1);
    }
  }
};

void check_reduced(const RootSystem& R, const Word& word)
{
  if (affine_length(R, affine_from_word(R, word)) != int(word.size()))
    throw Error("search word is not reduced");
}

}  // namespace

SearchStats enumerate_folded(const RootSystem& R, const SearchSpec& spec, const GalleryVisitor& visit)
{
  check_reduced(R, spec.word);
  Engine E(R);
  Dfs dfs(E, spec);
  dfs.visit = &visit;
  dfs.run(0, E.from(spec.start ? *spec.start : affine_identity(R)), 0, 0);
  return dfs.stats;
}

MaxDimResult max_dim_folded(const RootSystem& R, const SearchSpec& spec)
{
  check_reduced(R, spec.word);
  Engine E(R);
  Dfs dfs(E, spec);
  dfs.maximize = true;
  dfs.run(0, E.from(spec.start ? *spec.start : affine_identity(R)), 0, 0);
  MaxDimResult res;
  res.stats = dfs.stats;
  if (!dfs.found) return res;
  res.found = true;
  res.dim = dfs.best_dim;
  res.folds = dfs.best_F;
  res.witness = {spec.start ? *spec.start : affine_identity(R), dfs.best_steps, false};
  res.maximal_count = dfs.ties;
  return res;
}

std::map<AffineElement, EndpointResult> search_endpoints(const RootSystem& R, const SearchSpec& spec,
                                                        SearchStats* stats)
{
  std::map<AffineElement, EndpointResult> out;
  auto st = enumerate_folded(R, spec, [&](const Gallery& g, const DimStats& d) {
    AffineElement y = gallery_end(R, g);
    auto it = out.find(y);
    if (it == out.end()) {
      EndpointResult e;
      e.best_dim = d.dim;
      e.witness_folds = d.F;
      e.witness = g;
      e.maximal_count = 1;
      e.fold_counts = {d.F};
      e.maximal_fold_counts = {d.F};
      out.emplace(y, std::move(e));
      return;
    }
    EndpointResult& e = it->second;
    e.fold_counts.insert(d.F);
    if (d.dim > e.best_dim) {
      e.best_dim = d.dim;
      e.witness_folds = d.F;
      e.witness = g;
      e.maximal_count = 1;
      e.maximal_fold_counts = {d.F};
    } else if (d.dim == e.best_dim) {
      ++e.maximal_count;
      e.maximal_fold_counts.insert(d.F);
    }
  });
  if (stats) *stats = st;
  return out;
}

BraidReport braid_invariance_check(const RootSystem& R, const AffineElement& x, const Orientation& o,
                                   std::optional<AffineElement> target)
{
  BraidReport rep;
  using Summary = std::map<AffineElement, std::pair<int, std::set<int>>>;
  std::optional<Summary> ref;
  Word ref_word;
  for (const Word& w : all_reduced_words_affine(R, x)) {
    SearchSpec spec;
    spec.word = w;
    spec.orientation = o;
    spec.target = target;
    SearchStats st;
    auto ends = search_endpoints(R, spec, &st);
    rep.stats.branches += st.branches;
    rep.stats.exhaustive = rep.stats.exhaustive && st.exhaustive;
    Summary s;
    for (auto& [y, e] : ends) s[y] = {e.best_dim, e.fold_counts};
    ++rep.words_checked;
    if (!ref) {
      ref = s;
      ref_word = w;
    } else if (s != *ref) {
      rep.consistent = false;
      std::ostringstream os;
      os << "words differ:";
      for (int g : ref_word) os << ' ' << g;
      os << " vs";
      for (int g : w) os << ' ' << g;
      rep.detail = os.str();
      break;
    }
  }
  return rep;
}

}  // namespace adlv
