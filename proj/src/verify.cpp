#include "adlv/verify.hpp"

#include "adlv/constructions.hpp"
#include "adlv/root_operators.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace adlv {

namespace {

struct Cases {
  Json list = Json::array();
  int pass = 0, fail = 0, skip = 0;

  void add(const std::string& name, bool ok, const std::string& detail = "")
  {
    list.push_back({{"case", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    (ok ? pass : fail) += 1;
  }
  void skipped(const std::string& name, const std::string& detail)
  {
    list.push_back({{"case", name}, {"status", "skip"}, {"detail", detail}});
    ++skip;
  }
};

OracleOptions oracle_opts(const VerifyOptions& opt)
{
  OracleOptions o;
  o.max_branches = opt.max_branches;
  return o;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "empty"; }

IVec neg(IVec v)
{
  for (int& c : v) c = -c;
  return v;
}

IVec add(IVec a, const IVec& b)
{
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<IVec> orbit(const RootSystem& R, const IVec& mu)
{
  std::vector<IVec> out;
  for (auto& w : R.weyl().elems) out.push_back(weyl_act(w, mu));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// dominant coroot-lattice points in the box 0 <= c_i <= bound
std::vector<IVec> dominant_box(const RootSystem& R, const IVec& bound)
{
  std::vector<IVec> out;
  IVec c(R.rank, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == R.rank) {
      if (in_coroot_lattice(R, c)) out.push_back(c);
      return;
    }
    for (int v = 0; v <= bound[i]; ++v) {
      c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// lambda with t^lambda w0 c_f shrunken dominant, l(t^lambda) <= max_len
std::vector<IVec> shrunken_lambdas(const RootSystem& R, int max_len)
{
  std::vector<IVec> out;
  for (const IVec& l : dominant_box(R, IVec(R.rank, max_len)))
    if (star_in_shrunken(R, l, weyl_identity(R)) && affine_length(R, translation(R, l)) <= max_len)
      out.push_back(l);
  return out;
}

// ---------------------------------------------------------------------------

void suite_reuman(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  for (const AffineElement& x : elements_up_to_length(R, opt.max_len)) {
    if (!chamber_and_shrunken(R, x).shrunken) continue;
    std::string name = format_element(R, x);
    AdlvAnswer a = adlv_dim_oracle(R, x, IVec(R.rank, 0), oracle_opts(opt));
    if (!a.exhaustive) {
      cs.skipped(name, "search cap");
      continue;
    }
    bool support = has_full_support(R, reuman_element(R, x));
    auto p = reuman_predict(R, x);
    bool ok = a.nonempty == support && a.dim == p;
    cs.add(name, ok, "oracle " + opt_str(a.dim) + ", predicted " + opt_str(p));
  }
}

void check_shrunken_case(const RootSystem& R, const IVec& lambda, const FiniteWeylElement& w, const IVec& mu,
                         const VerifyOptions& opt, Cases& cs)
{
  AffineElement x = make_affine(R, lambda, w);
  std::string name = format_element(R, x) + " b=" + format_vec(mu);
  AdlvAnswer a = adlv_dim_oracle(R, x, mu, oracle_opts(opt));
  AdlvAnswer a1 = adlv_dim_oracle(R, x, IVec(R.rank, 0), oracle_opts(opt));
  if (!a.exhaustive || !a1.exhaustive) {
    cs.skipped(name, "search cap");
    return;
  }
  auto p = shrunken_translation_predict(R, x, mu);
  std::optional<int> from_b1;
  if (a1.dim) from_b1 = *a1.dim - R.rho_pairing(mu);
  bool ok = a.dim && a.dim == p.dim && a.dim == from_b1;
  std::string detail = "oracle " + opt_str(a.dim) + ", dim X_x(1) - <rho,mu> = " + opt_str(from_b1);
  if (w == longest_element(R)) {
    Gamma0 g = build_gamma0(R, lambda, mu);
    bool attains = a.dim && g.dim == *a.dim;
    // every maximal orientation must be -phi_0, i.e. the slot w = 1
    bool only_minus = true;
    for (auto& r : a.per_orientation)
      if (r.found && r.raw_dim == a.witness_raw_dim && !is_identity(r.w)) only_minus = false;
    ok = ok && attains && only_minus;
    detail += ", gamma0 " + std::to_string(g.dim) + (only_minus ? "" : ", maximal witness off -phi_0");
  }
  cs.add(name, ok, detail);
}

void suite_shrunken_b(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  for (const IVec& lambda : shrunken_lambdas(R, opt.max_len))
    for (const FiniteWeylElement& w : R.weyl().elems)
      for (const IVec& mu : dominant_box(R, lambda)) {
        AffineElement x = make_affine(R, lambda, w);
        if (!shrunken_hypotheses(R, x, mu).all()) continue;
        check_shrunken_case(R, lambda, w, mu, opt, cs);
      }
}

void suite_operators(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  Rng rng(opt.seed);
  auto lambdas = operator_lambdas(R, 6);
  if (lambdas.empty()) throw Error("no regular dominant coweight of pairing height <= 6");
  Orientation o = standard_orientation(R);
  int rejected = 0;
  for (int t = 0; t < opt.trials; ++t) {
    IVec lambda = lambdas[rng.below(int(lambdas.size()))];
    Gallery g = random_operator_gallery(R, lambda, rng, &rejected);
    IVec nu = end_vertex(R, g);
    int d = vertex_dim(R, g, o);
    std::ostringstream bad;
    if (d > R.rho_pairing(add(lambda, nu))) bad << "LS bound violated; ";
    for (int a = 1; a <= R.rank; ++a) {
      const IVec& co = R.pos_coroots[a - 1];
      if (auto e = apply_e(R, g, a)) {
        auto back = apply_f(R, *e, a);
        if (!back || *back != g) bad << "f(e(g)) != g for a" << a << "; ";
        if (vertex_dim(R, *e, o) != d + 1) bad << "e_a" << a << " dim shift; ";
        if (end_vertex(R, *e) != add(nu, co)) bad << "e_a" << a << " endpoint shift; ";
      }
      if (auto f = apply_f(R, g, a)) {
        auto back = apply_e(R, *f, a);
        if (!back || *back != g) bad << "e(f(g)) != g for a" << a << "; ";
        if (vertex_dim(R, *f, o) != d - 1) bad << "f_a" << a << " dim shift; ";
        if (end_vertex(R, *f) != add(nu, neg(co))) bad << "f_a" << a << " endpoint shift; ";
      }
      int p = max_f(R, g, a), q = max_e(R, g, a);
      if (p - q != R.pairing(R.pos_roots[a - 1], nu)) bad << "p - q != <a" << a << ", nu>; ";
    }
    std::string err = bad.str();
    cs.add("trial " + std::to_string(t) + " lambda=" + format_vec(lambda) + " nu=" + format_vec(nu), err.empty(),
           err.empty() ? "dim " + std::to_string(d) : err);
  }
  cs.list.push_back({{"case", "samples outside the operator domain (redrawn)"}, {"status", "info"},
                     {"detail", std::to_string(rejected)}});
}

void suite_braids(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  for (const AffineElement& x : elements_up_to_length(R, opt.max_len)) {
    bool ok = true;
    int words = 0;
    std::string detail;
    for (auto& w : R.weyl().elems) {
      BraidReport rep = braid_invariance_check(R, x, {w});
      words = rep.words_checked;
      if (!rep.consistent) {
        ok = false;
        detail = rep.detail;
        break;
      }
    }
    cs.add(format_element(R, x), ok, ok ? std::to_string(words) + " reduced words" : detail);
  }
}

void suite_constructions(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  auto guarded = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    try {
      auto [ok, detail] = f();
      cs.add(name, ok, detail);
    } catch (const Error& e) {
      cs.add(name, false, e.what());
    }
  };
  int lt_rho = 0;
  for (int h : R.heights) lt_rho += h;

  guarded("sigma_a0", [&] {
    Gallery s = build_sigma_a0(R);
    AdlvAnswer a = adlv_dim_oracle(R, a0_element(R), IVec(R.rank, 0), oracle_opts(opt));
    DimStats d = dim_gallery(R, s, opposite_orientation(R));
    bool ok = d.F == weyl_length(R, longest_element(R)) && d.dim == lt_rho && a.dim == d.dim;
    return std::pair{ok, "F " + std::to_string(d.F) + ", dim " + std::to_string(d.dim) + ", oracle " +
                             opt_str(a.dim)};
  });

  for (const IVec& lambda : shrunken_lambdas(R, opt.max_len)) {
    IVec base = lambda;
    for (int& v : base) v -= 2;
    for (const IVec& mu : dominant_box(R, lambda)) {
      if (!negative_cone_member(R, mu, base)) continue;
      guarded("gamma0 lambda=" + format_vec(lambda) + " mu=" + format_vec(mu), [&] {
        Gamma0 g = build_gamma0(R, lambda, mu);
        AdlvAnswer a = adlv_dim_oracle(R, make_affine(R, lambda, longest_element(R)), mu, oracle_opts(opt));
        return std::pair{a.dim == g.dim, "gamma0 " + std::to_string(g.dim) + ", oracle " + opt_str(a.dim)};
      });
    }
  }

  Gallery sigma = build_sigma_a0(R);
  Orientation mo = opposite_orientation(R);
  for (const IVec& mu : dominant_box(R, IVec(R.rank, 2))) {
    guarded("forward shift sigma_a0 by " + format_vec(mu), [&] {
      Gallery g = forward_shift_gallery(R, sigma, mo, mu);
      AffineElement y = affine_mul(translation(R, mu), a0_element(R));
      bool ok = is_positively_folded(R, g, mo) && affine_from_word(R, gallery_type(g)) == y &&
                dim_gallery(R, g, mo).dim >= lt_rho;
      return std::pair{ok, "dim " + std::to_string(dim_gallery(R, g, mo).dim)};
    });
  }

  // conjugation surgery on oracle witnesses of small shrunken x
  for (const IVec& lambda : shrunken_lambdas(R, std::min(opt.max_len, 12))) {
    for (const FiniteWeylElement& w : R.weyl().elems) {
      AffineElement x = make_affine(R, lambda, w);
      FiniteWeylElement u = chamber_and_shrunken(R, x).chamber;
      AdlvAnswer a = adlv_dim_oracle(R, x, IVec(R.rank, 0), oracle_opts(opt));
      if (!a.nonempty) continue;
      for (auto& r : a.per_orientation) {
        if (!r.found) continue;
        for (int s = 1; s <= R.rank; ++s) {
          if (weyl_length(R, weyl_mul(simple_reflection(R, s), u)) <= weyl_length(R, u)) continue;
          guarded("conjugate " + format_element(R, x) + " o=" + format_element(R, finite_part(R, r.orientation.w)) +
                      " s" + std::to_string(s),
                  [&] {
                    Conjugated c = conjugate_gallery(R, r.witness, r.orientation, s);
                    int lx = affine_length(R, x), ly = affine_length(R, c.type_element);
                    int d0 = dim_gallery(R, r.witness, r.orientation).dim;
                    AffineElement S = affine_generator(R, s);
                    bool plus2 = affine_length(R, affine_mul(affine_mul(S, x), S)) == lx + 2;
                    bool ok = is_positively_folded(R, c.gallery, c.orientation) &&
                              c.dim == d0 + (plus2 ? 1 : 0) &&
                              (plus2 ? ly == lx + 2 : (ly == lx || ly == lx + 1));
                    // the dimension never exceeds the search maximum for the new type
                    SearchSpec spec;
                    spec.word = gallery_type(c.gallery);
                    spec.orientation = c.orientation;
                    spec.target = gallery_end(R, c.gallery);
                    spec.count_maximal = false;
                    MaxDimResult m = max_dim_folded(R, spec);
                    ok = ok && m.found && m.dim >= c.dim;
                    return std::pair{ok, "dim " + std::to_string(d0) + " -> " + std::to_string(c.dim) +
                                             (c.provenance == Provenance::UnverifiedByConstruction
                                                  ? " (unverified by construction)"
                                                  : "")};
                  });
        }
      }
    }
  }
}

void suite_symmetry(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  auto auts = diagram_automorphisms(R);
  auto xs = elements_up_to_length(R, opt.max_len);
  using Key = std::pair<AffineElement, IVec>;
  std::map<Key, std::pair<bool, std::optional<int>>> memo;
  auto answer = [&](const AffineElement& x, const IVec& mu) {
    auto it = memo.find({x, mu});
    if (it != memo.end()) return it->second;
    AdlvAnswer a = adlv_dim_oracle(R, x, mu, oracle_opts(opt));
    auto v = std::pair{a.nonempty, a.dim};
    memo[{x, mu}] = v;
    return v;
  };
  for (const auto& cls : symmetry_b_classes(R)) {
    for (const AffineElement& x : xs) {
      auto ref = answer(x, cls.front());
      bool ok = true;
      std::string detail;
      for (const IVec& mu : cls)
        if (answer(x, mu) != ref) {
          ok = false;
          detail = "b=" + format_vec(mu) + " differs from b=" + format_vec(cls.front());
        }
      for (auto& g : auts) {
        AffineElement gx = apply_automorphism(R, g, x);
        AffineElement gb = apply_automorphism(R, g, translation(R, cls.front()));
        if (!is_translation(gb)) {
          ok = false;
          detail = "automorphism does not preserve translations";
          continue;
        }
        if (answer(gx, gb.lambda) != ref) {
          ok = false;
          detail = "automorphism image " + format_element(R, gx) + " differs";
        }
      }
      cs.add(format_element(R, x) + " b~" + format_vec(cls.front()), ok,
             ok ? (ref.first ? "dim " + std::to_string(*ref.second) : "empty") : detail);
    }
  }
}

void suite_reflection(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  std::map<AffineElement, int> memo;
  auto lr = [&](const AffineElement& y) {
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    return memo[y] = reflection_length_bruteforce(R, y);
  };
  int n = R.rank;
  for (const AffineElement& x : elements_up_to_length(R, opt.max_len)) {
    std::ostringstream bad;
    int l = lr(x);
    ReflectionBounds b = reflection_length_bounds(R, x, oracle_opts(opt));
    if (l < finite_reflection_length(R, x.w) || l > 2 * n) bad << "outside [l_R(w), 2n]; ";
    if (l < b.lo || l > b.hi) bad << "outside " << b.source << " bounds [" << b.lo << "," << b.hi << "]; ";
    ChamberInfo c = chamber_and_shrunken(R, x);
    if (c.shrunken && is_coxeter_element(R, reuman_element(R, x)) && l != n) bad << "Coxeter case != n; ";
    Word word = reduced_word_affine(R, x);
    for (const Orientation& o : {standard_orientation(R), opposite_orientation(R)}) {
      SearchSpec spec;
      spec.word = word;
      spec.orientation = o;
      spec.max_branches = opt.max_branches;
      enumerate_folded(R, spec, [&](const Gallery& g, const DimStats& d) {
        AffineElement y = gallery_end(R, g);
        if (lr(affine_mul(x, affine_inv(R, y))) > d.F) bad << "fold bound fails at " << format_element(R, y) << "; ";
      });
    }
    std::string err = bad.str();
    cs.add(format_element(R, x), err.empty(), err.empty() ? "l_R~ = " + std::to_string(l) : err);
  }
}

void suite_class_degrees(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  for (const IVec& mu : dominant_box(R, IVec(R.rank, 1))) {
    if (!is_regular(R, mu)) continue;
    for (const AffineElement& x : elements_up_to_length(R, opt.max_len)) {
      if (!class_shrunken_hypotheses(R, x, mu)) continue;
      ClassDegree d = class_poly_degree(R, x, mu, oracle_opts(opt));
      cs.add(format_element(R, x) + " b=" + format_vec(mu), d.degree == d.predicted,
             "degree " + std::to_string(d.degree) + ", l(w) " + std::to_string(d.predicted));
    }
  }
}

// forward shift and conjugation inequalities, with the parity of the length change
void suite_shift_conjugation(const RootSystem& R, const VerifyOptions& opt, Cases& cs)
{
  auto oo = oracle_opts(opt);
  int shift_cases = 0;
  for (const AffineElement& x : elements_up_to_length(R, opt.max_len)) {
    for (const IVec& mu : dominant_box(R, IVec(R.rank, 2))) {
      ForwardShift f = forward_shift_bound(R, x, mu, oo);
      if (!f.hypothesis || !f.base_dim) continue;
      AffineElement y = affine_mul(translation(R, mu), x);
      AdlvAnswer a = adlv_dim_oracle(R, y, mu, oo);
      bool ok = a.nonempty && *a.dim >= *f.lower_bound;
      cs.add("shift " + format_element(R, x) + " mu=" + format_vec(mu), ok,
             "dim " + opt_str(a.dim) + " >= " + std::to_string(*f.lower_bound));
      ++shift_cases;
    }
  }
  for (const IVec& lambda : shrunken_lambdas(R, std::min(opt.max_len + 4, 12)))
    for (const FiniteWeylElement& w : R.weyl().elems) {
      AffineElement x = make_affine(R, lambda, w);
      for (const IVec& mu : dominant_box(R, IVec(R.rank, 1))) {
        AdlvAnswer ax = adlv_dim_oracle(R, x, mu, oo);
        if (!ax.nonempty) continue;
        for (const FiniteWeylElement& u : R.weyl().elems) {
          ConjugationBound b = conjugation_bound(R, x, u, mu);
          if (!b.hypothesis) continue;
          AffineElement uu = finite_part(R, u);
          AffineElement y = affine_mul(affine_mul(affine_inv(R, uu), x), uu);
          AdlvAnswer ay = adlv_dim_oracle(R, y, mu, oo);
          int want = *ax.dim + b.shift;
          bool ok = ay.nonempty && (b.equality ? *ay.dim == want : *ay.dim >= want);
          bool even = (affine_length(R, y) - affine_length(R, x)) % 2 == 0;
          cs.add("conjugate " + format_element(R, x) + " by " + format_element(R, uu) + " b=" + format_vec(mu),
                 ok && even, "dim " + opt_str(ay.dim) + (b.equality ? " == " : " >= ") + std::to_string(want));
        }
      }
    }
}

}  // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"reuman",   "shrunken-b", "operators",     "braids",
                                              "constructions", "symmetry", "reflection", "class-degrees",
                                              "shift-conjugation"};
  return names;
}

std::vector<std::vector<IVec>> symmetry_b_classes(const RootSystem& R)
{
  std::vector<std::vector<IVec>> out{{IVec(R.rank, 0)}};
  for (const IVec& mu : dominant_box(R, IVec(R.rank, 1)))
    if (std::any_of(mu.begin(), mu.end(), [](int v) { return v != 0; })) out.push_back(orbit(R, mu));
  for (auto& cls : out) {
    // dominant representative first
    auto it = std::find_if(cls.begin(), cls.end(), [](const IVec& v) { return is_dominant(v); });
    std::rotate(cls.begin(), it, it + 1);
  }
  return out;
}

std::vector<IVec> operator_lambdas(const RootSystem& R, int max_height)
{
  std::vector<IVec> out;
  for (const IVec& l : dominant_box(R, IVec(R.rank, max_height)))
    if (is_regular(R, l) && R.rho_pairing(l) <= max_height) out.push_back(l);
  return out;
}

Gallery random_operator_gallery(const RootSystem& R, const IVec& lambda, Rng& rng, int* rejected)
{
  const WeylTable& T = R.weyl();
  Orientation o = standard_orientation(R);
  Word word = reduced_word_affine(R, make_affine(R, lambda, longest_element(R)));
  for (;;) {
    Gallery g{finite_part(R, T.elems[rng.below(T.size())]), {}, true};
    AffineElement c = g.first;
    for (int s : word) {
      bool fold = step_sign(R, o, c, s, StepKind::Fold) > 0 && rng.below(2) == 0;
      g.steps.push_back({s, fold ? StepKind::Fold : StepKind::Cross});
      if (!fold) c = affine_mul(c, affine_generator(R, s));
    }
    if (in_operator_domain(R, g)) return g;
    if (rejected) ++*rejected;
  }
}

Json run_suite(const std::string& suite, const RootSystem& R, const VerifyOptions& opt)
{
  Cases cs;
  if (suite == "reuman") suite_reuman(R, opt, cs);
  else if (suite == "shrunken-b") suite_shrunken_b(R, opt, cs);
  else if (suite == "operators") suite_operators(R, opt, cs);
  else if (suite == "braids") suite_braids(R, opt, cs);
  else if (suite == "constructions") suite_constructions(R, opt, cs);
  else if (suite == "symmetry") suite_symmetry(R, opt, cs);
  else if (suite == "reflection") suite_reflection(R, opt, cs);
  else if (suite == "class-degrees") suite_class_degrees(R, opt, cs);
  else if (suite == "shift-conjugation") suite_shift_conjugation(R, opt, cs);
  else throw Error("unknown suite '" + suite + "'");

  Json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = suite;
  j["type"] = R.label;
  j["params"] = {{"max_len", opt.max_len}, {"trials", opt.trials}, {"seed", opt.seed},
                 {"max_branches", opt.max_branches}};
  j["cases"] = cs.list;
  j["summary"] = {{"pass", cs.pass}, {"fail", cs.fail}, {"skip", cs.skip}};
  return j;
}

// ---------------------------------------------------------------------------

namespace {

Json table_row(const RootSystem& R, const AffineElement& x, const IVec& mu, const VerifyOptions& opt)
{
  AdlvAnswer a = adlv_dim_oracle(R, x, mu, oracle_opts(opt));
  Json row = answer_to_json(R, x, a);
  row.erase("per_orientation");
  ChamberInfo c = chamber_and_shrunken(R, x);
  row["chamber"] = format_element(R, finite_part(R, c.chamber));
  row["shrunken"] = c.shrunken;

  Json pred = Json::object();
  std::optional<bool> agree;
  auto compare = [&](const std::optional<int>& p) {
    bool ok = a.nonempty == p.has_value() && a.dim == p;
    agree = agree.value_or(true) && ok;
  };
  bool zero = std::all_of(mu.begin(), mu.end(), [](int v) { return v == 0; });
  if (affine_length(R, translation(R, mu)) > affine_length(R, x)) {
    pred["length_obstruction"] = "empty";
    compare(std::nullopt);
  }
  if (zero && c.shrunken) {
    auto p = reuman_predict(R, x);
    pred["reuman"] = p ? Json(*p) : Json("empty");
    compare(p);
  } else if (zero && a.nonempty) {
    // an upper bound only: equality fails already for x = s0
    int p = strip_dim_predict(R, x);
    pred["virtual_upper_bound"] = p;
    pred["virtual_attained"] = *a.dim == p;
    agree = agree.value_or(true) && *a.dim <= p;
  } else if (!zero) {
    auto p = shrunken_translation_predict(R, x, mu);
    if (p.hyp.all()) {
      pred["shrunken_translation"] = p.dim ? Json(*p.dim) : Json("empty");
      compare(p.dim);
    }
  }
  row["predictions"] = pred;
  row["agree"] = agree ? Json(*agree) : Json(nullptr);
  if (a.witness) row["rescored"] = rescore_witness(R, a, x);
  return row;
}

}  // namespace

Json build_table(const RootSystem& R, int max_len, const IVec& mu, const VerifyOptions& opt)
{
  if (!in_coroot_lattice(R, mu)) throw Error("b must be a translation by a coroot-lattice element");
  auto xs = elements_up_to_length(R, max_len);
  std::vector<Json> rows(xs.size());
  std::vector<std::string> errors(xs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < xs.size(); i = next++) {
      try {
        rows[i] = table_row(R, xs[i], mu, opt);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int nt = std::max(1, opt.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (!e.empty()) throw Error(e);

  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = R.label;
  j["max_len"] = max_len;
  j["b"] = vec_to_json(mu);
  j["rows"] = Json::array();
  int agree = 0, disagree = 0, capped = 0;
  for (auto& r : rows) {
    if (!r["exhaustive"].get<bool>()) ++capped;
    if (r["agree"].is_boolean()) (r["agree"].get<bool>() ? agree : disagree) += 1;
    j["rows"].push_back(std::move(r));
  }
  j["summary"] = {{"rows", xs.size()}, {"agree", agree}, {"disagree", disagree}, {"capped", capped}};
  return j;
}

std::string table_to_csv(const Json& table)
{
  std::ostringstream os;
  os << "x,length,chamber,shrunken,nonempty,dim,exhaustive,prediction,agree\n";
  for (auto& r : table.at("rows")) {
    std::string pred;
    for (auto& [k, v] : r.at("predictions").items()) {
      if (!pred.empty()) pred += ";";
      pred += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    os << '"' << r.at("x").get<std::string>() << "\"," << r.at("length") << ",\"" << r.at("chamber").get<std::string>()
       << "\"," << r.at("shrunken") << ',' << r.at("nonempty") << ',' << (r.at("dim").is_null() ? "" : r.at("dim").dump())
       << ',' << r.at("exhaustive") << ",\"" << pred << "\"," << (r.at("agree").is_null() ? "" : r.at("agree").dump())
       << '\n';
  }
  return os.str();
}

}  // namespace adlv
