#pragma once

#include "adlv/folding_search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adlv {

// b = t^mu
struct TranslationClass {
  IVec mu;
  IVec mu_plus;      // Newton point
  IVec mu_antidom;   // w0 mu^+
  int correction = 0;  // <rho, mu^+> - <rho, mu>
  bool regular = false;
};
TranslationClass translation_class(const RootSystem& R, const IVec& mu);
// the literal <rho_{B^-}, mu + mu_{B^-}> with rho_{B^-} = -rho, mu_{B^-} = w0 mu^+
int correction_literal(const RootSystem& R, const IVec& mu);
constexpr int translation_defect = 0;

struct OracleOptions {
  long long max_branches = 100000000;
  bool prune = true;
};

struct OrientationResult {
  FiniteWeylElement w;      // target t^{w mu}
  Orientation orientation;  // phi_{w w0}, the chamber at infinity of ^wU^-
  bool found = false;
  int raw_dim = 0;          // max P + F
  int folds = 0;
  long long maximal_count = 0;
  Gallery witness;
};

struct AdlvAnswer {
  bool nonempty = false;
  std::optional<int> dim;
  std::optional<Orientation> orientation;
  std::optional<Gallery> witness;
  std::optional<AffineElement> target;
  int witness_raw_dim = 0;
  bool exhaustive = true;
  long long branches = 0;
  TranslationClass b;
  std::vector<OrientationResult> per_orientation;
};

AdlvAnswer adlv_dim_oracle(const RootSystem& R, const AffineElement& x, const IVec& mu,
                           const OracleOptions& opt = {});
// re-score a serialized witness; returns dim X_x(b) it certifies
int rescore_witness(const RootSystem& R, const AdlvAnswer& a, const AffineElement& x);

struct NotShrunken : Error {
  NotShrunken() : Error("alcove is not in a shrunken Weyl chamber") {}
};
std::optional<int> reuman_predict(const RootSystem& R, const AffineElement& x);
FiniteWeylElement reuman_element(const RootSystem& R, const AffineElement& x);  // eta2^{-1} eta1 eta2

FiniteWeylElement eta_sigma(const RootSystem& R, const AffineElement& x);
int strip_dim_predict(const RootSystem& R, const AffineElement& x);  // (l(x) + l(eta_sigma)) / 2

struct ShrunkenHypotheses {
  bool mu_dominant = false;
  bool star_in_shrunken = false;
  bool b_in_hull = false;
  bool shifted_in_shrunken = false;
  bool negative_cone = false;
  bool reuman = false;
  bool all() const
  {
    return mu_dominant && star_in_shrunken && b_in_hull && shifted_in_shrunken && negative_cone && reuman;
  }
  std::string report() const;
};
ShrunkenHypotheses shrunken_hypotheses(const RootSystem& R, const AffineElement& x, const IVec& mu);
struct ShrunkenPrediction {
  std::optional<int> dim;
  ShrunkenHypotheses hyp;
};
ShrunkenPrediction shrunken_translation_predict(const RootSystem& R, const AffineElement& x, const IVec& mu);

struct ForwardShift {
  bool hypothesis = false;  // b c_f in conv(c_f, t^mu x c_f)
  std::optional<int> base_dim;  // dim X_x(1)
  std::optional<int> lower_bound;
};
ForwardShift forward_shift_bound(const RootSystem& R, const AffineElement& x, const IVec& mu,
                                 const OracleOptions& opt = {});

int conjugation_correction(const RootSystem& R, const FiniteWeylElement& w, const FiniteWeylElement& u);
struct ConjugationBound {
  bool hypothesis = false;
  bool equality = false;  // b = 1
  int shift = 0;          // (l(u^{-1} x u) - l(x)) / 2
};
ConjugationBound conjugation_bound(const RootSystem& R, const AffineElement& x, const FiniteWeylElement& u,
                                   const IVec& mu);

// permutations of {0..n} preserving the affine Cartan matrix
using DiagramAutomorphism = std::vector<int>;
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& R);
AffineElement apply_automorphism(const RootSystem& R, const DiagramAutomorphism& g, const AffineElement& x);
Orientation transport_orientation(const RootSystem& R, const DiagramAutomorphism& g, const Orientation& o);

struct ClassDegree {
  int degree = 0;
  bool hypotheses = false;
  int predicted = 0;  // l(w) when the hypotheses hold
};
ClassDegree class_poly_degree(const RootSystem& R, const AffineElement& x, const IVec& mu,
                              const OracleOptions& opt = {});
bool class_shrunken_hypotheses(const RootSystem& R, const AffineElement& x, const IVec& mu);

int finite_reflection_length(const RootSystem& R, const FiniteWeylElement& w);
bool is_coxeter_element(const RootSystem& R, const FiniteWeylElement& w);
// least k with x a product of k affine reflections s_{alpha,j}, |j| <= level_bound
int reflection_length_bruteforce(const RootSystem& R, const AffineElement& x, int level_bound = -1);
struct ReflectionBounds {
  int lo = 0;
  int hi = 0;
  std::string source;  // "shrunken", "strip" or "general"
};
ReflectionBounds reflection_length_bounds(const RootSystem& R, const AffineElement& x,
                                          const OracleOptions& opt = {});

}  // namespace adlv
