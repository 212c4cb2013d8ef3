#include "adlv/root_operators.hpp"
#include "adlv/verify.hpp"

#include <doctest.h>

#include <set>

using namespace adlv;

namespace {

// vertex-marked minimal gallery of type t^lambda w0
Gallery highest_gallery(const RootSystem& R, const IVec& lambda)
{
  Gallery g = minimal_gallery(R, make_affine(R, lambda, longest_element(R)));
  g.vertex_marked = true;
  return g;
}

std::vector<Gallery> crystal(const RootSystem& R, const IVec& lambda)
{
  std::set<std::pair<AffineElement, std::vector<std::pair<int, int>>>> seen;
  auto key = [](const Gallery& h) {
    std::vector<std::pair<int, int>> v;
    for (auto& s : h.steps) v.push_back({s.gen, int(s.kind)});
    return std::pair{h.first, v};
  };
  std::vector<Gallery> q{highest_gallery(R, lambda)};
  seen.insert(key(q[0]));
  for (size_t i = 0; i < q.size(); ++i)
    for (int a = 1; a <= R.rank; ++a)
      for (auto o : {apply_e(R, q[i], a), apply_f(R, q[i], a)})
        if (o && seen.insert(key(*o)).second) q.push_back(*o);
  return q;
}

// Weyl dimension formula for the dual group: prod (<alpha, lambda> + ht) / ht
long long weyl_dimension(const RootSystem& R, const IVec& lambda)
{
  long long num = 1, den = 1;
  for (int r = 0; r < R.num_positive_roots(); ++r) {
    num *= R.root_pairing(r, lambda) + R.heights[r];
    den *= R.heights[r];
  }
  return num / den;
}

}  // namespace

TEST_CASE("crystal sizes match the Weyl dimension formula")
{
  std::vector<std::pair<std::string, IVec>> cases{{"A2", {1, 1}}, {"A2", {2, 2}}, {"A2", {3, 3}}, {"A2", {4, 1}},
                                                  {"C2", {1, 2}}, {"G2", {1, 1}}};
  for (auto& [t, l] : cases) {
    RootSystem R = build_root_system(t);
    auto c = crystal(R, l);
    CHECK(static_cast<long long>(c.size()) == weyl_dimension(R, l));
    Orientation o = standard_orientation(R);
    for (auto& g : c) {
      CHECK(in_operator_domain(R, g));
      CHECK(is_positively_folded(R, g, o));
      // LS: the vertex dimension is <rho, lambda + nu>
      CHECK(vertex_dim(R, g, o) == R.rho_pairing(l) + R.rho_pairing(end_vertex(R, g)));
    }
  }
  CHECK(weyl_dimension(build_root_system("A2"), {1, 1}) == 8);
}

TEST_CASE("e and f are partial inverses with the expected shifts")
{
  RootSystem R = build_root_system("C2");
  Orientation o = standard_orientation(R);
  for (auto& g : crystal(R, {1, 2}))
    for (int a = 1; a <= R.rank; ++a) {
      IVec coroot = R.pos_coroots[a - 1];
      int nu = R.root_pairing(a - 1, end_vertex(R, g));
      CHECK(m_value(R, g, a) <= 0);
      CHECK(max_f(R, g, a) - max_e(R, g, a) == nu);
      bool e_def = m_value(R, g, a) <= -1;
      CHECK(apply_e(R, g, a).has_value() == e_def);
      if (auto e = apply_e(R, g, a)) {
        CHECK(apply_f(R, *e, a) == g);
        CHECK(vertex_dim(R, *e, o) == vertex_dim(R, g, o) + 1);
        IVec d = end_vertex(R, *e);
        for (int i = 0; i < R.rank; ++i) d[i] -= end_vertex(R, g)[i];
        CHECK(d == coroot);
      }
      if (auto f = apply_f(R, g, a)) {
        CHECK(apply_e(R, *f, a) == g);
        CHECK(vertex_dim(R, *f, o) == vertex_dim(R, g, o) - 1);
      }
    }
}

TEST_CASE("laws fail outside the operator domain")
{
  // A2, lambda = (2,2), first alcove w0 c_f, first step folded: f_1 produces a negative fold
  RootSystem R = build_root_system("A2");
  Orientation o = standard_orientation(R);
  Gallery g{parse_element(R, "w0"), {}, true};
  for (int s : reduced_word_affine(R, parse_element(R, "t[2,2]*w0"))) g.steps.push_back({s, StepKind::Cross});
  REQUIRE(gallery_type(g) == Word{0, 1, 2, 1, 0});
  g.steps[0].kind = StepKind::Fold;
  REQUIRE(is_positively_folded(R, g, o));
  CHECK(!in_operator_domain(R, g));
  auto f = apply_f(R, g, 1);
  REQUIRE(f);
  CHECK(!is_positively_folded(R, *f, o));
}

TEST_CASE("random domain galleries satisfy the laws")
{
  for (const char* t : {"A2", "C2"}) {
    RootSystem R = build_root_system(t);
    Rng rng(11);
    Orientation o = standard_orientation(R);
    for (const IVec& l : operator_lambdas(R, 6))
      for (int trial = 0; trial < 40; ++trial) {
        Gallery g = random_operator_gallery(R, l, rng);
        REQUIRE(in_operator_domain(R, g));
        for (int a = 1; a <= R.rank; ++a) {
          if (auto e = apply_e(R, g, a)) {
            CHECK(is_positively_folded(R, *e, o));
            CHECK(apply_f(R, *e, a) == g);
          }
          if (auto f = apply_f(R, g, a)) {
            CHECK(is_positively_folded(R, *f, o));
            CHECK(apply_e(R, *f, a) == g);
          }
        }
      }
  }
}

TEST_CASE("hypotheses are enforced")
{
  RootSystem R = build_root_system("A2");
  Gallery g = minimal_gallery(R, parse_element(R, "t[1,1]*w0"));
  CHECK_THROWS(check_operator_hypotheses(R, g));  // not vertex-marked
  g.vertex_marked = true;
  CHECK_NOTHROW(check_operator_hypotheses(R, g));
}
