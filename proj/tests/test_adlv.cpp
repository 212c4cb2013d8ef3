#include "adlv/adlv.hpp"

#include <doctest.h>

using namespace adlv;

TEST_CASE("spec-style examples")
{
  RootSystem R = build_root_system("A2");
  AdlvAnswer a = adlv_dim_oracle(R, parse_element(R, "t[2,2]*w0"), {0, 0});
  REQUIRE(a.nonempty);
  CHECK(*a.dim == 4);
  CHECK(reuman_predict(R, parse_element(R, "t[2,2]*w0")) == 4);

  AdlvAnswer b = adlv_dim_oracle(R, parse_element(R, "t[3,3]*w0"), {1, 1});
  REQUIRE(b.nonempty);
  CHECK(*b.dim == 4);
  auto p = shrunken_translation_predict(R, parse_element(R, "t[3,3]*w0"), {1, 1});
  CHECK(p.hyp.all());
  CHECK(p.dim == 4);

  CHECK(!adlv_dim_oracle(R, parse_element(R, "s1"), {2, 2}).nonempty);
  CHECK(*adlv_dim_oracle(R, parse_element(R, "t[3,3]*w0"), {0, 0}).dim == 6);
}

TEST_CASE("virtual dimension is only an upper bound")
{
  RootSystem R = build_root_system("A2");
  AffineElement s0 = parse_element(R, "s0");
  CHECK(strip_dim_predict(R, s0) == 2);
  CHECK(*adlv_dim_oracle(R, s0, {0, 0}).dim == 1);
  for (auto& x : elements_up_to_length(R, 6)) {
    AdlvAnswer a = adlv_dim_oracle(R, x, {0, 0});
    if (a.nonempty && !chamber_and_shrunken(R, x).shrunken) CHECK(*a.dim <= strip_dim_predict(R, x));
  }
}

TEST_CASE("correction term")
{
  for (const char* t : {"A2", "C2", "G2"}) {
    RootSystem R = build_root_system(t);
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) {
        IVec mu{i, j};
        if (!in_coroot_lattice(R, mu)) continue;
        TranslationClass c = translation_class(R, mu);
        CHECK(correction_literal(R, mu) == c.correction);
        CHECK(c.correction >= 0);
        CHECK((c.correction == 0) == is_dominant(mu));
        CHECK(c.mu_antidom == weyl_act(longest_element(R), c.mu_plus));
      }
  }
  CHECK(translation_class(build_root_system("A2"), {-1, 2}).correction == 1);
}

TEST_CASE("translation lengths are twice the rho pairing")
{
  for (const char* t : {"A2", "C2", "G2"}) {
    RootSystem R = build_root_system(t);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        if (in_coroot_lattice(R, {i, j})) CHECK(affine_length(R, translation(R, {i, j})) == 2 * R.rho_pairing({i, j}));
  }
}

TEST_CASE("oracle is unchanged by prunes and its witnesses re-score")
{
  for (const char* t : {"A2", "C2"}) {
    RootSystem R = build_root_system(t);
    for (const IVec& mu : {IVec{0, 0}, R.highest_coroot})
      for (auto& x : elements_up_to_length(R, 6)) {
        OracleOptions off;
        off.prune = false;
        AdlvAnswer a = adlv_dim_oracle(R, x, mu), b = adlv_dim_oracle(R, x, mu, off);
        CHECK(a.nonempty == b.nonempty);
        CHECK(a.dim == b.dim);
        if (!a.nonempty) continue;
        CHECK(rescore_witness(R, a, x) == *a.dim);
        CHECK(gallery_end(R, *a.witness) == *a.target);
        // length obstruction
        CHECK(affine_length(R, translation(R, mu)) <= affine_length(R, x));
      }
  }
}

TEST_CASE("inverse elements have equal dimension for b = 1")
{
  for (const char* t : {"A2", "C2"}) {
    RootSystem R = build_root_system(t);
    for (auto& x : elements_up_to_length(R, 6)) {
      AdlvAnswer a = adlv_dim_oracle(R, x, {0, 0}), b = adlv_dim_oracle(R, affine_inv(R, x), {0, 0});
      CHECK(a.nonempty == b.nonempty);
      CHECK(a.dim == b.dim);
    }
  }
}

TEST_CASE("conjugation parity and shift")
{
  RootSystem R = build_root_system("A2");
  AffineElement x = parse_element(R, "t[3,3]*w0");
  for (auto& u : R.weyl().elems) {
    ConjugationBound c = conjugation_bound(R, x, u, {0, 0});
    AffineElement uu = finite_part(R, u);
    int dl = affine_length(R, affine_mul(affine_mul(affine_inv(R, uu), x), uu)) - affine_length(R, x);
    CHECK(dl % 2 == 0);
    if (c.hypothesis) CHECK(c.shift == dl / 2);
  }
  CHECK(conjugation_bound(R, x, weyl_identity(R), {0, 0}).shift == 0);
}

TEST_CASE("forward shift bound")
{
  RootSystem R = build_root_system("A2");
  AffineElement x = parse_element(R, "t[2,2]*w0");
  ForwardShift f = forward_shift_bound(R, x, {0, 0});
  CHECK(f.hypothesis);
  CHECK(f.base_dim == 4);
  CHECK(f.lower_bound == 4);
  ForwardShift g = forward_shift_bound(R, x, {1, 1});
  if (g.hypothesis) {
    AdlvAnswer a = adlv_dim_oracle(R, affine_mul(translation(R, {1, 1}), x), {1, 1});
    CHECK(a.nonempty);
    CHECK(*a.dim >= *g.lower_bound);
  }
}

TEST_CASE("diagram automorphisms")
{
  CHECK(diagram_automorphisms(build_root_system("A2")).size() == 6);
  CHECK(diagram_automorphisms(build_root_system("C2")).size() == 2);
  CHECK(diagram_automorphisms(build_root_system("G2")).size() == 1);
  RootSystem R = build_root_system("C2");
  for (auto& g : diagram_automorphisms(R))
    for (auto& x : elements_up_to_length(R, 5)) {
      AffineElement y = apply_automorphism(R, g, x);
      CHECK(affine_length(R, y) == affine_length(R, x));
      CHECK(adlv_dim_oracle(R, y, {0, 0}).dim == adlv_dim_oracle(R, x, {0, 0}).dim);
    }
}

TEST_CASE("reflection length")
{
  RootSystem R = build_root_system("A2");
  CHECK(reflection_length_bruteforce(R, parse_element(R, "s1")) == 1);
  CHECK(reflection_length_bruteforce(R, translation(R, R.pos_coroots[0])) == 2);
  CHECK(reflection_length_bruteforce(R, affine_identity(R)) == 0);
  CHECK(is_coxeter_element(R, weyl_from_word(R, {1, 2})));
  CHECK(!is_coxeter_element(R, longest_element(R)));
  CHECK(finite_reflection_length(R, longest_element(R)) == 1);
  for (auto& x : elements_up_to_length(R, 5)) {
    ReflectionBounds b = reflection_length_bounds(R, x);
    int k = reflection_length_bruteforce(R, x);
    CHECK(b.lo <= k);
    CHECK(k <= b.hi);
  }
}
