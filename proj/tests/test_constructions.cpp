#include "adlv/constructions.hpp"

#include <doctest.h>

using namespace adlv;

TEST_CASE("sigma_a0 fold count and dimension")
{
  std::vector<std::tuple<std::string, int, int>> want{{"A2", 3, 4}, {"C2", 4, 7}, {"G2", 6, 16}, {"A3", 6, 10}};
  for (auto& [t, folds, dim] : want) {
    RootSystem R = build_root_system(t);
    Gallery g = build_sigma_a0(R);
    CHECK(fold_count(g) == folds);
    CHECK(dim_gallery(R, g, opposite_orientation(R)).dim == dim);
    CHECK(affine_from_word(R, gallery_type(g)) == a0_element(R));
    CHECK(gallery_end(R, g) == affine_identity(R));
    // l(t^rho) is the sum of the heights of the positive roots
    int h = 0;
    for (int v : R.heights) h += v;
    CHECK(h == dim);
  }
  RootSystem R = build_root_system("A2");
  CHECK(a0_element(R) == parse_element(R, "t[2,2]*w0"));
  CHECK(*adlv_dim_oracle(R, a0_element(R), {0, 0}).dim == 4);
}

TEST_CASE("gamma0 examples")
{
  RootSystem R = build_root_system("A2");
  Gamma0 a = build_gamma0(R, {2, 2}, {0, 0});
  CHECK(a.dim == 4);
  Gamma0 b = build_gamma0(R, {3, 3}, {1, 1});
  CHECK(b.dim == 4);
  CHECK(gallery_end(R, b.gallery) == translation(R, {1, 1}));
  CHECK(affine_from_word(R, gallery_type(b.gallery)) == parse_element(R, "t[3,3]*w0"));
  CHECK(dim_gallery(R, b.gallery, opposite_orientation(R)).dim == b.dim);
  CHECK(*adlv_dim_oracle(R, parse_element(R, "t[3,3]*w0"), {1, 1}).dim == b.dim);
  CHECK_THROWS(build_gamma0(R, {3, 3}, {2, 2}));
  CHECK_THROWS(build_gamma0(R, {1, 1}, {0, 0}));
}

TEST_CASE("forward shifted galleries")
{
  RootSystem R = build_root_system("A2");
  Gallery s = build_sigma_a0(R);
  Orientation o = opposite_orientation(R);
  Gallery z = forward_shift_gallery(R, s, o, {0, 0});
  CHECK(gallery_type(z) == gallery_type(s));
  Gallery g = forward_shift_gallery(R, s, o, {1, 1});
  CHECK(gallery_end(R, g) == translation(R, {1, 1}));
  CHECK(g.steps.size() == s.steps.size() + 4);
  CHECK(is_positively_folded(R, g, o));
  CHECK(dim_gallery(R, g, o).dim >= dim_gallery(R, s, o).dim);
}

TEST_CASE("conjugation surgery")
{
  RootSystem R = build_root_system("A2");
  AffineElement x = parse_element(R, "t[3,3]*w0");
  AdlvAnswer a = adlv_dim_oracle(R, x, {0, 0});
  REQUIRE(a.witness);
  CHECK(*a.dim == 6);
  Conjugated c = conjugate_gallery(R, *a.witness, *a.orientation, 1);
  CHECK(c.dim == 7);
  CHECK(is_positively_folded(R, c.gallery, c.orientation));
  CHECK(dim_gallery(R, c.gallery, c.orientation).dim == 7);
  CHECK(affine_from_word(R, gallery_type(c.gallery)) == c.type_element);
  CHECK(affine_length(R, c.type_element) == affine_length(R, x) + 2);
  CHECK(*adlv_dim_oracle(R, c.type_element, {0, 0}).dim >= 7);
}

TEST_CASE("transport by diagram automorphisms")
{
  for (const char* t : {"A2", "C2"}) {
    RootSystem R = build_root_system(t);
    Gallery s = build_sigma_a0(R);
    Orientation o = opposite_orientation(R);
    for (auto& g : diagram_automorphisms(R)) {
      Transported tr = transport_by_diagram_automorphism(R, s, o, g);
      CHECK(is_positively_folded(R, tr.gallery, tr.orientation));
      CHECK(dim_gallery(R, tr.gallery, tr.orientation) == dim_gallery(R, s, o));
      CHECK(affine_from_word(R, gallery_type(tr.gallery)) == apply_automorphism(R, g, a0_element(R)));
    }
  }
}
