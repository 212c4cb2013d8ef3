#include "adlv/constructions.hpp"
#include "adlv/json_io.hpp"
#include "adlv/svg.hpp"

#include <doctest.h>

using namespace adlv;

namespace {

int count(const std::string& s, const std::string& needle)
{
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("gallery JSON round trip")
{
  for (const char* t : {"A2", "C2", "G2"}) {
    RootSystem R = build_root_system(t);
    for (auto& x : elements_up_to_length(R, 5)) {
      Gallery g = minimal_gallery(R, x);
      if (!g.steps.empty()) g = fold_at(g, int(g.steps.size()));
      g.vertex_marked = g.steps.size() % 2;
      Json j = gallery_to_json(R, g);
      CHECK(gallery_from_json(R, j) == g);
      CHECK(gallery_from_json(R, Json::parse(j.dump())) == g);
    }
  }
  RootSystem R = build_root_system("A2");
  CHECK_THROWS(gallery_from_json(R, Json::parse(R"({"first":"1","steps":[{"gen":5,"kind":"C"}]})")));
}

TEST_CASE("answers round trip and re-score")
{
  RootSystem R = build_root_system("C2");
  for (auto& x : elements_up_to_length(R, 6)) {
    AdlvAnswer a = adlv_dim_oracle(R, x, {0, 0});
    Json j = answer_to_json(R, x, a);
    CHECK(j["schema"] == kSchemaVersion);
    AdlvAnswer b = answer_from_json(R, Json::parse(j.dump()));
    CHECK(b.nonempty == a.nonempty);
    CHECK(b.dim == a.dim);
    if (a.nonempty) CHECK(rescore_witness(R, b, x) == *a.dim);
  }
}

TEST_CASE("vectors")
{
  CHECK(vec_from_json(vec_to_json({3, -1})) == IVec{3, -1});
  CHECK(format_vec({3, -1}) == "[3,-1]");
}

TEST_CASE("SVG is deterministic")
{
  RootSystem R = build_root_system("C2");
  SvgOptions o;
  o.orientation = opposite_orientation(R);
  std::string a = render_svg(R, {build_sigma_a0(R)}, {}, o);
  std::string b = render_svg(R, {build_sigma_a0(R)}, {}, o);
  CHECK(a == b);
  CHECK(count(a, "class=\"fold\"") == 4);
  CHECK(count(a, "class=\"gallery\"") == 1);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
}

TEST_CASE("SVG of shaded alcoves")
{
  RootSystem R = build_root_system("A2");
  AffineElement x = parse_element(R, "t[2,2]*w0");
  std::string s = render_svg(R, {minimal_gallery(R, x)}, {x}, {});
  CHECK(count(s, "class=\"alcove\"") == 1);
  CHECK(count(s, "class=\"fold\"") == 0);
  CHECK_THROWS(render_svg(build_root_system("A3"), {}, {}, {}));
}

TEST_CASE("realizations")
{
  auto a = realization(build_root_system("A2"));
  CHECK(a[0][0] == doctest::Approx(1.0));
  CHECK(a[1][0] == doctest::Approx(-0.5));
  auto g = realization(build_root_system("G2"));
  CHECK(g[1][0] == doctest::Approx(-1.5));
}
