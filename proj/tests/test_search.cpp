#include "adlv/folding_search.hpp"

#include <doctest.h>

#include <map>

using namespace adlv;

namespace {

// brute force: all 2^n patterns, kept when positively folded; best dim per endpoint
std::map<AffineElement, int> brute_endpoints(const RootSystem& R, const Word& w, const Orientation& o)
{
  std::map<AffineElement, int> best;
  for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
    Gallery g{affine_identity(R), {}, false};
    for (size_t i = 0; i < w.size(); ++i) g.steps.push_back({w[i], (mask >> i) & 1 ? StepKind::Fold : StepKind::Cross});
    if (!is_positively_folded(R, g, o)) continue;
    int d = dim_gallery(R, g, o).dim;
    auto [it, fresh] = best.emplace(gallery_end(R, g), d);
    if (!fresh) it->second = std::max(it->second, d);
  }
  return best;
}

}  // namespace

TEST_CASE("search endpoints match brute force")
{
  for (const char* t : {"A2", "C2"}) {
    RootSystem R = build_root_system(t);
    for (auto& x : elements_up_to_length(R, 6))
      for (auto& w : R.weyl().elems) {
        SearchSpec s;
        s.word = reduced_word_affine(R, x);
        s.orientation = Orientation{w};
        auto got = search_endpoints(R, s);
        auto want = brute_endpoints(R, s.word, s.orientation);
        REQUIRE(got.size() == want.size());
        for (auto& [y, d] : want) CHECK(got.at(y).best_dim == d);
      }
  }
}

TEST_CASE("enumerated galleries re-score to their reported stats")
{
  RootSystem R = build_root_system("C2");
  for (auto& x : elements_up_to_length(R, 6)) {
    SearchSpec s;
    s.word = reduced_word_affine(R, x);
    s.orientation = opposite_orientation(R);
    long long n = 0;
    enumerate_folded(R, s, [&](const Gallery& g, const DimStats& d) {
      ++n;
      CHECK(gallery_type(g) == s.word);
      CHECK(is_positively_folded(R, g, s.orientation));
      CHECK(dim_gallery(R, g, s.orientation) == d);
    });
    CHECK(n >= 1);
  }
}

TEST_CASE("prunes never change results")
{
  for (const char* t : {"A2", "C2"}) {
    RootSystem R = build_root_system(t);
    for (auto& x : elements_up_to_length(R, 6))
      for (auto& w : R.weyl().elems)
        for (auto& target : {affine_identity(R), translation(R, R.highest_coroot)}) {
          SearchSpec on;
          on.word = reduced_word_affine(R, x);
          on.orientation = Orientation{w};
          on.target = target;
          SearchSpec off = on;
          off.prune_distance = off.prune_fold_bound = off.prune_bound = false;
          MaxDimResult a = max_dim_folded(R, on), b = max_dim_folded(R, off);
          REQUIRE(a.found == b.found);
          if (!a.found) continue;
          CHECK(a.dim == b.dim);
          CHECK(a.maximal_count == b.maximal_count);
          CHECK(a.stats.branches <= b.stats.branches);
          CHECK(gallery_end(R, a.witness) == target);
          CHECK(dim_gallery(R, a.witness, on.orientation).dim == a.dim);
        }
  }
}

TEST_CASE("branch cap is reported")
{
  RootSystem R = build_root_system("C2");
  SearchSpec s;
  s.word = reduced_word_affine(R, parse_element(R, "t[2,2]*w0"));
  s.orientation = opposite_orientation(R);
  s.max_branches = 3;
  MaxDimResult r = max_dim_folded(R, s);
  CHECK(!r.stats.exhaustive);
}

TEST_CASE("fold count never exceeds l(w0)")
{
  RootSystem R = build_root_system("A2");
  SearchSpec s;
  s.word = reduced_word_affine(R, parse_element(R, "t[3,3]*w0"));
  s.orientation = opposite_orientation(R);
  s.prune_fold_bound = false;
  int most = 0;
  enumerate_folded(R, s, [&](const Gallery& g, const DimStats&) { most = std::max(most, fold_count(g)); });
  CHECK(most <= 3);
  CHECK(most == 3);
}

TEST_CASE("braid invariance on small instances")
{
  for (const char* t : {"A2", "C2", "G2"}) {
    RootSystem R = build_root_system(t);
    for (auto& x : elements_up_to_length(R, 5)) {
      BraidReport b = braid_invariance_check(R, x, opposite_orientation(R));
      CHECK_MESSAGE(b.consistent, b.detail);
    }
  }
}
