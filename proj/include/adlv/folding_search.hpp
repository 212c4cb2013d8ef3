#pragma once

#include "adlv/galleries.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

namespace adlv {

struct SearchSpec {
  Word word;  // must be reduced
  Orientation orientation;
  std::optional<AffineElement> start;   // default c_f
  std::optional<AffineElement> target;  // default: any end alcove
  long long max_branches = 100000000;
  std::optional<int> max_folds;
  // sound prunes from the counting lemmas; switching them off never changes results
  bool prune_distance = true;    // remaining steps must cover the distance to target
  bool prune_fold_bound = true;  // F <= l(w0)
  bool prune_bound = true;       // branch and bound in max_dim_folded
  bool count_maximal = true;     // keep ties alive so maximal galleries are counted
};

struct SearchStats {
  long long branches = 0;
  bool exhaustive = true;
};

struct MaxDimResult {
  bool found = false;
  int dim = 0;
  int folds = 0;
  Gallery witness;
  long long maximal_count = 0;
  SearchStats stats;
};

struct EndpointResult {
  int best_dim = 0;
  int witness_folds = 0;
  Gallery witness;
  long long maximal_count = 0;
  std::set<int> fold_counts;          // folds over all galleries ending here
  std::set<int> maximal_fold_counts;  // folds over the maximal ones
};

using GalleryVisitor = std::function<void(const Gallery&, const DimStats&)>;

// left-to-right fold-or-cross DFS, CROSS branch first
SearchStats enumerate_folded(const RootSystem& R, const SearchSpec& spec, const GalleryVisitor& visit);
MaxDimResult max_dim_folded(const RootSystem& R, const SearchSpec& spec);
std::map<AffineElement, EndpointResult> search_endpoints(const RootSystem& R, const SearchSpec& spec,
                                                        SearchStats* stats = nullptr);

struct BraidReport {
  int words_checked = 0;
  bool consistent = true;
  std::string detail;
  SearchStats stats;
};
// per orientation: endpoints, max dims and attained fold counts agree over all reduced words of x
BraidReport braid_invariance_check(const RootSystem& R, const AffineElement& x, const Orientation& o,
                                   std::optional<AffineElement> target = std::nullopt);

}  // namespace adlv
