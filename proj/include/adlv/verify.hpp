#pragma once

#include "adlv/json_io.hpp"

#include <string>
#include <vector>

namespace adlv {

struct VerifyOptions {
  int max_len = 8;
  int trials = 200;
  unsigned seed = 7;
  long long max_branches = 100000000;
  int threads = 1;
};

// {"schema", "suite", "type", "params", "cases": [{"case", "status", "detail"}], "summary"}
// status is "pass", "fail" or "skip" (search cap hit)
Json run_suite(const std::string& suite, const RootSystem& R, const VerifyOptions& opt);
const std::vector<std::string>& suite_names();

// translation classes used by the symmetry suite: 0 and the smallest dominant regular
// coweights of R^vee, each with its whole W-orbit
std::vector<std::vector<IVec>> symmetry_b_classes(const RootSystem& R);

// one row per x with l(x) <= max_len, in (length, reduced word) order
Json build_table(const RootSystem& R, int max_len, const IVec& mu, const VerifyOptions& opt);
std::string table_to_csv(const Json& table);

// deterministic generator for the randomized suites (no distribution objects, whose
// output differs between standard libraries)
struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed * 6364136223846793005ull + 1442695040888963407ull) {}
  unsigned next()
  {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return unsigned(s >> 33);
  }
  int below(int n) { return int(next() % unsigned(n)); }
};

// random positively folded vertex-to-vertex gallery from the origin, standard orientation,
// type the reduced word of t^lambda w0, random first alcove; redrawn until it lies in the
// operator domain (rejections counted)
Gallery random_operator_gallery(const RootSystem& R, const IVec& lambda, Rng& rng, int* rejected = nullptr);
std::vector<IVec> operator_lambdas(const RootSystem& R, int max_height);

}  // namespace adlv
