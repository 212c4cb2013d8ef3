#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adlv {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear action of w on coweight coordinates.
struct FiniteWeylElement {
  IMat matrix;
  bool operator==(const FiniteWeylElement&) const = default;
  auto operator<=>(const FiniteWeylElement&) const = default;
};

struct WeylTable;

struct RootSystem {
  std::string label;  // e.g. "A2"
  char family = 'A';
  int rank = 0;
  IMat cartan;                     // a_ij = <alpha_i, alpha_j^vee>
  std::vector<IVec> pos_roots;     // simple-root coordinates
  std::vector<IVec> pos_coroots;   // coweight coordinates
  std::vector<int> heights;
  IVec highest_root;
  IVec highest_coroot;
  int highest_index = -1;
  std::map<IVec, int> root_lookup;
  std::shared_ptr<const WeylTable> table;  // null above rank 4

  int num_positive_roots() const { return int(pos_roots.size()); }
  // index of a positive root, -1 if v is not one
  int root_index(const IVec& v) const;
  int pairing(const IVec& alpha, const IVec& lambda) const;
  int root_pairing(int r, const IVec& lambda) const { return pairing(pos_roots[r], lambda); }
  int rho_pairing(const IVec& lambda) const;
  const WeylTable& weyl() const;
};

RootSystem build_root_system(const std::string& label);

// --- finite Weyl group -------------------------------------------------------

FiniteWeylElement weyl_identity(const RootSystem& R);
FiniteWeylElement simple_reflection(const RootSystem& R, int i);           // i in 1..n
FiniteWeylElement root_reflection(const RootSystem& R, int r);             // positive root index
FiniteWeylElement weyl_mul(const FiniteWeylElement& a, const FiniteWeylElement& b);
FiniteWeylElement weyl_inv(const RootSystem& R, const FiniteWeylElement& w);
FiniteWeylElement weyl_from_word(const RootSystem& R, const std::vector<int>& word);
FiniteWeylElement longest_element(const RootSystem& R);
IVec weyl_act(const FiniteWeylElement& w, const IVec& lambda);
// w(alpha) in simple-root coordinates
IVec weyl_act_root(const RootSystem& R, const FiniteWeylElement& w, const IVec& alpha);
bool is_identity(const FiniteWeylElement& w);

int weyl_length(const RootSystem& R, const FiniteWeylElement& w);
std::vector<int> weyl_reduced_word(const RootSystem& R, const FiniteWeylElement& w);
std::vector<std::vector<int>> weyl_all_reduced_words(const RootSystem& R, const FiniteWeylElement& w);
// set of simple reflections occurring in a reduced word (word independent)
std::vector<int> weyl_support(const RootSystem& R, const FiniteWeylElement& w);
bool has_full_support(const RootSystem& R, const FiniteWeylElement& w);

struct DominantRep {
  IVec dominant;
  FiniteWeylElement v_min;  // v_min * dominant == lambda, minimal length
};
DominantRep dominant_rep(const RootSystem& R, const IVec& lambda);
IVec antidominant_rep(const RootSystem& R, const IVec& lambda);
bool is_dominant(const IVec& lambda);
bool is_regular(const RootSystem& R, const IVec& lambda);

// coroot lattice
std::optional<IVec> coroot_coefficients(const RootSystem& R, const IVec& lambda);
bool in_coroot_lattice(const RootSystem& R, const IVec& lambda);

// Materialized finite Weyl group with the data the folding search needs.
struct WeylTable {
  int rank = 0;
  int nroots = 0;
  std::vector<FiniteWeylElement> elems;
  std::map<IMat, int> index;
  std::vector<int> length;
  std::vector<int> inverse;
  std::vector<std::vector<int>> rmul;      // rmul[w][i] = w s_i, i = 1..n (slot 0 = w s_theta)
  std::vector<std::vector<int>> lmul;      // lmul[w][i] = s_i w
  std::vector<std::vector<char>> inv_bit;  // inv_bit[w][r] = 1 iff w^{-1} alpha_r < 0
  std::vector<IVec> theta_coroot;          // w(theta^vee)
  // image of the panel roots: slot 0 is theta, slot i the simple root alpha_i
  std::vector<std::vector<int>> panel_root;  // positive root index of +-w(beta)
  std::vector<std::vector<int>> panel_sign;  // +1 if w(beta) > 0
  int identity = 0;
  int longest = 0;

  int size() const { return int(elems.size()); }
  int find(const FiniteWeylElement& w) const;
  int mul(int a, int b) const;
};

std::string format_vec(const IVec& v);

}  // namespace adlv
