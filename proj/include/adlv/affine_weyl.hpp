#pragma once

#include "adlv/root_system.hpp"

#include <string>
#include <vector>

namespace adlv {

// x = t^lambda w; also names the alcove x c_f.
struct AffineElement {
  IVec lambda;
  FiniteWeylElement w;
  bool operator==(const AffineElement&) const = default;
  auto operator<=>(const AffineElement&) const = default;
};

using AlcoveCoords = IVec;  // k_alpha indexed like R.pos_roots
using Word = std::vector<int>;  // generators 0..n, 0 = s_0

AffineElement affine_identity(const RootSystem& R);
// throws unless lambda lies in the coroot lattice
AffineElement make_affine(const RootSystem& R, const IVec& lambda, const FiniteWeylElement& w);
AffineElement translation(const RootSystem& R, const IVec& lambda);
AffineElement finite_part(const RootSystem& R, const FiniteWeylElement& w);
AffineElement affine_generator(const RootSystem& R, int i);  // s_0 .. s_n
AffineElement affine_reflection(const RootSystem& R, int root, int k);  // s_{alpha,k}
AffineElement affine_mul(const AffineElement& x, const AffineElement& y);
AffineElement affine_inv(const RootSystem& R, const AffineElement& x);
AffineElement affine_from_word(const RootSystem& R, const Word& word);
bool is_translation(const AffineElement& x);

int affine_length(const RootSystem& R, const AffineElement& x);
// the Iwahori-Matsumoto closed form, kept separately so tests can compare
int affine_length_formula(const RootSystem& R, const AffineElement& x);
Word reduced_word_affine(const RootSystem& R, const AffineElement& x);
std::vector<Word> all_reduced_words_affine(const RootSystem& R, const AffineElement& x,
                                           size_t limit = 100000);

// k_alpha from the exact barycenter of x c_f
AlcoveCoords alcove_coords(const RootSystem& R, const AffineElement& x);
// the same values from the inversion set, used on hot paths
AlcoveCoords alcove_coords_fast(const RootSystem& R, const AffineElement& x);
// number of hyperplanes separating the two alcoves
int alcove_distance(const AlcoveCoords& a, const AlcoveCoords& b);
// element whose alcove has the given k-coordinates (wall-crossing walk from c_f);
// throws if the coordinates are not those of an alcove
AffineElement alcove_from_coords(const RootSystem& R, const AlcoveCoords& k);

struct ChamberInfo {
  FiniteWeylElement chamber;  // u with x c_f inside C_u
  bool shrunken = false;
};
ChamberInfo chamber_and_shrunken(const RootSystem& R, const AffineElement& x);
bool alcove_in_shrunken(const RootSystem& R, const AlcoveCoords& k, const FiniteWeylElement& u);
// every alcove having lambda as a vertex lies in the shrunken chamber of u
bool star_in_shrunken(const RootSystem& R, const IVec& lambda, const FiniteWeylElement& u);

bool in_convex_hull(const RootSystem& R, const AffineElement& z, const AffineElement& x);
bool negative_cone_member(const RootSystem& R, const IVec& mu, const IVec& base);

// all elements of length <= max_len, ordered by (length, reduced word)
std::vector<AffineElement> elements_up_to_length(const RootSystem& R, int max_len);

// element grammar: t[c1,...,cn], s0..sn, w0, 1, products with '*'
AffineElement parse_element(const RootSystem& R, const std::string& text);
std::string format_element(const RootSystem& R, const AffineElement& x);

}  // namespace adlv
