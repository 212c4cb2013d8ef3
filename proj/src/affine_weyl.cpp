#include "adlv/affine_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace adlv {

namespace {

long long floor_div(long long a, long long b)
{
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IVec add(const IVec& a, const IVec& b)
{
  IVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IVec scaled(const IVec& a, int k)
{
  IVec r = a;
  for (int& x : r) x *= k;
  return r;
}

// true iff w^{-1} alpha_r < 0
bool inverts(const RootSystem& R, const FiniteWeylElement& w, int r)
{
  if (R.table) {
    auto it = R.table->index.find(w.matrix);
    if (it != R.table->index.end()) return R.table->inv_bit[it->second][r];
  }
  const IVec& c = R.pos_roots[r];
  int n = R.rank;
  bool neg = false;
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += w.matrix[i][j] * c[i];
    if (s > 0) return false;
    if (s < 0) neg = true;
  }
  return neg;
}

std::string trim(const std::string& s)
{
  size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

AffineElement affine_identity(const RootSystem& R) { return {IVec(R.rank, 0), weyl_identity(R)}; }

AffineElement make_affine(const RootSystem& R, const IVec& lambda, const FiniteWeylElement& w)
{
  if (int(lambda.size()) != R.rank) throw Error("coweight has wrong dimension");
  if (!in_coroot_lattice(R, lambda))
    throw Error("translation " + format_vec(lambda) + " is not in the coroot lattice of " + R.label);
  return {lambda, w};
}

AffineElement translation(const RootSystem& R, const IVec& lambda)
{
  return make_affine(R, lambda, weyl_identity(R));
}

AffineElement finite_part(const RootSystem& R, const FiniteWeylElement& w) { return {IVec(R.rank, 0), w}; }

AffineElement affine_generator(const RootSystem& R, int i)
{
  if (i < 0 || i > R.rank) throw Error("generator index out of range");
  if (i == 0) return {R.highest_coroot, root_reflection(R, R.highest_index)};
  return finite_part(R, simple_reflection(R, i));
}

AffineElement affine_reflection(const RootSystem& R, int root, int k)
{
  return {scaled(R.pos_coroots[root], k), root_reflection(R, root)};
}

AffineElement affine_mul(const AffineElement& x, const AffineElement& y)
{
  return {add(x.lambda, weyl_act(x.w, y.lambda)), weyl_mul(x.w, y.w)};
}

AffineElement affine_inv(const RootSystem& R, const AffineElement& x)
{
  FiniteWeylElement wi = weyl_inv(R, x.w);
  return {scaled(weyl_act(wi, x.lambda), -1), wi};
}

AffineElement affine_from_word(const RootSystem& R, const Word& word)
{
  AffineElement x = affine_identity(R);
  for (int g : word) x = affine_mul(x, affine_generator(R, g));
  return x;
}

bool is_translation(const AffineElement& x) { return is_identity(x.w); }

AlcoveCoords alcove_coords_fast(const RootSystem& R, const AffineElement& x)
{
  AlcoveCoords k(R.num_positive_roots());
  for (int r = 0; r < R.num_positive_roots(); ++r)
    k[r] = R.root_pairing(r, x.lambda) - (inverts(R, x.w, r) ? 1 : 0);
  return k;
}

AlcoveCoords alcove_coords(const RootSystem& R, const AffineElement& x)
{
  // barycenter of c_f: (1/(n+1)) sum_i varpi_i^vee / m_i, theta = sum m_i alpha_i
  int n = R.rank;
  long long l = 1;
  for (int m : R.highest_root) l = std::lcm(l, (long long)m);
  long long D = (n + 1) * l;
  std::vector<long long> bary(n);
  for (int i = 0; i < n; ++i) bary[i] = D / ((n + 1) * (long long)R.highest_root[i]);
  std::vector<long long> p(n);
  for (int i = 0; i < n; ++i) {
    long long s = D * x.lambda[i];
    for (int j = 0; j < n; ++j) s += x.w.matrix[i][j] * bary[j];
    p[i] = s;
  }
  AlcoveCoords k(R.num_positive_roots());
  for (int r = 0; r < R.num_positive_roots(); ++r) {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += R.pos_roots[r][i] * p[i];
    k[r] = int(floor_div(s, D));
  }
  return k;
}

int alcove_distance(const AlcoveCoords& a, const AlcoveCoords& b)
{
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

int affine_length(const RootSystem& R, const AffineElement& x)
{
  auto k = alcove_coords_fast(R, x);
  int s = 0;
  for (int v : k) s += std::abs(v);
  return s;
}

int affine_length_formula(const RootSystem& R, const AffineElement& x)
{
  int s = 0;
  for (int r = 0; r < R.num_positive_roots(); ++r) {
    int p = R.root_pairing(r, x.lambda);
    s += inverts(R, x.w, r) ? std::abs(p - 1) : std::abs(p);
  }
  return s;
}

Word reduced_word_affine(const RootSystem& R, const AffineElement& x)
{
  Word word;
  AffineElement cur = x;
  int len = affine_length(R, cur);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= R.rank; ++i) {
      AffineElement z = affine_mul(affine_generator(R, i), cur);
      int lz = affine_length(R, z);
      if (lz < len) {
        word.push_back(i);
        cur = z;
        len = lz;
        found = true;
        break;
      }
    }
    if (!found) throw Error("reduced_word_affine: no descent found");
  }
  return word;
}

std::vector<Word> all_reduced_words_affine(const RootSystem& R, const AffineElement& x, size_t limit)
{
  std::vector<Word> out;
  Word prefix;
  auto rec = [&](auto&& self, const AffineElement& cur, int len) -> void {
    if (out.size() > limit) throw Error("too many reduced words");
    if (len == 0) {
      out.push_back(prefix);
      return;
    }
    for (int i = 0; i <= R.rank; ++i) {
      AffineElement z = affine_mul(affine_generator(R, i), cur);
      if (affine_length(R, z) < len) {
        prefix.push_back(i);
        self(self, z, len - 1);
        prefix.pop_back();
      }
    }
  };
  rec(rec, x, affine_length(R, x));
  return out;
}

AffineElement alcove_from_coords(const RootSystem& R, const AlcoveCoords& k)
{
  AffineElement cur = affine_identity(R);
  int d = alcove_distance(alcove_coords_fast(R, cur), k);
  while (d > 0) {
    bool moved = false;
    for (int i = 0; i <= R.rank; ++i) {
      AffineElement z = affine_mul(cur, affine_generator(R, i));
      int dz = alcove_distance(alcove_coords_fast(R, z), k);
      if (dz < d) {
        cur = z;
        d = dz;
        moved = true;
        break;
      }
    }
    if (!moved) throw Error("coordinates do not describe an alcove");
  }
  return cur;
}

ChamberInfo chamber_and_shrunken(const RootSystem& R, const AffineElement& x)
{
  AlcoveCoords k = alcove_coords_fast(R, x);
  // walk in the finite chamber graph towards the sign pattern of k
  FiniteWeylElement u = weyl_identity(R);
  auto mismatch = [&](const FiniteWeylElement& v) {
    int m = 0;
    for (int r = 0; r < R.num_positive_roots(); ++r) m += inverts(R, v, r) != (k[r] < 0);
    return m;
  };
  int m = mismatch(u);
  while (m > 0) {
    for (int i = 1; i <= R.rank; ++i) {
      auto z = weyl_mul(u, simple_reflection(R, i));
      int mz = mismatch(z);
      if (mz < m) {
        u = z;
        m = mz;
        break;
      }
    }
  }
  return {u, alcove_in_shrunken(R, k, u)};
}

bool alcove_in_shrunken(const RootSystem& R, const AlcoveCoords& k, const FiniteWeylElement& u)
{
  for (int r = 0; r < R.num_positive_roots(); ++r) {
    bool positive_side = !inverts(R, u, r);
    if (positive_side ? k[r] < 1 : k[r] > -2) return false;
  }
  return true;
}

bool star_in_shrunken(const RootSystem& R, const IVec& lambda, const FiniteWeylElement& u)
{
  // alcoves at lambda realise both k = <a,lambda> and k = <a,lambda> - 1 for every root
  for (int r = 0; r < R.num_positive_roots(); ++r) {
    int p = R.root_pairing(r, lambda);
    bool positive_side = !inverts(R, u, r);
    if (positive_side ? p - 1 < 1 : p > -2) return false;
  }
  return true;
}

bool in_convex_hull(const RootSystem& R, const AffineElement& z, const AffineElement& x)
{
  return affine_length(R, z) + affine_length(R, affine_mul(affine_inv(R, z), x)) == affine_length(R, x);
}

bool negative_cone_member(const RootSystem& R, const IVec& mu, const IVec& base)
{
  IVec diff = base;
  for (size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
  auto c = coroot_coefficients(R, diff);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](int v) { return v >= 0; });
}

std::vector<AffineElement> elements_up_to_length(const RootSystem& R, int max_len)
{
  std::set<AffineElement> seen{affine_identity(R)};
  std::vector<AffineElement> frontier{affine_identity(R)};
  std::vector<std::pair<Word, AffineElement>> all{{Word{}, affine_identity(R)}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffineElement> next;
    for (auto& x : frontier)
      for (int i = 0; i <= R.rank; ++i) {
        AffineElement y = affine_mul(x, affine_generator(R, i));
        if (seen.count(y) || affine_length(R, y) != len) continue;
        seen.insert(y);
        next.push_back(y);
      }
    for (auto& y : next) all.push_back({reduced_word_affine(R, y), y});
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](auto& a, auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<AffineElement> out;
  for (auto& p : all) out.push_back(p.second);
  return out;
}

AffineElement parse_element(const RootSystem& R, const std::string& text)
{
  std::string s = trim(text);
  if (s.empty()) throw Error("empty element");
  AffineElement x = affine_identity(R);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t star = s.find('*', pos);
    // a '*' inside t[...] cannot occur, so plain splitting is safe
    std::string tok = trim(s.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
    if (tok.empty()) throw Error("malformed element: " + text);
    AffineElement f;
    if (tok == "1" || tok == "id" || tok == "e") {
      f = affine_identity(R);
    } else if (tok == "w0") {
      f = finite_part(R, longest_element(R));
    } else if (tok[0] == 's' && tok.size() > 1 &&
               std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit((unsigned char)c); })) {
      int i = std::stoi(tok.substr(1));
      if (i > R.rank) throw Error("generator out of range: " + tok);
      f = affine_generator(R, i);
    } else if (tok[0] == 't') {
      std::string body = trim(tok.substr(1));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw Error("malformed translation: " + tok);
      body = body.substr(1, body.size() - 2);
      IVec lam;
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(item, &used);
        } catch (...) {
          throw Error("malformed translation: " + tok);
        }
        if (used != item.size()) throw Error("malformed translation: " + tok);
        lam.push_back(v);
      }
      if (int(lam.size()) != R.rank) throw Error("translation has wrong dimension: " + tok);
      f = translation(R, lam);
    } else {
      throw Error("unknown token: " + tok);
    }
    x = affine_mul(x, f);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return x;
}

std::string format_element(const RootSystem& R, const AffineElement& x)
{
  std::string out;
  if (std::any_of(x.lambda.begin(), x.lambda.end(), [](int v) { return v != 0; }))
    out = "t" + format_vec(x.lambda);
  for (int i : weyl_reduced_word(R, x.w)) {
    if (!out.empty()) out += "*";
    out += "s" + std::to_string(i);
  }
  return out.empty() ? "1" : out;
}

}  // namespace adlv
