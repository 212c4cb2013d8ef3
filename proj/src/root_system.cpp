#include "adlv/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace adlv {

namespace {

IMat cartan_matrix(char fam, int n)
{
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (fam) {
  case 'A':
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    break;
  case 'B':
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    a[n - 2][n - 1] = -2;  // alpha_n short
    break;
  case 'C':
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    a[n - 1][n - 2] = -2;  // alpha_n long
    break;
  case 'D':
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
    break;
  case 'E':
    // Bourbaki: 1-3-4-5-...-n, 2 attached to 4
    link(0, 2);
    link(1, 3);
    for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
    break;
  case 'F':
    link(0, 1); link(1, 2); link(2, 3);
    a[1][2] = -2;
    break;
  case 'G':
    link(0, 1);
    a[1][0] = -3;  // alpha_1 short
    break;
  }
  return a;
}

bool valid_type(char fam, int n)
{
  switch (fam) {
  case 'A': return n >= 1 && n <= 8;
  case 'B': return n >= 2 && n <= 8;
  case 'C': return n >= 2 && n <= 8;
  case 'D': return n >= 4 && n <= 8;
  case 'E': return n >= 6 && n <= 8;
  case 'F': return n == 4;
  case 'G': return n == 2;
  }
  return false;
}

// <beta, alpha_i^vee> for beta in simple-root coordinates
int root_coroot(const IMat& a, const IVec& beta, int i)
{
  int s = 0;
  for (size_t j = 0; j < beta.size(); ++j) s += beta[j] * a[j][i];
  return s;
}

IVec reflect_coweight(const IMat& a, const IVec& lam, int i)
{
  IVec r = lam;
  int c = lam[i];
  for (size_t j = 0; j < lam.size(); ++j) r[j] -= c * a[j][i];
  return r;
}

IMat mat_mul(const IMat& x, const IMat& y)
{
  size_t n = x.size();
  IMat r(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (!x[i][k]) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

IMat identity_mat(int n)
{
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// w^{-1} alpha has coordinates M^T c
IVec inverse_image_root(const IMat& m, const IVec& c)
{
  size_t n = c.size();
  IVec r(n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) r[j] += m[i][j] * c[i];
  return r;
}

bool is_negative_vec(const IVec& v)
{
  for (int x : v)
    if (x > 0) return false;
  return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
}

std::shared_ptr<WeylTable> materialize(const RootSystem& R)
{
  auto t = std::make_shared<WeylTable>();
  int n = R.rank;
  t->rank = n;
  t->nroots = R.num_positive_roots();
  std::vector<IMat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection(R, i + 1).matrix);

  t->elems.push_back({identity_mat(n)});
  t->index[t->elems[0].matrix] = 0;
  for (size_t k = 0; k < t->elems.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      IMat m = mat_mul(t->elems[k].matrix, gens[i]);
      if (!t->index.count(m)) {
        t->index[m] = int(t->elems.size());
        t->elems.push_back({m});
      }
    }
  }
  int N = t->size();
  t->length.assign(N, 0);
  t->inverse.assign(N, 0);
  t->rmul.assign(N, std::vector<int>(n + 1, 0));
  t->lmul.assign(N, std::vector<int>(n + 1, 0));
  t->inv_bit.assign(N, std::vector<char>(t->nroots, 0));
  t->theta_coroot.assign(N, IVec());
  t->panel_root.assign(N, std::vector<int>(n + 1, 0));
  t->panel_sign.assign(N, std::vector<int>(n + 1, 0));
  IMat s_theta = root_reflection(R, R.highest_index).matrix;
  for (int k = 0; k < N; ++k) {
    const IMat& m = t->elems[k].matrix;
    int len = 0;
    for (int r = 0; r < t->nroots; ++r) {
      bool neg = is_negative_vec(inverse_image_root(m, R.pos_roots[r]));
      t->inv_bit[k][r] = neg;
      len += neg;
    }
    t->length[k] = len;
    t->rmul[k][0] = t->index.at(mat_mul(m, s_theta));
    for (int i = 0; i < n; ++i) {
      t->rmul[k][i + 1] = t->index.at(mat_mul(m, gens[i]));
      t->lmul[k][i + 1] = t->index.at(mat_mul(gens[i], m));
    }
    t->lmul[k][0] = t->index.at(mat_mul(s_theta, m));
    t->theta_coroot[k] = weyl_act(t->elems[k], R.highest_coroot);
  }
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j)
      if (mat_mul(t->elems[k].matrix, t->elems[j].matrix) == t->elems[0].matrix) {
        t->inverse[k] = j;
        break;
      }
  for (int k = 0; k < N; ++k) {
    const IMat& minv = t->elems[t->inverse[k]].matrix;
    for (int j = 0; j <= n; ++j) {
      IVec beta = j == 0 ? R.highest_root : R.pos_roots[j - 1];
      // w(beta) = (w^{-1})^{-1} beta, coordinates (M^{-1})^T c
      IVec img = inverse_image_root(minv, beta);
      int sign = is_negative_vec(img) ? -1 : 1;
      if (sign < 0)
        for (int& x : img) x = -x;
      t->panel_root[k][j] = R.root_index(img);
      t->panel_sign[k][j] = sign;
    }
  }
  t->identity = 0;
  t->longest = int(std::max_element(t->length.begin(), t->length.end()) - t->length.begin());
  return t;
}

}  // namespace

int RootSystem::root_index(const IVec& v) const
{
  auto it = root_lookup.find(v);
  return it == root_lookup.end() ? -1 : it->second;
}

int RootSystem::pairing(const IVec& alpha, const IVec& lambda) const
{
  if (int(alpha.size()) != rank || int(lambda.size()) != rank)
    throw Error("pairing: dimension mismatch");
  int s = 0;
  for (int i = 0; i < rank; ++i) s += alpha[i] * lambda[i];
  return s;
}

int RootSystem::rho_pairing(const IVec& lambda) const
{
  if (int(lambda.size()) != rank) throw Error("rho pairing: dimension mismatch");
  int two = 0;
  for (const IVec& a : pos_roots) two += pairing(a, lambda);
  if (two % 2) throw Error("rho pairing of " + format_vec(lambda) + " is not an integer");
  return two / 2;
}

const WeylTable& RootSystem::weyl() const
{
  if (!table) throw Error("finite Weyl group of " + label + " is not materialized");
  return *table;
}

int WeylTable::find(const FiniteWeylElement& w) const
{
  auto it = index.find(w.matrix);
  if (it == index.end()) throw Error("element not in Weyl table");
  return it->second;
}

int WeylTable::mul(int a, int b) const
{
  // walk a reduced word of b; words are short for the tabulated ranks
  int x = a;
  std::vector<int> word;
  int y = b;
  while (length[y] > 0) {
    for (int i = 1; i <= rank; ++i) {
      int z = rmul[y][i];
      if (length[z] < length[y]) {
        word.push_back(i);
        y = z;
        break;
      }
    }
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = rmul[x][*it];
  return x;
}

RootSystem build_root_system(const std::string& label)
{
  if (label.size() < 2) throw Error("unknown type label: " + label);
  char fam = char(std::toupper(label[0]));
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(label.substr(1), &pos);
    if (pos != label.size() - 1) throw Error("");
  } catch (...) {
    throw Error("unknown type label: " + label);
  }
  if (std::string("ABCDEFG").find(fam) == std::string::npos)
    throw Error("unknown type label: " + label);
  if (n < 1 || n > 8 || !valid_type(fam, n)) throw Error("rank out of range for " + label);

  RootSystem R;
  R.family = fam;
  R.rank = n;
  R.label = std::string(1, fam) + std::to_string(n);
  R.cartan = cartan_matrix(fam, n);
  const IMat& a = R.cartan;

  // closure under simple-root strings, layer by height
  std::set<IVec> known;
  std::vector<IVec> layer;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<IVec> roots;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<IVec>());
    for (auto& r : layer) roots.push_back(r);
    std::set<IVec> next;
    for (auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        IVec d = beta;
        while (true) {
          d[i] -= 1;
          if (!known.count(d)) break;
          ++p;
        }
        int q = p - root_coroot(a, beta, i);
        if (q > 0) {
          IVec up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (auto& r : layer) known.insert(r);
  }
  R.pos_roots = roots;
  for (size_t r = 0; r < roots.size(); ++r) {
    R.root_lookup[roots[r]] = int(r);
    R.heights.push_back(std::accumulate(roots[r].begin(), roots[r].end(), 0));
  }
  // coroots: beta^vee = s_i((s_i beta)^vee) with s_i lowering the height
  R.pos_coroots.resize(roots.size());
  for (size_t r = 0; r < roots.size(); ++r) {
    const IVec& beta = roots[r];
    if (R.heights[r] == 1) {
      int i = int(std::find(beta.begin(), beta.end(), 1) - beta.begin());
      IVec col(n);
      for (int j = 0; j < n; ++j) col[j] = a[j][i];
      R.pos_coroots[r] = col;
      continue;
    }
    for (int i = 0; i < n; ++i) {
      int c = root_coroot(a, beta, i);
      if (c > 0) {
        IVec lower = beta;
        lower[i] -= c;
        R.pos_coroots[r] = reflect_coweight(a, R.pos_coroots[R.root_lookup.at(lower)], i);
        break;
      }
    }
  }
  R.highest_index = int(std::max_element(R.heights.begin(), R.heights.end()) - R.heights.begin());
  R.highest_root = roots[R.highest_index];
  R.highest_coroot = R.pos_coroots[R.highest_index];
  if (n <= 4) R.table = materialize(R);
  return R;
}

FiniteWeylElement weyl_identity(const RootSystem& R) { return {identity_mat(R.rank)}; }

FiniteWeylElement simple_reflection(const RootSystem& R, int i)
{
  if (i < 1 || i > R.rank) throw Error("simple reflection index out of range");
  IMat m = identity_mat(R.rank);
  for (int j = 0; j < R.rank; ++j) m[j][i - 1] -= R.cartan[j][i - 1];
  return {m};
}

FiniteWeylElement root_reflection(const RootSystem& R, int r)
{
  // lambda -> lambda - <alpha, lambda> alpha^vee
  const IVec& al = R.pos_roots[r];
  const IVec& co = R.pos_coroots[r];
  IMat m = identity_mat(R.rank);
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j) m[i][j] -= co[i] * al[j];
  return {m};
}

FiniteWeylElement weyl_mul(const FiniteWeylElement& a, const FiniteWeylElement& b)
{
  if (a.matrix.size() != b.matrix.size()) throw Error("weyl_mul: dimension mismatch");
  return {mat_mul(a.matrix, b.matrix)};
}

FiniteWeylElement weyl_inv(const RootSystem& R, const FiniteWeylElement& w)
{
  auto word = weyl_reduced_word(R, w);
  std::reverse(word.begin(), word.end());
  return weyl_from_word(R, word);
}

FiniteWeylElement weyl_from_word(const RootSystem& R, const std::vector<int>& word)
{
  FiniteWeylElement w = weyl_identity(R);
  for (int i : word) w = weyl_mul(w, simple_reflection(R, i));
  return w;
}

FiniteWeylElement longest_element(const RootSystem& R)
{
  // repeatedly extend by a simple reflection that increases length
  FiniteWeylElement w = weyl_identity(R);
  int len = 0;
  while (true) {
    bool grew = false;
    for (int i = 1; i <= R.rank; ++i) {
      auto z = weyl_mul(w, simple_reflection(R, i));
      int lz = weyl_length(R, z);
      if (lz > len) {
        w = z;
        len = lz;
        grew = true;
        break;
      }
    }
    if (!grew) return w;
  }
}

IVec weyl_act(const FiniteWeylElement& w, const IVec& lambda)
{
  size_t n = lambda.size();
  if (w.matrix.size() != n) throw Error("weyl_act: dimension mismatch");
  IVec r(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[i] += w.matrix[i][j] * lambda[j];
  return r;
}

IVec weyl_act_root(const RootSystem& R, const FiniteWeylElement& w, const IVec& alpha)
{
  return inverse_image_root(weyl_inv(R, w).matrix, alpha);
}

bool is_identity(const FiniteWeylElement& w) { return w.matrix == identity_mat(int(w.matrix.size())); }

int weyl_length(const RootSystem& R, const FiniteWeylElement& w)
{
  if (R.table) {
    auto it = R.table->index.find(w.matrix);
    if (it != R.table->index.end()) return R.table->length[it->second];
  }
  int len = 0;
  for (auto& c : R.pos_roots) len += is_negative_vec(inverse_image_root(w.matrix, c));
  return len;
}

std::vector<int> weyl_reduced_word(const RootSystem& R, const FiniteWeylElement& w)
{
  // lex-least: peel the smallest left descent each time
  std::vector<int> word;
  FiniteWeylElement cur = w;
  int len = weyl_length(R, cur);
  while (len > 0) {
    for (int i = 1; i <= R.rank; ++i) {
      auto z = weyl_mul(simple_reflection(R, i), cur);
      int lz = weyl_length(R, z);
      if (lz < len) {
        word.push_back(i);
        cur = z;
        len = lz;
        break;
      }
    }
  }
  return word;
}

std::vector<std::vector<int>> weyl_all_reduced_words(const RootSystem& R, const FiniteWeylElement& w)
{
  std::vector<std::vector<int>> out;
  int len = weyl_length(R, w);
  if (len == 0) return {{}};
  for (int i = 1; i <= R.rank; ++i) {
    auto z = weyl_mul(simple_reflection(R, i), w);
    if (weyl_length(R, z) < len)
      for (auto& tail : weyl_all_reduced_words(R, z)) {
        std::vector<int> word{i};
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(std::move(word));
      }
  }
  return out;
}

std::vector<int> weyl_support(const RootSystem& R, const FiniteWeylElement& w)
{
  auto word = weyl_reduced_word(R, w);
  std::set<int> s(word.begin(), word.end());
  return {s.begin(), s.end()};
}

bool has_full_support(const RootSystem& R, const FiniteWeylElement& w)
{
  return int(weyl_support(R, w).size()) == R.rank;
}

bool is_dominant(const IVec& lambda)
{
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

bool is_regular(const RootSystem& R, const IVec& lambda)
{
  for (auto& a : R.pos_roots)
    if (R.pairing(a, lambda) == 0) return false;
  return true;
}

DominantRep dominant_rep(const RootSystem& R, const IVec& lambda)
{
  // lambda = s_{i1} ... s_{ik} lambda^+ collected while reflecting upward;
  // each step removes a descent, so the product is minimal
  IVec cur = lambda;
  std::vector<int> word;
  while (true) {
    int i = -1;
    for (int j = 0; j < R.rank; ++j)
      if (cur[j] < 0) {
        i = j;
        break;
      }
    if (i < 0) break;
    cur = reflect_coweight(R.cartan, cur, i);
    word.push_back(i + 1);
  }
  return {cur, weyl_from_word(R, word)};
}

IVec antidominant_rep(const RootSystem& R, const IVec& lambda)
{
  return weyl_act(longest_element(R), dominant_rep(R, lambda).dominant);
}

std::optional<IVec> coroot_coefficients(const RootSystem& R, const IVec& lambda)
{
  // solve cartan * c = lambda exactly by fraction-free Gaussian elimination
  int n = R.rank;
  if (int(lambda.size()) != n) throw Error("coroot lattice: dimension mismatch");
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = R.cartan[i][j];
    m[i][n] = lambda[i];
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      long long f = m[r][c], g = m[c][c];
      for (int k = 0; k <= n; ++k) m[r][k] = m[r][k] * g - m[c][k] * f;
      long long gg = 0;
      for (int k = 0; k <= n; ++k) gg = std::gcd(gg, m[r][k]);
      if (gg > 1)
        for (int k = 0; k <= n; ++k) m[r][k] /= gg;
    }
  }
  IVec c(n);
  for (int i = 0; i < n; ++i) {
    if (m[i][n] % m[i][i] != 0) return std::nullopt;
    c[i] = int(m[i][n] / m[i][i]);
  }
  return c;
}

bool in_coroot_lattice(const RootSystem& R, const IVec& lambda)
{
  return coroot_coefficients(R, lambda).has_value();
}

std::string format_vec(const IVec& v)
{
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace adlv
