#include "adlv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace adlv {

namespace {

using P2 = std::array<double, 2>;

const char* kColors[] = {"#1f5fbf", "#c0392b", "#27864a", "#8e44ad", "#d35400", "#16756f"};

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

// vertices of x c_f; vertex i has type i (0 = origin type)
std::vector<P2> alcove_vertices(const RootSystem& R, const AffineElement& x)
{
  std::vector<P2> out;
  for (int i = 0; i <= R.rank; ++i) {
    std::vector<double> v(R.rank, 0.0);
    if (i > 0) v[i - 1] = 1.0 / R.highest_root[i - 1];
    // x v = lambda + w v
    std::vector<double> img(R.rank, 0.0);
    for (int a = 0; a < R.rank; ++a) {
      img[a] = x.lambda[a];
      for (int b = 0; b < R.rank; ++b) img[a] += x.w.matrix[a][b] * v[b];
    }
    out.push_back(plane_point(R, img));
  }
  return out;
}

P2 centroid(const std::vector<P2>& v, int skip = -1)
{
  P2 c{0, 0};
  int n = 0;
  for (int i = 0; i < int(v.size()); ++i)
    if (i != skip) {
      c[0] += v[i][0];
      c[1] += v[i][1];
      ++n;
    }
  return {c[0] / n, c[1] / n};
}

P2 lerp(const P2& a, const P2& b, double t) { return {a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t}; }

}  // namespace

std::array<std::array<double, 2>, 2> realization(const RootSystem& R)
{
  const double s3 = std::sqrt(3.0);
  if (R.label == "A2") return {{{1.0, 0.0}, {-0.5, s3 / 2}}};
  if (R.label == "B2") return {{{1.0, -1.0}, {0.0, 1.0}}};
  if (R.label == "C2") return {{{1.0, -1.0}, {0.0, 2.0}}};
  if (R.label == "G2") return {{{1.0, 0.0}, {-1.5, s3 / 2}}};
  throw Error("rendering needs a rank-2 type");
}

std::array<double, 2> plane_point(const RootSystem& R, const std::vector<double>& c)
{
  auto M = realization(R);
  // solve (alpha_i, p) = c_i
  double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  return {(c[0] * M[1][1] - c[1] * M[0][1]) / det, (M[0][0] * c[1] - M[1][0] * c[0]) / det};
}

std::string render_svg(const RootSystem& R, const std::vector<Gallery>& galleries,
                       const std::vector<AffineElement>& alcoves, const SvgOptions& opt)
{
  if (R.rank != 2) throw Error("rendering needs a rank-2 type");
  auto M = realization(R);

  // bounding box over everything drawn
  std::vector<P2> pts = alcove_vertices(R, affine_identity(R));
  std::vector<std::vector<AffineElement>> seqs;
  for (auto& g : galleries) {
    seqs.push_back(gallery_alcoves(R, g));
    for (auto& c : seqs.back())
      for (auto& p : alcove_vertices(R, c)) pts.push_back(p);
  }
  for (auto& a : alcoves)
    for (auto& p : alcove_vertices(R, a)) pts.push_back(p);
  double x0 = 1e18, x1 = -1e18, y0 = 1e18, y1 = -1e18;
  for (auto& p : pts) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
  x0 -= opt.margin;
  x1 += opt.margin;
  y0 -= opt.margin;
  y1 += opt.margin;
  const double S = opt.scale;
  auto X = [&](double x) { return num((x - x0) * S); };
  auto Y = [&](double y) { return num((y1 - y) * S); };
  double legend_h = 20.0 * (2 + galleries.size());
  double W = (x1 - x0) * S, H = (y1 - y0) * S;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W) << "\" height=\"" << num(H + legend_h)
     << "\" viewBox=\"0 0 " << num(W) << ' ' << num(H + legend_h) << "\">\n";
  os << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"context-stroke\"/></marker></defs>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(W) << "\" height=\"" << num(H + legend_h)
     << "\" fill=\"white\"/>\n";

  auto polygon = [&](const std::vector<P2>& v, const std::string& attrs) {
    os << "<polygon points=\"";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << X(v[i][0]) << ',' << Y(v[i][1]);
    os << "\" " << attrs << "/>\n";
  };
  polygon(alcove_vertices(R, affine_identity(R)), "class=\"base\" fill=\"#d9d9d9\"");
  for (auto& a : alcoves) polygon(alcove_vertices(R, a), "class=\"alcove\" fill=\"#f6d7a7\"");

  // hyperplanes H_{alpha,k}, clipped to the box
  P2 corners[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  for (int r = 0; r < R.num_positive_roots(); ++r) {
    P2 a{0, 0};
    for (int i = 0; i < 2; ++i) {
      a[0] += R.pos_roots[r][i] * M[i][0];
      a[1] += R.pos_roots[r][i] * M[i][1];
    }
    double lo = 1e18, hi = -1e18;
    for (auto& c : corners) {
      double v = a[0] * c[0] + a[1] * c[1];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (int k = int(std::ceil(lo)); k <= int(std::floor(hi)); ++k) {
      std::vector<P2> hit;
      for (int e = 0; e < 4; ++e) {
        P2 p = corners[e], q = corners[(e + 1) % 4];
        double fp = a[0] * p[0] + a[1] * p[1] - k, fq = a[0] * q[0] + a[1] * q[1] - k;
        if ((fp <= 0 && fq > 0) || (fp > 0 && fq <= 0)) hit.push_back(lerp(p, q, fp / (fp - fq)));
      }
      if (hit.size() < 2) continue;
      os << "<line class=\"wall\" x1=\"" << X(hit[0][0]) << "\" y1=\"" << Y(hit[0][1]) << "\" x2=\""
         << X(hit[1][0]) << "\" y2=\"" << Y(hit[1][1]) << "\" stroke=\"" << (k == 0 ? "#555" : "#aaa")
         << "\" stroke-width=\"" << (k == 0 ? "1.6" : "0.8") << "\"/>\n";
      if (opt.wall_labels)
        os << "<text class=\"wall-label\" x=\"" << X(hit[1][0]) << "\" y=\"" << Y(hit[1][1])
           << "\" font-size=\"9\" fill=\"#777\">H(" << format_vec(R.pos_roots[r]) << ',' << k << ")</text>\n";
    }
  }

  // galleries: centre to panel to centre; folds double back before the panel
  for (size_t gi = 0; gi < galleries.size(); ++gi) {
    const Gallery& g = galleries[gi];
    const auto& cs = seqs[gi];
    const char* col = kColors[gi % 6];
    std::vector<P2> path{centroid(alcove_vertices(R, cs[0]))};
    std::vector<P2> folds;
    for (size_t i = 0; i < g.steps.size(); ++i) {
      auto v = alcove_vertices(R, cs[i]);
      P2 c = centroid(v);
      P2 panel = centroid(v, g.steps[i].gen);
      if (g.steps[i].kind == StepKind::Cross) {
        path.push_back(panel);
        path.push_back(centroid(alcove_vertices(R, cs[i + 1])));
      } else {
        P2 turn = lerp(c, panel, 0.75);
        path.push_back(turn);
        path.push_back(c);
        folds.push_back(turn);
      }
    }
    os << "<path class=\"gallery\" d=\"";
    for (size_t i = 0; i < path.size(); ++i) os << (i ? " L" : "M") << X(path[i][0]) << ',' << Y(path[i][1]);
    os << "\" fill=\"none\" stroke=\"" << col
       << "\" stroke-width=\"2\" stroke-linejoin=\"round\" stroke-linecap=\"round\" marker-end=\"url(#arrow)\"/>\n";
    os << "<circle class=\"start\" cx=\"" << X(path[0][0]) << "\" cy=\"" << Y(path[0][1])
       << "\" r=\"3.5\" fill=\"" << col << "\"/>\n";
    for (auto& f : folds)
      os << "<circle class=\"fold\" cx=\"" << X(f[0]) << "\" cy=\"" << Y(f[1]) << "\" r=\"2.5\" fill=\"white\" stroke=\""
         << col << "\"/>\n";
  }

  double ly = H + 16;
  os << "<text x=\"8\" y=\"" << num(ly) << "\" font-size=\"12\" font-family=\"sans-serif\">type " << R.label;
  if (opt.orientation)
    os << ", orientation w = " << format_element(R, {IVec(R.rank, 0), opt.orientation->w});
  os << "</text>\n";
  for (size_t gi = 0; gi < galleries.size(); ++gi) {
    ly += 20;
    std::string name = gi < opt.labels.size() ? opt.labels[gi] : "gallery " + std::to_string(gi + 1);
    os << "<text x=\"8\" y=\"" << num(ly) << "\" font-size=\"12\" font-family=\"sans-serif\" fill=\""
       << kColors[gi % 6] << "\">" << name << ": " << galleries[gi].steps.size() << " steps, "
       << fold_count(galleries[gi]) << " folds</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace adlv
