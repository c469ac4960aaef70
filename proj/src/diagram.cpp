#include "divides/diagram.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <utility>

#include "divides/errors.hpp"
#include "divides/int_matrix.hpp"
#include "divides/planar_map.hpp"

namespace divides {

namespace {

struct SplitMix {
  uint64_t s;
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double gauss() {
    double u1 = std::max(uniform(), 1e-300);
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
};

Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot3(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross3(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm3(Vec3 a) { return std::sqrt(dot3(a, a)); }
Vec3 unit3(Vec3 a) { return (1.0 / norm3(a)) * a; }

double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// orthonormal frame spanning the hyperplane orthogonal to the unit vector p
std::array<Vec4, 3> pole_frame(const Vec4& p) {
  int imax = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(p[i]) > std::abs(p[imax])) imax = i;
  std::array<Vec4, 3> f;
  int k = 0;
  for (int axis = 0; axis < 4; ++axis) {
    if (axis == imax) continue;
    Vec4 e;
    e[axis] = 1.0;
    double dp = dot4(e, p);
    for (int i = 0; i < 4; ++i) e[i] -= dp * p[i];
    for (int j = 0; j < k; ++j) {
      double d = dot4(e, f[j]);
      for (int i = 0; i < 4; ++i) e[i] -= d * f[j][i];
    }
    double n = e.norm();
    for (int i = 0; i < 4; ++i) e[i] /= n;
    f[k++] = e;
  }
  return f;
}

Vec3 fib_direction(int i) {
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  double z = 1.0 - 2.0 * (i + 0.5) / 256.0;
  double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  double th = golden * i;
  return {rho * std::cos(th), rho * std::sin(th), z};
}

// crossing sign orientation; fixed so the two-diameters divide links to +1
constexpr int kSignOrientation = -1;

std::optional<Diagram> try_direction(const SpaceCurves& sc, Vec3 dir) {
  Vec3 pick = std::abs(dir.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  Vec3 a = unit3(cross3(pick, dir));
  Vec3 b = cross3(dir, a);

  int nc = static_cast<int>(sc.components.size());
  std::vector<std::vector<Vec2>> pts(nc);
  std::vector<std::vector<double>> dep(nc);
  for (int c = 0; c < nc; ++c) {
    pts[c].reserve(sc.components[c].size());
    dep[c].reserve(sc.components[c].size());
    for (const Vec3& q : sc.components[c]) {
      pts[c].push_back({dot3(q, a), dot3(q, b)});
      dep[c].push_back(dot3(q, dir));
    }
  }

  const double kParamMargin = 1e-7;
  const double kSeparation = 1e-6;
  const double kDepthGap = 1e-7;
  const double kSinMin = 1e-4;

  struct Cand {
    int comp[2], seg[2];
    double t[2];
    Vec2 pos;
    double depth[2];
    Vec2 tang[2];
  };
  std::vector<Cand> found;

  for (int ci = 0; ci < nc; ++ci) {
    int np = static_cast<int>(pts[ci].size()) - 1;
    for (int cj = ci; cj < nc; ++cj) {
      int nq = static_cast<int>(pts[cj].size()) - 1;
      for (int si = 0; si < np; ++si) {
        Vec2 p1 = pts[ci][si], p2 = pts[ci][si + 1];
        double pxlo = std::min(p1.x, p2.x), pxhi = std::max(p1.x, p2.x);
        double pylo = std::min(p1.y, p2.y), pyhi = std::max(p1.y, p2.y);
        int sj0 = (ci == cj) ? si + 2 : 0;
        for (int sj = sj0; sj < nq; ++sj) {
          if (ci == cj && si == 0 && sj == nq - 1) continue;
          Vec2 q1 = pts[cj][sj], q2 = pts[cj][sj + 1];
          if (std::max(q1.x, q2.x) < pxlo || std::min(q1.x, q2.x) > pxhi ||
              std::max(q1.y, q2.y) < pylo || std::min(q1.y, q2.y) > pyhi)
            continue;
          Vec2 d1 = p2 - p1, d2 = q2 - q1;
          double den = cross(d1, d2);
          double scale = d1.norm() * d2.norm();
          if (scale <= 0.0) return std::nullopt;
          if (std::abs(den) < 1e-12 * scale) return std::nullopt;
          double s = cross(q1 - p1, d2) / den;
          double t = cross(q1 - p1, d1) / den;
          if (s < 0 || s >= 1 || t < 0 || t >= 1) {
            if (s > -kParamMargin && s < 1 + kParamMargin && t > -kParamMargin &&
                t < 1 + kParamMargin)
              return std::nullopt;  // too close to a vertex to call
            continue;
          }
          if (s < kParamMargin || s > 1 - kParamMargin || t < kParamMargin ||
              t > 1 - kParamMargin)
            return std::nullopt;
          if (std::abs(den) / scale < kSinMin) return std::nullopt;
          double di = dep[ci][si] * (1 - s) + dep[ci][si + 1] * s;
          double dj = dep[cj][sj] * (1 - t) + dep[cj][sj + 1] * t;
          if (std::abs(di - dj) < kDepthGap) return std::nullopt;
          Cand cd;
          cd.comp[0] = ci;
          cd.comp[1] = cj;
          cd.seg[0] = si;
          cd.seg[1] = sj;
          cd.t[0] = s;
          cd.t[1] = t;
          cd.pos = p1 + s * d1;
          cd.depth[0] = di;
          cd.depth[1] = dj;
          cd.tang[0] = d1;
          cd.tang[1] = d2;
          found.push_back(cd);
        }
      }
    }
  }

  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = i + 1; j < found.size(); ++j)
      if (dist(found[i].pos, found[j].pos) < kSeparation) return std::nullopt;

  Diagram dg;
  dg.strands = std::move(pts);
  dg.branch_ids = sc.branch_ids;
  dg.direction = dir;
  dg.passages.resize(nc);
  for (size_t x = 0; x < found.size(); ++x) {
    const Cand& cd = found[x];
    int over = cd.depth[0] > cd.depth[1] ? 0 : 1;
    int raw = cross(cd.tang[over], cd.tang[1 - over]) > 0 ? +1 : -1;
    dg.crossings.push_back({kSignOrientation * raw, cd.pos});
    for (int slot = 0; slot < 2; ++slot) {
      Diagram::Passage p;
      p.crossing = static_cast<int>(x);
      p.over = (slot == over);
      p.seg = cd.seg[slot];
      p.t = cd.t[slot];
      dg.passages[cd.comp[slot]].push_back(p);
    }
  }
  for (auto& list : dg.passages)
    std::sort(list.begin(), list.end(), [](const Diagram::Passage& x, const Diagram::Passage& y) {
      return x.seg != y.seg ? x.seg < y.seg : x.t < y.t;
    });
  return dg;
}

// passage slots of each crossing: (component, index) pairs
std::vector<std::array<std::pair<int, int>, 2>> crossing_slots(const Diagram& d) {
  std::vector<std::array<std::pair<int, int>, 2>> at(d.crossings.size());
  std::vector<int> cnt(d.crossings.size(), 0);
  for (int c = 0; c < d.components(); ++c)
    for (size_t i = 0; i < d.passages[c].size(); ++i) {
      int x = d.passages[c][i].crossing;
      at[x][cnt[x]++] = {c, static_cast<int>(i)};
    }
  return at;
}

void remove_crossings(Diagram& d, int x1, int x2) {
  std::vector<int> remap(d.crossings.size());
  std::vector<Diagram::Crossing> keep;
  for (size_t x = 0; x < d.crossings.size(); ++x) {
    if (static_cast<int>(x) == x1 || static_cast<int>(x) == x2) {
      remap[x] = -1;
    } else {
      remap[x] = static_cast<int>(keep.size());
      keep.push_back(d.crossings[x]);
    }
  }
  d.crossings = std::move(keep);
  for (auto& list : d.passages) {
    std::vector<Diagram::Passage> next;
    for (auto& p : list)
      if (remap[p.crossing] >= 0) {
        p.crossing = remap[p.crossing];
        next.push_back(p);
      }
    list = std::move(next);
  }
}

std::string fnum(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

SpaceCurves stereographic_project(const LinkSamples& ls) {
  Vec4 pole;
  bool have_pole = false;
  for (double thresh : {0.05, 0.02}) {
    SplitMix rng{0x5eedd15cULL};
    for (int c = 0; c < 64 && !have_pole; ++c) {
      Vec4 p;
      for (int i = 0; i < 4; ++i) p[i] = rng.gauss();
      double n = p.norm();
      if (n < 1e-9) continue;
      for (int i = 0; i < 4; ++i) p[i] /= n;
      double dmin = 4.0;
      for (const auto& comp : ls.components)
        for (const Vec4& q : comp.points) dmin = std::min(dmin, dist(p, q));
      if (dmin > thresh) {
        pole = p;
        have_pole = true;
      }
    }
    if (have_pole) break;
  }
  if (!have_pole) throw DomainError("no stereographic pole clears the link samples");

  auto f = pole_frame(pole);
  SpaceCurves out;
  out.pole = pole;
  for (const auto& comp : ls.components) {
    std::vector<Vec3> c3;
    c3.reserve(comp.points.size());
    for (const Vec4& q : comp.points) {
      double w = 1.0 - dot4(q, pole);
      c3.push_back({dot4(q, f[0]) / w, dot4(q, f[1]) / w, dot4(q, f[2]) / w});
    }
    out.components.push_back(std::move(c3));
    out.branch_ids.push_back(comp.branch_id);
  }
  return out;
}

std::vector<std::vector<Vec4>> stereographic_invert(const SpaceCurves& sc) {
  auto f = pole_frame(sc.pole);
  std::vector<std::vector<Vec4>> out;
  for (const auto& comp : sc.components) {
    std::vector<Vec4> c4;
    c4.reserve(comp.size());
    for (const Vec3& y : comp) {
      double n2 = dot3(y, y);
      Vec4 x;
      for (int i = 0; i < 4; ++i)
        x[i] = ((n2 - 1.0) * sc.pole[i] + 2.0 * (y.x * f[0][i] + y.y * f[1][i] + y.z * f[2][i])) /
               (n2 + 1.0);
      c4.push_back(x);
    }
    out.push_back(std::move(c4));
  }
  return out;
}

Diagram planar_diagram(const SpaceCurves& sc, uint64_t seed) {
  SplitMix s0{seed};
  int start = static_cast<int>(s0.next() % 256);
  // among the first window of admissible directions keep the one whose
  // simplified diagram is smallest; ties go to the smaller raw diagram
  const int window = 24;
  std::optional<Diagram> best;
  int best_simplified = INT_MAX, best_raw = INT_MAX;
  int tried = 0;
  for (int round = 0; round < 4; ++round) {
    for (int k = 0; k < 256; ++k) {
      int idx = (start + k) % 256;
      Vec3 dir = fib_direction(idx);
      if (round > 0) {
        SplitMix pr{seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(round * 256 + idx + 1))};
        dir = unit3(dir + (0.05 * round) * Vec3{pr.gauss(), pr.gauss(), pr.gauss()});
      }
      auto dg = try_direction(sc, dir);
      ++tried;
      if (dg) {
        int simplified = simplify_diagram(*dg).crossing_count();
        int raw = dg->crossing_count();
        if (simplified < best_simplified ||
            (simplified == best_simplified && raw < best_raw)) {
          best = std::move(*dg);
          best_simplified = simplified;
          best_raw = raw;
        }
      }
      if (best && tried >= window) return *best;
    }
    if (best) return *best;
  }
  if (best) return *best;
  throw DomainError("no generic projection direction found; increase the sampling resolution");
}

Diagram simplify_diagram(Diagram d) {
  for (;;) {
    auto at = crossing_slots(d);
    bool changed = false;
    for (size_t x = 0; x < d.crossings.size() && !changed; ++x) {
      auto [c1, i1] = at[x][0];
      auto [c2, i2] = at[x][1];
      if (c1 != c2) continue;
      int len = static_cast<int>(d.passages[c1].size());
      if ((i1 + 1) % len == i2 || (i2 + 1) % len == i1) {
        remove_crossings(d, static_cast<int>(x), -1);
        changed = true;
      }
    }
    if (changed) continue;
    for (int c = 0; c < d.components() && !changed; ++c) {
      int len = static_cast<int>(d.passages[c].size());
      for (int k = 0; k < len && !changed; ++k) {
        const auto& p1 = d.passages[c][k];
        const auto& p2 = d.passages[c][(k + 1) % len];
        if (p1.crossing == p2.crossing || p1.over != p2.over) continue;
        if (d.crossings[p1.crossing].sign == d.crossings[p2.crossing].sign) continue;
        auto other = [&](int x, int comp, int idx) {
          std::pair<int, int> slot{comp, idx};
          return at[x][0] == slot ? at[x][1] : at[x][0];
        };
        auto [yc, yi] = other(p1.crossing, c, k);
        auto [yd, yj] = other(p2.crossing, c, (k + 1) % len);
        if (yc != yd) continue;
        int ylen = static_cast<int>(d.passages[yc].size());
        if ((yi + 1) % ylen != yj && (yj + 1) % ylen != yi) continue;
        const auto& q1 = d.passages[yc][yi];
        const auto& q2 = d.passages[yd][yj];
        if (q1.over != q2.over || q1.over == p1.over) continue;
        remove_crossings(d, p1.crossing, p2.crossing);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return d;
}

std::vector<PdEntry> pd_code(const Diagram& d) {
  int nc = d.components();
  std::vector<int> base(nc, 0);
  int acc = 0;
  for (int c = 0; c < nc; ++c) {
    base[c] = acc;
    acc += static_cast<int>(d.passages[c].size());
  }
  auto in_label = [&](int c, int i) { return base[c] + i + 1; };
  auto out_label = [&](int c, int i) {
    int len = static_cast<int>(d.passages[c].size());
    return base[c] + (i + 1) % len + 1;
  };
  auto at = crossing_slots(d);
  std::vector<PdEntry> pd;
  pd.reserve(d.crossings.size());
  for (size_t x = 0; x < d.crossings.size(); ++x) {
    auto [c1, i1] = at[x][0];
    auto [c2, i2] = at[x][1];
    bool first_over = d.passages[c1][i1].over;
    int cu = first_over ? c2 : c1, iu = first_over ? i2 : i1;
    int co = first_over ? c1 : c2, io = first_over ? i1 : i2;
    PdEntry e;
    e.a = in_label(cu, iu);
    e.c = out_label(cu, iu);
    if (d.crossings[x].sign > 0) {
      e.b = out_label(co, io);
      e.d = in_label(co, io);
    } else {
      e.b = in_label(co, io);
      e.d = out_label(co, io);
    }
    pd.push_back(e);
  }
  return pd;
}

std::string pd_code_text(const Diagram& d) {
  std::string out;
  for (const PdEntry& e : pd_code(d)) {
    if (!out.empty()) out += " ";
    out += "X[" + std::to_string(e.a) + "," + std::to_string(e.b) + "," + std::to_string(e.c) +
           "," + std::to_string(e.d) + "]";
  }
  return out;
}

std::vector<std::vector<int>> gauss_code(const Diagram& d) {
  std::vector<std::vector<int>> out(d.components());
  for (int c = 0; c < d.components(); ++c)
    for (const auto& p : d.passages[c]) out[c].push_back(p.over ? p.crossing + 1 : -(p.crossing + 1));
  return out;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& x : d.crossings) w += x.sign;
  return w;
}

std::vector<std::vector<int>> linking_matrix(const Diagram& d) {
  int nc = d.components();
  std::vector<std::vector<int>> m(nc, std::vector<int>(nc, 0));
  auto at = crossing_slots(d);
  for (size_t x = 0; x < d.crossings.size(); ++x) {
    int c1 = at[x][0].first, c2 = at[x][1].first;
    if (c1 == c2) continue;
    m[c1][c2] += d.crossings[x].sign;
    m[c2][c1] += d.crossings[x].sign;
  }
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      if (m[i][j] % 2 != 0)
        throw DomainError("inter-component crossing signs do not pair up");
      m[i][j] /= 2;
    }
  return m;
}

IntPoly alexander_from_crossings(const std::vector<WirtingerCrossing>& xs, int n_arcs) {
  int n = static_cast<int>(xs.size());
  if (n == 0) return IntPoly(1);
  if (n_arcs != n)
    throw std::invalid_argument("wirtinger presentation needs as many arcs as crossings");
  if (n == 1) return IntPoly(1);
  PolyMat m(n - 1);
  const IntPoly one(1), t = IntPoly::t(), tinv = IntPoly::monomial(1, -1);
  for (int i = 0; i + 1 < n; ++i) {
    auto add = [&](int arc, const IntPoly& v) {
      if (arc > 0) m.at(i, arc - 1) = m.at(i, arc - 1) + v;
    };
    const WirtingerCrossing& x = xs[i];
    if (x.sign > 0) {
      add(x.over, one - t);
      add(x.under_in, t);
    } else {
      add(x.over, one - tinv);
      add(x.under_in, tinv);
    }
    add(x.under_out, IntPoly(-1));
  }
  return poly_det(m).normalized();
}

IntPoly diagram_alexander(const Diagram& d) {
  int n = d.crossing_count();
  if (n == 0) return IntPoly(d.components() == 1 ? 1 : 0);

  // arcs break after each under-passage
  int nc = d.components();
  std::vector<std::vector<int>> arc_at(nc), unders(nc);
  std::vector<int> base(nc, 0);
  int total_arcs = 0;
  for (int c = 0; c < nc; ++c) {
    int len = static_cast<int>(d.passages[c].size());
    for (int k = 0; k < len; ++k)
      if (!d.passages[c][k].over) unders[c].push_back(k);
    if (unders[c].empty()) return IntPoly(0);  // a component lying entirely above the rest
    base[c] = total_arcs;
    int m = static_cast<int>(unders[c].size());
    total_arcs += m;
    arc_at[c].resize(len);
    for (int k = 0; k < len; ++k) {
      int r = 0;
      while (r < m && unders[c][r] < k) ++r;
      arc_at[c][k] = base[c] + (r % m);
    }
  }
  if (total_arcs != n) return IntPoly(0);

  auto at = crossing_slots(d);
  std::vector<WirtingerCrossing> xs(n);
  for (int x = 0; x < n; ++x) {
    auto [c1, i1] = at[x][0];
    auto [c2, i2] = at[x][1];
    bool first_over = d.passages[c1][i1].over;
    int cu = first_over ? c2 : c1, iu = first_over ? i2 : i1;
    int co = first_over ? c1 : c2, io = first_over ? i1 : i2;
    int m = static_cast<int>(unders[cu].size());
    int r = static_cast<int>(std::lower_bound(unders[cu].begin(), unders[cu].end(), iu) -
                             unders[cu].begin());
    xs[x].over = arc_at[co][io];
    xs[x].under_in = arc_at[cu][iu];
    xs[x].under_out = base[cu] + (r + 1) % m;
    xs[x].sign = d.crossings[x].sign;
  }
  return alexander_from_crossings(xs, total_arcs);
}

void emit_divide_svg(const Divide& d, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-110 -110 220 220\" "
       "width=\"440\" height=\"440\">\n";
  f << "<circle cx=\"0\" cy=\"0\" r=\"100\" fill=\"none\" stroke=\"#999999\" "
       "stroke-width=\"1\"/>\n";
  int bi = 0;
  for (const Branch& br : d.branches) {
    Spline s = br.spline();
    Polyline pl = resample(s, d.resolution);
    f << "<path d=\"";
    for (size_t i = 0; i < pl.points.size(); ++i) {
      f << (i == 0 ? "M " : "L ") << fnum(100.0 * pl.points[i].x) << " "
        << fnum(-100.0 * pl.points[i].y) << " ";
    }
    if (br.kind == BranchKind::circle) f << "Z";
    f << "\" fill=\"none\" stroke=\"" << kPalette[bi % 6] << "\" stroke-width=\"1.5\"/>\n";
    ++bi;
  }
  for (const Crossing& x : detect_crossings(d)) {
    f << "<circle cx=\"" << fnum(100.0 * x.position.x) << "\" cy=\"" << fnum(-100.0 * x.position.y)
      << "\" r=\"3\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  f << "</svg>\n";
}

void emit_diagram_svg(const Diagram& d, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (const auto& comp : d.strands)
    for (const Vec2& p : comp) {
      xlo = std::min(xlo, p.x);
      xhi = std::max(xhi, p.x);
      ylo = std::min(ylo, p.y);
      yhi = std::max(yhi, p.y);
    }
  double cx = 0.5 * (xlo + xhi), cy = 0.5 * (ylo + yhi);
  double ext = std::max({xhi - xlo, yhi - ylo, 1e-9});
  double sc = 380.0 / ext;
  auto px = [&](Vec2 p) { return Vec2{200.0 + (p.x - cx) * sc, 200.0 - (p.y - cy) * sc}; };

  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 400 400\" "
       "width=\"400\" height=\"400\">\n";
  for (int c = 0; c < d.components(); ++c) {
    const auto& pts = d.strands[c];
    int nseg = static_cast<int>(pts.size()) - 1;
    if (nseg < 1) continue;
    double len_px = 0;
    for (int i = 0; i < nseg; ++i) len_px += dist(px(pts[i]), px(pts[i + 1]));
    double halfgap = 7.0 / std::max(len_px / nseg, 1e-9);
    auto point_at = [&](double q) {
      double qq = std::fmod(q, static_cast<double>(nseg));
      if (qq < 0) qq += nseg;
      int i = std::min(static_cast<int>(qq), nseg - 1);
      double u = qq - i;
      return pts[i] + u * (pts[i + 1] - pts[i]);
    };

    std::vector<std::pair<double, double>> cuts;
    for (const auto& p : d.passages[c])
      if (!p.over) {
        double q = p.seg + p.t;
        double lo = std::fmod(q - halfgap, static_cast<double>(nseg));
        if (lo < 0) lo += nseg;
        cuts.push_back({lo, lo + 2 * halfgap});
      }
    if (cuts.empty()) {
      f << "<path d=\"";
      for (int i = 0; i < nseg; ++i) {
        Vec2 p = px(pts[i]);
        f << (i == 0 ? "M " : "L ") << fnum(p.x) << " " << fnum(p.y) << " ";
      }
      f << "Z\" fill=\"none\" stroke=\"" << kPalette[c % 6] << "\" stroke-width=\"1.5\"/>\n";
      continue;
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& cu : cuts) {
      if (merged.empty() || cu.first > merged.back().second)
        merged.push_back(cu);
      else
        merged.back().second = std::max(merged.back().second, cu.second);
    }
    if (merged.size() > 1 && merged.front().first + nseg <= merged.back().second) {
      merged.front().first = merged.back().first - nseg;
      merged.front().second = std::max(merged.front().second, merged.back().second - nseg);
      merged.pop_back();
    }
    if (merged.size() == 1 && merged[0].second - merged[0].first >= nseg) continue;
    for (size_t i = 0; i < merged.size(); ++i) {
      double a = merged[i].second;
      double b2 = (i + 1 < merged.size()) ? merged[i + 1].first : merged[0].first + nseg;
      if (b2 <= a) continue;
      f << "<path d=\"";
      Vec2 p0 = px(point_at(a));
      f << "M " << fnum(p0.x) << " " << fnum(p0.y) << " ";
      for (double j = std::floor(a) + 1; j < b2; j += 1.0) {
        if (j <= a) continue;
        Vec2 p = px(point_at(j));
        f << "L " << fnum(p.x) << " " << fnum(p.y) << " ";
      }
      Vec2 p1 = px(point_at(b2));
      f << "L " << fnum(p1.x) << " " << fnum(p1.y);
      f << "\" fill=\"none\" stroke=\"" << kPalette[c % 6] << "\" stroke-width=\"1.5\"/>\n";
    }
  }
  f << "</svg>\n";
}

}  // namespace divides
