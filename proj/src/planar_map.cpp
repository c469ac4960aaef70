#include "divides/planar_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "divides/errors.hpp"

namespace divides {

namespace {

constexpr double kTangencyTol = 1e-3;   // radians between tangent lines
constexpr double kSeparationTol = 1e-6; // distinct crossings / endpoints
constexpr double kBoundaryMargin = 1e-3;
constexpr double kGermWindow = 0.25;    // param window identifying one strand germ

double pi() { return std::acos(-1.0); }

// unsigned angle between direction vectors, in [0, pi]
double dir_angle_between(Vec2 a, Vec2 b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); }

struct RawCrossing {
  int ba, bb;      // branch indices
  double sa, sb;   // spline params (wrapped for circles)
  Vec2 pos;
};

struct SegRef {
  Vec2 p, q;
  double tp, tq;
};

int seg_count(const Polyline& poly, bool closed) {
  return static_cast<int>(poly.points.size()) - (closed ? 0 : 1);
}

SegRef seg_get(const Polyline& poly, const Spline& s, int i) {
  const int n = static_cast<int>(poly.points.size());
  if (i + 1 < n) return {poly.points[i], poly.points[i + 1], poly.params[i], poly.params[i + 1]};
  return {poly.points[n - 1], poly.points[0], poly.params[n - 1], s.tmax()};
}

bool segments_cross(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2, double& s, double& t) {
  Vec2 d1 = p2 - p1, d2 = q2 - q1;
  double den = cross(d1, d2);
  if (std::abs(den) < 1e-15) return false;
  Vec2 w = q1 - p1;
  s = cross(w, d2) / den;
  t = cross(w, d1) / den;
  return s >= -1e-9 && s <= 1 + 1e-9 && t >= -1e-9 && t <= 1 + 1e-9;
}

bool newton_refine(const Spline& A, const Spline& B, double& s, double& t) {
  for (int it = 0; it < 80; ++it) {
    Vec2 F = A.eval(s) - B.eval(t);
    Vec2 As = A.deriv(s), Bt = B.deriv(t);
    double a = As.x, b = -Bt.x, c = As.y, d = -Bt.y;
    double det = a * d - b * c;
    if (std::abs(det) < 1e-14) return false;
    double ds = (-F.x * d + b * F.y) / det;
    double dt = (-a * F.y + F.x * c) / det;
    s += ds;
    t += dt;
    if (std::abs(ds) < 1e-13 && std::abs(dt) < 1e-13) {
      Vec2 res = A.eval(s) - B.eval(t);
      return res.norm() < 1e-9;
    }
  }
  return false;
}

double wrap_param(double t, const Spline& s) {
  if (!s.closed()) return t;
  double m = std::fmod(t, s.tmax());
  return m < 0 ? m + s.tmax() : m;
}

double param_gap(double a, double b, const Spline& s) {
  double d = std::abs(a - b);
  if (s.closed()) d = std::min(d, s.tmax() - d);
  return d;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Crossing> detect_crossings(const Divide& d) {
  const int nb = static_cast<int>(d.branches.size());
  std::vector<Spline> splines;
  std::vector<Polyline> polys;
  splines.reserve(nb);
  for (const Branch& br : d.branches) splines.push_back(br.spline());
  for (int i = 0; i < nb; ++i) polys.push_back(resample(splines[i], d.resolution));

  std::vector<RawCrossing> raws;
  for (int a = 0; a < nb; ++a) {
    for (int b = a; b < nb; ++b) {
      const Spline &A = splines[a], &B = splines[b];
      const int na = seg_count(polys[a], A.closed());
      const int nbn = seg_count(polys[b], B.closed());
      for (int i = 0; i < na; ++i) {
        SegRef si = seg_get(polys[a], A, i);
        double ix0 = std::min(si.p.x, si.q.x), ix1 = std::max(si.p.x, si.q.x);
        double iy0 = std::min(si.p.y, si.q.y), iy1 = std::max(si.p.y, si.q.y);
        int jstart = (a == b) ? i + 2 : 0;
        for (int j = jstart; j < nbn; ++j) {
          if (a == b && A.closed() && i == 0 && j == nbn - 1) continue;
          SegRef sj = seg_get(polys[b], B, j);
          if (std::max(sj.p.x, sj.q.x) < ix0 - 1e-12 || std::min(sj.p.x, sj.q.x) > ix1 + 1e-12 ||
              std::max(sj.p.y, sj.q.y) < iy0 - 1e-12 || std::min(sj.p.y, sj.q.y) > iy1 + 1e-12)
            continue;
          double fs, ft;
          if (!segments_cross(si.p, si.q, sj.p, sj.q, fs, ft)) continue;
          double s0 = si.tp + fs * (si.tq - si.tp);
          double t0 = sj.tp + ft * (sj.tq - sj.tp);
          double s = s0, t = t0;
          if (!newton_refine(A, B, s, t)) continue;
          if (param_gap(s, s0, A) > 0.75 || param_gap(t, t0, B) > 0.75) continue;
          if (a == b && param_gap(s, t, A) < 0.5) continue;
          raws.push_back({a, b, wrap_param(s, A), wrap_param(t, B), A.eval(s)});
        }
      }
    }
  }

  // cluster candidates that are the same crossing seen from different seeds
  const int nr = static_cast<int>(raws.size());
  DisjointSet ds(nr);
  for (int i = 0; i < nr; ++i)
    for (int j = i + 1; j < nr; ++j)
      if (dist(raws[i].pos, raws[j].pos) < kSeparationTol) ds.unite(i, j);

  std::vector<std::vector<int>> clusters;
  {
    std::vector<int> root_to_cluster(nr, -1);
    for (int i = 0; i < nr; ++i) {
      int root = ds.find(i);
      if (root_to_cluster[root] < 0) {
        root_to_cluster[root] = static_cast<int>(clusters.size());
        clusters.emplace_back();
      }
      clusters[root_to_cluster[root]].push_back(i);
    }
  }

  std::vector<Crossing> out;
  for (const auto& cl : clusters) {
    // distinct strand germs inside the cluster
    std::vector<std::pair<int, double>> germs;
    auto add_germ = [&](int branch, double t) {
      for (auto& g : germs)
        if (g.first == branch && param_gap(g.second, t, splines[branch]) < kGermWindow) return;
      germs.emplace_back(branch, t);
    };
    for (int idx : cl) {
      add_germ(raws[idx].ba, raws[idx].sa);
      add_germ(raws[idx].bb, raws[idx].sb);
    }
    if (germs.size() != 2) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "non-generic divide: %zu strands meet near (%.4f, %.4f)",
                    germs.size(), raws[cl[0]].pos.x, raws[cl[0]].pos.y);
      throw DomainError(buf);
    }
    std::sort(germs.begin(), germs.end());
    Crossing c;
    c.position = raws[cl[0]].pos;
    c.inc[0] = {d.branches[germs[0].first].id, germs[0].second};
    c.inc[1] = {d.branches[germs[1].first].id, germs[1].second};
    Vec2 ta = splines[germs[0].first].deriv(germs[0].second);
    Vec2 tb = splines[germs[1].first].deriv(germs[1].second);
    c.angle = dir_angle_between(ta, tb);
    if (c.angle < kTangencyTol || c.angle > pi() - kTangencyTol) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "non-generic divide: tangency at (%.4f, %.4f)", c.position.x,
                    c.position.y);
      throw DomainError(buf);
    }
    if (c.position.norm() > 1.0 - kBoundaryMargin)
      throw DomainError("non-generic divide: crossing too close to the disk boundary");
    out.push_back(c);
  }

  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
    if (x.inc[0].branch_id != y.inc[0].branch_id) return x.inc[0].branch_id < y.inc[0].branch_id;
    if (x.inc[0].param != y.inc[0].param) return x.inc[0].param < y.inc[0].param;
    if (x.inc[1].branch_id != y.inc[1].branch_id) return x.inc[1].branch_id < y.inc[1].branch_id;
    return x.inc[1].param < y.inc[1].param;
  });
  for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);

  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (dist(out[i].position, out[j].position) < kSeparationTol)
        throw DomainError("non-generic divide: two crossings within separation tolerance");

  return out;
}

const Spline& PlanarMap::spline_of_edge(int e) const { return splines[edges[e].branch]; }

std::vector<Vec2> PlanarMap::halfedge_points(int he) const {
  const Edge& e = edges[edge_of(he)];
  std::vector<Vec2> pts;
  if (e.boundary) {
    int n = std::max(2, static_cast<int>(std::ceil((e.t1 - e.t0) / 0.02)));
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      double a = e.t0 + (e.t1 - e.t0) * i / n;
      pts.push_back({std::cos(a), std::sin(a)});
    }
  } else {
    const Spline& s = splines[e.branch];
    int per = std::max(2, polylines[e.branch].per_segment);
    int n = std::max(2, static_cast<int>(std::ceil((e.t1 - e.t0) * per)));
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) pts.push_back(s.eval(e.t0 + (e.t1 - e.t0) * i / n));
  }
  if (dir_of(he) == 1) std::reverse(pts.begin(), pts.end());
  return pts;
}

std::vector<int> PlanarMap::region_faces() const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (!faces[f].outer) out.push_back(f);
  return out;
}

int PlanarMap::interior_region_count() const {
  int n = 0;
  for (const Face& f : faces)
    if (!f.outer && f.interior) ++n;
  return n;
}

PlanarMap build_planar_map(const Divide& d) {
  PlanarMap m;
  m.divide = d;
  const int nb = static_cast<int>(d.branches.size());
  for (const Branch& br : d.branches) {
    m.splines.push_back(br.spline());
    m.has_circle = m.has_circle || br.kind == BranchKind::circle;
  }
  for (int i = 0; i < nb; ++i) m.polylines.push_back(resample(m.splines[i], d.resolution));

  for (int i = 0; i < nb; ++i)
    for (const Vec2& p : m.polylines[i].points)
      if (p.norm2() > 1.0 + 1e-9) throw DomainError("branch leaves the unit disk");

  m.crossings = detect_crossings(d);
  m.delta = static_cast<int>(m.crossings.size());
  m.r = nb;

  auto branch_index = [&](int id) {
    for (int i = 0; i < nb; ++i)
      if (d.branches[i].id == id) return i;
    throw std::logic_error("unknown branch id");
  };

  // connectivity of the image: branches joined through crossings
  DisjointSet conn(nb);
  for (const Crossing& c : m.crossings)
    conn.unite(branch_index(c.inc[0].branch_id), branch_index(c.inc[1].branch_id));
  m.connected = true;
  for (int i = 1; i < nb; ++i)
    if (conn.find(i) != conn.find(0)) m.connected = false;

  // vertices: one per crossing first, then endpoints / anchors
  for (const Crossing& c : m.crossings)
    m.vertices.push_back({PlanarMap::Vertex::crossing, c.id, c.position});

  // cut lists per branch
  std::vector<std::vector<std::pair<double, int>>> cuts(nb);  // (param, vertex)
  for (const Crossing& c : m.crossings) {
    cuts[branch_index(c.inc[0].branch_id)].push_back({c.inc[0].param, c.id});
    cuts[branch_index(c.inc[1].branch_id)].push_back({c.inc[1].param, c.id});
  }
  for (auto& cl : cuts) std::sort(cl.begin(), cl.end());

  struct BoundaryVertex {
    double angle;
    int vertex;
  };
  std::vector<BoundaryVertex> bverts;

  auto add_vertex = [&](PlanarMap::Vertex::Kind kind, Vec2 pos) {
    m.vertices.push_back({kind, -1, pos});
    return static_cast<int>(m.vertices.size()) - 1;
  };

  for (int bi = 0; bi < nb; ++bi) {
    const Branch& br = d.branches[bi];
    const Spline& s = m.splines[bi];
    if (br.kind == BranchKind::arc) {
      Vec2 p0 = s.eval(0), p1 = s.eval(s.tmax());
      int v0 = add_vertex(PlanarMap::Vertex::endpoint, p0);
      int v1 = add_vertex(PlanarMap::Vertex::endpoint, p1);
      bverts.push_back({std::atan2(p0.y, p0.x), v0});
      bverts.push_back({std::atan2(p1.y, p1.x), v1});
      // endpoint transversality against the circle tangent
      for (int end = 0; end < 2; ++end) {
        Vec2 p = end ? p1 : p0;
        Vec2 tangent = end ? s.deriv(s.tmax()) : s.deriv(0);
        double ang = dir_angle_between(tangent, perp(p));
        if (ang < kTangencyTol || ang > pi() - kTangencyTol)
          throw DomainError("arc meets the disk boundary tangentially");
      }
      int prev_v = v0;
      double prev_t = 0.0;
      for (auto [t, cv] : cuts[bi]) {
        m.edges.push_back({bi, prev_t, t, prev_v, cv, false});
        prev_v = cv;
        prev_t = t;
      }
      m.edges.push_back({bi, prev_t, s.tmax(), prev_v, v1, false});
    } else {
      if (cuts[bi].empty()) {
        int v = add_vertex(PlanarMap::Vertex::circle_anchor, s.eval(0));
        m.edges.push_back({bi, 0.0, s.tmax(), v, v, false});
      } else {
        const auto& cl = cuts[bi];
        for (size_t k = 0; k + 1 < cl.size(); ++k)
          m.edges.push_back({bi, cl[k].first, cl[k + 1].first, cl[k].second, cl[k + 1].second, false});
        m.edges.push_back(
            {bi, cl.back().first, cl.front().first + s.tmax(), cl.back().second, cl.front().second, false});
      }
    }
  }

  // boundary circle edges between endpoint vertices (CCW)
  std::sort(bverts.begin(), bverts.end(),
            [](const BoundaryVertex& a, const BoundaryVertex& b) { return a.angle < b.angle; });
  for (size_t i = 0; i + 1 < bverts.size(); ++i)
    if (bverts[i + 1].angle - bverts[i].angle < kSeparationTol)
      throw DomainError("coincident arc endpoints on the disk boundary");
  if (bverts.empty()) {
    int v = add_vertex(PlanarMap::Vertex::boundary_anchor, {1, 0});
    m.edges.push_back({-1, 0.0, 2 * pi(), v, v, true});
  } else {
    for (size_t i = 0; i < bverts.size(); ++i) {
      const BoundaryVertex& a = bverts[i];
      const BoundaryVertex& b = bverts[(i + 1) % bverts.size()];
      double a1 = (i + 1 == bverts.size()) ? b.angle + 2 * pi() : b.angle;
      m.edges.push_back({-1, a.angle, a1, a.vertex, b.vertex, true});
    }
  }

  // half-edge tables
  const int ne = static_cast<int>(m.edges.size());
  m.he_twin.resize(2 * ne);
  m.he_origin.resize(2 * ne);
  m.he_germ_angle.resize(2 * ne);
  m.he_next.assign(2 * ne, -1);
  m.he_face.assign(2 * ne, -1);
  for (int e = 0; e < ne; ++e) {
    m.he_twin[2 * e] = 2 * e + 1;
    m.he_twin[2 * e + 1] = 2 * e;
    m.he_origin[2 * e] = m.edges[e].v0;
    m.he_origin[2 * e + 1] = m.edges[e].v1;
    Vec2 d0, d1;
    if (m.edges[e].boundary) {
      double a0 = m.edges[e].t0, a1 = m.edges[e].t1;
      d0 = {-std::sin(a0), std::cos(a0)};
      d1 = {std::sin(a1), -std::cos(a1)};
    } else {
      const Spline& s = m.splines[m.edges[e].branch];
      d0 = s.deriv(m.edges[e].t0);
      d1 = -s.deriv(m.edges[e].t1);
    }
    m.he_germ_angle[2 * e] = std::atan2(d0.y, d0.x);
    m.he_germ_angle[2 * e + 1] = std::atan2(d1.y, d1.x);
  }

  // rotation system: outgoing half-edges sorted CCW at each vertex
  std::vector<std::vector<int>> out(m.vertices.size());
  for (int h = 0; h < 2 * ne; ++h) out[m.he_origin[h]].push_back(h);
  for (auto& germs : out)
    std::sort(germs.begin(), germs.end(),
              [&](int a, int b) { return m.he_germ_angle[a] < m.he_germ_angle[b]; });
  std::vector<int> rank(2 * ne);
  for (const auto& germs : out)
    for (size_t i = 0; i < germs.size(); ++i) rank[germs[i]] = static_cast<int>(i);

  // next(h): region stays on the left
  for (int h = 0; h < 2 * ne; ++h) {
    int tw = m.he_twin[h];
    int v = m.he_origin[tw];
    const auto& germs = out[v];
    int n = static_cast<int>(germs.size());
    m.he_next[h] = germs[(rank[tw] - 1 + n) % n];
  }

  // trace faces
  for (int h0 = 0; h0 < 2 * ne; ++h0) {
    if (m.he_face[h0] >= 0) continue;
    PlanarMap::Face f;
    int fid = static_cast<int>(m.faces.size());
    int h = h0;
    do {
      m.he_face[h] = fid;
      f.halfedges.push_back(h);
      h = m.he_next[h];
      if (f.halfedges.size() > m.edges.size() * 4 + 8)
        throw std::logic_error("face tracing did not close");
    } while (h != h0);
    m.faces.push_back(std::move(f));
  }

  // signed areas; outer face is the unique negative one
  int negatives = 0;
  for (auto& f : m.faces) {
    double area2 = 0;
    for (int h : f.halfedges) {
      std::vector<Vec2> pts = m.halfedge_points(h);
      for (size_t i = 0; i + 1 < pts.size(); ++i) area2 += cross(pts[i], pts[i + 1]);
    }
    f.area = area2 / 2;
    f.interior = true;
    for (int h : f.halfedges)
      if (m.edges[m.edge_of(h)].boundary) f.interior = false;
    if (f.area < 0) {
      f.outer = true;
      f.interior = false;
      ++negatives;
      m.outer_face = static_cast<int>(&f - m.faces.data());
    }
  }
  if (negatives != 1) {
    // region structure is not a disk complex (annular region from circle branches)
    m.faces.clear();
    m.stars.clear();
    return m;
  }

  // Euler characteristic of the disk complex
  int V = static_cast<int>(m.vertices.size());
  int E = ne;
  int F = static_cast<int>(m.faces.size()) - 1;
  if (V - E + F != 1) {
    m.faces.clear();
    m.stars.clear();
    return m;
  }

  // chess-board signs: BFS from the base region across interior edges
  double theta0;
  {
    const Branch& b0 = d.branches[0];
    Vec2 ref = b0.control_points.front();
    theta0 = std::atan2(ref.y, ref.x) + 1e-2;
  }
  m.base_face = -1;
  for (int e = 0; e < ne; ++e) {
    if (!m.edges[e].boundary) continue;
    double a0 = m.edges[e].t0, a1 = m.edges[e].t1;
    double t = std::fmod(theta0 - a0, 2 * pi());
    if (t < 0) t += 2 * pi();
    if (a0 + t <= a1) {
      m.base_face = m.he_face[2 * e];  // dir 0 runs CCW, disk on the left
      break;
    }
  }
  if (m.base_face < 0 || m.faces[m.base_face].outer)
    throw std::logic_error("base region lookup failed");

  {
    std::vector<int> stack{m.base_face};
    m.faces[m.base_face].sign = -1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int h : m.faces[f].halfedges) {
        if (m.edges[m.edge_of(h)].boundary) continue;
        int g = m.he_face[m.he_twin[h]];
        if (m.faces[g].outer) throw std::logic_error("interior edge borders the outer face");
        int want = -m.faces[f].sign;
        if (m.faces[g].sign == 0) {
          m.faces[g].sign = want;
          stack.push_back(g);
        } else if (m.faces[g].sign != want) {
          throw std::logic_error("chess-board coloring inconsistency");
        }
      }
    }
    for (auto& f : m.faces)
      if (!f.outer && f.sign == 0) throw std::logic_error("region not reached by coloring");
  }

  // crossing stars: sectors and their faces
  for (const Crossing& c : m.crossings) {
    const auto& germs = out[c.id];
    if (germs.size() != 4) throw std::logic_error("crossing vertex degree != 4");
    PlanarMap::CrossingStar st;
    for (int i = 0; i < 4; ++i) {
      st.he[i] = germs[i];
      st.angle[i] = m.he_germ_angle[germs[i]];
      st.face[i] = m.he_face[germs[i]];
    }
    for (int i = 0; i < 4; ++i) {
      double a = st.angle[i], b = st.angle[(i + 2) % 4];
      double dd = std::abs(std::remainder(a - b, 2 * pi()));
      if (std::abs(dd - pi()) > 1e-6) throw std::logic_error("crossing germs not in opposite pairs");
      int sa = m.faces[st.face[i]].sign, sb = m.faces[st.face[(i + 1) % 4]].sign;
      if (sa == 0 || sb == 0 || sa != -sb)
        throw std::logic_error("sector signs do not alternate at crossing");
    }
    m.stars.push_back(st);
  }

  m.regions_valid = true;
  return m;
}

Counts counts(const PlanarMap& m) {
  Counts c;
  c.delta = m.delta;
  c.r = m.r;
  c.connected = m.connected;
  if (m.connected) {
    c.mu = 2 * m.delta - m.r + 1;
    c.genus = m.delta - m.r + 1;
  }
  c.interior_regions = m.interior_region_count();
  return c;
}

std::vector<WalkItem> face_walk(const PlanarMap& m, int face_id) {
  const PlanarMap::Face& f = m.faces[face_id];
  std::vector<WalkItem> walk;
  const int n = static_cast<int>(f.halfedges.size());
  for (int i = 0; i < n; ++i) {
    int h = f.halfedges[i];
    WalkItem it;
    it.kind = m.edges[m.edge_of(h)].boundary ? WalkItem::boundary_item : WalkItem::edge_item;
    it.he = h;
    walk.push_back(it);
    int v = m.target(h);
    if (m.vertices[v].kind == PlanarMap::Vertex::crossing) {
      int nh = f.halfedges[(i + 1) % n];
      int ci = m.vertices[v].crossing_id;
      const PlanarMap::CrossingStar& st = m.stars[ci];
      int sector = -1;
      for (int k = 0; k < 4; ++k)
        if (st.he[k] == nh) sector = k;
      if (sector < 0) throw std::logic_error("walk corner not found in crossing star");
      WalkItem corner;
      corner.kind = WalkItem::corner_item;
      corner.crossing = ci;
      corner.sector = sector;
      walk.push_back(corner);
    }
  }
  return walk;
}

}  // namespace divides
