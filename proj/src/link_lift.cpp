#include "divides/link_lift.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "divides/errors.hpp"
#include "divides/spline.hpp"

namespace divides {

namespace {

constexpr double kPi = 3.14159265358979323846;

// One lifted sample (x, cos(sigma) u + sin(sigma) n) with u = usign*lambda*g',
// n = eps*lambda*J g'. snap pulls x onto the unit circle and kills the fiber
// vector, which is the exact picture at arc endpoints.
Vec4 lift_point(const Spline& s, double tau, int usign, double sigma, int eps, bool snap) {
  Vec2 x = s.eval(tau);
  Vec2 g = s.deriv(tau);
  Vec4 p;
  if (snap) {
    x = x / x.norm();
    p = {{x.x, x.y, 0, 0}};
    return p;
  }
  double h = 1.0 - x.norm2();
  double w = std::sqrt(std::max(h, 0.0));  // = lambda * |g|
  Vec2 gh = g / g.norm();
  Vec2 nh = perp(gh) * static_cast<double>(eps);
  Vec2 fiber = gh * (std::cos(sigma) * usign * w) + nh * (std::sin(sigma) * w);
  p = {{x.x, x.y, fiber.x, fiber.y}};
  double nrm = p.norm();
  for (int i = 0; i < 4; ++i) p[i] /= nrm;
  return p;
}

LinkSamples lift_impl(const Divide& d, const CoOrientation& co, double sigma) {
  if (sigma < 0.0 || sigma >= kPi / 2.0)
    throw DomainError("sigma must lie in [0, pi/2)");
  LinkSamples out;
  out.sigma = sigma;
  int per = std::max(d.resolution, 16);
  for (const Branch& br : d.branches) {
    Spline s = br.spline();
    Polyline pl = resample(s, per);
    int eps = co.of(br.id);
    if (br.kind == BranchKind::arc) {
      LinkSamples::Component c;
      c.branch_id = br.id;
      size_t n = pl.params.size();
      c.points.reserve(2 * n);
      for (size_t i = 0; i < n; ++i)
        c.points.push_back(lift_point(s, pl.params[i], +1, sigma, eps, i == 0 || i + 1 == n));
      for (size_t i = n - 1; i-- > 1;)
        c.points.push_back(lift_point(s, pl.params[i], -1, sigma, eps, false));
      c.points.push_back(c.points.front());
      out.components.push_back(std::move(c));
    } else {
      for (int usign : {+1, -1}) {
        LinkSamples::Component c;
        c.branch_id = br.id;
        size_t n = pl.params.size();
        c.points.reserve(n + 1);
        if (usign > 0) {
          for (size_t i = 0; i < n; ++i)
            c.points.push_back(lift_point(s, pl.params[i], usign, sigma, eps, false));
        } else {
          for (size_t i = n; i-- > 0;)
            c.points.push_back(lift_point(s, pl.params[i], usign, sigma, eps, false));
        }
        c.points.push_back(c.points.front());
        out.components.push_back(std::move(c));
      }
    }
  }
  return out;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth >= 30 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace

LinkSamples lift_link(const Divide& d) { return lift_impl(d, CoOrientation{}, 0.0); }

LinkSamples lift_family(const Divide& d, const CoOrientation& co, double sigma) {
  return lift_impl(d, co, sigma);
}

std::vector<SigmaEvent> singular_sigmas(const PlanarMap& m, const CoOrientation& co) {
  std::vector<SigmaEvent> out;
  for (const Crossing& c : m.crossings) {
    Vec2 n[2];
    for (int k = 0; k < 2; ++k) {
      size_t bi = 0;
      while (m.divide.branches[bi].id != c.inc[k].branch_id) ++bi;
      Vec2 g = m.splines[bi].deriv(c.inc[k].param);
      n[k] = normalized(perp(g)) * static_cast<double>(co.of(c.inc[k].branch_id));
    }
    double alpha = std::acos(std::clamp(dot(n[0], n[1]), -1.0, 1.0));
    out.push_back({c.id, (kPi - alpha) / 2.0});
  }
  std::sort(out.begin(), out.end(), [](const SigmaEvent& a, const SigmaEvent& b) {
    return a.sigma != b.sigma ? a.sigma < b.sigma : a.crossing_id < b.crossing_id;
  });
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i + 1].sigma - out[i].sigma < 1e-9) {
      std::ostringstream msg;
      msg << "degenerate cutover schedule: crossings " << out[i].crossing_id << " and "
          << out[i + 1].crossing_id << " share sigma " << out[i].sigma
          << "; perturb the divide";
      throw DomainError(msg.str());
    }
  return out;
}

std::vector<SigmaEvent> singular_sigmas(const Divide& d, const CoOrientation& co) {
  return singular_sigmas(build_planar_map(d), co);
}

std::vector<UnitSample> reparametrize_unit(const Branch& br, int resolution) {
  Spline s = br.spline();
  Polyline pl = resample(s, std::max(resolution, 16));
  bool open = br.kind == BranchKind::arc;
  std::vector<double> params = pl.params;
  if (!open) params.push_back(s.tmax());  // wrap sample

  auto hval = [&](double tau) { return 1.0 - s.eval(tau).norm2(); };
  auto speed = [&](double tau) {  // dt/dtau away from the singular ends
    double h = hval(tau);
    if (h < 1e-12) throw DomainError("branch reaches the unit circle away from its endpoints");
    return s.deriv(tau).norm() / std::sqrt(h);
  };

  size_t n = params.size();
  std::vector<double> times(n, 0.0);
  const double tol = 1e-10;
  for (size_t i = 0; i + 1 < n; ++i) {
    double a = params[i], b = params[i + 1];
    double piece;
    if (open && i == 0) {
      // substitute tau = a + q^2 (b-a); the 1/sqrt endpoint becomes regular
      double q0 = 2.0 * std::max(dot(s.eval(a), s.deriv(a)) * -1.0, 1e-12);
      piece = integrate(
          [&](double q) {
            double tau = a + q * q * (b - a);
            if (tau - a < 1e-14 * (b - a))
              return 2.0 * (b - a) * s.deriv(a).norm() / std::sqrt(q0 * (b - a));
            double h = std::max(hval(tau), 0.0);
            if (h <= 0.0) throw DomainError("branch reaches the unit circle away from its endpoints");
            return 2.0 * q * (b - a) * s.deriv(tau).norm() / std::sqrt(h);
          },
          0.0, 1.0, tol);
    } else if (open && i + 2 == n) {
      double q0 = 2.0 * std::max(dot(s.eval(b), s.deriv(b)), 1e-12);
      piece = integrate(
          [&](double q) {
            double tau = b - q * q * (b - a);
            if (b - tau < 1e-14 * (b - a))
              return 2.0 * (b - a) * s.deriv(b).norm() / std::sqrt(q0 * (b - a));
            double h = std::max(hval(tau), 0.0);
            if (h <= 0.0) throw DomainError("branch reaches the unit circle away from its endpoints");
            return 2.0 * q * (b - a) * s.deriv(tau).norm() / std::sqrt(h);
          },
          0.0, 1.0, tol);
    } else {
      piece = integrate(speed, a, b, tol);
    }
    times[i + 1] = times[i] + piece;
  }

  std::vector<UnitSample> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    double tau = params[i];
    bool endpoint = open && (i == 0 || i + 1 == n);
    Vec2 x = s.eval(tau);
    Vec2 g = s.deriv(tau);
    Vec2 gg = s.deriv2(tau);
    if (endpoint) x = x / x.norm();
    double h = endpoint ? 0.0 : std::max(hval(tau), 0.0);
    double g2 = g.norm2();
    double hp = -2.0 * dot(x, g);
    // d(gamma)/dt = g sqrt(h)/|g|; the second derivative collapses to a form
    // with no 1/sqrt(h), so it is evaluated directly even at the endpoints
    Vec2 d1 = g * (std::sqrt(h) / g.norm());
    Vec2 d2 = gg * (h / g2) + g * (hp / (2.0 * g2) - h * dot(g, gg) / (g2 * g2));
    UnitSample u;
    u.t = times[i];
    u.tau = tau;
    u.a = x.x;
    u.b = x.y;
    u.da = d1.x;
    u.db = d1.y;
    u.dda = d2.x;
    u.ddb = d2.y;
    out.push_back(u);
  }
  return out;
}

TransversalityReport transversality_check(const Divide& d) {
  TransversalityReport rep;
  rep.min_vi = 1e300;
  rep.min_vi_mirror = 1e300;
  rep.max_v0 = 0;
  for (const Branch& br : d.branches) {
    TransversalityReport::BranchData bd;
    bd.branch_id = br.id;
    bd.min_vi = 1e300;
    bd.min_vi_mirror = 1e300;
    bd.max_v0 = 0;
    auto samples = reparametrize_unit(br, d.resolution);
    for (const UnitSample& u : samples) {
      double vi = -u.a * u.dda + u.da * u.da - u.b * u.ddb + u.db * u.db;
      double v0 = u.a * u.da + u.da * u.dda + u.b * u.db + u.db * u.ddb;
      bd.vi.emplace_back(u.t, vi);
      bd.min_vi = std::min(bd.min_vi, vi);
      bd.max_v0 = std::max(bd.max_v0, std::abs(v0));
      // time-mirrored lift with the i,k components negated, via the quaternion
      // product v = conj(G) G' rather than the collapsed formula
      double q[4] = {u.a, u.da, u.b, -u.db};
      double dq[4] = {-u.da, -u.dda, -u.db, u.ddb};
      double mirror_vi = q[0] * dq[1] + (-q[1]) * dq[0] + (-q[2]) * dq[3] - (-q[3]) * dq[2];
      bd.min_vi_mirror = std::min(bd.min_vi_mirror, mirror_vi);
    }
    // collar: tangents near the rim should be close to radial
    Spline s = br.spline();
    Polyline pl = resample(s, std::max(d.resolution, 16));
    for (double tau : pl.params) {
      Vec2 x = s.eval(tau);
      if (x.norm() <= 1.0 / std::sqrt(2.0)) continue;
      Vec2 g = normalized(s.deriv(tau));
      double off = std::asin(std::clamp(std::abs(cross(normalized(x), g)), 0.0, 1.0));
      if (off > 5.0 * kPi / 180.0) bd.collar_ok = false;
    }
    rep.min_vi = std::min(rep.min_vi, bd.min_vi);
    rep.min_vi_mirror = std::min(rep.min_vi_mirror, bd.min_vi_mirror);
    rep.max_v0 = std::max(rep.max_v0, bd.max_v0);
    rep.collar_ok = rep.collar_ok && bd.collar_ok;
    rep.branches.push_back(std::move(bd));
  }
  rep.pass = rep.min_vi > 0.0;
  return rep;
}

namespace {

struct SweepPoint {
  Vec4 p;
  int row = 0, comp = 0, idx = 0, cycle = 0;
};

bool sweep_embedded(const Divide& d, const CoOrientation& co, double sigma0,
                    int resolution, const std::vector<Vec4>& pinches,
                    double* min_clearance) {
  const int rows = 16;
  const double tol = 1e-6;
  const double pinch_ball = 1e-3;
  std::vector<SweepPoint> pts;
  Divide dd = d;
  dd.resolution = resolution;
  for (int j = 0; j < rows; ++j) {
    double sigma = sigma0 + (kPi / 2.0 - sigma0) * j / rows;
    LinkSamples ls = lift_impl(dd, co, sigma);
    for (size_t c = 0; c < ls.components.size(); ++c) {
      const auto& comp = ls.components[c];
      int cyc = static_cast<int>(comp.points.size()) - 1;  // last repeats first
      for (int i = 0; i < cyc; ++i)
        pts.push_back({comp.points[static_cast<size_t>(i)], j, static_cast<int>(c), i, cyc});
    }
  }

  auto near_pinch = [&](const Vec4& p) {
    for (const Vec4& q : pinches)
      if (dist(p, q) < pinch_ball) return true;
    return false;
  };

  // uniform hash over 4d cells; only nearby cells can hold pairs under tol
  const double cell = 2e-3;
  auto key = [&](const Vec4& p) {
    long long k = 0;
    for (int i = 0; i < 4; ++i) {
      long long c = static_cast<long long>(std::floor((p[i] + 2.0) / cell));
      k = k * 4096 + c;
    }
    return k;
  };
  std::unordered_map<long long, std::vector<int>> grid;
  for (size_t i = 0; i < pts.size(); ++i) grid[key(pts[i].p)].push_back(static_cast<int>(i));

  double clearance = pinch_ball;
  for (size_t i = 0; i < pts.size(); ++i) {
    const SweepPoint& a = pts[i];
    long long base[4];
    for (int k = 0; k < 4; ++k) base[k] = static_cast<long long>(std::floor((a.p[k] + 2.0) / cell));
    for (long long d0 = -1; d0 <= 1; ++d0)
      for (long long d1 = -1; d1 <= 1; ++d1)
        for (long long d2 = -1; d2 <= 1; ++d2)
          for (long long d3 = -1; d3 <= 1; ++d3) {
            long long k = ((base[0] + d0) * 4096 + base[1] + d1) * 4096;
            k = (k + base[2] + d2) * 4096 + base[3] + d3;
            auto it = grid.find(k);
            if (it == grid.end()) continue;
            for (int jn : it->second) {
              if (jn <= static_cast<int>(i)) continue;
              const SweepPoint& b = pts[static_cast<size_t>(jn)];
              if (a.comp == b.comp && std::abs(a.row - b.row) <= 1) {
                int di = std::abs(a.idx - b.idx);
                di = std::min(di, a.cycle - di);
                if (di <= 2) continue;
              }
              double dd2 = dist(a.p, b.p);
              if (dd2 >= clearance) continue;
              if (near_pinch(a.p) && near_pinch(b.p)) continue;
              clearance = dd2;
            }
          }
  }
  *min_clearance = clearance;
  return clearance > tol;
}

}  // namespace

UnknottingSchedule unknotting_schedule(const Divide& d, const CoOrientation& co) {
  PlanarMap m = build_planar_map(d);
  if (!m.connected) throw DomainError("unknotting schedule requires a connected divide");
  UnknottingSchedule sched;
  for (const SigmaEvent& ev : singular_sigmas(m, co)) {
    CutoverEvent ce;
    ce.crossing_id = ev.crossing_id;
    ce.sigma = ev.sigma;
    ce.strands = {m.crossings[static_cast<size_t>(ev.crossing_id)].inc[0],
                  m.crossings[static_cast<size_t>(ev.crossing_id)].inc[1]};
    sched.events.push_back(ce);
  }
  double last = sched.events.empty() ? 0.0 : sched.events.back().sigma;
  sched.sigma_clear = (last + kPi / 2.0) / 2.0;

  std::vector<Vec4> pinches;
  for (const Branch& br : d.branches) {
    if (br.kind != BranchKind::arc) continue;
    Spline s = br.spline();
    for (double tau : {0.0, s.tmax()}) {
      Vec2 x = s.eval(tau);
      x = x / x.norm();
      pinches.push_back({{x.x, x.y, 0, 0}});
    }
  }

  int res = std::max(d.resolution, 16);
  for (int attempt = 0; attempt < 2; ++attempt) {
    double clearance = 0.0;
    if (sweep_embedded(d, co, sched.sigma_clear, res, pinches, &clearance)) {
      sched.certificate_ok = true;
      sched.min_clearance = clearance;
      sched.resolution_used = res;
      return sched;
    }
    sched.min_clearance = clearance;
    res *= 2;
  }
  throw DomainError("swept disk family failed the embeddedness check");
}

}  // namespace divides
