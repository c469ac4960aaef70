#pragma once

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "divides/divide.hpp"
#include "divides/planar_map.hpp"

namespace divides {

struct Vec4 {
  double v[4] = {0, 0, 0, 0};
  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }
  double norm2() const { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]; }
  double norm() const { return std::sqrt(norm2()); }
};

inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
}

inline double dist(const Vec4& a, const Vec4& b) { return (a - b).norm(); }

// points on the unit sphere of T(R^2) = R^4, coordinates (x1, x2, u1, u2)
struct LinkSamples {
  struct Component {
    int branch_id = 0;
    std::vector<Vec4> points;  // closed: first == last
  };
  std::vector<Component> components;
  double sigma = 0.0;
};

// per-branch normal side; n_x = eps * J(tangent)/|tangent| scaled to |n|^2 = 1-|x|^2
struct CoOrientation {
  std::map<int, int> eps;  // branch id -> +1 / -1, absent means +1
  int of(int branch_id) const {
    auto it = eps.find(branch_id);
    return it == eps.end() ? +1 : it->second;
  }
};

LinkSamples lift_link(const Divide& d);
LinkSamples lift_family(const Divide& d, const CoOrientation& co, double sigma);

struct SigmaEvent {
  int crossing_id = 0;
  double sigma = 0.0;
};

std::vector<SigmaEvent> singular_sigmas(const Divide& d, const CoOrientation& co);
std::vector<SigmaEvent> singular_sigmas(const PlanarMap& m, const CoOrientation& co);

struct CutoverEvent {
  int crossing_id = 0;
  double sigma = 0.0;
  std::array<Crossing::Incidence, 2> strands;  // the local pair exchanged
};

struct UnknottingSchedule {
  std::vector<CutoverEvent> events;   // ascending sigma, one per crossing
  double sigma_clear = 0.0;           // above the last event
  bool certificate_ok = false;        // swept family embedded at sample scale
  double min_clearance = 0.0;         // smallest non-adjacent sample distance seen
  int resolution_used = 0;
};

UnknottingSchedule unknotting_schedule(const Divide& d, const CoOrientation& co);

// samples of a branch in the parametrization with a^2+b^2+da^2+db^2 = 1
struct UnitSample {
  double t = 0;    // arc time in the unit parametrization
  double tau = 0;  // original spline parameter
  double a = 0, b = 0;
  double da = 0, db = 0;
  double dda = 0, ddb = 0;
};

std::vector<UnitSample> reparametrize_unit(const Branch& br, int resolution = 64);

struct TransversalityReport {
  struct BranchData {
    int branch_id = 0;
    std::vector<std::pair<double, double>> vi;  // (t, v_i) along gamma+
    double min_vi = 0;
    double min_vi_mirror = 0;  // gamma- lift
    double max_v0 = 0;
    bool collar_ok = true;  // within 5 degrees of radial where |x| > 1/sqrt(2)
  };
  std::vector<BranchData> branches;
  double min_vi = 0;
  double min_vi_mirror = 0;
  double max_v0 = 0;
  bool collar_ok = true;
  bool pass = false;  // min_vi > 0
};

TransversalityReport transversality_check(const Divide& d);

}  // namespace divides
