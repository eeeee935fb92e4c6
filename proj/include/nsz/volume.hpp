#ifndef NSZ_VOLUME_HPP
#define NSZ_VOLUME_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "nsz/support.hpp"

namespace nsz {

namespace detail {

inline Int cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone-chain convex hull in Z^2, counter-clockwise, no collinear points.
inline std::vector<LatticePoint> hull2(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticePoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Twice the (positive) area of a CCW polygon in Z^2.
inline Int polygon_area2(const std::vector<LatticePoint>& poly) {
  Int acc(0);
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    acc += a[0] * b[1] - a[1] * b[0];
  }
  return acc;  // positive for CCW
}

inline Int det3(const LatticePoint& u, const LatticePoint& v, const LatticePoint& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

inline LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Facet of a 3D hull as a supporting plane: normal . x <= offset for all
// points, with equality on the facet.
struct Facet3 {
  LatticePoint normal;  // primitive outward normal
  Int offset;
  std::vector<size_t> on_plane;  // indices of points on the facet
};

// Exhaustive supporting-plane enumeration; exact and adequate for the small
// point sets this library handles.
inline std::vector<Facet3> facets3(const std::vector<LatticePoint>& pts) {
  size_t m = pts.size();
  std::vector<Facet3> out;
  std::map<std::pair<std::vector<Int>, Int>, bool> seen;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) {
        LatticePoint u = sub(pts[j], pts[i]), v = sub(pts[k], pts[i]);
        LatticePoint nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                         u[0] * v[1] - u[1] * v[0]};
        if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
        Int g = gcd(gcd(int_abs(nrm[0]), int_abs(nrm[1])), int_abs(nrm[2]));
        for (auto& c : nrm) c /= g;
        Int off = nrm[0] * pts[i][0] + nrm[1] * pts[i][1] + nrm[2] * pts[i][2];
        bool any_above = false, any_below = false;
        for (size_t t = 0; t < m && !(any_above && any_below); ++t) {
          Int s = nrm[0] * pts[t][0] + nrm[1] * pts[t][1] + nrm[2] * pts[t][2] - off;
          if (s > 0) any_above = true;
          if (s < 0) any_below = true;
        }
        if (any_above && any_below) continue;
        if (any_above) {  // flip to outward
          for (auto& c : nrm) c = -c;
          off = -off;
        }
        auto key = std::make_pair(nrm, off);
        if (seen.count(key)) continue;
        seen[key] = true;
        Facet3 f{nrm, off, {}};
        for (size_t t = 0; t < m; ++t) {
          Int s = nrm[0] * pts[t][0] + nrm[1] * pts[t][1] + nrm[2] * pts[t][2];
          if (s == off) f.on_plane.push_back(t);
        }
        out.push_back(std::move(f));
      }
  return out;
}

// 6 x Euclidean volume of the hull in Z^3: cones from the first point over
// every facet not containing it, each facet fanned in its planar hull order.
inline Int hull_volume6(const std::vector<LatticePoint>& pts) {
  LatticePoint apex = *std::min_element(pts.begin(), pts.end());
  Int vol6(0);
  for (const auto& f : facets3(pts)) {
    Int s = f.normal[0] * apex[0] + f.normal[1] * apex[1] + f.normal[2] * apex[2];
    if (s == f.offset) continue;  // apex on this supporting plane
    // Order the facet polygon: project out the largest normal coordinate.
    int drop = 0;
    for (int c = 1; c < 3; ++c)
      if (int_abs(f.normal[c]) > int_abs(f.normal[drop])) drop = c;
    std::vector<LatticePoint> flat;
    std::vector<LatticePoint> orig;
    for (size_t idx : f.on_plane) {
      LatticePoint q;
      for (int c = 0; c < 3; ++c)
        if (c != drop) q.push_back(pts[idx][c]);
      q.push_back(pts[idx][0]);
      q.push_back(pts[idx][1]);
      q.push_back(pts[idx][2]);
      flat.push_back(std::move(q));
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    std::vector<LatticePoint> proj;
    for (auto& q : flat) proj.push_back(LatticePoint{q[0], q[1]});
    // 2D hull of the projection; carry original coordinates along.
    std::map<std::pair<Int, Int>, LatticePoint> back;
    for (auto& q : flat) back[{q[0], q[1]}] = LatticePoint{q[2], q[3], q[4]};
    auto h2 = hull2(proj);
    if (h2.size() < 3) continue;  // degenerate sliver, no volume
    std::vector<LatticePoint> ring;
    for (auto& q : h2) ring.push_back(back[{q[0], q[1]}]);
    for (size_t t = 1; t + 1 < ring.size(); ++t) {
      Int d = det3(sub(ring[0], apex), sub(ring[t], apex), sub(ring[t + 1], apex));
      vol6 += int_abs(d);
    }
  }
  return vol6;
}

}  // namespace detail

// Normalized volume of Conv(A) with respect to the lattice generated by the
// points of A: the image of A in lattice coordinates is full-dimensional in
// Z^r and the normalized volume there is r! times the Euclidean one.
// Dimensions above 3 are rejected (exact hulls are only implemented up to 3).
inline Int normalized_volume(const SupportSet& a) {
  a.validate();
  LatticeData ld = lattice_data(a);
  int r = ld.rank;
  if (r == 0) return Int(0);
  if (r > 3) throw std::invalid_argument("normalized_volume: rank > 3 not supported");
  std::vector<LatticePoint> pts;
  for (const auto& coords : ld.coordinates) pts.push_back(coords);
  if (r == 1) {
    Int lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  if (r == 2) {
    auto h = detail::hull2(pts);
    if (h.size() < 3) return Int(0);
    return detail::polygon_area2(h);  // 2! * area = area2
  }
  return detail::hull_volume6(pts);  // 3! * vol = vol6
}

// Lattice dimension of A (rank of the module generated by the points).
inline int lattice_rank(const SupportSet& a) { return lattice_data(a).rank; }

}  // namespace nsz

#endif
