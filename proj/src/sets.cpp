#include "resavg/sets.hpp"

#include <cmath>
#include <limits>

namespace resavg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLineTol = 1e-9;

using Interval = std::pair<double, double>;

std::optional<Interval> intersect(std::optional<Interval> a, std::optional<Interval> b) {
  if (!a || !b) return std::nullopt;
  Interval r{std::max(a->first, b->first), std::min(a->second, b->second)};
  if (r.first > r.second) return std::nullopt;
  return r;
}

std::optional<Interval> all() { return Interval{-kInf, kInf}; }

// {t : <a, y0 + t*dir> <= b}
std::optional<Interval> halfline(double ay0, double adir, double b) {
  if (std::abs(adir) <= kLineTol * (std::abs(ay0) + std::abs(b) + 1.0)) {
    if (ay0 <= b + kLineTol * (std::abs(b) + 1.0)) return all();
    return std::nullopt;
  }
  double t = (b - ay0) / adir;
  if (adir > 0) return Interval{-kInf, t};
  return Interval{t, kInf};
}
}  // namespace

Halfspace::Halfspace(Vec n, double b) : normal(std::move(n)), offset(b) {
  checkFinite(normal, "Halfspace normal");
  if (!std::isfinite(offset)) throw SpecError("Halfspace: offset must be finite");
  if (normal.norm() == 0) throw SpecError("Halfspace: normal must be nonzero");
}

Box::Box(Vec lo, Vec up) : lower(std::move(lo)), upper(std::move(up)) {
  if (lower.size() != upper.size()) throw SpecError("Box: bound dimensions differ");
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i])) throw SpecError("Box: NaN bound");
    if (lower[i] > upper[i]) throw SpecError("Box: lower > upper");
    if (lower[i] == kInf || upper[i] == -kInf) throw SpecError("Box: empty side");
  }
}

Ball::Ball(Vec c, double r) : center(std::move(c)), radius(r) {
  checkFinite(center, "Ball center");
  if (!(r > 0) || !std::isfinite(r)) throw SpecError("Ball: radius must be positive and finite");
}

AffineSubspace::AffineSubspace(Vec p, Mat dirs)
    : basepoint(std::move(p)), directions(std::move(dirs)) {
  checkFinite(basepoint, "AffineSubspace basepoint");
  if (directions.size() > 0 && !directions.allFinite())
    throw SpecError("AffineSubspace: directions must be finite");
  if (directions.cols() > 0) {
    if (directions.rows() != basepoint.size())
      throw SpecError("AffineSubspace: direction dimension mismatch");
    Mat gram = directions.transpose() * directions;
    if ((gram - Mat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-9)
      throw SpecError("AffineSubspace: directions must be orthonormal");
  }
}

SinglePoint::SinglePoint(Vec point) : p(std::move(point)) { checkFinite(p, "SinglePoint"); }

int dimension(const ConvexSetSpec& set) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Halfspace>) return static_cast<int>(s.normal.size());
        if constexpr (std::is_same_v<T, Box>) return static_cast<int>(s.lower.size());
        if constexpr (std::is_same_v<T, Ball>) return static_cast<int>(s.center.size());
        if constexpr (std::is_same_v<T, AffineSubspace>) return static_cast<int>(s.basepoint.size());
        if constexpr (std::is_same_v<T, SinglePoint>) return static_cast<int>(s.p.size());
      },
      set);
}

Vec project(const ConvexSetSpec& set, const Vec& x) {
  checkDim(x, dimension(set), "project");
  checkFinite(x, "project");
  return std::visit(
      [&x](const auto& s) -> Vec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          double excess = s.normal.dot(x) - s.offset;
          if (excess <= 0) return x;
          return x - (excess / s.normal.squaredNorm()) * s.normal;
        } else if constexpr (std::is_same_v<T, Box>) {
          Vec y = x;
          for (Eigen::Index i = 0; i < y.size(); ++i)
            y[i] = std::min(std::max(y[i], s.lower[i]), s.upper[i]);
          return y;
        } else if constexpr (std::is_same_v<T, Ball>) {
          Vec d = x - s.center;
          double n = d.norm();
          if (n <= s.radius) return x;
          return s.center + (s.radius / n) * d;
        } else if constexpr (std::is_same_v<T, AffineSubspace>) {
          if (s.directions.cols() == 0) return s.basepoint;
          Vec d = x - s.basepoint;
          return s.basepoint + s.directions * (s.directions.transpose() * d);
        } else {
          return s.p;
        }
      },
      set);
}

bool contains(const ConvexSetSpec& set, const Vec& x, double tol) {
  return (project(set, x) - x).norm() <= tol;
}

std::optional<std::pair<double, double>> lineInterval(const ConvexSetSpec& set, const Vec& y0,
                                                      const Vec& dir) {
  checkDim(y0, dimension(set), "lineInterval");
  checkDim(dir, dimension(set), "lineInterval");
  double scale = y0.norm() + dir.norm() + 1.0;
  return std::visit(
      [&](const auto& s) -> std::optional<Interval> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          return halfline(s.normal.dot(y0), s.normal.dot(dir), s.offset);
        } else if constexpr (std::is_same_v<T, Box>) {
          std::optional<Interval> iv = all();
          for (Eigen::Index i = 0; i < y0.size() && iv; ++i) {
            if (s.lower[i] > -kInf) iv = intersect(iv, halfline(-y0[i], -dir[i], -s.lower[i]));
            if (s.upper[i] < kInf) iv = intersect(iv, halfline(y0[i], dir[i], s.upper[i]));
          }
          return iv;
        } else if constexpr (std::is_same_v<T, Ball>) {
          // ||y0 - c + t*dir||^2 <= r^2
          Vec w = y0 - s.center;
          double a = dir.squaredNorm();
          double b = 2.0 * w.dot(dir);
          double c = w.squaredNorm() - s.radius * s.radius;
          if (a <= kLineTol * kLineTol) {
            if (c <= kLineTol * scale) return all();
            return std::nullopt;
          }
          double disc = b * b - 4 * a * c;
          if (disc < 0) return std::nullopt;
          double sq = std::sqrt(disc);
          return Interval{(-b - sq) / (2 * a), (-b + sq) / (2 * a)};
        } else {
          // residual against the affine hull: Q*(y0 - p) + t*Q*dir = 0
          Vec w = y0;
          Vec qd = dir;
          if constexpr (std::is_same_v<T, AffineSubspace>) {
            w -= s.basepoint;
            if (s.directions.cols() > 0) {
              w -= s.directions * (s.directions.transpose() * w);
              qd -= s.directions * (s.directions.transpose() * qd);
            }
          } else {
            w -= s.p;
          }
          double qn = qd.norm();
          if (qn <= kLineTol) {
            if (w.norm() <= kLineTol * scale) return all();
            return std::nullopt;
          }
          double t = -qd.dot(w) / (qn * qn);
          if ((w + t * qd).norm() > kLineTol * scale) return std::nullopt;
          return Interval{t, t};
        }
      },
      set);
}

}  // namespace resavg
