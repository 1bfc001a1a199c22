#pragma once

#include "resavg/common.hpp"

#include <optional>
#include <variant>

namespace resavg {

// Catalog of nonempty closed convex sets with exact projections.

struct Halfspace {
  Vec normal;  // nonzero
  double offset;
  Halfspace(Vec n, double b);
};

struct Box {
  Vec lower, upper;  // entries may be +-inf; lower <= upper componentwise
  Box(Vec lo, Vec up);
};

struct Ball {
  Vec center;
  double radius;  // > 0
  Ball(Vec c, double r);
};

struct AffineSubspace {
  Vec basepoint;
  Mat directions;  // d x k, orthonormal columns (k may be 0)
  AffineSubspace(Vec p, Mat dirs);
};

struct SinglePoint {
  Vec p;
  explicit SinglePoint(Vec point);
};

using ConvexSetSpec = std::variant<Halfspace, Box, Ball, AffineSubspace, SinglePoint>;

int dimension(const ConvexSetSpec& set);

/// Nearest point of the set.
Vec project(const ConvexSetSpec& set, const Vec& x);

bool contains(const ConvexSetSpec& set, const Vec& x, double tol);

/// Feasible parameter interval {t : y0 + t*dir in set}; nullopt when empty.
/// Infinite endpoints are +-inf.
std::optional<std::pair<double, double>> lineInterval(const ConvexSetSpec& set,
                                                      const Vec& y0, const Vec& dir);

}  // namespace resavg
