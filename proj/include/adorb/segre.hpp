#pragma once

#include <string>
#include <vector>

#include "adorb/orbit.hpp"

namespace adorb {

// Point of projective space with exact homogeneous coordinates,
// canonicalized by dividing by the first nonzero coordinate.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<GaussianRational> coords);

  const std::vector<GaussianRational>& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<GaussianRational> coords_;
};

// The (n+1)^2 homogeneous Segre coordinates of g: the entries of
// v (x) eps = (first column of g) (x) (first row of adj g), row-major.
ProjectivePoint segre_coords(const GroupElement& g);

struct Eigenstructure {
  std::vector<GaussianRational> image_vector;             // M w1 = w1
  std::vector<std::vector<GaussianRational>> kernel_basis;  // M wk = 0, k >= 2
};

// For the rank-one matrix M built from g (trace 1 required): the first
// column of g spans the image, the remaining columns the kernel.
Eigenstructure eigenstructure(const SquareMatrix& m, const GroupElement& g);

struct IncidencePair {
  std::vector<GaussianRational> w;
  std::vector<GaussianRational> xi;
};

// (w, xi) lies on the incidence variety iff xi(w) = 0.
bool incidence_member(const IncidencePair& pair);

// Linear isomorphism between the Segre ambient and the homogenization
// ambient: A = (n+1) Z - tr(Z) Id (trace-zero), t = tr(Z).
std::pair<SquareMatrix, GaussianRational> ambient_change(const SquareMatrix& z);
SquareMatrix ambient_change_inverse(const SquareMatrix& a, const GaussianRational& t);

}  // namespace adorb
