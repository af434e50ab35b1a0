#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "setrep/cliquecover.hpp"

namespace setrep {

/// Addition and multiplication tables of GF(q) for q in {2,3,4,5,7,8,9}.
/// Elements are 0..q-1, read as base-p digit vectors of polynomial
/// coefficients modulo the field's irreducible polynomial.
class GaloisField {
 public:
  explicit GaloisField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }

 private:
  int q_;
  int p_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

using Line = std::vector<std::size_t>;

/// Points 0..points-1 and lines as sorted point lists.
struct FiniteLinearSpace {
  std::size_t points = 0;
  std::vector<Line> lines;

  friend bool operator==(const FiniteLinearSpace&, const FiniteLinearSpace&) = default;
};

/// Checks that every line has between 2 and n-1 points and every point pair
/// lies on exactly one line. Throws DomainError otherwise.
void validate_linear_space(const FiniteLinearSpace& s);
bool is_linear_space(const FiniteLinearSpace& s);

struct PlaneCertificate {
  FiniteLinearSpace space;
  int order = 0;
};

/// Validates the plane axioms (lines pairwise meet once, a quadrangle exists)
/// and the r^2+r+1 / r+1 counts. Throws DomainError on failure.
PlaneCertificate certify_plane(FiniteLinearSpace s);

/// Desarguesian plane PG(2,q): points are 1-dim and lines 2-dim subspaces of
/// GF(q)^3. Throws NoPlaneExists for q in {6,10}, NoSuchPlaneConstruction for
/// any other unsupported q.
PlaneCertificate projective_plane(int q);

/// Line {0..n-2} plus n-1 lines {i, n-1}. Requires n >= 3.
FiniteLinearSpace near_pencil(std::size_t n);

/// Removes up to two points, drops lines left with fewer than two points and
/// renumbers the surviving points in order.
FiniteLinearSpace puncture(const PlaneCertificate& plane, std::span<const std::size_t> points);

/// Number of non-isomorphic projective planes on n points; nullopt when the
/// count is unknown (order >= 11). Zero when n is not r^2+r+1 with r >= 2.
std::optional<int> n_pp(long long n);
/// The order r with n = r^2+r+1, r >= 2, if any.
std::optional<int> plane_order_for(long long n);

/// Each line becomes a clique of K_n (vertices v1..vn).
CliqueCover fls_to_cover(const FiniteLinearSpace& s);

/// K_n with Q1 = all vertices and singletons {v2}..{vn}. Requires n >= 2.
CliqueCover silly_partition(std::size_t n);

}  // namespace setrep
