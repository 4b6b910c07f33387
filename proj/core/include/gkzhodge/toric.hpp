#pragma once

#include <gkzhodge/linalg.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

class NotFullRank : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotSaturated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NoDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

using Point = std::vector<long>;

struct ConeProfile {
  IntMatrix generators;
  std::vector<IntVec> facet_normals;  // sorted lexicographically
  std::size_t group_part_rank = 0;    // r' = rank of {x : <x, v_a> = 0 for all a}

  bool pointed() const { return group_part_rank == 0; }
  bool in_cone(const IntVec& x) const;
  bool in_interior(const IntVec& x) const;
  // Sum of the facet normals; strictly positive on nonzero cone points when pointed.
  IntVec grading() const;
};

ConeProfile facet_normals(const IntMatrix& b);

enum class Membership { member, nonmember, unknown };

struct MembershipResult {
  Membership status = Membership::unknown;
  IntVec k;  // set when member
};

MembershipResult semigroup_membership(const IntMatrix& b, const IntVec& x, long bound = 20);
MembershipResult semigroup_membership(const ConeProfile& cone, const IntVec& x, long bound = 20);

// Lattice points of NB inside the region used by the bounded checks. For pointed
// cones this is exactly {x in NB : <y, x> <= bound} with y = grading(); otherwise
// all points reachable inside the box |x|_inf <= radius.
class SemigroupBall {
 public:
  SemigroupBall(const ConeProfile& cone, long bound);
  bool contains(const Point& x) const { return points_.count(x) > 0; }
  // Whether x lies in the region where membership answers are exact.
  bool exact_region(const Point& x) const;
  const std::set<Point>& points() const { return points_; }
  bool pointed() const { return pointed_; }
  long bound() const { return bound_; }
  long level(const Point& x) const;  // <y, x> in the pointed case
  // Candidate lattice points of the cone inside the checked region.
  std::vector<Point> cone_points() const;

 private:
  const ConeProfile* cone_;
  long bound_;
  bool pointed_;
  Point y_;
  std::set<Point> points_;
};

struct SaturationVerdict {
  enum class Status { verified_to_bound, refuted, unknown };
  Status status = Status::unknown;
  long bound = 0;
  IntVec witness;
  bool approximate = false;  // non-pointed cones are checked on a box only

  std::string status_name() const;
};

SaturationVerdict check_saturation(const IntMatrix& b, long bound = 20);

std::optional<IntVec> gorenstein_vector(const IntMatrix& b, long bound = 20);

struct CPrime {
  std::vector<std::size_t> J1;  // chosen columns off the group part
  std::vector<std::size_t> J2;  // chosen columns inside the group part
  IntVec cprime;
  IntVec representation;  // k with B k = c realising the choice
};

// All valid decompositions coming from minimal-degree representations of c,
// the lexicographically smallest representation first.
std::vector<CPrime> cprime_decompositions(const IntMatrix& b, const IntVec& c);
CPrime cprime_decomposition(const IntMatrix& b, const IntVec& c);

IntMatrix homogenize(const IntMatrix& b);

struct ChartMatrix {
  IntMatrix A_u;
  IntMatrix C_u;
  // C_u * homogenize(A) equals homogenize(A_u) after placing column u first.
  std::vector<std::size_t> column_order;
  std::vector<std::size_t> source_index;  // A_u column k comes from a_{source_index[k]}
};

ChartMatrix chart_matrix(const IntMatrix& a, std::size_t u);

struct SresResult {
  bool contains = false;
  std::size_t column = 0;
  long k = 0;
  long bound = 0;
  bool bounded_approximation = true;
};

SresResult sres_contains(const IntMatrix& b, const IntVec& beta, long bound = 20);

struct SemigroupProfile {
  ConeProfile cone;
  SaturationVerdict saturated;
  std::optional<IntVec> gorenstein_c;
  std::optional<CPrime> cprime;
  std::vector<CPrime> cprime_alternatives;
};

SemigroupProfile semigroup_profile(const IntMatrix& b, long bound = 20);

}  // namespace gkz
