#pragma once

#include <gkzhodge/gkz.hpp>
#include <gkzhodge/rational.hpp>
#include <gkzhodge/toric.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

class NotWellDefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BoundTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Finite complexes over Q

// Cohomologically indexed: term j sits in degree first_degree + j and
// maps[j] : term j -> term j+1 (a dims[j+1] x dims[j] matrix).
struct GradedComplex {
  int first_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> maps;

  bool is_complex() const;  // consecutive maps compose to zero
  // Cohomology dimension per term, same indexing as dims.
  std::vector<std::size_t> cohomology() const;
};

// ---------------------------------------------------------------------------
// Euler-Koszul complexes

struct EulerKoszul {
  SystemPresentation quotient;     // D/J, boxes only
  std::vector<WeylElement> eulers;
  // Differential on the free generator e_S, subsets S as bit masks:
  // e_S -> sum_j (-1)^{pos of j in S} E_j e_{S-j}, acting by right multiplication.
  std::vector<std::vector<std::pair<unsigned, WeylElement>>> differential;
  bool well_defined = false;  // each [box, E] lies in J
  bool d_squared_zero = false;
};

EulerKoszul euler_koszul(const SystemPresentation& system);

// Commutative Koszul homology: polynomial ring Q[x_0..x_{n-1}] modulo an ideal,
// graded by the columns of `grading` (first row positive); elements must be
// homogeneous. Signatures must have no partials in use.
struct KoszulDegree {
  IntVec degree;
  std::vector<std::size_t> homology;  // H_0 .. H_r
};
struct KoszulReport {
  std::vector<KoszulDegree> degrees;
  bool regular = true;  // H_i = 0 for i >= 1 everywhere checked
};

KoszulReport commutative_koszul_homology(const SigPtr& ring, const std::vector<WeylElement>& ideal,
                                         const std::vector<WeylElement>& elements, const IntMatrix& grading,
                                         long degree_bound);

// Koszul homology of the symbols of the Euler operators on
// Q[w^, lambda] (x) Q[NA^s_u], bigraded by Z^{d+1} and the weight |alpha| + c_0.
struct SymbolKoszulDegree {
  IntVec degree;
  long weight = 0;
  std::vector<std::size_t> homology;
  std::size_t gr_count = 0;  // standard monomials of gr M in the same bidegree
};
struct SymbolKoszulReport {
  IntMatrix as_u;
  std::vector<SymbolKoszulDegree> degrees;
  bool regular = true;
  bool h0_matches = true;
  long weight_bound = 0;
  long degree_box = 0;
};

SymbolKoszulReport euler_symbol_koszul(const IntMatrix& a, std::size_t u, long weight_bound = 3,
                                       long degree_box = 2, GroebnerOptions opts = {});

// ---------------------------------------------------------------------------
// Strictness

// P -> P * multiplier from D/<source> to D/<target>, graded by the columns of
// `grading` (deg x_i = column i, deg d_i = -column i; first row positive). The
// source filtration is F^ord shifted: F_{l - shift} maps into F_l.
struct FilteredMap {
  std::vector<WeylElement> source;
  std::vector<WeylElement> target;
  WeylElement multiplier;
  IntMatrix grading;
  long shift = 0;
};

struct StrictnessDegree {
  IntVec degree;
  long level = 0;
  std::size_t target_cap_image = 0;  // dim (F_l M_target cap im)_D
  std::size_t image_of_filtered = 0;  // dim phi(F_{l-shift} M_source)_D
  bool strict() const { return target_cap_image == image_of_filtered; }
};

struct StrictnessReport {
  bool well_defined = false;
  bool strict = true;
  long bound = 0;
  std::vector<StrictnessDegree> degrees;
};

// Degrees D are those of monomials with |gamma|, |delta| <= bound, levels l <= bound.
StrictnessReport strictness_check(const FilteredMap& map, long bound, GroebnerOptions opts = {});
StrictnessReport strictness_check(const DualityMorphism& phi, long bound, GroebnerOptions opts = {});

// Finite filtered complex with filtration-adapted bases: basis vector b of
// term j lies in F_{levels[j][b]} and F_p is spanned by vectors of level <= p
// (increasing filtration). Compares gr H with H(gr) dimension-wise.
struct FilteredComplex {
  GradedComplex complex;
  std::vector<std::vector<long>> levels;
};
struct FilteredComplexVerdict {
  bool filtered = false;  // differentials respect the filtration
  bool strict = true;
  // (term, level) -> (dim gr_p H, dim H(gr_p))
  std::map<std::pair<std::size_t, long>, std::pair<std::size_t, std::size_t>> table;
};
FilteredComplexVerdict strictness_check(const FilteredComplex& fc);

// ---------------------------------------------------------------------------
// Ishida complexes

struct Face {
  std::vector<std::size_t> columns;  // columns of the matrix lying on the face
  std::vector<std::size_t> facets;   // indices of the facets containing it
  std::size_t dim = 0;
};

struct FaceLattice {
  IntMatrix matrix;
  std::vector<IntVec> facet_normals;
  std::vector<Face> faces;  // sorted by (dim, columns)
};

FaceLattice face_lattice(const IntMatrix& m);

struct IshidaDegree {
  IntVec x;
  std::vector<std::size_t> cohomology;  // H^0 .. H^{d+1}
  bool in_s = false;
  bool in_s_minus = false;
  bool matches = false;  // H^i = 0 for i != d+1 and dim H^{d+1} = [x in S^-]
};

struct IshidaReport {
  IntMatrix as;
  std::size_t d = 0;
  long box_lo = 0, box_hi = 0;
  std::size_t sigma = 0;                 // facet index of sigma
  std::vector<std::size_t> complementary;  // facets tau_i^c
  std::vector<Face> sigma_faces;           // faces of sigma, empty face first
  // (i, j) -> epsilon for sigma_faces[i] a facet of sigma_faces[j]
  std::map<std::pair<std::size_t, std::size_t>, int> incidence_signs;
  std::vector<IshidaDegree> degrees;     // every x in the box
  bool all_match = true;
  bool hyperplane_match = true;  // all_match restricted to <a_sigma, x> = 0
  bool top_match = true;         // dim H^{d+1} = [x in S^-] everywhere
  std::vector<IntVec> mismatches;
  bool d_squared_zero = true;
  bool negative_degrees = true;  // nonzero cohomology only in negative first coordinate
  std::size_t nonzero = 0;
};

// Box [lo, hi]^{d+2}; default [-2g, g] with g = max|entry| * (d + 2).
IshidaReport ishida_cohomology(const IntMatrix& as, std::optional<std::pair<long, long>> box = std::nullopt);

struct ProjectionSample {
  IntVec x;
  IntVec y;
  bool pairing_equal = false;   // <a_{tau^c}, x> = <a_{tau^c}, y_x> for all tau^c
  bool s_minus_agrees = false;  // y in S^- iff -p(y) in the interior of cone(A~)
};

struct LocalCohomologyScan {
  IshidaReport ishida;
  bool negative_degree = true;  // top cohomology only in negative degree
  std::vector<ProjectionSample> samples;
  bool projection_ok = true;
};

// `a` is the d x n matrix; builds A^s internally.
LocalCohomologyScan local_cohomology_scan(const IntMatrix& a, std::optional<std::pair<long, long>> box = std::nullopt,
                                          std::size_t samples = 3);

}  // namespace gkz
