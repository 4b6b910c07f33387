#include <gkzhodge/homological.hpp>

#include <doctest.h>
#include <test_util.hpp>

using namespace gkz;
using gkz::test::v;

namespace {

const IshidaDegree& at(const IshidaReport& rep, const IntVec& x) {
  for (auto& d : rep.degrees)
    if (d.x == x) return d;
  throw std::out_of_range("degree outside the box");
}

}  // namespace

TEST_CASE("face lattice of the cone over a square") {
  FaceLattice fl = face_lattice(build_As(IntMatrix{{1}}));
  CHECK(fl.facet_normals.size() == 4);
  std::vector<std::size_t> by_dim(4, 0);
  for (auto& f : fl.faces) ++by_dim.at(f.dim);
  CHECK(by_dim == std::vector<std::size_t>{1, 4, 4, 1});
  // Every ray lies on exactly two facets.
  for (auto& f : fl.faces)
    if (f.dim == 1) CHECK(f.facets.size() == 2);
  CHECK(fl.faces.back().columns.size() == 4);
  CHECK(fl.faces.back().facets.empty());
}

TEST_CASE("Ishida complex of A = [1]") {
  IshidaReport rep = ishida_cohomology(build_As(IntMatrix{{1}}));
  CHECK(rep.d == 1);
  CHECK(rep.box_lo == -6);
  CHECK(rep.box_hi == 3);
  CHECK(rep.degrees.size() == 1000);
  CHECK(rep.sigma_faces.size() == 4);
  CHECK(rep.sigma_faces.front().columns.empty());
  CHECK(rep.d_squared_zero);
  CHECK(rep.negative_degrees);
  CHECK(rep.hyperplane_match);
  CHECK(rep.top_match);
  for (auto& [key, eps] : rep.incidence_signs) CHECK((eps == 1 || eps == -1));

  const IshidaDegree& top = at(rep, v({-6, 0, -5}));
  CHECK(top.in_s_minus);
  CHECK(top.cohomology == std::vector<std::size_t>{0, 0, 1});

  // Off the hyperplane of sigma the middle cohomology can survive.
  const IshidaDegree& off = at(rep, v({-3, 3, 0}));
  CHECK(off.in_s);
  CHECK_FALSE(off.in_s_minus);
  CHECK(off.cohomology == std::vector<std::size_t>{0, 1, 0});
  CHECK_FALSE(off.matches);
  CHECK_FALSE(rep.all_match);
}

TEST_CASE("degrees outside S have no cohomology") {
  IshidaReport rep = ishida_cohomology(build_As(IntMatrix{{1}}), std::pair<long, long>{-3, 2});
  CHECK(rep.degrees.size() == 216);
  std::size_t nonzero = 0;
  for (auto& d : rep.degrees) {
    std::size_t total = 0;
    for (auto h : d.cohomology) total += h;
    if (!d.in_s) CHECK(total == 0);
    if (total > 0) {
      ++nonzero;
      CHECK(d.x[0] < 0);
    }
  }
  CHECK(nonzero == rep.nonzero);
}

TEST_CASE("Ishida complex of the second desk matrix") {
  IshidaReport rep = ishida_cohomology(build_As(IntMatrix{{1, 1}, {0, 1}}));
  CHECK(rep.d == 2);
  CHECK(rep.d_squared_zero);
  CHECK(rep.negative_degrees);
  CHECK(rep.hyperplane_match);
  CHECK(rep.top_match);
  for (auto& d : rep.degrees)
    if (d.x[1] == 0) CHECK(d.matches);
}

TEST_CASE("local cohomology scan projects onto the hyperplane of sigma") {
  for (const IntMatrix& a : {IntMatrix{{1}}, IntMatrix{{1, 1}, {0, 1}}}) {
    LocalCohomologyScan scan = local_cohomology_scan(a, std::nullopt, 4);
    CHECK(scan.negative_degree);
    CHECK(scan.projection_ok);
    CHECK(scan.samples.size() >= 4);
    CHECK(scan.samples.size() <= 8);
    for (auto& s : scan.samples) {
      CHECK(s.y[1] == 0);
      CHECK(s.pairing_equal);
      CHECK(s.s_minus_agrees);
    }
  }
}
