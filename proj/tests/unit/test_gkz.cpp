#include <gkzhodge/gkz.hpp>

#include <doctest.h>
#include <test_util.hpp>

using namespace gkz;
using gkz::test::v;

namespace {

const IntMatrix desk_a{{1, 1}, {0, 1}};
const IntMatrix desk_b{{1, 1, 1}, {0, 1, 2}};

}  // namespace

TEST_CASE("box operator of the quadratic Veronese") {
  auto boxes = toric_box_generators(desk_b, BoxFlavor::partial_form);
  REQUIRE(boxes.size() == 1);
  SigPtr sig = boxes.front().signature();
  // Kernel spanned by (1,-2,1).
  WeylElement expected = parse_operator("d_l0*d_l2 - d_l1^2", sig);
  CHECK((boxes.front() == expected || boxes.front() == -expected));
}

TEST_CASE("toric ideal of the twisted cubic is three quadrics") {
  IntMatrix cubic{{1, 1, 1, 1}, {0, 1, 2, 3}};
  ToricIdeal ti = toric_ideal(cubic);
  CHECK(ti.binomials.size() == 3);
  for (auto& b : ti.binomials) {
    CHECK(b.degree() == 2);
    CHECK(cubic.apply(b.relation()) == IntVec(2, Int(0)));
  }
}

TEST_CASE("GKZ system layout") {
  SystemPresentation sys = build_gkz(desk_b, v({1, 2}));
  CHECK(sys.boxes().size() == 1);
  REQUIRE(sys.eulers().size() == 2);
  SigPtr sig = sys.signature;
  CHECK(sys.eulers()[0] == parse_operator("l0*d_l0 + l1*d_l1 + l2*d_l2 - 1", sig));
  CHECK(sys.eulers()[1] == parse_operator("l1*d_l1 + 2*l2*d_l2 - 2", sig));
  CHECK(eulers_commute(sys));
  for (auto& s : euler_right_multiplication(sys)) CHECK(s.certified);
}

TEST_CASE("shift ledger of the homogenized system totals d") {
  for (const IntMatrix& a : {desk_a, desk_b, IntMatrix{{1}}}) {
    IntMatrix at = homogenize(a);
    SystemPresentation sys = build_gkz(at, IntVec(at.rows(), Int(0)));
    const long d = static_cast<long>(a.rows()), n = static_cast<long>(a.cols());
    REQUIRE(sys.shift_ledger.size() == 2);
    CHECK(sys.shift_ledger[0].offset == d - n);
    CHECK(sys.shift_ledger[1].offset == n);
    CHECK(sys.total_offset() == d);
  }
}

TEST_CASE("A^s and A^s_u shapes") {
  IntMatrix as = build_As(desk_a);
  CHECK(as.rows() == 4);
  CHECK(as.cols() == 6);
  CHECK(as.row(0) == v({1, 1, 1, 0, 0, 0}));
  CHECK(as.row(1) == v({0, 0, 0, 1, 1, 1}));
  IntMatrix asu = build_As_u(desk_b, 0);
  CHECK(asu.rows() == 3);
  CHECK(asu.cols() == 7);
}

TEST_CASE("chart glue certificates for every ordered pair of charts") {
  IntMatrix a{{1, -1, 0}, {0, 1, 1}};
  for (std::size_t u1 = 0; u1 <= a.cols(); ++u1)
    for (std::size_t u2 = 0; u2 <= a.cols(); ++u2) {
      if (u1 == u2) continue;
      GlueCertificate cert = verify_chart_glue(a, u1, u2);
      CHECK(cert.ok());
    }
}

TEST_CASE("glue followed by its inverse is the identity") {
  for (const IntMatrix& a : {desk_a, desk_b}) {
    for (std::size_t u1 = 0; u1 <= a.cols(); ++u1)
      for (std::size_t u2 = 0; u2 <= a.cols(); ++u2) {
        if (u1 == u2) continue;
        SystemPresentation chart = build_chart_system(a, u1);
        for (auto& g : chart.generators) {
          WeylElement there = chart_glue(g, a, u1, u2);
          CHECK(chart_glue_inverse(there, a, u1, u2) == g);
        }
      }
  }
}

TEST_CASE("radon kernel and the transformed A^s_u system agree") {
  for (const IntMatrix& a : {desk_a, desk_b}) {
    for (std::size_t u = 0; u <= a.cols(); ++u) {
      SystemPresentation kernel = build_radon_kernel(a, u);
      SystemPresentation fl = fourier_transformed_As_u(a, u);
      REQUIRE(*kernel.signature == *fl.signature);
      CHECK(same_left_ideal(kernel.generators, fl.generators, TermOrder(kernel.signature)));
    }
  }
}

TEST_CASE("tilde systems map onto hat systems") {
  for (std::size_t m = 0; m <= desk_a.cols(); ++m) CHECK(verify_tilde_psi(desk_a, m).ok());
  CHECK(verify_tilde_psi(desk_a, 1).hat_parameter == v({-2, -1, -1}));
}

TEST_CASE("Rees system carries z on every partial") {
  SystemPresentation rees = build_rees_gkz(homogenize(desk_a));
  SigPtr sig = rees.signature;
  REQUIRE(sig->param_index("z").has_value());
  for (auto& g : rees.generators)
    for (auto& [e, c] : g.terms()) CHECK(e[sig->p(*sig->param_index("z"))] == total_partial_degree(*sig, e));
}

TEST_CASE("graph embedding appends t with the c' relation") {
  SystemPresentation g = build_graph_embedded(IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  CHECK(g.signature->vars().back() == "t");
  CHECK(g.matrix.cols() == 5);
  CHECK(g.matrix.column(4) == v({2, 1, 1}));
}

TEST_CASE("chart index out of range") { CHECK_THROWS(build_chart_system(desk_a, 7)); }
