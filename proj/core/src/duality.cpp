#include <gkzhodge/gkz.hpp>

namespace gkz {

namespace {

IntVec zeros(std::size_t n) { return IntVec(n, Int(0)); }

void require_rows(const IntMatrix& m, const IntVec& v, const char* who) {
  if (v.size() != m.rows())
    throw std::invalid_argument(std::string(who) + ": parameter length does not match the row count");
}

}  // namespace

DualityData duality_data(const IntMatrix& atilde, std::optional<FanContext> ctx, long bound) {
  DualityData out;
  out.atilde = atilde;
  auto sat = check_saturation(atilde, bound);
  if (sat.status == SaturationVerdict::Status::refuted)
    throw NotGorenstein("duality_data: semigroup is not saturated, witness " + vec_to_string(sat.witness));
  auto c = gorenstein_vector(atilde, bound);
  if (!c) throw NotGorenstein("duality_data: no Gorenstein vector within bound");
  out.c_tilde = *c;
  for (auto& v : out.c_tilde) out.dual_parameter.push_back(-v);
  long n = static_cast<long>(atilde.cols()) - 1;
  out.hodge_shift = out.c_tilde[0].get_si() + n;
  ConeProfile cone = facet_normals(atilde);
  out.facet_certificate = true;
  for (auto& v : cone.facet_normals)
    if (dot(v, out.c_tilde) != 1) out.facet_certificate = false;
  if (ctx) {
    out.weight = static_cast<long>(ctx->m + ctx->k + 2 * ctx->l);
    IntVec expect;
    expect.push_back(Int(static_cast<long>(ctx->l + 1)));
    for (std::size_t i = 0; i < ctx->k; ++i) expect.push_back(0);
    for (std::size_t i = 0; i < ctx->l; ++i) expect.push_back(1);
    out.fan_vector_check = expect == out.c_tilde;
  }
  return out;
}

DualityMorphism duality_morphism(const DualityData& data, std::optional<IntVec> beta,
                                 std::optional<IntVec> beta_prime) {
  const IntMatrix& at = data.atilde;
  IntVec b = beta ? *beta : zeros(at.rows());
  IntVec bp = beta_prime ? *beta_prime : data.c_tilde;
  require_rows(at, b, "duality_morphism");
  require_rows(at, bp, "duality_morphism");
  auto k = nonneg_integer_solve(at, add(b, bp));
  if (!k) throw NoExponent("duality_morphism: no nonnegative k with A~ k = beta + beta'");
  DualityMorphism phi;
  phi.exponent = *k;
  IntVec neg;
  for (auto& v : bp) neg.push_back(-v);
  phi.source = build_gkz(at, neg);
  phi.target = build_gkz(at, b);
  Exp e(phi.target.signature->width(), 0);
  long total = 0;
  for (std::size_t i = 0; i < k->size(); ++i) {
    e[phi.target.signature->d(i)] = static_cast<int>((*k)[i].get_si());
    total += (*k)[i].get_si();
  }
  phi.multiplier = WeylElement::monomial(phi.target.signature, e);
  phi.order_shift = total;
  TermOrder order(phi.target.signature);
  GroebnerBasis gb = buchberger(phi.target.generators, order);
  phi.certified = true;
  for (auto& g : phi.source.generators)
    if (!ideal_membership(multiply(g, phi.multiplier), gb)) phi.certified = false;
  return phi;
}

WeylElement apply_duality(const DualityMorphism& phi, const WeylElement& p) {
  return multiply(p.retag(phi.target.signature), phi.multiplier);
}

}  // namespace gkz
