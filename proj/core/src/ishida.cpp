#include <gkzhodge/homological.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace gkz {

namespace {

Rat determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// First independent columns of the face, in column order.
std::vector<std::size_t> face_basis(const IntMatrix& m, const Face& f) {
  std::vector<std::size_t> basis;
  for (std::size_t j : f.columns) {
    auto trial = basis;
    trial.push_back(j);
    if (rank(m.select_columns(trial)) == trial.size()) basis = trial;
    if (basis.size() == f.dim) break;
  }
  return basis;
}

// Orientation sign of the facet tau' inside tau.
int incidence(const IntMatrix& m, const Face& small, const Face& big) {
  auto bb = face_basis(m, big), bs = face_basis(m, small);
  std::size_t v = 0;
  bool found = false;
  for (std::size_t j : big.columns)
    if (!std::binary_search(small.columns.begin(), small.columns.end(), j)) {
      v = j;
      found = true;
      break;
    }
  if (!found) throw std::logic_error("incidence: faces are not nested");
  std::vector<std::size_t> cols{v};
  cols.insert(cols.end(), bs.begin(), bs.end());
  const std::size_t k = bb.size(), rows = m.rows();
  RatMatrix basis(rows, k);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < k; ++c) basis(i, c) = Rat(m(i, bb[c]));
  RatMatrix coords(k, k);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    RatVec rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) rhs[i] = Rat(m(i, cols[c]));
    auto x = solve(basis, rhs);
    if (!x) throw std::logic_error("incidence: column outside the face span");
    for (std::size_t r = 0; r < k; ++r) coords(r, c) = (*x)[r];
  }
  Rat det = determinant(coords);
  if (det == 0) throw std::logic_error("incidence: degenerate orientation");
  return det > 0 ? 1 : -1;
}

long max_abs(const IntMatrix& m) {
  long g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = std::max(g, std::abs(m(i, j).get_si()));
  return g;
}

}  // namespace

FaceLattice face_lattice(const IntMatrix& m) {
  FaceLattice fl;
  fl.matrix = m;
  ConeProfile cone = facet_normals(m);
  if (!cone.pointed()) throw std::invalid_argument("face_lattice: cone is not pointed");
  fl.facet_normals = cone.facet_normals;
  const std::size_t nf = fl.facet_normals.size();
  if (nf > 24) throw std::invalid_argument("face_lattice: too many facets");

  // zero[f] = columns on facet f
  std::vector<std::set<std::size_t>> on(nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (dot(fl.facet_normals[f], m.column(j)) == 0) on[f].insert(j);

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> all(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) all[j] = j;
  // Intersections of facet column sets, grown breadth first.
  std::vector<std::vector<std::size_t>> frontier{all};
  seen.insert(all);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (auto& cols : frontier)
      for (std::size_t f = 0; f < nf; ++f) {
        std::vector<std::size_t> cut;
        for (std::size_t j : cols)
          if (on[f].count(j)) cut.push_back(j);
        if (cut.size() == cols.size()) continue;
        if (seen.insert(cut).second) next.push_back(cut);
      }
    frontier = std::move(next);
  }
  for (auto& cols : seen) {
    Face face;
    face.columns = cols;
    face.dim = cols.empty() ? 0 : rank(m.select_columns(cols));
    for (std::size_t f = 0; f < nf; ++f)
      if (std::all_of(cols.begin(), cols.end(), [&](std::size_t j) { return on[f].count(j) > 0; }))
        face.facets.push_back(f);
    fl.faces.push_back(std::move(face));
  }
  std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.columns) < std::tie(b.dim, b.columns);
  });
  return fl;
}

IshidaReport ishida_cohomology(const IntMatrix& as, std::optional<std::pair<long, long>> box) {
  IshidaReport rep;
  rep.as = as;
  if (as.rows() < 2) throw std::invalid_argument("ishida_cohomology: matrix too small");
  rep.d = as.rows() - 2;
  if (!spans_full_lattice(as)) throw std::invalid_argument("ishida_cohomology: columns do not span the lattice");
  long g = max_abs(as) * static_cast<long>(rep.d + 2);
  rep.box_lo = box ? box->first : -2 * g;
  rep.box_hi = box ? box->second : g;

  FaceLattice fl = face_lattice(as);
  IntVec a_sigma(as.rows(), Int(0));
  a_sigma[1] = 1;
  auto sit = std::find(fl.facet_normals.begin(), fl.facet_normals.end(), a_sigma);
  if (sit == fl.facet_normals.end()) throw std::invalid_argument("ishida_cohomology: (0,1,0,...) is not a facet normal");
  rep.sigma = static_cast<std::size_t>(sit - fl.facet_normals.begin());

  std::vector<const Face*> sub;  // faces of sigma
  for (auto& f : fl.faces)
    if (std::binary_search(f.facets.begin(), f.facets.end(), rep.sigma)) sub.push_back(&f);
  const std::size_t top = rep.d + 1;
  for (auto* f : sub)
    if (f->dim > top) throw std::logic_error("ishida_cohomology: face of sigma too large");

  for (auto* f : sub) {
    if (f->dim + 1 != top) continue;
    std::vector<std::size_t> others;
    for (std::size_t k : f->facets)
      if (k != rep.sigma) others.push_back(k);
    if (others.size() != 1) throw std::logic_error("ishida_cohomology: codimension-two face not in exactly two facets");
    rep.complementary.push_back(others.front());
  }
  std::sort(rep.complementary.begin(), rep.complementary.end());

  // Signs between faces of consecutive dimension.
  std::map<std::pair<std::size_t, std::size_t>, int> eps;
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j) {
      if (sub[j]->dim != sub[i]->dim + 1) continue;
      if (!std::includes(sub[j]->columns.begin(), sub[j]->columns.end(), sub[i]->columns.begin(),
                         sub[i]->columns.end()))
        continue;
      eps[{i, j}] = incidence(as, *sub[i], *sub[j]);
    }

  const std::size_t dim = as.rows();
  IntVec x(dim, Int(rep.box_lo));
  std::function<void(std::size_t)> scan = [&](std::size_t k) {
    if (k < dim) {
      for (long v = rep.box_lo; v <= rep.box_hi; ++v) {
        x[k] = v;
        scan(k + 1);
      }
      return;
    }
    std::vector<Int> pair(fl.facet_normals.size());
    for (std::size_t f = 0; f < fl.facet_normals.size(); ++f) pair[f] = dot(fl.facet_normals[f], x);
    std::vector<bool> alive(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
      alive[i] = std::all_of(sub[i]->facets.begin(), sub[i]->facets.end(), [&](std::size_t f) { return pair[f] >= 0; });
    std::vector<std::vector<std::size_t>> by_dim(top + 1);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (alive[i]) {
        pos[i] = by_dim[sub[i]->dim].size();
        by_dim[sub[i]->dim].push_back(i);
      }
    GradedComplex c;
    c.first_degree = 0;
    for (auto& v : by_dim) c.dims.push_back(v.size());
    for (std::size_t t = 0; t < top; ++t) {
      SparseMatrix m(by_dim[t + 1].size(), by_dim[t].size());
      for (std::size_t i : by_dim[t])
        for (std::size_t j : by_dim[t + 1]) {
          auto it = eps.find({i, j});
          if (it != eps.end()) m.add(pos[j], pos[i], Rat(it->second));
        }
      c.maps.push_back(std::move(m));
    }
    IshidaDegree deg;
    deg.x = x;
    if (!c.is_complex()) rep.d_squared_zero = false;
    deg.cohomology = c.cohomology();
    deg.in_s = pair[rep.sigma] >= 0;
    deg.in_s_minus = deg.in_s && std::all_of(rep.complementary.begin(), rep.complementary.end(),
                                             [&](std::size_t f) { return pair[f] < 0; });
    deg.matches = true;
    bool nonzero = false;
    for (std::size_t i = 0; i <= top; ++i) {
      std::size_t expect = (i == top && deg.in_s_minus) ? 1 : 0;
      if (deg.cohomology[i] != expect) deg.matches = false;
      if (deg.cohomology[i] != 0) nonzero = true;
    }
    if (nonzero) {
      ++rep.nonzero;
      if (x[0] >= 0) rep.negative_degrees = false;
    }
    if (deg.cohomology[top] != (deg.in_s_minus ? 1u : 0u)) rep.top_match = false;
    if (!deg.matches) {
      rep.all_match = false;
      if (pair[rep.sigma] == 0) rep.hyperplane_match = false;
      rep.mismatches.push_back(x);
    }
    rep.degrees.push_back(std::move(deg));
  };
  scan(0);
  for (auto* f : sub) rep.sigma_faces.push_back(*f);
  rep.incidence_signs = eps;
  return rep;
}

LocalCohomologyScan local_cohomology_scan(const IntMatrix& a, std::optional<std::pair<long, long>> box,
                                          std::size_t samples) {
  LocalCohomologyScan out;
  IntMatrix as = build_As(a);
  out.ishida = ishida_cohomology(as, box);
  const IshidaReport& rep = out.ishida;
  FaceLattice fl = face_lattice(as);
  ConeProfile cone_tilde = facet_normals(homogenize(a));

  for (auto& deg : rep.degrees) {
    bool top_nonzero = deg.cohomology.back() != 0;
    if (top_nonzero && deg.x[0] >= 0) out.negative_degree = false;
  }

  // y_x = x + x_1 (1, -1, 0, ...), the projection onto the hyperplane of sigma.
  std::vector<const IshidaDegree*> chosen;
  for (auto& deg : rep.degrees)
    if (deg.in_s_minus && chosen.size() < samples) chosen.push_back(&deg);
  std::size_t stride = std::max<std::size_t>(1, rep.degrees.size() / (samples + 1));
  for (std::size_t i = stride; i < rep.degrees.size() && chosen.size() < 2 * samples; i += stride)
    if (rep.degrees[i].in_s) chosen.push_back(&rep.degrees[i]);

  for (auto* deg : chosen) {
    ProjectionSample s;
    s.x = deg->x;
    s.y = s.x;
    s.y[0] += s.x[1];
    s.y[1] = 0;
    s.pairing_equal = true;
    bool y_minus = true;
    for (std::size_t f : rep.complementary) {
      const IntVec& n = fl.facet_normals[f];
      if (dot(n, s.x) != dot(n, s.y)) s.pairing_equal = false;
      if (dot(n, s.y) >= 0) y_minus = false;
    }
    IntVec p;
    p.push_back(-s.y[0]);
    for (std::size_t i = 2; i < s.y.size(); ++i) p.push_back(-s.y[i]);
    s.s_minus_agrees = y_minus == cone_tilde.in_interior(p);
    if (!s.pairing_equal || !s.s_minus_agrees) out.projection_ok = false;
    out.samples.push_back(std::move(s));
  }
  return out;
}

}  // namespace gkz
