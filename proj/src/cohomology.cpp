#include "derham/cohomology.hpp"

#include <algorithm>

namespace derham::cohomology {

using la::QMatrix;
using la::Rational;

TruncatedComplex truncated_complex(Workspace& ws, Side side, int sub, int q_max, int D) {
  TruncatedComplex t;
  t.side = side;
  t.sub = sub;
  t.q_max = q_max;
  t.D = D;
  for (int q = 0; q <= q_max + 1; ++q) t.dims.push_back(ws.space_dim(side, sub, q, D));
  for (int q = 0; q <= q_max; ++q) t.d.push_back(ws.d_matrix(side, sub, q, D));
  if (side == Side::omega) {
    const auto& pres = ws.pres(sub);
    const auto& tr = pres.truncation(0, D);
    t.unit = tr.coords(pres.normal_form(poly::PolyForm::one(pres.nvars())));
  } else {
    t.unit = sullivan::a_unit(ws.a_space(sub, 0, D));
  }
  return t;
}

std::vector<long> truncated_betti(const TruncatedComplex& t) {
  std::vector<long> h(t.q_max + 1, 0);
  std::vector<int> ranks(t.q_max + 1, 0);
  for (int q = 0; q <= t.q_max; ++q) ranks[q] = la::rank(t.d[q]);
  for (int q = 0; q <= t.q_max; ++q) {
    const long ker = t.dims[q] - ranks[q];
    h[q] = ker - (q == 0 ? 0 : ranks[q - 1]);
  }
  return h;
}

std::vector<long> BettiReport::values() const {
  std::vector<long> v;
  for (const auto& d : degrees) v.push_back(d.value);
  return v;
}

int BettiReport::D0() const {
  int d0 = -1;
  for (const auto& d : degrees) {
    if (!d.stabilized) return -1;
    d0 = std::max(d0, d.D0);
  }
  return d0;
}

BettiReport stabilized_betti(Workspace& ws, Side side, int sub, int q_max, int D_min, int D_max,
                             int window) {
  if (D_min < q_max) throw std::invalid_argument("D_min must be at least q_max");
  BettiReport r;
  r.side = side;
  r.sub = sub;
  r.q_max = q_max;
  r.D_min = D_min;
  r.D_max = D_max;
  r.window = window;
  for (int D = D_min; D <= D_max; ++D)
    r.table.emplace_back(D, truncated_betti(truncated_complex(ws, side, sub, q_max, D)));
  for (int q = 0; q <= q_max; ++q) {
    DegreeStabilization s;
    const long last = r.table.back().second[q];
    int d0 = r.table.back().first;
    for (auto it = r.table.rbegin(); it != r.table.rend(); ++it) {
      if (it->second[q] != last) break;
      d0 = it->first;
    }
    s.value = last;
    s.D0 = d0;
    s.stabilized = (D_max - d0 + 1) >= window;
    r.degrees.push_back(s);
  }
  r.all_stabilized =
      std::all_of(r.degrees.begin(), r.degrees.end(), [](const auto& d) { return d.stabilized; });
  return r;
}

InducedPReport induced_P_on_H(Workspace& ws, int q_max, int D) {
  InducedPReport rep;
  rep.q_max = q_max;
  rep.D = D;
  const TruncatedComplex to = truncated_complex(ws, Side::omega, 0, q_max, D);
  const TruncatedComplex ta = truncated_complex(ws, Side::sullivan, 0, q_max, D);

  rep.chain_map = true;
  for (int q = 0; q <= q_max; ++q) {
    const QMatrix& pq = ws.P_matrix(q, D);
    const QMatrix& pq1 = ws.P_matrix(q + 1, D);
    if (!(mul(ta.d[q], pq) == mul(pq1, to.d[q]))) rep.chain_map = false;
  }
  {
    const QMatrix& p0 = ws.P_matrix(0, D);
    rep.unit_compatible = (p0.apply(to.unit) == ta.unit);
  }

  for (int q = 0; q <= q_max; ++q) {
    InducedPDegree deg;
    const auto zo = la::rank_kernel_image(to.d[q]).kernel;
    const auto za = la::rank_kernel_image(ta.d[q]).kernel;
    const QMatrix bo = (q == 0) ? QMatrix(to.dims[0], 0) : la::rank_kernel_image(to.d[q - 1]).image;
    const QMatrix ba = (q == 0) ? QMatrix(ta.dims[0], 0) : la::rank_kernel_image(ta.d[q - 1]).image;
    const QMatrix& pq = ws.P_matrix(q, D);

    const auto pz = la::multi_solve(za, mul(pq, zo));
    deg.cocycles_preserved = pz.has_value();
    const auto pb = la::multi_solve(ba, mul(pq, bo));
    deg.well_defined = pb.has_value();

    // Classes: cycles modulo boundaries, via cycle-basis coordinates.
    const auto bz_o = la::multi_solve(zo, bo);
    const auto bz_a = la::multi_solve(za, ba);
    if (pz && bz_o && bz_a) {
      const auto quot_o = la::quotient_space(zo.cols(), bz_o->transpose());
      const auto quot_a = la::quotient_space(za.cols(), bz_a->transpose());
      deg.h_omega = quot_o.dim();
      deg.h_sullivan = quot_a.dim();
      const QMatrix induced = mul(quot_a.coords, mul(*pz, quot_o.coset_basis));
      deg.rank = la::rank(induced);
    }
    rep.degrees.push_back(deg);
  }
  rep.pass = rep.chain_map && rep.unit_compatible &&
             std::all_of(rep.degrees.begin(), rep.degrees.end(),
                         [](const auto& d) { return d.well_defined && d.cocycles_preserved; });
  return rep;
}

StarAcyclicityReport star_acyclicity(Workspace& ws, int q_max, int D_min, int D_max, int window,
                                     int p_max) {
  StarAcyclicityReport rep;
  rep.q_max = q_max;
  rep.D_min = D_min;
  rep.D_max = D_max;
  rep.window = window;
  rep.p_max = p_max;
  std::vector<long> expected(q_max + 1, 0);
  expected[0] = 1;
  bool pass = true;
  for (int p = 0; p <= p_max; ++p) {
    for (const auto& u : simplicial::increasing_tuples(ws.complex(), p)) {
      StarAcyclicityEntry e;
      e.tuple = u;
      const int id = ws.star_id(u);
      if (ws.sub_empty(id)) {
        e.empty_star = true;
        e.ok = true;
        rep.entries.push_back(std::move(e));
        continue;
      }
      const auto bo = stabilized_betti(ws, Side::omega, id, q_max, D_min, D_max, window);
      const auto ba = stabilized_betti(ws, Side::sullivan, id, q_max, D_min, D_max, window);
      e.omega_betti = bo.values();
      e.sullivan_betti = ba.values();
      e.ok = bo.all_stabilized && ba.all_stabilized && e.omega_betti == expected &&
             e.sullivan_betti == expected;
      pass = pass && e.ok;
      rep.entries.push_back(std::move(e));
    }
  }
  rep.pass = pass;
  return rep;
}

}  // namespace derham::cohomology
