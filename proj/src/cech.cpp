#include "derham/cech.hpp"

#include <algorithm>

namespace derham::cech {

using simplicial::VertexTuple;

int CechSpace::tuple_index(const VertexTuple& u) const {
  const auto it = std::lower_bound(tuples.begin(), tuples.end(), u);
  if (it == tuples.end() || !(*it == u)) throw std::invalid_argument("tuple not in Cech space");
  return static_cast<int>(it - tuples.begin());
}

CechSpace cech_space(Workspace& ws, Side side, int p, int q, int D) {
  CechSpace s;
  s.side = side;
  s.p = p;
  s.q = q;
  s.D = D;
  s.tuples = simplicial::increasing_tuples(ws.complex(), p);
  int off = 0;
  for (const auto& u : s.tuples) {
    const int id = ws.star_id(u);
    s.star_ids.push_back(id);
    const int dim = ws.space_dim(side, id, q, D);
    s.dims.push_back(dim);
    s.offsets.push_back(off);
    off += dim;
  }
  s.total_dim = off;
  return s;
}

QMatrix cech_delta(Workspace& ws, Side side, int p, int q, int D) {
  const CechSpace src = cech_space(ws, side, p, q, D);
  const CechSpace dst = cech_space(ws, side, p + 1, q, D);
  QMatrix m(dst.total_dim, src.total_dim);
  for (size_t ts = 0; ts < dst.tuples.size(); ++ts) {
    if (dst.dims[ts] == 0) continue;
    const auto& s = dst.tuples[ts].entries;
    for (size_t i = 0; i < s.size(); ++i) {
      VertexTuple u;
      u.entries = s;
      u.entries.erase(u.entries.begin() + i);
      const int tu = src.tuple_index(u);
      if (src.dims[tu] == 0) continue;
      const QMatrix& r = ws.restriction(side, src.star_ids[tu], dst.star_ids[ts], q, D);
      m.add_block(dst.offsets[ts], src.offsets[tu], (i % 2 == 0) ? r : r * la::Rational(-1));
    }
  }
  return m;
}

QMatrix cech_component_d(Workspace& ws, Side side, int p, int q, int D) {
  const CechSpace src = cech_space(ws, side, p, q, D);
  const CechSpace dst = cech_space(ws, side, p, q + 1, D);
  QMatrix m(dst.total_dim, src.total_dim);
  for (size_t t = 0; t < src.tuples.size(); ++t) {
    if (src.dims[t] == 0 || dst.dims[t] == 0) continue;
    m.set_block(dst.offsets[t], src.offsets[t], ws.d_matrix(side, src.star_ids[t], q, D));
  }
  return m;
}

QMatrix cech_inclusion(Workspace& ws, Side side, int p, int q, int D, int D2) {
  const CechSpace src = cech_space(ws, side, p, q, D);
  const CechSpace dst = cech_space(ws, side, p, q, D2);
  QMatrix m(dst.total_dim, src.total_dim);
  for (size_t t = 0; t < src.tuples.size(); ++t) {
    if (src.dims[t] == 0) continue;
    m.set_block(dst.offsets[t], src.offsets[t], ws.inclusion(side, src.star_ids[t], q, D, D2));
  }
  return m;
}

QMatrix homotopy_K(Workspace& ws, Side side, int p, int q, int D) {
  const int N = ws.homotopy_shift(side);
  const CechSpace src = cech_space(ws, side, p, q, D);
  const CechSpace dst = cech_space(ws, side, p - 1, q, D + N);
  QMatrix m(dst.total_dim, src.total_dim);
  const int n = ws.vertex_count();
  for (size_t tw = 0; tw < dst.tuples.size(); ++tw) {
    if (dst.dims[tw] == 0) continue;
    const auto& w = dst.tuples[tw].entries;
    const int zw = dst.star_ids[tw];
    for (int v = 0; v < n; ++v) {
      if (std::find(w.begin(), w.end(), v) != w.end()) continue;
      VertexTuple wv;
      wv.entries = w;
      wv.entries.insert(std::upper_bound(wv.entries.begin(), wv.entries.end(), v), v);
      const int tu = src.tuple_index(wv);
      if (src.dims[tu] == 0) continue;
      // omega_{v*w} = sign * omega_{sorted}, the sign of moving v past the
      // smaller entries of w.
      const long smaller = std::count_if(w.begin(), w.end(), [v](int e) { return e < v; });
      const QMatrix& ext = ws.extension(side, zw, src.star_ids[tu], q, D);
      const QMatrix& mult = ws.mult_weight(side, zw, v, q, D, D + N);
      QMatrix block = mul(mult, ext);
      if (smaller % 2 == 1) block = block * la::Rational(-1);
      m.add_block(dst.offsets[tw], src.offsets[tu], block);
    }
  }
  return m;
}

RowExactness certify_row_exactness(Workspace& ws, Side side, int q, int D, int p_max) {
  RowExactness r;
  r.side = side;
  r.q = q;
  r.D = D;
  r.p_max = p_max;
  const int N = ws.homotopy_shift(side);
  auto fail = [&r](const std::string& what) { r.failures.push_back(what); };
  auto tag = [&](int p) {
    return side_name(side) + " p=" + std::to_string(p) + " q=" + std::to_string(q) +
           " D=" + std::to_string(D);
  };

  // p = -1: the homotopy inverts delta on the augmentation column.
  {
    const QMatrix d_aug = cech_delta(ws, side, -1, q, D);
    const auto dec = la::rank_kernel_image(d_aug);
    ++r.identities;
    if (dec.rank != d_aug.cols()) fail("delta not injective at " + tag(-1));
    const QMatrix k0 = homotopy_K(ws, side, 0, q, D);
    const QMatrix incl = cech_inclusion(ws, side, -1, q, D, D + N);
    ++r.identities;
    if (!(mul(k0, d_aug) == incl)) fail("K delta != inclusion at " + tag(-1));
  }

  for (int p = 0; p <= p_max; ++p) {
    const QMatrix kp = homotopy_K(ws, side, p, q, D);
    const QMatrix kp1 = homotopy_K(ws, side, p + 1, q, D);
    const QMatrix delta_here = cech_delta(ws, side, p, q, D);
    const QMatrix delta_low = cech_delta(ws, side, p - 1, q, D + N);
    const QMatrix incl = cech_inclusion(ws, side, p, q, D, D + N);
    ++r.identities;
    if (!(mul(delta_low, kp) + mul(kp1, delta_here) == incl))
      fail("delta K + K delta != inclusion at " + tag(p));
  }

  // delta^2 = 0 and delta commutes with the component differential.
  for (int p = -1; p <= p_max; ++p) {
    ++r.identities;
    if (!mul(cech_delta(ws, side, p + 1, q, D), cech_delta(ws, side, p, q, D)).is_zero())
      fail("delta^2 != 0 at " + tag(p));
    ++r.identities;
    const QMatrix a = mul(cech_component_d(ws, side, p + 1, q, D), cech_delta(ws, side, p, q, D));
    const QMatrix b = mul(cech_delta(ws, side, p, q + 1, D), cech_component_d(ws, side, p, q, D));
    if (!(a == b)) fail("delta does not commute with d at " + tag(p));
  }

  r.pass = r.failures.empty();
  return r;
}

}  // namespace derham::cech
