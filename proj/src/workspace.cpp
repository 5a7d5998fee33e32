#include "derham/workspace.hpp"

namespace derham {

using la::QMatrix;
using omega::OmegaPresentation;
using simplicial::Subcomplex;
using simplicial::VertexTuple;

Workspace::Workspace(simplicial::SimplicialComplex x) : x_(std::move(x)) {
  sub_id(Subcomplex(&x_, x_.simplices()));
}

int Workspace::sub_id(const Subcomplex& s) {
  const auto key = s.key();
  auto it = sub_index_.find(key);
  if (it != sub_index_.end()) return it->second;
  SubEntry e;
  e.sub = s;
  e.cx = s.as_complex();
  subs_.push_back(std::move(e));
  const int id = static_cast<int>(subs_.size()) - 1;
  sub_index_.emplace(key, id);
  return id;
}

int Workspace::star_id(const VertexTuple& u) {
  auto it = star_index_.find(u.entries);
  if (it != star_index_.end()) return it->second;
  const int id = sub_id(star(x_, u));
  star_index_.emplace(u.entries, id);
  return id;
}

const OmegaPresentation& Workspace::pres(int id) {
  auto& e = subs_[id];
  if (!e.pres) e.pres = std::make_unique<OmegaPresentation>(e.cx);
  return *e.pres;
}

const sullivan::ASpace& Workspace::a_space(int id, int q, int D) {
  auto& e = subs_[id];
  const auto key = std::make_pair(q, D);
  auto it = e.aspaces.find(key);
  if (it != e.aspaces.end()) return it->second;
  return e.aspaces.emplace(key, sullivan::a_truncated(e.cx, q, D)).first->second;
}

const omega::PartitionOfUnity& Workspace::pou() {
  if (!pou_) pou_ = std::make_unique<omega::PartitionOfUnity>(omega::partition_of_unity(pres(0)));
  return *pou_;
}

int Workspace::space_dim(Side side, int id, int q, int D) {
  if (side == Side::omega) return pres(id).truncation(q, D).dim();
  return a_space(id, q, D).dim();
}

const QMatrix& Workspace::restriction(Side side, int from_id, int to_id, int q, int D) {
  const auto key = std::make_tuple(static_cast<int>(side), from_id, to_id, q, D);
  auto it = restrict_.find(key);
  if (it != restrict_.end()) return it->second;
  QMatrix m;
  if (side == Side::omega) {
    m = omega::omega_restrict(pres(from_id), pres(to_id), q, D);
  } else {
    m = sullivan::a_restrict(sub_complex(from_id), a_space(from_id, q, D), sub_complex(to_id),
                             a_space(to_id, q, D));
  }
  return restrict_.emplace(key, std::move(m)).first->second;
}

const QMatrix& Workspace::extension(Side side, int from_id, int to_id, int q, int D) {
  const auto key = std::make_tuple(static_cast<int>(side), from_id, to_id, q, D);
  auto it = extend_.find(key);
  if (it != extend_.end()) return it->second;
  QMatrix m;
  if (side == Side::omega) {
    m = omega::omega_extend(pres(from_id), pres(to_id), q, D);
  } else {
    m = sullivan::a_extend(restriction(side, from_id, to_id, q, D));
  }
  return extend_.emplace(key, std::move(m)).first->second;
}

const QMatrix& Workspace::d_matrix(Side side, int id, int q, int D) {
  const auto key = std::make_tuple(static_cast<int>(side), id, q, D);
  auto it = d_.find(key);
  if (it != d_.end()) return it->second;
  QMatrix m;
  if (side == Side::omega) {
    m = omega::omega_d(pres(id), q, D);
  } else {
    m = sullivan::a_d(sub_complex(id), a_space(id, q, D), a_space(id, q + 1, D));
  }
  return d_.emplace(key, std::move(m)).first->second;
}

const QMatrix& Workspace::inclusion(Side side, int id, int q, int D, int D2) {
  const auto key = std::make_tuple(static_cast<int>(side), id, q, D, D2);
  auto it = incl_.find(key);
  if (it != incl_.end()) return it->second;
  QMatrix m;
  if (side == Side::omega) {
    m = omega::omega_inclusion(pres(id), q, D, D2);
  } else {
    m = sullivan::a_inclusion(a_space(id, q, D), a_space(id, q, D2));
  }
  return incl_.emplace(key, std::move(m)).first->second;
}

const QMatrix& Workspace::mult_weight(Side side, int id, int v, int q, int D, int D2) {
  const auto key = std::make_tuple(static_cast<int>(side), id, v, q, D, D2);
  auto it = mult_.find(key);
  if (it != mult_.end()) return it->second;
  QMatrix m;
  if (side == Side::omega) {
    const auto& p = pres(id);
    const auto map = omega::variable_map(pres(0), p);
    const auto subst = poly::Substitution::renaming(pres(0).nvars(), map, p.nvars());
    const poly::PolyForm rho = p.normal_form(substitute(pou().rho[v], subst));
    m = omega::multiply_map(p, rho, q, D, D2);
  } else {
    const auto& cx = sub_complex(id);
    int local = -1;
    for (int w = 0; w < cx.vertex_count(); ++w)
      if (cx.label(w) == x_.label(v)) {
        local = w;
        break;
      }
    const auto& src = a_space(id, q, D);
    const auto& dst = a_space(id, q, D2);
    if (local < 0) {
      m = QMatrix(dst.dim(), src.dim());  // t_v restricts to zero
    } else {
      m = sullivan::a_mult_tv(cx, local, src, dst);
    }
  }
  return mult_.emplace(key, std::move(m)).first->second;
}

const QMatrix& Workspace::P_matrix(int q, int D) {
  const auto key = std::make_pair(q, D);
  auto it = p_.find(key);
  if (it != p_.end()) return it->second;
  QMatrix m = sullivan::eval_P(pres(0), x_, a_space(0, q, D), q, D);
  return p_.emplace(key, std::move(m)).first->second;
}

}  // namespace derham
