#include "derham/omega.hpp"

#include <algorithm>

namespace derham::omega {

using poly::DtSet;
using poly::Monomial;
using simplicial::SimplicialComplex;
using simplicial::vertex_list;

std::vector<Rational> OmegaTruncation::coords(const PolyForm& nf) const {
  std::vector<Rational> c(basis.size(), Rational(0));
  for (const auto& [t, k] : nf.terms()) {
    auto it = index.find(t);
    if (it == index.end()) throw std::logic_error("term outside truncation basis: " + poly::to_string(t));
    c[it->second] = k;
  }
  return c;
}

PolyForm OmegaTruncation::from_coords(int nvars, const std::vector<Rational>& c) const {
  if (c.size() != basis.size()) throw std::invalid_argument("coordinate length mismatch");
  PolyForm f(nvars);
  for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], c[i]);
  return f;
}

OmegaPresentation::OmegaPresentation(SimplicialComplex cx, long pair_limit)
    : cx_(std::move(cx)), pair_limit_(pair_limit) {
  const int n = cx_.vertex_count();
  PolyForm affine(n);
  for (int v = 0; v < n; ++v) affine = affine + PolyForm::variable(n, v);
  affine = affine - PolyForm::one(n);
  relations_.push_back(affine);
  for (simplicial::VertexSet s : cx_.minimal_nonfaces()) {
    PolyForm m = PolyForm::one(n);
    for (int v : vertex_list(s)) m = m * PolyForm::variable(n, v);
    relations_.push_back(m);
  }
}

const GroebnerBasis& OmegaPresentation::module_gb(int q) const {
  auto it = gb_.find(q);
  if (it != gb_.end()) return it->second;
  std::vector<PolyForm> gens;
  if (q == 0) {
    gens = relations_;
  } else {
    const auto& ring = module_gb(0);
    for (DtSet s : poly::dtsets(nvars(), q)) {
      PolyForm dt(nvars());
      dt.add_term(Term{Monomial(nvars()), s}, 1);
      for (const auto& g : ring.generators()) gens.push_back(g * dt);
    }
    for (DtSet t : poly::dtsets(nvars(), q - 1)) {
      PolyForm dt(nvars());
      dt.add_term(Term{Monomial(nvars()), t}, 1);
      for (const auto& r : relations_) gens.push_back(r.d() * dt);
    }
  }
  return gb_.emplace(q, poly::buchberger(gens, nvars(), pair_limit_)).first->second;
}

const OmegaTruncation& OmegaPresentation::truncation(int q, int D) const {
  const auto key = std::make_pair(q, D);
  auto it = trunc_.find(key);
  if (it != trunc_.end()) return it->second;
  OmegaTruncation t;
  t.q = q;
  t.D = D;
  const auto& gb = module_gb(q);
  for (const Term& term : poly::weight_basis(nvars(), q, D))
    if (gb.is_standard(term)) t.basis.push_back(term);
  for (size_t i = 0; i < t.basis.size(); ++i) t.index.emplace(t.basis[i], static_cast<int>(i));
  return trunc_.emplace(key, std::move(t)).first->second;
}

PolyForm OmegaPresentation::normal_form(const PolyForm& f) const {
  if (f.is_zero()) return f;
  if (f.homogeneous_form_degree()) return module_gb(f.form_degree()).normal_form(f);
  // Mixed input: reduce each graded piece on its own.
  std::map<int, PolyForm> pieces;
  for (const auto& [t, c] : f.terms()) {
    auto [it, fresh] = pieces.emplace(t.form_degree(), PolyForm(nvars()));
    it->second.add_term(t, c);
  }
  PolyForm out(nvars());
  for (const auto& [q, piece] : pieces) out = out + module_gb(q).normal_form(piece);
  return out;
}

std::vector<int> variable_map(const OmegaPresentation& from, const OmegaPresentation& to) {
  std::vector<int> map(from.nvars(), -1);
  for (int v = 0; v < from.nvars(); ++v) {
    const std::string& lbl = from.complex().label(v);
    for (int w = 0; w < to.nvars(); ++w)
      if (to.complex().label(w) == lbl) {
        map[v] = w;
        break;
      }
  }
  return map;
}

QMatrix omega_d(const OmegaPresentation& p, int q, int D) {
  const auto& src = p.truncation(q, D);
  const auto& dst = p.truncation(q + 1, D);
  QMatrix m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    PolyForm f(p.nvars());
    f.add_term(src.basis[j], 1);
    const auto c = dst.coords(p.normal_form(f.d()));
    for (int i = 0; i < dst.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

QMatrix omega_restrict(const OmegaPresentation& from, const OmegaPresentation& to, int q, int D,
                       bool certify) {
  const auto& src = from.truncation(q, D);
  const auto& dst = to.truncation(q, D);
  const auto subst = poly::Substitution::renaming(from.nvars(), variable_map(from, to), to.nvars());
  QMatrix m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    PolyForm f(from.nvars());
    f.add_term(src.basis[j], 1);
    const auto c = dst.coords(to.normal_form(substitute(f, subst)));
    for (int i = 0; i < dst.dim(); ++i) m(i, j) = c[i];
  }
  if (certify && la::rank(m) != dst.dim())
    throw RankDeficient("restriction not surjective at q=" + std::to_string(q) + " D=" + std::to_string(D));
  return m;
}

QMatrix omega_extend(const OmegaPresentation& from, const OmegaPresentation& to, int q, int D,
                     ExtendStrategy strategy, const QMatrix* restriction) {
  const auto& src = to.truncation(q, D);    // the subcomplex side
  const auto& dst = from.truncation(q, D);  // the ambient side
  if (strategy == ExtendStrategy::solve) {
    QMatrix r = restriction ? *restriction : omega_restrict(from, to, q, D);
    auto e = la::multi_solve(r, QMatrix::identity(src.dim()));
    if (!e) throw RankDeficient("extension solve failed at q=" + std::to_string(q) + " D=" + std::to_string(D));
    return *e;
  }
  // Reinterpret: read the subcomplex normal form as a form on the ambient
  // complex (the variable renaming is injective) and normalize there.
  std::vector<int> back(to.nvars(), -1);
  {
    const auto fwd = variable_map(from, to);
    for (int v = 0; v < from.nvars(); ++v)
      if (fwd[v] >= 0) back[fwd[v]] = v;
  }
  for (int w = 0; w < to.nvars(); ++w)
    if (back[w] < 0) throw std::invalid_argument("extension target is not a subcomplex");
  const auto subst = poly::Substitution::renaming(to.nvars(), back, from.nvars());
  QMatrix m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    PolyForm f(to.nvars());
    f.add_term(src.basis[j], 1);
    const auto c = dst.coords(from.normal_form(substitute(f, subst)));
    for (int i = 0; i < dst.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

QMatrix multiply_map(const OmegaPresentation& p, const PolyForm& f, int q, int D_src, int D_dst) {
  if (!f.is_zero() && f.form_degree() != 0) throw std::invalid_argument("multiplier must have degree 0");
  if (!f.is_zero() && f.weight() + D_src > D_dst)
    throw std::invalid_argument("multiplier weight exceeds target truncation");
  const auto& src = p.truncation(q, D_src);
  const auto& dst = p.truncation(q, D_dst);
  QMatrix m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    PolyForm b(p.nvars());
    b.add_term(src.basis[j], 1);
    const auto c = dst.coords(p.normal_form(f * b));
    for (int i = 0; i < dst.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

QMatrix omega_inclusion(const OmegaPresentation& p, int q, int D, int D2) {
  if (D > D2) throw std::invalid_argument("inclusion target must not truncate");
  const auto& src = p.truncation(q, D);
  const auto& dst = p.truncation(q, D2);
  for (int i = 0; i < src.dim(); ++i)
    if (!(dst.basis[i] == src.basis[i])) throw std::logic_error("truncation bases are not nested");
  QMatrix m(dst.dim(), src.dim());
  for (int i = 0; i < src.dim(); ++i) m(i, i) = 1;
  return m;
}

PartitionOfUnity partition_of_unity(const OmegaPresentation& pres) {
  const int n = pres.nvars();
  PartitionOfUnity pou;
  pou.N = n + 1;
  pou.p.assign(n, PolyForm(n));
  pou.rho.assign(n, PolyForm(n));
  // Expand (t_0 + ... + t_{n-1})^N and give each composition to its smallest
  // vertex with exponent >= 2 (one exists: N > n).
  std::vector<int> alpha(n, 0);
  la::Integer nfac;
  mpz_fac_ui(nfac.get_mpz_t(), pou.N);
  auto assign = [&]() {
    int owner = -1;
    for (int v = 0; v < n; ++v)
      if (alpha[v] >= 2) {
        owner = v;
        break;
      }
    if (owner < 0) throw std::logic_error("composition without a repeated vertex");
    la::Integer coef = nfac;
    for (int v = 0; v < n; ++v) {
      la::Integer f;
      mpz_fac_ui(f.get_mpz_t(), alpha[v]);
      coef /= f;
    }
    Term t{Monomial(n), 0};
    t.mono.e = alpha;
    t.mono.e[owner] -= 2;
    pou.p[owner].add_term(t, Rational(coef));
  };
  auto rec = [&](auto&& self, int v, int rest) -> void {
    if (v == n - 1) {
      alpha[v] = rest;
      assign();
      alpha[v] = 0;
      return;
    }
    for (int k = 0; k <= rest; ++k) {
      alpha[v] = k;
      self(self, v + 1, rest - k);
    }
    alpha[v] = 0;
  };
  if (n > 0) rec(rec, 0, pou.N);
  PolyForm total(n);
  for (int v = 0; v < n; ++v) {
    pou.rho[v] = pou.p[v] * PolyForm::variable(n, v) * PolyForm::variable(n, v);
    total = total + pou.rho[v];
  }
  if (!pres.normal_form(total - PolyForm::one(n)).is_zero() && !pres.complex().empty())
    throw std::logic_error("partition of unity does not sum to 1");
  return pou;
}

namespace {

Rational small_random(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % 9) - 4);
}

}  // namespace

CheckResult verify_tv_annihilation(const OmegaPresentation& y, const OmegaPresentation& star_v,
                                   int v_in_y, int q, int D, int trials, std::mt19937_64& rng) {
  CheckResult res;
  res.name = "tv-annihilation";
  const auto& src = y.truncation(q, D);
  const QMatrix r = omega_restrict(y, star_v, q, D);
  const auto dec = la::rank_kernel_image(r);
  const int kdim = dec.kernel.cols();
  for (int trial = 0; trial < trials; ++trial) {
    PolyForm w(y.nvars());
    if (kdim > 0) {
      std::vector<Rational> c(kdim);
      for (auto& x : c) x = small_random(rng);
      const auto v = dec.kernel.apply(c);
      w = src.from_coords(y.nvars(), v);
    }
    PolyForm prod;
    if (v_in_y >= 0) {
      const PolyForm tv = PolyForm::variable(y.nvars(), v_in_y);
      prod = y.normal_form(tv * tv * w);
    } else {
      // t_v restricts to zero on Y, so the product is literally zero.
      prod = PolyForm(y.nvars());
    }
    ++res.trials;
    if (!prod.is_zero()) {
      res.pass = false;
      res.detail = "non-zero product at trial " + std::to_string(trial);
      return res;
    }
  }
  res.pass = true;
  res.detail = "kernel dim " + std::to_string(kdim);
  return res;
}

CheckResult verify_extres(const OmegaPresentation& x, const OmegaPresentation& y,
                          const std::vector<const OmegaPresentation*>& stars,
                          const PartitionOfUnity& pou, int q, int D, int trials, std::mt19937_64& rng) {
  CheckResult res;
  res.name = "extension-restriction";
  const auto& src = y.truncation(q, D);
  const auto& dst = y.truncation(q, D + pou.N);
  const QMatrix res_xy = omega_restrict(x, y, q, D);
  const auto to_y = poly::Substitution::renaming(x.nvars(), variable_map(x, y), y.nvars());
  QMatrix total(dst.dim(), src.dim());
  for (int v = 0; v < x.nvars(); ++v) {
    if (stars[v] == nullptr || stars[v]->complex().empty()) continue;  // rho_v restricts to 0 on Y
    const QMatrix r_v = omega_restrict(y, *stars[v], q, D);
    const QMatrix e_v = omega_extend(x, *stars[v], q, D);
    const PolyForm rho_y = y.normal_form(substitute(pou.rho[v], to_y));
    const QMatrix m_v = multiply_map(y, rho_y, q, D, D + pou.N);
    total = total + mul(m_v, mul(res_xy, mul(e_v, r_v)));
  }
  const QMatrix incl = omega_inclusion(y, q, D, D + pou.N);
  if (!(total == incl)) {
    res.pass = false;
    res.detail = "matrix identity failed";
    return res;
  }
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> c(src.dim());
    for (auto& k : c) k = small_random(rng);
    if (!(total.apply(c) == incl.apply(c))) {
      res.pass = false;
      res.detail = "trial " + std::to_string(trial) + " failed";
      return res;
    }
    ++res.trials;
  }
  res.pass = true;
  return res;
}

}  // namespace derham::omega
