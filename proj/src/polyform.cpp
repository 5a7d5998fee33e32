#include "derham/polyform.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace derham::poly {

int wedge_sign(DtSet a, DtSet b) {
  if (a & b) return 0;
  int inversions = 0;
  DtSet rest = a;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(b & ((DtSet(1) << v) - 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= m.e[i];
    if (r.e[i] < 0) throw std::invalid_argument("monomial quotient not divisible");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& m) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && m.e[i] > 0) return false;
  return true;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

bool dtset_seq_less(DtSet a, DtSet b) {
  while (a != 0 && b != 0) {
    const int va = std::countr_zero(a);
    const int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

int Term::form_degree() const { return std::popcount(dts); }

bool term_order_less(const Term& a, const Term& b) {
  if (!(a.mono == b.mono)) return grevlex_less(a.mono, b.mono);
  return dtset_seq_less(a.dts, b.dts);
}

bool basis_term_less(const Term& a, const Term& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  if (a.dts != b.dts) return dtset_seq_less(a.dts, b.dts);
  return grevlex_less(a.mono, b.mono);
}

PolyForm PolyForm::constant(int nvars, const Rational& c) {
  PolyForm f(nvars);
  if (c != 0) f.terms_.emplace(Term{Monomial(nvars), 0}, c);
  return f;
}

PolyForm PolyForm::variable(int nvars, int v) {
  PolyForm f(nvars);
  Term t{Monomial(nvars), 0};
  t.mono.e[v] = 1;
  f.terms_.emplace(t, 1);
  return f;
}

PolyForm PolyForm::differential(int nvars, int v) {
  PolyForm f(nvars);
  f.terms_.emplace(Term{Monomial(nvars), DtSet(1) << v}, 1);
  return f;
}

const Term& PolyForm::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero form");
  return terms_.rbegin()->first;
}

const Rational& PolyForm::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero form");
  return terms_.rbegin()->second;
}

int PolyForm::weight() const {
  int w = -1;
  for (const auto& [t, c] : terms_) w = std::max(w, t.weight());
  return w;
}

int PolyForm::form_degree() const {
  if (terms_.empty()) throw std::logic_error("form degree of zero form");
  if (!homogeneous_form_degree()) throw std::logic_error("mixed form degree");
  return terms_.begin()->first.form_degree();
}

bool PolyForm::homogeneous_form_degree() const {
  if (terms_.empty()) return true;
  const int q = terms_.begin()->first.form_degree();
  for (const auto& [t, c] : terms_)
    if (t.form_degree() != q) return false;
  return true;
}

void PolyForm::add_term(const Term& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Rational* PolyForm::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? nullptr : &it->second;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("context mismatch in +");
  PolyForm r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("context mismatch in -");
  PolyForm r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
  return r;
}

PolyForm PolyForm::operator-() const {
  PolyForm r(nvars_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

PolyForm PolyForm::operator*(const Rational& c) const {
  PolyForm r(nvars_);
  if (c == 0) return r;
  for (const auto& [t, k] : terms_) r.terms_.emplace(t, k * c);
  return r;
}

PolyForm PolyForm::operator*(const PolyForm& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("context mismatch in *");
  PolyForm r(nvars_);
  for (const auto& [ta, ca] : terms_) {
    for (const auto& [tb, cb] : o.terms_) {
      const int sign = wedge_sign(ta.dts, tb.dts);
      if (sign == 0) continue;
      r.add_term(Term{ta.mono * tb.mono, ta.dts | tb.dts}, ca * cb * sign);
    }
  }
  return r;
}

PolyForm PolyForm::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  PolyForm r = one(nvars_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

PolyForm PolyForm::d() const {
  PolyForm r(nvars_);
  for (const auto& [t, c] : terms_) {
    for (int v = 0; v < nvars_; ++v) {
      if (t.mono.e[v] == 0) continue;
      const DtSet dv = DtSet(1) << v;
      const int sign = wedge_sign(dv, t.dts);
      if (sign == 0) continue;
      Term nt = t;
      nt.mono.e[v] -= 1;
      nt.dts |= dv;
      r.add_term(nt, c * t.mono.e[v] * sign);
    }
  }
  return r;
}

Substitution Substitution::renaming(int source_nvars, const std::vector<int>& map, int target_nvars) {
  if (static_cast<int>(map.size()) != source_nvars) throw std::invalid_argument("renaming map size mismatch");
  Substitution s;
  s.target_nvars = target_nvars;
  s.t_img.reserve(source_nvars);
  s.dt_img.reserve(source_nvars);
  for (int v = 0; v < source_nvars; ++v) {
    if (map[v] < 0) {
      s.t_img.push_back(PolyForm(target_nvars));
      s.dt_img.push_back(PolyForm(target_nvars));
    } else {
      s.t_img.push_back(PolyForm::variable(target_nvars, map[v]));
      s.dt_img.push_back(PolyForm::differential(target_nvars, map[v]));
    }
  }
  return s;
}

PolyForm substitute(const PolyForm& f, const Substitution& s) {
  if (static_cast<int>(s.t_img.size()) != f.nvars()) throw std::invalid_argument("substitution size mismatch");
  PolyForm out(s.target_nvars);
  std::vector<std::vector<PolyForm>> pows(f.nvars());
  auto power = [&](int v, int k) -> const PolyForm& {
    auto& cache = pows[v];
    if (cache.empty()) cache.push_back(PolyForm::one(s.target_nvars));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * s.t_img[v]);
    return cache[k];
  };
  for (const auto& [t, c] : f.terms()) {
    PolyForm acc = PolyForm::constant(s.target_nvars, c);
    for (int v = 0; v < f.nvars(); ++v)
      if (t.mono.e[v] > 0) acc = acc * power(v, t.mono.e[v]);
    DtSet rest = t.dts;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      acc = acc * s.dt_img[v];
    }
    out = out + acc;
  }
  return out;
}

namespace {

void monomials_of_degree(int nvars, int deg, Monomial& cur, int from, std::vector<Monomial>& out) {
  if (deg == 0) {
    out.push_back(cur);
    return;
  }
  if (from >= nvars) return;
  for (int k = deg; k >= 0; --k) {
    cur.e[from] = k;
    monomials_of_degree(nvars, deg - k, cur, from + 1, out);
  }
  cur.e[from] = 0;
}

void dtsets_of_size(int nvars, int q, std::vector<DtSet>& out) {
  if (q > nvars || q < 0) return;
  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  if (q == 0) {
    out.push_back(0);
    return;
  }
  while (true) {
    DtSet s = 0;
    for (int i : idx) s |= DtSet(1) << i;
    out.push_back(s);
    int i = q - 1;
    while (i >= 0 && idx[i] == nvars - q + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<DtSet> dtsets(int nvars, int q) {
  std::vector<DtSet> out;
  dtsets_of_size(nvars, q, out);
  std::sort(out.begin(), out.end(), dtset_seq_less);
  return out;
}

std::vector<Term> weight_basis(int nvars, int q, int D) {
  std::vector<Term> out;
  if (q < 0 || q > nvars || D < q) return out;
  const std::vector<DtSet> sets = dtsets(nvars, q);
  for (int deg = 0; deg <= D - q; ++deg) {
    std::vector<Monomial> monos;
    Monomial cur(nvars);
    monomials_of_degree(nvars, deg, cur, 0, monos);
    for (DtSet s : sets)
      for (const auto& m : monos) out.push_back(Term{m, s});
  }
  std::sort(out.begin(), out.end(), basis_term_less);
  return out;
}

std::string to_string(const Term& t) {
  std::string s;
  bool first = true;
  for (size_t v = 0; v < t.mono.e.size(); ++v) {
    if (t.mono.e[v] == 0) continue;
    if (!first) s += "*";
    s += "t" + std::to_string(v);
    if (t.mono.e[v] > 1) s += "^" + std::to_string(t.mono.e[v]);
    first = false;
  }
  DtSet rest = t.dts;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (!first) s += "*";
    s += "dt" + std::to_string(v);
    first = false;
  }
  if (first) s = "1";
  return s;
}

std::string to_string(const PolyForm& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += la::to_string(it->second) + "*" + to_string(it->first);
  }
  return s;
}

}  // namespace derham::poly
