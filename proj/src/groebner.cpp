#include "derham/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace derham::poly {

namespace {

bool lt_divides(const Term& lt, const Term& t) { return lt.dts == t.dts && lt.mono.divides(t.mono); }

// c * u * g for a ring monomial u (positions are preserved, no signs).
PolyForm mono_multiple(const PolyForm& g, const Rational& c, const Monomial& u) {
  PolyForm r(g.nvars());
  for (const auto& [t, k] : g.terms()) r.add_term(Term{t.mono * u, t.dts}, k * c);
  return r;
}

// Full normal form of f against the list (first dividing leading term wins).
PolyForm reduce_full(PolyForm f, const std::vector<PolyForm>& basis) {
  while (true) {
    bool reduced = false;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      const Term& t = it->first;
      for (const auto& g : basis) {
        if (g.is_zero()) continue;
        const Term& lt = g.leading_term();
        if (!lt_divides(lt, t)) continue;
        f = f - mono_multiple(g, it->second / g.leading_coefficient(), t.mono.quotient(lt.mono));
        reduced = true;
        break;
      }
      if (reduced) break;
    }
    if (!reduced) return f;
  }
}

PolyForm s_vector(const PolyForm& a, const PolyForm& b) {
  const Term& la = a.leading_term();
  const Term& lb = b.leading_term();
  const Monomial l = Monomial::lcm(la.mono, lb.mono);
  return mono_multiple(a, 1 / a.leading_coefficient(), l.quotient(la.mono)) -
         mono_multiple(b, 1 / b.leading_coefficient(), l.quotient(lb.mono));
}

}  // namespace

PolyForm GroebnerBasis::normal_form(const PolyForm& f) const { return reduce_full(f, gens_); }

bool GroebnerBasis::is_standard(const Term& t) const {
  for (const auto& g : gens_)
    if (lt_divides(g.leading_term(), t)) return false;
  return true;
}

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : gens_)
    if (g.leading_term().dts == 0 && g.leading_term().mono.degree() == 0) return true;
  return false;
}

GroebnerBasis buchberger(const std::vector<PolyForm>& input, int nvars, long pair_limit) {
  std::vector<PolyForm> basis;
  for (const auto& f : input)
    if (!f.is_zero()) basis.push_back(f);

  // Pending S-pairs keyed by (lcm degree, i, j): the normal strategy with a
  // deterministic tie-break.
  std::set<std::tuple<int, int, int>> queue;
  std::set<std::pair<int, int>> popped;
  auto push_pairs = [&](int j) {
    const Term& lj = basis[j].leading_term();
    for (int i = 0; i < j; ++i) {
      const Term& li = basis[i].leading_term();
      if (li.dts != lj.dts) continue;  // S-pairs exist only within one position
      queue.insert({Monomial::lcm(li.mono, lj.mono).degree(), i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  long examined = 0;
  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    if (++examined > pair_limit)
      throw GroebnerLimitExceeded("pair limit exceeded (" + std::to_string(pair_limit) + ")");
    const Term& li = basis[i].leading_term();
    const Term& lj = basis[j].leading_term();
    bool skip = false;
    if (li.dts == 0 && li.mono.coprime(lj.mono)) skip = true;  // product criterion (ring case)
    if (!skip) {
      // Chain criterion: some k with LT(k) dividing the pair lcm and both
      // side pairs already popped.
      const Monomial l = Monomial::lcm(li.mono, lj.mono);
      for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
        if (k == i || k == j) continue;
        const Term& lk = basis[k].leading_term();
        if (lk.dts != li.dts || !lk.mono.divides(l)) continue;
        if (popped.count({std::min(i, k), std::max(i, k)}) && popped.count({std::min(j, k), std::max(j, k)}))
          skip = true;
      }
    }
    popped.insert({i, j});
    if (skip) continue;
    PolyForm r = reduce_full(s_vector(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    r = r * (1 / r.leading_coefficient());
    basis.push_back(r);
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Interreduce: drop generators whose leading term another one divides, then
  // tail-reduce each against the rest and normalize.  The result is the
  // canonical reduced basis for the submodule and the order.
  std::vector<bool> alive(basis.size(), true);
  for (int i = static_cast<int>(basis.size()) - 1; i >= 0; --i) {
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
      if (i == j || !alive[j]) continue;
      if (lt_divides(basis[j].leading_term(), basis[i].leading_term())) {
        alive[i] = false;
        break;
      }
    }
  }
  std::vector<PolyForm> kept;
  for (size_t i = 0; i < basis.size(); ++i)
    if (alive[i]) kept.push_back(basis[i]);
  std::vector<PolyForm> reduced;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<PolyForm> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    PolyForm g = reduce_full(kept[i], others);
    if (!g.is_zero()) reduced.push_back(g * (1 / g.leading_coefficient()));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const PolyForm& a, const PolyForm& b) { return term_order_less(a.leading_term(), b.leading_term()); });
  GroebnerBasis gb(nvars);
  gb.gens_ = std::move(reduced);
  return gb;
}

}  // namespace derham::poly
