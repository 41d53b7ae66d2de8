#include "moyal/psymbol.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "moyal/error.hpp"

namespace moyal {

namespace {

const DiffPoly kZeroPoly{};

using OptInt = std::optional<int>;

OptInt opt_add(OptInt a, OptInt b) {
  if (!a || !b) return std::nullopt;  // -inf absorbs
  return *a + *b;
}

OptInt opt_max(OptInt a, OptInt b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

PSymbol PSymbol::p_power(int exponent) {
  PSymbol f;
  f.coeffs_[exponent] = DiffPoly::one();
  return f;
}

PSymbol PSymbol::from_poly(DiffPoly coeff, int exponent) {
  PSymbol f;
  if (!coeff.is_zero()) f.coeffs_[exponent] = std::move(coeff);
  return f;
}

std::optional<int> PSymbol::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

const DiffPoly& PSymbol::coeff(int i) const {
  if (floor_ && i < *floor_)
    throw Error(Errc::floor_too_high,
                "coefficient at p^" + std::to_string(i) +
                    " is below the exactness floor p^" + std::to_string(*floor_));
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? kZeroPoly : it->second;
}

bool PSymbol::agrees_with(const PSymbol& g, int from) const {
  auto tail = [from](const PSymbol& f) {
    std::map<int, DiffPoly> t;
    for (const auto& [e, c] : f.coeffs_)
      if (e >= from) t.emplace(e, c);
    return t;
  };
  return tail(*this) == tail(g);
}

PSymbol PSymbol::operator-() const {
  PSymbol out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

PSymbol operator+(const PSymbol& f, const PSymbol& g) {
  PSymbol out;
  out.floor_ = opt_max(f.floor_, g.floor_);
  for (const auto& [e, c] : f.coeffs_)
    if (!out.floor_ || e >= *out.floor_) out.coeffs_[e] = c;
  for (const auto& [e, c] : g.coeffs_) {
    if (out.floor_ && e < *out.floor_) continue;
    auto [it, inserted] = out.coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) out.coeffs_.erase(it);
    }
  }
  return out;
}

PSymbol operator-(const PSymbol& f, const PSymbol& g) { return f + (-g); }

PSymbol PSymbol::scaled(const Rational& c, int eps_shift) const {
  PSymbol out;
  out.floor_ = floor_;
  if (c.is_zero()) return out;
  for (const auto& [e, p] : coeffs_) out.coeffs_[e] = p.scaled(c, eps_shift);
  return out;
}

PSymbol classical_mul(const PSymbol& f, const PSymbol& g) {
  PSymbol out;
  out.floor_ = opt_max(opt_add(f.floor_, g.degree()),
                       opt_add(g.floor_, f.degree()));
  for (const auto& [i, F] : f.coeffs_) {
    for (const auto& [j, G] : g.coeffs_) {
      if (out.floor_ && i + j < *out.floor_) continue;
      DiffPoly prod = F * G;
      if (prod.is_zero()) continue;
      auto [it, inserted] = out.coeffs_.try_emplace(i + j, prod);
      if (!inserted) {
        it->second = it->second + prod;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
  }
  return out;
}

PSymbol PSymbol::truncated_to(int t) const {
  PSymbol out;
  out.floor_ = opt_max(floor_, t);
  for (const auto& [e, c] : coeffs_)
    if (e >= t) out.coeffs_[e] = c;
  return out;
}

PSymbol PSymbol::eps_window(int lo, int hi) const {
  PSymbol out;
  out.floor_ = floor_;
  for (const auto& [e, c] : coeffs_) {
    std::vector<Monomial> kept;
    for (const auto& m : c.terms())
      if (m.eps >= lo && m.eps <= hi) kept.push_back(m);
    DiffPoly filtered = DiffPoly::normalized(std::move(kept));
    if (!filtered.is_zero()) out.coeffs_[e] = std::move(filtered);
  }
  return out;
}

void PSymbol::set_coeff(int exponent, DiffPoly c) {
  if (c.is_zero())
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = std::move(c);
}

namespace {

enum class StarLayers { all, odd_only };

/// Exactness floor of a star-type sum whose lowest retained order is s_min.
/// Unknowns below floor_f combine with anything in g at or below deg g and
/// land at least s_min exponents lower (symmetrically for g), so everything
/// from the returned exponent upward is fully determined.
OptInt natural_floor(const PSymbol& f, const PSymbol& g, int s_min) {
  OptInt nf = opt_max(opt_add(f.floor(), g.degree()),
                      opt_add(g.floor(), f.degree()));
  if (f.floor() && g.floor())
    nf = opt_max(nf, *f.floor() + *g.floor() - 1);
  if (nf) nf = *nf - s_min;
  return nf;
}

/// Falling factorial i(i-1)...(i-r+1); zero iff 0 <= i < r.
Rational falling(int i, unsigned r) {
  BigInt acc = 1;
  for (unsigned t = 0; t < r; ++t) acc *= i - static_cast<int>(t);
  return Rational(acc);
}

struct DerivCache {
  const DiffPoly* base;
  std::vector<DiffPoly> d;  // d[k] = k-th x-derivative

  explicit DerivCache(const DiffPoly& p) : base(&p) { d.push_back(p); }

  const DiffPoly& at(unsigned k) {
    while (d.size() <= k) d.push_back(deriv(d.back(), Var::x));
    return d[k];
  }
};

PSymbol star_sum(const PSymbol& f, const PSymbol& g, OptInt window_floor,
                 StarLayers layers) {
  const int s_min = layers == StarLayers::odd_only ? 1 : 0;
  OptInt result_floor = opt_max(natural_floor(f, g, s_min), window_floor);

  if (!result_floor) {
    // Both inputs exact and no window requested: the sum must terminate on
    // its own. A pair with a negative p-exponent against a coefficient whose
    // x-derivatives never vanish feeds every lower exponent.
    for (const auto& [i, F] : f.coeffs()) {
      for (const auto& [j, G] : g.coeffs()) {
        if ((i < 0 && G.has_atoms()) || (j < 0 && F.has_atoms()))
          throw Error(Errc::infinite_tail,
                      "star product has an infinite tail; give a window floor");
      }
    }
  }

  std::map<int, std::vector<Monomial>> acc;
  std::map<int, DerivCache> f_derivs;
  std::map<int, DerivCache> g_derivs;
  for (const auto& [i, F] : f.coeffs())
    f_derivs.emplace(i, DerivCache(F));
  for (const auto& [j, G] : g.coeffs())
    g_derivs.emplace(j, DerivCache(G));

  for (const auto& [i, F] : f.coeffs()) {
    for (const auto& [j, G] : g.coeffs()) {
      // s ranges over the retained window; structural bounds end it when the
      // window is unbounded below.
      long smax;
      if (result_floor) {
        smax = static_cast<long>(i) + j - *result_floor;
      } else {
        const long k_bound = F.has_atoms() ? j : 0;   // j >= 0 here
        const long sk_bound = G.has_atoms() ? i : 0;  // i >= 0 here
        smax = k_bound + sk_bound;
      }
      for (long s = s_min; s <= smax; s += (layers == StarLayers::odd_only ? 2 : 1)) {
        for (long k = 0; k <= s; ++k) {
          // (1/s!) C(s,k) fall(i, s-k) fall(j, k) = C(i, s-k) C(j, k)
          Rational cf = binomial(i, static_cast<unsigned>(s - k));
          if (cf.is_zero()) continue;
          Rational cg = binomial(j, static_cast<unsigned>(k));
          if (cg.is_zero()) continue;
          const DiffPoly& Fk = f_derivs.at(i).at(static_cast<unsigned>(k));
          if (Fk.is_zero()) continue;
          const DiffPoly& Gsk = g_derivs.at(j).at(static_cast<unsigned>(s - k));
          if (Gsk.is_zero()) continue;
          Rational c = cf * cg;
          if (k % 2 != 0) c = -c;
          DiffPoly term = (Fk * Gsk).scaled(c, static_cast<int>(s));
          if (term.is_zero()) continue;
          auto& bucket = acc[static_cast<int>(i + j - s)];
          bucket.insert(bucket.end(), term.terms().begin(), term.terms().end());
        }
      }
    }
  }

  PSymbol out;
  out.set_floor(result_floor);
  for (auto& [e, monomials] : acc) {
    DiffPoly c = DiffPoly::normalized(std::move(monomials));
    if (!c.is_zero()) out.set_coeff(e, std::move(c));
  }
  return out;
}

}  // namespace

PSymbol star_mul(const PSymbol& f, const PSymbol& g,
                 std::optional<int> window_floor) {
  return star_sum(f, g, window_floor, StarLayers::all);
}

PSymbol commutator(const PSymbol& f, const PSymbol& g,
                   std::optional<int> window_floor) {
  return star_sum(f, g, window_floor, StarLayers::odd_only).scaled(Rational(2));
}

PSymbol star_pow(const PSymbol& f, unsigned m, int floor) {
  if (m < 1) throw Error(Errc::insufficient_depth, "star_pow: m must be >= 1");
  if (f.is_zero()) return PSymbol::zero().truncated_to(floor);
  const int deg = *f.degree();

  auto window = [&](unsigned step) {
    // Coefficients below this cannot reach exponent `floor` through the
    // remaining m-step factors of degree deg.
    return floor - static_cast<int>(m - step) * deg;
  };

  PSymbol acc = f.truncated_to(window(1));
  for (unsigned step = 2; step <= m; ++step)
    acc = star_mul(acc, f, window(step));
  if (!acc.exact() && *acc.floor() > floor)
    throw Error(Errc::insufficient_depth,
                "star_pow: input floor cannot support exactness down to p^" +
                    std::to_string(floor));
  return acc.truncated_to(floor);
}

PSymbol project(const PSymbol& f, int threshold) {
  if (!f.exact() && *f.floor() > threshold)
    throw Error(Errc::floor_too_high,
                "project: threshold p^" + std::to_string(threshold) +
                    " is below the exactness floor p^" +
                    std::to_string(*f.floor()));
  PSymbol out;
  for (const auto& [e, c] : f.coeffs())
    if (e >= threshold) out.set_coeff(e, c);
  return out;  // exact: the projection has literal zeros below threshold
}

DiffPoly residue(const PSymbol& f) {
  if (!f.exact() && *f.floor() > -1)
    throw Error(Errc::floor_too_high,
                "residue: exactness floor is above p^-1");
  return f.coeff(-1);
}

PSymbol poisson_bracket(const PSymbol& f, const PSymbol& g) {
  PSymbol out;
  out.set_floor(natural_floor(f, g, 1));
  for (const auto& [i, F] : f.coeffs()) {
    for (const auto& [j, G] : g.coeffs()) {
      const int e = i + j - 1;
      if (out.floor() && e < *out.floor()) continue;
      DiffPoly term = (F * deriv(G, Var::x)).scaled(Rational(i)) -
                      (deriv(F, Var::x) * G).scaled(Rational(j));
      if (term.is_zero()) continue;
      out.set_coeff(e, out.coeff(e) + term);
    }
  }
  return out;
}

}  // namespace moyal
