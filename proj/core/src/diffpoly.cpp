#include "moyal/diffpoly.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "moyal/error.hpp"

namespace moyal {

char family_char(Family f) {
  switch (f) {
    case Family::a: return 'a';
    case Family::w: return 'w';
    case Family::u: return 'u';
  }
  return '?';
}

Atom Atom::generator(Family f, int index, int x_order, int y_order) {
  assert(index >= 1 && x_order >= 0 && y_order >= 0);
  Atom a;
  a.family_ = f;
  a.index_ = index;
  a.x_order_ = x_order;
  a.y_order_ = y_order;
  return a;
}

Atom Atom::generator(GenId id, int x_order, int y_order) {
  return generator(id.family, id.index, x_order, y_order);
}

Atom Atom::integral(DiffPoly body, int depth) {
  assert(!body.is_zero() && depth >= 1);
  Atom a;
  a.body_ = std::make_shared<const DiffPoly>(std::move(body));
  a.depth_ = depth;
  return a;
}

int Atom::cmp(const Atom& a, const Atom& b) {
  if (a.is_integral() != b.is_integral()) return a.is_integral() ? 1 : -1;
  if (!a.is_integral()) {
    if (a.family_ != b.family_) return a.family_ < b.family_ ? -1 : 1;
    if (a.index_ != b.index_) return a.index_ < b.index_ ? -1 : 1;
    if (a.x_order_ != b.x_order_) return a.x_order_ < b.x_order_ ? -1 : 1;
    if (a.y_order_ != b.y_order_) return a.y_order_ < b.y_order_ ? -1 : 1;
    return 0;
  }
  if (a.depth_ != b.depth_) return a.depth_ < b.depth_ ? -1 : 1;
  return DiffPoly::cmp(*a.body_, *b.body_);
}

int Monomial::key_cmp(const Monomial& a, const Monomial& b) {
  if (a.eps != b.eps) return a.eps > b.eps ? -1 : 1;  // descending eps
  const std::size_t n = std::min(a.atoms.size(), b.atoms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = Atom::cmp(a.atoms[i], b.atoms[i])) return c;
  }
  if (a.atoms.size() != b.atoms.size())
    return a.atoms.size() < b.atoms.size() ? -1 : 1;
  return 0;
}

DiffPoly::DiffPoly(Monomial m) { *this = normalized({std::move(m)}); }

DiffPoly DiffPoly::constant(const Rational& c) {
  if (c.is_zero()) return {};
  DiffPoly p;
  p.terms_.push_back(Monomial{c, 0, {}});
  return p;
}

DiffPoly DiffPoly::generator(Family f, int index, int x_order, int y_order) {
  DiffPoly p;
  p.terms_.push_back(
      Monomial{Rational(1), 0, {Atom::generator(f, index, x_order, y_order)}});
  return p;
}

DiffPoly DiffPoly::normalized(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
    return Monomial::key_cmp(a, b) < 0;
  });
  DiffPoly out;
  out.terms_.reserve(terms.size());
  for (auto& m : terms) {
    assert(std::is_sorted(m.atoms.begin(), m.atoms.end(),
                          [](const Atom& a, const Atom& b) {
                            return Atom::cmp(a, b) < 0;
                          }));
    if (!out.terms_.empty() && Monomial::key_cmp(out.terms_.back(), m) == 0) {
      out.terms_.back().coeff += m.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!m.coeff.is_zero()) {
      out.terms_.push_back(std::move(m));
    }
  }
  return out;
}

bool DiffPoly::has_atoms() const {
  for (const auto& m : terms_)
    if (m.has_atoms()) return true;
  return false;
}

int DiffPoly::cmp(const DiffPoly& a, const DiffPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = Monomial::key_cmp(a.terms_[i], b.terms_[i])) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out = *this;
  for (auto& m : out.terms_) m.coeff = -m.coeff;
  return out;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  std::vector<Monomial> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  terms.insert(terms.end(), a.terms_.begin(), a.terms_.end());
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return DiffPoly::normalized(std::move(terms));
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return a + (-b); }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  std::vector<Monomial> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ma : a.terms_) {
    for (const auto& mb : b.terms_) {
      Monomial m;
      m.coeff = ma.coeff * mb.coeff;
      m.eps = ma.eps + mb.eps;
      m.atoms.reserve(ma.atoms.size() + mb.atoms.size());
      std::merge(ma.atoms.begin(), ma.atoms.end(), mb.atoms.begin(),
                 mb.atoms.end(), std::back_inserter(m.atoms),
                 [](const Atom& x, const Atom& y) { return Atom::cmp(x, y) < 0; });
      terms.push_back(std::move(m));
    }
  }
  return DiffPoly::normalized(std::move(terms));
}

DiffPoly DiffPoly::scaled(const Rational& c, int eps_shift) const {
  if (c.is_zero()) return {};
  DiffPoly out = *this;
  for (auto& m : out.terms_) {
    m.coeff *= c;
    m.eps += eps_shift;
  }
  if (eps_shift != 0) out = normalized(std::move(out.terms_));
  return out;
}

DiffPoly DiffPoly::eps_part(int eps) const {
  std::vector<Monomial> kept;
  for (const auto& m : terms_)
    if (m.eps == eps) kept.push_back(m);
  return normalized(std::move(kept));
}

namespace {

Monomial monomial_without(const Monomial& m, std::size_t pos) {
  Monomial rest;
  rest.coeff = m.coeff;
  rest.eps = m.eps;
  rest.atoms.reserve(m.atoms.size() - 1);
  for (std::size_t i = 0; i < m.atoms.size(); ++i)
    if (i != pos) rest.atoms.push_back(m.atoms[i]);
  return rest;
}

void insert_sorted(std::vector<Atom>& atoms, Atom a) {
  auto it = std::upper_bound(
      atoms.begin(), atoms.end(), a,
      [](const Atom& x, const Atom& y) { return Atom::cmp(x, y) < 0; });
  atoms.insert(it, std::move(a));
}

DiffPoly deriv_once(const DiffPoly& p, Var var);

/// Derivative of a single atom: either another atom or, when a Dxi level is
/// unwrapped or a body differentiated, a full polynomial.
DiffPoly atom_deriv(const Atom& a, Var var) {
  if (!a.is_integral()) {
    if (var == Var::x)
      return DiffPoly(Monomial{
          Rational(1), 0,
          {Atom::generator(a.family(), a.index(), a.x_order() + 1, a.y_order())}});
    if (a.family() != Family::a) return DiffPoly::zero();  // x-only families
    return DiffPoly(Monomial{
        Rational(1), 0,
        {Atom::generator(a.family(), a.index(), a.x_order(), a.y_order() + 1)}});
  }
  if (var == Var::x) {
    if (a.depth() == 1) return a.body();
    return DiffPoly(
        Monomial{Rational(1), 0, {Atom::integral(a.body(), a.depth() - 1)}});
  }
  // d/dy Dxi^d(B) = Dxi^d(dB/dy); re-integrating keeps bodies canonical.
  DiffPoly body_y = deriv_once(a.body(), Var::y);
  for (int i = 0; i < a.depth(); ++i) body_y = integrate_x(body_y);
  return body_y;
}

DiffPoly deriv_once(const DiffPoly& p, Var var) {
  DiffPoly out;
  for (const auto& m : p.terms()) {
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
      DiffPoly d = atom_deriv(m.atoms[i], var);
      if (d.is_zero()) continue;
      out = out + DiffPoly(monomial_without(m, i)) * d;
    }
  }
  return out;
}

}  // namespace

DiffPoly deriv(const DiffPoly& p, Var var, unsigned n) {
  DiffPoly out = p;
  for (unsigned i = 0; i < n; ++i) out = deriv_once(out, var);
  return out;
}

DiffPoly integrate_x(const DiffPoly& p) {
  std::vector<Monomial> terms;
  terms.reserve(p.terms().size());
  for (const auto& m : p.terms()) {
    Monomial out;
    out.coeff = m.coeff;
    out.eps = m.eps;
    if (m.atoms.size() == 1 && !m.atoms[0].is_integral() &&
        m.atoms[0].x_order() >= 1) {
      const Atom& a = m.atoms[0];
      out.atoms.push_back(Atom::generator(a.family(), a.index(),
                                          a.x_order() - 1, a.y_order()));
    } else if (m.atoms.size() == 1 && m.atoms[0].is_integral()) {
      out.atoms.push_back(
          Atom::integral(m.atoms[0].body(), m.atoms[0].depth() + 1));
    } else {
      DiffPoly body(Monomial{Rational(1), 0, m.atoms});
      out.atoms.push_back(Atom::integral(std::move(body), 1));
    }
    terms.push_back(std::move(out));
  }
  return DiffPoly::normalized(std::move(terms));
}

namespace {

void check_local(const DiffPoly& p) {
  for (const auto& m : p.terms()) {
    for (const auto& a : m.atoms) {
      if (a.is_integral())
        throw Error(Errc::non_local_input,
                    "euler_op: input contains a formal antiderivative");
      if (a.y_order() > 0)
        throw Error(Errc::non_local_input,
                    "euler_op: input contains a y-derivative");
    }
  }
}

/// dp / d gen^(k): multiplicity times the monomial with one occurrence removed.
DiffPoly partial(const DiffPoly& p, GenId gen, int k) {
  DiffPoly out;
  std::vector<Monomial> terms;
  for (const auto& m : p.terms()) {
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
      const Atom& a = m.atoms[i];
      if (a.is_integral() || a.gen_id() != gen || a.x_order() != k ||
          a.y_order() != 0)
        continue;
      terms.push_back(monomial_without(m, i));  // one term per occurrence
    }
  }
  return DiffPoly::normalized(std::move(terms));
}

}  // namespace

DiffPoly euler_op(const DiffPoly& p, GenId gen) {
  check_local(p);
  int kmax = max_x_order(p, gen);
  DiffPoly out;
  for (int k = 0; k <= kmax; ++k) {
    DiffPoly dk = deriv(partial(p, gen, k), Var::x, static_cast<unsigned>(k));
    out = (k % 2 == 0) ? out + dk : out - dk;
  }
  return out;
}

bool contains_generator(const DiffPoly& p, GenId gen) {
  for (const auto& m : p.terms()) {
    for (const auto& a : m.atoms) {
      if (a.is_integral()) {
        if (contains_generator(a.body(), gen)) return true;
      } else if (a.gen_id() == gen) {
        return true;
      }
    }
  }
  return false;
}

namespace {

void collect_generators(const DiffPoly& p, std::set<std::pair<int, int>>& out) {
  for (const auto& m : p.terms()) {
    for (const auto& a : m.atoms) {
      if (a.is_integral())
        collect_generators(a.body(), out);
      else
        out.insert({static_cast<int>(a.family()), a.index()});
    }
  }
}

}  // namespace

std::vector<GenId> generators_in(const DiffPoly& p) {
  std::set<std::pair<int, int>> seen;
  collect_generators(p, seen);
  std::vector<GenId> out;
  out.reserve(seen.size());
  for (const auto& [fam, idx] : seen)
    out.push_back({static_cast<Family>(fam), idx});
  return out;
}

int max_x_order(const DiffPoly& p, GenId gen) {
  int kmax = -1;
  for (const auto& m : p.terms())
    for (const auto& a : m.atoms)
      if (!a.is_integral() && a.gen_id() == gen)
        kmax = std::max(kmax, a.x_order());
  return kmax;
}

DiffPoly substitute(const DiffPoly& p, GenId gen, const DiffPoly& value) {
  if (contains_generator(value, gen))
    throw Error(Errc::self_reference,
                "substitute: replacement value contains the target generator");
  DiffPoly out;
  for (const auto& m : p.terms()) {
    DiffPoly factor =
        DiffPoly(Monomial{m.coeff, m.eps, {}});
    for (const auto& a : m.atoms) {
      if (a.is_integral()) {
        if (!contains_generator(a.body(), gen)) {
          Monomial keep{Rational(1), 0, {a}};
          factor = factor * DiffPoly(std::move(keep));
          continue;
        }
        DiffPoly body = substitute(a.body(), gen, value);
        for (int i = 0; i < a.depth(); ++i) body = integrate_x(body);
        factor = factor * body;
      } else if (a.gen_id() == gen) {
        DiffPoly repl = deriv(value, Var::x, static_cast<unsigned>(a.x_order()));
        repl = deriv(repl, Var::y, static_cast<unsigned>(a.y_order()));
        factor = factor * repl;
      } else {
        Monomial keep{Rational(1), 0, {a}};
        factor = factor * DiffPoly(std::move(keep));
      }
    }
    out = out + factor;
  }
  return out;
}

}  // namespace moyal
