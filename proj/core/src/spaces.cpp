#include "qmrc/spaces.hpp"

#include "qmrc/depth.hpp"
#include "qmrc/numkernel.hpp"

#include <algorithm>

namespace qmrc {

namespace {
Integer pow_ui(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}
}  // namespace

std::vector<GradedPoly> basis_modular(int w) {
  if (w < 0) return {};
  if (w % 2 != 0) throw std::domain_error("basis_modular: odd weight");
  std::vector<GradedPoly> out;
  for (int b = w / 4; b >= 0; --b) {
    const int rem = w - 4 * b;
    if (rem % 6 == 0) out.push_back(GradedPoly::monomial(Monomial{0, b, rem / 6}));
  }
  return out;
}

std::vector<GradedPoly> basis_cusp(int w) {
  if (w % 2 != 0) throw std::domain_error("basis_cusp: odd weight");
  std::vector<GradedPoly> out;
  const GradedPoly d = delta_poly();
  for (const GradedPoly& m : basis_modular(w - 12)) out.push_back(d * m);
  return out;
}

std::vector<GradedPoly> monomial_basis(int w, int depth_max) {
  if (w < 0) return {};
  if (w % 2 != 0) throw std::domain_error("monomial_basis: odd weight");
  std::vector<GradedPoly> out;
  for (int a = std::min(depth_max, w / 2); a >= 0; --a) {
    const int rem = w - 2 * a;
    for (int b = rem / 4; b >= 0; --b)
      if ((rem - 4 * b) % 6 == 0)
        out.push_back(GradedPoly::monomial(Monomial{a, b, (rem - 4 * b) / 6}));
  }
  return out;
}

namespace {
int summand_weight(const Summand& s) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Modular> || std::is_same_v<T, Cusp>) {
          return v.w;
        } else if constexpr (std::is_same_v<T, DerivedModular> ||
                             std::is_same_v<T, DerivedCusp>) {
          return v.w + 2 * v.j;
        } else {
          return v.gen.weight();
        }
      },
      s);
}

void validate_summand(const Summand& s) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Modular> || std::is_same_v<T, Cusp>) {
          if (v.w % 2 != 0) throw std::domain_error("SpaceSpec: odd weight summand");
        } else if constexpr (std::is_same_v<T, DerivedModular> ||
                             std::is_same_v<T, DerivedCusp>) {
          if (v.w % 2 != 0) throw std::domain_error("SpaceSpec: odd weight summand");
          if (v.j < 0) throw std::domain_error("SpaceSpec: negative derivative order");
        } else {
          (void)v;
        }
      },
      s);
}
}  // namespace

SpaceSpec::SpaceSpec(std::vector<Summand> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw std::domain_error("SpaceSpec: no summands");
  for (const Summand& s : summands_) validate_summand(s);
  ambient_weight_ = summand_weight(summands_.front());
  for (const Summand& s : summands_)
    if (summand_weight(s) != ambient_weight_)
      throw grading_error("SpaceSpec: summands have mixed ambient weights");
}

std::vector<GradedPoly> SpaceSpec::generators() const {
  std::vector<GradedPoly> out;
  for (const Summand& s : summands_) {
    std::visit(
        [&out](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Modular>) {
            for (const auto& g : basis_modular(v.w)) out.push_back(g);
          } else if constexpr (std::is_same_v<T, Cusp>) {
            for (const auto& g : basis_cusp(v.w)) out.push_back(g);
          } else if constexpr (std::is_same_v<T, DerivedModular>) {
            for (const auto& g : basis_modular(v.w)) out.push_back(derive_poly(g, v.j));
          } else if constexpr (std::is_same_v<T, DerivedCusp>) {
            for (const auto& g : basis_cusp(v.w)) out.push_back(derive_poly(g, v.j));
          } else {
            out.push_back(v.gen.poly());
          }
        },
        s);
  }
  return out;
}

SpanSolver::SpanSolver(std::vector<GradedPoly> gens) : ngens_(gens.size()) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    GradedPoly r = std::move(gens[i]);
    std::vector<Rational> combo(ngens_);
    combo[i] = Rational(1);
    for (const EchelonRow& row : rows_) {
      const Rational c = r.coeff(row.pivot);
      if (c.is_zero()) continue;
      r -= c * row.poly;
      for (std::size_t t = 0; t < ngens_; ++t) combo[t] -= c * row.combo[t];
    }
    if (r.is_zero()) continue;  // dependent generator
    const Monomial pivot = r.terms().begin()->first;
    const Rational lead = r.terms().begin()->second;
    r = (Rational(1) / lead) * r;
    for (Rational& t : combo) t /= lead;
    const auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), pivot,
        [](const EchelonRow& row, const Monomial& m) { return MonomialDesc{}(row.pivot, m); });
    rows_.insert(pos, EchelonRow{pivot, std::move(r), std::move(combo)});
  }
}

std::optional<std::vector<Rational>> SpanSolver::solve(const GradedPoly& target) const {
  GradedPoly r = target;
  std::vector<Rational> coords(ngens_);
  for (const EchelonRow& row : rows_) {
    const Rational c = r.coeff(row.pivot);
    if (c.is_zero()) continue;
    r -= c * row.poly;
    for (std::size_t t = 0; t < ngens_; ++t) coords[t] += c * row.combo[t];
  }
  if (!r.is_zero()) return std::nullopt;
  return coords;
}

bool SpanSolver::contains(const GradedPoly& target) const {
  GradedPoly r = target;
  for (const EchelonRow& row : rows_) {
    const Rational c = r.coeff(row.pivot);
    if (!c.is_zero()) r -= c * row.poly;
  }
  return r.is_zero();
}

std::optional<std::vector<Rational>> solve_in_span(const GradedPoly& target,
                                                   const std::vector<GradedPoly>& gens) {
  return SpanSolver(gens).solve(target);
}

std::optional<std::vector<Rational>> membership(const QuasiForm& f, const SpaceSpec& spec) {
  if (f.weight() != spec.ambient_weight())
    throw grading_error("membership: form weight " + std::to_string(f.weight()) +
                        " does not match ambient weight " +
                        std::to_string(spec.ambient_weight()));
  return SpanSolver(spec.generators()).solve(f.poly());
}

Decomposition decompose(const QuasiForm& f) {
  const int k = f.weight();
  if (k <= 0 || k % 2 != 0) throw std::domain_error("decompose: weight must be positive even");
  Decomposition out;
  out.weight = k;
  GradedPoly residual = f.poly();
  int prev = k;  // strictly decreasing depth guard
  while (!residual.is_zero()) {
    const int s = depth_of(residual);
    if (s >= prev) throw std::logic_error("decompose: depth failed to decrease");
    prev = s;
    if (2 * s == k) {
      // The top depth is reachable only through the derivatives of E2 itself.
      const Rational c0 = depth_component(residual, s).coeff(Monomial{});
      const Rational c = Rational(pow_ui(12, s - 1)) / Rational(factorial(s - 1)) * c0;
      residual -= c * derive_poly(e2_poly(), s - 1);
      out.line = c;
    } else {
      const Rational scale = Rational(pow_ui(12, s)) *
                             Rational(factorial(k - 2 * s - 1)) / Rational(factorial(k - s - 1));
      const GradedPoly m = scale * depth_component(residual, s);
      residual -= derive_poly(m, s);
      out.parts.emplace_back(s, m);
    }
  }
  return out;
}

GradedPoly reassemble(const Decomposition& d) {
  GradedPoly r;
  for (const auto& [j, m] : d.parts) r += derive_poly(m, j);
  if (d.line) r += *d.line * derive_poly(e2_poly(), d.weight / 2 - 1);
  return r;
}

}  // namespace qmrc
