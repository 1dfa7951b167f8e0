#pragma once

#include "qmrc/ring.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace qmrc {

// Monomial basis {E4^b E6^c : 4b + 6c = w}, E4-exponent descending.
std::vector<GradedPoly> basis_modular(int w);

// {Delta * m : m in basis_modular(w - 12)}; empty below weight 12.
std::vector<GradedPoly> basis_cusp(int w);

// All monomials E2^a E4^b E6^c of weight w with a <= depth_max, in canonical
// descending order.
std::vector<GradedPoly> monomial_basis(int w, int depth_max);

// Direct-sum description of a subspace of the weight-graded ring.
struct Modular {
  int w;
};
struct Cusp {
  int w;
};
// D^j applied to the modular forms of weight w; ambient weight w + 2j.
struct DerivedModular {
  int j;
  int w;
};
struct DerivedCusp {
  int j;
  int w;
};
// The line spanned by a single form.
struct Line {
  QuasiForm gen;
};
using Summand = std::variant<Modular, Cusp, DerivedModular, DerivedCusp, Line>;

class SpaceSpec {
 public:
  // All summands must sit in one ambient weight; mixed weights are rejected.
  explicit SpaceSpec(std::vector<Summand> summands);

  int ambient_weight() const { return ambient_weight_; }
  const std::vector<Summand>& summands() const { return summands_; }
  // Concatenation of the summand bases, in summand order.
  std::vector<GradedPoly> generators() const;

 private:
  std::vector<Summand> summands_;
  int ambient_weight_;
};

// Exact linear algebra over the span of a fixed generator list, reusable
// across many targets.  Coordinates are reported in the original generator
// indexing; if the generators are dependent one valid coordinate vector is
// returned.
class SpanSolver {
 public:
  explicit SpanSolver(std::vector<GradedPoly> gens);

  bool contains(const GradedPoly& target) const;
  // Coordinates x with sum_i x_i gens[i] = target, or nullopt.
  std::optional<std::vector<Rational>> solve(const GradedPoly& target) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  struct EchelonRow {
    Monomial pivot;
    GradedPoly poly;                // pivot coefficient 1, reduced against later pivots
    std::vector<Rational> combo;    // expression of poly in the original generators
  };
  std::size_t ngens_;
  std::vector<EchelonRow> rows_;  // pivots in canonical descending order
};

// One-shot convenience wrapper around SpanSolver.
std::optional<std::vector<Rational>> solve_in_span(const GradedPoly& target,
                                                   const std::vector<GradedPoly>& gens);

// Coordinates of f in the direct sum, concatenated in summand order, or
// nullopt if f lies outside.  Weight mismatch between f and the space is an
// error; the zero form lies in every space of its weight.
std::optional<std::vector<Rational>> membership(const QuasiForm& f, const SpaceSpec& spec);

// f = sum_j D^j m_j + c D^{k/2-1} E2 with each m_j modular of weight k - 2j.
struct Decomposition {
  int weight = 0;
  // (j, m_j) pairs with m_j nonzero, in decreasing j.
  std::vector<std::pair<int, GradedPoly>> parts;
  // Coefficient on D^{k/2-1} E2, present only when that line is needed.
  std::optional<Rational> line;
};

// Requires positive even weight.  The decomposition is exact and unique.
Decomposition decompose(const QuasiForm& f);

// Rebuilds the polynomial described by d.
GradedPoly reassemble(const Decomposition& d);

}  // namespace qmrc
