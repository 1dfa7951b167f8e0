#pragma once

#include "qmrc/ring.hpp"

#include <vector>

namespace qmrc {

// i-th depth component: (1/i!) * (d/dE2)^i, i.e. the i-th Taylor coefficient
// of the shift  p(E2 + Y) = sum_i depth_component(p, i) Y^i.  For a form of
// weight k and depth s, component i is quasimodular of weight k - 2i and
// depth at most s - i; components beyond s vanish.
GradedPoly depth_component(const GradedPoly& p, int i);

struct DepthComponents {
  QuasiForm base;
  // parts[i] = depth_component(base.poly(), i) for i = 0..base.depth().
  std::vector<GradedPoly> parts;
};

DepthComponents components(const QuasiForm& f);

// R_i(D f) = D(R_i f) + ((k - i + 1)/12) R_{i-1} f for i = 0..depth(f)+1,
// where k is the weight of f.  Requires positive weight.
bool check_first_derivative_law(const QuasiForm& f);

// R_i(D^r f) = sum_j 12^{-j} j! C(r,j) C(k+r-i+j-1, j) D^{r-j}(R_{i-j} f),
// checked for i = 0..depth(f)+r.
bool check_derivative_power_law(const QuasiForm& f, unsigned r);

// For E2-free g of weight w and s >= 1, with k = w + 2s:
// R_s(D^s g) = 12^{-s} s! C(k-s-1, s) g.
bool check_top_component_of_power(const QuasiForm& g, unsigned s);

// R_i(f g) = sum_j R_j(f) R_{i-j}(g), all i.
bool check_product_law(const QuasiForm& f, const QuasiForm& g);

}  // namespace qmrc
