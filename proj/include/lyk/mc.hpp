#pragma once

#include "lyk/extension.hpp"

namespace lyk {

// An element of L*(V,V) on a space V of dimension `dim`.
//   degree 0: `map` (V -> V);
//   degree n >= 1: `first` on ⊗^{2n} V and `second` on ⊗^{2n+1} V;
//   optionally the auxiliary block (aux_first on ⊗^3 V, aux_second on ⊗^4 V),
//   which is where the • product lands.
// Elements produced by bracket_ly at degrees (1,1) carry both a degree-2
// part and an auxiliary part.
struct GradedElement {
  Field field;
  int dim = 0;
  int degree = 0;
  Matrix map;
  MultiMap first;
  MultiMap second;
  bool has_aux = false;
  MultiMap aux_first;
  MultiMap aux_second;

  static GradedElement zero(const Field& f, int dim, int degree);
  static GradedElement aux_zero(const Field& f, int dim);
  static GradedElement of_map(const Matrix& m);
  static GradedElement of_pair(MultiMap first, MultiMap second);
  // Π = (χ, ω) of an algebra.
  static GradedElement of_algebra(const LYAlgebra& a);

  bool is_zero() const;
  // identity Co1 on every component.
  bool satisfies_vanishing() const;

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Scalar& c, GradedElement a);
  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

// Shuffle sums for p, q >= 1.
GradedElement circ(const GradedElement& p, const GradedElement& q, Exec exec = Exec::parallel);
// P∘f (insert f into every slot) and f∘P (post-compose), p >= 1.
GradedElement circ0(const GradedElement& p, const Matrix& f, Exec exec = Exec::parallel);
GradedElement circ0r(const Matrix& f, const GradedElement& p);
// Zero (in the auxiliary block) unless both degrees are 1. Throws
// CharacteristicTwo.
GradedElement bullet(const GradedElement& p, const GradedElement& q, Exec exec = Exec::parallel);
// [P,Q]_LY as displayed. Auxiliary inputs throw UnrepresentedBlock.
GradedElement bracket_ly(const GradedElement& p, const GradedElement& q,
                         Exec exec = Exec::parallel);
// [P,Q]_LY without the part of • that is linear in a single argument; equal to
// bracket_ly away from degrees (1,1). This is the bilinear bracket that the
// expansion of [Π+Π', Π+Π'] uses.
GradedElement bracket_bilinear(const GradedElement& p, const GradedElement& q,
                               Exec exec = Exec::parallel);

// Throws InvalidInput unless Π has degree 1 and satisfies identity Co1.
bool is_mc(const GradedElement& pi, Exec exec = Exec::parallel);
bool is_ly_structure(const GradedElement& pi);
LYAlgebra algebra_of(const GradedElement& pi);

// d_Π(ν) = [Π,ν] using bracket_bilinear.
GradedElement d_pi(const GradedElement& pi, const GradedElement& nu, Exec exec = Exec::parallel);

// (χ_{g⊕h}, ω_{g⊕h}) of the direct sum and (χ̄, ω̄) of a cocycle.
GradedElement direct_sum_element(const LYAlgebra& g, const LYAlgebra& h);
GradedElement cocycle_element(const NonAbCocycle& c);
// Inverse of cocycle_element on L_>.
NonAbCocycle cocycle_from_element(const LYAlgebra& g, const LYAlgebra& h, const GradedElement& pi);
// Values in h and zero whenever every argument lies in h (coordinates g ⊕ h).
bool in_subcomplex(const GradedElement& e, int dim_g);

struct McExtensionCheck {
  bool mc1 = false;     // d Π̄ + ½[Π̄,Π̄] = 0 in L_>
  bool mc2 = false;     // Π_{g⊕h} + Π̄ is Maurer-Cartan in L*(g⊕h)
  bool closed = false;  // Π̄, dΠ̄ and [Π̄,Π̄] lie in L_>
};
// Throws CharacteristicTwo.
McExtensionCheck check_mc_extension(const NonAbCocycle& c, Exec exec = Exec::parallel);

// Π0 = e^{ad φ}Π - (e^{ad φ} - 1)/ad φ · dφ on L_>(g⊕h, h), truncated after
// ad_φ^2 (ad_φ^3 is checked to vanish). Throws UnsupportedCharacteristic in
// characteristic 2 or 3.
GradedElement gauge_transform(const LYAlgebra& g, const LYAlgebra& h, const GradedElement& pi,
                              const Matrix& phi, Exec exec = Exec::parallel);
// φ : g -> h as the map x + a |-> φ(x) on g ⊕ h.
Matrix lift_to_sum(const Matrix& phi, int dim_g, int dim_h);

}  // namespace lyk
