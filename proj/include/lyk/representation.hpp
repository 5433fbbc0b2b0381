#pragma once

#include "lyk/algebra.hpp"

namespace lyk {

// (V, μ, θ, D): μ is g⊗V -> V, θ and D are g⊗g⊗V -> V, with the operator
// arguments first: mu.at(out, {x, v}), theta.at(out, {x, y, v}).
struct Representation {
  LYAlgebra algebra;
  int dim_v = 0;
  MultiMap mu;
  MultiMap theta;
  MultiMap dee;

  Representation() = default;
  Representation(LYAlgebra g, int dim_v);  // all action maps zero

  const Field& field() const { return algebra.field; }
  Vec act_mu(const Vec& x, const Vec& v) const { return mu(x, v); }
  Vec act_theta(const Vec& x, const Vec& y, const Vec& v) const { return theta(x, y, v); }
  Vec act_dee(const Vec& x, const Vec& y, const Vec& v) const { return dee(x, y, v); }
  void check_shape() const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

// Ids "2.7", "2.9" ... "2.13"; tuples list the algebra arguments followed by
// the V basis index. Asymmetric θ is reported as a note, not a violation.
Report verify_representation(const Representation& r, const CheckOptions& opts = {});
// Ids "2.8", "2.70", "2.71".
Report check_derived_identities(const Representation& r, const CheckOptions& opts = {});

// μ(x)y = [x,y], θ(x,y)z = {z,x,y}, D(x,y)z = {x,y,z}.
Representation adjoint(const LYAlgebra& g);

// g ⊕ V with [x+u, y+v] = [x,y] + μ(x)v - μ(y)u and
// {x+u, y+v, z+w} = {x,y,z} + θ(y,z)u - θ(x,z)v + D(x,y)w.
LYAlgebra semidirect_product(const Representation& r);

}  // namespace lyk
