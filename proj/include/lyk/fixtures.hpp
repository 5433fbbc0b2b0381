#pragma once

#include <cstdint>
#include <random>

#include "lyk/algebra.hpp"
#include "lyk/extension.hpp"
#include "lyk/representation.hpp"

namespace lyk::fixtures {

LYAlgebra abelian(const Field& f, int n);
// sl2 with basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h, and
// {x,y,z} = [[x,y],z].
LYAlgebra sl2(const Field& f);
// [e1,e2] = e1 as a Lie algebra, {x,y,z} = [[x,y],z].
LYAlgebra affine_line(const Field& f);
// Heisenberg Lie algebra [e1,e2] = e3 with {x,y,z} = [[x,y],z] (= 0).
LYAlgebra heisenberg(const Field& f);
// Lie triple system of sl2: zero binary bracket, {x,y,z} = [[x,y],z].
LYAlgebra sl2_triple_system(const Field& f);
// Reductive pair (sl3, diagonal): on the six off-diagonal matrix units
// E12, E23, E13, E21, E32, E31, [x,y] is the off-diagonal part of the
// commutator and {x,y,z} = [[x,y]_diag, z]. The binary bracket is not a Lie
// bracket.
LYAlgebra sl3_reductive(const Field& f);
// Lie algebra built from a derivation d of a Lie algebra l: l ⋊ <x> with the
// new basis vector last.
MultiMap lie_semidirect(const Field& f, const MultiMap& l, const Matrix& d);

// Cocycle of the semidirect product: μ, θ, D from r on abelian h = V.
NonAbCocycle semidirect_cocycle(const Representation& r);
// 0 -> I -> total -> total/I -> 0 for the ideal I spanned by the listed basis
// vectors. Coordinates are permuted so that the complement comes first; i, p
// and s are the coordinate inclusions and projection.
ExtensionSpec quotient_extension(const LYAlgebra& total, const std::vector<int>& ideal);
// g = abelian 2, h = affine line, D(x1,x2) = -D(x2,x1) = diag(0,1), which is
// not a derivation of h; every other map is zero.
NonAbCocycle broken_derivation_cocycle(const Field& f);

using Rng = std::mt19937_64;

// Uniform over F_p; over Q, integers in [-3, 3] with an occasional 1/2.
Scalar random_scalar(const Field& f, Rng& rng);
Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng);
Matrix random_invertible(const Field& f, int n, Rng& rng);
MultiMap random_multimap(const Field& f, std::vector<int> dims_in, int dim_out, Rng& rng);
// Seven uniformly random maps; no identity is imposed.
NonAbCocycle random_cocycle(const LYAlgebra& g, const LYAlgebra& h, Rng& rng);
// One coefficient changed to a different value; returns (out, flat in).
std::pair<int, std::size_t> mutate_entry(MultiMap& m, Rng& rng);

}  // namespace lyk::fixtures
