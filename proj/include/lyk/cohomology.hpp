#pragma once

#include <vector>

#include "lyk/representation.hpp"

namespace lyk {

// n-linear maps g^{⊗n} -> V vanishing whenever x_{2i-1} = x_{2i}. Coordinates
// are the values on tuples with x_{2i-1} < x_{2i} for every pair (lex order
// of tuples, then output index); the unpaired last slot, if any, is free.
class CochainSpace {
 public:
  CochainSpace(Field f, int dim_g, int dim_v, int arity);

  int dimension() const { return static_cast<int>(tuples_.size()) * dim_v_; }
  int arity() const { return arity_; }
  const Field& field() const { return field_; }
  MultiMap zero() const;
  MultiMap embed(const Vec& coords) const;
  Vec coordinates(const MultiMap& m) const;
  bool satisfies_vanishing(const MultiMap& m) const;

 private:
  Field field_;
  int dim_g_, dim_v_, arity_;
  std::vector<std::vector<int>> tuples_;
};

struct CochainPair {
  MultiMap f;
  MultiMap g;
  friend bool operator==(const CochainPair&, const CochainPair&) = default;
};

// C^1 -> C^2 x C^3.
CochainPair delta1(const Representation& r, const MultiMap& f);
// C^{(2n,2n+1)} -> C^{(2n+2,2n+3)}, n = arity(f)/2 >= 1.
CochainPair delta(const Representation& r, const CochainPair& fg);
// C^{(2,3)} -> C^{(3,4)}.
CochainPair delta_star(const Representation& r, const CochainPair& fg);

// Columns are images of the coordinate basis of C^{(2n,2n+1)} (n >= 1) or of
// Hom(g,V) (n = 0), as flattened full tensors (first component, then second).
Matrix delta_matrix(const Representation& r, int n, Exec exec = Exec::parallel);
Matrix delta_star_matrix(const Representation& r, Exec exec = Exec::parallel);

struct H1Result {
  int dim = 0;
  std::vector<MultiMap> basis;
};
H1Result h1(const Representation& r, Exec exec = Exec::parallel);

struct H23Result {
  int dim_z = 0;
  int dim_b = 0;
  int dim_h = 0;
  std::vector<CochainPair> z_basis;
  std::vector<CochainPair> b_basis;
  // Elements of a Z basis completing the B basis, one per dimension of H.
  std::vector<CochainPair> h_representatives;
};
// Throws InvalidInput when the structure maps are not alternating (possible
// only in characteristic 2) and InternalInconsistency if B is not inside Z.
H23Result z23_b23_h23(const Representation& r, Exec exec = Exec::parallel);

bool is_coboundary(const Representation& r, const CochainPair& fg, MultiMap* witness = nullptr);

struct CoboundaryRanks {
  int n = 0;
  int domain_dim = 0;
  int rank = 0;
  // rank of δ∘δ from C^{(2n,2n+1)}; zero for a complex.
  int composite_rank = 0;
};
CoboundaryRanks coboundary_ranks(const Representation& r, int n, Exec exec = Exec::parallel);

// Flattening helpers shared with the extension code.
Vec flatten(const CochainPair& p);
CochainPair cochain_from_coords(const Representation& r, int n, const Vec& coords);
Vec cochain_coords(const Representation& r, const CochainPair& p);

}  // namespace lyk
