#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lyk/extension.hpp"
#include "lyk/representation.hpp"
#include "lyk/wells.hpp"

namespace lyk::io {

// Line-oriented workspace documents (.lyw). Indices are 1-based; tensor
// entries are written `b[i,j] = c*e_k + ...` with zero entries omitted.
//
//   field F2
//
//   algebra g dim 2
//     b[1,2] = e1
//     t[1,2,1] = e1 + e2
//   end
//
//   rep V of g dim 1
//     mu[1,1] = e1
//     theta[1,2,1] = e1
//     D[1,2,1] = e1
//   end
//
//   cocycle c on g h
//     chi[1,2] = e1
//     omega[..] mu[x,a] theta[x,y,a] D[x,y,a] rho[x,a,b] T[x,a,b]
//   end
//
//   map A 2x2
//     1 0
//     0 1
//   end
//
//   pair P alpha A beta B
//   extension E from c
//   extension F
//     g = g
//     h = h
//     total = tot
//     i = Ai
//     p = Ap
//     s = As
//   end
//
// Names are unique within a kind; a reference's kind is fixed by where it
// appears. `#` starts a comment.

enum class Kind { algebra, rep, cocycle, map, pair, extension };
std::string to_string(Kind k);

struct RepDecl {
  std::string algebra;
  Representation rep;
};

struct CocycleDecl {
  std::string g;
  std::string h;
  NonAbCocycle cocycle;
};

struct PairDecl {
  std::string alpha;
  std::string beta;
};

struct ExtensionDecl {
  std::string cocycle;  // set for `extension E from c`
  std::string g, h, total, i, p, s;
};

struct Workspace {
  Field field;
  std::vector<std::pair<Kind, std::string>> order;  // declaration order
  std::map<std::string, LYAlgebra> algebras;
  std::map<std::string, RepDecl> reps;
  std::map<std::string, CocycleDecl> cocycles;
  std::map<std::string, Matrix> maps;
  std::map<std::string, PairDecl> pairs;
  std::map<std::string, ExtensionDecl> extensions;

  bool has(Kind k, const std::string& name) const;
  // Throws InvalidInput on unknown names; references are checked on insertion.
  void add_algebra(const std::string& name, LYAlgebra a);
  void add_rep(const std::string& name, RepDecl r);
  void add_cocycle(const std::string& name, CocycleDecl c);
  void add_map(const std::string& name, Matrix m);
  void add_pair(const std::string& name, PairDecl p);
  void add_extension(const std::string& name, ExtensionDecl e);

  ExtensionSpec extension(const std::string& name) const;
  AutoPair pair(const std::string& name) const;
  // Kinds under which `name` is declared, in declaration order.
  std::vector<Kind> kinds_of(const std::string& name) const;
};

// Throws ParseError(line, column, message). With `field` set, scalars are
// read in that field instead of the declared one.
Workspace parse_workspace(std::string_view text, std::optional<Field> field = {});
std::string print_workspace(const Workspace& w);

// "Q" or "Fp" with p prime.
std::optional<Field> field_from_name(std::string_view name);

// A scalar as documents write it: residues in [0, p), rationals as a/b.
std::string print_scalar(const Scalar& s);

}  // namespace lyk::io
