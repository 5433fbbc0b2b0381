#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lyk/algebra.hpp"

namespace lyk {

// (χ, ω, μ, θ, D, ρ, T) on g with values in h. Operator arguments come first:
// mu.at(out, {x, a}) = μ(x)a, theta.at(out, {x, y, a}) = θ(x,y)a,
// rho.at(out, {x, a, b}) = ρ(x)(a,b), tee.at(out, {x, a, b}) = T(x)(a,b).
struct NonAbCocycle {
  LYAlgebra g;
  LYAlgebra h;
  MultiMap chi;
  MultiMap omega;
  MultiMap mu;
  MultiMap theta;
  MultiMap dee;
  MultiMap rho;
  MultiMap tee;

  NonAbCocycle() = default;
  NonAbCocycle(LYAlgebra g, LYAlgebra h);  // all seven maps zero

  const Field& field() const { return g.field; }
  int dg() const { return g.dim; }
  int dh() const { return h.dim; }
  void check_shape() const;
  // The seven maps in order (χ, ω, μ, θ, D, ρ, T).
  std::vector<const MultiMap*> maps() const;
  std::vector<MultiMap*> maps();
  // Concatenated coefficients of the seven maps; used for canonical ordering.
  Vec flat() const;

  friend bool operator==(const NonAbCocycle&, const NonAbCocycle&) = default;
};

// Ids "L00" ... "L35" as labelled, plus "g:<axiom>" and "h:<axiom>" when g
// or h is not itself Lie-Yamaguti. Tuples list g arguments first, then h.
Report validate_cocycle(const NonAbCocycle& c, const CheckOptions& opts = {});

struct ExtensionSpec {
  LYAlgebra g;
  LYAlgebra h;
  LYAlgebra total;
  Matrix i;  // h -> total
  Matrix p;  // total -> g
  Matrix s;  // g -> total
};

// Coordinates g ⊕ h with the twisted brackets [ , ]_χ and { , , }_ω.
ExtensionSpec build_extension(const NonAbCocycle& c);
// Checks shapes, exactness (p∘i = 0, i injective, p surjective, dimensions),
// that i and p are morphisms and i(h) is an ideal (InvalidExtension), and
// p∘s = id (SectionMismatch). Does not check that total is Lie-Yamaguti.
void verify_extension(const ExtensionSpec& e);
// t : total -> h with i∘t + s∘p = id.
Matrix retraction(const ExtensionSpec& e);
NonAbCocycle extract_cocycle(const ExtensionSpec& e);
ExtensionSpec with_section(const ExtensionSpec& e, const Matrix& s);

// (E1)-(E6) for c1, c2 and φ : g -> h; ids "E1" ... "E6".
Report check_cocycle_equivalence(const NonAbCocycle& c1, const NonAbCocycle& c2,
                                 const Matrix& phi, const CheckOptions& opts = {});
// The unique c1 with c1 ~ c2 through φ, read off (E1)-(E6).
NonAbCocycle shift_cocycle(const NonAbCocycle& c2, const Matrix& phi);

constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 20;

struct EquivalenceSearch {
  enum class Status { witness, exhausted, not_equivalent };
  Status status = Status::exhausted;
  std::optional<Matrix> phi;
  std::uint64_t examined = 0;
  std::string method;  // "linear" or "enumeration"
};
std::string to_string(EquivalenceSearch::Status s);

// True when (E1)-(E6) are affine in φ: both brackets of h and ρ2, T2 vanish.
bool equivalence_is_linear(const NonAbCocycle& c2);
// Throws BudgetExceeded when enumeration would need more than `budget`
// candidates and no linear shortcut applies.
EquivalenceSearch search_equivalence(const NonAbCocycle& c1, const NonAbCocycle& c2,
                                     std::uint64_t budget = kDefaultBudget,
                                     Exec exec = Exec::parallel);

// f : total1 -> total2 a morphism with f∘i1 = i2 and p2∘f = p1; ids
// "hom.binary", "hom.ternary", "i", "p".
Report check_extension_equivalence(const ExtensionSpec& e1, const ExtensionSpec& e2,
                                   const Matrix& f, const CheckOptions& opts = {});
// f(x + a) = x - φ(x) + a between the canonical extensions of c1 and c2 when
// c1 ~ c2 through φ.
Matrix equivalence_map(const NonAbCocycle& c1, const Matrix& phi);

// Hom(g,h) over a prime field, candidate k in base-p digits (row-major).
Matrix hom_candidate(const Field& f, int rows, int cols, std::uint64_t k);
std::uint64_t candidate_count(const Field& f, int entries, std::uint64_t budget);

// All valid cocycles on (g, h) over a prime field, and their classes under
// (E1)-(E6) as lexicographically least representatives.
std::vector<NonAbCocycle> enumerate_cocycles(const LYAlgebra& g, const LYAlgebra& h,
                                             std::uint64_t budget = kDefaultBudget,
                                             Exec exec = Exec::parallel);
std::vector<NonAbCocycle> cocycle_classes(const std::vector<NonAbCocycle>& cocycles,
                                          std::uint64_t budget = kDefaultBudget,
                                          Exec exec = Exec::parallel);
// Lexicographic comparison of flat() coefficient sequences.
bool cocycle_less(const NonAbCocycle& a, const NonAbCocycle& b);

}  // namespace lyk
