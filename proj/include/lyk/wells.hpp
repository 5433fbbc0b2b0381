#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lyk/cohomology.hpp"
#include "lyk/extension.hpp"

namespace lyk {

struct AutoPair {
  Matrix alpha;  // on g
  Matrix beta;   // on h
  friend bool operator==(const AutoPair&, const AutoPair&) = default;
};

// verify_automorphism on both components, ids prefixed "alpha:" and "beta:".
Report verify_pair(const LYAlgebra& g, const LYAlgebra& h, const AutoPair& pair);

// (Iam1)-(Iam7) for the cocycle of E and φ : g -> h; ids "Iam1" ... "Iam7".
Report check_extensible(const NonAbCocycle& c, const AutoPair& pair, const Matrix& phi,
                        const CheckOptions& opts = {});
Report check_extensible(const ExtensionSpec& e, const AutoPair& pair, const Matrix& phi,
                        const CheckOptions& opts = {});

// γ = iβt - iφp + sαp, i.e. γ(a + s(x)) = β(a) - φ(x) + sα(x). Throws
// NotExtensible when (Iam1)-(Iam7) fail.
Matrix lift_automorphism(const ExtensionSpec& e, const AutoPair& pair, const Matrix& phi);

// (χ, ω, μ, θ, D, ρ, T) conjugated by (α, β).
NonAbCocycle induced_cocycle(const NonAbCocycle& c, const AutoPair& pair);
using InducedFn = std::function<NonAbCocycle(const NonAbCocycle&, const AutoPair&)>;

struct ExtensibilitySearch {
  enum class Status { extensible, not_extensible, undecided };
  Status status = Status::undecided;
  std::optional<Matrix> phi;
  std::string method;  // "enumeration" or "wells"
};
std::string to_string(ExtensibilitySearch::Status s);

// ∃φ with (Iam1)-(Iam7): exhaustive over a prime field within budget,
// otherwise through the equivalence of c and its induced cocycle.
ExtensibilitySearch find_extending_phi(const NonAbCocycle& c, const AutoPair& pair,
                                       std::uint64_t budget = kDefaultBudget,
                                       Exec exec = Exec::parallel);

struct WellsObstruction {
  enum class Status { trivial, nontrivial, undecided };
  Status status = Status::undecided;
  NonAbCocycle induced;
  NonAbCocycle difference;    // induced minus original, map by map
  std::optional<Matrix> psi;  // induced ~ original through ψ
  std::optional<Matrix> phi;  // (Iam1)-(Iam7) witness, φ = ψα
  std::string method;
};
std::string to_string(WellsObstruction::Status s);

// W(α, β): trivial iff the induced cocycle is equivalent to the original.
WellsObstruction wells_map(const ExtensionSpec& e, const AutoPair& pair,
                           std::uint64_t budget = kDefaultBudget, Exec exec = Exec::parallel,
                           const InducedFn& induced = {});

bool preserves_h(const ExtensionSpec& e, const Matrix& gamma);
// K(γ) = (pγs, γ|_h). Throws NotHPreserving.
AutoPair restriction_map_K(const ExtensionSpec& e, const Matrix& gamma);

// The defining conditions of Z¹_nab in display order; ids "W5.1" ... "W5.5".
Report check_z1_nab(const NonAbCocycle& c, const Matrix& phi, const CheckOptions& opts = {});
// Members of Z¹_nab over a prime field, in candidate order.
std::vector<Matrix> z1_nab(const NonAbCocycle& c, std::uint64_t budget = kDefaultBudget,
                           Exec exec = Exec::parallel);
// S(γ) = t(s - γs) and its inverse φ |-> γ(a + s(x)) = s(x) - φ(x) + a.
Matrix s_map(const ExtensionSpec& e, const Matrix& gamma);
Matrix z1_automorphism(const ExtensionSpec& e, const Matrix& phi);

// Over a prime field within budget; candidate order.
std::vector<Matrix> enumerate_automorphisms(const LYAlgebra& a, std::uint64_t budget = kDefaultBudget,
                                            Exec exec = Exec::parallel);
// Aut_h(total): block lower-triangular maps in the basis (s(g), i(h)).
std::vector<Matrix> enumerate_aut_h(const ExtensionSpec& e, std::uint64_t budget = kDefaultBudget,
                                    Exec exec = Exec::parallel);

struct SequenceCheck {
  Report report;
  std::size_t aut_h = 0;        // |Aut_h(total)|
  std::size_t aut_total = 0;    // |Aut(total)|
  std::size_t pairs = 0;        // |Aut(g) x Aut(h)|
  std::size_t ker_k = 0;
  std::size_t im_h = 0;
  std::size_t im_k = 0;
  std::size_t ker_w = 0;
  std::size_t z1 = 0;
};
// Exactness of 1 -> Aut_h^g -> Aut_h -> Aut(g) x Aut(h) -> H_nab and of
// 0 -> Z¹_nab -> Aut_h, by full enumeration. Ids "H.injective",
// "KerK=ImH", "K.hom", "KerW=ImK", "S.into", "S.bijective", "S.hom",
// "Z1.injective"; tuples index the enumerated lists.
SequenceCheck wells_sequence_check(const ExtensionSpec& e, std::uint64_t budget = kDefaultBudget,
                                   Exec exec = Exec::parallel, const InducedFn& induced = {});

// For every pair: extensible by γ-enumeration (pair in Im K) against the
// exhaustive ∃φ search (id "5.2") and against the Wells map (id "5.4").
// Tuples are (index of α, index of β).
Report extensibility_agreement(const ExtensionSpec& e, std::uint64_t budget = kDefaultBudget,
                               Exec exec = Exec::parallel);

// Abelian extensions: h abelian and ρ = T = 0.
struct AbelianMode {
  NonAbCocycle cocycle;
  Representation rep;  // (h, μ, θ, D)
};
// Throws NotAbelianExtension.
AbelianMode abelian_mode(const ExtensionSpec& e);
// C_(μ,θ); ids "C.theta", "C.mu".
Report compatible_pair(const AbelianMode& m, const AutoPair& pair, const CheckOptions& opts = {});
// βD(x,y)a = D(αx,αy)βa; id "C.D".
Report dee_compatibility(const AbelianMode& m, const AutoPair& pair, const CheckOptions& opts = {});
// (AEE1)-(AEE3); ids "AEE1", "AEE2", "AEE3".
Report check_extensible_abelian(const AbelianMode& m, const AutoPair& pair, const Matrix& phi,
                                const CheckOptions& opts = {});
// Linear solve of (AEE1)-(AEE2) when (AEE3) holds.
std::optional<Matrix> solve_extending_phi_abelian(const AbelianMode& m, const AutoPair& pair);

struct AbelianWells {
  bool compatible = false;
  bool trivial = false;        // only meaningful when compatible
  std::optional<Matrix> psi;   // induced ~ original through ψ
};
// Gated on C_(μ,θ); triviality decided by whether the difference of (χ, ω)
// lies in B^(2,3).
AbelianWells abelian_wells(const AbelianMode& m, const AutoPair& pair);

}  // namespace lyk
