#include <doctest.h>

#include <set>

#include "lyk/errors.hpp"
#include "lyk/fixtures.hpp"
#include "lyk/wells.hpp"
#include "oracle/wells_oracle.hpp"
#include "support/generators.hpp"

using namespace lyk;
namespace fx = lyk::fixtures;

namespace {

AutoPair identity_pair(const ExtensionSpec& e) {
  return {Matrix::identity(e.total.field, e.g.dim), Matrix::identity(e.total.field, e.h.dim)};
}

bool small_enough(const ExtensionSpec& e) {
  const int n = e.total.dim;
  std::uint64_t c = 1;
  for (int k = 0; k < n * n; ++k) c *= e.total.field.characteristic();
  return c <= kDefaultBudget;
}

// x |-> a x + b y on the affine line [e1,e2] = e1: e1 -> a e1, e2 -> e2 + b e1.
Matrix affine_auto(const Field& f, long a, long b) {
  Matrix m(f, 2, 2);
  m.at(0, 0) = f.from_int(a);
  m.at(0, 1) = f.from_int(b);
  m.at(1, 1) = f.one();
  return m;
}

}  // namespace

TEST_CASE("identity pair extends through phi = 0") {
  for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    for (const auto& e : testgen::small_extensions(f)) {
      const AutoPair id = identity_pair(e);
      const Matrix zero(f, e.h.dim, e.g.dim);
      CHECK(check_extensible(e, id, zero).ok());
      CHECK(lift_automorphism(e, id, zero).is_identity());
      CHECK(induced_cocycle(extract_cocycle(e), id) == extract_cocycle(e));
      CHECK(check_z1_nab(extract_cocycle(e), zero).ok());
    }
  }
}

TEST_CASE("lifted automorphisms restrict to the pair") {
  Field f = Field::prime(3);
  int lifted = 0;
  for (const auto& e : testgen::small_extensions(f)) {
    if (!small_enough(e)) continue;
    const NonAbCocycle c = extract_cocycle(e);
    const auto ag = enumerate_automorphisms(e.g);
    const auto ah = enumerate_automorphisms(e.h);
    for (std::size_t a = 0; a < ag.size(); a += 3)
      for (std::size_t b = 0; b < ah.size(); b += 2) {
        const AutoPair pr{ag[a], ah[b]};
        auto s = find_extending_phi(c, pr);
        if (s.status != ExtensibilitySearch::Status::extensible) {
          CHECK_THROWS_AS(lift_automorphism(e, pr, Matrix(f, e.h.dim, e.g.dim)), NotExtensible);
          continue;
        }
        Matrix gm = lift_automorphism(e, pr, *s.phi);
        CHECK(verify_automorphism(e.total, gm).ok());
        CHECK(preserves_h(e, gm));
        CHECK(restriction_map_K(e, gm) == pr);
        CHECK(e.p * gm == pr.alpha * e.p);
        CHECK(gm * e.i == e.i * pr.beta);
        ++lifted;
      }
  }
  CHECK(lifted > 10);
}

TEST_CASE("induced cocycle is valid and inverts") {
  Field f = Field::prime(3);
  fx::Rng rng(41);
  for (const auto& e : testgen::small_extensions(f)) {
    if (!small_enough(e)) continue;
    const NonAbCocycle c = extract_cocycle(e);
    const auto ag = enumerate_automorphisms(e.g);
    const auto ah = enumerate_automorphisms(e.h);
    for (int trial = 0; trial < 4; ++trial) {
      const AutoPair pr{ag[rng() % ag.size()], ah[rng() % ah.size()]};
      const NonAbCocycle ind = induced_cocycle(c, pr);
      CHECK(validate_cocycle(ind).ok());
      const AutoPair inv{*inverse(pr.alpha), *inverse(pr.beta)};
      CHECK(induced_cocycle(ind, inv) == c);
    }
  }
}

TEST_CASE("Wells map does not depend on the section") {
  Field f = Field::prime(3);
  fx::Rng rng(7);
  for (const auto& e : testgen::small_extensions(f)) {
    if (!small_enough(e)) continue;
    const ExtensionSpec e2 = with_section(e, e.s + e.i * fx::random_matrix(f, e.h.dim, e.g.dim, rng));
    const auto ag = enumerate_automorphisms(e.g);
    const auto ah = enumerate_automorphisms(e.h);
    for (const auto& a : ag)
      for (const auto& b : ah) {
        const AutoPair pr{a, b};
        CHECK(wells_map(e, pr).status == wells_map(e2, pr).status);
      }
  }
}

TEST_CASE("extensibility by gamma enumeration against brute-force automorphisms") {
  for (Field f : {Field::prime(2), Field::prime(3)}) {
    for (const auto& e : testgen::small_extensions(f)) {
      if (!small_enough(e)) continue;
      const auto want = oracle::extendable_pairs(e);
      const NonAbCocycle c = extract_cocycle(e);
      for (const auto& a : oracle::brute_automorphisms(e.g))
        for (const auto& b : oracle::brute_automorphisms(e.h)) {
          const bool oracle_says = want.count(oracle::pair_key(a, b)) > 0;
          auto s = find_extending_phi(c, {a, b});
          CHECK(s.method == "enumeration");
          CHECK((s.status == ExtensibilitySearch::Status::extensible) == oracle_says);
          CHECK((wells_map(e, {a, b}).status == WellsObstruction::Status::trivial) == oracle_says);
        }
      CHECK(extensibility_agreement(e).ok());
    }
  }
}

TEST_CASE("Wells sequence is exact on small extensions") {
  for (Field f : {Field::prime(2), Field::prime(3)}) {
    for (const auto& e : testgen::small_extensions(f)) {
      if (!small_enough(e)) continue;
      SequenceCheck sc = wells_sequence_check(e);
      INFO("dims " << e.g.dim << "," << e.h.dim);
      CHECK(sc.report.ok());
      CHECK(sc.ker_k == sc.im_h);
      CHECK(sc.ker_w == sc.im_k);
      CHECK(sc.z1 == sc.ker_k);
      CHECK(sc.im_k * sc.ker_k == sc.aut_h);
    }
  }
}

TEST_CASE("some pairs have a nontrivial Wells obstruction") {
  Field f = Field::prime(2);
  auto e = fx::quotient_extension(fx::heisenberg(f), {1, 2});
  SequenceCheck sc = wells_sequence_check(e);
  CHECK(sc.report.ok());
  CHECK(sc.im_k < sc.pairs);
}

TEST_CASE("sign flip in the induced cocycle breaks exactness over F3") {
  Field f = Field::prime(3);
  auto e = fx::quotient_extension(fx::heisenberg(f), {2});
  SequenceCheck good = wells_sequence_check(e);
  CHECK(good.report.ok());
  SequenceCheck bad = wells_sequence_check(e, kDefaultBudget, Exec::parallel, testgen::sign_flipped_induced);
  CHECK(bad.report.failed("KerW=ImK"));

  Field f2 = Field::prime(2);
  auto e2 = fx::quotient_extension(fx::heisenberg(f2), {2});
  CHECK(wells_sequence_check(e2, kDefaultBudget, Exec::parallel, testgen::sign_flipped_induced).report.ok());
}

TEST_CASE("K is a homomorphism and S inverts phi |-> gamma_phi") {
  Field f = Field::prime(3);
  auto e = fx::quotient_extension(fx::heisenberg(f), {2});
  const auto aut = enumerate_aut_h(e);
  for (std::size_t a = 0; a < aut.size(); a += 5)
    for (std::size_t b = 0; b < aut.size(); b += 7) {
      AutoPair ka = restriction_map_K(e, aut[a]), kb = restriction_map_K(e, aut[b]);
      AutoPair kab = restriction_map_K(e, aut[a] * aut[b]);
      CHECK(kab.alpha == ka.alpha * kb.alpha);
      CHECK(kab.beta == ka.beta * kb.beta);
    }
  for (const auto& phi : z1_nab(extract_cocycle(e))) {
    Matrix gm = z1_automorphism(e, phi);
    CHECK(verify_automorphism(e.total, gm).ok());
    CHECK(restriction_map_K(e, gm) == identity_pair(e));
    CHECK(s_map(e, gm) == phi);
  }
}

TEST_CASE("restriction map rejects maps that move h") {
  Field f = Field::prime(2);
  auto e = fx::quotient_extension(direct_sum(fx::abelian(f, 1), fx::abelian(f, 1)), {1});
  Matrix swap(f, 2, 2);
  swap.at(0, 1) = f.one();
  swap.at(1, 0) = f.one();
  CHECK_FALSE(preserves_h(e, swap));
  CHECK_THROWS_AS(restriction_map_K(e, swap), NotHPreserving);
  CHECK_THROWS_AS(check_extensible(e, {Matrix::identity(f, 2), Matrix::identity(f, 1)}, Matrix(f, 1, 1)),
                  DimensionMismatch);
}

TEST_CASE("enumeration budgets") {
  Field f = Field::prime(3);
  auto e = fx::quotient_extension(direct_sum(fx::abelian(f, 2), fx::abelian(f, 2)), {2, 3});
  CHECK_THROWS_AS(enumerate_automorphisms(e.total), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_aut_h(e, 1000), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_automorphisms(fx::abelian(Field::rationals(), 1)), InvalidInput);
  auto w = wells_map(e, identity_pair(e), 1);
  CHECK(w.status == WellsObstruction::Status::trivial);  // linear path needs no budget
}

TEST_CASE("serial and parallel enumeration agree") {
  Field f = Field::prime(2);
  for (const auto& e : testgen::small_extensions(f)) {
    if (!small_enough(e)) continue;
    CHECK(enumerate_aut_h(e, kDefaultBudget, Exec::serial) == enumerate_aut_h(e, kDefaultBudget, Exec::parallel));
    CHECK(wells_sequence_check(e, kDefaultBudget, Exec::serial).report.ok());
  }
}

TEST_CASE("Z1_nab is Z1 of the representation in the abelian case") {
  for (Field f : {Field::prime(2), Field::prime(3)}) {
    for (const auto& e : testgen::small_extensions(f)) {
      AbelianMode m;
      try {
        m = abelian_mode(e);
      } catch (const NotAbelianExtension&) {
        continue;
      }
      const auto z = z1_nab(m.cocycle);
      std::uint64_t direct = 0;
      const std::uint64_t n = candidate_count(f, e.g.dim * e.h.dim, kDefaultBudget);
      for (std::uint64_t k = 0; k < n; ++k) {
        Matrix phi = hom_candidate(f, e.h.dim, e.g.dim, k);
        CochainPair d = delta1(m.rep, phi.to_multimap());
        if (d.f.is_zero() && d.g.is_zero()) ++direct;
      }
      CHECK(z.size() == direct);
    }
  }
}

TEST_CASE("abelian mode: rho = T = 0 and gating") {
  Field f = Field::prime(3);
  int abelian = 0;
  for (const auto& e : testgen::small_extensions(f)) {
    const NonAbCocycle c = extract_cocycle(e);
    const bool is_ab = c.h.binary.is_zero() && c.h.ternary.is_zero() && c.rho.is_zero() && c.tee.is_zero();
    if (!is_ab) {
      CHECK_THROWS_AS(abelian_mode(e), NotAbelianExtension);
      continue;
    }
    ++abelian;
    AbelianMode m = abelian_mode(e);
    CHECK(m.cocycle.rho.is_zero());
    CHECK(m.cocycle.tee.is_zero());
    CHECK(verify_representation(m.rep).ok());
  }
  CHECK(abelian > 3);
}

TEST_CASE("abelian mode agrees with the general machinery over F2 and F3") {
  for (Field f : {Field::prime(2), Field::prime(3)}) {
    for (const auto& e : testgen::small_extensions(f)) {
      if (!small_enough(e)) continue;
      AbelianMode m;
      try {
        m = abelian_mode(e);
      } catch (const NotAbelianExtension&) {
        continue;
      }
      const NonAbCocycle& c = m.cocycle;
      const std::uint64_t nphi = candidate_count(f, e.g.dim * e.h.dim, kDefaultBudget);
      for (const auto& a : enumerate_automorphisms(e.g))
        for (const auto& b : enumerate_automorphisms(e.h)) {
          const AutoPair pr{a, b};
          const bool compatible = compatible_pair(m, pr).ok();
          if (compatible) CHECK(dee_compatibility(m, pr).ok());
          for (std::uint64_t k = 0; k < nphi; ++k) {
            Matrix phi = hom_candidate(f, e.h.dim, e.g.dim, k);
            CHECK(check_extensible(c, pr, phi).ok() == check_extensible_abelian(m, pr, phi).ok());
          }
          auto general = find_extending_phi(c, pr);
          auto linear = solve_extending_phi_abelian(m, pr);
          CHECK((general.status == ExtensibilitySearch::Status::extensible) == linear.has_value());
          AbelianWells aw = abelian_wells(m, pr);
          const bool trivial = wells_map(e, pr).status == WellsObstruction::Status::trivial;
          CHECK((aw.compatible && aw.trivial) == trivial);
          if (!compatible) CHECK_FALSE(trivial);
        }
    }
  }
}

TEST_CASE("abelian mode over Q") {
  Field q = Field::rationals();
  const LYAlgebra aff = fx::affine_line(q);
  const std::vector<ExtensionSpec> cases = {
      fx::quotient_extension(semidirect_product(adjoint(aff)), {2, 3}),
      fx::quotient_extension(direct_sum(aff, fx::abelian(q, 1)), {2}),
      build_extension(fx::semidirect_cocycle(Representation(aff, 1))),
  };
  std::vector<Matrix> alphas;
  for (long a : {1, 2, -1, 3})
    for (long b : {0, 1, -2}) alphas.push_back(affine_auto(q, a, b));
  int trivial = 0, nontrivial = 0;
  for (const auto& e : cases) {
    AbelianMode m = abelian_mode(e);
    std::vector<Matrix> betas;
    if (e.h.dim == 2)
      betas = alphas;
    else
      for (long l : {1, 2, -3}) betas.push_back(q.from_int(l) * Matrix::identity(q, 1));
    for (const auto& a : alphas) {
      REQUIRE(verify_automorphism(aff, a).ok());
      for (const auto& b : betas) {
        if (!verify_automorphism(e.h, b).ok()) continue;
        const AutoPair pr{a, b};
        auto general = find_extending_phi(m.cocycle, pr);
        CHECK(general.status != ExtensibilitySearch::Status::undecided);
        auto linear = solve_extending_phi_abelian(m, pr);
        CHECK((general.status == ExtensibilitySearch::Status::extensible) == linear.has_value());
        if (linear) {
          CHECK(check_extensible(m.cocycle, pr, *linear).ok());
          CHECK(verify_automorphism(e.total, lift_automorphism(e, pr, *linear)).ok());
        }
        AbelianWells aw = abelian_wells(m, pr);
        auto w = wells_map(e, pr);
        CHECK((aw.compatible && aw.trivial) == (w.status == WellsObstruction::Status::trivial));
        (aw.compatible && aw.trivial ? trivial : nontrivial)++;
      }
    }
  }
  CHECK(trivial > 0);
  CHECK(nontrivial > 0);
}
