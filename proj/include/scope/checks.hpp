#ifndef SCOPE_CHECKS_HPP
#define SCOPE_CHECKS_HPP

#include <string>
#include <utility>
#include <vector>

#include "scope/cps.hpp"
#include "scope/nl.hpp"
#include "scope/oracle.hpp"
#include "scope/prover.hpp"

namespace scope::checks {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Suite = std::vector<CheckResult>;

bool all_pass(const Suite& s);

// Snake equations plus naturality of the cup/cap under the symmetry, as
// exact map equalities, on the atom and powerset spaces of the given size.
Suite suite_yanking(std::size_t universe_size);

// Monoid laws for (mu, zeta) and comonoid laws for (delta, iota).
Suite suite_monoid(std::size_t universe_size, bool fault_mu_union = false);

// The four interaction axioms between the two structures.
//
// The `fault_mu_union` hook replaces the product by union in both this
// suite and the monoid suite.  Union with copy still satisfies all four
// interaction axioms, but it has the wrong unit: the law
// mu . (zeta (x) id) = id fails on any proper subset, so the fault is
// caught by the monoid suite.
Suite suite_bialgebra(std::size_t universe_size, bool fault_mu_union = false);

// interpret(R1inv(R1 f)) = interpret(f) and the three siblings, on randomly
// generated well-typed proofs with tensor-shaped sources.
Suite suite_residuation(unsigned seed, std::size_t proof_count);

// The doubly quantified sentence, proved once and evaluated against the
// set-theoretic oracle on every model with |U| <= max_universe and 0/1
// verb weights.
Suite suite_oracle(std::size_t max_universe);

// Inverse-scope truth implies direct-scope truth on nonempty predicates.
Suite suite_entailment(std::size_t max_universe);

// Shared machinery for the doubly quantified example sentence
// "every student likes some teacher".
struct TwoQuantPipeline {
  syntax::Lexicon lex;
  std::vector<std::string> words;
  std::vector<prover::FTermRef> proofs;  // exactly two
  std::vector<cps::SemRef> terms;        // compiled, same order
  std::vector<std::string> sem_keys;     // per word position
  int direct_index = -1;                 // proof index of the surface reading

  // Proves the sentence, compiles both readings and pins down which proof
  // is the surface (forall-exists) reading using a model where the two
  // readings provably differ.
  static TwoQuantPipeline build();

  // (direct-scope scalar, inverse-scope scalar) on `m`.
  std::pair<Scalar, Scalar> evaluate(const oracle::Model& m) const;
};

// The model on which the two scope readings come apart: reading 1 is true,
// reading 2 is false.
oracle::Model divergence_witness();

}  // namespace scope::checks

#endif
