#ifndef SCOPE_PROVER_HPP
#define SCOPE_PROVER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scope/syntax.hpp"

namespace scope::prover {

using syntax::Lexicon;
using syntax::PolarityAssignment;
using syntax::TypeRef;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct limit_exceeded : error {
  using error::error;
};

struct check_error : error {
  using error::error;
};

// Antecedent structure: binary bullet tree whose leaves are labelled
// hypotheses or the (at most one) focused formula.
enum class SK { Leaf, Focus, Bullet };

struct Struct;
using StructRef = std::shared_ptr<const Struct>;

struct Struct {
  SK kind;
  std::string var;  // Leaf
  TypeRef type;     // Leaf, Focus
  StructRef left, right;
};

StructRef leaf(std::string var, TypeRef type);
StructRef focus_leaf(TypeRef type);
StructRef bullet(StructRef l, StructRef r);

struct Succedent {
  bool focused = false;
  std::string covar;  // when not focused
  TypeRef type;
};

struct Sequent {
  StructRef antecedent;
  Succedent succedent;
};

bool struct_equal(const StructRef& a, const StructRef& b);
bool sequent_equal(const Sequent& a, const Sequent& b);
std::string print_struct(const StructRef& s);
std::string print_sequent(const Sequent& s);

// Labelled derivations of the focused calculus.  Rule spellings follow the
// harpoon notation: FocL = left focus, DefocL = left defocus, DefocR =
// right defocus, FocR = right focus.
enum class FRule {
  Ax, CoAx, FocL, DefocL, DefocR, FocR,
  OverL, OverR, TensorL, TensorR, UnderL, UnderR
};

struct FTerm;
using FTermRef = std::shared_ptr<const FTerm>;

struct FTerm {
  FRule rule;
  TypeRef type;            // Ax, CoAx, FocL
  std::string v1, v2, v3;  // rule-dependent (co)variable slots
  FTermRef m, n;
};

FTermRef ax(TypeRef type, std::string var);
FTermRef coax(TypeRef type, std::string covar);
FTermRef foc_l(FTermRef m, std::string var, TypeRef type);
FTermRef defoc_l(FTermRef m, std::string var);
FTermRef defoc_r(FTermRef m, std::string covar);
FTermRef foc_r(FTermRef m, std::string covar);
FTermRef over_l(FTermRef m, FTermRef n);
FTermRef over_r(FTermRef m, std::string var, std::string covar_in,
                std::string covar_out);
FTermRef tensor_l(FTermRef m, std::string var1, std::string var2,
                  std::string var_z);
FTermRef tensor_r(FTermRef m, FTermRef n);
FTermRef under_l(FTermRef m, FTermRef n);
FTermRef under_r(FTermRef m, std::string var, std::string covar_in,
                 std::string covar_out);

std::string term_str(const FTermRef& t);

// Alpha-equivalence: binders renamed in traversal order, then compared.
std::string alpha_canonical(const FTermRef& t);
bool alpha_equal(const FTermRef& a, const FTermRef& b);

// Exhaustive backward search.  Returns every focused derivation of `seq`,
// deduplicated up to alpha-equivalence, in deterministic order: rules in
// FRule order, leftmost focus position first, left premise explored first.
// Throws limit_exceeded when more than `limit` proofs exist.
std::vector<FTermRef> prove_all(const Sequent& seq,
                                const PolarityAssignment& pa,
                                std::size_t limit = 64);

// Independent replay checker: synthesizes the conclusion of `t` bottom-up,
// validating the rule schema, the polarity discipline and the single-focus
// invariant at every node.  Throws check_error on violation.
Sequent conclusion_of(const FTermRef& t, const PolarityAssignment& pa);
bool validate(const FTermRef& t, const Sequent& expected,
              const PolarityAssignment& pa);

// Word-position bracketing of the antecedent.
struct Bracket;
using BracketRef = std::shared_ptr<const Bracket>;
struct Bracket {
  int pos = -1;  // >= 0 for a leaf
  BracketRef left, right;
};

// First two words grouped, remainder right-branching.
BracketRef default_bracketing(std::size_t n);
// "((1 2)(3 (4 5)))" with 1-based positions, each used exactly once.
BracketRef parse_brackets(const std::string& spec, std::size_t n);

// One sequent per combination of lexical type choices; antecedent variables
// x0, x1, ... left to right, succedent the goal type in focus.
std::vector<Sequent> sentence_sequent(const std::vector<std::string>& words,
                                      const Lexicon& lex,
                                      const BracketRef& bracketing);

// Indented inference-tree text; premises above their rule, root line last.
std::string render(const FTermRef& t, const PolarityAssignment& pa);

}  // namespace scope::prover

#endif
