#ifndef SCOPE_CPS_HPP
#define SCOPE_CPS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "scope/fvect.hpp"
#include "scope/oracle.hpp"
#include "scope/prover.hpp"
#include "scope/syntax.hpp"

namespace scope::cps {

using syntax::Pol;
using syntax::TypeRef;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct eval_error : error {
  using error::error;
};

// --------------------------------------------------------- type meaning

// Set-level interpretation of types, built from base sets with powerset and
// product.  Powersets of non-enumerable carriers (the continuation position
// over the reals) stay symbolic and are realized as host functions instead
// of materialized bases.
struct SetExpr;
using SetRef = std::shared_ptr<const SetExpr>;

enum class SetKind { Base, Pow, Prod, Reals };

struct SetExpr {
  SetKind kind;
  fvect::Universe universe;  // Base
  SetRef left, right;        // Prod; Pow uses left
};

SetRef base_set(const fvect::Universe& u);
SetRef pow_set(SetRef inner);
SetRef prod_set(SetRef l, SetRef r);
SetRef reals_set();
bool set_equal(const SetRef& a, const SetRef& b);
std::string print_set(const SetRef& s);

// Concrete vector space spanned by the set; throws for symbolic carriers.
fvect::Space to_space(const SetRef& s);

struct SemSpace {
  TypeRef type;
  Pol pol;
  SetRef shape;
};

// Atom interpretation plus polarity bias.
struct Interpretation {
  syntax::PolarityAssignment pa;
  std::map<std::string, SetRef> base;
};

// np -> U, n -> P(U), s -> reals, with np/n positive and s negative.
Interpretation standard_interpretation(const fvect::Universe& u);

// Polarity-driven type interpretation (connective table keyed on the
// polarities of the operands).
SemSpace interpret_type(const TypeRef& t, const Interpretation& I);

// ----------------------------------------------------- expressions / IR

struct SemExpr;
using SemRef = std::shared_ptr<const SemExpr>;

enum class EK { Var, Prim, Tensor, Apply, Lambda, Comprehend, Split };

struct SemExpr {
  EK kind;
  std::string name;        // Var, Prim, Lambda/Comprehend binder, Split source
  std::string left_name;   // Split
  std::string right_name;  // Split
  TypeRef range_type;      // Comprehend
  SemRef a, b;
};

SemRef var_e(std::string name);
SemRef prim_e(std::string key);
SemRef tensor_e(SemRef a, SemRef b);
SemRef apply_e(SemRef fun, SemRef arg);
SemRef lambda_e(std::string name, SemRef body);
SemRef comprehend_e(std::string name, TypeRef range, SemRef body);
// Destructures the pair bound to `source` into `l` and `r` within body.
SemRef split_e(std::string source, std::string l, std::string r, SemRef body);

std::string print_sem(const SemRef& e);
std::string alpha_canonical_sem(const SemRef& e);
bool alpha_equal_sem(const SemRef& a, const SemRef& b);

// Structural recursion over the twelve proof-term clauses.
SemRef compile(const prover::FTermRef& proof);

// --------------------------------------------------------------- values

struct SemValue;
using ValueFn = std::function<SemValue(const SemValue&)>;

enum class VK { Scalar, Vector, Tuple, Func };

struct SemValue {
  VK kind = VK::Scalar;
  Scalar scalar = 0;
  fvect::Vector vec;
  std::vector<SemValue> items;
  ValueFn fn;
};

SemValue scalar_value(Scalar s);
SemValue vector_value(fvect::Vector v);
SemValue tuple_value(std::vector<SemValue> items);
SemValue func_value(ValueFn fn);
SemValue identity_continuation();

Scalar as_scalar(const SemValue& v);

using Env = std::map<std::string, SemValue>;

struct SemLexicon {
  std::map<std::string, SemValue> prims;

  const SemValue& prim(const std::string& key) const;
};

// Registers `every`/`some` (the sigma-prefixed bialgebra pipelines),
// `noun:<P>`, `iv:<P>` per predicate and `tv:<R>` per relation.
SemLexicon build_sem_lexicon(const oracle::Model& model);

SemValue evaluate(const SemRef& e, const Env& env, const SemLexicon& lex,
                  const Interpretation& I);

// Evaluates a compiled reading: binds antecedent variables x0.. to the
// primitives named by `sem_keys` (one per word position), applies the outer
// continuation binder to the identity map.
Scalar eval_reading(const SemRef& term, const std::vector<std::string>& sem_keys,
                    const SemLexicon& lex, const Interpretation& I);

// The single-quantifier pipeline eps . (quant (x) mu) . (delta (x) id)
// applied to |noun> (x) |pred>.
Scalar eval_single_quantified(const oracle::Model& model, oracle::Quant q,
                              const std::set<std::string>& noun_set,
                              const std::set<std::string>& pred_set);

}  // namespace scope::cps

#endif
