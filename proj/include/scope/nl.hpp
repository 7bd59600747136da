#ifndef SCOPE_NL_HPP
#define SCOPE_NL_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "scope/fvect.hpp"
#include "scope/syntax.hpp"

namespace scope::nl {

using syntax::TypeRef;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-typed proof node; `path` walks premise positions from the root.
struct ill_typed : error {
  std::string path;
  ill_typed(const std::string& msg, std::string p)
      : error(msg + " [at " + (p.empty() ? "root" : p) + "]"),
        path(std::move(p)) {}
};

enum class Rule { Id, Comp, R1, R2, R1inv, R2inv };

struct Proof;
using ProofRef = std::shared_ptr<const Proof>;

struct Proof {
  Rule rule;
  TypeRef type;       // Id only
  ProofRef sub;       // R1/R2/R1inv/R2inv
  ProofRef g, f;      // Comp: g after f
};

ProofRef id_proof(TypeRef a);
ProofRef comp(ProofRef g, ProofRef f);
ProofRef r1(ProofRef f);      // A*B -> C  gives  A -> C/B
ProofRef r2(ProofRef f);      // A*B -> C  gives  B -> A\C
ProofRef r1inv(ProofRef g);   // A -> C/B  gives  A*B -> C
ProofRef r2inv(ProofRef g);   // B -> A\C  gives  A*B -> C

struct Endpoints {
  TypeRef source, target;
};

// Recomputes and validates the endpoints of every node.
Endpoints check(const ProofRef& p);

// The derived monotonicity combinators, unfolded literally into the
// residuation calculus.
ProofRef mono_tensor(const ProofRef& f, const ProofRef& g);  // A*B -> C*D
ProofRef mono_over(const ProofRef& g, const ProofRef& f);    // B/C -> D/A
ProofRef mono_under(const ProofRef& f, const ProofRef& g);   // C\B -> A\D

// Homomorphic space assignment: atoms through I0, every connective to the
// tensor of its operand spaces in display order.
fvect::Space space_of(const TypeRef& t,
                      const std::map<std::string, fvect::Space>& I0);

// Residuation rules become the four epsilon/eta constructions.
fvect::LinearMap interpret(const ProofRef& p,
                           const std::map<std::string, fvect::Space>& I0);

// interpret(p) applied to the tensor of the word vectors; p's source space
// must equal the tensored word spaces.
fvect::Vector sentence_value(const ProofRef& p,
                             const std::map<std::string, fvect::Space>& I0,
                             const std::vector<fvect::Vector>& words);

}  // namespace scope::nl

#endif
