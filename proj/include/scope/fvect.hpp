#ifndef SCOPE_FVECT_HPP
#define SCOPE_FVECT_HPP

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "scope/scalar.hpp"

namespace scope::fvect {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct space_mismatch : error {
  using error::error;
};

struct enumeration_cap : error {
  using error::error;
};

using Universe = std::vector<std::string>;  // ordered, distinct labels

// Basis-set factor of a space: either the universe itself or its powerset.
struct Factor {
  bool power = false;
  Universe universe;

  bool operator==(const Factor&) const = default;
  auto operator<=>(const Factor&) const = default;
};

// Spaces are kept in strict monoidal normal form: a flat list of atomic
// factors.  The unit and the scalar space are the empty list, and tensoring
// concatenates, so the coherence isomorphisms are identities and the yanking
// and bialgebra equations can be tested as literal map equalities.
struct Space {
  std::vector<Factor> factors;

  bool operator==(const Space&) const = default;
  auto operator<=>(const Space&) const = default;

  std::size_t dim() const;
  std::string str() const;
};

Space atom_space(const Universe& u);
Space power_space(const Universe& u);
Space tensor_space(const Space& a, const Space& b);
Space unit_space();
Space scalar_space();

// One coordinate of a basis element: a universe label for an atom factor, a
// canonically sorted subset for a powerset factor.
struct BasisPart {
  bool is_subset = false;
  std::string label;               // atom case
  std::vector<std::string> subset; // sorted, duplicate-free

  bool operator==(const BasisPart&) const = default;
  auto operator<=>(const BasisPart&) const = default;
};

BasisPart atom_part(const std::string& label);
BasisPart subset_part(std::vector<std::string> members);

struct BasisElem {
  std::vector<BasisPart> parts;

  bool operator==(const BasisElem&) const = default;
  auto operator<=>(const BasisElem&) const = default;

  std::string str() const;
};

BasisElem unit_elem();
BasisElem pair_elem(const BasisElem& a, const BasisElem& b);  // concatenation

// All basis elements of `s` in canonical order.  Powerset factors enumerate
// subsets by increasing bitmask over the universe order; universes larger
// than 16 are a hard error.
std::vector<BasisElem> enumerate_basis(const Space& s);
bool space_contains(const Space& s, const BasisElem& b);

// Sparse vector; zero coefficients are pruned after every operation.
struct Vector {
  Space space;
  std::map<BasisElem, Scalar> coeffs;

  Scalar at(const BasisElem& b) const;
  bool is_zero() const;
  bool operator==(const Vector& o) const;
  std::string str() const;
};

Vector zero_vector(const Space& s);
Vector basis_vector(const Space& s, const BasisElem& b);
Vector scalar_vector(const Scalar& c);  // element of the scalar space

Vector add(const Vector& v, const Vector& w);
Vector scale(const Scalar& c, const Vector& v);
Vector tensor(const Vector& v, const Vector& w);
Scalar inner(const Vector& v, const Vector& w);

// Linear maps are stored as a basis action and composed lazily; matrices are
// never materialized unless a caller enumerates the domain.
struct LinearMap {
  Space domain;
  Space codomain;
  std::function<Vector(const BasisElem&)> action;

  Vector apply(const Vector& v) const;
};

LinearMap identity(const Space& s);
LinearMap compose(const LinearMap& g, const LinearMap& f);  // g after f
LinearMap map_tensor(const LinearMap& f, const LinearMap& g);
LinearMap swap_map(const Space& s1, const Space& s2);

// Compact closure on any finitely based space.
LinearMap epsilon(const Space& s);  // s (x) s -> scalar, delta on the basis
LinearMap eta(const Space& s);      // unit -> s (x) s, the diagonal sum

// Powerset bialgebra on power_space(u).
LinearMap delta_map(const Universe& u);  // |A> -> |A> (x) |A>
LinearMap mu_map(const Universe& u);     // |A> (x) |B> -> |A n B>
LinearMap iota_map(const Universe& u);   // |A> -> 1
LinearMap zeta_map(const Universe& u);   // 1 -> |U>

// Generalized quantifier maps on power_space(u).
LinearMap quant_all(const Universe& u);   // |A> -> sum of supersets of A
LinearMap quant_some(const Universe& u);  // |A> -> sum of B with A n B != {}

// Extensional equality, decided by enumerating the domain basis.
bool map_equal(const LinearMap& f, const LinearMap& g);

}  // namespace scope::fvect

#endif
