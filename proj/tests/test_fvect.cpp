#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scope/fvect.hpp"

using namespace scope::fvect;
using scope::Scalar;

namespace {

BasisElem atom(const std::string& l) { return BasisElem{{atom_part(l)}}; }
BasisElem subset(std::vector<std::string> m) {
  return BasisElem{{subset_part(std::move(m))}};
}

Vector random_vector(std::mt19937& rng, const Space& s) {
  Vector v = zero_vector(s);
  for (const auto& b : enumerate_basis(s)) {
    int c = static_cast<int>(rng() % 7) - 3;
    if (c != 0) v.coeffs[b] = c;
  }
  return v;
}

// the naive double loop the algebraic ops are checked against
Vector naive_tensor(const Vector& v, const Vector& w) {
  Vector out = zero_vector(tensor_space(v.space, w.space));
  for (const auto& [b1, c1] : v.coeffs)
    for (const auto& [b2, c2] : w.coeffs) {
      Scalar c = c1 * c2;
      if (scope::scalar_nonzero(c)) out.coeffs[pair_elem(b1, b2)] = c;
    }
  return out;
}

Scalar naive_inner(const Vector& v, const Vector& w) {
  Scalar out = 0;
  for (const auto& b : enumerate_basis(v.space)) out += v.at(b) * w.at(b);
  return out;
}

}  // namespace

TEST_CASE("space dimensions and basis enumeration") {
  Universe u{"a", "b", "c"};
  CHECK(atom_space(u).dim() == 3);
  CHECK(power_space(u).dim() == 8);
  CHECK(tensor_space(atom_space(u), power_space(u)).dim() == 24);
  CHECK(unit_space().dim() == 1);
  CHECK(scalar_space().dim() == 1);
  CHECK(enumerate_basis(unit_space()) == std::vector<BasisElem>{unit_elem()});

  auto basis = enumerate_basis(power_space({"a", "b"}));
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == subset({}));
  CHECK(basis[1] == subset({"a"}));
  CHECK(basis[2] == subset({"b"}));
  CHECK(basis[3] == subset({"a", "b"}));

  Universe big;
  for (int i = 0; i < 17; ++i) big.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS(enumerate_basis(power_space(big)), enumeration_cap);
}

TEST_CASE("tensor of vectors") {
  Universe u{"a", "b"};
  Space p = power_space(u);
  Vector va = basis_vector(p, subset({"a"}));
  Vector vb = basis_vector(p, subset({"b"}));

  Vector t = tensor(va, vb);
  CHECK(t.space == tensor_space(p, p));
  CHECK(t.at(pair_elem(subset({"a"}), subset({"b"}))) == Scalar(1));
  CHECK(t.coeffs.size() == 1);

  Space n = atom_space(u);
  Vector two_a = scale(2, basis_vector(n, atom("a")));
  Vector three_b = scale(3, basis_vector(n, atom("b")));
  CHECK(tensor(two_a, three_b).at(pair_elem(atom("a"), atom("b"))) ==
        Scalar(6));

  Vector sum = add(basis_vector(n, atom("a")), basis_vector(n, atom("b")));
  Vector vc = basis_vector(n, atom("a"));
  Vector expanded = tensor(sum, vc);
  CHECK(expanded == naive_tensor(sum, vc));
  CHECK(expanded.at(pair_elem(atom("a"), atom("a"))) == Scalar(1));
  CHECK(expanded.at(pair_elem(atom("b"), atom("a"))) == Scalar(1));

  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    Vector v = random_vector(rng, n);
    Vector w = random_vector(rng, p);
    CHECK(tensor(v, w) == naive_tensor(v, w));
  }
}

TEST_CASE("inner product") {
  Universe u{"a", "b"};
  Space p = power_space(u);
  CHECK(inner(basis_vector(p, subset({"a", "b"})),
              basis_vector(p, subset({"a", "b"}))) == Scalar(1));
  CHECK(inner(basis_vector(p, subset({"a"})),
              basis_vector(p, subset({"a", "b"}))) == Scalar(0));

  Space n = atom_space(u);
  Vector v = add(scale(2, basis_vector(n, atom("a"))),
                 basis_vector(n, atom("b")));
  Vector w = add(basis_vector(n, atom("a")),
                 scale(3, basis_vector(n, atom("b"))));
  CHECK(inner(v, w) == Scalar(5));
  CHECK(inner(v, w) == naive_inner(v, w));

  CHECK_THROWS_AS(inner(basis_vector(n, atom("a")),
                        basis_vector(p, subset({"a"}))),
                  space_mismatch);
}

TEST_CASE("bilinearity of tensor and inner") {
  Universe u{"a", "b"};
  Space n = atom_space(u);
  std::mt19937 rng(4);
  for (int i = 0; i < 30; ++i) {
    Vector v = random_vector(rng, n);
    Vector w = random_vector(rng, n);
    Vector x = random_vector(rng, n);
    Scalar c = static_cast<int>(rng() % 5) - 2;
    CHECK(tensor(add(v, w), x) == add(tensor(v, x), tensor(w, x)));
    CHECK(tensor(x, scale(c, v)) == scale(c, tensor(x, v)));
    CHECK(inner(add(v, w), x) == inner(v, x) + inner(w, x));
    CHECK(inner(x, scale(c, v)) == c * inner(x, v));
  }
}

TEST_CASE("epsilon and eta") {
  Universe u{"a", "b"};
  Space n = atom_space(u);

  Vector in = add(tensor(basis_vector(n, atom("a")), basis_vector(n, atom("a"))),
                  tensor(basis_vector(n, atom("a")), basis_vector(n, atom("b"))));
  Vector out = epsilon(n).apply(in);
  CHECK(out.at(unit_elem()) == Scalar(1));

  Vector caps = eta(n).apply(scalar_vector(1));
  Vector expected =
      add(tensor(basis_vector(n, atom("a")), basis_vector(n, atom("a"))),
          tensor(basis_vector(n, atom("b")), basis_vector(n, atom("b"))));
  CHECK(caps == expected);

  // yanking on a basis vector
  LinearMap yank = compose(map_tensor(identity(n), epsilon(n)),
                           map_tensor(eta(n), identity(n)));
  CHECK(yank.apply(basis_vector(n, atom("a"))) == basis_vector(n, atom("a")));
}

TEST_CASE("powerset bialgebra generators") {
  Universe u{"a", "b", "c"};
  Space p = power_space(u);

  Vector ab = basis_vector(p, subset({"a", "b"}));
  CHECK(delta_map(u).apply(ab) ==
        tensor(basis_vector(p, subset({"a", "b"})),
               basis_vector(p, subset({"a", "b"}))));

  Vector bc = basis_vector(p, subset({"b", "c"}));
  CHECK(mu_map(u).apply(tensor(ab, bc)) == basis_vector(p, subset({"b"})));

  CHECK(iota_map(u).apply(ab).at(unit_elem()) == Scalar(1));

  Universe u2{"a", "b"};
  CHECK(zeta_map(u2).apply(scalar_vector(1)) ==
        basis_vector(power_space(u2), subset({"a", "b"})));
}

TEST_CASE("quantifier maps") {
  Universe u{"a", "b"};
  Space p = power_space(u);

  Vector q = quant_all(u).apply(basis_vector(p, subset({"a"})));
  CHECK(q == add(basis_vector(p, subset({"a"})),
                 basis_vector(p, subset({"a", "b"}))));

  CHECK(quant_all(u).apply(basis_vector(p, subset({"a", "b"}))) ==
        basis_vector(p, subset({"a", "b"})));

  CHECK(quant_some(u).apply(basis_vector(p, subset({}))).is_zero());

  // linear extension
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Vector v = random_vector(rng, p);
    Vector w = random_vector(rng, p);
    for (const auto& m : {quant_all(u), quant_some(u)}) {
      CHECK(m.apply(add(v, w)) == add(m.apply(v), m.apply(w)));
      CHECK(m.apply(scale(3, v)) == scale(3, m.apply(v)));
    }
  }
}

TEST_CASE("swap") {
  Universe u{"a", "b"};
  Space n = atom_space(u);
  Space p = power_space(u);

  Vector v = tensor(basis_vector(n, atom("a")), basis_vector(p, subset({"b"})));
  CHECK(swap_map(n, p).apply(v) ==
        tensor(basis_vector(p, subset({"b"})), basis_vector(n, atom("a"))));

  Vector sym = tensor(basis_vector(p, subset({"a"})),
                      basis_vector(p, subset({"a"})));
  CHECK(swap_map(p, p).apply(sym) == sym);

  std::mt19937 rng(6);
  LinearMap invol = compose(swap_map(n, p), swap_map(p, n));
  for (int i = 0; i < 20; ++i) {
    Vector w = random_vector(rng, tensor_space(p, n));
    CHECK(invol.apply(w) == w);
  }
}

TEST_CASE("compose, map_tensor and identity") {
  Universe u{"a", "b"};
  Space n = atom_space(u);

  // compose(identity, f) = f
  LinearMap f = quant_all(u);  // arbitrary nontrivial map
  CHECK(map_equal(compose(identity(power_space(u)), f), f));
  CHECK(map_equal(compose(f, identity(power_space(u))), f));

  // explicit 2x2 actions compose to the matrix product:
  // f = [[1,2],[3,4]], g = [[0,1],[1,0]] (columns indexed a, b)
  auto col = [&](Scalar ca, Scalar cb) {
    return add(scale(ca, basis_vector(n, atom("a"))),
               scale(cb, basis_vector(n, atom("b"))));
  };
  LinearMap fm{n, n, [&, col](const BasisElem& b) {
                 return b == atom("a") ? col(1, 3) : col(2, 4);
               }};
  LinearMap gm{n, n, [&, col](const BasisElem& b) {
                 return b == atom("a") ? col(0, 1) : col(1, 0);
               }};
  // g.f: column a -> g(1,3) = 1*(0,1)+3*(1,0) = (3,1)
  Vector gfa = compose(gm, fm).apply(basis_vector(n, atom("a")));
  CHECK(gfa == col(3, 1));
  Vector gfb = compose(gm, fm).apply(basis_vector(n, atom("b")));
  CHECK(gfb == col(4, 2));

  CHECK_THROWS_AS(compose(fm, epsilon(n)), space_mismatch);

  // yanking as a map equality (dim 2 and 4)
  for (const Space& s : {n, tensor_space(n, n)}) {
    LinearMap lhs = compose(map_tensor(identity(s), epsilon(s)),
                            map_tensor(eta(s), identity(s)));
    CHECK(map_equal(lhs, identity(s)));
  }
}

TEST_CASE("zero pruning and scalar vectors") {
  Universe u{"a", "b"};
  Space n = atom_space(u);
  Vector v = basis_vector(n, atom("a"));
  Vector neg = scale(-1, v);
  CHECK(add(v, neg).is_zero());
  CHECK(add(v, neg).coeffs.empty());
  CHECK(scale(0, v).coeffs.empty());
  CHECK(scalar_vector(5).at(unit_elem()) == Scalar(5));
  CHECK(scalar_vector(5).space == scalar_space());
}
