#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scope/nl.hpp"

using namespace scope::nl;
using scope::fvect::BasisElem;
using scope::fvect::Space;
using scope::fvect::Vector;
using scope::Scalar;
using scope::syntax::make_atom;
using scope::syntax::make_over;
using scope::syntax::make_tensor;
using scope::syntax::make_under;
using scope::syntax::parse_type;
using scope::syntax::print_type;
using scope::syntax::type_equal;
using scope::syntax::TypeRef;

namespace {

std::string endpoints_str(const ProofRef& p) {
  Endpoints e = check(p);
  return print_type(e.source) + " -> " + print_type(e.target);
}

BasisElem atom(const std::string& l) {
  return BasisElem{{scope::fvect::atom_part(l)}};
}

TypeRef random_type(std::mt19937& rng, int depth) {
  static const std::vector<std::string> atoms{"np", "n", "s"};
  if (depth <= 0 || rng() % 3 == 0)
    return make_atom(atoms[rng() % atoms.size()]);
  TypeRef a = random_type(rng, depth - 1);
  TypeRef b = random_type(rng, depth - 1);
  switch (rng() % 3) {
    case 0: return make_tensor(a, b);
    case 1: return make_under(a, b);
    default: return make_over(a, b);
  }
}

}  // namespace

TEST_CASE("check computes endpoints") {
  TypeRef likes = parse_type("(np\\s)/np");
  CHECK(endpoints_str(id_proof(likes)) == "(np\\s)/np -> (np\\s)/np");

  ProofRef transitive = r2inv(r1inv(id_proof(likes)));
  CHECK(endpoints_str(transitive) == "np*(((np\\s)/np)*np) -> s");

  TypeRef a = parse_type("np*n");
  CHECK(endpoints_str(comp(id_proof(a), id_proof(a))) == "np*n -> np*n");
}

TEST_CASE("check rejects ill-typed proofs with a path") {
  CHECK_THROWS_AS(check(comp(id_proof(make_atom("np")),
                             id_proof(make_atom("n")))),
                  ill_typed);
  CHECK_THROWS_AS(check(r1(id_proof(make_atom("np")))), ill_typed);
  CHECK_THROWS_AS(check(r1inv(id_proof(make_atom("np")))), ill_typed);
  CHECK_THROWS_AS(check(r2inv(id_proof(parse_type("np/n")))), ill_typed);

  try {
    check(comp(id_proof(make_atom("np")),
               comp(id_proof(make_atom("np")), id_proof(make_atom("n")))));
    FAIL("expected ill_typed");
  } catch (const ill_typed& e) {
    CHECK(!e.path.empty());
  }
}

TEST_CASE("monotonicity combinators derive the right endpoints") {
  TypeRef np = make_atom("np"), n = make_atom("n"), s = make_atom("s");

  CHECK(endpoints_str(mono_tensor(id_proof(np), id_proof(n))) ==
        "np*n -> np*n");
  CHECK(endpoints_str(mono_over(id_proof(np), id_proof(n))) ==
        "np/n -> np/n");
  CHECK(endpoints_str(mono_under(id_proof(np), id_proof(s))) ==
        "np\\s -> np\\s");

  // quantified over random endpoint types, with non-axiom premises
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    TypeRef a = random_type(rng, 2);
    TypeRef b = random_type(rng, 2);
    ProofRef f = comp(id_proof(a), id_proof(a));
    ProofRef g = id_proof(b);

    Endpoints te = check(mono_tensor(f, g));
    CHECK(type_equal(te.source, make_tensor(a, b)));
    CHECK(type_equal(te.target, make_tensor(a, b)));

    Endpoints oe = check(mono_over(f, g));
    CHECK(type_equal(oe.source, make_over(a, b)));
    CHECK(type_equal(oe.target, make_over(a, b)));

    Endpoints ue = check(mono_under(g, f));
    CHECK(type_equal(ue.source, make_under(b, a)));
    CHECK(type_equal(ue.target, make_under(b, a)));
  }

  CHECK_THROWS_AS(check(mono_tensor(
                      comp(id_proof(np), id_proof(n)), id_proof(s))),
                  ill_typed);
}

TEST_CASE("interpret basics and residuation round trips") {
  std::map<std::string, Space> I0{
      {"np", scope::fvect::atom_space({"u", "v"})},
      {"n", scope::fvect::atom_space({"k", "l", "m"})},
      {"s", scope::fvect::atom_space({"z"})}};

  CHECK(scope::fvect::map_equal(interpret(id_proof(make_atom("np")), I0),
                                scope::fvect::identity(I0.at("np"))));

  TypeRef ab = parse_type("np*n");
  ProofRef f = mono_tensor(id_proof(make_atom("np")), id_proof(make_atom("n")));
  CHECK(scope::fvect::map_equal(interpret(f, I0),
                                scope::fvect::identity(space_of(ab, I0))));
  CHECK(scope::fvect::map_equal(interpret(r1inv(r1(f)), I0),
                                interpret(f, I0)));
  CHECK(scope::fvect::map_equal(interpret(r2inv(r2(f)), I0),
                                interpret(f, I0)));
}

TEST_CASE("sentence_value reproduces the transitive-sentence coefficient") {
  // 4-dim noun space; verb = sum_ij c_ij |n_i> (x) 1 (x) |n_j>
  Space N = scope::fvect::atom_space({"n1", "n2", "n3", "n4"});
  std::map<std::string, Space> I0{{"np", N}, {"s", scope::fvect::scalar_space()}};
  TypeRef likes = parse_type("(np\\s)/np");
  ProofRef p = r2inv(r1inv(id_proof(likes)));

  std::mt19937 rng(8);
  for (int round = 0; round < 20; ++round) {
    std::map<std::pair<int, int>, Scalar> c;
    Vector verb = scope::fvect::zero_vector(space_of(likes, I0));
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        Scalar w(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 5));
        c[{i, j}] = w;
        Vector term = scope::fvect::tensor(
            scope::fvect::basis_vector(N, atom("n" + std::to_string(i))),
            scope::fvect::tensor(
                scope::fvect::scalar_vector(w),
                scope::fvect::basis_vector(N, atom("n" + std::to_string(j)))));
        verb = scope::fvect::add(verb, term);
      }
    Vector john = scope::fvect::basis_vector(N, atom("n1"));
    Vector mary = scope::fvect::basis_vector(N, atom("n3"));
    Vector out = sentence_value(p, I0, {john, verb, mary});
    CHECK(out.space == scope::fvect::scalar_space());
    CHECK(out.at(scope::fvect::unit_elem()) == c[{1, 3}]);
  }

  // zero verb tensor gives 0
  Vector zero_verb = scope::fvect::zero_vector(space_of(likes, I0));
  CHECK(sentence_value(p, I0,
                       {scope::fvect::basis_vector(N, atom("n1")), zero_verb,
                        scope::fvect::basis_vector(N, atom("n3"))})
            .is_zero());

  // 2-dim permutation-weight case picks out c_21
  Space N2 = scope::fvect::atom_space({"n1", "n2"});
  std::map<std::string, Space> J0{{"np", N2},
                                  {"s", scope::fvect::scalar_space()}};
  Vector verb2 = scope::fvect::add(
      scope::fvect::tensor(
          scope::fvect::basis_vector(N2, atom("n1")),
          scope::fvect::tensor(scope::fvect::scalar_vector(1),
                               scope::fvect::basis_vector(N2, atom("n2")))),
      scope::fvect::tensor(
          scope::fvect::basis_vector(N2, atom("n2")),
          scope::fvect::tensor(scope::fvect::scalar_vector(1),
                               scope::fvect::basis_vector(N2, atom("n1")))));
  Vector out2 = sentence_value(p, J0,
                               {scope::fvect::basis_vector(N2, atom("n2")),
                                verb2,
                                scope::fvect::basis_vector(N2, atom("n1"))});
  CHECK(out2.at(scope::fvect::unit_elem()) == Scalar(1));  // c_21 = 1
}
