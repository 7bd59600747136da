#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scope/oracle.hpp"

using namespace scope::oracle;
using scope::Scalar;

namespace {

Model tri(std::map<std::pair<std::string, std::string>, Scalar> likes) {
  Model m;
  m.universe = {"a", "b", "c"};
  m.predicates["student"] = {"a", "b"};
  m.predicates["teacher"] = {"c"};
  m.relations["likes"] = std::move(likes);
  return m;
}

}  // namespace

TEST_CASE("model text format") {
  Model m = parse_model(
      "# comment\n"
      "universe: a b c\n"
      "pred student: a b\n"
      "pred empty:\n"
      "rel likes: a c 1.0\n"
      "rel likes: b c 1/2\n"
      "rel likes: a b 0\n");
  CHECK(m.universe == std::vector<std::string>{"a", "b", "c"});
  CHECK(m.predicate("student") == std::set<std::string>{"a", "b"});
  CHECK(m.predicate("empty").empty());
  CHECK(m.relation_weight("likes", "a", "c") == Scalar(1));
  CHECK(m.relation_weight("likes", "b", "c") == Scalar(1, 2));
  CHECK(m.relation_weight("likes", "a", "b") == Scalar(0));  // explicit zero
  CHECK(m.relation_weight("likes", "c", "c") == Scalar(0));  // missing pair

  CHECK_THROWS_AS(m.predicate("nope"), error);
  CHECK_THROWS_AS(m.relation_weight("nope", "a", "b"), error);

  CHECK_THROWS_AS(parse_model("pred p: a\n"), error);           // no universe
  CHECK_THROWS_AS(parse_model("universe: a a\n"), error);       // duplicate
  CHECK_THROWS_AS(parse_model("universe: a\npred p: z\n"), error);
  CHECK_THROWS_AS(parse_model("universe: a\nrel r: a z 1\n"), error);
  CHECK_THROWS_AS(parse_model("universe: a\nfoo: a\n"), error);
}

TEST_CASE("truth_direct") {
  CHECK(truth_direct(tri({{{"a", "c"}, 1}, {{"b", "c"}, 1}}), "student",
                     "likes", "teacher"));
  CHECK_FALSE(truth_direct(tri({{{"a", "c"}, 1}}), "student", "likes",
                           "teacher"));

  Model m = tri({});
  m.predicates["student"] = {};
  CHECK(truth_direct(m, "student", "likes", "teacher"));  // vacuous universal
}

TEST_CASE("truth_inverse") {
  CHECK(truth_inverse(tri({{{"a", "c"}, 1}, {{"b", "c"}, 1}}), "student",
                      "likes", "teacher"));

  // canonical divergence witness: direct true, inverse false
  Model w;
  w.universe = {"a", "b", "c", "d"};
  w.predicates["student"] = {"a", "b"};
  w.predicates["teacher"] = {"c", "d"};
  w.relations["likes"][{"a", "c"}] = 1;
  w.relations["likes"][{"b", "d"}] = 1;
  CHECK(truth_direct(w, "student", "likes", "teacher"));
  CHECK_FALSE(truth_inverse(w, "student", "likes", "teacher"));

  Model empty_obj = tri({{{"a", "c"}, 1}});
  empty_obj.predicates["teacher"] = {};
  CHECK_FALSE(truth_inverse(empty_obj, "student", "likes", "teacher"));
}

TEST_CASE("truth_single") {
  Model m;
  m.universe = {"a", "b", "c"};
  m.predicates["men"] = {"a", "b"};
  m.predicates["sleep"] = {"a", "b", "c"};
  CHECK(truth_single(m, Quant::All, "men", "sleep"));

  m.predicates["men"] = {"a"};
  m.predicates["sleep"] = {"b"};
  CHECK_FALSE(truth_single(m, Quant::Some, "men", "sleep"));

  m.predicates["men"] = {};
  CHECK(truth_single(m, Quant::All, "men", "sleep"));  // vacuous

  // singleton noun: all and some coincide
  for (const char* x : {"a", "b", "c"}) {
    m.predicates["men"] = {x};
    CHECK(truth_single(m, Quant::All, "men", "sleep") ==
          truth_single(m, Quant::Some, "men", "sleep"));
  }
}

TEST_CASE("enumerate_models counts and determinism") {
  std::size_t count1 = 0;
  enumerate_models(1, {"p"}, {}, [&](const Model&) {
    ++count1;
    return true;
  });
  CHECK(count1 == 2);

  std::size_t exact2 = 0, total = 0;
  enumerate_models(2, {"p", "q"}, {"r"}, [&](const Model& m) {
    ++total;
    if (m.universe.size() == 2) ++exact2;
    return true;
  });
  CHECK(exact2 == 256);  // 2^2 * 2^2 * 2^4
  CHECK(total == 256 + 8);

  CHECK_THROWS_AS(enumerate_models(0, {}, {}, [](const Model&) { return true; }),
                  error);
  CHECK_THROWS_AS(enumerate_models(4, {}, {}, [](const Model&) { return true; }),
                  error);

  // early stop
  std::size_t seen = 0;
  enumerate_models(2, {"p"}, {}, [&](const Model&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("scope readings relate as the classical entailment predicts") {
  enumerate_models(3, {"student", "teacher"}, {"likes"}, [&](const Model& m) {
    bool d = truth_direct(m, "student", "likes", "teacher");
    bool i = truth_inverse(m, "student", "likes", "teacher");
    // inverse implies direct on nonempty predicates
    if (!m.predicate("student").empty() && !m.predicate("teacher").empty())
      CHECK((!i || d));
    // the readings agree when |teacher| <= 1
    if (m.predicate("teacher").size() <= 1 &&
        !m.predicate("student").empty())
      CHECK(d == i);
    // and when the relation is total on student x teacher
    bool total = true;
    for (const auto& a : m.predicate("student"))
      for (const auto& b : m.predicate("teacher"))
        if (!scope::scalar_nonzero(m.relation_weight("likes", a, b)))
          total = false;
    if (total && !m.predicate("student").empty() &&
        !m.predicate("teacher").empty())
      CHECK(d == i);
    return true;
  });
}
