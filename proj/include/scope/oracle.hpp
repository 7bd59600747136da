#ifndef SCOPE_ORACLE_HPP
#define SCOPE_ORACLE_HPP

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scope/scalar.hpp"

namespace scope::oracle {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite first-order model: a universe, named unary predicates, and
// nonnegative-weighted binary relations.  Missing relation pairs weigh 0.
struct Model {
  std::vector<std::string> universe;
  std::map<std::string, std::set<std::string>> predicates;
  std::map<std::string, std::map<std::pair<std::string, std::string>, Scalar>>
      relations;

  const std::set<std::string>& predicate(const std::string& name) const;
  Scalar relation_weight(const std::string& rel, const std::string& a,
                         const std::string& b) const;
  bool in_universe(const std::string& label) const;
};

// Model file format:
//   universe: a b c
//   pred student: a b
//   rel likes: a c 1.0
// One relation triple per line; `#` comments.
Model parse_model(const std::string& text);
Model load_model(const std::string& path);

// Direct scope: every member of subj is related to some member of obj.
bool truth_direct(const Model& m, const std::string& subj,
                  const std::string& rel, const std::string& obj);

// Inverse scope: some member of obj is related-to by every member of subj.
bool truth_inverse(const Model& m, const std::string& subj,
                   const std::string& rel, const std::string& obj);

enum class Quant { All, Some };

// all: noun is a subset of pred; some: they intersect.
bool truth_single(const Model& m, Quant q, const std::string& noun,
                  const std::string& pred);

// Every model with universe size 1..max_universe, every subset assignment
// per predicate, every 0/1 relation assignment, in deterministic order.
// Visits stop early when the callback returns false.
void enumerate_models(std::size_t max_universe,
                      const std::vector<std::string>& predicate_names,
                      const std::vector<std::string>& relation_names,
                      const std::function<bool(const Model&)>& visit);

}  // namespace scope::oracle

#endif
