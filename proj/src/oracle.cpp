#include "scope/oracle.hpp"

#include <fstream>
#include <sstream>

namespace scope::oracle {

const std::set<std::string>& Model::predicate(const std::string& name) const {
  auto it = predicates.find(name);
  if (it == predicates.end()) throw error("unknown predicate: " + name);
  return it->second;
}

Scalar Model::relation_weight(const std::string& rel, const std::string& a,
                              const std::string& b) const {
  auto it = relations.find(rel);
  if (it == relations.end()) throw error("unknown relation: " + rel);
  auto jt = it->second.find({a, b});
  return jt == it->second.end() ? Scalar(0) : jt->second;
}

bool Model::in_universe(const std::string& label) const {
  for (const auto& u : universe)
    if (u == label) return true;
  return false;
}

namespace {

Scalar parse_weight(const std::string& s) {
#ifdef SCOPE_SCALAR_DOUBLE
  return std::stod(s);
#else
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return Scalar(boost::multiprecision::cpp_int(s.substr(0, slash)),
                  boost::multiprecision::cpp_int(s.substr(slash + 1)));
  auto dot = s.find('.');
  if (dot == std::string::npos) return Scalar(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  boost::multiprecision::cpp_int denom = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) denom *= 10;
  return Scalar(boost::multiprecision::cpp_int(digits), denom);
#endif
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Model parse_model(const std::string& text) {
  Model m;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    if (colon == std::string::npos)
      throw error("model line " + std::to_string(lineno) + ": expected ':'");
    auto head = split_ws(line.substr(0, colon));
    auto body = split_ws(line.substr(colon + 1));
    if (head.size() == 1 && head[0] == "universe") {
      m.universe = body;
      std::set<std::string> distinct(body.begin(), body.end());
      if (distinct.size() != body.size())
        throw error("model line " + std::to_string(lineno) +
                    ": duplicate universe label");
    } else if (head.size() == 2 && head[0] == "pred") {
      auto& set = m.predicates[head[1]];
      for (const auto& x : body) {
        if (!m.in_universe(x))
          throw error("model line " + std::to_string(lineno) +
                      ": label '" + x + "' not in universe");
        set.insert(x);
      }
    } else if (head.size() == 2 && head[0] == "rel") {
      if (body.size() != 3)
        throw error("model line " + std::to_string(lineno) +
                    ": rel needs 'a b weight'");
      if (!m.in_universe(body[0]) || !m.in_universe(body[1]))
        throw error("model line " + std::to_string(lineno) +
                    ": relation pair outside universe");
      Scalar w = parse_weight(body[2]);
      if (scalar_nonzero(w)) m.relations[head[1]][{body[0], body[1]}] = w;
      else m.relations[head[1]];  // declare the relation name
    } else {
      throw error("model line " + std::to_string(lineno) +
                  ": unrecognized directive");
    }
  }
  if (m.universe.empty()) throw error("model has no universe line");
  return m;
}

Model load_model(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw error("cannot open model file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_model(ss.str());
}

bool truth_direct(const Model& m, const std::string& subj,
                  const std::string& rel, const std::string& obj) {
  const auto& s = m.predicate(subj);
  const auto& o = m.predicate(obj);
  for (const auto& a : s) {
    bool witness = false;
    for (const auto& b : o)
      if (scalar_nonzero(m.relation_weight(rel, a, b))) {
        witness = true;
        break;
      }
    if (!witness) return false;
  }
  return true;
}

bool truth_inverse(const Model& m, const std::string& subj,
                   const std::string& rel, const std::string& obj) {
  const auto& s = m.predicate(subj);
  const auto& o = m.predicate(obj);
  for (const auto& b : o) {
    bool covers = true;
    for (const auto& a : s)
      if (!scalar_nonzero(m.relation_weight(rel, a, b))) {
        covers = false;
        break;
      }
    if (covers) return true;
  }
  return false;
}

bool truth_single(const Model& m, Quant q, const std::string& noun,
                  const std::string& pred) {
  const auto& a = m.predicate(noun);
  const auto& b = m.predicate(pred);
  if (q == Quant::All)
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  for (const auto& x : a)
    if (b.count(x)) return true;
  return false;
}

void enumerate_models(std::size_t max_universe,
                      const std::vector<std::string>& predicate_names,
                      const std::vector<std::string>& relation_names,
                      const std::function<bool(const Model&)>& visit) {
  if (max_universe == 0) throw error("universe must be nonempty");
  if (max_universe > 3)
    throw error("exhaustive enumeration capped at universe size 3");
  static const std::vector<std::string> pool{"a", "b", "c"};
  for (std::size_t n = 1; n <= max_universe; ++n) {
    Model base;
    base.universe.assign(pool.begin(), pool.begin() + n);
    std::size_t pred_states = std::size_t(1) << (n * predicate_names.size());
    std::size_t rel_states =
        std::size_t(1) << (n * n * relation_names.size());
    for (std::size_t pm = 0; pm < pred_states; ++pm) {
      Model with_preds = base;
      std::size_t bit = 0;
      for (const auto& p : predicate_names) {
        auto& set = with_preds.predicates[p];
        for (std::size_t i = 0; i < n; ++i, ++bit)
          if (pm & (std::size_t(1) << bit)) set.insert(base.universe[i]);
      }
      for (std::size_t rm = 0; rm < rel_states; ++rm) {
        Model m = with_preds;
        std::size_t rbit = 0;
        for (const auto& r : relation_names) {
          auto& rel = m.relations[r];
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++rbit)
              if (rm & (std::size_t(1) << rbit))
                rel[{base.universe[i], base.universe[j]}] = 1;
        }
        if (!visit(m)) return;
      }
    }
  }
}

}  // namespace scope::oracle
