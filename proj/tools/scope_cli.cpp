// Command-line front end: sentence -> focused proofs -> compiled readings ->
// evaluated scalars, plus the invariant-suite runner and a derivation
// renderer.  Exit codes: 0 success, 1 input/IO error, 2 negative result
// (no proofs / failing suites).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scope/checks.hpp"
#include "scope/cps.hpp"
#include "scope/nl.hpp"
#include "scope/oracle.hpp"
#include "scope/prover.hpp"
#include "scope/syntax.hpp"

namespace {

using json = nlohmann::json;
using scope::Scalar;
using scope::oracle::Quant;

std::vector<std::string> tokenize(const std::vector<std::string>& args) {
  std::vector<std::string> words;
  for (const auto& a : args) {
    std::istringstream in(a);
    std::string w;
    while (in >> w) words.push_back(w);
  }
  return words;
}

scope::prover::StructRef build_antecedent(
    const scope::prover::BracketRef& b,
    const std::vector<scope::syntax::TypeRef>& types) {
  if (b->pos >= 0)
    return scope::prover::leaf("x" + std::to_string(b->pos), types[b->pos]);
  return scope::prover::bullet(build_antecedent(b->left, types),
                               build_antecedent(b->right, types));
}

// One sequent plus the semantic keys of the lexical entries it chose.
struct Derivable {
  scope::prover::Sequent sequent;
  std::vector<std::string> sem_keys;
};

std::vector<Derivable> sentence_candidates(
    const std::vector<std::string>& words, const scope::syntax::Lexicon& lex,
    const scope::prover::BracketRef& brackets) {
  std::vector<std::vector<scope::syntax::LexEntry>> choices;
  for (const auto& w : words) {
    auto entries = lex.lookup(w);
    if (entries.empty())
      throw scope::syntax::error("unknown word: " + w);
    choices.push_back(std::move(entries));
  }
  std::vector<Derivable> out;
  std::vector<std::size_t> idx(words.size(), 0);
  while (true) {
    std::vector<scope::syntax::TypeRef> types;
    std::vector<std::string> keys;
    for (std::size_t i = 0; i < words.size(); ++i) {
      types.push_back(choices[i][idx[i]].type);
      keys.push_back(choices[i][idx[i]].sem_key);
    }
    out.push_back({{build_antecedent(brackets, types),
                    scope::prover::Succedent{true, "", lex.goal}},
                   std::move(keys)});
    std::size_t k = words.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

struct ProvedReading {
  scope::prover::FTermRef proof;
  std::vector<std::string> sem_keys;
};

std::vector<ProvedReading> prove_sentence(const std::vector<std::string>& words,
                                          const scope::syntax::Lexicon& lex,
                                          const std::string& bracket_spec,
                                          std::size_t limit) {
  auto brackets =
      bracket_spec.empty()
          ? scope::prover::default_bracketing(words.size())
          : scope::prover::parse_brackets(bracket_spec, words.size());
  std::vector<ProvedReading> out;
  for (const auto& cand : sentence_candidates(words, lex, brackets))
    for (auto& p : scope::prover::prove_all(cand.sequent, lex.pa, limit))
      out.push_back({std::move(p), cand.sem_keys});
  return out;
}

// --------------------------------------------------- oracle frame matching

std::optional<Quant> quant_of(const std::string& key) {
  if (key == "every") return Quant::All;
  if (key == "some") return Quant::Some;
  return std::nullopt;
}

bool strip_prefix(const std::string& key, const std::string& prefix,
                  std::string& rest) {
  if (key.rfind(prefix, 0) != 0) return false;
  rest = key.substr(prefix.size());
  return true;
}

template <typename Pred>
bool quant_over(Quant q, const std::set<std::string>& dom, Pred pred) {
  if (q == Quant::All) {
    for (const auto& x : dom)
      if (!pred(x)) return false;
    return true;
  }
  for (const auto& x : dom)
    if (pred(x)) return true;
  return false;
}

// Recognizes "quant noun tv quant noun" and "quant noun iv" frames from the
// semantic keys and decides the oracle truth of reading `index` (0 = surface
// scope, 1 = inverted scope for the transitive frame).
std::optional<bool> oracle_truth(const std::vector<std::string>& keys,
                                 std::size_t index,
                                 const scope::oracle::Model& m) {
  std::string n1, rel, n2;
  if (keys.size() == 5 && quant_of(keys[0]) && quant_of(keys[3]) &&
      strip_prefix(keys[1], "noun:", n1) &&
      strip_prefix(keys[2], "tv:", rel) &&
      strip_prefix(keys[4], "noun:", n2) && index < 2) {
    Quant q1 = *quant_of(keys[0]), q2 = *quant_of(keys[3]);
    const auto& subj = m.predicate(n1);
    const auto& obj = m.predicate(n2);
    auto related = [&](const std::string& a, const std::string& b) {
      return scope::scalar_nonzero(m.relation_weight(rel, a, b));
    };
    if (index == 0)
      return quant_over(q1, subj, [&](const std::string& a) {
        return quant_over(q2, obj,
                          [&](const std::string& b) { return related(a, b); });
      });
    return quant_over(q2, obj, [&](const std::string& b) {
      return quant_over(q1, subj,
                        [&](const std::string& a) { return related(a, b); });
    });
  }
  if (keys.size() == 3 && quant_of(keys[0]) &&
      strip_prefix(keys[1], "noun:", n1) &&
      strip_prefix(keys[2], "iv:", rel)) {
    return scope::oracle::truth_single(m, *quant_of(keys[0]), n1, rel);
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- output

int cmd_parse(const std::string& lexicon_path,
              const std::vector<std::string>& sentence,
              const std::string& brackets, std::size_t limit, bool json_out,
              bool derivations_only) {
  auto lex = scope::syntax::load_lexicon(lexicon_path);
  auto words = tokenize(sentence);
  auto readings = prove_sentence(words, lex, brackets, limit);
  if (json_out) {
    json doc;
    doc["sentence"] = words;
    doc["count"] = readings.size();
    doc["proofs"] = json::array();
    for (const auto& r : readings)
      doc["proofs"].push_back(
          {{"derivation", scope::prover::render(r.proof, lex.pa)},
           {"term", scope::prover::term_str(r.proof)}});
    std::cout << doc.dump(2) << "\n";
  } else {
    if (!derivations_only)
      std::cout << "proofs: " << readings.size() << "\n";
    for (std::size_t i = 0; i < readings.size(); ++i) {
      std::cout << "--- proof " << (i + 1) << " ---\n"
                << scope::prover::render(readings[i].proof, lex.pa);
    }
  }
  return readings.empty() ? 2 : 0;
}

int cmd_eval(const std::string& lexicon_path, const std::string& model_path,
             const std::vector<std::string>& sentence,
             const std::string& brackets, std::size_t limit, bool with_oracle,
             bool json_out) {
  auto lex = scope::syntax::load_lexicon(lexicon_path);
  auto model = scope::oracle::load_model(model_path);
  auto words = tokenize(sentence);
  auto readings = prove_sentence(words, lex, brackets, limit);
  auto I = scope::cps::standard_interpretation(model.universe);
  auto sem = scope::cps::build_sem_lexicon(model);

  json doc;
  doc["sentence"] = words;
  doc["count"] = readings.size();
  doc["proofs"] = json::array();
  std::ostringstream text;
  text << "proofs: " << readings.size() << "\n";
  for (std::size_t i = 0; i < readings.size(); ++i) {
    const auto& r = readings[i];
    auto term = scope::cps::compile(r.proof);
    json entry;
    entry["derivation"] = scope::prover::render(r.proof, lex.pa);
    entry["term"] = scope::cps::print_sem(term);
    text << "--- proof " << (i + 1) << " ---\n"
         << scope::prover::render(r.proof, lex.pa)
         << "term: " << scope::cps::print_sem(term) << "\n";
    try {
      Scalar value = scope::cps::eval_reading(term, r.sem_keys, sem, I);
      entry["scalar"] = scope::scalar_str(value);
      entry["nonzero"] = scope::scalar_nonzero(value);
      text << "scalar: " << scope::scalar_str(value) << "\n";
      if (with_oracle) {
        auto truth = oracle_truth(r.sem_keys, i, model);
        if (truth) {
          bool agree = scope::scalar_nonzero(value) == *truth;
          entry["oracle"] = *truth;
          entry["agree"] = agree;
          text << "oracle: " << (*truth ? 1 : 0) << " "
               << (agree ? "AGREE" : "DISAGREE") << "\n";
        } else {
          text << "oracle: sentence frame not recognized\n";
        }
      }
    } catch (const scope::cps::eval_error& e) {
      entry["error"] = e.what();
      text << "error: " << e.what() << "\n";
    }
    doc["proofs"].push_back(std::move(entry));
  }
  if (json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text.str();
  return readings.empty() ? 2 : 0;
}

unsigned env_seed() {
  const char* s = std::getenv("SCOPE_SEED");
  if (!s || !*s) return 20240824u;
  return static_cast<unsigned>(std::stoul(s));
}

int cmd_check(const std::vector<std::string>& suites, std::size_t universe,
              bool fault_mu_union, bool json_out) {
  using scope::checks::Suite;
  auto wanted = [&](const std::string& name) {
    if (suites.empty()) return true;
    for (const auto& s : suites)
      if (s == name) return true;
    return false;
  };
  std::vector<std::size_t> algebra_sizes =
      universe ? std::vector<std::size_t>{universe}
               : std::vector<std::size_t>{1, 2, 3};
  std::size_t oracle_max = universe ? universe : 2;

  Suite all;
  auto run = [&](const std::string& name, const Suite& s) {
    if (!wanted(name)) return;
    all.insert(all.end(), s.begin(), s.end());
  };
  for (std::size_t n : algebra_sizes) {
    run("yanking", scope::checks::suite_yanking(n));
    run("monoid", scope::checks::suite_monoid(n, fault_mu_union));
    run("bialgebra", scope::checks::suite_bialgebra(n, fault_mu_union));
  }
  run("residuation", scope::checks::suite_residuation(env_seed(), 50));
  run("oracle", scope::checks::suite_oracle(oracle_max));
  run("entailment", scope::checks::suite_entailment(oracle_max));

  std::size_t failures = 0;
  json doc = json::array();
  for (const auto& r : all) {
    if (!r.pass) ++failures;
    if (json_out) {
      doc.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
  }
  if (json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << all.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantifier-scope semantics pipeline"};
  app.require_subcommand(1);

  std::string lexicon_path, model_path, brackets;
  std::vector<std::string> sentence, suites;
  std::size_t limit = 64, universe = 0;
  bool with_oracle = false, json_out = false, fault_mu_union = false;

  auto add_sentence_opts = [&](CLI::App* cmd, bool needs_model) {
    cmd->add_option("--lexicon", lexicon_path, "lexicon file")->required();
    if (needs_model)
      cmd->add_option("--model", model_path, "model file")->required();
    cmd->add_option("--brackets", brackets,
                    "antecedent bracketing, e.g. \"((1 2)(3 (4 5)))\"");
    cmd->add_option("--limit", limit, "proof enumeration cap");
    cmd->add_flag("--json", json_out, "machine-readable output");
    cmd->add_option("sentence", sentence, "the words of the sentence")
        ->required();
  };

  auto* parse = app.add_subcommand("parse", "prove a sentence grammatical");
  add_sentence_opts(parse, false);

  auto* eval = app.add_subcommand("eval", "evaluate every scope reading");
  add_sentence_opts(eval, true);
  eval->add_flag("--oracle", with_oracle,
                 "compare against the set-theoretic oracle");

  auto* render = app.add_subcommand("render", "print derivation trees only");
  add_sentence_opts(render, false);

  auto* check = app.add_subcommand("check", "run the invariant suites");
  check->add_option("--suite", suites,
                    "yanking|monoid|bialgebra|residuation|oracle|entailment");
  check->add_option("--universe", universe, "suite universe size");
  check->add_flag("--json", json_out, "machine-readable output");
  check->add_flag("--fault-mu-union", fault_mu_union,
                  "test hook: replace intersection by union")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed())
      return cmd_parse(lexicon_path, sentence, brackets, limit, json_out,
                       false);
    if (render->parsed())
      return cmd_parse(lexicon_path, sentence, brackets, limit, json_out,
                       true);
    if (eval->parsed())
      return cmd_eval(lexicon_path, model_path, sentence, brackets, limit,
                      with_oracle, json_out);
    if (check->parsed())
      return cmd_check(suites, universe, fault_mu_union, json_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
