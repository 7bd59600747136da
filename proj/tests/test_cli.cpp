#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(SCOPE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string LEX = std::string(SCOPE_DATA_DIR) + "/quantifiers.lex";
const std::string MODEL = std::string(SCOPE_DATA_DIR) + "/witness.model";
const std::string ILEX = std::string(SCOPE_DATA_DIR) + "/intransitive.lex";
const std::string IMODEL = std::string(SCOPE_DATA_DIR) + "/intransitive.model";

const std::string SENTENCE = "every student likes some teacher";

std::size_t count_of(const std::string& out, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = out.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("parse: exit codes") {
  Run ok = run_cli("parse --lexicon " + LEX + " " + SENTENCE);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("proofs: 2") != std::string::npos);

  // grammatical failure is a negative result, not an error
  Run bad = run_cli("parse --lexicon " + LEX + " student likes");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("proofs: 0") != std::string::npos);

  Run unknown = run_cli("parse --lexicon " + LEX + " every zebra sleeps");
  CHECK(unknown.code == 1);
  CHECK(unknown.out.find("unknown word") != std::string::npos);

  Run nofile = run_cli("parse --lexicon /nonexistent.lex a b");
  CHECK(nofile.code == 1);

  Run nosub = run_cli("");
  CHECK(nosub.code != 0);
}

TEST_CASE("parse: bracketing and limit") {
  Run alt = run_cli("parse --lexicon " + LEX +
                    " --brackets \"((((1 2) 3) 4) 5)\" " + SENTENCE);
  CHECK(alt.code == 2);  // left-branching antecedent underivable

  Run badbr =
      run_cli("parse --lexicon " + LEX + " --brackets \"(1 1)\" " + SENTENCE);
  CHECK(badbr.code == 1);

  Run limited = run_cli("parse --lexicon " + LEX + " --limit 1 " + SENTENCE);
  CHECK(limited.code == 1);  // cap below the two existing proofs
}

TEST_CASE("render prints derivations only") {
  Run r = run_cli("render --lexicon " + LEX + " " + SENTENCE);
  CHECK(r.code == 0);
  CHECK(r.out.find("proofs:") == std::string::npos);
  CHECK(r.out.find("--- proof 1 ---") != std::string::npos);
  CHECK(r.out.find("--- proof 2 ---") != std::string::npos);
  CHECK(r.out.find("⊢ [s]") != std::string::npos);
  CHECK(count_of(r.out, "⇁") == 2);
}

TEST_CASE("eval: the divergence witness separates the readings") {
  Run r = run_cli("eval --lexicon " + LEX + " --model " + MODEL +
                  " --oracle " + SENTENCE);
  CHECK(r.code == 0);
  CHECK(r.out.find("scalar: 1") != std::string::npos);
  CHECK(r.out.find("scalar: 0") != std::string::npos);
  CHECK(count_of(r.out, "AGREE") == 2);
  CHECK(count_of(r.out, "DISAGREE") == 0);
}

TEST_CASE("eval: intransitive frame") {
  Run r = run_cli("eval --lexicon " + ILEX + " --model " + IMODEL +
                  " --oracle all men sleep");
  CHECK(r.code == 0);
  CHECK(r.out.find("proofs: 1") != std::string::npos);
  CHECK(r.out.find("scalar: 1") != std::string::npos);
  CHECK(count_of(r.out, "AGREE") == 1);
}

TEST_CASE("eval: json output round-trips") {
  Run r = run_cli("eval --lexicon " + LEX + " --model " + MODEL +
                  " --oracle --json " + SENTENCE);
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 2);
  REQUIRE(doc["proofs"].size() == 2);
  CHECK(doc["proofs"][0]["scalar"] == "1");
  CHECK(doc["proofs"][1]["scalar"] == "0");
  CHECK(doc["proofs"][0]["nonzero"] == true);
  CHECK(doc["proofs"][1]["nonzero"] == false);
  for (const auto& p : doc["proofs"]) {
    CHECK(p["agree"] == true);
    CHECK(p.contains("derivation"));
    CHECK(p.contains("term"));
  }
}

TEST_CASE("deterministic output across runs") {
  std::string cmd = "eval --lexicon " + LEX + " --model " + MODEL +
                    " --oracle " + SENTENCE;
  Run a = run_cli(cmd);
  Run b = run_cli(cmd);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);

  Run c = run_cli("check");
  Run d = run_cli("check");
  CHECK(c.out == d.out);
}

TEST_CASE("check: all suites pass") {
  Run r = run_cli("check");
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failures") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  Run one = run_cli("check --suite bialgebra --universe 3");
  CHECK(one.code == 0);
  CHECK(one.out.find("4 checks, 0 failures") != std::string::npos);

  Run js = run_cli("check --suite yanking --universe 1 --json");
  CHECK(js.code == 0);
  nlohmann::json doc = nlohmann::json::parse(js.out);
  for (const auto& entry : doc) CHECK(entry["pass"] == true);
}

TEST_CASE("check: the seeded fault is detected") {
  Run r = run_cli("check --fault-mu-union");
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("mu-unit") != std::string::npos);
}
