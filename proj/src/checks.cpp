#include "scope/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace scope::checks {

using fvect::LinearMap;
using fvect::Space;
using fvect::Universe;
using fvect::Vector;
using syntax::Conn;
using syntax::TypeRef;

bool all_pass(const Suite& s) {
  for (const auto& r : s)
    if (!r.pass) return false;
  return true;
}

namespace {

const std::vector<std::string> kPool{"a", "b", "c"};

Universe universe_of(std::size_t n) {
  return Universe(kPool.begin(), kPool.begin() + n);
}

void push(Suite& out, std::string name, bool pass, std::string detail = "") {
  out.push_back({std::move(name), pass, std::move(detail)});
}

bool eq(const LinearMap& f, const LinearMap& g) { return fvect::map_equal(f, g); }

// Test hook: the faulty product |A> (x) |B> -> |A u B>.
LinearMap mu_union(const Universe& u) {
  Space p = fvect::power_space(u);
  LinearMap m;
  m.domain = fvect::tensor_space(p, p);
  m.codomain = p;
  m.action = [p](const fvect::BasisElem& b) {
    std::vector<std::string> joined = b.parts[0].subset;
    joined.insert(joined.end(), b.parts[1].subset.begin(),
                  b.parts[1].subset.end());
    fvect::BasisElem out;
    out.parts.push_back(fvect::subset_part(std::move(joined)));
    return fvect::basis_vector(p, out);
  };
  return m;
}

}  // namespace

Suite suite_yanking(std::size_t universe_size) {
  Suite out;
  std::size_t n = std::clamp<std::size_t>(universe_size, 1, 3);
  {
    Universe u = universe_of(n);
    for (bool power : {false, true}) {
      Space s = power ? fvect::power_space(u) : fvect::atom_space(u);
      std::string tag =
          "yanking/U=" + std::to_string(n) + (power ? "/pow" : "/atom");
      LinearMap id = fvect::identity(s);
      LinearMap snake_l = fvect::compose(
          fvect::map_tensor(fvect::epsilon(s), id),
          fvect::map_tensor(id, fvect::eta(s)));
      LinearMap snake_r = fvect::compose(
          fvect::map_tensor(id, fvect::epsilon(s)),
          fvect::map_tensor(fvect::eta(s), id));
      push(out, tag + "/snake-left", eq(snake_l, id));
      push(out, tag + "/snake-right", eq(snake_r, id));
      push(out, tag + "/cup-symmetric",
           eq(fvect::compose(fvect::epsilon(s), fvect::swap_map(s, s)),
              fvect::epsilon(s)));
      push(out, tag + "/cap-symmetric",
           eq(fvect::compose(fvect::swap_map(s, s), fvect::eta(s)),
              fvect::eta(s)));
    }
  }
  return out;
}

Suite suite_monoid(std::size_t universe_size, bool fault_mu_union) {
  Suite out;
  std::size_t n = std::clamp<std::size_t>(universe_size, 1, 3);
  {
    Universe u = universe_of(n);
    Space p = fvect::power_space(u);
    LinearMap id = fvect::identity(p);
    LinearMap mu = fault_mu_union ? mu_union(u) : fvect::mu_map(u);
    LinearMap delta = fvect::delta_map(u);
    std::string tag = "monoid/U=" + std::to_string(n);
    push(out, tag + "/mu-assoc",
         eq(fvect::compose(mu, fvect::map_tensor(mu, id)),
            fvect::compose(mu, fvect::map_tensor(id, mu))));
    push(out, tag + "/mu-comm",
         eq(fvect::compose(mu, fvect::swap_map(p, p)), mu));
    push(out, tag + "/mu-unit",
         eq(fvect::compose(mu, fvect::map_tensor(fvect::zeta_map(u), id)), id));
    push(out, tag + "/delta-coassoc",
         eq(fvect::compose(fvect::map_tensor(delta, id), delta),
            fvect::compose(fvect::map_tensor(id, delta), delta)));
    push(out, tag + "/delta-cocomm",
         eq(fvect::compose(fvect::swap_map(p, p), delta), delta));
    push(out, tag + "/delta-counit",
         eq(fvect::compose(fvect::map_tensor(fvect::iota_map(u), id), delta),
            id));
  }
  return out;
}

Suite suite_bialgebra(std::size_t universe_size, bool fault_mu_union) {
  Suite out;
  std::size_t n = std::clamp<std::size_t>(universe_size, 1, 3);
  {
    Universe u = universe_of(n);
    Space p = fvect::power_space(u);
    LinearMap id = fvect::identity(p);
    LinearMap mu = fault_mu_union ? mu_union(u) : fvect::mu_map(u);
    LinearMap delta = fvect::delta_map(u);
    LinearMap iota = fvect::iota_map(u);
    LinearMap zeta = fvect::zeta_map(u);
    std::string tag = "bialgebra/U=" + std::to_string(n);
    LinearMap lhs = fvect::compose(delta, mu);
    LinearMap rhs = fvect::compose(
        fvect::map_tensor(mu, mu),
        fvect::compose(
            fvect::map_tensor(fvect::map_tensor(id, fvect::swap_map(p, p)),
                              id),
            fvect::map_tensor(delta, delta)));
    push(out, tag + "/delta-mu", eq(lhs, rhs));
    push(out, tag + "/delta-zeta",
         eq(fvect::compose(delta, zeta), fvect::map_tensor(zeta, zeta)));
    push(out, tag + "/iota-mu",
         eq(fvect::compose(iota, mu), fvect::map_tensor(iota, iota)));
    push(out, tag + "/iota-zeta",
         eq(fvect::compose(iota, zeta), fvect::identity(fvect::unit_space())));
  }
  return out;
}

namespace {

const std::map<std::string, Space>& small_spaces() {
  static const std::map<std::string, Space> I0{
      {"np", fvect::atom_space({"u", "v"})},
      {"n", fvect::atom_space({"k", "l", "m"})},
      {"s", fvect::atom_space({"z"})}};
  return I0;
}

TypeRef rand_small_type(std::mt19937& rng, int depth) {
  static const std::vector<std::string> atoms{"np", "n", "s"};
  if (depth <= 0 || rng() % 2 == 0)
    return syntax::make_atom(atoms[rng() % atoms.size()]);
  TypeRef a = rand_small_type(rng, depth - 1);
  TypeRef b = rand_small_type(rng, depth - 1);
  switch (rng() % 3) {
    case 0: return syntax::make_tensor(a, b);
    case 1: return syntax::make_under(a, b);
    default: return syntax::make_over(a, b);
  }
}

nl::ProofRef rand_endo(std::mt19937& rng, const TypeRef& t, int depth) {
  if (depth <= 0) return nl::id_proof(t);
  switch (rng() % 4) {
    case 0:
      return nl::id_proof(t);
    case 1:
      return nl::comp(rand_endo(rng, t, depth - 1),
                      rand_endo(rng, t, depth - 1));
    case 2:
      if (t->conn == Conn::Tensor)
        return nl::mono_tensor(rand_endo(rng, t->left, depth - 1),
                               rand_endo(rng, t->right, depth - 1));
      if (t->conn == Conn::Over)
        return nl::mono_over(rand_endo(rng, t->left, depth - 1),
                             rand_endo(rng, t->right, depth - 1));
      if (t->conn == Conn::Under)
        return nl::mono_under(rand_endo(rng, t->left, depth - 1),
                              rand_endo(rng, t->right, depth - 1));
      return nl::id_proof(t);
    default:
      if (t->conn == Conn::Tensor)
        return nl::r1inv(nl::r1(rand_endo(rng, t, depth - 1)));
      return nl::id_proof(t);
  }
}

}  // namespace

Suite suite_residuation(unsigned seed, std::size_t proof_count) {
  Suite out;
  std::mt19937 rng(seed);
  const auto& I0 = small_spaces();
  for (std::size_t i = 0; i < proof_count; ++i) {
    TypeRef a = rand_small_type(rng, 1);
    TypeRef b = rand_small_type(rng, 1);
    nl::ProofRef f = rand_endo(rng, syntax::make_tensor(a, b), 2);
    nl::check(f);
    bool ok = true;
    std::string why;
    LinearMap fm = nl::interpret(f, I0);
    if (!eq(nl::interpret(nl::r1inv(nl::r1(f)), I0), fm))
      ok = false, why = "r1inv.r1";
    if (ok && !eq(nl::interpret(nl::r2inv(nl::r2(f)), I0), fm))
      ok = false, why = "r2inv.r2";
    nl::ProofRef g = nl::r1(f);
    if (ok && !eq(nl::interpret(nl::r1(nl::r1inv(g)), I0),
                  nl::interpret(g, I0)))
      ok = false, why = "r1.r1inv";
    nl::ProofRef h = nl::r2(f);
    if (ok && !eq(nl::interpret(nl::r2(nl::r2inv(h)), I0),
                  nl::interpret(h, I0)))
      ok = false, why = "r2.r2inv";
    push(out, "residuation/roundtrip/" + std::to_string(i), ok, why);
  }
  return out;
}

// ------------------------------------------------- two-quantifier pipeline

oracle::Model divergence_witness() {
  oracle::Model m;
  m.universe = {"a", "b", "c", "d"};
  m.predicates["student"] = {"a", "b"};
  m.predicates["teacher"] = {"c", "d"};
  m.relations["likes"][{"a", "c"}] = 1;
  m.relations["likes"][{"b", "d"}] = 1;
  return m;
}

TwoQuantPipeline TwoQuantPipeline::build() {
  TwoQuantPipeline p;
  std::ostringstream lex_text;
  lex_text << "goal\ts\n"
           << "every\tnp/n\tevery\n"
           << "student\tn\tnoun:student\n"
           << "likes\t(np\\s)/np\ttv:likes\n"
           << "some\tnp/n\tsome\n"
           << "teacher\tn\tnoun:teacher\n";
  p.lex = syntax::parse_lexicon(lex_text.str());
  p.words = {"every", "student", "likes", "some", "teacher"};
  p.sem_keys = {"every", "noun:student", "tv:likes", "some", "noun:teacher"};
  auto seqs = prover::sentence_sequent(
      p.words, p.lex, prover::default_bracketing(p.words.size()));
  for (const auto& s : seqs) {
    auto found = prover::prove_all(s, p.lex.pa);
    p.proofs.insert(p.proofs.end(), found.begin(), found.end());
  }
  if (p.proofs.size() != 2)
    throw error("expected exactly 2 proofs, got " +
                std::to_string(p.proofs.size()));
  for (const auto& pr : p.proofs) p.terms.push_back(cps::compile(pr));

  // Disambiguate the two readings on a model where they differ: the
  // surface reading is true and the inverted one false.
  oracle::Model w = divergence_witness();
  auto I = cps::standard_interpretation(w.universe);
  auto sem = cps::build_sem_lexicon(w);
  Scalar r0 = cps::eval_reading(p.terms[0], p.sem_keys, sem, I);
  Scalar r1 = cps::eval_reading(p.terms[1], p.sem_keys, sem, I);
  if (scalar_nonzero(r0) && !scalar_nonzero(r1))
    p.direct_index = 0;
  else if (scalar_nonzero(r1) && !scalar_nonzero(r0))
    p.direct_index = 1;
  else
    throw error("readings did not come apart on the witness model");
  return p;
}

std::pair<Scalar, Scalar> TwoQuantPipeline::evaluate(
    const oracle::Model& m) const {
  auto I = cps::standard_interpretation(m.universe);
  auto sem = cps::build_sem_lexicon(m);
  Scalar direct = cps::eval_reading(terms[direct_index], sem_keys, sem, I);
  Scalar inverse =
      cps::eval_reading(terms[1 - direct_index], sem_keys, sem, I);
  return {direct, inverse};
}

Suite suite_oracle(std::size_t max_universe) {
  Suite out;
  TwoQuantPipeline pipe = TwoQuantPipeline::build();
  std::size_t checked = 0, mismatches = 0;
  std::string first_bad;
  oracle::enumerate_models(
      std::min<std::size_t>(max_universe, 3), {"student", "teacher"},
      {"likes"}, [&](const oracle::Model& m) {
        auto [direct, inverse] = pipe.evaluate(m);
        bool d = oracle::truth_direct(m, "student", "likes", "teacher");
        bool i = oracle::truth_inverse(m, "student", "likes", "teacher");
        ++checked;
        if (scalar_nonzero(direct) != d || scalar_nonzero(inverse) != i) {
          ++mismatches;
          if (first_bad.empty())
            first_bad = "model #" + std::to_string(checked) + ": got (" +
                        scalar_str(direct) + ", " + scalar_str(inverse) +
                        "), oracle (" + (d ? "1" : "0") + ", " +
                        (i ? "1" : "0") + ")";
        }
        return true;
      });
  push(out, "oracle/exhaustive", mismatches == 0,
       std::to_string(checked) + " models" +
           (first_bad.empty() ? "" : "; " + first_bad));
  return out;
}

Suite suite_entailment(std::size_t max_universe) {
  Suite out;
  std::size_t checked = 0, violations = 0;
  oracle::enumerate_models(
      std::min<std::size_t>(max_universe, 3), {"student", "teacher"},
      {"likes"}, [&](const oracle::Model& m) {
        if (m.predicate("student").empty() || m.predicate("teacher").empty())
          return true;
        ++checked;
        if (oracle::truth_inverse(m, "student", "likes", "teacher") &&
            !oracle::truth_direct(m, "student", "likes", "teacher"))
          ++violations;
        return true;
      });
  push(out, "entailment/inverse-implies-direct", violations == 0,
       std::to_string(checked) + " models");
  return out;
}

}  // namespace scope::checks
