#include "scope/cps.hpp"

#include <algorithm>
#include <sstream>

namespace scope::cps {

using fvect::BasisElem;
using fvect::LinearMap;
using fvect::Space;
using fvect::Universe;
using fvect::Vector;
using syntax::Conn;
using syntax::polarity;

// --------------------------------------------------------------- sets

SetRef base_set(const Universe& u) {
  return std::make_shared<SetExpr>(SetExpr{SetKind::Base, u, nullptr, nullptr});
}
SetRef pow_set(SetRef inner) {
  return std::make_shared<SetExpr>(
      SetExpr{SetKind::Pow, {}, std::move(inner), nullptr});
}
SetRef prod_set(SetRef l, SetRef r) {
  return std::make_shared<SetExpr>(
      SetExpr{SetKind::Prod, {}, std::move(l), std::move(r)});
}
SetRef reals_set() {
  return std::make_shared<SetExpr>(
      SetExpr{SetKind::Reals, {}, nullptr, nullptr});
}

bool set_equal(const SetRef& a, const SetRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case SetKind::Base: return a->universe == b->universe;
    case SetKind::Reals: return true;
    case SetKind::Pow: return set_equal(a->left, b->left);
    case SetKind::Prod:
      return set_equal(a->left, b->left) && set_equal(a->right, b->right);
  }
  return false;
}

std::string print_set(const SetRef& s) {
  switch (s->kind) {
    case SetKind::Base: {
      std::string out = "{";
      for (std::size_t i = 0; i < s->universe.size(); ++i) {
        if (i) out += ",";
        out += s->universe[i];
      }
      return out + "}";
    }
    case SetKind::Reals: return "R";
    case SetKind::Pow: return "P(" + print_set(s->left) + ")";
    case SetKind::Prod:
      return "(" + print_set(s->left) + "×" + print_set(s->right) + ")";
  }
  return "?";
}

Space to_space(const SetRef& s) {
  switch (s->kind) {
    case SetKind::Base:
      return fvect::atom_space(s->universe);
    case SetKind::Reals:
      return fvect::scalar_space();
    case SetKind::Pow:
      if (s->left->kind == SetKind::Base)
        return fvect::power_space(s->left->universe);
      throw eval_error("carrier " + print_set(s) +
                       " is a continuation position, not enumerable");
    case SetKind::Prod:
      return fvect::tensor_space(to_space(s->left), to_space(s->right));
  }
  throw error("corrupt set expression");
}

Interpretation standard_interpretation(const Universe& u) {
  Interpretation I;
  I.pa.atom_polarity = {
      {"np", Pol::Pos}, {"n", Pol::Pos}, {"s", Pol::Neg}};
  I.base = {{"np", base_set(u)},
            {"n", pow_set(base_set(u))},
            {"s", reals_set()}};
  return I;
}

SemSpace interpret_type(const TypeRef& t, const Interpretation& I) {
  Pol p = polarity(I.pa, t);
  if (t->conn == Conn::Atom) {
    auto it = I.base.find(t->atom);
    if (it == I.base.end())
      throw error("no base interpretation for atom '" + t->atom + "'");
    return {t, p, p == Pol::Pos ? it->second : pow_set(it->second)};
  }
  SemSpace l = interpret_type(t->left, I);
  SemSpace r = interpret_type(t->right, I);
  auto wrap = [](const SemSpace& s, bool do_wrap) {
    return do_wrap ? pow_set(s.shape) : s.shape;
  };
  SetRef shape;
  switch (t->conn) {
    case Conn::Tensor:
      // operands wrapped when negative
      shape = prod_set(wrap(l, l.pol == Pol::Neg), wrap(r, r.pol == Pol::Neg));
      break;
    case Conn::Under:
      // A\B: A wrapped when negative, B wrapped when positive
      shape = prod_set(wrap(l, l.pol == Pol::Neg), wrap(r, r.pol == Pol::Pos));
      break;
    case Conn::Over:
      // B/A: B wrapped when A positive, A wrapped when B negative
      shape = prod_set(wrap(l, r.pol == Pol::Pos), wrap(r, l.pol == Pol::Neg));
      break;
    default:
      throw error("corrupt type node");
  }
  return {t, p, shape};
}

// --------------------------------------------------------- expressions

static SemRef mk(EK k, std::string n, std::string ln, std::string rn,
                 TypeRef ty, SemRef a, SemRef b) {
  return std::make_shared<SemExpr>(SemExpr{k, std::move(n), std::move(ln),
                                           std::move(rn), std::move(ty),
                                           std::move(a), std::move(b)});
}

SemRef var_e(std::string n) {
  return mk(EK::Var, std::move(n), "", "", nullptr, nullptr, nullptr);
}
SemRef prim_e(std::string key) {
  return mk(EK::Prim, std::move(key), "", "", nullptr, nullptr, nullptr);
}
SemRef tensor_e(SemRef a, SemRef b) {
  return mk(EK::Tensor, "", "", "", nullptr, std::move(a), std::move(b));
}
SemRef apply_e(SemRef fun, SemRef arg) {
  return mk(EK::Apply, "", "", "", nullptr, std::move(fun), std::move(arg));
}
SemRef lambda_e(std::string n, SemRef body) {
  return mk(EK::Lambda, std::move(n), "", "", nullptr, std::move(body),
            nullptr);
}
SemRef comprehend_e(std::string n, TypeRef range, SemRef body) {
  return mk(EK::Comprehend, std::move(n), "", "", std::move(range),
            std::move(body), nullptr);
}
SemRef split_e(std::string source, std::string l, std::string r,
               SemRef body) {
  return mk(EK::Split, std::move(source), std::move(l), std::move(r), nullptr,
            std::move(body), nullptr);
}

namespace {

struct SemPrinter {
  bool canonical;
  std::map<std::string, std::string> env;
  int next = 0;

  std::string bind(const std::string& n) {
    if (!canonical) return n;
    std::string fresh = "v" + std::to_string(next++);
    env[n] = fresh;
    return fresh;
  }
  std::string ref(const std::string& n) const {
    if (!canonical) return n;
    auto it = env.find(n);
    return it == env.end() ? n : it->second;
  }

  std::string print(const SemRef& e) {
    switch (e->kind) {
      case EK::Var: return ref(e->name);
      case EK::Prim: return "⟦" + e->name + "⟧";
      case EK::Tensor:
        return "(" + print(e->a) + " ⊗ " + print(e->b) + ")";
      case EK::Apply:
        return print(e->a) + "(" + print(e->b) + ")";
      case EK::Lambda: {
        auto saved = env;
        std::string b = bind(e->name);
        std::string out = "λ" + b + "." + print(e->a);
        env = saved;
        return out;
      }
      case EK::Comprehend: {
        auto saved = env;
        std::string b = bind(e->name);
        std::string out = "|{" + b + " ∈ " + syntax::print_type(e->range_type) +
                          " | " + print(e->a) + " ≠ 0}⟩";
        env = saved;
        return out;
      }
      case EK::Split: {
        std::string src = ref(e->name);
        auto saved = env;
        std::string l = bind(e->left_name);
        std::string r = bind(e->right_name);
        std::string out = "(let " + l + " ⊗ " + r + " = " + src + " in " +
                          print(e->a) + ")";
        env = saved;
        return out;
      }
    }
    return "?";
  }
};

}  // namespace

std::string print_sem(const SemRef& e) {
  SemPrinter p{false};
  return p.print(e);
}

std::string alpha_canonical_sem(const SemRef& e) {
  SemPrinter p{true};
  return p.print(e);
}

bool alpha_equal_sem(const SemRef& a, const SemRef& b) {
  return alpha_canonical_sem(a) == alpha_canonical_sem(b);
}

SemRef compile(const prover::FTermRef& t) {
  using prover::FRule;
  switch (t->rule) {
    case FRule::Ax:
    case FRule::CoAx:
      return var_e(t->v1);
    case FRule::FocL:
      return comprehend_e(t->v1, t->type, compile(t->m));
    case FRule::DefocL:
    case FRule::DefocR:
      return apply_e(var_e(t->v1), compile(t->m));
    case FRule::FocR:
      return lambda_e(t->v1, compile(t->m));
    case FRule::OverL:
    case FRule::TensorR:
    case FRule::UnderL:
      return tensor_e(compile(t->m), compile(t->n));
    case FRule::OverR:
      // beta -> alpha (x) x
      return split_e(t->v3, t->v2, t->v1, compile(t->m));
    case FRule::UnderR:
      // beta -> x (x) alpha
      return split_e(t->v3, t->v1, t->v2, compile(t->m));
    case FRule::TensorL:
      // z -> x (x) y
      return split_e(t->v3, t->v1, t->v2, compile(t->m));
  }
  throw error("corrupt proof term");
}

// --------------------------------------------------------------- values

SemValue scalar_value(Scalar s) {
  SemValue v;
  v.kind = VK::Scalar;
  v.scalar = std::move(s);
  return v;
}
SemValue vector_value(fvect::Vector vec) {
  SemValue v;
  v.kind = VK::Vector;
  v.vec = std::move(vec);
  return v;
}
SemValue tuple_value(std::vector<SemValue> items) {
  SemValue v;
  v.kind = VK::Tuple;
  v.items = std::move(items);
  return v;
}
SemValue func_value(ValueFn fn) {
  SemValue v;
  v.kind = VK::Func;
  v.fn = std::move(fn);
  return v;
}

SemValue identity_continuation() {
  return func_value([](const SemValue& v) { return v; });
}

Scalar as_scalar(const SemValue& v) {
  if (v.kind == VK::Scalar) return v.scalar;
  if (v.kind == VK::Vector && v.vec.space == fvect::scalar_space())
    return v.vec.at(fvect::unit_elem());
  throw eval_error("expected a scalar value");
}

const SemValue& SemLexicon::prim(const std::string& key) const {
  auto it = prims.find(key);
  if (it == prims.end())
    throw eval_error("unknown semantic primitive: " + key);
  return it->second;
}

namespace {

bool value_nonzero(const SemValue& v) {
  if (v.kind == VK::Scalar) return scalar_nonzero(v.scalar);
  if (v.kind == VK::Vector) return !v.vec.is_zero();
  throw eval_error("comprehension body must evaluate to a scalar or vector");
}

// Flattens nested tuples into the flat a (x) f (x) b reading of tensors.
void flatten_into(const SemValue& v, std::vector<SemValue>& out) {
  if (v.kind == VK::Tuple)
    for (const auto& x : v.items) flatten_into(x, out);
  else
    out.push_back(v);
}

Vector as_tensor_vector(const SemValue& v) {
  if (v.kind == VK::Vector) return v.vec;
  if (v.kind == VK::Tuple) {
    std::vector<SemValue> flat;
    flatten_into(v, flat);
    if (flat.empty()) throw eval_error("empty tuple has no vector meaning");
    Vector acc = flat[0].kind == VK::Vector
                     ? flat[0].vec
                     : fvect::scalar_vector(as_scalar(flat[0]));
    for (std::size_t i = 1; i < flat.size(); ++i) {
      const auto& x = flat[i];
      acc = fvect::tensor(acc, x.kind == VK::Vector
                                   ? x.vec
                                   : fvect::scalar_vector(as_scalar(x)));
    }
    return acc;
  }
  if (v.kind == VK::Scalar) return fvect::scalar_vector(v.scalar);
  throw eval_error("cannot coerce a function to a vector");
}

std::string atom_label(const Vector& v) {
  if (v.coeffs.size() != 1) throw eval_error("expected an atomic basis vector");
  const auto& [b, c] = *v.coeffs.begin();
  if (b.parts.size() != 1 || b.parts[0].is_subset || !scalar_eq(c, Scalar(1)))
    throw eval_error("expected an atomic basis vector");
  return b.parts[0].label;
}

// eps . (quant (x) mu) . (delta (x) id) on P(U) (x) P(U).
LinearMap quant_pipeline(const Universe& u, oracle::Quant q) {
  Space p = fvect::power_space(u);
  LinearMap quant =
      q == oracle::Quant::All ? fvect::quant_all(u) : fvect::quant_some(u);
  return fvect::compose(
      fvect::epsilon(p),
      fvect::compose(fvect::map_tensor(quant, fvect::mu_map(u)),
                     fvect::map_tensor(fvect::delta_map(u),
                                       fvect::identity(p))));
}

SemValue quant_value(const Universe& u, oracle::Quant q) {
  return func_value([u, q](const SemValue& arg) {
    Vector w = as_tensor_vector(arg);
    // sigma first, per the lexicon table
    Space p = fvect::power_space(u);
    LinearMap pipe = fvect::compose(quant_pipeline(u, q), fvect::swap_map(p, p));
    return scalar_value(pipe.apply(w).at(fvect::unit_elem()));
  });
}

SemValue tv_value(oracle::Model model, const std::string& rel) {
  return func_value([model = std::move(model), rel](const SemValue& arg) {
    std::vector<SemValue> flat;
    flatten_into(arg, flat);
    if (flat.size() != 3 || flat[0].kind != VK::Vector ||
        flat[1].kind != VK::Func || flat[2].kind != VK::Vector)
      throw eval_error("transitive verb expects subject (x) continuation (x) "
                       "object");
    const auto& f = flat[1].fn;
    Scalar acc = 0;
    for (const auto& [ba, ca] : flat[0].vec.coeffs)
      for (const auto& [bb, cb] : flat[2].vec.coeffs) {
        if (ba.parts.size() != 1 || ba.parts[0].is_subset ||
            bb.parts.size() != 1 || bb.parts[0].is_subset)
          throw eval_error("verb arguments must live over the universe");
        Scalar w = model.relation_weight(rel, ba.parts[0].label,
                                         bb.parts[0].label);
        acc += ca * cb * as_scalar(f(scalar_value(w)));
      }
    return scalar_value(acc);
  });
}

SemValue iv_value(oracle::Model model, const std::string& pred) {
  return func_value([model = std::move(model), pred](const SemValue& arg) {
    std::vector<SemValue> flat;
    flatten_into(arg, flat);
    if (flat.size() != 2 || flat[0].kind != VK::Vector ||
        flat[1].kind != VK::Func)
      throw eval_error("intransitive verb expects subject (x) continuation");
    const auto& members = model.predicate(pred);
    Scalar acc = 0;
    for (const auto& [b, c] : flat[0].vec.coeffs) {
      if (b.parts.size() != 1 || b.parts[0].is_subset)
        throw eval_error("verb argument must live over the universe");
      Scalar w = members.count(b.parts[0].label) ? 1 : 0;
      acc += c * as_scalar(flat[1].fn(scalar_value(w)));
    }
    return scalar_value(acc);
  });
}

}  // namespace

SemLexicon build_sem_lexicon(const oracle::Model& model) {
  SemLexicon lex;
  const Universe& u = model.universe;
  lex.prims["every"] = quant_value(u, oracle::Quant::All);
  lex.prims["some"] = quant_value(u, oracle::Quant::Some);
  Space p = fvect::power_space(u);
  for (const auto& [name, members] : model.predicates) {
    BasisElem b;
    b.parts.push_back(fvect::subset_part(
        std::vector<std::string>(members.begin(), members.end())));
    lex.prims["noun:" + name] = vector_value(fvect::basis_vector(p, b));
    lex.prims["iv:" + name] = iv_value(model, name);
  }
  for (const auto& [name, pairs] : model.relations) {
    (void)pairs;
    lex.prims["tv:" + name] = tv_value(model, name);
  }
  return lex;
}

namespace {

struct Evaluator {
  const SemLexicon& lex;
  const Interpretation& I;

  SemValue eval(const SemRef& e, const Env& env) {
    switch (e->kind) {
      case EK::Var: {
        auto it = env.find(e->name);
        if (it == env.end())
          throw eval_error("unbound variable: " + e->name);
        return it->second;
      }
      case EK::Prim:
        return lex.prim(e->name);
      case EK::Tensor: {
        SemValue a = eval(e->a, env);
        SemValue b = eval(e->b, env);
        if (a.kind == VK::Vector && b.kind == VK::Vector)
          return vector_value(fvect::tensor(a.vec, b.vec));
        std::vector<SemValue> flat;
        flatten_into(a, flat);
        flatten_into(b, flat);
        return tuple_value(std::move(flat));
      }
      case EK::Apply: {
        SemValue f = eval(e->a, env);
        SemValue arg = eval(e->b, env);
        if (f.kind != VK::Func)
          throw eval_error("applying a non-function");
        return f.fn(arg);
      }
      case EK::Lambda: {
        SemRef body = e->a;
        std::string name = e->name;
        Env captured = env;
        Evaluator self = *this;
        return func_value([self, body, name, captured](const SemValue& arg) {
          Env inner = captured;
          inner[name] = arg;
          Evaluator ev = self;
          return ev.eval(body, inner);
        });
      }
      case EK::Comprehend: {
        SemSpace range = interpret_type(e->range_type, I);
        Space sp = to_space(range.shape);
        if (sp.factors.size() != 1 || sp.factors[0].power)
          throw eval_error("comprehension range must be a universe of atoms, "
                           "got " + sp.str());
        const Universe& u = sp.factors[0].universe;
        std::vector<std::string> collected;
        for (const auto& label : u) {
          Env inner = env;
          inner[e->name] =
              vector_value(fvect::basis_vector(sp, BasisElem{{fvect::atom_part(label)}}));
          if (value_nonzero(eval(e->a, inner))) collected.push_back(label);
        }
        BasisElem subset;
        subset.parts.push_back(fvect::subset_part(std::move(collected)));
        return vector_value(
            fvect::basis_vector(fvect::power_space(u), subset));
      }
      case EK::Split: {
        auto it = env.find(e->name);
        if (it == env.end())
          throw eval_error("unbound variable: " + e->name);
        const SemValue& src = it->second;
        if (src.kind == VK::Tuple) {
          std::vector<SemValue> flat;
          flatten_into(src, flat);
          if (flat.size() < 2)
            throw eval_error("cannot split a tuple of arity < 2");
          Env inner = env;
          inner[e->left_name] = flat[0];
          inner[e->right_name] =
              flat.size() == 2
                  ? flat[1]
                  : tuple_value(std::vector<SemValue>(flat.begin() + 1,
                                                      flat.end()));
          return eval(e->a, inner);
        }
        if (src.kind == VK::Vector && src.vec.space.factors.size() >= 2) {
          // linear extension over the basis, splitting after the first factor
          SemValue acc;
          bool first = true;
          for (const auto& [b, c] : src.vec.coeffs) {
            BasisElem lhs{{b.parts[0]}};
            BasisElem rhs{std::vector<fvect::BasisPart>(b.parts.begin() + 1,
                                                        b.parts.end())};
            Space ls{{src.vec.space.factors[0]}};
            Space rs{std::vector<fvect::Factor>(
                src.vec.space.factors.begin() + 1,
                src.vec.space.factors.end())};
            Env inner = env;
            inner[e->left_name] = vector_value(fvect::basis_vector(ls, lhs));
            inner[e->right_name] = vector_value(fvect::basis_vector(rs, rhs));
            SemValue body = eval(e->a, inner);
            if (body.kind == VK::Scalar)
              body = scalar_value(c * body.scalar);
            else if (body.kind == VK::Vector)
              body = vector_value(fvect::scale(c, body.vec));
            else
              throw eval_error("split body must be linear-valued");
            if (first) {
              acc = body;
              first = false;
            } else if (acc.kind == VK::Scalar && body.kind == VK::Scalar) {
              acc = scalar_value(acc.scalar + body.scalar);
            } else if (acc.kind == VK::Vector && body.kind == VK::Vector) {
              acc = vector_value(fvect::add(acc.vec, body.vec));
            } else {
              throw eval_error("split body changed value shape");
            }
          }
          if (first) return scalar_value(0);
          return acc;
        }
        throw eval_error("cannot split a non-pair value");
      }
    }
    throw error("corrupt semantic expression");
  }
};

}  // namespace

SemValue evaluate(const SemRef& e, const Env& env, const SemLexicon& lex,
                  const Interpretation& I) {
  Evaluator ev{lex, I};
  return ev.eval(e, env);
}

Scalar eval_reading(const SemRef& term,
                    const std::vector<std::string>& sem_keys,
                    const SemLexicon& lex, const Interpretation& I) {
  Env env;
  for (std::size_t i = 0; i < sem_keys.size(); ++i)
    env["x" + std::to_string(i)] = lex.prim(sem_keys[i]);
  SemValue fn = evaluate(term, env, lex, I);
  if (fn.kind != VK::Func)
    throw eval_error("compiled reading is not a continuation consumer");
  return as_scalar(fn.fn(identity_continuation()));
}

Scalar eval_single_quantified(const oracle::Model& model, oracle::Quant q,
                              const std::set<std::string>& noun_set,
                              const std::set<std::string>& pred_set) {
  const Universe& u = model.universe;
  Space p = fvect::power_space(u);
  auto subset_vec = [&](const std::set<std::string>& s) {
    BasisElem b;
    b.parts.push_back(
        fvect::subset_part(std::vector<std::string>(s.begin(), s.end())));
    return fvect::basis_vector(p, b);
  };
  Vector input = fvect::tensor(subset_vec(noun_set), subset_vec(pred_set));
  return quant_pipeline(u, q).apply(input).at(fvect::unit_elem());
}

}  // namespace scope::cps
