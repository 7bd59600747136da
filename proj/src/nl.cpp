#include "scope/nl.hpp"

namespace scope::nl {

using syntax::Conn;
using syntax::make_over;
using syntax::make_tensor;
using syntax::make_under;
using syntax::print_type;
using syntax::type_equal;

ProofRef id_proof(TypeRef a) {
  return std::make_shared<Proof>(
      Proof{Rule::Id, std::move(a), nullptr, nullptr, nullptr});
}

ProofRef comp(ProofRef g, ProofRef f) {
  return std::make_shared<Proof>(
      Proof{Rule::Comp, nullptr, nullptr, std::move(g), std::move(f)});
}

static ProofRef unary(Rule r, ProofRef sub) {
  return std::make_shared<Proof>(
      Proof{r, nullptr, std::move(sub), nullptr, nullptr});
}

ProofRef r1(ProofRef f) { return unary(Rule::R1, std::move(f)); }
ProofRef r2(ProofRef f) { return unary(Rule::R2, std::move(f)); }
ProofRef r1inv(ProofRef g) { return unary(Rule::R1inv, std::move(g)); }
ProofRef r2inv(ProofRef g) { return unary(Rule::R2inv, std::move(g)); }

static Endpoints check_rec(const ProofRef& p, const std::string& path) {
  switch (p->rule) {
    case Rule::Id:
      return {p->type, p->type};
    case Rule::Comp: {
      Endpoints ef = check_rec(p->f, path + ".f");
      Endpoints eg = check_rec(p->g, path + ".g");
      if (!type_equal(ef.target, eg.source))
        throw ill_typed("composition mismatch: " + print_type(ef.target) +
                            " vs " + print_type(eg.source),
                        path);
      return {ef.source, eg.target};
    }
    case Rule::R1: {
      Endpoints e = check_rec(p->sub, path + ".sub");
      if (e.source->conn != Conn::Tensor)
        throw ill_typed("R1 premise source must be a tensor, got " +
                            print_type(e.source),
                        path);
      return {e.source->left, make_over(e.target, e.source->right)};
    }
    case Rule::R2: {
      Endpoints e = check_rec(p->sub, path + ".sub");
      if (e.source->conn != Conn::Tensor)
        throw ill_typed("R2 premise source must be a tensor, got " +
                            print_type(e.source),
                        path);
      return {e.source->right, make_under(e.source->left, e.target)};
    }
    case Rule::R1inv: {
      Endpoints e = check_rec(p->sub, path + ".sub");
      if (e.target->conn != Conn::Over)
        throw ill_typed("R1inv premise target must be C/B, got " +
                            print_type(e.target),
                        path);
      return {make_tensor(e.source, e.target->right), e.target->left};
    }
    case Rule::R2inv: {
      Endpoints e = check_rec(p->sub, path + ".sub");
      if (e.target->conn != Conn::Under)
        throw ill_typed("R2inv premise target must be A\\C, got " +
                            print_type(e.target),
                        path);
      return {make_tensor(e.target->left, e.source), e.target->right};
    }
  }
  throw error("corrupt proof node");
}

Endpoints check(const ProofRef& p) { return check_rec(p, ""); }

ProofRef mono_tensor(const ProofRef& f, const ProofRef& g) {
  Endpoints ef = check(f);  // A -> C
  Endpoints eg = check(g);  // B -> D
  TypeRef cd = make_tensor(ef.target, eg.target);
  // f (x) g := R1inv((R1 R2inv((R2 1_{C*D}) . g)) . f)
  return r1inv(comp(r1(r2inv(comp(r2(id_proof(cd)), g))), f));
}

ProofRef mono_over(const ProofRef& g, const ProofRef& f) {
  Endpoints ef = check(f);  // A -> C
  Endpoints eg = check(g);  // B -> D
  TypeRef bc = make_over(eg.source, ef.target);  // B/C
  // g / f := R1(g . R2inv((R2 R1inv 1_{B/C}) . f))
  return r1(comp(g, r2inv(comp(r2(r1inv(id_proof(bc))), f))));
}

ProofRef mono_under(const ProofRef& f, const ProofRef& g) {
  Endpoints ef = check(f);  // A -> C
  Endpoints eg = check(g);  // B -> D
  TypeRef cb = make_under(ef.target, eg.source);  // C\B
  // f \ g := R2(g . R1inv((R1 R2inv 1_{C\B}) . f))
  return r2(comp(g, r1inv(comp(r1(r2inv(id_proof(cb))), f))));
}

fvect::Space space_of(const TypeRef& t,
                      const std::map<std::string, fvect::Space>& I0) {
  if (t->conn == Conn::Atom) {
    auto it = I0.find(t->atom);
    if (it == I0.end())
      throw error("no space assigned to atom '" + t->atom + "'");
    return it->second;
  }
  return fvect::tensor_space(space_of(t->left, I0), space_of(t->right, I0));
}

fvect::LinearMap interpret(const ProofRef& p,
                           const std::map<std::string, fvect::Space>& I0) {
  using fvect::compose;
  using fvect::map_tensor;
  switch (p->rule) {
    case Rule::Id:
      return fvect::identity(space_of(p->type, I0));
    case Rule::Comp:
      return compose(interpret(p->g, I0), interpret(p->f, I0));
    case Rule::R1: {
      Endpoints e = check(p->sub);  // A*B -> C
      auto a = space_of(e.source->left, I0);
      auto b = space_of(e.source->right, I0);
      auto sub = interpret(p->sub, I0);
      return compose(map_tensor(sub, fvect::identity(b)),
                     map_tensor(fvect::identity(a), fvect::eta(b)));
    }
    case Rule::R2: {
      Endpoints e = check(p->sub);  // A*B -> C
      auto a = space_of(e.source->left, I0);
      auto b = space_of(e.source->right, I0);
      auto sub = interpret(p->sub, I0);
      return compose(map_tensor(fvect::identity(a), sub),
                     map_tensor(fvect::eta(a), fvect::identity(b)));
    }
    case Rule::R1inv: {
      Endpoints e = check(p->sub);  // A -> C/B
      auto c = space_of(e.target->left, I0);
      auto b = space_of(e.target->right, I0);
      auto sub = interpret(p->sub, I0);
      return compose(map_tensor(fvect::identity(c), fvect::epsilon(b)),
                     map_tensor(sub, fvect::identity(b)));
    }
    case Rule::R2inv: {
      Endpoints e = check(p->sub);  // B -> A\C
      auto a = space_of(e.target->left, I0);
      auto c = space_of(e.target->right, I0);
      auto sub = interpret(p->sub, I0);
      return compose(map_tensor(fvect::epsilon(a), fvect::identity(c)),
                     map_tensor(fvect::identity(a), sub));
    }
  }
  throw error("corrupt proof node");
}

fvect::Vector sentence_value(const ProofRef& p,
                             const std::map<std::string, fvect::Space>& I0,
                             const std::vector<fvect::Vector>& words) {
  if (words.empty()) throw error("no word vectors given");
  fvect::Vector input = words[0];
  for (std::size_t i = 1; i < words.size(); ++i)
    input = fvect::tensor(input, words[i]);
  auto map = interpret(p, I0);
  if (map.domain != input.space)
    throw fvect::space_mismatch("proof source space " + map.domain.str() +
                                " does not match word tensor " +
                                input.space.str());
  return map.apply(input);
}

}  // namespace scope::nl
