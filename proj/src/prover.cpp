#include "scope/prover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace scope::prover {

using syntax::Conn;
using syntax::Pol;
using syntax::polarity;
using syntax::print_type;
using syntax::type_equal;

StructRef leaf(std::string var, TypeRef type) {
  return std::make_shared<Struct>(
      Struct{SK::Leaf, std::move(var), std::move(type), nullptr, nullptr});
}

StructRef focus_leaf(TypeRef type) {
  return std::make_shared<Struct>(
      Struct{SK::Focus, "", std::move(type), nullptr, nullptr});
}

StructRef bullet(StructRef l, StructRef r) {
  return std::make_shared<Struct>(
      Struct{SK::Bullet, "", nullptr, std::move(l), std::move(r)});
}

bool struct_equal(const StructRef& a, const StructRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case SK::Leaf:
      return a->var == b->var && type_equal(a->type, b->type);
    case SK::Focus:
      return type_equal(a->type, b->type);
    case SK::Bullet:
      return struct_equal(a->left, b->left) && struct_equal(a->right, b->right);
  }
  return false;
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (!struct_equal(a.antecedent, b.antecedent)) return false;
  const auto& x = a.succedent;
  const auto& y = b.succedent;
  if (x.focused != y.focused) return false;
  if (!x.focused && x.covar != y.covar) return false;
  return type_equal(x.type, y.type);
}

std::string print_struct(const StructRef& s) {
  switch (s->kind) {
    case SK::Leaf:
      return s->var + ":" + print_type(s->type);
    case SK::Focus:
      return "[" + print_type(s->type) + "]";
    case SK::Bullet:
      return "(" + print_struct(s->left) + " • " +
             print_struct(s->right) + ")";
  }
  return "?";
}

std::string print_sequent(const Sequent& s) {
  std::string ant = print_struct(s.antecedent);
  if (s.antecedent->kind == SK::Bullet && ant.size() >= 2)
    ant = ant.substr(1, ant.size() - 2);  // drop outermost parens
  std::string suc = s.succedent.focused
                        ? "[" + print_type(s.succedent.type) + "]"
                        : s.succedent.covar + ":" + print_type(s.succedent.type);
  return ant + " ⊢ " + suc;
}

// ---------------------------------------------------------------- terms

static FTermRef node(FRule r, TypeRef ty, std::string v1, std::string v2,
                     std::string v3, FTermRef m, FTermRef n) {
  return std::make_shared<FTerm>(FTerm{r, std::move(ty), std::move(v1),
                                       std::move(v2), std::move(v3),
                                       std::move(m), std::move(n)});
}

FTermRef ax(TypeRef t, std::string v) {
  return node(FRule::Ax, std::move(t), std::move(v), "", "", nullptr, nullptr);
}
FTermRef coax(TypeRef t, std::string a) {
  return node(FRule::CoAx, std::move(t), std::move(a), "", "", nullptr,
              nullptr);
}
FTermRef foc_l(FTermRef m, std::string x, TypeRef t) {
  return node(FRule::FocL, std::move(t), std::move(x), "", "", std::move(m),
              nullptr);
}
FTermRef defoc_l(FTermRef m, std::string x) {
  return node(FRule::DefocL, nullptr, std::move(x), "", "", std::move(m),
              nullptr);
}
FTermRef defoc_r(FTermRef m, std::string a) {
  return node(FRule::DefocR, nullptr, std::move(a), "", "", std::move(m),
              nullptr);
}
FTermRef foc_r(FTermRef m, std::string a) {
  return node(FRule::FocR, nullptr, std::move(a), "", "", std::move(m),
              nullptr);
}
FTermRef over_l(FTermRef m, FTermRef n) {
  return node(FRule::OverL, nullptr, "", "", "", std::move(m), std::move(n));
}
FTermRef over_r(FTermRef m, std::string x, std::string ain, std::string aout) {
  return node(FRule::OverR, nullptr, std::move(x), std::move(ain),
              std::move(aout), std::move(m), nullptr);
}
FTermRef tensor_l(FTermRef m, std::string x, std::string y, std::string z) {
  return node(FRule::TensorL, nullptr, std::move(x), std::move(y),
              std::move(z), std::move(m), nullptr);
}
FTermRef tensor_r(FTermRef m, FTermRef n) {
  return node(FRule::TensorR, nullptr, "", "", "", std::move(m), std::move(n));
}
FTermRef under_l(FTermRef m, FTermRef n) {
  return node(FRule::UnderL, nullptr, "", "", "", std::move(m), std::move(n));
}
FTermRef under_r(FTermRef m, std::string x, std::string ain,
                 std::string aout) {
  return node(FRule::UnderR, nullptr, std::move(x), std::move(ain),
              std::move(aout), std::move(m), nullptr);
}

static const char* rule_name(FRule r) {
  switch (r) {
    case FRule::Ax: return "Ax";
    case FRule::CoAx: return "CoAx";
    case FRule::FocL: return "↽";
    case FRule::DefocL: return "↼";
    case FRule::DefocR: return "⇀";
    case FRule::FocR: return "⇁";
    case FRule::OverL: return "/L";
    case FRule::OverR: return "/R";
    case FRule::TensorL: return "⊗L";
    case FRule::TensorR: return "⊗R";
    case FRule::UnderL: return "\\L";
    case FRule::UnderR: return "\\R";
  }
  return "?";
}

namespace {

struct TermPrinter {
  bool canonical;
  std::map<std::string, std::string> env;
  int next = 0;

  std::string bind(const std::string& name) {
    if (!canonical) return name;
    std::string fresh = "b" + std::to_string(next++);
    env[name] = fresh;
    return fresh;
  }

  std::string ref(const std::string& name) const {
    if (!canonical) return name;
    auto it = env.find(name);
    return it == env.end() ? name : it->second;
  }

  std::string print(const FTermRef& t) {
    std::ostringstream os;
    os << rule_name(t->rule) << "(";
    switch (t->rule) {
      case FRule::Ax:
      case FRule::CoAx:
        os << print_type(t->type) << "," << ref(t->v1);
        break;
      case FRule::FocL: {
        auto saved = env;
        std::string b = bind(t->v1);
        os << print(t->m) << "," << b << "," << print_type(t->type);
        env = saved;
        break;
      }
      case FRule::DefocL:
      case FRule::DefocR:
        os << print(t->m) << "," << ref(t->v1);
        break;
      case FRule::FocR: {
        auto saved = env;
        std::string b = bind(t->v1);
        os << print(t->m) << "," << b;
        env = saved;
        break;
      }
      case FRule::OverL:
      case FRule::TensorR:
      case FRule::UnderL:
        os << print(t->m) << "," << print(t->n);
        break;
      case FRule::OverR:
      case FRule::UnderR: {
        auto saved = env;
        std::string bx = bind(t->v1);
        std::string ba = bind(t->v2);
        os << print(t->m) << "," << bx << "," << ba << "," << ref(t->v3);
        env = saved;
        break;
      }
      case FRule::TensorL: {
        auto saved = env;
        std::string bx = bind(t->v1);
        std::string by = bind(t->v2);
        os << print(t->m) << "," << bx << "," << by << "," << ref(t->v3);
        env = saved;
        break;
      }
    }
    os << ")";
    return os.str();
  }
};

}  // namespace

std::string term_str(const FTermRef& t) {
  TermPrinter p{false};
  return p.print(t);
}

std::string alpha_canonical(const FTermRef& t) {
  TermPrinter p{true};
  return p.print(t);
}

bool alpha_equal(const FTermRef& a, const FTermRef& b) {
  return alpha_canonical(a) == alpha_canonical(b);
}

// ---------------------------------------------------------------- search

namespace {

using Path = std::vector<int>;  // 0 = left, 1 = right

std::optional<Path> find_focus(const StructRef& s) {
  switch (s->kind) {
    case SK::Leaf:
      return std::nullopt;
    case SK::Focus:
      return Path{};
    case SK::Bullet: {
      if (auto p = find_focus(s->left)) {
        p->insert(p->begin(), 0);
        return p;
      }
      if (auto p = find_focus(s->right)) {
        p->insert(p->begin(), 1);
        return p;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

int count_focus(const StructRef& s) {
  switch (s->kind) {
    case SK::Leaf: return 0;
    case SK::Focus: return 1;
    case SK::Bullet: return count_focus(s->left) + count_focus(s->right);
  }
  return 0;
}

StructRef get_at(const StructRef& s, const Path& p, std::size_t i = 0) {
  if (i == p.size()) return s;
  return get_at(p[i] == 0 ? s->left : s->right, p, i + 1);
}

StructRef replace_at(const StructRef& s, const Path& p, const StructRef& sub,
                     std::size_t i = 0) {
  if (i == p.size()) return sub;
  if (p[i] == 0) return bullet(replace_at(s->left, p, sub, i + 1), s->right);
  return bullet(s->left, replace_at(s->right, p, sub, i + 1));
}

void collect_leaves(const StructRef& s, Path& prefix,
                    std::vector<std::pair<Path, StructRef>>& out) {
  switch (s->kind) {
    case SK::Leaf:
      out.push_back({prefix, s});
      return;
    case SK::Focus:
      return;
    case SK::Bullet:
      prefix.push_back(0);
      collect_leaves(s->left, prefix, out);
      prefix.back() = 1;
      collect_leaves(s->right, prefix, out);
      prefix.pop_back();
      return;
  }
}

std::vector<std::pair<Path, StructRef>> leaves_of(const StructRef& s) {
  std::vector<std::pair<Path, StructRef>> out;
  Path p;
  collect_leaves(s, p, out);
  return out;
}

void erase_names(const StructRef& s, std::string& out) {
  switch (s->kind) {
    case SK::Leaf:
      out += "l<" + print_type(s->type) + ">";
      return;
    case SK::Focus:
      out += "f<" + print_type(s->type) + ">";
      return;
    case SK::Bullet:
      out += "(";
      erase_names(s->left, out);
      out += ".";
      erase_names(s->right, out);
      out += ")";
      return;
  }
}

std::string memo_key(const Sequent& seq) {
  std::string key;
  erase_names(seq.antecedent, key);
  key += seq.succedent.focused ? "|-[" : "|-";
  key += print_type(seq.succedent.type);
  return key;
}

struct Names {
  int var = 0;
  int covar = 0;
  std::string fresh_var() { return "x" + std::to_string(var++); }
  std::string fresh_covar() { return "a" + std::to_string(covar++); }
};

struct Search {
  const PolarityAssignment& pa;
  std::size_t limit;
  std::map<std::string, bool> fail_memo;

  void append(std::vector<FTermRef>& acc, std::vector<FTermRef> more) {
    for (auto& t : more) {
      acc.push_back(std::move(t));
      if (acc.size() > limit)
        throw limit_exceeded("proof enumeration exceeded limit of " +
                             std::to_string(limit));
    }
  }

  std::vector<FTermRef> run(const Sequent& seq, Names names) {
    std::string key = memo_key(seq);
    auto memo = fail_memo.find(key);
    if (memo != fail_memo.end()) return {};
    auto out = dispatch(seq, names);
    if (out.empty()) fail_memo[key] = true;
    return out;
  }

  std::vector<FTermRef> dispatch(const Sequent& seq, Names names) {
    if (seq.succedent.focused) return right_focus(seq, names);
    if (auto p = find_focus(seq.antecedent))
      return left_focus(seq, *p, names);
    return neutral(seq, names);
  }

  std::vector<FTermRef> right_focus(const Sequent& seq, Names names) {
    const TypeRef& a = seq.succedent.type;
    std::vector<FTermRef> out;
    if (polarity(pa, a) == Pol::Pos) {
      if (a->conn == Conn::Atom) {
        const auto& ant = seq.antecedent;
        if (ant->kind == SK::Leaf && type_equal(ant->type, a))
          out.push_back(ax(a, ant->var));
      } else if (a->conn == Conn::Tensor &&
                 seq.antecedent->kind == SK::Bullet) {
        auto ms = run({seq.antecedent->left, Succedent{true, "", a->left}},
                      names);
        if (!ms.empty()) {
          auto ns = run({seq.antecedent->right, Succedent{true, "", a->right}},
                        names);
          for (const auto& m : ms)
            for (const auto& n : ns) append(out, {tensor_r(m, n)});
        }
      }
    } else {
      std::string alpha = names.fresh_covar();
      for (auto& m : run({seq.antecedent, Succedent{false, alpha, a}}, names))
        append(out, {foc_r(std::move(m), alpha)});
    }
    return out;
  }

  std::vector<FTermRef> left_focus(const Sequent& seq, const Path& path,
                                   Names names) {
    TypeRef a = get_at(seq.antecedent, path)->type;
    std::vector<FTermRef> out;
    if (polarity(pa, a) == Pol::Pos) {
      std::string x = names.fresh_var();
      Sequent prem{replace_at(seq.antecedent, path, leaf(x, a)),
                   seq.succedent};
      for (auto& m : run(prem, names))
        append(out, {foc_l(std::move(m), x, a)});
      return out;
    }
    // CoAx
    if (a->conn == Conn::Atom && path.empty() && !seq.succedent.focused &&
        type_equal(a, seq.succedent.type))
      out.push_back(coax(a, seq.succedent.covar));
    // /L: focused A/B must sit as left child of a bullet
    if (a->conn == Conn::Over && !path.empty() && path.back() == 0) {
      Path parent(path.begin(), path.end() - 1);
      StructRef sibling = get_at(seq.antecedent, parent)->right;
      Sequent prem_m{
          replace_at(seq.antecedent, parent, focus_leaf(a->left)),
          seq.succedent};
      auto ms = run(prem_m, names);
      if (!ms.empty()) {
        auto ns = run({sibling, Succedent{true, "", a->right}}, names);
        for (const auto& m : ms)
          for (const auto& n : ns) append(out, {over_l(m, n)});
      }
    }
    // \L: focused B\A must sit as right child of a bullet
    if (a->conn == Conn::Under && !path.empty() && path.back() == 1) {
      Path parent(path.begin(), path.end() - 1);
      StructRef sibling = get_at(seq.antecedent, parent)->left;
      auto ms = run({sibling, Succedent{true, "", a->left}}, names);
      if (!ms.empty()) {
        Sequent prem_n{
            replace_at(seq.antecedent, parent, focus_leaf(a->right)),
            seq.succedent};
        auto ns = run(prem_n, names);
        for (const auto& m : ms)
          for (const auto& n : ns) append(out, {under_l(m, n)});
      }
    }
    return out;
  }

  std::vector<FTermRef> neutral(const Sequent& seq, Names names) {
    std::vector<FTermRef> out;
    auto leaves = leaves_of(seq.antecedent);
    // DefocL on each negative hypothesis, leftmost first
    for (const auto& [path, lf] : leaves) {
      if (polarity(pa, lf->type) != Pol::Neg) continue;
      Sequent prem{replace_at(seq.antecedent, path, focus_leaf(lf->type)),
                   seq.succedent};
      for (auto& m : run(prem, names))
        append(out, {defoc_l(std::move(m), lf->var)});
    }
    // DefocR on a positive succedent
    const TypeRef& c = seq.succedent.type;
    if (polarity(pa, c) == Pol::Pos) {
      for (auto& m : run({seq.antecedent, Succedent{true, "", c}}, names))
        append(out, {defoc_r(std::move(m), seq.succedent.covar)});
    }
    // /R
    if (c->conn == Conn::Over) {
      Names nm = names;
      std::string x = nm.fresh_var();
      std::string alpha = nm.fresh_covar();
      Sequent prem{bullet(seq.antecedent, leaf(x, c->right)),
                   Succedent{false, alpha, c->left}};
      for (auto& m : run(prem, nm))
        append(out, {over_r(std::move(m), x, alpha, seq.succedent.covar)});
    }
    // TensorL on each tensor hypothesis, leftmost first
    for (const auto& [path, lf] : leaves) {
      if (lf->type->conn != Conn::Tensor) continue;
      Names nm = names;
      std::string x = nm.fresh_var();
      std::string y = nm.fresh_var();
      Sequent prem{
          replace_at(seq.antecedent, path,
                     bullet(leaf(x, lf->type->left), leaf(y, lf->type->right))),
          seq.succedent};
      for (auto& m : run(prem, nm))
        append(out, {tensor_l(std::move(m), x, y, lf->var)});
    }
    // \R
    if (c->conn == Conn::Under) {
      Names nm = names;
      std::string x = nm.fresh_var();
      std::string alpha = nm.fresh_covar();
      Sequent prem{bullet(leaf(x, c->left), seq.antecedent),
                   Succedent{false, alpha, c->right}};
      for (auto& m : run(prem, nm))
        append(out, {under_r(std::move(m), x, alpha, seq.succedent.covar)});
    }
    return out;
  }
};

void collect_names(const StructRef& s, std::set<std::string>& names) {
  if (s->kind == SK::Leaf) names.insert(s->var);
  if (s->kind == SK::Bullet) {
    collect_names(s->left, names);
    collect_names(s->right, names);
  }
}

int next_index(const std::set<std::string>& names, char prefix) {
  int max = -1;
  for (const auto& n : names) {
    if (n.size() < 2 || n[0] != prefix) continue;
    if (n.find_first_not_of("0123456789", 1) != std::string::npos) continue;
    max = std::max(max, std::stoi(n.substr(1)));
  }
  return max + 1;
}

}  // namespace

std::vector<FTermRef> prove_all(const Sequent& seq,
                                const PolarityAssignment& pa,
                                std::size_t limit) {
  int foci = count_focus(seq.antecedent) + (seq.succedent.focused ? 1 : 0);
  if (foci > 1) throw error("ill-formed sequent: more than one focus");
  std::set<std::string> names;
  collect_names(seq.antecedent, names);
  if (!seq.succedent.focused) names.insert(seq.succedent.covar);
  Names fresh{next_index(names, 'x'), next_index(names, 'a')};

  Search search{pa, limit, {}};
  auto found = search.run(seq, fresh);

  std::vector<FTermRef> out;
  std::set<std::string> seen;
  for (auto& t : found)
    if (seen.insert(alpha_canonical(t)).second) out.push_back(std::move(t));
  return out;
}

// ------------------------------------------------------------- checking

namespace {

[[noreturn]] void bad(const FTermRef& t, const std::string& why) {
  throw check_error(std::string(rule_name(t->rule)) + ": " + why);
}

// Locates the unique leaf named `var`; throws if absent or duplicated.
std::optional<Path> find_leaf(const StructRef& s, const std::string& var) {
  auto leaves = leaves_of(s);
  std::optional<Path> hit;
  for (const auto& [p, lf] : leaves) {
    if (lf->var != var) continue;
    if (hit) throw check_error("duplicate hypothesis variable " + var);
    hit = p;
  }
  return hit;
}

}  // namespace

Sequent conclusion_of(const FTermRef& t, const PolarityAssignment& pa) {
  switch (t->rule) {
    case FRule::Ax:
      if (t->type->conn != Conn::Atom || polarity(pa, t->type) != Pol::Pos)
        bad(t, "axiom type must be a positive atom");
      return {leaf(t->v1, t->type), Succedent{true, "", t->type}};
    case FRule::CoAx:
      if (t->type->conn != Conn::Atom || polarity(pa, t->type) != Pol::Neg)
        bad(t, "coaxiom type must be a negative atom");
      return {focus_leaf(t->type), Succedent{false, t->v1, t->type}};
    case FRule::FocL: {
      Sequent prem = conclusion_of(t->m, pa);
      if (polarity(pa, t->type) != Pol::Pos)
        bad(t, "left focus requires a positive type");
      if (prem.succedent.focused || find_focus(prem.antecedent))
        bad(t, "premise must be focus-free");
      auto p = find_leaf(prem.antecedent, t->v1);
      if (!p) bad(t, "bound variable " + t->v1 + " not in premise");
      if (!type_equal(get_at(prem.antecedent, *p)->type, t->type))
        bad(t, "focused type does not match hypothesis");
      return {replace_at(prem.antecedent, *p, focus_leaf(t->type)),
              prem.succedent};
    }
    case FRule::DefocL: {
      Sequent prem = conclusion_of(t->m, pa);
      auto p = find_focus(prem.antecedent);
      if (!p) bad(t, "premise has no left focus");
      TypeRef a = get_at(prem.antecedent, *p)->type;
      if (polarity(pa, a) != Pol::Neg)
        bad(t, "left defocus requires a negative type");
      return {replace_at(prem.antecedent, *p, leaf(t->v1, a)), prem.succedent};
    }
    case FRule::DefocR: {
      Sequent prem = conclusion_of(t->m, pa);
      if (!prem.succedent.focused) bad(t, "premise succedent not in focus");
      if (polarity(pa, prem.succedent.type) != Pol::Pos)
        bad(t, "right defocus requires a positive type");
      return {prem.antecedent, Succedent{false, t->v1, prem.succedent.type}};
    }
    case FRule::FocR: {
      Sequent prem = conclusion_of(t->m, pa);
      if (prem.succedent.focused || prem.succedent.covar != t->v1)
        bad(t, "premise succedent must be covariable " + t->v1);
      if (find_focus(prem.antecedent)) bad(t, "premise must be focus-free");
      if (polarity(pa, prem.succedent.type) != Pol::Neg)
        bad(t, "right focus requires a negative type");
      return {prem.antecedent, Succedent{true, "", prem.succedent.type}};
    }
    case FRule::OverL: {
      Sequent pm = conclusion_of(t->m, pa);
      Sequent pn = conclusion_of(t->n, pa);
      auto p = find_focus(pm.antecedent);
      if (!p) bad(t, "main premise has no left focus");
      if (!pn.succedent.focused) bad(t, "argument premise not right-focused");
      if (find_focus(pn.antecedent))
        bad(t, "argument premise antecedent must be focus-free");
      TypeRef a = get_at(pm.antecedent, *p)->type;
      TypeRef over = syntax::make_over(a, pn.succedent.type);
      return {replace_at(pm.antecedent, *p,
                         bullet(focus_leaf(over), pn.antecedent)),
              pm.succedent};
    }
    case FRule::UnderL: {
      Sequent pm = conclusion_of(t->m, pa);  // Y |- [B]
      Sequent pn = conclusion_of(t->n, pa);  // X[[A]] |- Z
      if (!pm.succedent.focused) bad(t, "argument premise not right-focused");
      if (find_focus(pm.antecedent))
        bad(t, "argument premise antecedent must be focus-free");
      auto p = find_focus(pn.antecedent);
      if (!p) bad(t, "main premise has no left focus");
      TypeRef a = get_at(pn.antecedent, *p)->type;
      TypeRef under = syntax::make_under(pm.succedent.type, a);
      return {replace_at(pn.antecedent, *p,
                         bullet(pm.antecedent, focus_leaf(under))),
              pn.succedent};
    }
    case FRule::TensorR: {
      Sequent pm = conclusion_of(t->m, pa);
      Sequent pn = conclusion_of(t->n, pa);
      if (!pm.succedent.focused || !pn.succedent.focused)
        bad(t, "both premises must be right-focused");
      if (find_focus(pm.antecedent) || find_focus(pn.antecedent))
        bad(t, "premise antecedents must be focus-free");
      return {bullet(pm.antecedent, pn.antecedent),
              Succedent{true, "",
                        syntax::make_tensor(pm.succedent.type,
                                            pn.succedent.type)}};
    }
    case FRule::OverR: {
      Sequent prem = conclusion_of(t->m, pa);  // X . x:B |- alpha:A
      if (prem.succedent.focused || prem.succedent.covar != t->v2)
        bad(t, "premise succedent must be covariable " + t->v2);
      if (prem.antecedent->kind != SK::Bullet ||
          prem.antecedent->right->kind != SK::Leaf ||
          prem.antecedent->right->var != t->v1)
        bad(t, "premise antecedent must end in hypothesis " + t->v1);
      return {prem.antecedent->left,
              Succedent{false, t->v3,
                        syntax::make_over(prem.succedent.type,
                                          prem.antecedent->right->type)}};
    }
    case FRule::UnderR: {
      Sequent prem = conclusion_of(t->m, pa);  // x:B . X |- alpha:A
      if (prem.succedent.focused || prem.succedent.covar != t->v2)
        bad(t, "premise succedent must be covariable " + t->v2);
      if (prem.antecedent->kind != SK::Bullet ||
          prem.antecedent->left->kind != SK::Leaf ||
          prem.antecedent->left->var != t->v1)
        bad(t, "premise antecedent must start with hypothesis " + t->v1);
      return {prem.antecedent->right,
              Succedent{false, t->v3,
                        syntax::make_under(prem.antecedent->left->type,
                                           prem.succedent.type)}};
    }
    case FRule::TensorL: {
      Sequent prem = conclusion_of(t->m, pa);
      auto px = find_leaf(prem.antecedent, t->v1);
      if (!px || px->empty()) bad(t, "split hypotheses not found");
      Path parent(px->begin(), px->end() - 1);
      StructRef b = get_at(prem.antecedent, parent);
      if (b->kind != SK::Bullet || b->left->kind != SK::Leaf ||
          b->right->kind != SK::Leaf || b->left->var != t->v1 ||
          b->right->var != t->v2)
        bad(t, "premise must pair hypotheses " + t->v1 + " and " + t->v2);
      return {replace_at(
                  prem.antecedent, parent,
                  leaf(t->v3, syntax::make_tensor(b->left->type,
                                                  b->right->type))),
              prem.succedent};
    }
  }
  throw check_error("corrupt proof term");
}

bool validate(const FTermRef& t, const Sequent& expected,
              const PolarityAssignment& pa) {
  try {
    return sequent_equal(conclusion_of(t, pa), expected);
  } catch (const check_error&) {
    return false;
  }
}

// ------------------------------------------------------------ sentences

BracketRef default_bracketing(std::size_t n) {
  if (n == 0) throw error("empty sentence");
  auto pos = [](int i) {
    return std::make_shared<Bracket>(Bracket{i, nullptr, nullptr});
  };
  auto join = [](BracketRef l, BracketRef r) {
    return std::make_shared<Bracket>(
        Bracket{-1, std::move(l), std::move(r)});
  };
  if (n == 1) return pos(0);
  BracketRef head = join(pos(0), pos(1));
  if (n == 2) return head;
  BracketRef tail = pos(static_cast<int>(n) - 1);
  for (int i = static_cast<int>(n) - 2; i >= 2; --i)
    tail = join(pos(i), tail);
  return join(head, tail);
}

namespace {

BracketRef parse_bracket_rec(const std::string& s, std::size_t& i,
                             std::size_t n, std::vector<bool>& used) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size()) throw error("bracket spec: unexpected end");
  if (s[i] == '(') {
    ++i;
    BracketRef l = parse_bracket_rec(s, i, n, used);
    BracketRef r = parse_bracket_rec(s, i, n, used);
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != ')') throw error("bracket spec: expected ')'");
    ++i;
    return std::make_shared<Bracket>(Bracket{-1, std::move(l), std::move(r)});
  }
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw error("bracket spec: expected a position or '('");
  int pos = std::stoi(s.substr(start, i - start)) - 1;
  if (pos < 0 || static_cast<std::size_t>(pos) >= n)
    throw error("bracket spec: position out of range");
  if (used[pos]) throw error("bracket spec: duplicate position");
  used[pos] = true;
  return std::make_shared<Bracket>(Bracket{pos, nullptr, nullptr});
}

}  // namespace

BracketRef parse_brackets(const std::string& spec, std::size_t n) {
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  BracketRef b = parse_bracket_rec(spec, i, n, used);
  while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i])))
    ++i;
  if (i != spec.size()) throw error("bracket spec: trailing input");
  for (std::size_t k = 0; k < n; ++k)
    if (!used[k]) throw error("bracket spec: position " +
                              std::to_string(k + 1) + " missing");
  return b;
}

namespace {

StructRef build_antecedent(const BracketRef& b,
                           const std::vector<TypeRef>& types) {
  if (b->pos >= 0)
    return leaf("x" + std::to_string(b->pos), types[b->pos]);
  return bullet(build_antecedent(b->left, types),
                build_antecedent(b->right, types));
}

}  // namespace

std::vector<Sequent> sentence_sequent(const std::vector<std::string>& words,
                                      const Lexicon& lex,
                                      const BracketRef& bracketing) {
  std::vector<std::vector<syntax::LexEntry>> choices;
  for (const auto& w : words) {
    auto entries = lex.lookup(w);
    if (entries.empty()) throw error("unknown word: " + w);
    choices.push_back(std::move(entries));
  }
  std::vector<Sequent> out;
  std::vector<std::size_t> idx(words.size(), 0);
  while (true) {
    std::vector<TypeRef> types;
    for (std::size_t i = 0; i < words.size(); ++i)
      types.push_back(choices[i][idx[i]].type);
    out.push_back({build_antecedent(bracketing, types),
                   Succedent{true, "", lex.goal}});
    std::size_t k = words.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

// -------------------------------------------------------------- render

namespace {

void render_rec(const FTermRef& t, const PolarityAssignment& pa, int depth,
                std::string& out) {
  if (t->m) render_rec(t->m, pa, depth + 1, out);
  if (t->n) render_rec(t->n, pa, depth + 1, out);
  out += std::string(2 * static_cast<std::size_t>(depth), ' ');
  out += rule_name(t->rule);
  out += ": ";
  out += print_sequent(conclusion_of(t, pa));
  out += "\n";
}

}  // namespace

std::string render(const FTermRef& t, const PolarityAssignment& pa) {
  std::string out;
  render_rec(t, pa, 0, out);
  return out;
}

}  // namespace scope::prover
