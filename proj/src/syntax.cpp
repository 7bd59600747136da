#include "scope/syntax.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace scope::syntax {

TypeRef make_atom(const std::string& name) {
  return std::make_shared<Type>(Type{Conn::Atom, name, nullptr, nullptr});
}

TypeRef make_tensor(TypeRef l, TypeRef r) {
  return std::make_shared<Type>(
      Type{Conn::Tensor, "", std::move(l), std::move(r)});
}

TypeRef make_under(TypeRef arg, TypeRef result) {
  return std::make_shared<Type>(
      Type{Conn::Under, "", std::move(arg), std::move(result)});
}

TypeRef make_over(TypeRef result, TypeRef arg) {
  return std::make_shared<Type>(
      Type{Conn::Over, "", std::move(result), std::move(arg)});
}

bool type_equal(const TypeRef& a, const TypeRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->conn != b->conn) return false;
  if (a->conn == Conn::Atom) return a->atom == b->atom;
  return type_equal(a->left, b->left) && type_equal(a->right, b->right);
}

static void print_rec(const TypeRef& t, std::string& out, bool top) {
  if (t->conn == Conn::Atom) {
    out += t->atom;
    return;
  }
  if (!top) out += '(';
  print_rec(t->left, out, false);
  switch (t->conn) {
    case Conn::Tensor: out += '*'; break;
    case Conn::Under: out += '\\'; break;
    case Conn::Over: out += '/'; break;
    default: break;
  }
  print_rec(t->right, out, false);
  if (!top) out += ')';
}

std::string print_type(const TypeRef& t) {
  std::string out;
  print_rec(t, out, true);
  return out;
}

namespace {

struct Parser {
  const std::string& src;
  const std::set<std::string>* atoms;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

  TypeRef atom_or_group() {
    skip_ws();
    if (peek() == '(') {
      ++pos;
      TypeRef t = type();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return t;
    }
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) ||
            src[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an atom or '('");
    std::string name = src.substr(start, pos - start);
    if (atoms && !atoms->count(name))
      throw unknown_atom_error("unknown atom '" + name + "'");
    return make_atom(name);
  }

  // slash level: at most one \ or / without parentheses
  TypeRef term() {
    TypeRef l = atom_or_group();
    char c = peek();
    if (c == '\\' || c == '/') {
      ++pos;
      TypeRef r = atom_or_group();
      l = (c == '\\') ? make_under(l, r) : make_over(l, r);
      c = peek();
      if (c == '\\' || c == '/')
        fail("ambiguous slash chain, add parentheses");
    }
    return l;
  }

  TypeRef type() {
    TypeRef l = term();
    if (peek() == '*') {
      ++pos;
      TypeRef r = term();
      l = make_tensor(l, r);
      if (peek() == '*') fail("ambiguous tensor chain, add parentheses");
    }
    return l;
  }
};

}  // namespace

TypeRef parse_type(const std::string& src, const std::set<std::string>* atoms) {
  Parser p{src, atoms};
  TypeRef t = p.type();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return t;
}

Pol polarity(const PolarityAssignment& pa, const TypeRef& t) {
  switch (t->conn) {
    case Conn::Atom: {
      auto it = pa.atom_polarity.find(t->atom);
      if (it == pa.atom_polarity.end())
        throw unknown_atom_error("no polarity for atom '" + t->atom + "'");
      return it->second;
    }
    case Conn::Tensor:
      return Pol::Pos;
    case Conn::Under:
    case Conn::Over:
      return Pol::Neg;
  }
  throw error("corrupt type node");
}

std::vector<LexEntry> Lexicon::lookup(const std::string& word) const {
  auto it = entries.find(word);
  if (it == entries.end()) return {};
  return it->second;
}

static std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

static std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \r\n");
  return s.substr(b, e - b + 1);
}

Lexicon parse_lexicon(const std::string& text) {
  Lexicon lex;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> raw;
  std::string goal_src;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split_tabs(line);
    for (auto& f : fields) f = trim(f);
    if (fields[0] == "goal") {
      if (fields.size() < 2)
        throw error("lexicon line " + std::to_string(lineno) +
                    ": goal needs a type");
      goal_src = fields[1];
    } else if (fields[0] == "atom") {
      if (fields.size() < 3 || (fields[2] != "+" && fields[2] != "-"))
        throw error("lexicon line " + std::to_string(lineno) +
                    ": atom needs a name and +/-");
      lex.atoms.insert(fields[1]);
      lex.pa.atom_polarity[fields[1]] =
          fields[2] == "+" ? Pol::Pos : Pol::Neg;
    } else {
      if (fields.size() < 3)
        throw error("lexicon line " + std::to_string(lineno) +
                    ": expected word<TAB>type<TAB>semantics-key");
      raw.push_back({fields[0], {fields[1], fields[2]}});
    }
  }
  if (lex.atoms.empty()) {
    lex.atoms = {"np", "n", "s"};
    lex.pa.atom_polarity = {
        {"np", Pol::Pos}, {"n", Pol::Pos}, {"s", Pol::Neg}};
  }
  if (goal_src.empty()) throw error("lexicon has no goal line");
  lex.goal = parse_type(goal_src, &lex.atoms);
  for (auto& [word, rest] : raw)
    lex.entries[word].push_back(
        {parse_type(rest.first, &lex.atoms), rest.second});
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw error("cannot open lexicon file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_lexicon(ss.str());
}

}  // namespace scope::syntax
