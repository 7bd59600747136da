#ifndef SCOPE_SYNTAX_HPP
#define SCOPE_SYNTAX_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace scope::syntax {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct unknown_atom_error : error {
  using error::error;
};

// Formula trees over atoms with *, \ and /.  Under(a, b) is a\b (argument on
// the left), Over(b, a) is b/a (argument on the right).  Equality is
// syntactic; there is no associativity and no unit.
enum class Conn { Atom, Tensor, Under, Over };

struct Type;
using TypeRef = std::shared_ptr<const Type>;

struct Type {
  Conn conn;
  std::string atom;  // only for Conn::Atom
  TypeRef left, right;
};

TypeRef make_atom(const std::string& name);
TypeRef make_tensor(TypeRef l, TypeRef r);
TypeRef make_under(TypeRef arg, TypeRef result);   // arg \ result
TypeRef make_over(TypeRef result, TypeRef arg);    // result / arg

bool type_equal(const TypeRef& a, const TypeRef& b);
std::string print_type(const TypeRef& t);

// Infix syntax: atoms, `*`, `\`, `/`, parentheses.  The slashes bind tighter
// than `*`; nesting two operators at the same level needs explicit parens.
// When `atoms` is given, any atom outside the set is rejected.
TypeRef parse_type(const std::string& src,
                   const std::set<std::string>* atoms = nullptr);

enum class Pol { Pos, Neg };

struct PolarityAssignment {
  std::map<std::string, Pol> atom_polarity;
};

// Tensor nodes are positive, both slashes negative, atoms as assigned.
Pol polarity(const PolarityAssignment& pa, const TypeRef& t);

struct LexEntry {
  TypeRef type;
  std::string sem_key;  // names a registered lexical semantic primitive
};

// A relation, not a function: a word may carry several types.
struct Lexicon {
  std::map<std::string, std::vector<LexEntry>> entries;
  TypeRef goal;
  std::set<std::string> atoms;
  PolarityAssignment pa;

  std::vector<LexEntry> lookup(const std::string& word) const;
};

// File format, one entry per line:
//   word <TAB> type-expression <TAB> semantics-key
// with a header line `goal <TAB> type-expression`, optional headers
// `atom <TAB> name <TAB> +|-` declaring the basic type set, and `#` comments.
// Without atom headers the set {np+, n+, s-} is assumed.
Lexicon parse_lexicon(const std::string& text);
Lexicon load_lexicon(const std::string& path);

}  // namespace scope::syntax

#endif
