#include "scope/fvect.hpp"

#include <algorithm>
#include <sstream>

namespace scope::fvect {

static constexpr std::size_t kMaxPowerUniverse = 16;

std::size_t Space::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors) {
    if (f.power) {
      if (f.universe.size() > kMaxPowerUniverse)
        throw enumeration_cap("powerset basis over universe of size " +
                              std::to_string(f.universe.size()) +
                              " exceeds the cap of 16");
      d *= std::size_t(1) << f.universe.size();
    } else {
      d *= f.universe.size();
    }
  }
  return d;
}

std::string Space::str() const {
  if (factors.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "(x)";
    const auto& f = factors[i];
    out += f.power ? "P{" : "{";
    for (std::size_t j = 0; j < f.universe.size(); ++j) {
      if (j) out += ",";
      out += f.universe[j];
    }
    out += "}";
  }
  return out;
}

Space atom_space(const Universe& u) { return Space{{Factor{false, u}}}; }
Space power_space(const Universe& u) { return Space{{Factor{true, u}}}; }

Space tensor_space(const Space& a, const Space& b) {
  Space s = a;
  s.factors.insert(s.factors.end(), b.factors.begin(), b.factors.end());
  return s;
}

Space unit_space() { return Space{}; }
Space scalar_space() { return Space{}; }

BasisPart atom_part(const std::string& label) {
  return BasisPart{false, label, {}};
}

BasisPart subset_part(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return BasisPart{true, "", std::move(members)};
}

std::string BasisElem::str() const {
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    const auto& p = parts[i];
    if (p.is_subset) {
      out += "{";
      for (std::size_t j = 0; j < p.subset.size(); ++j) {
        if (j) out += " ";
        out += p.subset[j];
      }
      out += "}";
    } else {
      out += p.label;
    }
  }
  return out;
}

BasisElem unit_elem() { return BasisElem{}; }

BasisElem pair_elem(const BasisElem& a, const BasisElem& b) {
  BasisElem e = a;
  e.parts.insert(e.parts.end(), b.parts.begin(), b.parts.end());
  return e;
}

static std::vector<BasisPart> factor_basis(const Factor& f) {
  std::vector<BasisPart> out;
  if (!f.power) {
    for (const auto& u : f.universe) out.push_back(atom_part(u));
    return out;
  }
  if (f.universe.size() > kMaxPowerUniverse)
    throw enumeration_cap("powerset basis over universe of size " +
                          std::to_string(f.universe.size()) +
                          " exceeds the cap of 16");
  std::size_t n = f.universe.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) members.push_back(f.universe[i]);
    out.push_back(subset_part(std::move(members)));
  }
  return out;
}

std::vector<BasisElem> enumerate_basis(const Space& s) {
  std::vector<BasisElem> out{unit_elem()};
  for (const auto& f : s.factors) {
    std::vector<BasisElem> next;
    auto parts = factor_basis(f);
    next.reserve(out.size() * parts.size());
    for (const auto& e : out)
      for (const auto& p : parts) {
        BasisElem e2 = e;
        e2.parts.push_back(p);
        next.push_back(std::move(e2));
      }
    out = std::move(next);
  }
  return out;
}

bool space_contains(const Space& s, const BasisElem& b) {
  if (b.parts.size() != s.factors.size()) return false;
  for (std::size_t i = 0; i < b.parts.size(); ++i) {
    const auto& f = s.factors[i];
    const auto& p = b.parts[i];
    if (p.is_subset != f.power) return false;
    if (!f.power) {
      if (std::find(f.universe.begin(), f.universe.end(), p.label) ==
          f.universe.end())
        return false;
    } else {
      for (const auto& m : p.subset)
        if (std::find(f.universe.begin(), f.universe.end(), m) ==
            f.universe.end())
          return false;
    }
  }
  return true;
}

Scalar Vector::at(const BasisElem& b) const {
  auto it = coeffs.find(b);
  return it == coeffs.end() ? Scalar(0) : it->second;
}

bool Vector::is_zero() const { return coeffs.empty(); }

bool Vector::operator==(const Vector& o) const {
  if (space != o.space) return false;
  if (coeffs.size() != o.coeffs.size()) {
#ifndef SCOPE_SCALAR_DOUBLE
    return false;
#endif
  }
  for (const auto& [b, c] : coeffs)
    if (!scalar_eq(c, o.at(b))) return false;
  for (const auto& [b, c] : o.coeffs)
    if (!scalar_eq(c, at(b))) return false;
  return true;
}

std::string Vector::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    if (!scalar_eq(c, Scalar(1))) os << scalar_str(c) << "*";
    os << "|" << b.str() << ">";
  }
  return os.str();
}

Vector zero_vector(const Space& s) { return Vector{s, {}}; }

Vector basis_vector(const Space& s, const BasisElem& b) {
  if (!space_contains(s, b))
    throw space_mismatch("basis element " + b.str() + " not in space " +
                         s.str());
  Vector v{s, {}};
  v.coeffs[b] = 1;
  return v;
}

Vector scalar_vector(const Scalar& c) {
  Vector v{scalar_space(), {}};
  if (scalar_nonzero(c)) v.coeffs[unit_elem()] = c;
  return v;
}

static void prune(Vector& v) {
  for (auto it = v.coeffs.begin(); it != v.coeffs.end();)
    it = scalar_nonzero(it->second) ? std::next(it) : v.coeffs.erase(it);
}

Vector add(const Vector& v, const Vector& w) {
  if (v.space != w.space)
    throw space_mismatch("cannot add vectors of " + v.space.str() + " and " +
                         w.space.str());
  Vector out = v;
  for (const auto& [b, c] : w.coeffs) out.coeffs[b] += c;
  prune(out);
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out{v.space, {}};
  if (!scalar_nonzero(c)) return out;
  for (const auto& [b, x] : v.coeffs) out.coeffs[b] = c * x;
  prune(out);
  return out;
}

Vector tensor(const Vector& v, const Vector& w) {
  Vector out{tensor_space(v.space, w.space), {}};
  for (const auto& [b1, c1] : v.coeffs)
    for (const auto& [b2, c2] : w.coeffs)
      out.coeffs[pair_elem(b1, b2)] = c1 * c2;
  prune(out);
  return out;
}

Scalar inner(const Vector& v, const Vector& w) {
  if (v.space != w.space)
    throw space_mismatch("inner product across " + v.space.str() + " and " +
                         w.space.str());
  Scalar acc = 0;
  for (const auto& [b, c] : v.coeffs) acc += c * w.at(b);
  return acc;
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.space != domain)
    throw space_mismatch("map expects " + domain.str() + ", got " +
                         v.space.str());
  Vector out = zero_vector(codomain);
  for (const auto& [b, c] : v.coeffs) out = add(out, scale(c, action(b)));
  return out;
}

LinearMap identity(const Space& s) {
  return LinearMap{s, s, [s](const BasisElem& b) { return basis_vector(s, b); }};
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.codomain != g.domain)
    throw space_mismatch("composition mismatch: " + f.codomain.str() +
                         " vs " + g.domain.str());
  return LinearMap{f.domain, g.codomain,
                   [f, g](const BasisElem& b) { return g.apply(f.action(b)); }};
}

LinearMap map_tensor(const LinearMap& f, const LinearMap& g) {
  std::size_t split = f.domain.factors.size();
  return LinearMap{
      tensor_space(f.domain, g.domain), tensor_space(f.codomain, g.codomain),
      [f, g, split](const BasisElem& b) {
        BasisElem lhs, rhs;
        lhs.parts.assign(b.parts.begin(), b.parts.begin() + split);
        rhs.parts.assign(b.parts.begin() + split, b.parts.end());
        return tensor(f.action(lhs), g.action(rhs));
      }};
}

LinearMap swap_map(const Space& s1, const Space& s2) {
  std::size_t split = s1.factors.size();
  Space dom = tensor_space(s1, s2);
  Space cod = tensor_space(s2, s1);
  return LinearMap{dom, cod, [cod, split](const BasisElem& b) {
                     BasisElem out;
                     out.parts.assign(b.parts.begin() + split, b.parts.end());
                     out.parts.insert(out.parts.end(), b.parts.begin(),
                                      b.parts.begin() + split);
                     return basis_vector(cod, out);
                   }};
}

LinearMap epsilon(const Space& s) {
  std::size_t split = s.factors.size();
  return LinearMap{tensor_space(s, s), scalar_space(),
                   [split](const BasisElem& b) {
                     BasisElem lhs, rhs;
                     lhs.parts.assign(b.parts.begin(), b.parts.begin() + split);
                     rhs.parts.assign(b.parts.begin() + split, b.parts.end());
                     return scalar_vector(lhs == rhs ? 1 : 0);
                   }};
}

LinearMap eta(const Space& s) {
  Space cod = tensor_space(s, s);
  return LinearMap{unit_space(), cod, [s, cod](const BasisElem&) {
                     Vector out = zero_vector(cod);
                     for (const auto& b : enumerate_basis(s))
                       out.coeffs[pair_elem(b, b)] = 1;
                     return out;
                   }};
}

static std::vector<std::string> intersect(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

static bool subset_of(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

LinearMap delta_map(const Universe& u) {
  Space p = power_space(u);
  Space cod = tensor_space(p, p);
  return LinearMap{p, cod, [cod](const BasisElem& b) {
                     return basis_vector(cod, pair_elem(b, b));
                   }};
}

LinearMap mu_map(const Universe& u) {
  Space p = power_space(u);
  return LinearMap{tensor_space(p, p), p, [p](const BasisElem& b) {
                     BasisElem out;
                     out.parts.push_back(subset_part(
                         intersect(b.parts[0].subset, b.parts[1].subset)));
                     return basis_vector(p, out);
                   }};
}

LinearMap iota_map(const Universe& u) {
  return LinearMap{power_space(u), scalar_space(),
                   [](const BasisElem&) { return scalar_vector(1); }};
}

LinearMap zeta_map(const Universe& u) {
  Space p = power_space(u);
  return LinearMap{unit_space(), p, [p, u](const BasisElem&) {
                     BasisElem whole;
                     whole.parts.push_back(subset_part(u));
                     return basis_vector(p, whole);
                   }};
}

LinearMap quant_all(const Universe& u) {
  Space p = power_space(u);
  return LinearMap{p, p, [p](const BasisElem& b) {
                     Vector out = zero_vector(p);
                     for (const auto& sup : enumerate_basis(p))
                       if (subset_of(b.parts[0].subset, sup.parts[0].subset))
                         out.coeffs[sup] = 1;
                     return out;
                   }};
}

LinearMap quant_some(const Universe& u) {
  Space p = power_space(u);
  return LinearMap{p, p, [p](const BasisElem& b) {
                     Vector out = zero_vector(p);
                     for (const auto& other : enumerate_basis(p))
                       if (!intersect(b.parts[0].subset, other.parts[0].subset)
                                .empty())
                         out.coeffs[other] = 1;
                     return out;
                   }};
}

bool map_equal(const LinearMap& f, const LinearMap& g) {
  if (f.domain != g.domain || f.codomain != g.codomain) return false;
  for (const auto& b : enumerate_basis(f.domain))
    if (!(f.action(b) == g.action(b))) return false;
  return true;
}

}  // namespace scope::fvect
