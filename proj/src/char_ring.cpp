#include "symlift/char_ring.hpp"

#include <cassert>
#include <utility>

namespace symlift {

namespace {

void add_term(Character::Support& s, Monomial m, const Integer& mult) {
  if (mult == 0) return;
  auto [it, inserted] = s.emplace(std::move(m), mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) s.erase(it);
  }
}

}  // namespace

Character::Character(Support terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  for (const auto& [m, mult] : terms) {
    auto mirror = terms.find(Monomial{m.j, m.i});
    if (mirror == terms.end() || mirror->second != mult) {
      throw NotSymmetric("character is not invariant under x <-> y at monomial x^" +
                         to_string(m.i) + " y^" + to_string(m.j));
    }
  }
  support_ = std::move(terms);
}

Integer Character::multiplicity(const Monomial& m) const {
  auto it = support_.find(m);
  return it == support_.end() ? Integer(0) : it->second;
}

Character sym_char(unsigned long n) {
  Character::Support s;
  for (unsigned long t = 0; t <= n; ++t) {
    s.emplace(Monomial{Integer(n - t), Integer(t)}, 1);
  }
  return Character(std::move(s));
}

Character tensor(const Character& c1, const Character& c2) {
  Character::Support s;
  for (const auto& [m1, k1] : c1.support()) {
    for (const auto& [m2, k2] : c2.support()) {
      add_term(s, Monomial{m1.i + m2.i, m1.j + m2.j}, k1 * k2);
    }
  }
  return Character(std::move(s));
}

Character direct_sum(const Character& c1, const Character& c2) {
  Character::Support s = c1.support();
  for (const auto& [m, mult] : c2.support()) add_term(s, m, mult);
  return Character(std::move(s));
}

Character dual(const Character& c) {
  Character::Support s;
  for (const auto& [m, mult] : c.support()) s.emplace(Monomial{-m.i, -m.j}, mult);
  return Character(std::move(s));
}

Character det_twist(const Character& c, const Integer& b) {
  Character::Support s;
  for (const auto& [m, mult] : c.support()) s.emplace(Monomial{m.i + b, m.j + b}, mult);
  return Character(std::move(s));
}

Character adams(const Character& c, unsigned long r) {
  if (r == 0) throw std::invalid_argument("adams operation needs r >= 1");
  Character::Support s;
  for (const auto& [m, mult] : c.support()) {
    s.emplace(Monomial{m.i * static_cast<long>(r), m.j * static_cast<long>(r)}, mult);
  }
  return Character(std::move(s));
}

namespace detail {

Character::Support div_support_exact(const Character::Support& s, unsigned long m) {
  Character::Support out;
  for (const auto& [mon, mult] : s) {
    if (!divides_ui(m, mult)) {
      throw NonIntegralPlethysm("multiplicity " + to_string(mult) + " not divisible by " +
                                std::to_string(m));
    }
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), mult.get_mpz_t(), m);
    out.emplace(mon, std::move(q));
  }
  return out;
}

}  // namespace detail

Character plethysm_sym(const Character& c, unsigned long m) {
  std::vector<Character> h(m + 1);
  h[0] = sym_char(0);
  for (unsigned long s = 1; s <= m; ++s) {
    Character::Support acc;
    for (unsigned long r = 1; r <= s; ++r) {
      Character term = tensor(adams(c, r), h[s - r]);
      for (const auto& [mon, mult] : term.support()) add_term(acc, mon, mult);
    }
    h[s] = Character(detail::div_support_exact(acc, s));
  }
  return h[m];
}

Integer dimension(const Character& c) {
  Integer d = 0;
  for (const auto& [m, mult] : c.support()) d += mult;
  return d;
}

std::optional<Integer> homogeneous_degree(const Character& c) {
  std::optional<Integer> deg;
  for (const auto& [m, mult] : c.support()) {
    Integer d = m.i + m.j;
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

bool SchurDecomposition::is_genuine() const {
  for (const auto& c : constituents) {
    if (c.mult <= 0) return false;
  }
  return true;
}

SchurDecomposition decompose(const Character& c) {
  Character::Support rem = c.support();
  std::vector<SchurConstituent> out;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    const Monomial mon = lead->first;
    const Integer mult = lead->second;
    // Symmetry puts the lex-largest monomial in the dominant chamber.
    assert(mon.i >= mon.j);
    Integer a = mon.i - mon.j;
    out.push_back(SchurConstituent{a, mon.j, mult});
    unsigned long al = to_ulong(a);
    for (unsigned long t = 0; t <= al; ++t) {
      add_term(rem, Monomial{mon.i - static_cast<long>(t), mon.j + static_cast<long>(t)}, -mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const SchurConstituent& l, const SchurConstituent& r) {
    int c = cmp(l.a, r.a);
    if (c != 0) return c > 0;
    return l.b > r.b;
  });
  return SchurDecomposition{std::move(out)};
}

Character reconstruct(const SchurDecomposition& d) {
  Character::Support s;
  for (const auto& con : d.constituents) {
    unsigned long a = to_ulong(con.a);
    for (unsigned long t = 0; t <= a; ++t) {
      add_term(s, Monomial{con.b + Integer(a - t), con.b + Integer(t)}, con.mult);
    }
  }
  return Character(std::move(s));
}

std::map<Integer, Integer> unitary_specialize(const SchurDecomposition& d) {
  std::map<Integer, Integer> out;
  for (const auto& con : d.constituents) {
    Integer& m = out[con.a];
    m += con.mult;
    if (m == 0) out.erase(con.a);
  }
  return out;
}

}  // namespace symlift
