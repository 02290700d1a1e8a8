// Copyright 2026 the hstheta authors
#ifndef HSTHETA_POLYNOMIAL_HPP
#define HSTHETA_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "hstheta/errors.hpp"
#include "hstheta/field.hpp"
#include "hstheta/monomial.hpp"

namespace hstheta {

// Coefficient ring data shared by all polynomial operations: the prime field,
// the variable names and the grading weights. The full hypersurface context
// (ring.hpp) extends this with the equation f.
struct PolyRing {
  PrimeField fp;
  std::array<std::string, kNumVars> vars;
  Weights weights{1, 1, 1, 1};

  int var_index(const std::string& name) const {
    for (int i = 0; i < kNumVars; ++i)
      if (vars[i] == name) return i;
    return -1;
  }
};

struct Term {
  Monomial mono;
  uint32_t coeff = 0;  // least non-negative residue, never 0 in a canonical poly
};

// Sparse polynomial: terms strictly descending in grevlex, no zero
// coefficients, no duplicate monomials. The empty term list is the zero
// polynomial. Values are immutable in spirit; all operations return fresh
// canonical polynomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> canonical_terms)
      : terms_(std::move(canonical_terms)) {}

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(uint32_t c, const PolyRing& ring) {
    uint32_t r = c % ring.fp.p();
    if (r == 0) return Polynomial();
    return Polynomial({Term{Monomial::one(), r}});
  }
  static Polynomial monomial(const Monomial& m, uint32_t c, const PolyRing& ring) {
    uint32_t r = c % ring.fp.p();
    if (r == 0) return Polynomial();
    return Polynomial({Term{m, r}});
  }
  static Polynomial variable(int i, const PolyRing&) {
    return Polynomial({Term{Monomial::var(i), 1}});
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  // Nonzero scalar entries are the pivots of graded minimalization.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const {
    if (terms_.empty()) throw EngineError("lead term of zero polynomial");
    return terms_.front();
  }

  size_t size() const { return terms_.size(); }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  int64_t max_total_degree() const {
    int64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }

  // Common weighted degree of all terms, or nullopt for a mixed polynomial.
  // The zero polynomial has no degree; callers decide.
  std::optional<int64_t> homogeneous_degree(const Weights& w) const {
    if (terms_.empty()) throw EngineError("degree of zero polynomial");
    int64_t d = terms_[0].mono.weighted_degree(w);
    for (const Term& t : terms_)
      if (t.mono.weighted_degree(w) != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous(const Weights& w) const {
    return terms_.empty() || homogeneous_degree(w).has_value();
  }

 private:
  std::vector<Term> terms_;
};

// Sorts, merges duplicates, drops zeros.
inline Polynomial canonicalize(std::vector<Term> terms, const PolyRing& ring) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return grevlex_cmp(a.mono, b.mono, ring.weights) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    uint32_t c = t.coeff % ring.fp.p();
    if (c == 0) continue;
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = ring.fp.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else {
      out.push_back(Term{t.mono, c});
    }
  }
  return Polynomial(std::move(out));
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  // Merge of two descending term lists.
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = grevlex_cmp(ta[i].mono, tb[j].mono, ring.weights);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      uint32_t s = ring.fp.add(ta[i].coeff, tb[j].coeff);
      if (s != 0) out.push_back(Term{ta[i].mono, s});
      ++i, ++j;
    }
  }
  while (i < ta.size()) out.push_back(ta[i++]);
  while (j < tb.size()) out.push_back(tb[j++]);
  return Polynomial(std::move(out));
}

inline Polynomial poly_neg(const Polynomial& a, const PolyRing& ring) {
  std::vector<Term> out(a.terms());
  for (Term& t : out) t.coeff = ring.fp.neg(t.coeff);
  return Polynomial(std::move(out));
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  return poly_add(a, poly_neg(b, ring), ring);
}

inline Polynomial poly_scale(const Polynomial& a, uint32_t c, const PolyRing& ring) {
  c %= ring.fp.p();
  if (c == 0) return Polynomial();
  std::vector<Term> out(a.terms());
  for (Term& t : out) t.coeff = ring.fp.mul(t.coeff, c);
  return Polynomial(std::move(out));
}

// a * (c * m) for a single term.
inline Polynomial poly_mul_term(const Polynomial& a, const Monomial& m, uint32_t c,
                                const PolyRing& ring) {
  c %= ring.fp.p();
  if (c == 0) return Polynomial();
  std::vector<Term> out(a.terms());
  for (Term& t : out) {
    t.mono = t.mono * m;
    t.coeff = ring.fp.mul(t.coeff, c);
  }
  return Polynomial(std::move(out));  // order is preserved by multiplicativity
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Term> acc;
  acc.reserve(a.size() * b.size());
  for (const Term& s : a.terms())
    for (const Term& t : b.terms())
      acc.push_back(Term{s.mono * t.mono, ring.fp.mul(s.coeff, t.coeff)});
  return canonicalize(std::move(acc), ring);
}

inline Polynomial poly_pow(const Polynomial& a, uint32_t e, const PolyRing& ring) {
  Polynomial r = Polynomial::constant(1, ring);
  for (uint32_t i = 0; i < e; ++i) r = poly_mul(r, a, ring);
  return r;
}

// ---------------------------------------------------------------------------
// Canonical text form. Terms descend in grevlex; every product is written
// with an explicit '*', exponents >= 2 with '^', coefficients as least
// non-negative residues joined by " + ". parse() accepts the same grammar
// plus '-' signs and arbitrary integer literals (reduced mod p).
// ---------------------------------------------------------------------------

inline std::string poly_to_string(const Polynomial& a, const PolyRing& ring) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    bool has_var = !t.mono.is_one();
    if (!has_var) {
      out += std::to_string(t.coeff);
      continue;
    }
    bool lead_star = false;
    if (t.coeff != 1) {
      out += std::to_string(t.coeff);
      lead_star = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (t.mono.e[i] == 0) continue;
      if (lead_star) out += "*";
      lead_star = true;
      out += ring.vars[i];
      if (t.mono.e[i] >= 2) out += "^" + std::to_string(t.mono.e[i]);
    }
  }
  return out;
}

namespace detail {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial syntax error at position " + std::to_string(pos) +
                     ": " + what + " in \"" + s + "\"");
  }
};

inline uint32_t lex_int(PolyLexer& lx, const PolyRing& ring) {
  lx.skip_ws();
  size_t start = lx.pos;
  uint64_t v = 0;
  while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
    v = v * 10 + (lx.s[lx.pos] - '0');
    v %= ring.fp.p();  // literals of any length reduce mod p
    ++lx.pos;
  }
  if (lx.pos == start) lx.fail("expected integer");
  return static_cast<uint32_t>(v);
}

inline std::string lex_ident(PolyLexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.s.size() &&
         (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
    ++lx.pos;
  if (lx.pos == start) lx.fail("expected identifier");
  return lx.s.substr(start, lx.pos - start);
}

// factor := INT | VAR ('^' INT)?
inline void parse_factor(PolyLexer& lx, const PolyRing& ring, Monomial& mono, uint32_t& coeff) {
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    coeff = ring.fp.mul(coeff, lex_int(lx, ring));
    return;
  }
  if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') lx.fail("expected factor");
  size_t at = lx.pos;
  std::string name = lex_ident(lx);
  int vi = ring.var_index(name);
  if (vi < 0)
    throw ParseError("unknown variable '" + name + "' at position " + std::to_string(at) +
                     " in \"" + lx.s + "\"");
  int32_t e = 1;
  if (lx.peek() == '^') {
    ++lx.pos;
    e = static_cast<int32_t>([&] {
      lx.skip_ws();
      size_t start = lx.pos;
      int64_t v = 0;
      while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
        v = v * 10 + (lx.s[lx.pos] - '0');
        if (v > 1'000'000) lx.fail("exponent too large");
        ++lx.pos;
      }
      if (lx.pos == start) lx.fail("expected exponent");
      return v;
    }());
  }
  mono.e[vi] += e;
}

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const PolyRing& ring) {
  detail::PolyLexer lx{text};
  std::vector<Term> acc;
  bool expect_term = true;
  uint32_t sign = 1;  // 1 or p-1
  if (lx.eof()) throw ParseError("empty polynomial text");
  while (!lx.eof()) {
    char c = lx.peek();
    if (expect_term) {
      if (c == '+') {
        ++lx.pos;
        continue;
      }
      if (c == '-') {
        sign = ring.fp.neg(sign);
        ++lx.pos;
        continue;
      }
      // term := factor ('*' factor)*
      Monomial mono;
      uint32_t coeff = sign;
      detail::parse_factor(lx, ring, mono, coeff);
      while (lx.peek() == '*') {
        ++lx.pos;
        detail::parse_factor(lx, ring, mono, coeff);
      }
      acc.push_back(Term{mono, coeff});
      sign = 1;
      expect_term = false;
    } else {
      if (c == '+') {
        ++lx.pos;
        expect_term = true;
      } else if (c == '-') {
        ++lx.pos;
        sign = ring.fp.neg(1);
        expect_term = true;
      } else {
        lx.fail("expected '+' or '-'");
      }
    }
  }
  if (expect_term) lx.fail("dangling sign");
  return canonicalize(std::move(acc), ring);
}

}  // namespace hstheta

#endif
