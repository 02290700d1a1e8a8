// Copyright 2026 the hstheta authors
#ifndef HSTHETA_INPUT_HPP
#define HSTHETA_INPUT_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hstheta/fpmod.hpp"
#include "hstheta/theta.hpp"

namespace hstheta {

// Line-oriented fixture grammar, UTF-8, '#' comments:
//
//   ring { p = 101  vars = x y z w  weights = 1 1 1 1  f = x*y - z*w  domain = yes }
//   module I_xz { gens = 2  gendegs = 1 1
//     rel = y, -w          # one relation column per `rel` line
//     rel = z, -x }
//   pair P1 { left = I_xz  right = I_xz }
//   ses S1 { sub = I_xz  mid = R1  quot = Mxz  inj = x, z  surj = 1 }
//   expect { op = theta  on = P1  value = -1  provenance = derived }
//
// Matrix literals separate entries with ',' and rows with ';'. Every block is
// validated as it is built: homogeneity of each relation column, resolvable
// names, no redefinitions.

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  int line = 0, col = 0;
};

namespace detail {

inline std::vector<Token> tokenize_input(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_')) {
        t.text += text[i];
        advance(text[i]);
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Int;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        t.text += text[i];
        advance(text[i]);
      }
    } else {
      t.kind = Token::Punct;
      t.text = std::string(1, c);
      advance(c);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Token::End, "", line, col});
  return out;
}

}  // namespace detail

struct PairSpec {
  std::string name, left, right;
  int line = 0;
};

struct SesSpec {
  std::string name, sub, mid, quot;
  PolyMatrix inj, surj;
  int line = 0;
};

struct ExpectSpec {
  std::string op, on, with_mod, element, value, provenance;
  std::optional<int> index;
  int line = 0;
};

struct ParsedInput {
  RingPtr ring;
  std::vector<std::string> module_order;
  std::map<std::string, FPModule> modules;
  std::vector<PairSpec> pairs;
  std::vector<SesSpec> ses_list;
  std::vector<ExpectSpec> expects;

  const FPModule& module_named(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw ParseError("unknown module name '" + name + "'");
    return it->second;
  }
  const PairSpec& pair_named(const std::string& name) const {
    for (const PairSpec& p : pairs)
      if (p.name == name) return p;
    throw ParseError("unknown pair name '" + name + "'");
  }
  const SesSpec& ses_named(const std::string& name) const {
    for (const SesSpec& s : ses_list)
      if (s.name == name) return s;
    throw ParseError("unknown ses name '" + name + "'");
  }
};

namespace detail {

struct BlockEntry {
  std::string key;
  std::vector<Token> value;
  int line = 0;
};

struct Block {
  std::string kind;
  std::string name;
  std::vector<BlockEntry> entries;
  int line = 0;

  const BlockEntry* find(const std::string& key) const {
    for (const BlockEntry& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }
  std::string require(const std::string& key) const {
    const BlockEntry* e = find(key);
    if (!e)
      throw ParseError("block '" + kind + "' at line " + std::to_string(line) +
                       " is missing key '" + key + "'");
    return join(e->value);
  }
  static std::string join(const std::vector<Token>& toks) {
    std::string s;
    for (const Token& t : toks) {
      if (!s.empty()) s += " ";
      s += t.text;
    }
    return s;
  }
};

inline std::vector<Block> parse_blocks(const std::vector<Token>& toks) {
  std::vector<Block> blocks;
  size_t i = 0;
  auto fail = [&](const std::string& what, const Token& t) -> void {
    throw ParseError(what + " at line " + std::to_string(t.line) + ", column " +
                     std::to_string(t.col));
  };
  while (toks[i].kind != Token::End) {
    if (toks[i].kind != Token::Ident) fail("expected block keyword", toks[i]);
    Block b;
    b.kind = toks[i].text;
    b.line = toks[i].line;
    ++i;
    if (toks[i].kind == Token::Ident) {
      b.name = toks[i].text;
      ++i;
    }
    if (!(toks[i].kind == Token::Punct && toks[i].text == "{"))
      fail("expected '{' opening block '" + b.kind + "'", toks[i]);
    ++i;
    while (!(toks[i].kind == Token::Punct && toks[i].text == "}")) {
      if (toks[i].kind == Token::End) fail("unterminated block '" + b.kind + "'", toks[i]);
      if (toks[i].kind != Token::Ident) fail("expected key", toks[i]);
      BlockEntry e;
      e.key = toks[i].text;
      e.line = toks[i].line;
      ++i;
      if (!(toks[i].kind == Token::Punct && toks[i].text == "="))
        fail("expected '=' after key '" + e.key + "'", toks[i]);
      ++i;
      // value: tokens until '}' or an identifier followed by '='
      while (true) {
        const Token& t = toks[i];
        if (t.kind == Token::End) fail("unterminated value", t);
        if (t.kind == Token::Punct && t.text == "}") break;
        if (t.kind == Token::Ident && toks[i + 1].kind == Token::Punct &&
            toks[i + 1].text == "=")
          break;
        e.value.push_back(t);
        ++i;
      }
      if (e.value.empty()) fail("empty value for key '" + e.key + "'", toks[i]);
      b.entries.push_back(std::move(e));
    }
    ++i;  // consume '}'
    blocks.push_back(std::move(b));
  }
  return blocks;
}

inline std::vector<int64_t> parse_int_list(const std::string& s, int line) {
  std::vector<int64_t> out;
  std::istringstream is(s);
  std::string tok;
  int64_t sign = 1;
  while (is >> tok) {
    if (tok == "-") {
      sign = -1;
      continue;
    }
    try {
      out.push_back(sign * std::stoll(tok));
    } catch (...) {
      throw ParseError("expected integer list at line " + std::to_string(line) +
                       ", got '" + tok + "'");
    }
    sign = 1;
  }
  return out;
}

// Entries split on ',', rows on ';'.
inline std::vector<std::vector<std::string>> split_matrix_literal(
    const std::vector<Token>& toks) {
  std::vector<std::vector<std::string>> rows(1);
  rows[0].push_back("");
  for (const Token& t : toks) {
    if (t.kind == Token::Punct && t.text == ";") {
      rows.emplace_back();
      rows.back().push_back("");
    } else if (t.kind == Token::Punct && t.text == ",") {
      rows.back().push_back("");
    } else {
      std::string& cur = rows.back().back();
      if (!cur.empty()) cur += " ";
      cur += t.text;
    }
  }
  return rows;
}

inline PolyMatrix parse_matrix_literal(const std::vector<Token>& toks, const PolyRing& ring,
                                       int line) {
  auto rows = split_matrix_literal(toks);
  size_t cols = rows[0].size();
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ParseError("ragged matrix literal at line " + std::to_string(line));
    for (size_t j = 0; j < cols; ++j) {
      std::string text = rows[i][j];
      if (text.empty())
        throw ParseError("empty matrix entry at line " + std::to_string(line));
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          text == "0" ? Polynomial() : parse_polynomial(text, ring);
    }
  }
  return m;
}

}  // namespace detail

inline ParsedInput parse_input(const std::string& text) {
  std::vector<Token> toks = detail::tokenize_input(text);
  std::vector<detail::Block> blocks = detail::parse_blocks(toks);
  ParsedInput out;

  // ring first
  for (const detail::Block& b : blocks) {
    if (b.kind != "ring") continue;
    if (out.ring) throw ParseError("duplicate ring block at line " + std::to_string(b.line));
    int64_t p = detail::parse_int_list(b.require("p"), b.line).at(0);
    std::istringstream vs(b.require("vars"));
    std::array<std::string, kNumVars> vars;
    for (int i = 0; i < kNumVars; ++i)
      if (!(vs >> vars[size_t(i)]))
        throw ParseError("ring block needs exactly 4 variables (line " +
                         std::to_string(b.line) + ")");
    std::string extra;
    if (vs >> extra)
      throw ParseError("ring block needs exactly 4 variables (line " +
                       std::to_string(b.line) + ")");
    std::vector<int64_t> ws = detail::parse_int_list(b.require("weights"), b.line);
    if (ws.size() != kNumVars)
      throw ParseError("ring block needs exactly 4 weights (line " +
                       std::to_string(b.line) + ")");
    bool domain = true;
    if (const auto* e = b.find("domain")) {
      std::string v = detail::Block::join(e->value);
      if (v == "yes")
        domain = true;
      else if (v == "no")
        domain = false;
      else
        throw ParseError("domain must be yes or no (line " + std::to_string(b.line) + ")");
    }
    out.ring = make_ring(static_cast<uint32_t>(p), vars,
                         Weights{ws[0], ws[1], ws[2], ws[3]}, b.require("f"), domain);
  }
  if (!out.ring) throw ParseError("input file has no ring block");

  for (const detail::Block& b : blocks) {
    if (b.kind == "ring") continue;
    if (b.kind == "module") {
      if (b.name.empty())
        throw ParseError("module block at line " + std::to_string(b.line) + " needs a name");
      if (out.modules.count(b.name))
        throw ParseError("module '" + b.name + "' redefined at line " +
                         std::to_string(b.line));
      int64_t gens = detail::parse_int_list(b.require("gens"), b.line).at(0);
      std::vector<int64_t> degs = detail::parse_int_list(b.require("gendegs"), b.line);
      if (static_cast<int64_t>(degs.size()) != gens)
        throw ParseError("module '" + b.name + "': gendegs count differs from gens (line " +
                         std::to_string(b.line) + ")");
      std::vector<VecPoly> rel_cols;
      for (const detail::BlockEntry& e : b.entries) {
        if (e.key != "rel") continue;
        auto rows = detail::split_matrix_literal(e.value);
        if (rows.size() != 1)
          throw ParseError("rel line must be a single column (line " +
                           std::to_string(e.line) + ")");
        if (static_cast<int64_t>(rows[0].size()) != gens)
          throw ParseError("module '" + b.name + "': rel at line " +
                           std::to_string(e.line) + " has " +
                           std::to_string(rows[0].size()) + " entries, expected " +
                           std::to_string(gens));
        VecPoly col;
        for (const std::string& entry : rows[0])
          col.push_back(entry == "0" ? Polynomial()
                                     : parse_polynomial(entry, out.ring->base));
        rel_cols.push_back(std::move(col));
      }
      PolyMatrix pres = PolyMatrix::from_columns(static_cast<int>(gens), rel_cols);
      try {
        out.modules.emplace(b.name, make_module(out.ring, Mode::R, degs, pres));
      } catch (const ParseError& err) {
        throw ParseError("module '" + b.name + "' (line " + std::to_string(b.line) +
                         "): " + err.what());
      }
      out.module_order.push_back(b.name);
    } else if (b.kind == "pair") {
      if (b.name.empty())
        throw ParseError("pair block at line " + std::to_string(b.line) + " needs a name");
      PairSpec p{b.name, b.require("left"), b.require("right"), b.line};
      out.pairs.push_back(std::move(p));
    } else if (b.kind == "ses") {
      if (b.name.empty())
        throw ParseError("ses block at line " + std::to_string(b.line) + " needs a name");
      SesSpec s;
      s.name = b.name;
      s.sub = b.require("sub");
      s.mid = b.require("mid");
      s.quot = b.require("quot");
      s.line = b.line;
      const detail::BlockEntry* inj_e = b.find("inj");
      const detail::BlockEntry* surj_e = b.find("surj");
      if (!inj_e || !surj_e)
        throw ParseError("ses '" + b.name + "' needs inj and surj matrices");
      s.inj = detail::parse_matrix_literal(inj_e->value, out.ring->base, b.line);
      s.surj = detail::parse_matrix_literal(surj_e->value, out.ring->base, b.line);
      out.ses_list.push_back(std::move(s));
    } else if (b.kind == "expect") {
      ExpectSpec e;
      e.op = b.require("op");
      e.line = b.line;
      if (const auto* v = b.find("on")) e.on = detail::Block::join(v->value);
      if (const auto* v = b.find("with")) e.with_mod = detail::Block::join(v->value);
      if (const auto* v = b.find("element")) e.element = detail::Block::join(v->value);
      if (const auto* v = b.find("index"))
        e.index = static_cast<int>(detail::parse_int_list(detail::Block::join(v->value),
                                                          b.line)
                                       .at(0));
      e.value = b.require("value");
      if (const auto* v = b.find("provenance")) e.provenance = detail::Block::join(v->value);
      out.expects.push_back(std::move(e));
    } else {
      throw ParseError("unknown block kind '" + b.kind + "' at line " +
                       std::to_string(b.line));
    }
  }

  // validate referenced names
  for (const PairSpec& p : out.pairs) {
    out.module_named(p.left);
    out.module_named(p.right);
  }
  for (const SesSpec& s : out.ses_list) {
    const FPModule& sub = out.module_named(s.sub);
    const FPModule& mid = out.module_named(s.mid);
    const FPModule& quot = out.module_named(s.quot);
    if (s.inj.rows() != mid.ngens() || s.inj.cols() != sub.ngens())
      throw ParseError("ses '" + s.name + "': inj has shape " +
                       std::to_string(s.inj.rows()) + "x" + std::to_string(s.inj.cols()) +
                       ", expected " + std::to_string(mid.ngens()) + "x" +
                       std::to_string(sub.ngens()));
    if (s.surj.rows() != quot.ngens() || s.surj.cols() != mid.ngens())
      throw ParseError("ses '" + s.name + "': surj has shape " +
                       std::to_string(s.surj.rows()) + "x" +
                       std::to_string(s.surj.cols()) + ", expected " +
                       std::to_string(quot.ngens()) + "x" + std::to_string(mid.ngens()));
  }
  return out;
}

inline ShortExactSequence build_ses(const ParsedInput& in, const SesSpec& s) {
  ShortExactSequence out{
      ModuleMap{in.module_named(s.sub), in.module_named(s.mid), s.inj},
      ModuleMap{in.module_named(s.mid), in.module_named(s.quot), s.surj}};
  return out;
}

// Canonical reprint: parse(print(x)) reproduces x byte for byte.
inline std::string print_input(const ParsedInput& in) {
  std::ostringstream os;
  const PolyRing& base = in.ring->base;
  os << "ring { p = " << base.fp.p() << "  vars =";
  for (const std::string& v : base.vars) os << " " << v;
  os << "  weights =";
  for (int64_t w : base.weights) os << " " << w;
  os << "  f = " << poly_to_string(in.ring->f, base) << "  domain = "
     << (in.ring->domain_asserted ? "yes" : "no") << " }\n";
  auto matrix_text = [&](const PolyMatrix& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
      if (i) s += " ; ";
      for (int j = 0; j < m.cols(); ++j) {
        if (j) s += ", ";
        s += poly_to_string(m.at(i, j), base);
      }
    }
    return s;
  };
  for (const std::string& name : in.module_order) {
    const FPModule& m = in.modules.at(name);
    os << "module " << name << " { gens = " << m.ngens() << "  gendegs =";
    for (int64_t d : m.gen_degrees) os << " " << d;
    for (int j = 0; j < m.nrels(); ++j) {
      os << "\n  rel = ";
      for (int i = 0; i < m.ngens(); ++i) {
        if (i) os << ", ";
        os << poly_to_string(m.presentation.at(i, j), base);
      }
    }
    os << " }\n";
  }
  for (const PairSpec& p : in.pairs)
    os << "pair " << p.name << " { left = " << p.left << "  right = " << p.right << " }\n";
  for (const SesSpec& s : in.ses_list)
    os << "ses " << s.name << " { sub = " << s.sub << "  mid = " << s.mid
       << "  quot = " << s.quot << "  inj = " << matrix_text(s.inj)
       << "  surj = " << matrix_text(s.surj) << " }\n";
  for (const ExpectSpec& e : in.expects) {
    os << "expect { op = " << e.op;
    if (!e.on.empty()) os << "  on = " << e.on;
    if (!e.with_mod.empty()) os << "  with = " << e.with_mod;
    if (e.index) os << "  index = " << *e.index;
    if (!e.element.empty()) os << "  element = " << e.element;
    os << "  value = " << e.value;
    if (!e.provenance.empty()) os << "  provenance = " << e.provenance;
    os << " }\n";
  }
  return os.str();
}

}  // namespace hstheta

#endif
