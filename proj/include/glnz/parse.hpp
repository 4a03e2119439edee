#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glnz/errors.hpp"
#include "glnz/orbit.hpp"
#include "glnz/rational.hpp"

namespace glnz {

namespace detail {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

inline Int parse_unsigned_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.s.size() &&
         std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    ++c.pos;
  if (c.pos == start) throw ParseError("expected an integer");
  return Int(std::string(c.s.substr(start, c.pos - start)));
}

// rat := int | int "/" posint
inline Rat parse_rat_token(Cursor& c) {
  bool neg = false;
  if (c.accept('-'))
    neg = true;
  else
    c.accept('+');
  Int num = parse_unsigned_int(c);
  if (neg) num = -num;
  if (c.accept('/')) {
    Int den = parse_unsigned_int(c);
    if (den == 0) throw ParseError("zero denominator");
    return make_rat(num, den);
  }
  return Rat(num);
}

inline std::string parse_identifier(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  auto ok = [&](char ch, bool first) {
    unsigned char u = static_cast<unsigned char>(ch);
    return std::isalpha(u) || ch == '_' || (!first && std::isdigit(u));
  };
  while (c.pos < c.s.size() && ok(c.s[c.pos], c.pos == start)) ++c.pos;
  if (c.pos == start) throw ParseError("expected an identifier");
  return std::string(c.s.substr(start, c.pos - start));
}

}  // namespace detail

inline Rat parse_rat(std::string_view text) {
  detail::Cursor c{text};
  Rat r = detail::parse_rat_token(c);
  if (!c.done()) throw ParseError("trailing input after rational");
  return r;
}

// One coordinate: a signed sum of terms, each `rat`, `rat * sym` or a bare
// `sym`.  The result is a coefficient vector over (1, a_1, ..., a_k).
inline RatVec parse_coordinate(detail::Cursor& c, const SymBasis& basis) {
  RatVec out(basis.k() + 1, Rat(0));
  auto symbol_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < basis.symbols.size(); ++i)
      if (basis.symbols[i] == name) return i + 1;
    throw UnknownSymbol("unknown symbol: " + name);
  };
  bool first = true;
  while (true) {
    c.skip_ws();
    Rat sign(1);
    if (c.accept('-'))
      sign = -1;
    else if (c.accept('+'))
      sign = 1;
    else if (!first)
      break;
    char head = c.peek();
    if (head == '\0') throw ParseError("expected a term");
    if (std::isdigit(static_cast<unsigned char>(head))) {
      Rat coeff = sign * detail::parse_rat_token(c);
      if (c.accept('*')) {
        std::string name = detail::parse_identifier(c);
        out[symbol_index(name)] += coeff;
      } else {
        out[0] += coeff;
      }
    } else if (std::isalpha(static_cast<unsigned char>(head)) || head == '_') {
      std::string name = detail::parse_identifier(c);
      out[symbol_index(name)] += sign;
    } else {
      break;
    }
    first = false;
  }
  return out;
}

// point := coord ("," coord)*
inline SymPoint parse_point(std::string_view text, const SymBasis& basis) {
  detail::Cursor c{text};
  SymPoint p;
  p.basis = basis;
  p.coords.push_back(parse_coordinate(c, basis));
  while (c.accept(',')) p.coords.push_back(parse_coordinate(c, basis));
  if (!c.done()) throw ParseError("trailing input after point");
  return p;
}

// equation := lincomb "=" lincomb over variables y1..yn with rational
// coefficients; returns (h, r) with <h, z> = r.
inline std::pair<RatVec, Rat> parse_equation(std::string_view text,
                                             std::size_t n) {
  detail::Cursor c{text};
  auto side = [&](RatVec& h, Rat& r, Rat outer_sign) {
    bool first = true;
    while (true) {
      c.skip_ws();
      Rat sign = outer_sign;
      if (c.accept('-'))
        sign = -outer_sign;
      else if (c.accept('+'))
        sign = outer_sign;
      else if (!first)
        break;
      char head = c.peek();
      if (head == '\0') throw ParseError("expected a term");
      if (std::isdigit(static_cast<unsigned char>(head))) {
        Rat coeff = sign * detail::parse_rat_token(c);
        if (c.accept('*')) {
          std::string name = detail::parse_identifier(c);
          if (name.size() < 2 || name[0] != 'y')
            throw ParseError("expected a variable y1..y" + std::to_string(n));
          std::size_t idx = std::stoul(name.substr(1));
          if (idx < 1 || idx > n) throw ParseError("variable out of range");
          h[idx - 1] += coeff;
        } else {
          r -= coeff;  // constants move to the right-hand side
        }
      } else if (head == 'y') {
        std::string name = detail::parse_identifier(c);
        std::size_t idx = 0;
        try {
          idx = std::stoul(name.substr(1));
        } catch (...) {
          throw ParseError("expected a variable y1..y" + std::to_string(n));
        }
        if (idx < 1 || idx > n) throw ParseError("variable out of range");
        h[idx - 1] += sign;
      } else {
        break;
      }
      first = false;
    }
  };
  RatVec h(n, Rat(0));
  Rat r(0);
  side(h, r, Rat(1));
  if (!c.accept('=')) throw ParseError("expected '='");
  side(h, r, Rat(-1));  // move the right-hand side over
  if (!c.done()) throw ParseError("trailing input after equation");
  return {std::move(h), std::move(r)};
}

inline std::string format_rat(const Rat& r) { return r.get_str(); }

// Renders a point in the grammar parse_point accepts.
inline std::string format_point(const SymPoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (i) out += ", ";
    const RatVec& c = p.coords[i];
    std::string coord;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      Rat mag = c[j];
      if (coord.empty()) {
        if (mag < 0) {
          coord += "-";
          mag = -mag;
        }
      } else {
        coord += (mag > 0) ? " + " : " - ";
        if (mag < 0) mag = -mag;
      }
      if (j == 0)
        coord += mag.get_str();
      else if (mag == 1)
        coord += p.basis.symbols[j - 1];
      else
        coord += mag.get_str() + "*" + p.basis.symbols[j - 1];
    }
    if (coord.empty()) coord = "0";
    out += coord;
  }
  return out;
}

}  // namespace glnz
