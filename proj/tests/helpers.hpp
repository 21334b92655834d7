#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "arng/quotient.hpp"

namespace testutil {

// Parses matrix-entry tokens like "0", "12", "n_4", "3n_3", "2n-9", "4n".
inline arng::AffineInN parse_affine(const std::string& tok) {
  arng::AffineInN a;
  size_t pos = 0;
  std::int64_t coef = 1;
  bool have_coef = false;
  std::int64_t sign = 1;
  if (pos < tok.size() && tok[pos] == '-') {
    sign = -1;
    ++pos;
  }
  size_t start = pos;
  while (pos < tok.size() && isdigit(tok[pos])) ++pos;
  if (pos > start) {
    coef = sign * std::stoll(tok.substr(start, pos - start));
    have_coef = true;
  } else {
    coef = sign;
  }
  if (pos == tok.size()) {
    if (!have_coef) throw std::invalid_argument("bad affine token: " + tok);
    return {0, coef};
  }
  if (tok[pos] != 'n') throw std::invalid_argument("bad affine token: " + tok);
  ++pos;
  a.slope = coef;
  if (pos == tok.size()) return a;
  if (tok[pos] == '_') {
    a.intercept = -a.slope * std::stoll(tok.substr(pos + 1));
  } else if (tok[pos] == '-') {
    a.intercept = -std::stoll(tok.substr(pos + 1));
  } else if (tok[pos] == '+') {
    a.intercept = std::stoll(tok.substr(pos + 1));
  } else {
    throw std::invalid_argument("bad affine token: " + tok);
  }
  return a;
}

// One row of whitespace-separated tokens.
inline std::vector<arng::AffineInN> parse_affine_row(const std::string& row) {
  std::istringstream is(row);
  std::vector<arng::AffineInN> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_affine(tok));
  return out;
}

}  // namespace testutil
