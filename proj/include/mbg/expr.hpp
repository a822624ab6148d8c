#pragma once

#include "mbg/magnus.hpp"

#include <string>

namespace mbg {

// Surface syntax for elements and scalars.
//
//   element := factor ('*' factor)*
//   factor  := atom ('^' INT | '^((' scalar '))')*
//   atom    := 'x' INT | '1' | '(' element ')' | '[' item (',' item)* ']'
//   item    := element | INT element          (integer = iteration count)
//   scalar  := sterm (('+'|'-') sterm)*
//   sterm   := ('-')* sfactor ('*' sfactor)*
//   sfactor := INT | 'a' INT ['^' INT] | '(' scalar ')' ['^' INT]
//
// Group powers take a bare integer; module exponents need the doubled
// parentheses, so x1^-2 and [x1,x2]^((a3-1)) cannot be confused.
// Iterated brackets follow the usual shorthand: [x2, 3 x1] is the
// left-normed [x2,x1,x1,x1].

struct parse_error : error {
    int line;
    int col;
    parse_error(const std::string& msg, int line_, int col_);
};

Elt parse_element(const std::string& text, int n);
Poly parse_scalar(const std::string& text, int n);

// Canonical form: abelianized part in generator order, then one bracket
// factor [xk,xm] per pair with its module exponent.  parse(print(w)) == w.
std::string print_elt(const Elt& w);
std::string print_scalar(const Poly& p);

int run_cli(int argc, const char* const* argv);

}  // namespace mbg
