#pragma once
// Category-expression language:
//
//   expr   := term ('*' term)*
//   term   := func | atom
//   func   := ('rev' | 'adj' | 'gauge2') '(' expr (',' 'gen=' label)? ')'
//   atom   := 'qg' '(' series ',' INT ')'
//   series := 'sl'INT | 'so'INT | 'sp'INT | 'g2'
//
// '*' is the Deligne product; gen= is accepted by adj only, and the label runs
// to the closing parenthesis (nested parentheses are balanced).

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permgauge/gauge.hpp"
#include "permgauge/liealg.hpp"
#include "permgauge/modular.hpp"

namespace permgauge::cli {

struct CatExpr {
  enum class Kind { QG, Rev, Adj, Prod, Gauge2 };
  Kind kind = Kind::QG;
  LieSpec spec;                          // QG
  std::optional<std::string> generator;  // Adj
  std::vector<CatExpr> args;             // one child, two for Prod

  friend bool operator==(const CatExpr&, const CatExpr&) = default;
};

// Throws ParseError (SyntaxError, ArityError, UnknownSeries,
// UnsupportedSeries) carrying the byte offset of the problem.
CatExpr parse(std::string_view text);

// Canonical text; parse(render(e)) == e.
std::string render(const CatExpr& expr);

// "sl2" -> A1 and so on; the level is left at 1.
LieSpec series_from_name(std::string_view name);
std::string series_name(const LieSpec& spec);

struct Evaluated {
  ModularData md;                   // the category, or the input of gauge2
  std::optional<Gauging> gauging;   // set when the expression is gauge2(...)
};

// Throws InvalidSpec for gauge2 anywhere but the outermost position and
// ArityError when adj has no default generator.
Evaluated evaluate(const CatExpr& expr, double tol = kIntegralityTol);

// Fusion ring of an evaluated expression: Verlinde, or the gauged ring.
FusionRing ring_of(const Evaluated& value, double tol = kIntegralityTol);

}  // namespace permgauge::cli
