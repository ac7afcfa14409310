#include "permgauge/cli/expr.hpp"

#include <cctype>
#include <charconv>

#include "permgauge/catops.hpp"
#include "permgauge/errors.hpp"

namespace permgauge::cli {
namespace {

using Kind = CatExpr::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CatExpr parse_all() {
    CatExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(ErrorCode::SyntaxError, "unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const { fail_at(code, msg, pos_); }
  [[noreturn]] static void fail_at(ErrorCode code, const std::string& msg, std::size_t at) {
    throw ParseError(code, msg + " at offset " + std::to_string(at), at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(ErrorCode::SyntaxError, std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail(ErrorCode::SyntaxError, "expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc{}) fail_at(ErrorCode::SyntaxError, "expected an integer", start);
    (void)ptr;
    return value;
  }

  CatExpr expr() {
    CatExpr lhs = term();
    while (accept('*')) {
      CatExpr prod;
      prod.kind = Kind::Prod;
      prod.args.push_back(std::move(lhs));
      prod.args.push_back(term());
      lhs = std::move(prod);
    }
    return lhs;
  }

  CatExpr term() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "qg") return atom();
    CatExpr e;
    if (name == "rev") {
      e.kind = Kind::Rev;
    } else if (name == "adj") {
      e.kind = Kind::Adj;
    } else if (name == "gauge2") {
      e.kind = Kind::Gauge2;
    } else {
      fail_at(ErrorCode::SyntaxError, "unknown function '" + name + "'", start);
    }
    expect('(');
    e.args.push_back(expr());
    if (accept(',')) {
      skip_ws();
      const std::size_t arg_start = pos_;
      if (e.kind != Kind::Adj) fail_at(ErrorCode::ArityError, name + " takes one argument", arg_start);
      if (text_.substr(pos_, 4) != "gen=") fail(ErrorCode::SyntaxError, "expected 'gen='");
      pos_ += 4;
      e.generator = label();
    }
    if (!accept(')')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',')
        fail(ErrorCode::ArityError, name + " takes at most two arguments");
      fail(ErrorCode::SyntaxError, "expected ')'");
    }
    return e;
  }

  // Characters up to the ')' that closes the enclosing call.
  std::string label() {
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    if (pos_ == text_.size()) fail(ErrorCode::SyntaxError, "unterminated generator label");
    std::string_view raw = text_.substr(start, pos_ - start);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    if (raw.empty()) fail_at(ErrorCode::SyntaxError, "empty generator label", start);
    return std::string(raw);
  }

  CatExpr atom() {
    expect('(');
    skip_ws();
    const std::size_t series_at = pos_;
    const std::string series = identifier();
    CatExpr e;
    e.kind = Kind::QG;
    try {
      e.spec = series_from_name(series);
    } catch (const Error& err) {
      fail_at(err.code(), err.what(), series_at);
    }
    expect(',');
    e.spec.level = integer();
    skip_ws();
    const std::size_t extra_at = pos_;
    if (accept(',')) fail_at(ErrorCode::ArityError, "qg takes (series, level)", extra_at);
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int series_number(std::string_view digits) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) return -1;
  return value;
}

// Highest-root label of the single quantum group underneath rev/adj, if any.
std::optional<std::string> default_generator(const CatExpr& e) {
  switch (e.kind) {
    case Kind::QG:
      return format_dynkin(build_root_data(e.spec).highest_root_labels());
    case Kind::Rev:
    case Kind::Adj:
      return default_generator(e.args.front());
    default:
      return std::nullopt;
  }
}

ModularData category(const CatExpr& e, double tol) {
  switch (e.kind) {
    case Kind::QG:
      validate(e.spec);
      return kac_peterson(e.spec);
    case Kind::Rev:
      return reverse(category(e.args.front(), tol));
    case Kind::Prod:
      return deligne_product(category(e.args[0], tol), category(e.args[1], tol));
    case Kind::Adj: {
      std::string gen;
      if (e.generator) {
        gen = *e.generator;
      } else if (auto d = default_generator(e.args.front())) {
        gen = *d;
      } else {
        throw Error(ErrorCode::ArityError, "adj of a product needs gen=");
      }
      return tensor_subcategory(category(e.args.front(), tol), std::vector<std::string>{gen});
    }
    case Kind::Gauge2:
      break;
  }
  throw Error(ErrorCode::InvalidSpec, "gauge2 has no modular data here; it must be outermost");
}

}  // namespace

CatExpr parse(std::string_view text) { return Parser(text).parse_all(); }

LieSpec series_from_name(std::string_view name) {
  LieSpec spec;
  if (name == "g2") {
    spec.series = Series::G2;
    spec.rank = 2;
    return spec;
  }
  const std::string who(name);
  if (name.size() < 3)
    throw Error(ErrorCode::UnknownSeries, "unknown series '" + who + "'");
  const std::string_view prefix = name.substr(0, 2);
  const int n = series_number(name.substr(2));
  if ((prefix != "sl" && prefix != "so" && prefix != "sp") || n < 0)
    throw Error(ErrorCode::UnknownSeries, "unknown series '" + who + "'");
  if (prefix == "sl") {
    if (n < 2) throw Error(ErrorCode::UnsupportedSeries, who + " is not simple");
    spec.series = Series::A;
    spec.rank = n - 1;
  } else if (prefix == "so") {
    if (n < 5) throw Error(ErrorCode::UnsupportedSeries, who + " is outside the B and D series");
    spec.series = n % 2 ? Series::B : Series::D;
    spec.rank = n / 2;
  } else {
    if (n % 2) throw Error(ErrorCode::UnknownSeries, "sp needs an even index, got '" + who + "'");
    if (n < 4) throw Error(ErrorCode::UnsupportedSeries, who + " is outside the C series");
    spec.series = Series::C;
    spec.rank = n / 2;
  }
  return spec;
}

std::string series_name(const LieSpec& spec) {
  switch (spec.series) {
    case Series::A: return "sl" + std::to_string(spec.rank + 1);
    case Series::B: return "so" + std::to_string(2 * spec.rank + 1);
    case Series::C: return "sp" + std::to_string(2 * spec.rank);
    case Series::D: return "so" + std::to_string(2 * spec.rank);
    case Series::G2: return "g2";
  }
  return {};
}

std::string render(const CatExpr& e) {
  switch (e.kind) {
    case Kind::QG:
      return "qg(" + series_name(e.spec) + "," + std::to_string(e.spec.level) + ")";
    case Kind::Rev:
      return "rev(" + render(e.args.front()) + ")";
    case Kind::Adj:
      return "adj(" + render(e.args.front()) + (e.generator ? ",gen=" + *e.generator : "") + ")";
    case Kind::Gauge2:
      return "gauge2(" + render(e.args.front()) + ")";
    case Kind::Prod:
      // The grammar has no grouping, so a right-nested product reads back
      // left-nested; parse only ever builds the latter.
      return render(e.args[0]) + " * " + render(e.args[1]);
  }
  return {};
}

Evaluated evaluate(const CatExpr& e, double tol) {
  if (e.kind == Kind::Gauge2) {
    ModularData md = category(e.args.front(), tol);
    Gauging g(md, {}, GaugeOptions{tol, false});
    return {std::move(md), std::move(g)};
  }
  return {category(e, tol), std::nullopt};
}

FusionRing ring_of(const Evaluated& value, double tol) {
  if (value.gauging) return value.gauging->fusion();
  return verlinde(value.md, tol);
}

}  // namespace permgauge::cli
