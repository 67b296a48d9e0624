#include "chern/expr_parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

namespace chern {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  ExprPtr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "expression");
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "operator or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static ExprPtr node(ExprNode::Kind kind, std::vector<ExprPtr> children) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->children = std::move(children);
    return n;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return left;
      ++pos_;
      ExprPtr right = term();
      left = node(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, {left, right});
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!(is_digit(c) || is_ident_start(c) || c == '(')) {
        return left;
      }
      ExprPtr right = factor();
      left = node(ExprNode::Kind::Mul, {left, right});
    }
  }

  ExprPtr factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return node(ExprNode::Kind::Neg, {factor()});
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, "')'");
      ++pos_;
      return inner;
    }
    if (is_digit(c)) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Int;
      while (pos_ < text_.size() && is_digit(text_[pos_])) n->digits += text_[pos_++];
      return n;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end())
        throw Error(ErrorKind::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Var;
      n->var = static_cast<std::size_t>(it - vars_.begin());
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !is_digit(text_[pos_])) throw SyntaxError(pos_, "natural number exponent");
        std::uint64_t e = 0;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
          e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
          if (e > 65535) throw Error(ErrorKind::ResourceCap, "exponent exceeds 65535");
        }
        n->exponent = static_cast<unsigned>(e);
      }
      return n;
    }
    throw SyntaxError(pos_, "integer, variable, '(' or '-'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

Polynomial evaluate(const ExprNode& n, const RingPtr& ring) {
  switch (n.kind) {
    case ExprNode::Kind::Add: return evaluate(*n.children[0], ring) + evaluate(*n.children[1], ring);
    case ExprNode::Kind::Sub: return evaluate(*n.children[0], ring) - evaluate(*n.children[1], ring);
    case ExprNode::Kind::Mul: return evaluate(*n.children[0], ring) * evaluate(*n.children[1], ring);
    case ExprNode::Kind::Neg: return -evaluate(*n.children[0], ring);
    case ExprNode::Kind::Int: {
      const PrimeField& F = ring->field();
      std::uint64_t r = 0;
      for (char d : n.digits) r = (r * 10 + static_cast<unsigned>(d - '0')) % F.characteristic();
      return Polynomial::constant(ring, static_cast<std::int64_t>(r));
    }
    case ExprNode::Kind::Var:
      if (n.var >= ring->nvars()) throw Error(ErrorKind::ArityMismatch, "variable index outside ring");
      return Polynomial::monomial(ring, Monomial::variable(n.var, static_cast<Exponent>(n.exponent)));
  }
  return Polynomial(ring);
}

}  // namespace

PolyExpr parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  Parser p(text, vars);
  return PolyExpr{std::string(text), p.parse()};
}

Polynomial to_polynomial(const PolyExpr& expr, const RingPtr& ring) { return evaluate(*expr.ast, ring); }

Polynomial parse_in(std::string_view text, const RingPtr& ring) {
  return to_polynomial(parse_polynomial(text, ring->names()), ring);
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_in(t, ring));
  return out;
}

std::string_view to_string(FiltrationKind kind) {
  return kind == FiltrationKind::Adic ? "adic" : "newton-closure";
}

RingPtr JobSpec::ring() const { return PolyRing::make(vars, MonomialOrder::grevlex(), field_char); }

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedDocument, what); }

std::uint64_t read_nat(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    auto i = v.get<std::int64_t>();
    if (i < 0) malformed("'" + key + "' must be nonnegative");
    return static_cast<std::uint64_t>(i);
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() || s.size() > 19 || !std::all_of(s.begin(), s.end(), is_digit))
      malformed("'" + key + "' must be a decimal natural number");
    return std::stoull(s);
  }
  malformed("'" + key + "' must be an integer");
}

std::vector<std::string> read_strings(const json& v, const std::string& key) {
  if (!v.is_array()) malformed("'" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const json& e : v) {
    if (!e.is_string()) malformed("'" + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<PolyExpr> read_polys(const json& v, const std::string& key, const std::vector<std::string>& vars) {
  std::vector<PolyExpr> out;
  for (const std::string& s : read_strings(v, key)) out.push_back(parse_polynomial(s, vars));
  return out;
}

bool valid_identifier(const std::string& s) {
  return !s.empty() && is_ident_start(s[0]) && std::all_of(s.begin(), s.end(), is_ident_char);
}

}  // namespace

JobSpec parse_job(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("job document must be a JSON object");

  static const std::set<std::string> known{"field.char", "field", "vars", "quotient", "ideal",
                                           "filtration", "reduction", "seed", "max_n"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) malformed("unknown key '" + key + "'");
  if (doc.contains("field.char") && doc.contains("field"))
    malformed("give the characteristic once, as 'field.char' or 'field': {'char': p}");

  JobSpec job;
  if (doc.contains("field.char")) {
    std::uint64_t p = read_nat(doc["field.char"], "field.char");
    if (p > 0xffffffffu) throw Error(ErrorKind::InvalidField, "characteristic too large");
    job.field_char = static_cast<std::uint32_t>(p);
  } else if (doc.contains("field")) {
    const json& f = doc["field"];
    if (!f.is_object() || f.size() != 1 || !f.contains("char")) malformed("'field' must be {\"char\": p}");
    std::uint64_t p = read_nat(f["char"], "field.char");
    if (p > 0xffffffffu) throw Error(ErrorKind::InvalidField, "characteristic too large");
    job.field_char = static_cast<std::uint32_t>(p);
  }
  PrimeField check(job.field_char);  // throws InvalidField
  (void)check;

  if (!doc.contains("vars")) malformed("missing 'vars'");
  job.vars = read_strings(doc["vars"], "vars");
  if (job.vars.empty()) malformed("'vars' must be nonempty");
  if (job.vars.size() > kMaxVars)
    malformed("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (const std::string& v : job.vars)
    if (!valid_identifier(v)) malformed("'" + v + "' is not a valid variable name");
  {
    std::set<std::string> seen(job.vars.begin(), job.vars.end());
    if (seen.size() != job.vars.size()) throw Error(ErrorKind::InvalidField, "duplicate variable names");
  }

  if (doc.contains("quotient")) job.quotient = read_polys(doc["quotient"], "quotient", job.vars);
  if (!doc.contains("ideal")) malformed("missing 'ideal'");
  job.ideal = read_polys(doc["ideal"], "ideal", job.vars);
  if (job.ideal.empty()) malformed("'ideal' must be nonempty");

  if (doc.contains("filtration")) {
    const json& f = doc["filtration"];
    if (!f.is_string()) malformed("'filtration' must be a string");
    const std::string kind = f.get<std::string>();
    if (kind == "adic")
      job.filtration = FiltrationKind::Adic;
    else if (kind == "newton-closure")
      job.filtration = FiltrationKind::NewtonClosure;
    else
      malformed("'filtration' must be \"adic\" or \"newton-closure\"");
  }
  if (doc.contains("reduction")) job.reduction = read_polys(doc["reduction"], "reduction", job.vars);
  if (doc.contains("seed")) job.seed = read_nat(doc["seed"], "seed");
  if (doc.contains("max_n")) {
    std::uint64_t n = read_nat(doc["max_n"], "max_n");
    if (n < 1 || n > 1000) malformed("'max_n' must lie in [1, 1000]");
    job.max_n = static_cast<unsigned>(n);
  }

  if (job.filtration == FiltrationKind::NewtonClosure) {
    if (!job.quotient.empty())
      throw Error(ErrorKind::ClosureUnsupported, "newton-closure needs an empty quotient");
    if (job.vars.size() != 2)
      throw Error(ErrorKind::ClosureUnsupported, "newton-closure needs exactly 2 variables");
    RingPtr ring = job.ring();
    for (const PolyExpr& g : job.ideal)
      if (!to_polynomial(g, ring).is_monomial())
        throw Error(ErrorKind::ClosureUnsupported, "newton-closure needs monomial generators, got '" +
                                                       g.source + "'");
  }
  return job;
}

std::string serialize_job(const JobSpec& job) {
  using ordered = nlohmann::ordered_json;
  RingPtr ring = job.ring();
  auto polys = [&](const std::vector<PolyExpr>& list) {
    ordered arr = ordered::array();
    for (const PolyExpr& e : list) arr.push_back(to_polynomial(e, ring).to_string());
    return arr;
  };
  ordered doc;
  doc["field.char"] = job.field_char;
  doc["vars"] = job.vars;
  doc["quotient"] = polys(job.quotient);
  doc["ideal"] = polys(job.ideal);
  doc["filtration"] = std::string(to_string(job.filtration));
  if (job.reduction) doc["reduction"] = polys(*job.reduction);
  if (job.seed) doc["seed"] = *job.seed;
  doc["max_n"] = job.max_n;
  return doc.dump(2) + "\n";
}

}  // namespace chern
