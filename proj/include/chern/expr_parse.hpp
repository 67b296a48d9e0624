#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chern/poly.hpp"

namespace chern {

struct ExprNode {
  enum class Kind { Add, Sub, Mul, Neg, Int, Var };
  Kind kind;
  std::vector<std::shared_ptr<const ExprNode>> children;
  std::string digits;           // Int
  std::size_t var = 0;          // Var
  unsigned exponent = 1;        // Var
};

using ExprPtr = std::shared_ptr<const ExprNode>;

struct PolyExpr {
  std::string source;
  ExprPtr ast;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := INT | VAR ('^' NAT)? | '(' expr ')' | '-' factor
/// Throws SyntaxError or UnknownVariable.
PolyExpr parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Evaluates the tree in `ring` (variables by position, integers reduced mod p).
Polynomial to_polynomial(const PolyExpr& expr, const RingPtr& ring);

/// Parse and evaluate in one step, using the ring's variable names.
Polynomial parse_in(std::string_view text, const RingPtr& ring);
std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring);

enum class FiltrationKind { Adic, NewtonClosure };

std::string_view to_string(FiltrationKind kind);

struct JobSpec {
  std::uint32_t field_char = kDefaultCharacteristic;
  std::vector<std::string> vars;
  std::vector<PolyExpr> quotient;
  std::vector<PolyExpr> ideal;
  FiltrationKind filtration = FiltrationKind::Adic;
  std::optional<std::vector<PolyExpr>> reduction;
  std::optional<std::uint64_t> seed;
  unsigned max_n = 30;

  RingPtr ring() const;
};

/// Validates and applies defaults. Throws MalformedDocument, InvalidField,
/// ClosureUnsupported, SyntaxError, UnknownVariable.
JobSpec parse_job(std::string_view document);

/// Canonical JSON: fixed key order, polynomials in normalized printed form.
/// parse_job(serialize_job(j)) serializes back to the same bytes.
std::string serialize_job(const JobSpec& job);

}  // namespace chern
