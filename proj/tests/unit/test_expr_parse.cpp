#include <gtest/gtest.h>

#include "chern/expr_parse.hpp"

using namespace chern;

TEST(ParsePolynomial, Grammar) {
  RingPtr R = PolyRing::make({"x", "y"});
  EXPECT_EQ(parse_in("x^2 - 3*x*y", R).to_string(), "x^2-3*x*y");
  EXPECT_EQ(parse_in("2x y", R), parse_in("2*x*y", R));
  EXPECT_EQ(parse_in("-(x - y)", R), parse_in("y - x", R));
  EXPECT_EQ(parse_in("x*-y", R), parse_in("-x*y", R));
  EXPECT_EQ(parse_in(" ( x + y ) ( x - y ) ", R), parse_in("x^2 - y^2", R));
  RingPtr S = PolyRing::make({"a", "b", "c"});
  EXPECT_EQ(parse_in("b^2 - a*c", S).size(), 2u);
}

TEST(ParsePolynomial, LargeIntegersReduce) {
  RingPtr R = PolyRing::make({"x"});
  EXPECT_TRUE(parse_in("32003*x", R).is_zero());
  // 10^20 mod 32003
  EXPECT_EQ(parse_in("100000000000000000000", R), Polynomial::constant(R, 20265));
}

TEST(ParsePolynomial, Errors) {
  std::vector<std::string> vars{"x", "y"};
  try {
    parse_polynomial("x^(2)", {"x"});
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_polynomial("", vars), SyntaxError);
  EXPECT_THROW(parse_polynomial("x +", vars), SyntaxError);
  EXPECT_THROW(parse_polynomial("(x + y", vars), SyntaxError);
  EXPECT_THROW(parse_polynomial("x ^ y", vars), SyntaxError);
  EXPECT_THROW(parse_polynomial("1.5*x", vars), SyntaxError);
  try {
    parse_polynomial("x + z", vars);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
  }
  try {
    parse_polynomial("xy", vars);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
  }
}

TEST(ParseJob, Defaults) {
  JobSpec j = parse_job(R"({"vars":["x","y"],"ideal":["x^2","x*y","y^2"]})");
  EXPECT_EQ(j.field_char, 32003u);
  EXPECT_EQ(j.max_n, 30u);
  EXPECT_EQ(j.filtration, FiltrationKind::Adic);
  EXPECT_TRUE(j.quotient.empty());
  EXPECT_FALSE(j.reduction.has_value());
}

TEST(ParseJob, NewtonClosureAccepted) {
  JobSpec j = parse_job(R"({"vars":["x","y"],"ideal":["x^3","y^2"],"filtration":"newton-closure"})");
  EXPECT_EQ(j.filtration, FiltrationKind::NewtonClosure);
}

TEST(ParseJob, Rejections) {
  auto kind_of = [](const char* doc) {
    try {
      parse_job(doc);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  EXPECT_EQ(kind_of(R"({"vars":["x","y"],"quotient":["x*y"],"ideal":["x^3"],"filtration":"newton-closure"})"),
            ErrorKind::ClosureUnsupported);
  EXPECT_EQ(kind_of(R"({"vars":["x","y"],"ideal":["x^3+y","y^2"],"filtration":"newton-closure"})"),
            ErrorKind::ClosureUnsupported);
  EXPECT_EQ(kind_of(R"({"vars":["x","y","z"],"ideal":["x","y","z"],"filtration":"newton-closure"})"),
            ErrorKind::ClosureUnsupported);
  EXPECT_EQ(kind_of(R"({"vars":["x"],"ideal":["x"],"field.char":32004})"), ErrorKind::InvalidField);
  EXPECT_EQ(kind_of(R"({"vars":["x","x"],"ideal":["x"]})"), ErrorKind::InvalidField);
  EXPECT_EQ(kind_of(R"({"vars":["x"],"ideal":["x"],"colour":1})"), ErrorKind::MalformedDocument);
  EXPECT_EQ(kind_of(R"({"vars":["x"],"ideal":[]})"), ErrorKind::MalformedDocument);
  EXPECT_EQ(kind_of(R"({"vars":["x"]})"), ErrorKind::MalformedDocument);
  EXPECT_EQ(kind_of(R"([1,2])"), ErrorKind::MalformedDocument);
  EXPECT_EQ(kind_of(R"({"vars":["x"],)"), ErrorKind::MalformedDocument);
  EXPECT_EQ(kind_of(R"({"vars":["x"],"ideal":["y"]})"), ErrorKind::UnknownVariable);
}

TEST(ParseJob, SerializationRoundTrip) {
  const char* docs[] = {
      R"({"vars":["x","y"],"ideal":["x^2","x*y","y^2"]})",
      R"({"field.char":101,"vars":["a","b","c"],"quotient":["b^2 - a c","a^3-c^2"],"ideal":["a","b","c"],"reduction":["a"],"seed":9,"max_n":12})",
      R"({"field":{"char":7},"vars":["x","y"],"ideal":["x^3","y^2"],"filtration":"newton-closure"})",
      R"({"vars":["x","y"],"ideal":["(x+y)(x-y) + 40000"]})",
  };
  for (const char* d : docs) {
    JobSpec j = parse_job(d);
    std::string once = serialize_job(j);
    std::string twice = serialize_job(parse_job(once));
    EXPECT_EQ(once, twice);
    JobSpec back = parse_job(once);
    EXPECT_EQ(back.field_char, j.field_char);
    EXPECT_EQ(back.vars, j.vars);
    EXPECT_EQ(back.max_n, j.max_n);
    EXPECT_EQ(back.seed, j.seed);
    RingPtr R = j.ring();
    for (std::size_t i = 0; i < j.ideal.size(); ++i)
      EXPECT_EQ(to_polynomial(back.ideal[i], R), to_polynomial(j.ideal[i], R));
  }
}
