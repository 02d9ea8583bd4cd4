#include "enumstat/errors.hpp"
#include "enumstat/rational.hpp"

#include <doctest.h>

using namespace enumstat;

TEST_CASE("parse_rational accepts integers and fractions")
{
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK_THROWS_AS((void)parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS((void)parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS((void)parse_rational(""), ParseError);
}

TEST_CASE("parse_decimal is exact")
{
    CHECK(parse_decimal("83.3655") == make_rational(833655, 10000));
    CHECK(parse_decimal("-1.079") == make_rational(-1079, 1000));
    CHECK(parse_decimal("12") == 12);
    CHECK_THROWS_AS((void)parse_decimal("1.2.3"), ParseError);
}

TEST_CASE("integer powers")
{
    CHECK(pow(make_rational(2, 3), 3UL) == make_rational(8, 27));
    CHECK(pow(make_rational(2, 3), Integer(-2)) == make_rational(9, 4));
    CHECK(pow(Rational(5), Integer(0)) == 1);
    CHECK_THROWS_AS((void)pow(Rational(0), Integer(-1)), DomainError);
}
