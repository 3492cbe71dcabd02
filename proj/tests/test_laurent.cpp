#include "oblock/laurent.hpp"

#include <doctest.h>

using namespace oblock;

TEST_CASE("laurent basics")
{
    LaurentPoly p = LaurentPoly::one() + LaurentPoly::monomial(1, 2);
    CHECK(p.str() == "1+q^2");
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK(p.degree() == 2);
    CHECK(p.valuation() == 0);
    CHECK(p.eval_at_one() == 2);

    LaurentPoly q = LaurentPoly::monomial(1, 1);
    CHECK((p * q).str() == "q+q^3");
    CHECK((p - p).is_zero());
    CHECK((q * q).str() == "q^2");
    CHECK(q.negate_q().str() == "-q");
    CHECK(p.negate_q() == p);
    CHECK(q.bar().str() == "q^-1");
    CHECK(LaurentPoly::monomial(-2, 3).str() == "-2q^3");
    CHECK((LaurentPoly::monomial(2, 1) - LaurentPoly::monomial(1, 3)).str() == "2q-q^3");
}

TEST_CASE("q_inv_squared_shift normalization")
{
    // q^3 p(q^{-2}) with p = 1 + q gives q^3 + q.
    LaurentPoly p = LaurentPoly::one() + LaurentPoly::monomial(1, 1);
    CHECK(p.q_inv_squared_shift(3).str() == "q+q^3");
    CHECK(p.q_inv_squared_shift(3).supported_on_parity(1));
    CHECK(!p.q_inv_squared_shift(3).supported_on_parity(0));
}

TEST_CASE("matrix algebra and unitriangular inverse")
{
    PolyMatrix d(3);
    d(0, 0) = d(1, 1) = d(2, 2) = LaurentPoly::one();
    d(0, 1) = LaurentPoly::monomial(1, 1);
    d(1, 2) = LaurentPoly::monomial(1, 1);
    const PolyMatrix inv = d.unitriangular_inverse();
    CHECK((d * inv).is_identity());
    CHECK((inv * d).is_identity());
    CHECK(inv(0, 2).str() == "q^2");
    CHECK(inv(0, 1).str() == "-q");

    const PolyMatrix c = d.transpose() * d;
    CHECK(c.is_symmetric());
    CHECK(c(1, 1).str() == "1+q^2");
}
