#include <doctest.h>

#include "fluxatom/quantum_numbers.hpp"

using namespace fluxatom;

TEST_CASE("HalfInt arithmetic is exact") {
    const HalfInt h = HalfInt::half();
    CHECK((h + h).twice() == 2);
    CHECK((HalfInt(2) - h).twice() == 3);
    CHECK((-h).value() == -0.5);
    CHECK(h < HalfInt(1));
    CHECK(HalfInt(3).is_integer());
    CHECK_FALSE(h.is_integer());
    CHECK(HalfInt::from_twice(3).str() == "3/2");
    CHECK(HalfInt::from_twice(-1).str() == "-1/2");
    CHECK(HalfInt(2).str() == "2");
    CHECK(HalfInt::from_twice(3).times_plus_one() == doctest::Approx(3.75).epsilon(1e-15));
}

TEST_CASE("parse_half_int accepts fractions and decimals") {
    CHECK(parse_half_int("3/2") == HalfInt::from_twice(3));
    CHECK(parse_half_int("-1/2") == HalfInt::from_twice(-1));
    CHECK(parse_half_int("2") == HalfInt(2));
    CHECK(parse_half_int("0.5") == HalfInt::half());
    CHECK(parse_half_int("1.5") == HalfInt::from_twice(3));
    CHECK_THROWS_AS(parse_half_int("0.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int("x"), std::invalid_argument);
}

TEST_CASE("QuantumNumbers invariants") {
    const QuantumNumbers ground = QuantumNumbers::sommerfeld(HalfInt::half(), HalfInt::half());
    CHECK(ground.n() == HalfInt(1));

    const QuantumNumbers circ = QuantumNumbers::circular(3);
    CHECK(circ.n() == HalfInt(3));
    CHECK(circ.n_phi == HalfInt(3));
    CHECK(circ.n_r == HalfInt(0));

    // n = n_r + n_phi exactly
    const QuantumNumbers qn = QuantumNumbers::sommerfeld(HalfInt::from_twice(3), HalfInt::half());
    CHECK(qn.n() == HalfInt(2));

    CHECK_THROWS_AS(QuantumNumbers::sommerfeld(HalfInt(-1), HalfInt(1)), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers::circular(0), std::invalid_argument);
}

TEST_CASE("spectroscopic terms") {
    const QuantumNumbers s = QuantumNumbers::term(1, 0, HalfInt::half());
    CHECK(s.n_phi == HalfInt::half()); // n_phi = l + 1/2
    CHECK(s.n_r == HalfInt::half());   // ground state is (1/2, 1/2)
    CHECK(s.label() == "1s1/2");

    const QuantumNumbers p = QuantumNumbers::term(2, 1, HalfInt::from_twice(3));
    CHECK(p.n_phi == HalfInt::from_twice(3));
    CHECK(p.n_r == HalfInt::half());
    CHECK(p.label() == "2p3/2");

    CHECK_THROWS_AS(QuantumNumbers::term(1, 1, HalfInt::from_twice(3)), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers::term(2, 1, HalfInt::from_twice(5)), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers::term(2, 0, -HalfInt::half()), std::invalid_argument);
}

TEST_CASE("m_j, m_l, m_s, n_psi, F validation") {
    QuantumNumbers qn = QuantumNumbers::term(2, 1, HalfInt::from_twice(3));
    qn.m_j = HalfInt::from_twice(3);
    CHECK_NOTHROW(qn.validate());
    qn.m_j = HalfInt::from_twice(5);
    CHECK_THROWS_AS(qn.validate(), std::invalid_argument);
    qn.m_j = HalfInt(1); // integer step off the j ladder
    CHECK_THROWS_AS(qn.validate(), std::invalid_argument);

    qn = QuantumNumbers::term(2, 1, HalfInt::from_twice(3));
    qn.m_l = HalfInt(1);
    qn.m_s = -HalfInt::half();
    CHECK_NOTHROW(qn.validate());
    qn.m_l = HalfInt(2);
    CHECK_THROWS_AS(qn.validate(), std::invalid_argument);
    qn.m_l = HalfInt(1);
    qn.m_s = HalfInt(1);
    CHECK_THROWS_AS(qn.validate(), std::invalid_argument);

    qn = QuantumNumbers::sommerfeld(HalfInt(1), HalfInt(1));
    qn.n_psi = HalfInt(-1);
    CHECK_NOTHROW(qn.validate());
    qn.n_psi = HalfInt::half(); // breaks the unit-step ladder from n_phi
    CHECK_THROWS_AS(qn.validate(), std::invalid_argument);
    qn.n_psi = HalfInt(2);
    CHECK_THROWS_AS(qn.validate(), std::invalid_argument);

    // F range: 1s1/2 with I = 1/2 gives F in {0, 1}
    qn = QuantumNumbers::term(1, 0, HalfInt::half());
    qn.I = HalfInt::half();
    qn.F = HalfInt(1);
    CHECK_NOTHROW(qn.validate());
    qn.F = HalfInt(2);
    CHECK_THROWS_AS(qn.validate(), std::invalid_argument);
}

TEST_CASE("parse_term grammar") {
    CHECK(parse_term("1s1/2").label() == "1s1/2");
    CHECK(parse_term("2p3/2").label() == "2p3/2");
    CHECK(parse_term("3d5/2").label() == "3d5/2");
    CHECK(parse_term("4f7/2").n_phi == HalfInt::from_twice(7));
    CHECK(parse_term("5g9/2").n() == HalfInt(5));

    CHECK_THROWS_AS(parse_term("p3/2"), std::invalid_argument);   // no n
    CHECK_THROWS_AS(parse_term("2x3/2"), std::invalid_argument);  // bad letter
    CHECK_THROWS_AS(parse_term("2p"), std::invalid_argument);     // no j
    CHECK_THROWS_AS(parse_term("2p5/2"), std::invalid_argument);  // j != l +- 1/2
    CHECK_THROWS_AS(parse_term("1p1/2"), std::invalid_argument);  // l > n-1
}
