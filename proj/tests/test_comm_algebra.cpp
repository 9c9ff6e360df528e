#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlr/comm_algebra.hpp"
#include "instances.hpp"

using namespace homlr;
using namespace homlr::testing;

TEST_CASE("algebra axioms on the pool") {
    for (const CommAlgebra& a : {q_algebra(), dual_numbers(Rational(1)), dual_numbers(Rational(2)),
                                 dual_numbers(Rational(0)), truncated_cubic(Rational(1)),
                                 truncated_cubic(Rational(2)), q_times_q(),
                                 planar_nilpotent(Rational(1)), planar_nilpotent(Rational(2))})
        CHECK(check_comm_algebra(a).all_passed());
}

TEST_CASE("broken axioms are caught with witnesses") {
    CommAlgebra a = dual_numbers(Rational(1));
    a.mult.set(1, 0, 1, Rational(0)); // x*1 = 0 while 1*x = x
    Report r = check_comm_algebra(a);
    CHECK(!r.all_passed());
    CHECK(r.first_failure().find("commutative") != std::string::npos);

    CommAlgebra b = dual_numbers(Rational(1));
    b.phi.at(1, 0) = Rational(1); // phi(1) = 1 + x
    CHECK(!check_comm_algebra(b).all_passed());
}

TEST_CASE("check_phi_derivation on Q[x]/(x^2)") {
    CommAlgebra a = dual_numbers(Rational(1));

    CHECK(check_phi_derivation(a, Matrix(2, 2)).all_passed());

    // D(1) = 0, D(x) = 1 fails: D(x^2) = 0 != 2x D(x) = 2x
    Matrix bad(2, 2);
    bad.at(0, 1) = Rational(1);
    Report r = check_phi_derivation(a, bad);
    CHECK(!r.all_passed());
    CHECK(r.first_failure().find("twisted_leibniz") != std::string::npos);

    // D(x) = x passes
    Matrix good(2, 2);
    good.at(1, 1) = Rational(1);
    CHECK(check_phi_derivation(a, good).all_passed());
}

TEST_CASE("phi_derivations_basis sizes from the linear-solve oracle") {
    // A = Q: D(1) = 0 forces D = 0.
    CHECK(phi_derivations_basis(q_algebra()).empty());

    // A = Q[x]/(x^2), phi = Id: the four unknown entries reduce to D(1) = 0
    // and 2x D(x) = 0, leaving the single generator D(x) = x.
    auto ders = phi_derivations_basis(dual_numbers(Rational(1)));
    REQUIRE(ders.size() == 1);
    CHECK(check_phi_derivation(ders[0].algebra, ders[0].matrix).all_passed());

    // phi(x) = 0 makes the constraint 2 phi(x) D(x) = 0 vacuous: basis of 2.
    CHECK(phi_derivations_basis(dual_numbers(Rational(0))).size() == 2);

    // every returned derivation satisfies the checker, across the pool
    for (const CommAlgebra& a :
         {dual_numbers(Rational(2)), truncated_cubic(Rational(1)), truncated_cubic(Rational(2)),
          q_times_q(), planar_nilpotent(Rational(1))})
        for (const auto& d : phi_derivations_basis(a))
            CHECK(check_phi_derivation(a, d.matrix).all_passed());
}

TEST_CASE("derivation count on Q[x]/(x^3)") {
    CHECK(phi_derivations_basis(truncated_cubic(Rational(1))).size() == 2); // x d, x^2 d
    CHECK(phi_derivations_basis(q_times_q()).empty());                      // etale
}
