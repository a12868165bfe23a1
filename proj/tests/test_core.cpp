// Exact arithmetic, linear algebra, polynomial, and exterior-calculus tests.

#include <doctest.h>

#include "lpp/matrix.hpp"
#include "lpp/multivector.hpp"
#include "lpp/polynomial.hpp"
#include "lpp/rational.hpp"
#include "util.hpp"

using namespace lpp;

TEST_CASE("rational parsing and printing round trip") {
    for (const char* s : {"0", "1", "-1", "2/3", "-7/12", "100000000000/7"}) {
        Rat r = parse_rat(s);
        CHECK(to_string(r) == s);
    }
    CHECK(parse_rat("4/8") == Rat(1, 2));
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("x"));
    CHECK_THROWS(parse_rat(""));
}

TEST_CASE("exact square roots and squarefree parts") {
    CHECK(*rat_sqrt_exact(Rat(9, 4)) == Rat(3, 2));
    CHECK(!rat_sqrt_exact(Rat(2)));
    CHECK(squarefree_part(Rat(18)) == 2);
    CHECK(squarefree_part(Rat(-18)) == -2);
    CHECK(squarefree_part(Rat(4, 9)) == 1);
    CHECK(squarefree_part(Rat(1, 2)) == 2);
}

TEST_CASE("rank, kernel, det, inverse on random matrices") {
    testutil::Rng rng;
    for (int t = 0; t < 50; ++t) {
        Matrix m = rng.matrix(4);
        auto rk = rank_kernel(m);
        CHECK(rk.rank + rk.kernel.size() == 4);
        for (auto& v : rk.kernel) {
            Vec mv = m * v;
            for (auto& x : mv) CHECK(x == 0);
        }
        if (det(m) != 0) {
            auto inv = inverse(m);
            REQUIRE(inv);
            CHECK(m * *inv == Matrix::identity(4));
        } else {
            CHECK(rank(m) < 4);
        }
    }
}

TEST_CASE("signature is a congruence invariant") {
    testutil::Rng rng;
    for (int t = 0; t < 50; ++t) {
        Matrix a = rng.symmetric(3);
        Matrix p = rng.invertible(3);
        Signature s1 = signature(a);
        Signature s2 = signature(p.transpose() * a * p);
        CHECK(s1.n_plus == s2.n_plus);
        CHECK(s1.n_minus == s2.n_minus);
        CHECK(s1.n_zero == s2.n_zero);
    }
}

TEST_CASE("congruence diagonalization") {
    testutil::Rng rng;
    for (int t = 0; t < 50; ++t) {
        Matrix a = rng.symmetric(3);
        auto cd = congruence_diagonalize(a);
        Matrix d = cd.p.transpose() * a * cd.p;
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j)
                if (i != j) CHECK(d(i, j) == 0);
        CHECK(det(cd.p) != 0);
    }
}

TEST_CASE("characteristic roots multiply back to the polynomial") {
    testutil::Rng rng;
    for (int t = 0; t < 40; ++t) {
        Matrix m = rng.matrix(3);
        CharRoots roots = rational_char_roots(m);
        int count = 0;
        for (auto& r : roots.rational) {
            count += r.multiplicity;
            // eigenvalue check: det(m - r I) = 0
            Matrix shift = m;
            for (unsigned i = 0; i < 3; ++i) shift(i, i) -= r.value;
            CHECK(det(shift) == 0);
            CHECK(r.geometric ==
                  3 - static_cast<int>(rank(shift)));
        }
        count += 2 * static_cast<int>(roots.quadratic.size());
        if (!roots.residual.empty()) count += 3;
        CHECK(count == 3);
    }
}

TEST_CASE("polynomial compose_linear and evaluation commute") {
    testutil::Rng rng;
    for (int t = 0; t < 30; ++t) {
        Polynomial p = Polynomial::variable(3, 0) *
                           Polynomial::variable(3, 1) * rng.rat() +
                       Polynomial::variable(3, 2) * rng.rat() +
                       Polynomial::constant(3, rng.rat());
        Matrix m = rng.matrix(3);
        Vec x = rng.vec(3);
        CHECK(p.compose_linear(m).eval(x) == p.eval(m * x));
    }
}

TEST_CASE("rational function arithmetic is exact") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    RationalFunction f = RationalFunction(x) / RationalFunction(y);
    RationalFunction g = RationalFunction(x * x) / RationalFunction(y * x);
    CHECK(f == g);
    CHECK(f + (-f) == RationalFunction(2));
    // quotient rule: d/dy (x/y) = -x/y^2
    CHECK(f.derivative(1) ==
          RationalFunction(-x) / RationalFunction(y * y));
}

TEST_CASE("wedge is graded-commutative and associative") {
    testutil::Rng rng;
    for (int t = 0; t < 20; ++t) {
        auto x = rng.linear_field(4);
        auto y = rng.linear_field(4);
        auto z = rng.linear_field(4);
        CHECK(x.wedge(y) == -(y.wedge(x)));
        CHECK(x.wedge(y).wedge(z) == x.wedge(y.wedge(z)));
        CHECK(x.wedge(x).is_zero());
    }
}

TEST_CASE("phi is invertible and d^2 = 0") {
    testutil::Rng rng;
    for (int t = 0; t < 20; ++t) {
        auto u = rng.linear_field(4).wedge(rng.linear_field(4));
        CHECK(phi_inverse(phi(u)) == u);
        CHECK(exterior_d(exterior_d(phi(u))).is_zero());
    }
}

TEST_CASE("divergence operator identities") {
    // D(A-hat) = tr A for a linear field, D(1/2 I-hat ^ k-hat) = k-hat,
    // and D^2 = 0
    testutil::Rng rng;
    for (int t = 0; t < 20; ++t) {
        Matrix a = rng.matrix(3);
        PolyMultivector ahat = linear_field(a);
        PolyMultivector div = divergence(ahat);
        CHECK(div.coefficient({}) == Polynomial::constant(3, a.trace()));

        Vec k = rng.vec(3);
        PolyMultivector ik =
            euler_field(3).wedge(constant_field(k)) * Rat(1, 2);
        CHECK(divergence(ik) == constant_field(k));

        auto u = rng.linear_field(4).wedge(rng.linear_field(4))
                     .wedge(rng.linear_field(4));
        if (u.degree() >= 2) CHECK(divergence(divergence(u)).is_zero());
    }
}

TEST_CASE("schouten bracket matches the classical decomposable formula") {
    testutil::Rng rng;
    int done = 0;
    while (done < 200) {
        unsigned n = 3 + static_cast<unsigned>(done % 2);  // R^3 and R^4
        unsigned p = 1 + static_cast<unsigned>(rng.pick(0, 1));
        unsigned q = 1 + static_cast<unsigned>(rng.pick(0, 1));
        if (p + q - 1 > n) continue;
        std::vector<PolyMultivector> xs, ys;
        for (unsigned i = 0; i < p; ++i) xs.push_back(rng.linear_field(n));
        for (unsigned i = 0; i < q; ++i) ys.push_back(rng.linear_field(n));
        PolyMultivector lhs =
            schouten(testutil::wedge_all(xs), testutil::wedge_all(ys));
        PolyMultivector rhs = testutil::schouten_oracle(xs, ys);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("schouten graded symmetry and Jacobi-compatible Leibniz rule") {
    testutil::Rng rng;
    for (int t = 0; t < 30; ++t) {
        auto x = rng.linear_field(4);
        auto y = rng.linear_field(4);
        auto z = rng.linear_field(4);
        auto u = x.wedge(y);  // degree 2
        // graded symmetry [a,b] = (-1)^{pq} [b,a]: antisymmetric for two
        // vector fields, symmetric once either argument has even degree
        CHECK(schouten(u, z) == schouten(z, u));
        CHECK(schouten(x, z) == -schouten(z, x));
        auto w = z.wedge(rng.linear_field(4));  // degree 2
        CHECK(schouten(u, w) == schouten(w, u));
        // Leibniz: [x, y ^ z] = [x,y]^z + y^[x,z]
        CHECK(schouten(x, y.wedge(z)) ==
              schouten(x, y).wedge(z) + y.wedge(schouten(x, z)));
    }
}

TEST_CASE("transform is functorial and preserves schouten") {
    testutil::Rng rng;
    for (int t = 0; t < 15; ++t) {
        auto u = rng.linear_field(3).wedge(rng.linear_field(3));
        Matrix s = rng.invertible(3), r = rng.invertible(3);
        CHECK(transform(transform(u, s), r) == transform(u, r * s));
        auto v = rng.linear_field(3);
        // pushforward is a Lie-algebra map for the Schouten bracket,
        // but only for linear maps with linear inputs kept linear
        CHECK(transform(schouten(u, v), s) ==
              schouten(transform(u, s), transform(v, s)));
    }
}
