#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "gwlines/field.hpp"
#include "gwlines/rng.hpp"
#include "gwlines/upoly.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gwlines;

namespace {

FieldElem elem(const FieldPtr& f, std::int64_t v) { return FieldElem(f, v); }

// Exhaustive squares of a finite field, the independent oracle for is_square.
std::set<BigInt> square_indices(const FieldPtr& f) {
    std::set<BigInt> s;
    BigInt q = f->order();
    for (BigInt i = 1; i < q; ++i) {
        FieldElem y = element_by_index(f, i);
        s.insert((y * y).repr_index());
    }
    return s;
}

FieldElem random_nonzero(const FieldPtr& f, Rng& rng) {
    BigInt q = f->order();
    for (;;) {
        FieldElem e = element_by_index(f, BigInt(rng.below(static_cast<std::uint64_t>(q))));
        if (!e.is_zero()) return e;
    }
}

} // namespace

TEST_CASE("field_make accepts odd primes and rejects the rest") {
    auto f7 = Field::prime(7);
    CHECK(f7->order() == 7);
    CHECK(f7->characteristic() == 7);
    CHECK_THROWS_AS(Field::prime(2), gw_error);
    CHECK_THROWS_AS(Field::prime(9), gw_error);
    CHECK_THROWS_AS(Field::extension(2, 3), gw_error);
}

TEST_CASE("canonical modulus of F9 is t^2+1") {
    // oracle: exhaust monic degree-2 polynomials over F3 in lex order on
    // (c0, c1) and keep the first without a root in F3
    auto f3 = Field::prime(3);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t c0 = 0; c0 < 3 && expected.empty(); ++c0) {
        for (std::uint64_t c1 = 0; c1 < 3 && expected.empty(); ++c1) {
            bool has_root = false;
            for (std::uint64_t x = 0; x < 3; ++x) {
                if ((x * x + c1 * x + c0) % 3 == 0) has_root = true;
            }
            if (!has_root) expected = {c0, c1, 1};
        }
    }
    REQUIRE(expected == std::vector<std::uint64_t>{1, 0, 1});
    auto f9 = Field::extension(3, 2);
    CHECK(f9->finite_modulus() == expected);
    CHECK(f9->order() == 9);
}

TEST_CASE("supplied reducible modulus is rejected") {
    CHECK_THROWS_AS(Field::extension(3, std::vector<std::uint64_t>{2, 0, 1}), gw_error); // t^2-1
    CHECK_NOTHROW(Field::extension(3, std::vector<std::uint64_t>{1, 0, 1}));
}

TEST_CASE("basic arithmetic is exact and canonical") {
    auto f7 = Field::prime(7);
    CHECK(elem(f7, 3) + elem(f7, 5) == elem(f7, 1));
    CHECK(elem(f7, 3) * elem(f7, 5) == elem(f7, 1));
    CHECK(elem(f7, 3).inverse() == elem(f7, 5));

    auto q = Field::rationals();
    FieldElem half(q, BigRat(1, 2));
    CHECK(half + half == elem(q, 1));
    CHECK((half * elem(q, 4)).rational_value() == 2);

    auto f9 = Field::extension(3, 2);
    auto g = FieldElem::generator(f9);
    CHECK(g * g == elem(f9, -1)); // t^2 = -1 for the canonical modulus
    CHECK((g.inverse() * g).is_one());
    for (BigInt i = 1; i < 9; ++i) {
        FieldElem e = element_by_index(f9, i);
        CHECK((e * e.inverse()).is_one());
    }
}

TEST_CASE("is_square matches the exhaustive oracle for q <= 121") {
    std::vector<FieldPtr> fields;
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                            71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113}) {
        fields.push_back(Field::prime(p));
    }
    fields.push_back(Field::extension(3, 2));  // 9
    fields.push_back(Field::extension(5, 2));  // 25
    fields.push_back(Field::extension(3, 3));  // 27
    fields.push_back(Field::extension(7, 2));  // 49
    fields.push_back(Field::extension(3, 4));  // 81
    fields.push_back(Field::extension(11, 2)); // 121
    for (const auto& f : fields) {
        auto squares = square_indices(f);
        BigInt q = f->order();
        for (BigInt i = 1; i < q; ++i) {
            FieldElem x = element_by_index(f, i);
            CHECK(is_square(x) == (squares.count(i) == 1));
        }
    }
}

TEST_CASE("is_square examples in F7") {
    auto f7 = Field::prime(7);
    CHECK(is_square(elem(f7, 1)));
    CHECK(is_square(elem(f7, 2)));
    CHECK_FALSE(is_square(elem(f7, -1)));
    CHECK_THROWS_AS(is_square(elem(f7, 0)), gw_error);
}

TEST_CASE("square_class canonical representatives") {
    auto f7 = Field::prime(7);
    CHECK(square_class(elem(f7, 2)) == elem(f7, 1)); // 2 = 3^2 mod 7
    CHECK(square_class(elem(f7, 3)) == canonical_nonsquare(f7));
    CHECK(canonical_nonsquare(f7) == elem(f7, 3)); // squares mod 7 are {1,2,4}

    auto q = Field::rationals();
    CHECK(square_class(elem(q, 12)).rational_value() == 3);
    CHECK(square_class(elem(q, -4)).rational_value() == -1);
    CHECK(square_class(FieldElem(q, BigRat(3, 2))).rational_value() == 6);
}

TEST_CASE("square_class is invariant under multiplication by squares") {
    std::vector<FieldPtr> fields = {Field::prime(5), Field::prime(7), Field::extension(3, 2),
                                    Field::rationals()};
    for (const auto& f : fields) {
        Rng rng(42);
        for (int trial = 0; trial < 1000; ++trial) {
            FieldElem x(f, 0), y(f, 0);
            if (f->finite()) {
                x = random_nonzero(f, rng);
                y = random_nonzero(f, rng);
            } else {
                auto rand_rat = [&rng, &f]() {
                    std::int64_t n = static_cast<std::int64_t>(rng.below(2001)) - 1000;
                    std::int64_t d = static_cast<std::int64_t>(rng.below(50)) + 1;
                    return FieldElem(f, BigRat(n == 0 ? 1 : n, d));
                };
                x = rand_rat();
                y = rand_rat();
            }
            CHECK(square_class(x * y * y) == square_class(x));
        }
    }
}

TEST_CASE("factor_univariate golden examples") {
    auto f5 = Field::prime(5);
    auto f3 = Field::prime(3);
    auto upoly = [](const FieldPtr& f, std::vector<std::int64_t> cs) {
        std::vector<FieldElem> v;
        for (auto c : cs) v.emplace_back(f, c);
        return UPoly(f, std::move(v));
    };

    auto r1 = factor_univariate(upoly(f5, {-1, 0, 1}), 0); // x^2 - 1
    REQUIRE(r1.factors.size() == 2);
    CHECK(r1.factors[0].factor == upoly(f5, {1, 1}));  // x + 1
    CHECK(r1.factors[1].factor == upoly(f5, {-1, 1})); // x - 1 = x + 4
    CHECK(r1.factors[0].multiplicity == 1);

    auto r2 = factor_univariate(upoly(f3, {1, 0, 1}), 0); // x^2 + 1 irreducible
    REQUIRE(r2.factors.size() == 1);
    CHECK(r2.factors[0].factor.deg() == 2);
    CHECK(is_irreducible(r2.factors[0].factor));

    auto r3 = factor_univariate(upoly(f3, {0, -1, 0, 1}), 0); // x^3 - x
    REQUIRE(r3.factors.size() == 3);
    for (const auto& fac : r3.factors) CHECK(fac.factor.deg() == 1);

    CHECK_THROWS_AS(factor_univariate(UPoly(f3), 0), gw_error);
}

TEST_CASE("factor_univariate remultiplies to the input") {
    for (std::uint64_t p : {3, 5, 7}) {
        auto f = Field::prime(p);
        Rng rng(1000 + p);
        for (int trial = 0; trial < 500; ++trial) {
            unsigned deg = 1 + static_cast<unsigned>(rng.below(12));
            std::vector<FieldElem> cs;
            for (unsigned i = 0; i <= deg; ++i)
                cs.emplace_back(f, static_cast<std::int64_t>(rng.below(p)));
            UPoly g(f, std::move(cs));
            if (g.deg() < 1) continue;
            auto fac = factor_univariate(g, trial);
            UPoly prod = UPoly::constant(fac.unit);
            for (const auto& [h, m] : fac.factors) {
                CHECK(is_irreducible(h));
                CHECK(h.is_monic());
                for (int i = 0; i < m; ++i) prod = prod * h;
            }
            CHECK(prod == g);
        }
    }
}

TEST_CASE("embed examples and homomorphism property") {
    auto f7 = Field::prime(7);
    auto f49 = Field::extension(7, 2);
    CHECK(embed(elem(f7, 2), f49) == elem(f49, 2));

    auto f9 = Field::extension(3, 2);
    auto f81 = Field::extension(3, 4);
    auto g9 = FieldElem::generator(f9);
    CHECK(embed(g9, f9) == g9);
    FieldElem img = embed(g9, f81);
    // oracle: the image must be a root of F9's modulus, found exhaustively,
    // and the deterministically-first one in representation order
    std::vector<FieldElem> roots;
    for (BigInt i = 0; i < 81; ++i) {
        FieldElem x = element_by_index(f81, i);
        if ((x * x + FieldElem(f81, 1)).is_zero()) roots.push_back(x);
    }
    REQUIRE(roots.size() == 2);
    CHECK(img == roots.front());

    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem a = element_by_index(f9, BigInt(rng.below(9)));
        FieldElem b = element_by_index(f9, BigInt(rng.below(9)));
        CHECK(embed(a + b, f81) == embed(a, f81) + embed(b, f81));
        CHECK(embed(a * b, f81) == embed(a, f81) * embed(b, f81));
    }
    CHECK_THROWS_AS(embed(FieldElem::generator(f81), f9), gw_error);

    // retraction inverts the embedding
    for (BigInt i = 0; i < 9; ++i) {
        FieldElem x = element_by_index(f9, i);
        CHECK(retract(embed(x, f81), f9) == x);
    }
    CHECK_THROWS_AS(retract(FieldElem::generator(f81), f9), gw_error);
}

TEST_CASE("field_trace examples") {
    auto f3 = Field::prime(3);
    auto f9 = Field::extension(3, 2);
    CHECK(field_trace(elem(f9, 1), f3) == elem(f3, 2));
    auto g = FieldElem::generator(f9); // g^2 = -1
    CHECK(field_trace(g, f3) == elem(f3, 0));

    auto q = Field::rationals();
    auto q_sqrt5 = Field::number_field({BigRat(-5), BigRat(0), BigRat(1)});
    auto sqrt5 = FieldElem::generator(q_sqrt5);
    CHECK(field_trace(sqrt5, q) == elem(q, 0));
    CHECK(field_trace(FieldElem(q_sqrt5, 1), q) == elem(q, 2));

    CHECK_THROWS_AS(field_trace(elem(f9, 1), Field::prime(5)), gw_error);
}

TEST_CASE("field_trace is linear and Tr(1) = [L:k]") {
    struct Pair {
        FieldPtr L, k;
    };
    std::vector<Pair> pairs = {
        {Field::extension(3, 2), Field::prime(3)},
        {Field::extension(3, 4), Field::extension(3, 2)},
        {Field::extension(5, 3), Field::prime(5)},
        {Field::number_field({BigRat(1), BigRat(1), BigRat(1)}), Field::rationals()},
    };
    Rng rng(11);
    for (const auto& [L, k] : pairs) {
        unsigned d = L->degree() / k->degree();
        CHECK(field_trace(FieldElem(L, 1), k) == FieldElem(k, static_cast<std::int64_t>(d)));
        for (int trial = 0; trial < 50; ++trial) {
            FieldElem u(L, 0), v(L, 0), c(k, 0);
            if (L->finite()) {
                u = element_by_index(L, BigInt(rng.below(static_cast<std::uint64_t>(L->order()))));
                v = element_by_index(L, BigInt(rng.below(static_cast<std::uint64_t>(L->order()))));
                c = element_by_index(k, BigInt(rng.below(static_cast<std::uint64_t>(k->order()))));
            } else {
                u = FieldElem::from_coeffs(L, std::vector<BigRat>{BigRat(rng.below(19)) - 9, BigRat(rng.below(19)) - 9});
                v = FieldElem::from_coeffs(L, std::vector<BigRat>{BigRat(rng.below(19)) - 9, BigRat(rng.below(19)) - 9});
                c = FieldElem(k, static_cast<std::int64_t>(rng.below(19)) - 9);
            }
            CHECK(field_trace(u + v, k) == field_trace(u, k) + field_trace(v, k));
            FieldElem cu = L->finite() ? embed(c, L) * u : embed(c, L) * u;
            CHECK(field_trace(cu, k) == c * field_trace(u, k));
        }
    }
}

TEST_CASE("number field construction validates the modulus") {
    CHECK_NOTHROW(Field::number_field({BigRat(-5), BigRat(0), BigRat(1)}));
    CHECK_NOTHROW(Field::number_field({BigRat(1), BigRat(1), BigRat(1)}));
    CHECK_THROWS_AS(Field::number_field({BigRat(-4), BigRat(0), BigRat(1)}), gw_error);  // t^2-4
    CHECK_THROWS_AS(Field::number_field({BigRat(-1), BigRat(0), BigRat(0), BigRat(1)}), gw_error); // t^3-1
    CHECK_NOTHROW(Field::number_field({BigRat(2), BigRat(0), BigRat(0), BigRat(1)}));    // t^3-(-2)? t^3+2
    CHECK_THROWS_AS(Field::number_field({BigRat(4), BigRat(0), BigRat(5), BigRat(0), BigRat(1)}), gw_error); // (t^2+1)(t^2+4)
    CHECK_NOTHROW(Field::number_field({BigRat(1), BigRat(0), BigRat(0), BigRat(0), BigRat(1)}));  // t^4+1
}

TEST_CASE("is_square in quadratic number fields") {
    auto q5 = Field::number_field({BigRat(-5), BigRat(0), BigRat(1)});
    auto t = FieldElem::generator(q5);
    CHECK(is_square(FieldElem(q5, 9)));
    CHECK(is_square(FieldElem(q5, 5))); // (sqrt 5)^2
    CHECK_FALSE(is_square(t));
    CHECK(is_square(t * t));
    // -25/2 (5 + sqrt5) is not a square in Q(sqrt5)
    FieldElem x = FieldElem(q5, BigRat(-25, 2)) * (FieldElem(q5, 5) + t);
    CHECK_FALSE(is_square(x));
    CHECK(is_square(x * x));

    auto qz3 = Field::number_field({BigRat(1), BigRat(1), BigRat(1)});
    auto z = FieldElem::generator(qz3);
    CHECK(is_square(z));          // zeta3 = (zeta3^2)^2
    CHECK(is_square(FieldElem(qz3, -3))); // (2 zeta3 + 1)^2 = -3
    CHECK_FALSE(is_square(FieldElem(qz3, 2)));

    // conjugation sanity
    CHECK(nf_conjugate(z) == -(z + FieldElem(qz3, 1)));
    CHECK(nf_conjugate(nf_conjugate(z)) == z);
}

TEST_CASE("pth-power fields and frobenius") {
    auto f27 = Field::extension(3, 3);
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        FieldElem a = element_by_index(f27, BigInt(rng.below(27)));
        FieldElem b = element_by_index(f27, BigInt(rng.below(27)));
        CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
        CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
        CHECK(frobenius(frobenius(frobenius(a))) == a);
    }
}
