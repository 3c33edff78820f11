#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "gwlines/quadform.hpp"
#include "gwlines/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gwlines;

namespace {

SymBilinearForm form(const FieldPtr& f, std::vector<std::vector<std::int64_t>> m) {
    std::vector<std::vector<FieldElem>> g;
    for (auto& row : m) {
        std::vector<FieldElem> r;
        for (auto v : row) r.emplace_back(f, v);
        g.push_back(std::move(r));
    }
    return SymBilinearForm(f, std::move(g));
}

GWClass cls(const FieldPtr& f, std::vector<std::int64_t> es) {
    std::vector<FieldElem> v;
    for (auto e : es) v.emplace_back(f, e);
    return GWClass(f, std::move(v));
}

std::vector<BigRat> sorted_rat_entries(const GWClass& c) {
    std::vector<BigRat> v;
    for (const auto& e : c.entries()) v.push_back(e.rational_value());
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("diagonalize golden examples over Q") {
    auto q = Field::rationals();
    auto id2 = diagonalize(form(q, {{1, 0}, {0, 1}}));
    CHECK(sorted_rat_entries(id2) == std::vector<BigRat>{1, 1});

    auto hyp = diagonalize(form(q, {{0, 1}, {1, 0}}));
    CHECK(sorted_rat_entries(hyp) == std::vector<BigRat>{-2, 2});
    CHECK(gw_equal(hyp, cls(q, {1, -1})));

    auto diag = diagonalize(form(q, {{2, 0}, {0, 10}}));
    CHECK(sorted_rat_entries(diag) == std::vector<BigRat>{2, 10});

    CHECK_THROWS_AS(diagonalize(form(q, {{1, 1}, {1, 1}})), gw_error);
    CHECK_THROWS_AS(form(q, {{1, 2}, {3, 1}}), gw_error);
}

TEST_CASE("diagonalize is a congruence invariant") {
    std::vector<FieldPtr> fields = {Field::prime(5), Field::prime(7), Field::rationals()};
    for (const auto& f : fields) {
        Rng rng(f->finite() ? f->characteristic() : 99);
        int done = 0;
        while (done < 500) {
            unsigned n = 2 + static_cast<unsigned>(rng.below(4));
            auto rand_elem = [&]() {
                if (f->finite())
                    return element_by_index(f, BigInt(rng.below(static_cast<std::uint64_t>(f->order()))));
                return FieldElem(f, static_cast<std::int64_t>(rng.below(19)) - 9);
            };
            // random symmetric G and random invertible M
            std::vector<std::vector<FieldElem>> g(n, std::vector<FieldElem>(n, FieldElem(f, 0)));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i; j < n; ++j) g[i][j] = g[j][i] = rand_elem();
            SymBilinearForm G(f, g);
            if (gram_det(G).is_zero()) continue;
            std::vector<std::vector<FieldElem>> m(n, std::vector<FieldElem>(n, FieldElem(f, 0)));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) m[i][j] = rand_elem();
            // M^T G M
            std::vector<std::vector<FieldElem>> mt_g(n, std::vector<FieldElem>(n, FieldElem(f, 0)));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    for (unsigned k = 0; k < n; ++k) mt_g[i][j] += m[k][i] * g[k][j];
            std::vector<std::vector<FieldElem>> conj(n, std::vector<FieldElem>(n, FieldElem(f, 0)));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    for (unsigned k = 0; k < n; ++k) conj[i][j] += mt_g[i][k] * m[k][j];
            SymBilinearForm Gc(f, conj);
            if (gram_det(Gc).is_zero()) continue; // M was singular
            CHECK(gw_equal(diagonalize(G), diagonalize(Gc)));
            ++done;
        }
    }
}

TEST_CASE("hilbert symbol golden examples") {
    BigRat one = 1, minus1 = -1;
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        BigRat b = static_cast<std::int64_t>(rng.below(200)) - 100;
        if (b == 0) b = 7;
        CHECK(hilbert_symbol(one, b, place_inf()) == 1);
        CHECK(hilbert_symbol(one, b, place_p(2)) == 1);
        CHECK(hilbert_symbol(one, b, place_p(5)) == 1);
    }
    CHECK(hilbert_symbol(minus1, minus1, place_inf()) == -1);

    // derived oracle for (-1,-1)_2: -x^2-y^2 = z^2, i.e. x^2+y^2+z^2 = 0,
    // has no solution mod 16 with x,y,z not all even
    bool solvable = false;
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y)
            for (int z = 0; z < 16; ++z) {
                if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
                if ((x * x + y * y + z * z) % 16 == 0) solvable = true;
            }
    CHECK_FALSE(solvable);
    CHECK(hilbert_symbol(minus1, minus1, place_p(2)) == -1);

    CHECK_THROWS_AS(hilbert_symbol(BigRat(0), one, place_inf()), gw_error);
}

TEST_CASE("hilbert symbol symmetry, bimultiplicativity, product formula") {
    Rng rng(17);
    auto rand_rat = [&]() {
        std::int64_t n = static_cast<std::int64_t>(rng.below(399)) - 199;
        if (n == 0) n = 1;
        std::int64_t d = static_cast<std::int64_t>(rng.below(40)) + 1;
        return BigRat(n, d);
    };
    for (int trial = 0; trial < 200; ++trial) {
        BigRat a = rand_rat(), b = rand_rat(), a2 = rand_rat();
        // symmetry and bimultiplicativity at a few places
        for (auto v : {place_inf(), place_p(2), place_p(3), place_p(5), place_p(7)}) {
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a * a2, b, v) ==
                  hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v));
        }
        // product formula over the support of a and b plus {2, inf}
        std::set<Place> places = {place_inf(), place_p(2)};
        for (const auto& [p, e] : factorize(rat_num(a) * rat_den(a))) places.insert(place_p(p));
        for (const auto& [p, e] : factorize(rat_num(b) * rat_den(b))) places.insert(place_p(p));
        int prod = 1;
        for (const auto& v : places) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == 1);
    }
}

TEST_CASE("gw_invariants of the paper classes") {
    auto q = Field::rationals();
    auto rhs = cls(q, std::vector<std::int64_t>(15, 1)) +
               GWClass::multiple(q, 12, FieldElem(q, -1));
    auto inv = gw_invariants(rhs);
    CHECK(inv.rank == 27);
    CHECK(inv.disc.rational_value() == 1);
    REQUIRE(inv.signature.has_value());
    CHECK(*inv.signature == 3);
    for (const auto& [v, h] : inv.hasse) CHECK(h == 1);

    auto f7 = Field::prime(7);
    auto one7 = cls(f7, {1});
    auto inv7 = gw_invariants(one7);
    CHECK(inv7.rank == 1);
    CHECK(inv7.disc == FieldElem(f7, 1));

    // 3<1> + 12<2> + 12<-6>: rank 27, disc 1
    auto fermatq = cls(q, std::vector<std::int64_t>(3, 1)) + GWClass::multiple(q, 12, FieldElem(q, 2)) +
                   GWClass::multiple(q, 12, FieldElem(q, -6));
    auto invf = gw_invariants(fermatq);
    CHECK(invf.rank == 27);
    CHECK(invf.disc.rational_value() == 1);
    CHECK(gw_equal(fermatq, rhs));
}

TEST_CASE("gw_equal golden examples") {
    auto q = Field::rationals();
    auto rhs = cls(q, std::vector<std::int64_t>(15, 1)) + GWClass::multiple(q, 12, FieldElem(q, -1));
    auto fermatq = cls(q, std::vector<std::int64_t>(3, 1)) + GWClass::multiple(q, 12, FieldElem(q, 2)) +
                   GWClass::multiple(q, 12, FieldElem(q, -6));
    CHECK(gw_equal(fermatq, rhs));
    CHECK_FALSE(gw_equal(cls(q, {1}), cls(q, {2})));
    CHECK(gw_equal(cls(q, {2, -2}), cls(q, {1, -1})));
    CHECK_THROWS_AS(gw_equal(cls(q, {1}), cls(Field::prime(7), {1})), gw_error);
}

TEST_CASE("gw_equal is an equivalence relation on a sample") {
    auto q = Field::rationals();
    std::vector<GWClass> sample = {
        cls(q, {1, -1}), cls(q, {2, -2}), cls(q, {3, -3}), cls(q, {1, 1}),
        cls(q, {2, 2}),  cls(q, {1, 2}), cls(q, {2, 1}),  cls(q, {5, -1}),
    };
    for (const auto& a : sample) CHECK(gw_equal(a, a));
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j)
            CHECK(gw_equal(sample[i], sample[j]) == gw_equal(sample[j], sample[i]));
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j)
            for (std::size_t k = 0; k < sample.size(); ++k)
                if (gw_equal(sample[i], sample[j]) && gw_equal(sample[j], sample[k]))
                    CHECK(gw_equal(sample[i], sample[k]));
}

TEST_CASE("rank is additive and discriminant multiplicative under concatenation") {
    auto q = Field::rationals();
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto rand_cls = [&]() {
            unsigned n = 1 + static_cast<unsigned>(rng.below(4));
            std::vector<FieldElem> es;
            for (unsigned i = 0; i < n; ++i) {
                std::int64_t v = static_cast<std::int64_t>(rng.below(39)) - 19;
                es.emplace_back(q, v == 0 ? 1 : v);
            }
            return GWClass(q, std::move(es));
        };
        GWClass a = rand_cls(), b = rand_cls();
        GWClass c = a + b;
        CHECK(c.rank() == a.rank() + b.rank());
        auto da = gw_invariants(a).disc.rational_value();
        auto db = gw_invariants(b).disc.rational_value();
        auto dc = gw_invariants(c).disc.rational_value();
        CHECK(dc == BigRat(squarefree_part(BigRat(da * db))));
    }
}

TEST_CASE("scharlau trace golden examples") {
    auto q = Field::rationals();
    auto qz3 = Field::number_field({BigRat(1), BigRat(1), BigRat(1)});
    auto tr = scharlau_trace(FieldElem(qz3, 1), q);
    CHECK(tr.rank() == 2);
    CHECK(gw_equal(tr, cls(q, {2, -6})));
    CHECK(sorted_rat_entries(tr) == std::vector<BigRat>{-6, 2});

    auto f3 = Field::prime(3);
    auto f9 = Field::extension(3, 2);
    auto tr9 = scharlau_trace(FieldElem(f9, 1), f3);
    CHECK(tr9.rank() == 2);
    CHECK(gw_invariants(tr9).disc == canonical_nonsquare(f3));

    // degree-1 trace is the identity
    auto tr1 = scharlau_trace(FieldElem(q, 7), q);
    CHECK(tr1.rank() == 1);
    CHECK(tr1.entries()[0].rational_value() == 7);

    CHECK_THROWS_AS(scharlau_trace(FieldElem(f9, 0), f3), gw_error);
    CHECK_THROWS_AS(scharlau_trace(FieldElem(f9, 1), Field::prime(5)), gw_error);
}

TEST_CASE("trace form discriminant table") {
    // four cases: disc is a square iff (a odd, u square) or (a even, u nonsquare)
    struct Case {
        std::uint64_t q;
        unsigned a;
    };
    std::vector<Case> cases = {{3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {7, 4}};
    for (const auto& [qsize, a] : cases) {
        auto k = Field::prime(qsize);
        auto L = Field::extension(qsize, a);
        FieldElem usq(L, 1);
        FieldElem unsq = canonical_nonsquare(L);
        for (bool square_u : {true, false}) {
            FieldElem u = square_u ? usq : unsq;
            auto tr = scharlau_trace(u, k);
            CHECK(tr.rank() == a);
            bool disc_square = is_square(gw_invariants(tr).disc);
            bool expect_square = (a % 2 == 1) == square_u;
            CHECK(disc_square == expect_square);
        }
    }
}
