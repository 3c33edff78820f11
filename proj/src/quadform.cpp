#include "gwlines/quadform.hpp"

#include <algorithm>
#include <set>

namespace gwlines {

SymBilinearForm::SymBilinearForm(FieldPtr f, std::vector<std::vector<FieldElem>> g)
    : field(std::move(f)), gram(std::move(g)) {
    std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) fail(errc::invalid_form, "Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) fail(errc::invalid_form, "Gram matrix is not symmetric");
    if (field->finite() && field->characteristic() == 2)
        fail(errc::unsupported_characteristic, "characteristic 2");
}

GWClass::GWClass(FieldPtr f, std::vector<FieldElem> entries) : f_(std::move(f)) {
    entries_.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.is_zero()) fail(errc::zero_argument, "zero entry in a GW class");
        entries_.push_back(square_class(e));
    }
}

GWClass GWClass::multiple(const FieldPtr& f, int count, const FieldElem& a) {
    std::vector<FieldElem> es(static_cast<std::size_t>(count), a);
    return GWClass(f, std::move(es));
}

GWClass GWClass::operator+(const GWClass& o) const {
    if (!same_field(f_, o.f_)) fail(errc::field_mismatch, "GW classes over different fields");
    std::vector<FieldElem> es = entries_;
    es.insert(es.end(), o.entries_.begin(), o.entries_.end());
    return GWClass(f_, std::move(es));
}

GWClass GWClass::scaled(const FieldElem& s) const {
    if (s.is_zero()) fail(errc::zero_argument, "scaling a GW class by zero");
    std::vector<FieldElem> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_) es.push_back(e * s);
    return GWClass(f_, std::move(es));
}

FieldElem gram_det(const SymBilinearForm& b) {
    auto m = b.gram;
    std::size_t n = m.size();
    FieldElem det(b.field, 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return FieldElem(b.field, 0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        FieldElem inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            FieldElem fac = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= fac * m[c][k];
        }
    }
    return det;
}

GWClass diagonalize(const SymBilinearForm& b) {
    if (gram_det(b).is_zero()) fail(errc::degenerate_form, "Gram matrix is singular");
    auto g = b.gram;
    std::size_t n = g.size();
    const auto& F = b.field;
    std::vector<FieldElem> pivots;
    auto add_row_col = [&](std::size_t i, std::size_t j, const FieldElem& c) {
        // row_i += c row_j, then col_i += c col_j
        for (std::size_t k = 0; k < n; ++k) g[i][k] += c * g[j][k];
        for (std::size_t k = 0; k < n; ++k) g[k][i] += c * g[k][j];
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i][i].is_zero()) {
            std::size_t j = i + 1;
            while (j < n && g[i][j].is_zero()) ++j;
            if (j == n) fail(errc::degenerate_form, "zero row in a nondegenerate form");
            // adding +/- row j makes the pivot 2c+d or -2c+d; since char != 2
            // and c != 0 at least one of these is nonzero
            FieldElem two_c = g[i][j] + g[i][j];
            FieldElem coeff(F, (two_c + g[j][j]).is_zero() ? -1 : 1);
            add_row_col(i, j, coeff);
        }
        FieldElem inv = g[i][i].inverse();
        for (std::size_t r = i + 1; r < n; ++r) {
            if (g[r][i].is_zero()) continue;
            FieldElem fac = -(g[r][i] * inv);
            add_row_col(r, i, fac);
        }
        pivots.push_back(g[i][i]);
    }
    return GWClass(F, std::move(pivots));
}

namespace {

BigInt powmod_bi(BigInt a, BigInt e, const BigInt& m) {
    BigInt r = 1;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = (r * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return r;
}

int legendre(const BigInt& a, const BigInt& p) {
    BigInt r = powmod_bi(a, (p - 1) / 2, p);
    if (r == 0) fail(errc::internal_inconsistency, "legendre of a non-unit");
    return r == 1 ? 1 : -1;
}

// p-adic valuation of a nonzero rational and its unit part
std::pair<long, BigRat> padic_split(const BigRat& a, const BigInt& p) {
    BigInt num = rat_num(a), den = rat_den(a);
    long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return {v, BigRat(num, den)};
}

// residue of a p-unit rational mod m (m a power of p or p itself)
BigInt unit_mod(const BigRat& u, const BigInt& m) {
    BigInt num = rat_num(u) % m, den = rat_den(u) % m;
    if (num < 0) num += m;
    if (den < 0) den += m;
    // invert den mod m (den coprime to m here)
    BigInt t = 0, newt = 1, r = m, newr = den;
    while (newr != 0) {
        BigInt q = r / newr;
        BigInt tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += m;
    return (num * t) % m;
}

} // namespace

int hilbert_symbol(const BigRat& a, const BigRat& b, const Place& v) {
    if (a == 0 || b == 0) fail(errc::zero_argument, "Hilbert symbol of zero");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const BigInt& p = v.p;
    if (p == 2) {
        auto [alpha, u] = padic_split(a, 2);
        auto [beta, w] = padic_split(b, 2);
        auto eps = [](const BigRat& x) { return unit_mod(x, 4) == 3 ? 1 : 0; };
        auto omega = [](const BigRat& x) {
            BigInt r = unit_mod(x, 8);
            return (r == 3 || r == 5) ? 1 : 0;
        };
        long s = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return s % 2 ? -1 : 1;
    }
    auto [alpha, u] = padic_split(a, p);
    auto [beta, w] = padic_split(b, p);
    long s = 0;
    long eps_p = static_cast<long>((p % 4 == 3) ? 1 : 0); // (p-1)/2 mod 2
    if ((alpha % 2) && (beta % 2) && eps_p) s ^= 1;
    if ((beta % 2) && legendre(unit_mod(u, p), p) == -1) s ^= 1;
    if ((alpha % 2) && legendre(unit_mod(w, p), p) == -1) s ^= 1;
    return s ? -1 : 1;
}

std::vector<Place> reported_places(const GWClass& c) {
    if (c.field()->kind() != FieldKind::Rational)
        fail(errc::unsupported_field, "places of a non-rational class");
    std::set<Place> ps;
    ps.insert(place_inf());
    ps.insert(place_p(2));
    for (const auto& e : c.entries()) {
        BigRat q = e.rational_value();
        for (const auto& [prime, mult] : factorize(rat_num(q) * rat_den(q))) {
            if (prime != 2) ps.insert(place_p(prime));
        }
    }
    return {ps.begin(), ps.end()};
}

int hasse_witt_at(const GWClass& c, const Place& v) {
    int s = 1;
    const auto& es = c.entries();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            s *= hilbert_symbol(es[i].rational_value(), es[j].rational_value(), v);
    return s;
}

GWInvariants gw_invariants(const GWClass& c) {
    GWInvariants inv;
    inv.rank = c.rank();
    FieldElem prod(c.field(), 1);
    for (const auto& e : c.entries()) prod *= e;
    inv.disc = square_class(prod);
    if (c.field()->kind() == FieldKind::Rational) {
        int sig = 0;
        for (const auto& e : c.entries()) sig += e.rational_value() > 0 ? 1 : -1;
        inv.signature = sig;
        for (const auto& v : reported_places(c)) inv.hasse.emplace_back(v, hasse_witt_at(c, v));
    }
    return inv;
}

bool gw_equal(const GWClass& a, const GWClass& b) {
    if (!same_field(a.field(), b.field())) fail(errc::field_mismatch, "GW classes over different fields");
    const auto& f = a.field();
    if (a.rank() != b.rank()) return false;
    if (f->finite()) {
        auto ia = gw_invariants(a), ib = gw_invariants(b);
        return ia.disc == ib.disc;
    }
    if (f->kind() != FieldKind::Rational)
        fail(errc::unsupported_field, "GW equality over number fields is not supported");
    auto ia = gw_invariants(a), ib = gw_invariants(b);
    if (ia.signature != ib.signature) return false;
    if (ia.disc != ib.disc) return false;
    std::set<Place> places;
    for (const auto& v : reported_places(a)) places.insert(v);
    for (const auto& v : reported_places(b)) places.insert(v);
    for (const auto& v : places) {
        if (hasse_witt_at(a, v) != hasse_witt_at(b, v)) return false;
    }
    return true;
}

GWClass scharlau_trace(const FieldElem& u, const FieldPtr& base) {
    if (u.is_zero()) fail(errc::zero_argument, "trace of the zero class");
    const auto& L = u.field();
    if (same_field(L, base)) return GWClass(base, {u});
    unsigned d = 0;
    if (L->finite() && base->finite()) {
        if (L->characteristic() != base->characteristic() || L->degree() % base->degree() != 0)
            fail(errc::no_extension, "not an extension of the base field");
        d = L->degree() / base->degree();
    } else if (L->kind() == FieldKind::NumberField && base->kind() == FieldKind::Rational) {
        d = L->degree();
    } else {
        fail(errc::no_extension, "unsupported extension pair");
    }
    // power basis 1, t, ..., t^{d-1} of the generator of L over the base
    FieldElem t = FieldElem::generator(L);
    std::vector<FieldElem> pows(2 * d - 1, FieldElem(L, 1));
    for (unsigned i = 1; i < pows.size(); ++i) pows[i] = pows[i - 1] * t;
    std::vector<std::vector<FieldElem>> gram(d, std::vector<FieldElem>(d, FieldElem(base, 0)));
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) gram[i][j] = field_trace(u * pows[i + j], base);
    return diagonalize(SymBilinearForm(base, std::move(gram)));
}

} // namespace gwlines
