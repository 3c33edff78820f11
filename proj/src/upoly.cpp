#include "gwlines/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace gwlines {

UPoly::UPoly(FieldPtr f, std::vector<FieldElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldElem& c) {
    UPoly r(c.field());
    if (!c.is_zero()) r.c_ = {c};
    return r;
}

UPoly UPoly::x(FieldPtr f) {
    UPoly r(f);
    r.c_ = {FieldElem(f, 0), FieldElem(f, 1)};
    return r;
}

UPoly UPoly::monomial(FieldPtr f, unsigned deg, const FieldElem& c) {
    UPoly r(f);
    if (c.is_zero()) return r;
    r.c_.assign(deg + 1, FieldElem(f, 0));
    r.c_[deg] = c;
    return r;
}

FieldElem UPoly::coeff(unsigned i) const {
    if (i < c_.size()) return c_[i];
    return FieldElem(f_, 0);
}

const FieldElem& UPoly::lead() const {
    if (c_.empty()) fail(errc::zero_argument, "leading coefficient of 0");
    return c_.back();
}

bool UPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r(f_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), FieldElem(f_, 0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r(f_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), FieldElem(f_, 0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] -= o.c_[i];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(f_);
    UPoly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem(f_, 0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const FieldElem& s) const {
    UPoly r(f_);
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (auto& ci : r.c_) ci *= s;
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

UPoly UPoly::derivative() const {
    UPoly r(f_);
    if (c_.size() < 2) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * FieldElem(f_, static_cast<std::int64_t>(i)));
    r.trim();
    return r;
}

FieldElem UPoly::eval(const FieldElem& x) const {
    FieldElem v(f_, 0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

std::string UPoly::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i].to_string();
    }
    os << ')';
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(errc::zero_argument, "division by the zero polynomial");
    UPoly q(a.field()), r = a;
    if (r.deg() < b.deg()) return {q, r};
    std::vector<FieldElem> qc(static_cast<std::size_t>(r.deg() - b.deg() + 1), FieldElem(a.field(), 0));
    FieldElem binv = b.lead().inverse();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        FieldElem f = r.lead() * binv;
        unsigned off = static_cast<unsigned>(r.deg() - b.deg());
        qc[off] = f;
        r = r - UPoly::monomial(a.field(), off, f) * b;
    }
    return {UPoly(a.field(), std::move(qc)), r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        r0 = r1;
        r1 = rem;
    }
    return r0.monic();
}

UPoly powmod(const UPoly& base, BigInt e, const UPoly& mod) {
    UPoly b = divmod(base, mod).second;
    UPoly r = UPoly::constant(FieldElem(base.field(), 1));
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = divmod(r * b, mod).second;
        b = divmod(b * b, mod).second;
        e >>= 1;
    }
    return r;
}

bool upoly_less(const UPoly& a, const UPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        BigInt ia = a.coeff(static_cast<unsigned>(i)).repr_index();
        BigInt ib = b.coeff(static_cast<unsigned>(i)).repr_index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

bool is_irreducible(const UPoly& g) {
    const auto& f = g.field();
    if (!f->finite()) fail(errc::unsupported_field, "irreducibility test over a non-finite field");
    int n = g.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    BigInt q = f->order();
    UPoly x = UPoly::x(f);
    // Rabin: x^(q^n) == x mod g, and gcd(x^(q^(n/r)) - x, g) = 1 for prime r | n
    BigInt qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    if (powmod(x, qn, g) != divmod(x, g).second) return false;
    int m = n;
    for (int r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        while (m % r == 0) m /= r;
        BigInt qk = 1;
        for (int i = 0; i < n / r; ++i) qk *= q;
        if (gcd(powmod(x, qk, g) - divmod(x, g).second, g).deg() != 0) return false;
    }
    if (m > 1) {
        BigInt qk = 1;
        for (int i = 0; i < n / m; ++i) qk *= q;
        if (gcd(powmod(x, qk, g) - divmod(x, g).second, g).deg() != 0) return false;
    }
    return true;
}

namespace {

// p-th root of an extension-field element: c^(p^(deg-1))
FieldElem pth_root(const FieldElem& c) {
    unsigned d = c.field()->degree();
    BigInt e = 1;
    for (unsigned i = 0; i + 1 < d; ++i) e *= c.field()->characteristic();
    return c.pow(e);
}

/// g squarefree monic; split off the product of all irreducible factors of
/// each degree d (distinct-degree factorization).
std::vector<std::pair<UPoly, int>> distinct_degree(const UPoly& g) {
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = g;
    const auto& F = g.field();
    BigInt q = F->order();
    UPoly x = UPoly::x(F);
    UPoly h = divmod(x, f).second;
    int d = 0;
    while (f.deg() > 0 && 2 * (d + 1) <= f.deg()) {
        ++d;
        h = powmod(h, q, f);
        UPoly g_d = gcd(h - divmod(x, f).second, f);
        if (g_d.deg() > 0) {
            out.emplace_back(g_d, d);
            f = divmod(f, g_d).first;
            h = divmod(h, f).second;
        }
    }
    if (f.deg() > 0) out.emplace_back(f, f.deg());
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting of a squarefree monic product
/// of irreducibles all of degree d (odd characteristic).
void equal_degree(const UPoly& g, int d, Rng& rng, std::vector<UPoly>& out) {
    if (g.deg() == d) {
        out.push_back(g.monic());
        return;
    }
    const auto& F = g.field();
    BigInt qd = 1;
    for (int i = 0; i < d; ++i) qd *= F->order();
    BigInt e = (qd - 1) / 2;
    for (;;) {
        // random polynomial of degree < deg(g)
        std::vector<FieldElem> cs;
        cs.reserve(static_cast<std::size_t>(g.deg()));
        BigInt qsz = F->order();
        for (int i = 0; i < g.deg(); ++i) {
            BigInt idx = 0;
            // uniform element index below q
            BigInt bound = qsz;
            while (bound > 0) {
                idx = idx * 0x100000000ull + rng.below(0x100000000ull);
                bound >>= 32;
            }
            cs.push_back(element_by_index(F, idx % qsz));
        }
        UPoly r(F, std::move(cs));
        if (r.deg() < 1) continue;
        UPoly s = powmod(r, e, g) - UPoly::constant(FieldElem(F, 1));
        UPoly h = gcd(s, g);
        if (h.deg() > 0 && h.deg() < g.deg()) {
            equal_degree(h, d, rng, out);
            equal_degree(divmod(g, h).first, d, rng, out);
            return;
        }
    }
}

/// Squarefree decomposition over F_q, char p, handling p-th powers.
void squarefree_decompose(const UPoly& g, int mult, std::vector<std::pair<UPoly, int>>& out) {
    const auto& F = g.field();
    auto p = static_cast<int>(F->characteristic());
    UPoly d = g.derivative();
    if (d.is_zero()) {
        // g = h(x^p); take the p-th root of each coefficient
        std::vector<FieldElem> hc;
        for (int i = 0; i <= g.deg(); i += p) hc.push_back(pth_root(g.coeff(static_cast<unsigned>(i))));
        squarefree_decompose(UPoly(F, std::move(hc)), mult * p, out);
        return;
    }
    UPoly c = gcd(g, d);
    UPoly w = divmod(g, c).first;
    int i = 1;
    while (w.deg() > 0) {
        UPoly y = gcd(w, c);
        UPoly z = divmod(w, y).first;
        if (z.deg() > 0) out.emplace_back(z.monic(), mult * i);
        ++i;
        w = y;
        c = divmod(c, y).first;
    }
    if (c.deg() > 0) squarefree_decompose(c, mult, out);
}

} // namespace

UFactorization factor_univariate(const UPoly& g, std::uint64_t seed) {
    if (g.is_zero()) fail(errc::zero_argument, "factor of the zero polynomial");
    if (!g.field()->finite()) fail(errc::unsupported_field, "factorization over a non-finite field");
    UFactorization out;
    out.unit = g.lead();
    if (g.deg() == 0) return out;
    Rng rng(seed ^ 0x5eedf00d12345678ull);
    std::vector<std::pair<UPoly, int>> sqf;
    squarefree_decompose(g.monic(), 1, sqf);
    std::vector<UFactor> factors;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<UPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& h : irr) factors.push_back({std::move(h), mult});
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const UFactor& a, const UFactor& b) { return upoly_less(a.factor, b.factor); });
    out.factors = std::move(factors);
    return out;
}

std::vector<FieldElem> roots_in_field(const UPoly& g, std::uint64_t seed) {
    if (g.is_zero()) fail(errc::zero_argument, "roots of the zero polynomial");
    const auto& F = g.field();
    // isolate the product of linear factors first, then split
    UPoly x = UPoly::x(F);
    UPoly xq = powmod(x, F->order(), g.monic());
    UPoly lin = gcd(xq - divmod(x, g.monic()).second, g.monic());
    std::vector<FieldElem> roots;
    if (lin.deg() > 0) {
        Rng rng(seed ^ 0x0ddba11c0ffee123ull);
        std::vector<UPoly> irr;
        equal_degree(lin, 1, rng, irr);
        for (const auto& h : irr) roots.push_back(-h.coeff(0));
    }
    std::sort(roots.begin(), roots.end(), repr_less);
    return roots;
}

} // namespace gwlines
