#include "gwlines/field.hpp"

#include "gwlines/upoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace gwlines {

namespace {

// -- arithmetic on F_p coefficient vectors (low degree first) --

using ZVec = std::vector<std::uint64_t>;

void zv_trim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

ZVec zv_mul(const ZVec& a, const ZVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
        }
    }
    zv_trim(r);
    return r;
}

// reduce modulo a monic modulus of degree n (length n+1)
void zv_reduce(ZVec& v, const ZVec& mod, std::uint64_t p) {
    std::size_t n = mod.size() - 1;
    while (v.size() > n) {
        std::uint64_t c = v.back();
        v.pop_back();
        if (c == 0) continue;
        std::size_t off = v.size() - n;
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t sub = mulmod_u64(c, mod[j], p);
            v[off + j] = (v[off + j] + p - sub) % p;
        }
    }
    zv_trim(v);
}

std::pair<ZVec, ZVec> zv_divmod(ZVec a, const ZVec& b, std::uint64_t p) {
    zv_trim(a);
    ZVec q;
    if (b.empty()) fail(errc::zero_argument, "division by the zero polynomial");
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    std::uint64_t binv = invmod_u64(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t f = mulmod_u64(a.back(), binv, p);
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t sub = mulmod_u64(f, b[j], p);
            a[off + j] = (a[off + j] + p - sub) % p;
        }
        a.pop_back();
        zv_trim(a);
    }
    zv_trim(q);
    return {q, a};
}

// extended Euclid: returns (g, s) with s*a = g mod m, g = gcd(a, m)
std::pair<ZVec, ZVec> zv_ext_gcd_mod(const ZVec& a, const ZVec& m, std::uint64_t p) {
    ZVec r0 = m, r1 = a;
    ZVec s0 = {}, s1 = {1};
    zv_trim(r1);
    while (!r1.empty()) {
        auto [q, rem] = zv_divmod(r0, r1, p);
        ZVec qs = zv_mul(q, s1, p);
        ZVec s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i) {
            std::uint64_t x = i < s0.size() ? s0[i] : 0;
            std::uint64_t y = i < qs.size() ? qs[i] : 0;
            s2[i] = (x + p - y) % p;
        }
        zv_trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    return {r0, s0};
}

std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> ds = {1};
    for (const auto& [q, e] : factorize(n)) {
        std::size_t sz = ds.size();
        BigInt pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= q;
            for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// irreducibility over Q of a monic rational polynomial, degree <= 4
bool q_irreducible(const std::vector<BigRat>& m) {
    std::size_t n = m.size() - 1;
    if (n == 1) return true;
    // substitute t = s/D to get a monic integer polynomial
    BigInt D = 1;
    for (const auto& c : m) D = boost::multiprecision::lcm(D, rat_den(c));
    std::vector<BigInt> g(n + 1);
    BigInt Dk = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        std::size_t idx = n - i;
        g[idx] = rat_num(m[idx]) * Dk / rat_den(m[idx]);
        Dk *= D;
    }
    auto eval = [&](const BigInt& x) {
        BigInt v = 0;
        for (std::size_t i = n + 1; i-- > 0;) v = v * x + g[i];
        return v;
    };
    if (g[0] == 0) return false; // root 0
    for (const auto& d : divisors_of(g[0])) {
        if (eval(d) == 0 || eval(-d) == 0) return false;
    }
    if (n < 4) return true;
    // quartic: search integer quadratic factors (s^2+u s+v)(s^2+w s+z)
    const BigInt &a = g[3], &b = g[2], &c = g[1], &d0 = g[0];
    for (const auto& dv : divisors_of(d0)) {
        for (int sign = 0; sign < 2; ++sign) {
            BigInt v = sign ? -dv : dv;
            BigInt z = d0 / v;
            BigInt msum = b - v - z;       // u*w
            BigInt disc = a * a - 4 * msum; // (u-w)^2
            if (disc < 0 || !is_perfect_square(disc)) continue;
            BigInt root = boost::multiprecision::sqrt(disc);
            for (int s2 = 0; s2 < 2; ++s2) {
                BigInt twou = s2 ? BigInt(a - root) : BigInt(a + root);
                if (twou % 2 != 0) continue;
                BigInt u = twou / 2;
                BigInt w = a - u;
                if (u * z + v * w == c) return false;
            }
        }
    }
    return true;
}

struct EmbedData {
    FieldElem gen_image;                 // image of the source generator
    std::vector<FieldElem> gen_powers;   // gen_image^j, j < src deg
    // row-reduced (M | pivots) for retraction, over F_p
    std::vector<ZVec> rows; // reduced rows of the (dst.deg x src.deg) matrix, augmented
    std::vector<int> pivot_of_col;
};

std::mutex g_embed_mutex;
std::map<std::string, std::shared_ptr<const EmbedData>> g_embed_cache;

std::string embed_key(const Field& src, const Field& dst) {
    std::ostringstream os;
    os << src.characteristic() << '|';
    for (auto c : src.finite_modulus()) os << c << ',';
    os << '|';
    for (auto c : dst.finite_modulus()) os << c << ',';
    return os.str();
}

} // namespace

// -- Field factories --

FieldPtr Field::prime(std::uint64_t p) {
    if (p < 3 || !is_prime_u64(p)) fail(errc::invalid_field, "p must be an odd prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::PrimeFinite;
    f->p_ = p;
    f->deg_ = 1;
    f->fmod_ = {0, 1}; // t, so that coefficient vectors reduce to constants
    return f;
}

FieldPtr Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (p < 3 || !is_prime_u64(p)) fail(errc::invalid_field, "p must be an odd prime");
    if (modulus.size() < 2) fail(errc::invalid_field, "modulus must have degree >= 1");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) fail(errc::invalid_field, "modulus must be monic");
    unsigned n = static_cast<unsigned>(modulus.size() - 1);
    if (n == 1) return prime(p); // degree-1 "extension" collapses
    auto fp = prime(p);
    std::vector<FieldElem> cs;
    cs.reserve(modulus.size());
    for (auto c : modulus) cs.emplace_back(fp, static_cast<std::int64_t>(c));
    if (!is_irreducible(UPoly(fp, cs))) fail(errc::invalid_field, "modulus is reducible");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::ExtensionFinite;
    f->p_ = p;
    f->deg_ = n;
    f->fmod_ = std::move(modulus);
    return f;
}

FieldPtr Field::extension(std::uint64_t p, unsigned n) {
    if (p < 3 || !is_prime_u64(p)) fail(errc::invalid_field, "p must be an odd prime");
    if (n == 0) fail(errc::invalid_field, "extension degree must be >= 1");
    if (n == 1) return prime(p);
    auto fp = prime(p);
    // scan monic candidates in lex order on (c0,...,c_{n-1})
    std::vector<std::uint64_t> c(n, 0);
    for (;;) {
        std::vector<FieldElem> cs;
        cs.reserve(n + 1);
        for (auto ci : c) cs.emplace_back(fp, static_cast<std::int64_t>(ci));
        cs.emplace_back(fp, 1);
        if (is_irreducible(UPoly(fp, cs))) {
            std::vector<std::uint64_t> m = c;
            m.push_back(1);
            auto f = std::shared_ptr<Field>(new Field());
            f->kind_ = FieldKind::ExtensionFinite;
            f->p_ = p;
            f->deg_ = n;
            f->fmod_ = std::move(m);
            return f;
        }
        // lex increment: last coordinate varies fastest
        std::size_t i = n;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) fail(errc::internal_inconsistency, "no irreducible modulus found");
        }
    }
}

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::Rational;
        f->deg_ = 1;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::number_field(std::vector<BigRat> modulus) {
    if (modulus.size() < 3 || modulus.size() > 5)
        fail(errc::invalid_field, "number fields are limited to degree 2..4");
    if (modulus.back() != 1) fail(errc::invalid_field, "modulus must be monic");
    if (!q_irreducible(modulus)) fail(errc::invalid_field, "modulus is reducible over Q");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::NumberField;
    f->deg_ = static_cast<unsigned>(modulus.size() - 1);
    f->nfmod_ = std::move(modulus);
    return f;
}

BigInt Field::order() const {
    if (!finite()) fail(errc::unsupported_field, "order of an infinite field");
    BigInt q = 1;
    for (unsigned i = 0; i < deg_; ++i) q *= p_;
    return q;
}

std::string Field::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case FieldKind::PrimeFinite: os << "F" << p_; break;
    case FieldKind::ExtensionFinite: os << "F" << p_ << "^" << deg_; break;
    case FieldKind::Rational: os << "Q"; break;
    case FieldKind::NumberField: {
        os << "Q[t]/(";
        for (std::size_t i = nfmod_.size(); i-- > 0;) {
            os << nfmod_[i] << "t^" << i;
            if (i) os << "+";
        }
        os << ")";
        break;
    }
    }
    return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
    case FieldKind::Rational: return true;
    case FieldKind::PrimeFinite: return a->characteristic() == b->characteristic();
    case FieldKind::ExtensionFinite:
        return a->characteristic() == b->characteristic() && a->finite_modulus() == b->finite_modulus();
    case FieldKind::NumberField: return a->nf_modulus() == b->nf_modulus();
    }
    return false;
}

// -- FieldElem --

namespace {
void require_field(const FieldPtr& f) {
    if (!f) fail(errc::invalid_field, "element without a field");
}
void require_same(const FieldElem& a, const FieldElem& b) {
    if (!same_field(a.field(), b.field())) fail(errc::field_mismatch, "operands live in different fields");
}
} // namespace

FieldElem::FieldElem(FieldPtr f) : f_(std::move(f)) {
    require_field(f_);
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: r_ = 0; break;
    case FieldKind::ExtensionFinite: v_.assign(f_->degree(), 0); break;
    case FieldKind::Rational: q_ = 0; break;
    case FieldKind::NumberField: nv_.assign(f_->degree(), BigRat(0)); break;
    }
}

FieldElem::FieldElem(FieldPtr f, std::int64_t v) : FieldElem(std::move(f), BigInt(v)) {}

FieldElem::FieldElem(FieldPtr f, const BigInt& v) : FieldElem(std::move(f)) {
    switch (f_->kind()) {
    case FieldKind::PrimeFinite:
    case FieldKind::ExtensionFinite: {
        BigInt r = v % f_->characteristic();
        if (r < 0) r += f_->characteristic();
        auto u = static_cast<std::uint64_t>(r);
        if (f_->kind() == FieldKind::PrimeFinite)
            r_ = u;
        else
            v_[0] = u;
        break;
    }
    case FieldKind::Rational: q_ = BigRat(v); break;
    case FieldKind::NumberField: nv_[0] = BigRat(v); break;
    }
}

FieldElem::FieldElem(FieldPtr f, const BigRat& v) : FieldElem(std::move(f)) {
    switch (f_->kind()) {
    case FieldKind::Rational: q_ = v; break;
    case FieldKind::NumberField: nv_[0] = v; break;
    default: {
        BigInt den = rat_den(v);
        if (den % f_->characteristic() == 0)
            fail(errc::invalid_field, "denominator divisible by the characteristic");
        FieldElem n(f_, rat_num(v));
        FieldElem d(f_, den);
        *this = n * d.inverse();
        break;
    }
    }
}

FieldElem FieldElem::from_coeffs(FieldPtr f, std::vector<std::uint64_t> coeffs) {
    require_field(f);
    if (f->kind() != FieldKind::PrimeFinite && f->kind() != FieldKind::ExtensionFinite)
        fail(errc::field_mismatch, "finite coefficients for a non-finite field");
    if (coeffs.size() > f->degree()) fail(errc::invalid_field, "coefficient vector too long");
    FieldElem e(f);
    for (auto& c : coeffs) c %= f->characteristic();
    if (f->kind() == FieldKind::PrimeFinite) {
        e.r_ = coeffs.empty() ? 0 : coeffs[0];
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) e.v_[i] = coeffs[i];
    }
    return e;
}

FieldElem FieldElem::from_coeffs(FieldPtr f, std::vector<BigRat> coeffs) {
    require_field(f);
    if (f->kind() == FieldKind::Rational) {
        if (coeffs.size() > 1) fail(errc::invalid_field, "coefficient vector too long");
        return FieldElem(f, coeffs.empty() ? BigRat(0) : coeffs[0]);
    }
    if (f->kind() != FieldKind::NumberField) fail(errc::field_mismatch, "rational coefficients for a finite field");
    if (coeffs.size() > f->degree()) fail(errc::invalid_field, "coefficient vector too long");
    FieldElem e(f);
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.nv_[i] = coeffs[i];
    return e;
}

FieldElem FieldElem::generator(FieldPtr f) {
    require_field(f);
    if (f->degree() < 2) fail(errc::invalid_field, "field has no proper generator");
    FieldElem e(f);
    if (f->kind() == FieldKind::ExtensionFinite)
        e.v_[1] = 1;
    else
        e.nv_[1] = 1;
    return e;
}

bool FieldElem::is_zero() const {
    require_field(f_);
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: return r_ == 0;
    case FieldKind::ExtensionFinite:
        return std::all_of(v_.begin(), v_.end(), [](std::uint64_t c) { return c == 0; });
    case FieldKind::Rational: return q_ == 0;
    case FieldKind::NumberField:
        return std::all_of(nv_.begin(), nv_.end(), [](const BigRat& c) { return c == 0; });
    }
    return false;
}

bool FieldElem::is_one() const { return *this == FieldElem(f_, 1); }

FieldElem FieldElem::operator-() const {
    FieldElem r(*this);
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: r.r_ = r_ ? f_->characteristic() - r_ : 0; break;
    case FieldKind::ExtensionFinite:
        for (auto& c : r.v_) c = c ? f_->characteristic() - c : 0;
        break;
    case FieldKind::Rational: r.q_ = -q_; break;
    case FieldKind::NumberField:
        for (auto& c : r.nv_) c = -c;
        break;
    }
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same(*this, o);
    FieldElem r(*this);
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: r.r_ = (r_ + o.r_) % f_->characteristic(); break;
    case FieldKind::ExtensionFinite:
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = (v_[i] + o.v_[i]) % f_->characteristic();
        break;
    case FieldKind::Rational: r.q_ = q_ + o.q_; break;
    case FieldKind::NumberField:
        for (std::size_t i = 0; i < nv_.size(); ++i) r.nv_[i] = nv_[i] + o.nv_[i];
        break;
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same(*this, o);
    FieldElem r(f_);
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: r.r_ = mulmod_u64(r_, o.r_, f_->characteristic()); break;
    case FieldKind::ExtensionFinite: {
        ZVec prod = zv_mul(v_, o.v_, f_->characteristic());
        zv_reduce(prod, f_->finite_modulus(), f_->characteristic());
        prod.resize(f_->degree(), 0);
        r.v_ = std::move(prod);
        break;
    }
    case FieldKind::Rational: r.q_ = q_ * o.q_; break;
    case FieldKind::NumberField: {
        std::vector<BigRat> prod(2 * f_->degree() - 1, BigRat(0));
        for (std::size_t i = 0; i < nv_.size(); ++i) {
            if (nv_[i] == 0) continue;
            for (std::size_t j = 0; j < o.nv_.size(); ++j) prod[i + j] += nv_[i] * o.nv_[j];
        }
        const auto& m = f_->nf_modulus();
        std::size_t n = f_->degree();
        for (std::size_t i = prod.size(); i-- > n;) {
            BigRat c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::size_t j = 0; j < n; ++j) prod[i - n + j] -= c * m[j];
        }
        prod.resize(n);
        r.nv_ = std::move(prod);
        break;
    }
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

bool FieldElem::operator==(const FieldElem& o) const {
    if (!same_field(f_, o.f_)) return false;
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: return r_ == o.r_;
    case FieldKind::ExtensionFinite: return v_ == o.v_;
    case FieldKind::Rational: return q_ == o.q_;
    case FieldKind::NumberField: return nv_ == o.nv_;
    }
    return false;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(errc::zero_argument, "inverse of zero");
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: {
        FieldElem r(f_);
        r.r_ = invmod_u64(r_, f_->characteristic());
        return r;
    }
    case FieldKind::ExtensionFinite: {
        auto [g, s] = zv_ext_gcd_mod(v_, f_->finite_modulus(), f_->characteristic());
        if (g.size() != 1) fail(errc::internal_inconsistency, "non-invertible element in a field");
        std::uint64_t ginv = invmod_u64(g[0], f_->characteristic());
        ZVec inv(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) inv[i] = mulmod_u64(s[i], ginv, f_->characteristic());
        zv_reduce(inv, f_->finite_modulus(), f_->characteristic());
        inv.resize(f_->degree(), 0);
        FieldElem r(f_);
        r.v_ = std::move(inv);
        return r;
    }
    case FieldKind::Rational: {
        FieldElem r(f_);
        r.q_ = 1 / q_;
        return r;
    }
    case FieldKind::NumberField: {
        // extended Euclid in Q[t] against the modulus
        std::vector<BigRat> r0(f_->nf_modulus()), r1(nv_);
        std::vector<BigRat> s0, s1 = {BigRat(1)};
        auto trim = [](std::vector<BigRat>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        trim(r1);
        while (!r1.empty()) {
            // divide r0 by r1
            std::vector<BigRat> q;
            std::vector<BigRat> rem = r0;
            trim(rem);
            if (rem.size() >= r1.size()) {
                q.assign(rem.size() - r1.size() + 1, BigRat(0));
                while (rem.size() >= r1.size() && !rem.empty()) {
                    BigRat f = rem.back() / r1.back();
                    std::size_t off = rem.size() - r1.size();
                    q[off] = f;
                    for (std::size_t j = 0; j < r1.size(); ++j) rem[off + j] -= f * r1[j];
                    trim(rem);
                }
            }
            std::vector<BigRat> qs(q.size() + s1.size() - (q.empty() || s1.empty() ? 0 : 1), BigRat(0));
            if (!q.empty() && !s1.empty()) {
                for (std::size_t i = 0; i < q.size(); ++i)
                    for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
            }
            std::vector<BigRat> s2(std::max(s0.size(), qs.size()), BigRat(0));
            for (std::size_t i = 0; i < s2.size(); ++i) {
                BigRat x = i < s0.size() ? s0[i] : BigRat(0);
                BigRat y = i < qs.size() ? qs[i] : BigRat(0);
                s2[i] = x - y;
            }
            trim(s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        if (r0.size() != 1) fail(errc::internal_inconsistency, "non-invertible element in a number field");
        FieldElem out(f_);
        for (std::size_t i = 0; i < s0.size() && i < out.nv_.size(); ++i) out.nv_[i] = s0[i] / r0[0];
        return out;
    }
    }
    fail(errc::internal_inconsistency, "unreachable");
}

FieldElem FieldElem::pow(BigInt e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem base = *this, r(f_, 1);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BigInt FieldElem::repr_index() const {
    if (!f_->finite()) fail(errc::unsupported_field, "representation index of an infinite-field element");
    BigInt idx = 0;
    if (f_->kind() == FieldKind::PrimeFinite) return BigInt(r_);
    for (std::size_t i = v_.size(); i-- > 0;) idx = idx * f_->characteristic() + v_[i];
    return idx;
}

std::uint64_t FieldElem::prime_value() const {
    if (f_->kind() != FieldKind::PrimeFinite) fail(errc::field_mismatch, "not a prime-field element");
    return r_;
}

const BigRat& FieldElem::rational_value() const {
    if (f_->kind() != FieldKind::Rational) fail(errc::field_mismatch, "not a rational element");
    return q_;
}

std::vector<std::uint64_t> FieldElem::finite_coeffs() const {
    if (f_->kind() == FieldKind::PrimeFinite) return {r_};
    if (f_->kind() != FieldKind::ExtensionFinite) fail(errc::field_mismatch, "not a finite-field element");
    return v_;
}

std::vector<BigRat> FieldElem::nf_coeffs() const {
    if (f_->kind() == FieldKind::Rational) return {q_};
    if (f_->kind() != FieldKind::NumberField) fail(errc::field_mismatch, "not a number-field element");
    return nv_;
}

std::string FieldElem::to_string() const {
    std::ostringstream os;
    switch (f_->kind()) {
    case FieldKind::PrimeFinite: os << r_; break;
    case FieldKind::ExtensionFinite: {
        os << '[';
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) os << ',';
            os << v_[i];
        }
        os << ']';
        break;
    }
    case FieldKind::Rational: os << rat_num(q_) << '/' << rat_den(q_); break;
    case FieldKind::NumberField: {
        os << '[';
        for (std::size_t i = 0; i < nv_.size(); ++i) {
            if (i) os << ',';
            os << rat_num(nv_[i]) << '/' << rat_den(nv_[i]);
        }
        os << ']';
        break;
    }
    }
    return os.str();
}

bool repr_less(const FieldElem& a, const FieldElem& b) { return a.repr_index() < b.repr_index(); }

FieldElem frobenius(const FieldElem& x, unsigned k) {
    if (!x.field()->finite()) fail(errc::unsupported_field, "Frobenius over an infinite field");
    BigInt e = 1;
    for (unsigned i = 0; i < k; ++i) e *= x.field()->characteristic();
    return x.pow(e);
}

FieldElem element_by_index(const FieldPtr& f, BigInt index) {
    if (!f->finite()) fail(errc::unsupported_field, "element_by_index over an infinite field");
    std::vector<std::uint64_t> c(f->degree());
    for (unsigned i = 0; i < f->degree(); ++i) {
        c[i] = static_cast<std::uint64_t>(index % f->characteristic());
        index /= f->characteristic();
    }
    return FieldElem::from_coeffs(f, std::move(c));
}

// -- quadratic structure --

bool is_square(const FieldElem& x) {
    if (x.is_zero()) fail(errc::zero_argument, "is_square(0)");
    const auto& f = x.field();
    switch (f->kind()) {
    case FieldKind::PrimeFinite:
    case FieldKind::ExtensionFinite: {
        BigInt e = (f->order() - 1) / 2;
        return x.pow(e).is_one();
    }
    case FieldKind::Rational: {
        const BigRat& q = x.rational_value();
        if (q < 0) return false;
        return is_perfect_square(rat_num(q) * rat_den(q));
    }
    case FieldKind::NumberField: {
        if (f->degree() != 2)
            fail(errc::unsupported_field, "is_square implemented for quadratic number fields only");
        // x = a + b t, m = t^2 + m1 t + m0; norm/trace criterion
        auto cs = x.nf_coeffs();
        BigRat a = cs[0], b = cs[1];
        BigRat m1 = f->nf_modulus()[1], m0 = f->nf_modulus()[0];
        BigRat disc = m1 * m1 - 4 * m0;
        auto sq_q = [](const BigRat& v) {
            return v > 0 && is_perfect_square(rat_num(v) * rat_den(v));
        };
        if (b == 0) return sq_q(a) || sq_q(a * disc);
        BigRat norm = a * a - a * b * m1 + b * b * m0;
        if (!sq_q(norm)) return false;
        // sqrt of the rational square norm
        BigInt sn = boost::multiprecision::sqrt(rat_num(norm));
        BigInt sd = boost::multiprecision::sqrt(rat_den(norm));
        BigRat s(sn, sd);
        BigRat wp = (2 * a - b * m1 + 2 * s) / disc;
        BigRat wm = (2 * a - b * m1 - 2 * s) / disc;
        return (wp != 0 && sq_q(wp)) || (wm != 0 && sq_q(wm));
    }
    }
    return false;
}

FieldElem canonical_nonsquare(const FieldPtr& f) {
    if (!f->finite()) fail(errc::unsupported_field, "canonical non-square of an infinite field");
    for (BigInt i = 1;; ++i) {
        FieldElem e = element_by_index(f, i);
        if (!is_square(e)) return e;
    }
}

FieldElem square_class(const FieldElem& x) {
    if (x.is_zero()) fail(errc::zero_argument, "square_class(0)");
    const auto& f = x.field();
    switch (f->kind()) {
    case FieldKind::PrimeFinite:
    case FieldKind::ExtensionFinite:
        return is_square(x) ? FieldElem(f, 1) : canonical_nonsquare(f);
    case FieldKind::Rational:
        return FieldElem(f, squarefree_part(x.rational_value()));
    case FieldKind::NumberField:
        return is_square(x) ? FieldElem(f, 1) : x;
    }
    fail(errc::internal_inconsistency, "unreachable");
}

// -- traces --

FieldElem field_trace(const FieldElem& u, const FieldPtr& base) {
    const auto& L = u.field();
    if (same_field(L, base)) return u;
    if (L->finite() && base->finite()) {
        if (L->characteristic() != base->characteristic() || L->degree() % base->degree() != 0)
            fail(errc::no_extension, "not an extension of the base field");
        unsigned d = L->degree() / base->degree();
        FieldElem s(L);
        FieldElem t = u;
        for (unsigned i = 0; i < d; ++i) {
            s += t;
            t = frobenius(t, base->degree());
        }
        return retract(s, base);
    }
    if (L->kind() == FieldKind::NumberField && base->kind() == FieldKind::Rational) {
        // trace of the multiplication-by-u matrix in the power basis
        BigRat tr = 0;
        FieldElem cur = u;
        FieldElem t = FieldElem::generator(L);
        for (unsigned i = 0; i < L->degree(); ++i) {
            tr += cur.nf_coeffs()[i];
            cur = cur * t;
        }
        return FieldElem(base, tr);
    }
    fail(errc::no_extension, "unsupported extension pair");
}

// -- embeddings --

namespace {

std::shared_ptr<const EmbedData> get_embedding(const FieldPtr& src, const FieldPtr& dst) {
    std::string key = embed_key(*src, *dst);
    {
        std::lock_guard<std::mutex> lock(g_embed_mutex);
        auto it = g_embed_cache.find(key);
        if (it != g_embed_cache.end()) return it->second;
    }
    // minimal polynomial of the source generator is the source modulus;
    // its deterministically-first root in dst defines the embedding
    auto fp = Field::prime(src->characteristic());
    std::vector<FieldElem> cs;
    for (auto c : src->finite_modulus()) cs.emplace_back(dst, static_cast<std::int64_t>(c));
    UPoly m_dst(dst, cs);
    auto roots = roots_in_field(m_dst, 0);
    if (roots.empty()) fail(errc::internal_inconsistency, "source modulus has no root in target field");
    auto data = std::make_shared<EmbedData>();
    data->gen_image = roots.front();
    data->gen_powers.resize(src->degree(), FieldElem(dst, 1));
    for (unsigned j = 1; j < src->degree(); ++j) data->gen_powers[j] = data->gen_powers[j - 1] * data->gen_image;
    // retraction solver: row-reduce the (dst.deg x src.deg) matrix over F_p
    unsigned rows = dst->degree(), cols = src->degree();
    std::uint64_t p = src->characteristic();
    std::vector<ZVec> M(rows, ZVec(cols, 0));
    for (unsigned j = 0; j < cols; ++j) {
        auto coords = data->gen_powers[j].finite_coeffs();
        coords.resize(rows, 0);
        for (unsigned i = 0; i < rows; ++i) M[i][j] = coords[i];
    }
    // Gaussian elimination with recorded pivots; augmentation handled at query time
    data->pivot_of_col.assign(cols, -1);
    std::vector<ZVec> red;
    std::vector<int> red_pivot; // pivot column of each stored row
    std::vector<ZVec> ops;      // row operations applied (identity-extended), one per stored row
    // store reduced rows of [M | I]
    std::vector<ZVec> aug(rows, ZVec(cols + rows, 0));
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) aug[i][j] = M[i][j];
        aug[i][cols + i] = 1;
    }
    unsigned r = 0;
    for (unsigned c = 0; c < cols && r < rows; ++c) {
        unsigned piv = r;
        while (piv < rows && aug[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(aug[piv], aug[r]);
        std::uint64_t inv = invmod_u64(aug[r][c], p);
        for (auto& x : aug[r]) x = mulmod_u64(x, inv, p);
        for (unsigned i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            std::uint64_t fmul = aug[i][c];
            for (unsigned j = 0; j < cols + rows; ++j) {
                std::uint64_t sub = mulmod_u64(fmul, aug[r][j], p);
                aug[i][j] = (aug[i][j] + p - sub) % p;
            }
        }
        data->pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }
    data->rows = std::move(aug);
    (void)red;
    (void)red_pivot;
    (void)ops;
    std::lock_guard<std::mutex> lock(g_embed_mutex);
    auto [it, inserted] = g_embed_cache.emplace(key, data);
    return it->second;
}

} // namespace

FieldElem embed(const FieldElem& x, const FieldPtr& target) {
    const auto& src = x.field();
    if (same_field(src, target)) return x;
    if (src->kind() == FieldKind::Rational && target->kind() == FieldKind::NumberField)
        return FieldElem(target, x.rational_value());
    if (!src->finite() || !target->finite()) fail(errc::no_embedding, "unsupported embedding pair");
    if (src->characteristic() != target->characteristic() || target->degree() % src->degree() != 0)
        fail(errc::no_embedding, "source degree does not divide target degree");
    if (src->kind() == FieldKind::PrimeFinite) return FieldElem(target, BigInt(x.prime_value()));
    auto data = get_embedding(src, target);
    auto cs = x.finite_coeffs();
    FieldElem out(target);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j] == 0) continue;
        out += data->gen_powers[j] * FieldElem(target, BigInt(cs[j]));
    }
    return out;
}

FieldElem retract(const FieldElem& x, const FieldPtr& sub) {
    const auto& src = x.field();
    if (same_field(src, sub)) return x;
    if (src->kind() == FieldKind::NumberField && sub->kind() == FieldKind::Rational) {
        auto cs = x.nf_coeffs();
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i] != 0) fail(errc::no_embedding, "element is not rational");
        return FieldElem(sub, cs[0]);
    }
    if (!src->finite() || !sub->finite()) fail(errc::no_embedding, "unsupported retraction pair");
    if (src->characteristic() != sub->characteristic() || src->degree() % sub->degree() != 0)
        fail(errc::no_embedding, "subfield degree does not divide the degree");
    if (sub->kind() == FieldKind::PrimeFinite) {
        auto cs = x.finite_coeffs();
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i] != 0) fail(errc::no_embedding, "element is not in the prime field");
        return FieldElem(sub, BigInt(cs[0]));
    }
    auto data = get_embedding(sub, src);
    std::uint64_t p = src->characteristic();
    unsigned rows = src->degree(), cols = sub->degree();
    auto target_coords = x.finite_coeffs();
    target_coords.resize(rows, 0);
    // apply the recorded row reduction to the target vector
    ZVec b(rows, 0);
    for (unsigned i = 0; i < rows; ++i) {
        std::uint64_t acc = 0;
        for (unsigned k = 0; k < rows; ++k)
            acc = (acc + mulmod_u64(data->rows[i][cols + k], target_coords[k], p)) % p;
        b[i] = acc;
    }
    ZVec sol(cols, 0);
    for (unsigned c = 0; c < cols; ++c) {
        int r = data->pivot_of_col[c];
        if (r >= 0) sol[c] = b[static_cast<unsigned>(r)];
    }
    FieldElem out = FieldElem::from_coeffs(sub, sol);
    // the final round-trip check also catches inconsistent systems
    if (embed(out, src) != x) fail(errc::no_embedding, "element is not in the subfield image");
    return out;
}

FieldElem nf_conjugate(const FieldElem& x) {
    const auto& f = x.field();
    if (f->kind() != FieldKind::NumberField || f->degree() != 2)
        fail(errc::unsupported_field, "conjugation implemented for quadratic number fields only");
    auto cs = x.nf_coeffs();
    BigRat m1 = f->nf_modulus()[1];
    return FieldElem::from_coeffs(f, std::vector<BigRat>{cs[0] - cs[1] * m1, -cs[1]});
}

} // namespace gwlines
