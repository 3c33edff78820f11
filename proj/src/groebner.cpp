#include "gwlines/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>

namespace gwlines {

bool mono_less(const Exp& a, const Exp& b, MonomialOrder o) {
    if (o == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

bool mono_divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp mono_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exp leading_exp(const Poly& p, MonomialOrder o) {
    if (p.is_zero()) fail(errc::zero_argument, "leading term of 0");
    const Exp* best = nullptr;
    for (const auto& [e, c] : p.terms()) {
        if (!best || mono_less(*best, e, o)) best = &e;
    }
    return *best;
}

namespace {

Exp mono_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Poly mono_mul_poly(const Exp& m, const FieldElem& c, const Poly& p) {
    Poly r(p.field(), p.nvars());
    for (const auto& [e, pc] : p.terms()) {
        Exp ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + m[i];
        r.add_term(ne, c * pc);
    }
    return r;
}

struct GBElem {
    Poly p;   // monic
    Exp lead;
};

/// One reduction pass: cancel the leading term of p against the basis,
/// repeatedly, collecting irreducible terms into the remainder.
Poly reduce_full(Poly p, const std::vector<GBElem>& basis, MonomialOrder o) {
    Poly rem(p.field(), p.nvars());
    while (!p.is_zero()) {
        Exp lt = leading_exp(p, o);
        bool reduced = false;
        for (const auto& g : basis) {
            if (mono_divides(g.lead, lt)) {
                FieldElem c = p.coeff(lt);
                p -= mono_mul_poly(mono_sub(lt, g.lead), c, g.p);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            FieldElem c = p.coeff(lt);
            rem.add_term(lt, c);
            Poly m = Poly::monomial(p.field(), p.nvars(), lt, c);
            p -= m;
        }
    }
    return rem;
}

} // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& gb, MonomialOrder o) {
    std::vector<GBElem> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        basis.push_back({g, leading_exp(g, o)});
    }
    return reduce_full(p, basis, o);
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, MonomialOrder o) {
    std::vector<GBElem> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Poly m = g * g.coeff(leading_exp(g, o)).inverse();
        basis.push_back({m, leading_exp(m, o)});
    }
    if (basis.empty()) return {};
    unsigned nvars = basis[0].p.nvars();

    struct Pair {
        std::size_t i, j;
        Exp lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return mono_less(a.lcm, b.lcm, o);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, mono_lcm(basis[i].lead, basis[j].lead)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *it;
        pairs.erase(it);
        const auto& gi = basis[pr.i];
        const auto& gj = basis[pr.j];
        // product criterion: coprime leading terms reduce to zero
        Exp sum(nvars);
        for (unsigned k = 0; k < nvars; ++k) sum[k] = gi.lead[k] + gj.lead[k];
        if (sum == pr.lcm) continue;
        // chain criterion: some other lead divides the lcm and both
        // companion pairs are gone
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(basis[k].lead, pr.lcm)) continue;
            bool pik = false, pjk = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k))) pik = true;
                if ((q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k))) pjk = true;
            }
            if (!pik && !pjk) skip = true;
        }
        if (skip) continue;
        Poly spoly = mono_mul_poly(mono_sub(pr.lcm, gi.lead), FieldElem(gi.p.field(), 1), gi.p) -
                     mono_mul_poly(mono_sub(pr.lcm, gj.lead), FieldElem(gj.p.field(), 1), gj.p);
        Poly r = reduce_full(std::move(spoly), basis, o);
        if (r.is_zero()) continue;
        Poly m = r * r.coeff(leading_exp(r, o)).inverse();
        basis.push_back({m, leading_exp(m, o)});
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<GBElem> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].lead, basis[i].lead) &&
                (basis[j].lead != basis[i].lead || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each against the others
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GBElem> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = reduce_full(minimal[i].p, others, o);
        if (r.is_zero()) continue;
        reduced.push_back(r * r.coeff(leading_exp(r, o)).inverse());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return mono_less(leading_exp(a, o), leading_exp(b, o), o);
    });
    return reduced;
}

std::optional<std::vector<Exp>> quotient_basis(const std::vector<Poly>& gb, MonomialOrder o) {
    if (gb.empty()) return std::nullopt; // zero ideal: infinite-dimensional
    unsigned nvars = gb[0].nvars();
    std::vector<Exp> leads;
    for (const auto& g : gb) leads.push_back(leading_exp(g, o));
    for (const auto& l : leads) {
        bool constant = std::all_of(l.begin(), l.end(), [](unsigned e) { return e == 0; });
        if (constant) return std::vector<Exp>{}; // unit ideal
    }
    // zero-dimensionality: each variable appears as a pure power lead
    for (unsigned v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& l : leads) {
            bool pure = l[v] > 0;
            for (unsigned w = 0; w < nvars && pure; ++w)
                if (w != v && l[w] > 0) pure = false;
            if (pure) found = true;
        }
        if (!found) return std::nullopt;
    }
    auto standard = [&](const Exp& e) {
        for (const auto& l : leads)
            if (mono_divides(l, e)) return false;
        return true;
    };
    // the staircase is closed under division: BFS from 1
    std::set<Exp> seen;
    std::deque<Exp> queue;
    Exp one(nvars, 0);
    queue.push_back(one);
    seen.insert(one);
    std::vector<Exp> out;
    while (!queue.empty()) {
        Exp e = queue.front();
        queue.pop_front();
        out.push_back(e);
        for (unsigned v = 0; v < nvars; ++v) {
            Exp n = e;
            n[v] += 1;
            if (seen.count(n) || !standard(n)) continue;
            seen.insert(n);
            queue.push_back(n);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Exp& a, const Exp& b) { return mono_less(a, b, o); });
    return out;
}

namespace {

/// Incremental linear dependence tracker over a Field.
class DependenceTracker {
public:
    DependenceTracker(FieldPtr f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

    /// Returns the combination expressing v over the stored vectors when
    /// dependent, or stores v (with identity combination slot) and
    /// returns nullopt.
    std::optional<std::vector<FieldElem>> reduce_or_insert(std::vector<FieldElem> v) {
        std::vector<FieldElem> combo(rows_.size() + 1, FieldElem(f_, 0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            if (v[row.pivot].is_zero()) continue;
            FieldElem f = v[row.pivot] * row.pivot_inv;
            for (std::size_t k = 0; k < dim_; ++k) v[k] -= f * row.vec[k];
            for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] += f * row.combo[k];
        }
        std::size_t piv = 0;
        while (piv < dim_ && v[piv].is_zero()) ++piv;
        if (piv == dim_) {
            combo.pop_back();
            return combo; // dependent: v = sum combo_k * original_k
        }
        Row row;
        row.vec = std::move(v);
        row.pivot = piv;
        row.pivot_inv = row.vec[piv].inverse();
        // this row equals original_new - sum combo_k original_k
        combo.back() = FieldElem(f_, 1);
        for (std::size_t k = 0; k + 1 < combo.size(); ++k) combo[k] = -combo[k];
        row.combo = std::move(combo);
        rows_.push_back(std::move(row));
        return std::nullopt;
    }

    std::size_t size() const { return rows_.size(); }

private:
    struct Row {
        std::vector<FieldElem> vec;
        std::size_t pivot = 0;
        FieldElem pivot_inv;
        std::vector<FieldElem> combo; // over original inserted vectors
    };
    FieldPtr f_;
    std::size_t dim_;
    std::vector<Row> rows_;
};

} // namespace

std::vector<Poly> fglm_to_lex(const std::vector<Poly>& gb_drl) {
    auto qb = quotient_basis(gb_drl, MonomialOrder::DegRevLex);
    if (!qb) fail(errc::not_isolated, "FGLM requires a zero-dimensional ideal");
    const auto& B = *qb;
    if (B.empty()) {
        // unit ideal
        return gb_drl;
    }
    const auto& F = gb_drl[0].field();
    unsigned nvars = gb_drl[0].nvars();
    std::size_t D = B.size();
    std::map<Exp, std::size_t> index_of;
    for (std::size_t i = 0; i < D; ++i) index_of[B[i]] = i;

    auto to_vec = [&](const Poly& nf) {
        std::vector<FieldElem> v(D, FieldElem(F, 0));
        for (const auto& [e, c] : nf.terms()) v[index_of.at(e)] = c;
        return v;
    };

    // multiplication matrices, columns indexed by the quotient basis
    std::vector<std::vector<std::vector<FieldElem>>> mul(nvars);
    for (unsigned v = 0; v < nvars; ++v) {
        mul[v].reserve(D);
        for (std::size_t i = 0; i < D; ++i) {
            Exp e = B[i];
            e[v] += 1;
            Poly m = Poly::monomial(F, nvars, e, FieldElem(F, 1));
            mul[v].push_back(to_vec(normal_form(m, gb_drl, MonomialOrder::DegRevLex)));
        }
    }
    auto apply_mul = [&](unsigned v, const std::vector<FieldElem>& x) {
        std::vector<FieldElem> y(D, FieldElem(F, 0));
        for (std::size_t i = 0; i < D; ++i) {
            if (x[i].is_zero()) continue;
            const auto& col = mul[v][i];
            for (std::size_t k = 0; k < D; ++k) y[k] += col[k] * x[i];
        }
        return y;
    };

    auto lex_cmp = [](const Exp& a, const Exp& b) { return mono_less(a, b, MonomialOrder::Lex); };
    std::map<Exp, std::vector<FieldElem>, decltype(lex_cmp)> frontier(lex_cmp);
    std::vector<Exp> staircase;
    std::vector<Poly> lexgb;
    std::vector<Exp> lex_leads;
    DependenceTracker tracker(F, D);

    Exp one(nvars, 0);
    std::vector<FieldElem> v_one(D, FieldElem(F, 0));
    v_one[index_of.at(one)] = FieldElem(F, 1);
    frontier.emplace(one, std::move(v_one));

    while (!frontier.empty()) {
        auto it = frontier.begin();
        Exp m = it->first;
        std::vector<FieldElem> vec = it->second;
        frontier.erase(it);
        bool under_lead = false;
        for (const auto& l : lex_leads)
            if (mono_divides(l, m)) under_lead = true;
        if (under_lead) continue;
        auto dep = tracker.reduce_or_insert(vec);
        if (dep) {
            Poly g = Poly::monomial(F, nvars, m, FieldElem(F, 1));
            for (std::size_t k = 0; k < dep->size(); ++k)
                g.add_term(staircase[k], -(*dep)[k]);
            lex_leads.push_back(m);
            lexgb.push_back(std::move(g));
        } else {
            staircase.push_back(m);
            for (unsigned v = 0; v < nvars; ++v) {
                Exp n = m;
                n[v] += 1;
                if (frontier.count(n)) continue;
                frontier.emplace(n, apply_mul(v, vec));
            }
        }
        if (staircase.size() > D) fail(errc::internal_inconsistency, "FGLM staircase overflow");
    }
    std::sort(lexgb.begin(), lexgb.end(), [&](const Poly& a, const Poly& b) {
        return mono_less(leading_exp(a, MonomialOrder::Lex), leading_exp(b, MonomialOrder::Lex),
                         MonomialOrder::Lex);
    });
    return lexgb;
}

} // namespace gwlines
