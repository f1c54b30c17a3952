#include "schubert/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "schubert/ladder.hpp"

namespace schubert {

namespace {

std::string str(const CellSet &s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i].row) + ":" + std::to_string(s[i].col);
    return out + "}";
}

std::string str(int x) { return std::to_string(x); }

RatFunc sgn(long e) { return RatFunc(e % 2 ? -1L : 1L); }

RatFunc wu_at(const Analysis &a, int row, int col)
{
    if (row < 1 || row > a.r())
        return RatFunc();
    return a.wu(row - 1, col - 1);
}

CellSet with(CellSet s, CellRef c)
{
    s.insert(std::lower_bound(s.begin(), s.end(), c), c);
    return s;
}

CellSet without(const CellSet &s, CellRef c) { return set_minus(s, {c}); }

// Records out_of_scope for every id that produced no result since `start`.
void mark_vacuous(CheckSink &sink, std::size_t start, std::initializer_list<const char *> ids)
{
    for (const char *id : ids) {
        bool seen = false;
        for (std::size_t i = start; i < sink.results().size() && !seen; ++i)
            seen = sink.results()[i].check_id == id;
        if (!seen)
            sink.out_of_scope(id, "-", "no instance satisfies the hypotheses");
    }
}

// Runs body; a thrown size or domain error becomes a failed instance.
void guarded(CheckSink &sink, const std::string &id, const std::string &inst, const std::function<void()> &body)
{
    try {
        body();
    } catch (const std::invalid_argument &e) {
        sink.truth(id, inst, false, e.what());
    } catch (const std::logic_error &e) {
        sink.truth(id, inst, false, e.what());
    }
}

// P_L* with the empty case, also accepting a One that is its own origin and destination.
MultiPoly star_or_PL(const Analysis &a, const CellSet &A, const CellSet &B)
{
    if (A.empty() && B.empty())
        return MultiPoly(1L);
    return a.engine.path_sum_PL(A, B);
}

class QCache {
public:
    explicit QCache(const Analysis &a) : a_(a) {}
    const RatFunc &operator()(int j, int l)
    {
        auto it = q_.find({j, l});
        if (it == q_.end())
            it = q_.emplace(std::make_pair(j, l), q_jl(a_, j, l)).first;
        return it->second;
    }

private:
    const Analysis &a_;
    std::map<std::pair<int, int>, RatFunc> q_;
};

} // namespace

void verify_rowop_lemma(const Analysis &a, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    const int pr = m.perm().inv(r);
    const std::size_t start = sink.results().size();
    for (VarId v : m.vars()) {
        const int row = m.perm().inv(v.a);
        const Components &c = a.comp(v);
        const std::string inst = to_string(v);
        if (row < pr) {
            sink.truth("lem.rowop.above", inst, c.R1.is_zero() && c.R2.is_zero(), "R1 or R2 nonzero above the row of 1_r");
            sink.equal("lem.rowop.above", inst + " u=RL", a.map.images.at(v), c.RL);
            continue;
        }
        sink.equal("lem.rowop.below", inst, a.map.images.at(v) - a.n_at(row, r) * wu_at(a, row - 1, v.b), c.RL + c.R1);
        if (m.is_var({row - 1, v.b})) {
            VarId above = m.at(row - 1, v.b).v;
            sink.equal("lem.rowop.R2", inst, c.R2, a.map.images.at(above) * a.n_at(row, r));
        }
    }
    mark_vacuous(sink, start, {"lem.rowop.above", "lem.rowop.below", "lem.rowop.R2"});
}

void verify_p1_expansion(const Analysis &a, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    const std::size_t start = sink.results().size();
    for (VarId v : m.vars()) {
        const SelectorSets s = selector_sets(m, v);
        const int j = v.b;
        const std::string inst = to_string(v);

        guarded(sink, "lem.P1_expand", inst, [&] {
            MultiPoly sum;
            for (CellRef o : s.O1) {
                const int delta = o.row;
                MultiPoly up = a.engine.path_sum_P(with(rows_up_to(s.O, delta - 1), {delta - 1, r}),
                                                   rows_up_to(s.D, delta - 1));
                MultiPoly down = a.engine.path_sum_PL(rows_from(s.O, delta + 1), rows_from(s.D, delta));
                sum += up * MultiPoly::var(m.at(o).v) * down;
            }
            sink.equal("lem.P1_expand", inst + " s=" + str(int(s.O1.size())), RatFunc(a.engine.partition_sums(v).P1),
                       RatFunc(sum));
        });

        for (CellRef one : s.D1) {
            const int ap = one.row;
            const std::string ui = inst + " a'=" + str(ap);
            const CellKind &above = m.at(ap - 1, j);
            const CellSet d_up = rows_up_to(s.D, ap - 1);
            const CellSet o_up = with(rows_up_to(s.O, ap - 1), {ap - 1, r});
            if (above.kind == CellKind::Var) {
                SelectorSets t = selector_sets(m, above.v);
                sink.truth("lem.up_sets", ui + " D", d_up == t.D, str(d_up) + " vs " + str(t.D));
                sink.truth("lem.up_sets", ui + " O", o_up == t.O, str(o_up) + " vs " + str(t.O));
            } else if (above.kind == CellKind::One) {
                sink.truth("lem.up_sets", ui + " D", d_up == CellSet{m.one_pos(j)}, str(d_up));
                sink.truth("lem.up_sets", ui + " O", o_up == CellSet{{m.perm().inv(j), r}}, str(o_up));
            } else {
                sink.truth("lem.up_sets", ui, false, "cell above the D1 row is zero");
            }
        }

        guarded(sink, "cor.R1_formula", inst, [&] {
            RatFunc sum;
            for (CellRef o : s.O1) {
                const int delta = o.row;
                const CellSet d_down = rows_from(s.D, delta);
                RatFunc pl(a.engine.path_sum_PL(rows_from(s.O, delta + 1), d_down));
                sum += sgn(d_down.size()) * RatFunc::var(m.at(o).v) * wu_at(a, delta - 1, j) * pl / rho_product(m, d_down);
            }
            sink.equal("cor.R1_formula", inst, a.comp(v).R1, sum);
        });
    }
    mark_vacuous(sink, start, {"lem.P1_expand", "lem.up_sets", "cor.R1_formula"});
}

void verify_pl_expansions(const Analysis &a, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    const std::size_t start = sink.results().size();
    for (int d = 1; d <= r; ++d) {
        const int pd = m.perm()(d);
        std::vector<CellRef> cand;
        for (int c = pd + 1; c <= r; ++c)
            if (m.perm().inv(c) < d)
                cand.push_back(m.one_pos(c));
        for (unsigned mask = 1; mask < (1u << cand.size()); ++mask) {
            std::vector<CellRef> by_col;
            for (std::size_t t = 0; t < cand.size(); ++t)
                if (mask >> t & 1)
                    by_col.push_back(cand[t]);
            CellSet D = by_col;
            std::sort(D.begin(), D.end());
            const std::size_t h = std::min_element(by_col.begin(), by_col.end()) - by_col.begin();
            CellSet O = set_union(gamma_of(m, D), {gamma(m, pd)});
            O = without(O, gamma(m, by_col[h].col));
            const std::string inst = "d=" + str(d) + " D=" + str(D);

            if (h > 0) {
                guarded(sink, "lem.PL_first_step", inst, [&] {
                    const CellRef l1 = by_col[0];
                    const int row1 = l1.row;
                    MultiPoly rhs = a.engine.path_sum_PL(rows_from(O, row1 + 1), rows_from(D, row1)) *
                                        a.engine.path_sum_PL(rows_up_to(O, row1), rows_up_to(D, row1 - 1)) -
                                    MultiPoly(rho(m, l1.col)) *
                                        a.engine.path_sum_PL(without(O, gamma(m, l1.col)), without(D, l1));
                    sink.equal("lem.PL_first_step", inst, RatFunc(a.engine.path_sum_PL(O, D)), RatFunc(rhs));
                });
            }

            guarded(sink, "cor.PL_alt_expansion", inst, [&] {
                MultiPoly sum;
                CellSet G, L;
                Monomial rho_prefix;
                for (std::size_t q = 0; q <= h; ++q) {
                    const int rowq = by_col[q].row;
                    MultiPoly term = MultiPoly(rho_prefix) *
                                     a.engine.path_sum_PL(set_minus(rows_from(O, rowq + 1), G),
                                                          set_minus(rows_from(D, rowq), L)) *
                                     star_or_PL(a, set_minus(rows_up_to(O, rowq), G),
                                                set_minus(rows_up_to(D, rowq - 1), L));
                    sum += q % 2 ? -term : term;
                    G = with(G, gamma(m, by_col[q].col));
                    L = with(L, by_col[q]);
                    rho_prefix *= rho(m, by_col[q].col);
                }
                sink.equal("cor.PL_alt_expansion", inst, RatFunc(a.engine.path_sum_PL(O, D)), RatFunc(sum));
            });
        }
    }
    mark_vacuous(sink, start, {"lem.PL_first_step", "cor.PL_alt_expansion"});
}

void verify_pl_tilde(const Analysis &a, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    const std::size_t start = sink.results().size();
    if (r >= 3) {
        const int pr = m.perm().inv(r);
        WTilde t = reduce_w_tilde(m);
        PathEngine tilde(t.m_tilde);
        for (VarId v : m.vars()) {
            if (v.b == r)
                continue;
            const SelectorSets s = selector_sets(m, v);
            Monomial prod;
            for (CellRef o : rows_from(s.O, pr + 1))
                prod *= Monomial::var(m.at(o).v);
            const SelectorSets st = selector_sets(t.m_tilde, v);
            const std::string inst = to_string(v);
            sink.equal("lem.PL_tilde", inst, RatFunc(a.engine.partition_sums(v).PL),
                       RatFunc(MultiPoly(prod) * tilde.path_sum_P(st.O, st.D)));
            const std::size_t nw = a.engine.partition_families(v).PL.size();
            const std::size_t nt = tilde.disjoint_families(st.O, st.D).size();
            sink.truth("lem.PL_tilde.count", inst, nw == nt, str(int(nw)) + " vs " + str(int(nt)));
        }
    }
    r_components_tilde_check(a, sink);
    mark_vacuous(sink, start, {"lem.PL_tilde", "lem.PL_tilde.count", "cor.RL_tilde"});
}

void verify_column_lemmas(const Analysis &a, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    const Permutation &pi = m.perm();
    const int r = m.r();
    const int pr = pi.inv(r);
    const std::size_t start = sink.results().size();
    QCache Q(a);

    for (int j = 2; j <= r - 2; ++j) {
        if (!m.has_var({pi(r), j}))
            continue;
        const SelectorSets base = selector_sets(m, {pi(r), j});
        const std::string ji = "j=" + str(j);

        for (int d = 1; d <= r; ++d) {
            if (!m.is_var({d, j}))
                continue;
            const SelectorSets sd = selector_sets(m, m.at(d, j).v);
            const std::string inst = ji + " d=" + str(d);
            const CellSet up = rows_up_to(base.D, d);
            sink.truth("lem.npdj.D_up", inst, up == sd.D, str(up) + " vs " + str(sd.D));
            const CellSet d0 = d0_set(m, j, pi(d));
            sink.truth("lem.npdj.D1", inst, sd.D1 == d0, str(sd.D1) + " vs " + str(d0));
        }

        for (int d = std::max(pi.inv(j), pr) + 1; d <= r; ++d) {
            const int pd = pi(d);
            const std::string inst = ji + " d=" + str(d);

            if (pd < j) {
                guarded(sink, "lem.type2.Q_is_R1", inst, [&] {
                    const VarId v = m.at(d, j).v;
                    sink.equal("lem.type2.Q_is_R1", inst, Q(j, pd), a.comp(v).R1);
                    const SelectorSets sd = selector_sets(m, v);
                    for (CellRef one : sd.D1) {
                        IndexedSets ix = indexed_sets(m, j, pd, one.row);
                        const std::string bi = inst + " beta=" + str(one.row);
                        sink.truth("lem.type2.sets", bi + " D", rows_from(sd.D, one.row) == ix.D2_jlk,
                                   str(rows_from(sd.D, one.row)) + " vs " + str(ix.D2_jlk));
                        sink.truth("lem.type2.sets", bi + " O", rows_from(sd.O, one.row + 1) == ix.O2_jlk,
                                   str(rows_from(sd.O, one.row + 1)) + " vs " + str(ix.O2_jlk));
                    }
                });
            }

            const CellSet d0 = d0_set(m, j, pd);
            if (d0.empty())
                continue;
            const bool own = set_contains(d0, m.one_pos(pd));

            guarded(sink, "lem.Q_sum", inst, [&] {
                RatFunc lhs = Q(j, pd);
                for (int l = std::max(j, pd) + 1; l <= r - 1; ++l)
                    if (m.nonzero({d, l}))
                        lhs += Q(j, l) * a.comp(m.at(d, l).v).RL;
                RatFunc rhs = own ? a.n_at(d, r) * wu_at(a, d - 1, j) : RatFunc();
                sink.equal("lem.Q_sum", inst + (own ? " own" : ""), lhs, rhs);
            });

            guarded(sink, "lem.D0_index", inst, [&] {
                bool ok = m.has_var({pd, r});
                std::string why = ok ? "" : "n_{π(d),r} not free";
                for (std::size_t t = 0; t < d0.size(); ++t) {
                    const int beta = d0[t].row;
                    if (!m.is_var({beta, r})) {
                        ok = false;
                        why = "n_{π(β),r} not free for β=" + str(beta);
                    }
                    if (beta == d && (t + 1 != d0.size() || !indexed_sets(m, j, pd, beta).D2_jlk.empty())) {
                        ok = false;
                        why = "β=d is not last or has nonempty D2";
                    }
                    if (beta != d) {
                        CellSet d2 = indexed_sets(m, j, pd, beta).D2_jlk;
                        if (d2.empty() || d2.front() != d0[t]) {
                            ok = false;
                            why = "1_{π(β)} is not the top of D2 for β=" + str(beta);
                        }
                    }
                }
                sink.truth("lem.D0_index", inst, ok, why);
            });

            guarded(sink, "lem.A_equals_B", inst, [&] {
                std::set<std::pair<int, int>> A, B;
                for (CellRef one : d0) {
                    if (one.row == d)
                        continue;
                    std::vector<CellRef> lam = indexed_sets(m, j, pd, one.row).D2_jlk;
                    std::sort(lam.begin(), lam.end(), [](CellRef x, CellRef y) { return x.col < y.col; });
                    for (CellRef c : lam) {
                        A.insert({one.row, c.col});
                        if (c == one)
                            break;
                    }
                }
                for (int b2 = std::max(j, pd) + 1; b2 <= r - 1; ++b2) {
                    if (!m.nonzero({d, b2}))
                        continue;
                    for (CellRef one : d0_set(m, j, b2))
                        B.insert({one.row, b2});
                }
                sink.truth("lem.A_equals_B", inst, A == B,
                           str(int(A.size())) + " pairs in A, " + str(int(B.size())) + " in B");
            });
        }

        for (int l = 1; l <= r; ++l) {
            if (!m.has_var({l, r}))
                continue;
            const CellSet ne = northeast_of(m, base.D, l);
            for (CellRef one : ne) {
                const int k = one.row;
                if (one.col == j || one.col == l || !m.is_var({k, r}))
                    continue;
                const std::string inst = ji + " l=" + str(l) + " k=" + str(k);
                guarded(sink, "lem.D2_expansion", inst, [&] {
                    IndexedSets ix = indexed_sets(m, j, l, k);
                    sink.truth("lem.D2_top", inst, !ix.D2_jlk.empty() && ix.D2_jlk.front() == one, str(ix.D2_jlk));
                    RatFunc lhs = sgn(ix.eps2) * RatFunc(a.engine.path_sum_PL(ix.O2_jlk, ix.D2_jlk)) /
                                  rho_product(m, ix.D2_jlk);
                    std::vector<CellRef> lam = ix.D2_jlk;
                    std::sort(lam.begin(), lam.end(), [](CellRef x, CellRef y) { return x.col < y.col; });
                    RatFunc rhs;
                    for (CellRef c : lam) {
                        IndexedSets iq = indexed_sets(m, j, c.col, k);
                        rhs -= sgn(iq.eps2) * RatFunc(a.engine.path_sum_PL_star(iq.O2_jlk, iq.D2_jlk)) /
                               rho_product(m, iq.D2_jlk) * a.comp({l, c.col}).RL;
                        if (c == one)
                            break;
                    }
                    sink.equal("lem.D2_expansion", inst, lhs, rhs);
                });
            }
        }
    }

    const int i_max = std::min(r - 1, r - pi(r));
    if (i_max >= 1 && ladder_in_scope(m, i_max)) {
        const int top = r - i_max + 1;
        for (int j = top; j <= r - 2; ++j)
            for (int d = top - 1; d <= r; ++d) {
                if (d == pr)
                    continue;
                int type = 1;
                if (d > std::max(pi.inv(j), pr)) {
                    if (pi(d) < j)
                        type = 2;
                    else if (pi(d - 1) <= j)
                        type = 3;
                    else
                        type = 4;
                }
                const std::string inst = "j=" + str(j) + " d=" + str(d) + " type=" + str(type);
                guarded(sink, "lem.colop.role", inst, [&] {
                    RatFunc lhs = x_prime_entry(a, d, j);
                    for (int l = j + 1; l <= r - 1; ++l)
                        lhs += Q(j, l) * x_L_entry(a, d, l);
                    sink.equal("lem.colop.role", inst, lhs, x_L_entry(a, d, j));
                });
            }
    }

    mark_vacuous(sink, start,
                 {"lem.npdj.D_up", "lem.npdj.D1", "lem.type2.Q_is_R1", "lem.type2.sets", "lem.Q_sum", "lem.D0_index",
                  "lem.A_equals_B", "lem.D2_top", "lem.D2_expansion", "lem.colop.role"});
}

void verify_all_lemmas(const Analysis &a, CheckSink &sink)
{
    verify_rowop_lemma(a, sink);
    verify_p1_expansion(a, sink);
    verify_pl_expansions(a, sink);
    verify_pl_tilde(a, sink);
    verify_column_lemmas(a, sink);
}

} // namespace schubert
