#include "schubert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "schubert/ladder.hpp"
#include "schubert/lemmas.hpp"

namespace schubert {

namespace {

std::string str(int x) { return std::to_string(x); }

RatFunc sign(long e) { return RatFunc(e % 2 ? -1L : 1L); }

bool is_prop_id(const std::string &id)
{
    return id.rfind("prop.", 0) == 0 || id == "cor.rowop" || id == "lem.colop.last_column" || id == "lem.colop.q_zero";
}

Family family_of(const std::string &id)
{
    if (id.rfind("thm.", 0) == 0 || id.rfind("map.", 0) == 0 || id.rfind("paths.", 0) == 0)
        return Family::Theorem;
    if (id.rfind("cross.", 0) == 0)
        return Family::Cross;
    if (is_prop_id(id))
        return Family::Propositions;
    return Family::Lemmas;
}

// Π_{(i,j) ∈ V} n_{i,j}^{j−i−1}
Monomial jacobian_target(const PatternMatrix &m)
{
    Monomial out;
    for (VarId v : m.vars())
        if (v.b - v.a - 1 > 0)
            out *= Monomial::var(v, v.b - v.a - 1);
    return out;
}

Rational evaluate(const Monomial &mono, const EvalPoint &p)
{
    Rational out = 1;
    for (auto [v, e] : mono.factors())
        for (int k = 0; k < e; ++k)
            out *= p.at(v);
    return out;
}

void check_superdiagonal(const Analysis &a, const Udl<RatFunc> &udl, CheckSink &sink)
{
    const int r = a.r();
    std::set<VarId> seen;
    bool disjoint = true;
    RatFunc total;
    for (int i = 1; i < r; ++i) {
        const RatFunc &x = udl.n(i - 1, i);
        total += x;
        std::vector<LaurentTerm> terms;
        bool ok = laurent_terms(x, terms);
        std::string why = ok ? "" : "denominator is not a monomial";
        for (const LaurentTerm &t : terms) {
            auto f = t.down.factors();
            if (t.c != 1 || !t.up.is_one() || f.size() != 1 || f[0].second != 1) {
                ok = false;
                why = "term is not 1/n";
                continue;
            }
            if (!seen.insert(f[0].first).second)
                disjoint = false;
        }
        sink.truth("thm.superdiagonal.reciprocal", "i=" + str(i), ok, why + " in " + x.to_string());
    }
    const std::set<VarId> all(a.m.vars().begin(), a.m.vars().end());
    sink.truth("thm.superdiagonal.partition", "-", disjoint && seen == all,
               disjoint ? "union differs from the free variables" : "a variable appears in two entries");
    RatFunc expected;
    for (VarId v : a.m.vars())
        expected += RatFunc::var(v).inverse();
    sink.equal("thm.superdiagonal.sum", "-", total, expected);
}

void check_diagonal(const Analysis &a, const Udl<RatFunc> &udl, CheckSink &sink)
{
    const int r = a.r();
    const Permutation &pi = a.m.perm();
    for (int i = 1; i <= r; ++i) {
        RatFunc expected = sign(i + pi.inv(i));
        for (VarId v : a.m.vars()) {
            if (v.b == i)
                expected *= -RatFunc::var(v);
            if (v.a == i)
                expected /= RatFunc::var(v);
        }
        sink.equal("thm.diagonal", "i=" + str(i), udl.h(i - 1, i - 1), expected);

        const RatFunc upper = determinant(RFMatrix(a.wu.bottomRightCorner(r - i + 1, r - i + 1)));
        const RatFunc lower = i < r ? determinant(RFMatrix(a.wu.bottomRightCorner(r - i, r - i))) : RatFunc(1L);
        if (lower.is_zero())
            sink.truth("thm.diagonal.minor_ratio", "i=" + str(i), false, "trailing minor vanishes");
        else
            sink.equal("thm.diagonal.minor_ratio", "i=" + str(i), udl.h(i - 1, i - 1), upper / lower);
    }
}

void check_jacobian(const Analysis &a, const VerifyOptions &opt, CheckSink &sink)
{
    const std::vector<VarId> &vars = a.m.vars();
    if (vars.empty()) {
        sink.out_of_scope("thm.jacobian", "-", "no free variables");
        sink.out_of_scope("thm.jacobian.nonvanishing", "-", "no free variables");
        return;
    }
    const Monomial target = jacobian_target(a.m);
    if (a.r() <= opt.symbolic_jacobian_max_r) {
        const RatFunc jac = jacobian_det(a.map.images, vars);
        const RatFunc t = RatFunc::monomial(target);
        const bool plus = jac == t;
        sink.equal("thm.jacobian", "symbolic", plus ? jac : -jac, t);
        sink.truth("thm.jacobian.nonvanishing", "symbolic", !jac.is_zero() && jac.is_laurent_monomial(),
                   jac.to_string());
        return;
    }
    const RFMatrix jm = jacobian_matrix(a.map.images, vars);
    std::mt19937_64 rng = permutation_rng(opt.seed, a.m.perm());
    int fixed_sign = 0;
    for (int k = 0; k < opt.jacobian_points; ++k) {
        const EvalPoint p = random_eval_point(vars, rng);
        const Rational det = determinant(evaluate(jm, p));
        const Rational t = evaluate(target, p);
        const std::string inst = "point=" + str(k);
        sink.truth("thm.jacobian.nonvanishing", inst, det != 0, "determinant vanishes");
        if (fixed_sign == 0)
            fixed_sign = det == t ? 1 : -1;
        sink.equal("thm.jacobian", inst, RatFunc(Rational(fixed_sign * det)), RatFunc(t));
    }
}

void check_map_shape(const Analysis &a, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    for (VarId v : m.vars()) {
        const Components &c = a.comp(v);
        const RatFunc &u = a.map.images.at(v);
        sink.equal("map.partition", to_string(v), u, c.RL + c.R1 + c.R2);
        const SelectorSets s = selector_sets(m, v);
        const Monomial bound = rho_of(m, s.D);
        const bool ok = u.has_monomial_den() && (u * RatFunc::monomial(bound)).den().is_constant();
        sink.truth("map.denominator", to_string(v), ok, "denominator of " + u.to_string() + " does not divide " + bound.to_string());
    }
}

std::vector<LaurentTerm> magnitudes(const RatFunc &f, bool &ok)
{
    std::vector<LaurentTerm> t;
    ok = laurent_terms(f, t);
    for (LaurentTerm &x : t)
        x.c = abs(x.c);
    std::sort(t.begin(), t.end(), [](const LaurentTerm &x, const LaurentTerm &y) {
        if (x.up != y.up)
            return x.up < y.up;
        if (x.down != y.down)
            return x.down < y.down;
        return x.c < y.c;
    });
    return t;
}

// Witnesses carry the options needed to rerun them.
std::vector<CheckResult> with_options(std::vector<CheckResult> results, const VerifyOptions &opt)
{
    for (CheckResult &c : results)
        if (c.witness) {
            nlohmann::json w = nlohmann::json::parse(*c.witness);
            w["seed"] = opt.seed;
            if (!opt.fault.empty())
                w["fault"] = opt.fault;
            c.witness = w.dump();
        }
    return results;
}

} // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::Theorem:
        return "theorem";
    case Family::Propositions:
        return "propositions";
    case Family::Lemmas:
        return "lemmas";
    case Family::Cross:
        return "cross";
    }
    return "unknown";
}

std::optional<Family> parse_family(const std::string &s)
{
    for (Family f : kAllFamilies)
        if (to_string(f) == s)
            return f;
    return std::nullopt;
}

std::mt19937_64 permutation_rng(std::uint64_t seed, const Permutation &p)
{
    std::vector<std::uint32_t> words = {std::uint32_t(seed), std::uint32_t(seed >> 32)};
    for (int x : p.images())
        words.push_back(std::uint32_t(x));
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

EvalPoint random_eval_point(const std::vector<VarId> &vars, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(1, 10000), den(1, 10000), coin(0, 1);
    EvalPoint p;
    for (VarId v : vars) {
        Rational x(num(rng) * (coin(rng) ? 1 : -1), den(rng));
        x.canonicalize();
        p.set(v, x);
    }
    return p;
}

std::vector<CheckResult> check_theorem(const Analysis &a, const VerifyOptions &opt)
{
    CheckSink sink(a.m.perm(), opt.fault);
    Udl<RatFunc> udl;
    try {
        udl = udl_decompose(a.wu);
        sink.truth("thm.open_cell", "-", true);
    } catch (const NotInOpenCell &e) {
        sink.truth("thm.open_cell", "-", false, e.what());
        return sink.take();
    }
    check_superdiagonal(a, udl, sink);
    check_diagonal(a, udl, sink);
    check_jacobian(a, opt, sink);
    check_map_shape(a, sink);
    sink.truth("paths.no_divergence", "-", a.engine.divergences() == 0,
               str(int(a.engine.divergences())) + " steps with two nearest cells");
    return sink.take();
}

std::vector<CheckResult> check_propositions(const Analysis &a, const VerifyOptions &opt)
{
    CheckSink sink(a.m.perm(), opt.fault);
    const int r = a.r();
    for (int i = 1; i <= r - 1; ++i) {
        if (!ladder_in_scope(a.m, i)) {
            sink.out_of_scope("prop.ladder", "i=" + str(i), "block of size " + str(i) + " contains the 1 of the bottom row");
            continue;
        }
        try {
            verify_rowcolop(a, block_ladder(a, i), sink);
        } catch (const std::exception &e) {
            sink.truth("prop.ladder", "i=" + str(i), false, e.what());
        }
    }
    if (r < 2)
        sink.out_of_scope("prop.ladder", "-", "no block sizes");
    return sink.take();
}

std::vector<CheckResult> check_lemmas(const Analysis &a, const VerifyOptions &opt)
{
    CheckSink sink(a.m.perm(), opt.fault);
    try {
        verify_all_lemmas(a, sink);
    } catch (const std::exception &e) {
        sink.truth("lem.harness", "-", false, e.what());
    }
    return sink.take();
}

std::vector<CheckResult> check_cross_algorithm(const Analysis &a, const VerifyOptions &opt)
{
    CheckSink sink(a.m.perm(), opt.fault);
    DetsimpResult d;
    try {
        d = r_detsimp(a.m);
    } catch (const DetsimpError &e) {
        sink.truth("cross.detsimp", "-", false, e.what());
        return sink.take();
    }
    sink.truth("cross.detsimp", "-", true);
    for (VarId v : a.m.vars()) {
        const RatFunc &u = a.map.images.at(v);
        bool ok_u = false, ok_y = false;
        auto mu = magnitudes(u, ok_u);
        auto my = magnitudes(d.y.at(v), ok_y);
        bool same = ok_u && ok_y && mu.size() == my.size();
        for (std::size_t k = 0; same && k < mu.size(); ++k)
            same = mu[k].c == my[k].c && mu[k].up == my[k].up && mu[k].down == my[k].down;
        sink.truth("cross.magnitude", to_string(v), same, d.y.at(v).to_string() + " vs " + u.to_string());
        sink.equal("cross.exact", to_string(v), d.u.images.at(v), u);
    }
    return sink.take();
}

std::vector<CheckResult> verify_permutation(const Permutation &p, const VerifyOptions &opt,
                                            const std::vector<Family> &families)
{
    Analysis a(p);
    std::vector<CheckResult> out;
    for (Family f : families) {
        std::vector<CheckResult> part;
        switch (f) {
        case Family::Theorem:
            part = check_theorem(a, opt);
            break;
        case Family::Propositions:
            part = check_propositions(a, opt);
            break;
        case Family::Lemmas:
            part = check_lemmas(a, opt);
            break;
        case Family::Cross:
            part = check_cross_algorithm(a, opt);
            break;
        }
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return with_options(std::move(out), opt);
}

std::vector<Permutation> sample_permutations(int r, std::size_t n, std::uint64_t seed)
{
    std::size_t count = 1;
    for (int k = 2; k <= r && count <= n; ++k)
        count *= k;
    if (n >= count)
        return all_permutations(r);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + std::uint64_t(r));
    std::set<Permutation> picked;
    std::vector<int> img(r);
    while (picked.size() < n) {
        for (int k = 0; k < r; ++k)
            img[k] = k + 1;
        std::shuffle(img.begin(), img.end(), rng);
        picked.insert(Permutation(img));
    }
    return {picked.begin(), picked.end()};
}

SweepReport summarize(int r, const std::string &mode, std::uint64_t seed, std::size_t permutations,
                      std::vector<CheckResult> results, double seconds)
{
    std::stable_sort(results.begin(), results.end(), [](const CheckResult &x, const CheckResult &y) {
        if (x.perm != y.perm)
            return x.perm < y.perm;
        return x.check_id < y.check_id;
    });
    SweepReport rep;
    rep.r = r;
    rep.mode = mode;
    rep.seed = seed;
    rep.permutations = permutations;
    rep.seconds = seconds;
    for (CheckResult &c : results) {
        Tally &t = rep.by_check[c.check_id];
        long Tally::*field = c.status == Status::Pass   ? &Tally::pass
                             : c.status == Status::Fail ? &Tally::fail
                                                        : &Tally::out_of_scope;
        ++(t.*field);
        ++(rep.totals.*field);
        if (c.status == Status::Fail)
            rep.failures.push_back(std::move(c));
    }
    return rep;
}

SweepReport sweep(const SweepOptions &opt)
{
    if (opt.r < 2 || opt.r > kMaxRank)
        throw std::invalid_argument("r must be between 2 and " + str(kMaxRank));
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Permutation> perms =
        opt.sample ? sample_permutations(opt.r, *opt.sample, opt.verify.seed) : all_permutations(opt.r);

    std::vector<std::vector<CheckResult>> per(perms.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < perms.size();)
            per[k] = verify_permutation(perms[k], opt.verify, opt.families);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, unsigned(perms.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread &t : pool)
        t.join();

    std::vector<CheckResult> all;
    for (auto &v : per)
        all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string mode = opt.sample ? "sample(" + std::to_string(*opt.sample) + ")" : "full";
    return summarize(opt.r, mode, opt.verify.seed, perms.size(), std::move(all), seconds);
}

std::vector<CheckResult> replay(const std::string &witness_json, const VerifyOptions &opt)
{
    const nlohmann::json w = nlohmann::json::parse(witness_json);
    const std::string id = w.at("check_id").get<std::string>();
    const std::string instance = w.at("instance").get<std::string>();
    VerifyOptions o = opt;
    if (w.contains("seed"))
        o.seed = w.at("seed").get<std::uint64_t>();
    if (w.contains("fault"))
        o.fault = w.at("fault").get<std::string>();
    const Permutation p(w.at("perm").get<std::vector<int>>());
    std::vector<CheckResult> out;
    for (CheckResult &c : verify_permutation(p, o, {family_of(id)}))
        if (c.check_id == id && c.instance == instance)
            out.push_back(std::move(c));
    return out;
}

} // namespace schubert
