#include "schubert/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace schubert {

namespace {

const std::string kDot = "·";

std::string trim(const std::string &s)
{
    std::size_t b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, const std::string &sep)
{
    std::vector<std::string> out;
    std::size_t start = 0, at;
    while ((at = s.find(sep, start)) != std::string::npos) {
        out.push_back(s.substr(start, at - start));
        start = at + sep.size();
    }
    out.push_back(s.substr(start));
    return out;
}

bool all_digits(const std::string &s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Term parse_term(std::string t)
{
    t = trim(t);
    Integer c = 1;
    if (!t.empty() && t[0] == '-') {
        c = -1;
        t = trim(t.substr(1));
    }
    Monomial m;
    bool first = true;
    for (const std::string &f : split(t, kDot)) {
        if (first && all_digits(f)) {
            c *= Integer(f);
            first = false;
            continue;
        }
        first = false;
        const std::size_t caret = f.find('^');
        const auto v = parse_var(f.substr(0, caret));
        if (!v)
            throw ParseError("bad factor '" + f + "'");
        int e = 1;
        if (caret != std::string::npos) {
            const std::string k = f.substr(caret + 1);
            if (!all_digits(k))
                throw ParseError("bad exponent '" + k + "'");
            e = std::stoi(k);
        }
        m *= Monomial::var(*v, e);
    }
    return {m, c};
}

std::string strip_parens(std::string s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    return s;
}

std::string latex_poly(const MultiPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        const Term &t = p.terms()[i];
        const bool neg = t.c < 0;
        const Integer mag = abs(t.c);
        s += i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (t.m.is_one()) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1)
            s += mag.get_str();
        for (auto [v, e] : t.m.factors()) {
            s += "n_{" + std::to_string(v.a) + "," + std::to_string(v.b) + "}";
            if (e > 1)
                s += "^{" + std::to_string(e) + "}";
        }
    }
    return s;
}

Json tally_json(const Tally &t) { return {{"pass", t.pass}, {"fail", t.fail}, {"out_of_scope", t.out_of_scope}}; }

} // namespace

MultiPoly parse_poly(const std::string &text)
{
    std::string s = strip_parens(text);
    if (s.empty())
        throw ParseError("empty polynomial");
    std::vector<Term> terms;
    std::string spaced;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && s[i] == ' ' && s[i + 1] == '-' && s[i + 2] == ' ') {
            spaced += " + -";
            i += 2;
        } else {
            spaced += s[i];
        }
    }
    for (const std::string &t : split(spaced, " + "))
        terms.push_back(parse_term(t));
    return MultiPoly::from_terms(std::move(terms));
}

RatFunc parse_ratfunc(const std::string &text)
{
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (depth == 0 && text.compare(i, 3, " / ") == 0)
            return RatFunc(parse_poly(text.substr(0, i)), parse_poly(text.substr(i + 3)));
    }
    return RatFunc(parse_poly(text));
}

Json map_to_json(const BirationalMap &map)
{
    Json vars = Json::array();
    for (const auto &[v, u] : map.images) {
        Json e = {{"id", to_string(v)}, {"u", u.to_string()}};
        auto it = map.components.find(v);
        if (it != map.components.end()) {
            e["RL"] = it->second.RL.to_string();
            e["R1"] = it->second.R1.to_string();
            e["R2"] = it->second.R2.to_string();
        }
        vars.push_back(std::move(e));
    }
    Json eps = Json::object();
    for (const auto &[v, e] : map.eps)
        eps[to_string(v)] = e;
    return {{"perm", map.perm.to_string()}, {"vars", vars}, {"algorithm", to_string(map.algorithm)}, {"eps", eps}};
}

BirationalMap map_from_json(const Json &j)
{
    BirationalMap out;
    out.perm = Permutation::parse(j.at("perm").get<std::string>());
    const std::string alg = j.at("algorithm").get<std::string>();
    if (alg == to_string(Algorithm::Paths))
        out.algorithm = Algorithm::Paths;
    else if (alg == to_string(Algorithm::Detsimp))
        out.algorithm = Algorithm::Detsimp;
    else
        throw ParseError("unknown algorithm '" + alg + "'");
    for (const Json &e : j.at("vars")) {
        const auto v = parse_var(e.at("id").get<std::string>());
        if (!v)
            throw ParseError("bad variable id " + e.at("id").dump());
        out.images[*v] = parse_ratfunc(e.at("u").get<std::string>());
        if (e.contains("RL"))
            out.components[*v] = {parse_ratfunc(e.at("RL").get<std::string>()), parse_ratfunc(e.at("R1").get<std::string>()),
                                  parse_ratfunc(e.at("R2").get<std::string>())};
    }
    for (const auto &[k, e] : j.at("eps").items()) {
        const auto v = parse_var(k);
        if (!v)
            throw ParseError("bad variable id '" + k + "'");
        out.eps[*v] = e.get<int>();
    }
    return out;
}

bool same_map(const BirationalMap &x, const BirationalMap &y)
{
    if (!(x.perm == y.perm) || x.algorithm != y.algorithm || x.eps != y.eps || x.images.size() != y.images.size() ||
        x.components.size() != y.components.size())
        return false;
    for (const auto &[v, u] : x.images) {
        auto it = y.images.find(v);
        if (it == y.images.end() || !(it->second == u))
            return false;
    }
    for (const auto &[v, c] : x.components) {
        auto it = y.components.find(v);
        if (it == y.components.end() || !(it->second.RL == c.RL) || !(it->second.R1 == c.R1) || !(it->second.R2 == c.R2))
            return false;
    }
    return true;
}

Json matrix_to_json(const RFMatrix &m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Decomposition decompose(const PatternMatrix &m, const BirationalMap &map)
{
    Decomposition d;
    d.wu = substitute(m, map);
    d.udl = udl_decompose(d.wu);
    for (int i = 0; i + 1 < m.r(); ++i) {
        std::vector<LaurentTerm> terms;
        std::vector<VarId> block;
        if (laurent_terms(d.udl.n(i, i + 1), terms))
            for (const LaurentTerm &t : terms)
                for (auto [v, e] : t.down.factors())
                    block.push_back(v);
        d.blocks.push_back(std::move(block));
    }
    return d;
}

Json decomposition_to_json(const Decomposition &d)
{
    Json blocks = Json::array();
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        Json ids = Json::array();
        for (VarId v : d.blocks[i])
            ids.push_back(to_string(v));
        blocks.push_back({{"index", i + 2}, {"vars", ids}});
    }
    return {{"wu", matrix_to_json(d.wu)},
            {"x", matrix_to_json(d.udl.n)},
            {"h", matrix_to_json(d.udl.h)},
            {"n_minus", matrix_to_json(d.udl.n_minus)},
            {"B", blocks}};
}

Json result_to_json(const CheckResult &c)
{
    Json j = {{"check_id", c.check_id}, {"perm", c.perm.to_string()}, {"status", to_string(c.status)},
              {"instance", c.instance}};
    if (!c.reason.empty())
        j["reason"] = c.reason;
    if (c.witness)
        j["witness"] = Json::parse(*c.witness);
    return j;
}

Json results_to_json(const std::vector<CheckResult> &results)
{
    Json out = Json::array();
    for (const CheckResult &c : results)
        out.push_back(result_to_json(c));
    return out;
}

Json report_to_json(const SweepReport &rep)
{
    Json checks = Json::object();
    for (const auto &[id, t] : rep.by_check)
        checks[id] = tally_json(t);
    return {{"r", rep.r},
            {"mode", rep.mode},
            {"seed", rep.seed},
            {"permutations", rep.permutations},
            {"seconds", rep.seconds},
            {"totals", tally_json(rep.totals)},
            {"checks", checks},
            {"failures", results_to_json(rep.failures)}};
}

std::string report_text(const SweepReport &rep)
{
    std::ostringstream out;
    out << "r=" << rep.r << " mode=" << rep.mode << " seed=" << rep.seed << " permutations=" << rep.permutations
        << " time=" << std::fixed << std::setprecision(2) << rep.seconds << "s\n";
    out << std::left << std::setw(32) << "check" << std::right << std::setw(10) << "pass" << std::setw(8) << "fail"
        << std::setw(14) << "out_of_scope" << "\n";
    auto line = [&](const std::string &id, const Tally &t) {
        out << std::left << std::setw(32) << id << std::right << std::setw(10) << t.pass << std::setw(8) << t.fail
            << std::setw(14) << t.out_of_scope << "\n";
    };
    for (const auto &[id, t] : rep.by_check)
        line(id, t);
    line("total", rep.totals);
    for (const CheckResult &c : rep.failures)
        out << "FAIL " << c.check_id << " [" << c.perm.to_string() << "] " << c.instance << ": " << c.reason << "\n";
    return out.str();
}

std::string latex(const RatFunc &f)
{
    if (f.den().is_constant() && f.den().leading().c == 1)
        return latex_poly(f.num());
    return "\\frac{" + latex_poly(f.num()) + "}{" + latex_poly(f.den()) + "}";
}

std::string latex_matrix(const RFMatrix &m)
{
    std::string s = "\\left(\\begin{smallmatrix}\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j)
                s += " & ";
            if (!m(i, j).is_zero())
                s += latex(m(i, j));
        }
        s += i + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return s + "\\end{smallmatrix}\\right)";
}

} // namespace schubert
