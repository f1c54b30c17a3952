#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schubert/io.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::string perm;
    std::string algorithm = "paths";
    std::string output = "json";
    std::string out;
    std::string witness = "schubert-witness.json";
    std::string fault;
    std::vector<std::string> families;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::size_t sample = 0;
    int r = 0;
};

void emit(const Config &cfg, const std::string &text)
{
    if (cfg.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(cfg.out);
    if (!f)
        throw std::runtime_error("cannot write " + cfg.out);
    f << text << "\n";
}

void write_witnesses(const Config &cfg, const std::vector<CheckResult> &failures)
{
    std::ofstream f(cfg.witness);
    f << results_to_json(failures).dump(2) << "\n";
    std::cerr << failures.size() << " failure(s); witnesses written to " << cfg.witness << "\n";
}

std::vector<Family> families_of(const Config &cfg)
{
    if (cfg.families.empty())
        return kAllFamilies;
    std::vector<Family> out;
    for (const std::string &s : cfg.families) {
        auto f = parse_family(s);
        if (!f)
            throw CLI::ValidationError("--family", "unknown family '" + s + "'");
        out.push_back(*f);
    }
    return out;
}

std::string map_text(const BirationalMap &m)
{
    std::string s;
    for (const auto &[v, u] : m.images)
        s += to_string(v) + " -> " + u.to_string() + "\n";
    return s;
}

int cmd_map(const Config &cfg)
{
    const PatternMatrix m(Permutation::parse(cfg.perm));
    Json out = Json::object();
    std::string text, tex;
    int code = kExitPass;
    if (cfg.algorithm == "paths" || cfg.algorithm == "both") {
        const BirationalMap paths = r_paths(m);
        out["paths"] = map_to_json(paths);
        text += "[paths]\n" + map_text(paths);
        tex += latex_matrix(substitute(m, paths)) + "\n";
    }
    if (cfg.algorithm == "detsimp" || cfg.algorithm == "both") {
        const DetsimpResult d = r_detsimp(m);
        out["detsimp"] = map_to_json(d.u);
        text += "[detsimp]\n" + map_text(d.u);
        tex += latex_matrix(substitute(m, d.u)) + "\n";
        if (cfg.algorithm == "both") {
            const BirationalMap paths = r_paths(m);
            bool agree = true;
            for (const auto &[v, u] : paths.images)
                agree = agree && d.u.images.at(v) == u;
            out["agreement"] = agree ? "pass" : "fail";
            text += std::string("agreement: ") + (agree ? "pass" : "fail") + "\n";
            code = agree ? kExitPass : kExitFail;
        }
    }
    emit(cfg, cfg.output == "json" ? out.dump(2) : cfg.output == "latex" ? tex : text);
    return code;
}

int cmd_decompose(const Config &cfg)
{
    const PatternMatrix m(Permutation::parse(cfg.perm));
    const Decomposition d = decompose(m, r_paths(m));
    if (cfg.output == "json") {
        emit(cfg, decomposition_to_json(d).dump(2));
    } else if (cfg.output == "latex") {
        emit(cfg, "wu = " + latex_matrix(d.wu) + "\nx = " + latex_matrix(d.udl.n) + "\nh = " + latex_matrix(d.udl.h) +
                      "\nn_- = " + latex_matrix(d.udl.n_minus));
    } else {
        std::string s;
        for (int i = 0; i + 1 < m.r(); ++i) {
            s += "x[" + std::to_string(i + 1) + "," + std::to_string(i + 2) + "] = " + d.udl.n(i, i + 1).to_string() + "\n";
        }
        for (int i = 0; i < m.r(); ++i)
            s += "h[" + std::to_string(i + 1) + "] = " + d.udl.h(i, i).to_string() + "\n";
        emit(cfg, s);
    }
    return kExitPass;
}

int finish(const Config &cfg, const SweepReport &rep)
{
    emit(cfg, cfg.output == "json" ? report_to_json(rep).dump(2) : report_text(rep));
    if (!rep.ok()) {
        write_witnesses(cfg, rep.failures);
        return kExitFail;
    }
    return kExitPass;
}

int cmd_verify(const Config &cfg)
{
    const Permutation p = Permutation::parse(cfg.perm);
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.fault = cfg.fault;
    const auto start = std::chrono::steady_clock::now();
    auto results = verify_permutation(p, opt, families_of(cfg));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return finish(cfg, summarize(p.r(), "single(" + p.to_string() + ")", cfg.seed, 1, std::move(results), secs));
}

int cmd_sweep(const Config &cfg)
{
    SweepOptions opt;
    opt.r = cfg.r;
    opt.jobs = cfg.jobs;
    opt.verify.seed = cfg.seed;
    opt.verify.fault = cfg.fault;
    opt.families = families_of(cfg);
    if (cfg.sample > 0)
        opt.sample = cfg.sample;
    return finish(cfg, sweep(opt));
}

int cmd_replay(const Config &cfg)
{
    std::ifstream f(cfg.perm);
    if (!f)
        throw CLI::ValidationError("witness", "cannot read " + cfg.perm);
    Json doc = Json::parse(f);
    if (!doc.is_array())
        doc = Json::array({doc});
    int code = kExitPass;
    Json out = Json::array();
    for (const Json &entry : doc) {
        const Json &w = entry.contains("witness") ? entry.at("witness") : entry;
        auto results = replay(w.dump());
        for (const CheckResult &c : results)
            if (c.status == Status::Fail)
                code = kExitFail;
        out.push_back(results_to_json(results));
    }
    emit(cfg, out.dump(2));
    return code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Birational maps on Schubert cells: compute, decompose and verify"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "text", "latex"}));
        sub->add_option("--out", cfg.out, "Write output to this path instead of stdout");
    };
    auto add_verify = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "Seed for random evaluation points")->capture_default_str();
        sub->add_option("--family", cfg.families, "Restrict to theorem, propositions, lemmas or cross");
        sub->add_option("--witness", cfg.witness, "Where failure witnesses are written")->capture_default_str();
        sub->add_option("--fault", cfg.fault, "Perturb every comparison of this check id (exercises the failure path)");
    };

    CLI::App *map = app.add_subcommand("map", "Compute u = R(n) for a permutation");
    map->add_option("perm", cfg.perm, "One-line permutation, space separated, e.g. \"2 4 3 1\"")->required();
    map->add_option("--algorithm", cfg.algorithm, "paths, detsimp or both")
        ->check(CLI::IsMember({"paths", "detsimp", "both"}))
        ->capture_default_str();
    add_common(map);

    CLI::App *dec = app.add_subcommand("decompose", "UDL decomposition of wu and the superdiagonal variable sets");
    dec->add_option("perm", cfg.perm, "One-line permutation")->required();
    add_common(dec);

    CLI::App *ver = app.add_subcommand("verify", "Run every check on one permutation");
    ver->add_option("perm", cfg.perm, "One-line permutation")->required();
    add_common(ver);
    add_verify(ver);

    CLI::App *swp = app.add_subcommand("sweep", "Run every check over S_r or a deterministic sample");
    swp->add_option("r", cfg.r, "Matrix size")->required()->check(CLI::Range(2, kMaxRank));
    swp->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    swp->add_option("--sample", cfg.sample, "Number of permutations to draw")->check(CLI::PositiveNumber);
    add_common(swp);
    add_verify(swp);

    CLI::App *rep = app.add_subcommand("replay", "Rerun the checks named in a witness file");
    rep->add_option("witness", cfg.perm, "Witness JSON written by verify or sweep")->required();
    add_common(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*map)
            return cmd_map(cfg);
        if (*dec)
            return cmd_decompose(cfg);
        if (*ver)
            return cmd_verify(cfg);
        if (*swp)
            return cmd_sweep(cfg);
        return cmd_replay(cfg);
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
