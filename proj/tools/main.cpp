#include "ndg/brooks.hpp"
#include "ndg/decompose.hpp"
#include "ndg/error.hpp"
#include "ndg/io.hpp"
#include "ndg/lab.hpp"
#include "ndg/lemma.hpp"
#include "ndg/pipeline.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitClique = 2;
constexpr int kExitSolver = 3;
constexpr int kExitInput = 4;

void emit(const json& j, const std::string& out_path) {
    if (!out_path.empty())
        ndg::save_json(out_path, j);
    else
        std::cout << j.dump(2) << "\n";
}

json report_to_json(const ndg::NdgReport& rep) {
    json j;
    j["proper"] = rep.proper;
    j["violations"] = json::array();
    for (const auto& v : rep.violations)
        j["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
    return j;
}

ndg::Coloring coloring_from_file(const std::string& path) {
    json j = ndg::load_json(path);
    if (j.is_object() && j.contains("coloring"))
        j = j["coloring"];
    if (!j.is_array())
        throw ndg::Error("coloring file must hold an array of colors");
    return j.get<ndg::Coloring>();
}

struct CommonIn {
    std::string input;
    std::string format = "dimacs";
    std::string out;
};

int cmd_color(const CommonIn& io, int c, std::optional<int> D, uint64_t seed,
              std::optional<long long> heuristic_p, int jobs, bool trace) {
    ndg::Graph g = ndg::load_graph(io.input, io.format);
    ndg::NdgOptions opts;
    opts.D = D;
    opts.seed = seed;
    opts.heuristic_p = heuristic_p;
    opts.jobs = jobs;
    if (trace)
        opts.trace = &std::cerr;
    ndg::NdgResult res = ndg::ndg_color(g, c, opts);

    json env;
    env["seed"] = seed;
    env["c"] = c;
    if (auto* ok = std::get_if<ndg::NdgSuccess>(&res)) {
        env["status"] = "colored";
        env["coloring"] = ok->coloring;
        env["D"] = ok->D;
        env["p"] = ok->p;
        env["report"] = report_to_json(ok->report);
        emit(env, io.out);
        return kExitOk;
    }
    if (auto* cert = std::get_if<ndg::CliqueCertificate>(&res)) {
        env["status"] = "clique";
        env["certificate"] = cert->vertices;
        emit(env, io.out);
        std::cerr << "clique on " << cert->vertices.size() << " vertices\n";
        return kExitClique;
    }
    env["status"] = "failed";
    env["reason"] = std::get<ndg::PipelineFailure>(res).reason;
    emit(env, io.out);
    std::cerr << "solver failed: " << std::get<ndg::PipelineFailure>(res).reason << "\n";
    return kExitSolver;
}

int cmd_decompose(const CommonIn& io, const std::string& alphas_csv, bool trace) {
    ndg::Graph g = ndg::load_graph(io.input, io.format);
    ndg::AlphaVector av;
    std::istringstream ls(alphas_csv);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
        int a = std::stoi(tok);
        if (a < 2)
            throw ndg::Error("alpha entries must be at least 2");
        av.alphas.push_back(a);
        av.D += a;
    }
    if (av.alphas.empty())
        throw ndg::Error("--alphas must list at least one value");
    ndg::DescentStats stats;
    auto res = ndg::decompose_lovasz(g, av, trace ? &std::cerr : nullptr, &stats);
    json env;
    env["moves"] = stats.moves;
    if (auto* cert = std::get_if<ndg::CliqueCertificate>(&res)) {
        env["status"] = "clique";
        env["certificate"] = cert->vertices;
        emit(env, io.out);
        return kExitClique;
    }
    env["status"] = "decomposed";
    env["decomposition"] = ndg::decomposition_to_json(std::get<ndg::Decomposition>(res));
    emit(env, io.out);
    return kExitOk;
}

int cmd_verify(const CommonIn& io, const std::string& col_path, int c, long long p,
               int D) {
    ndg::Graph g = ndg::load_graph(io.input, io.format);
    ndg::Coloring col = coloring_from_file(col_path);
    ndg::NdgReport rep = ndg::verify_ndg(g, col, c, p, D);
    json env;
    env["status"] = rep.ok() ? "verified" : "violations";
    env["report"] = report_to_json(rep);
    emit(env, io.out);
    if (!rep.ok()) {
        for (const auto& v : rep.violations)
            std::cerr << v.kind << ": " << v.detail << "\n";
        return kExitSolver;
    }
    return kExitOk;
}

int cmd_lemma(const std::string& instance_path, uint64_t seed, bool heuristic,
              long long max_swaps, int max_restarts, bool trace,
              const std::string& out) {
    ndg::LemmaInstance inst = ndg::lemma_instance_from_json(ndg::load_json(instance_path));
    ndg::SolveLimits limits;
    limits.max_swaps = max_swaps;
    limits.max_restarts = max_restarts;
    ndg::SolveResult res =
        ndg::solve(inst, seed, limits, !heuristic, trace ? &std::cerr : nullptr);
    json env;
    env["seed"] = seed;
    if (auto* ok = std::get_if<ndg::NdgColoring>(&res)) {
        env["status"] = "colored";
        env["coloring"] = ok->coloring;
        env["a_color_counts"] = ok->a_color_counts;
        emit(env, out);
        return kExitOk;
    }
    const auto& f = std::get<ndg::LemmaFailure>(res);
    env["status"] = "failed";
    env["reason"] = f.reason;
    env["core"] = f.core.remaining;
    env["swaps"] = f.swaps;
    env["restarts"] = f.restarts;
    emit(env, out);
    std::cerr << "solver failed: " << f.reason << "\n";
    return kExitSolver;
}

int cmd_oracle(const CommonIn& io, int c, long long p, int D, long long budget) {
    ndg::Graph g = ndg::load_graph(io.input, io.format);
    auto witness = ndg::brute_force_ndg_exists(g, D, c, p, budget);
    json env;
    if (witness) {
        env["status"] = "witness";
        env["coloring"] = *witness;
        emit(env, io.out);
        return kExitOk;
    }
    env["status"] = "none";
    emit(env, io.out);
    std::cerr << "no coloring exists\n";
    return kExitSolver;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and toolkit for nondegenerate bounded-degree colorings"};
    app.require_subcommand(1);

    CommonIn io;
    int c = 2, D_flag = -1, jobs = 1, max_restarts = 3;
    long long p = 0, budget = -1, max_swaps = -1;
    uint64_t seed = 1;
    long long heuristic_p = -1;
    bool trace = false, heuristic = false;
    std::string alphas, col_path, instance_path;

    auto add_io = [&](CLI::App* sub, bool with_input = true) {
        if (with_input)
            sub->add_option("--input", io.input, "graph file")->required();
        sub->add_option("--format", io.format, "dimacs|json");
        sub->add_option("--out", io.out, "write the result envelope here");
    };

    auto* color = app.add_subcommand("color", "full nondegenerate coloring pipeline");
    add_io(color);
    color->add_option("--c", c, "distinct-color requirement")->required();
    color->add_option("--D", D_flag, "palette size, defaults to the max degree");
    color->add_option("--seed", seed, "rng seed");
    color->add_option("--heuristic-p", heuristic_p, "override the degree threshold");
    color->add_option("--jobs", jobs, "parallel per-class solves");
    color->add_flag("--trace", trace, "log search progress to stderr");

    auto* dec = app.add_subcommand("decompose", "bounded-degree clique-free partition");
    add_io(dec);
    dec->add_option("--alphas", alphas, "comma-separated part degree bounds")->required();
    dec->add_flag("--trace", trace);

    auto* ver = app.add_subcommand("verify", "audit a coloring against the definition");
    add_io(ver);
    ver->add_option("--coloring", col_path, "coloring JSON")->required();
    ver->add_option("--c", c)->required();
    ver->add_option("--p", p)->required();
    ver->add_option("--D", D_flag)->required();

    auto* lem = app.add_subcommand("lemma", "rainbow-neighborhood instance solver");
    lem->add_option("--instance", instance_path, "instance JSON")->required();
    lem->add_option("--seed", seed);
    lem->add_option("--max-swaps", max_swaps);
    lem->add_option("--max-restarts", max_restarts);
    lem->add_flag("--heuristic", heuristic, "skip the strict precondition gate");
    lem->add_flag("--trace", trace);
    lem->add_option("--out", io.out);

    auto* gen = app.add_subcommand("gen", "graph and instance generators");
    gen->require_subcommand(1);
    int gen_p = 2, gen_D = 2, gen_n = 0, gen_bn = 0, gen_q = 4, gen_d = 84, gen_a = 1;
    auto* gctr = gen->add_subcommand("counterexample", "subset incidence graph");
    gctr->add_option("--p", gen_p)->required();
    gctr->add_option("--D", gen_D)->required();
    add_io(gctr, false);
    auto* greg = gen->add_subcommand("regular", "regular graph without a full clique");
    greg->add_option("--n", gen_n)->required();
    greg->add_option("--D", gen_D)->required();
    greg->add_option("--seed", seed);
    add_io(greg, false);
    auto* glem = gen->add_subcommand("lemma", "strict rainbow-neighborhood instance");
    glem->add_option("--bn", gen_bn)->required();
    glem->add_option("--q", gen_q);
    glem->add_option("--d", gen_d);
    glem->add_option("--a", gen_a, "number of A-vertices");
    glem->add_option("--seed", seed);
    glem->add_option("--out", io.out);

    auto* orc = app.add_subcommand("oracle", "exhaustive existence check");
    add_io(orc);
    orc->add_option("--c", c)->required();
    orc->add_option("--p", p)->required();
    orc->add_option("--D", D_flag)->required();
    orc->add_option("--budget", budget, "explored-node cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        std::optional<int> D_opt;
        if (D_flag >= 0)
            D_opt = D_flag;
        std::optional<long long> hp;
        if (heuristic_p >= 0)
            hp = heuristic_p;
        if (color->parsed())
            return cmd_color(io, c, D_opt, seed, hp, jobs, trace);
        if (dec->parsed())
            return cmd_decompose(io, alphas, trace);
        if (ver->parsed())
            return cmd_verify(io, col_path, c, p, D_flag);
        if (lem->parsed())
            return cmd_lemma(instance_path, seed, heuristic, max_swaps, max_restarts,
                             trace, io.out);
        if (orc->parsed())
            return cmd_oracle(io, c, p, D_flag, budget);
        if (gctr->parsed()) {
            ndg::Graph g = ndg::gen_bipartite_counterexample(gen_p, gen_D);
            if (!io.out.empty())
                ndg::save_graph(io.out, io.format, g);
            else if (io.format == "json")
                std::cout << ndg::graph_to_json(g).dump(2) << "\n";
            else
                ndg::write_dimacs(std::cout, g);
            return kExitOk;
        }
        if (greg->parsed()) {
            ndg::Graph g = ndg::gen_regular_kfree(gen_n, gen_D, seed);
            if (!io.out.empty())
                ndg::save_graph(io.out, io.format, g);
            else if (io.format == "json")
                std::cout << ndg::graph_to_json(g).dump(2) << "\n";
            else
                ndg::write_dimacs(std::cout, g);
            return kExitOk;
        }
        if (glem->parsed()) {
            auto inst = ndg::gen_lemma_instance(gen_bn, gen_q, gen_d, gen_a, seed);
            emit(ndg::lemma_instance_to_json(inst), io.out);
            return kExitOk;
        }
    } catch (const ndg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
