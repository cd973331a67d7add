// graphstat: local graph statistics, Laplacian spectra and isoperimetry for
// bounded-degree graph sequences.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphstat/census.hpp"
#include "graphstat/errors.hpp"
#include "graphstat/generators.hpp"
#include "graphstat/isoperimetry.hpp"
#include "graphstat/runners.hpp"
#include "graphstat/spectral.hpp"

using namespace graphstat;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw invalid_input("FileError", "cannot write '" + out_path + "'");
        out << text;
    }
}

Graph load_input_graph(const std::string& path) { return load_graph(path); }

EdgeColoring coloring_or_default(const Graph& g, const std::string& coloring_path) {
    if (coloring_path.empty()) return proper_edge_coloring(g);
    return load_coloring(coloring_path, g);
}

struct SequenceFlags {
    std::string family = "cycle";
    std::vector<long long> sizes;
    int d = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> files;
    std::vector<std::string> colorings;

    SequenceSpec to_spec() const {
        SequenceSpec spec;
        spec.family = family_from_name(family);
        spec.sizes = sizes;
        spec.d = d;
        spec.seed = seed;
        spec.graph_files = files;
        spec.coloring_files = colorings;
        spec.validate();
        return spec;
    }
};

void add_sequence_flags(CLI::App* cmd, SequenceFlags& flags) {
    cmd->add_option("--family", flags.family,
                    "cycle | torus2d | random_regular | binary_tree | from_files");
    cmd->add_option("--sizes", flags.sizes, "member sizes (n / side / depth), strictly increasing")
        ->delimiter(',');
    cmd->add_option("--d", flags.d, "degree bound (random_regular input)");
    cmd->add_option("--seed", flags.seed, "master 64-bit seed");
    cmd->add_option("--files", flags.files, "graph files (from_files)")->delimiter(',');
    cmd->add_option("--colorings", flags.colorings, "coloring files (from_files)")->delimiter(',');
}

int run(int argc, char** argv) {
    CLI::App app{"local statistics, Laplacian spectra and isoperimetry for bounded-degree graphs"};
    app.set_version_flag("--version", std::string("graphstat ") + kToolVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate one sequence member");
    std::string gen_family = "cycle", gen_out, gen_coloring_out;
    long long gen_size = 0;
    int gen_d = 3;
    std::uint64_t gen_seed = 0;
    std::size_t gen_index = 0;
    gen->add_option("--family", gen_family, "cycle | torus2d | random_regular | binary_tree");
    gen->add_option("--size", gen_size, "n / side / depth")->required();
    gen->add_option("--d", gen_d, "degree (random_regular)");
    gen->add_option("--seed", gen_seed, "master seed");
    gen->add_option("--index", gen_index, "member index for seed mixing");
    gen->add_option("--out", gen_out, "graph file path")->required();
    gen->add_option("--coloring-out", gen_coloring_out, "also write the family coloring");

    // color
    auto* color = app.add_subcommand("color", "properly edge-color a graph (Misra-Gries)");
    std::string color_in, color_out;
    color->add_option("graph", color_in, "graph file")->required();
    color->add_option("--out", color_out, "coloring file path");

    // census
    auto* census_cmd = app.add_subcommand("census", "rooted ball census at radius r");
    std::string census_in, census_coloring, census_out;
    int census_r = 1, census_threads = 0;
    bool census_uncolored = false;
    census_cmd->add_option("graph", census_in)->required();
    census_cmd->add_option("--coloring", census_coloring, "coloring file (default: Misra-Gries)");
    census_cmd->add_option("--r", census_r, "ball radius")->required();
    census_cmd->add_option("--threads", census_threads, "0 = hardware");
    census_cmd->add_flag("--uncolored", census_uncolored, "uncolored canonical codes (<= 20 vertex balls)");
    census_cmd->add_option("--out", census_out);

    // tv
    auto* tv = app.add_subcommand("tv", "total variation distance of two census files");
    std::string tv_a, tv_b;
    tv->add_option("a", tv_a)->required();
    tv->add_option("b", tv_b)->required();

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "all Laplacian eigenvalues (CSV)");
    std::string spec_in, spec_out;
    spectrum_cmd->add_option("graph", spec_in)->required();
    spectrum_cmd->add_option("--out", spec_out);

    // moments
    auto* moments = app.add_subcommand("moments", "exact spectral moments, trace and census routes");
    std::string mom_in, mom_coloring, mom_out, mom_format = "json";
    int mom_p = 4;
    moments->add_option("graph", mom_in)->required();
    moments->add_option("--coloring", mom_coloring);
    moments->add_option("--p", mom_p, "maximum power");
    moments->add_option("--format", mom_format)->check(CLI::IsMember({"json", "csv"}));
    moments->add_option("--out", mom_out);

    // sfrac
    auto* sfrac = app.add_subcommand("sfrac", "fraction of eigenvalues <= delta");
    std::string sf_in, sf_out;
    std::vector<double> sf_deltas;
    sfrac->add_option("graph", sf_in)->required();
    sfrac->add_option("--delta", sf_deltas, "threshold(s)")->required()->delimiter(',');
    sfrac->add_option("--out", sf_out);

    // cheeger
    auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant (exact) or sweep upper bound");
    std::string ch_in, ch_out, ch_method = "auto";
    cheeger->add_option("graph", ch_in)->required();
    cheeger->add_option("--method", ch_method)->check(CLI::IsMember({"auto", "exact", "sweep"}));
    cheeger->add_option("--out", ch_out);

    // goodsets
    auto* goodsets = app.add_subcommand("goodsets", "enumerate good sets, coverage and greedy packing");
    std::string gs_in, gs_out, gs_eps = "1/2";
    int gs_k = 3;
    long long gs_budget = kDefaultEnumBudget;
    goodsets->add_option("graph", gs_in)->required();
    goodsets->add_option("--eps", gs_eps, "boundary ratio threshold (rational or decimal)");
    goodsets->add_option("--k", gs_k, "size cap");
    goodsets->add_option("--budget", gs_budget, "visited-subset cap");
    goodsets->add_option("--out", gs_out);

    // pack
    auto* pack = app.add_subcommand("pack", "disjoint good-set family (greedy or exact)");
    std::string pk_in, pk_out, pk_eps = "1/2", pk_method = "greedy";
    int pk_k = 3;
    long long pk_budget = kDefaultEnumBudget;
    pack->add_option("graph", pk_in)->required();
    pack->add_option("--eps", pk_eps);
    pack->add_option("--k", pk_k);
    pack->add_option("--method", pk_method)->check(CLI::IsMember({"greedy", "exact"}));
    pack->add_option("--budget", pk_budget);
    pack->add_option("--out", pk_out);

    // converge / ids / thm2
    auto* converge = app.add_subcommand("converge", "census convergence along a sequence");
    SequenceFlags conv_flags;
    int conv_r = 1;
    std::string conv_out, conv_format = "json";
    add_sequence_flags(converge, conv_flags);
    converge->add_option("--r", conv_r, "census radius");
    converge->add_option("--format", conv_format)->check(CLI::IsMember({"json", "csv"}));
    converge->add_option("--out", conv_out);

    auto* ids = app.add_subcommand("ids", "spectra, histograms and moments along a sequence");
    SequenceFlags ids_flags;
    int ids_bins = 32, ids_max_p = 4;
    std::vector<double> ids_deltas{0.1, 0.5, 1.0};
    std::string ids_out, ids_format = "json";
    add_sequence_flags(ids, ids_flags);
    ids->add_option("--bins", ids_bins);
    ids->add_option("--p", ids_max_p, "maximum moment power");
    ids->add_option("--delta", ids_deltas, "s(G,delta) thresholds")->delimiter(',');
    ids->add_option("--format", ids_format)->check(CLI::IsMember({"json", "csv"}));
    ids->add_option("--out", ids_out);

    auto* thm2 = app.add_subcommand("thm2", "small eigenvalues vs good-set packings along a sequence");
    SequenceFlags t2_flags;
    double t2_delta = 0.5;
    std::string t2_eps = "4/5", t2_out, t2_format = "json";
    int t2_k = 9;
    long long t2_budget = kDefaultEnumBudget;
    add_sequence_flags(thm2, t2_flags);
    thm2->add_option("--delta", t2_delta);
    thm2->add_option("--eps", t2_eps);
    thm2->add_option("--k", t2_k);
    thm2->add_option("--budget", t2_budget);
    thm2->add_option("--format", t2_format)->check(CLI::IsMember({"json", "csv"}));
    thm2->add_option("--out", t2_out);

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        SequenceSpec spec;
        spec.family = family_from_name(gen_family);
        if (spec.family == Family::from_files)
            throw invalid_input("BadParams", "gen cannot use from_files");
        spec.sizes = {gen_size};
        spec.d = gen_d;
        spec.seed = member_seed(gen_seed, gen_index);  // mixed once here, index folded in
        Member m = generate(spec, 0);
        save_graph(gen_out, m.graph);
        if (!gen_coloring_out.empty()) save_coloring(gen_coloring_out, m.graph, m.coloring);
        return 0;
    }
    if (color->parsed()) {
        Graph g = load_input_graph(color_in);
        EdgeColoring col = proper_edge_coloring(g);
        std::ostringstream out;
        write_coloring(out, g, col);
        emit(out.str(), color_out);
        return 0;
    }
    if (census_cmd->parsed()) {
        Graph g = load_input_graph(census_in);
        if (census_uncolored) {
            // coloring-free diagnostic census over uncolored canonical codes
            std::map<std::string, long long> counts;
            for (Vertex v = 0; v < g.n(); ++v)
                ++counts["u1|" + canonical_code_uncolored(g, v, census_r)];
            nlohmann::json j;
            j["r"] = census_r;
            j["d"] = g.degree_bound();
            j["n"] = g.n();
            auto classes = nlohmann::json::array();
            for (const auto& [code, count] : counts)
                classes.push_back({{"code", code}, {"count", count}});
            j["classes"] = std::move(classes);
            emit(j.dump(2) + "\n", census_out);
            return 0;
        }
        EdgeColoring col = coloring_or_default(g, census_coloring);
        BallCensus c = census(g, col, census_r, census_threads);
        std::ostringstream out;
        write_census(out, c);
        emit(out.str(), census_out);
        return 0;
    }
    if (tv->parsed()) {
        Rational dist = tv_distance(load_census(tv_a), load_census(tv_b));
        std::cout << rat_str(dist) << " (" << rat_double(dist) << ")\n";
        return 0;
    }
    if (spectrum_cmd->parsed()) {
        SpectralMeasure m = spectrum(load_input_graph(spec_in));
        std::ostringstream out;
        write_spectrum(out, m);
        emit(out.str(), spec_out);
        return 0;
    }
    if (moments->parsed()) {
        Graph g = load_input_graph(mom_in);
        EdgeColoring col = coloring_or_default(g, mom_coloring);
        nlohmann::json rows = nlohmann::json::array();
        std::ostringstream csv;
        csv << "p,global,local,equal\n";
        for (int p = 0; p <= mom_p; ++p) {
            Rational global = moment_global(g, p);
            Rational local = moment_local(g, col, p);
            rows.push_back({{"p", p},
                            {"global", rat_str(global)},
                            {"local", rat_str(local)},
                            {"equal", global == local}});
            csv << p << "," << rat_str(global) << "," << rat_str(local) << ","
                << (global == local ? "true" : "false") << "\n";
        }
        emit(mom_format == "csv" ? csv.str() : rows.dump(2) + "\n", mom_out);
        return 0;
    }
    if (sfrac->parsed()) {
        SpectralMeasure m = spectrum(load_input_graph(sf_in));
        nlohmann::json j = nlohmann::json::array();
        for (double delta : sf_deltas)
            j.push_back({{"delta", delta}, {"s", rat_str(s_fraction(m, delta))}});
        emit(j.dump(2) + "\n", sf_out);
        return 0;
    }
    if (cheeger->parsed()) {
        Graph g = load_input_graph(ch_in);
        std::string method = ch_method;
        if (method == "auto") method = g.n() <= 18 ? "exact" : "sweep";
        CheegerResult res = method == "exact" ? cheeger_exact(g) : cheeger_sweep(g);
        nlohmann::json j;
        j["method"] = method;
        j[method == "exact" ? "h_exact" : "h_upper"] = rat_str(res.value);
        j["value_float"] = rat_double(res.value);
        j["witness"] = res.witness;
        emit(j.dump(2) + "\n", ch_out);
        return 0;
    }
    if (goodsets->parsed() || pack->parsed()) {
        const bool is_pack = pack->parsed();
        Graph g = load_input_graph(is_pack ? pk_in : gs_in);
        Rational eps = parse_rational(is_pack ? pk_eps : gs_eps);
        int k = is_pack ? pk_k : gs_k;
        long long budget = is_pack ? pk_budget : gs_budget;
        GoodSetStream stream = enumerate_good_sets(g, eps, k, budget);
        GoodSetFamily fam = (is_pack && pk_method == "exact") ? pack_exact(stream, g)
                                                              : pack_greedy(stream, g.n());
        std::ostringstream out;
        write_goodset_report(out, g, eps, k, stream, fam);
        emit(out.str(), is_pack ? pk_out : gs_out);
        return stream.truncated ? 3 : 0;
    }
    if (converge->parsed()) {
        RunReport report = run_convergence(conv_flags.to_spec(), conv_r);
        emit(conv_format == "csv" ? report_csv(report) : report.dump(2) + "\n", conv_out);
        return 0;
    }
    if (ids->parsed()) {
        RunReport report = run_ids(ids_flags.to_spec(), ids_bins, ids_max_p, ids_deltas);
        emit(ids_format == "csv" ? report_csv(report) : report.dump(2) + "\n", ids_out);
        return 0;
    }
    if (thm2->parsed()) {
        RunReport report =
            run_theorem2(t2_flags.to_spec(), t2_delta, parse_rational(t2_eps), t2_k, t2_budget);
        emit(t2_format == "csv" ? report_csv(report) : report.dump(2) + "\n", t2_out);
        for (const auto& member : report["members"])
            if (member["enumeration_status"] == "BudgetExceeded") return 3;
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::InvalidInput: return 2;
            case ErrorKind::Guard: return 3;
            case ErrorKind::Internal: return 4;
        }
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
