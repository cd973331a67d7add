#include "graphstat/runners.hpp"

#include <sstream>

#include "graphstat/census.hpp"
#include "graphstat/errors.hpp"
#include "graphstat/spectral.hpp"

namespace graphstat {

namespace {

nlohmann::json provenance(const SequenceSpec& spec) {
    nlohmann::json p;
    p["tool_version"] = kToolVersion;
    p["family"] = family_name(spec.family);
    p["d"] = spec.d;
    p["seed"] = spec.seed;
    if (spec.family == Family::from_files) {
        p["graph_files"] = spec.graph_files;
        if (!spec.coloring_files.empty()) p["coloring_files"] = spec.coloring_files;
    } else {
        p["sizes"] = spec.sizes;
    }
    nlohmann::json seeds = nlohmann::json::array();
    for (std::size_t i = 0; i < spec.members(); ++i) seeds.push_back(member_seed(spec.seed, i));
    p["member_seeds"] = std::move(seeds);
    return p;
}

nlohmann::json census_summary(const BallCensus& c) {
    nlohmann::json s;
    s["r"] = c.r;
    s["d"] = c.d;
    s["n"] = c.n;
    s["classes"] = c.counts.size();
    // up to five most frequent classes, deterministic tie-break by code
    std::vector<std::pair<long long, std::string>> top;
    for (const auto& [code, count] : c.counts) top.push_back({count, code});
    std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    if (top.size() > 5) top.resize(5);
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [count, code] : top)
        classes.push_back({{"code", "v1|" + code}, {"count", count}});
    s["top_classes"] = std::move(classes);
    return s;
}

}  // namespace

RunReport run_convergence(const SequenceSpec& spec, int r) {
    spec.validate();
    RunReport report;
    report["kind"] = "convergence";
    report["provenance"] = provenance(spec);
    report["r"] = r;

    std::vector<BallCensus> censuses;
    auto members = nlohmann::json::array();
    for (std::size_t i = 0; i < spec.members(); ++i) {
        Member m = generate(spec, i);
        BallCensus c = census(m.graph, m.coloring, r);
        nlohmann::json entry;
        entry["index"] = i;
        entry["n"] = m.graph.n();
        entry["census"] = census_summary(c);
        members.push_back(std::move(entry));
        censuses.push_back(std::move(c));
    }
    report["members"] = std::move(members);

    auto matrix = nlohmann::json::array();
    for (std::size_t i = 0; i < censuses.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < censuses.size(); ++j) {
            Rational tv = tv_distance(censuses[i], censuses[j]);
            row.push_back(rat_str(tv));
        }
        matrix.push_back(std::move(row));
    }
    report["tv_matrix"] = std::move(matrix);

    auto consecutive = nlohmann::json::array();
    bool plateau = true;
    for (std::size_t i = 0; i + 1 < censuses.size(); ++i) {
        Rational tv = tv_distance(censuses[i], censuses[i + 1]);
        consecutive.push_back({{"pair", {i, i + 1}},
                               {"tv", rat_str(tv)},
                               {"tv_float", rat_double(tv)}});
        if (tv >= Rational(1, 1000)) plateau = false;
    }
    report["tv_consecutive"] = std::move(consecutive);
    report["plateau"] = plateau && censuses.size() > 1;
    return report;
}

RunReport run_ids(const SequenceSpec& spec, int bins, int max_p,
                  const std::vector<double>& deltas) {
    spec.validate();
    if (bins < 1) throw invalid_input("BadParams", "bins must be >= 1");
    if (max_p < 0) throw invalid_input("BadParams", "max_p must be nonnegative");
    RunReport report;
    report["kind"] = "ids";
    report["provenance"] = provenance(spec);
    report["bins"] = bins;
    report["max_p"] = max_p;
    report["deltas"] = deltas;

    std::vector<SpectralMeasure> spectra;
    auto members = nlohmann::json::array();
    for (std::size_t i = 0; i < spec.members(); ++i) {
        Member m = generate(spec, i);
        SpectralMeasure sm = spectrum(m.graph);
        nlohmann::json entry;
        entry["index"] = i;
        entry["n"] = m.graph.n();
        entry["lambda_min"] = sm.values.front();
        entry["lambda_max"] = sm.values.back();
        entry["max_clamp"] = sm.max_clamp;

        Histogram h = ids_histogram(sm, bins);
        entry["histogram"] = {{"d", h.d}, {"bins", h.masses.size()}, {"edges", h.edges},
                              {"masses", h.masses}};

        nlohmann::json sfr = nlohmann::json::object();
        for (double delta : deltas) {
            std::ostringstream key;
            key << delta;
            sfr[key.str()] = rat_str(s_fraction(sm, delta));
        }
        entry["s_fraction"] = std::move(sfr);

        auto moments = nlohmann::json::array();
        for (int p = 0; p <= max_p; ++p) {
            Rational global = moment_global(m.graph, p);
            Rational local = moment_local(m.graph, m.coloring, p);
            moments.push_back({{"p", p},
                               {"global", rat_str(global)},
                               {"local", rat_str(local)},
                               {"equal", global == local}});
        }
        entry["moments"] = std::move(moments);
        members.push_back(std::move(entry));
        spectra.push_back(std::move(sm));
    }
    report["members"] = std::move(members);

    auto ks = nlohmann::json::array();
    for (std::size_t i = 0; i + 1 < spectra.size(); ++i)
        ks.push_back({{"pair", {i, i + 1}},
                      {"kolmogorov", kolmogorov_distance(spectra[i], spectra[i + 1])}});
    report["kolmogorov_consecutive"] = std::move(ks);
    return report;
}

RunReport run_theorem2(const SequenceSpec& spec, double delta, const Rational& eps, int k,
                       long long budget) {
    spec.validate();
    RunReport report;
    report["kind"] = "theorem2";
    report["provenance"] = provenance(spec);
    report["delta"] = delta;
    report["eps"] = rat_str(eps);
    report["k"] = k;
    report["budget"] = budget;

    auto members = nlohmann::json::array();
    for (std::size_t i = 0; i < spec.members(); ++i) {
        Member m = generate(spec, i);
        nlohmann::json entry;
        entry["index"] = i;
        entry["n"] = m.graph.n();

        SpectralMeasure sm = spectrum(m.graph);
        Rational s = s_fraction(sm, delta);
        entry["s_fraction"] = rat_str(s);
        entry["s_fraction_float"] = rat_double(s);

        GoodSetStream stream = enumerate_good_sets(m.graph, eps, k, budget);
        GoodSetFamily fam = pack_greedy(stream, m.graph.n());
        Rational cover = coverable_fraction(stream, m.graph.n());
        entry["h_cover"] = rat_str(cover);
        entry["h_cover_float"] = rat_double(cover);
        entry["m_norm"] = rat_str(fam.m_norm);
        entry["m_norm_float"] = rat_double(fam.m_norm);
        entry["m_count"] = fam.m_count;
        entry["good_sets_found"] = stream.sets.size();
        entry["enumeration_status"] = stream.truncated ? "BudgetExceeded" : "OK";
        members.push_back(std::move(entry));
    }
    report["members"] = std::move(members);
    return report;
}

std::string report_csv(const RunReport& report) {
    std::ostringstream out;
    const std::string kind = report.value("kind", "");
    if (kind == "convergence") {
        out << "index,n,classes,tv_to_next\n";
        const auto& members = report.at("members");
        for (std::size_t i = 0; i < members.size(); ++i) {
            out << members[i].at("index") << "," << members[i].at("n") << ","
                << members[i].at("census").at("classes") << ",";
            if (i + 1 < members.size())
                out << report.at("tv_consecutive")[i].at("tv").get<std::string>();
            out << "\n";
        }
    } else if (kind == "ids") {
        out << "index,n,lambda_min,lambda_max,kolmogorov_to_next\n";
        const auto& members = report.at("members");
        for (std::size_t i = 0; i < members.size(); ++i) {
            out << members[i].at("index") << "," << members[i].at("n") << ","
                << members[i].at("lambda_min") << "," << members[i].at("lambda_max") << ",";
            if (i + 1 < members.size())
                out << report.at("kolmogorov_consecutive")[i].at("kolmogorov");
            out << "\n";
        }
    } else if (kind == "theorem2") {
        out << "index,n,s_fraction,h_cover,m_norm,m_count,status\n";
        for (const auto& m : report.at("members")) {
            out << m.at("index") << "," << m.at("n") << ","
                << m.at("s_fraction").get<std::string>() << ","
                << m.at("h_cover").get<std::string>() << ","
                << m.at("m_norm").get<std::string>() << "," << m.at("m_count") << ","
                << m.at("enumeration_status").get<std::string>() << "\n";
        }
    } else {
        throw invalid_input("BadParams", "no CSV rendering for report kind '" + kind + "'");
    }
    return out.str();
}

}  // namespace graphstat
