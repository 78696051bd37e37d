// command line front end: classification, searches, recognition, and the
// brute-force cross-check, with json/csv/graph6/dot output

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/classify.hpp"
#include "specgraph/exact.hpp"
#include "specgraph/glg.hpp"
#include "specgraph/glgsearch.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/starsearch.hpp"

using namespace specgraph;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* version_stamp = "specgraph 1.0.0";

// ==== shared output plumbing ====

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
    int jobs = 0;  // 0: take the environment override, else one worker
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "g6", "dot"}));
    cmd->add_option("--jobs", c.jobs, "worker count");
    cmd->add_option("--out", c.out_path, "write output to a file instead of stdout");
}

int resolved_jobs(const CommonOpts& c) {
    if (c.jobs > 0) return c.jobs;
    if (const char* env = std::getenv("SPECGRAPH_JOBS"))
        if (int j = std::atoi(env); j > 0) return j;
    return 1;
}

int write_output(const CommonOpts& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(c.out_path);
    if (!f) throw std::runtime_error("cannot open output file");
    f << text;
    return 0;
}

int unsupported_format(const CommonOpts& c) {
    std::cerr << "error: format '" << c.format << "' is not supported by this command\n";
    return 2;
}

// descending eigenvalue order, so a radius-three spectrum starts at "3"
json spectrum_json(const Spectrum& s) {
    json out = json::object();
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        out[std::to_string(it->first)] = it->second;
    return out;
}

json root_json(const VertexWeightedGraph& hw) {
    return json{{"h", write_graph6(hw.h)}, {"f", hw.f}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Graph parse_input_graph(const std::string& text) {
    try {
        return parse_graph6(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("graph6", e.what());
    }
}

// ==== classify ====

int run_classify(const CommonOpts& c) {
    ClassifyOptions opts;
    opts.jobs = resolved_jobs(c);
    ClassificationReport rep = classify_all(opts);

    std::string text;
    if (c.format == "json") {
        json entries = json::array();
        for (const auto& e : rep.entries) {
            json entry{{"row", e.row_name},
                       {"graph6", write_graph6(e.g)},
                       {"n", e.g.order()},
                       {"spectrum", spectrum_json(e.spectrum)},
                       {"class", e.exceptional ? "exceptional" : "glg"}};
            if (e.root)
                entry["witness"] = json{{"root", root_json(*e.root)}};
            else
                entry["witness"] = json{{"base_graph6", write_graph6(*e.base)},
                                        {"clique_size", e.clique_size}};
            entries.push_back(std::move(entry));
        }
        text = dump(json{{"version", version_stamp},
                         {"entries", std::move(entries)},
                         {"glg_count", rep.glg_count},
                         {"exceptional_count", rep.exceptional_count},
                         {"matches_expected", rep.matches_expected},
                         {"diffs", rep.diffs}});
    } else if (c.format == "csv") {
        text = "name,graph6,n,m3,m2,m1,m0,m-1,m-2,class\n";
        for (const auto& e : rep.entries) {
            MultiplicityRow row = multiplicity_row(e.spectrum);
            text += e.row_name + "," + write_graph6(e.g) + "," + std::to_string(e.g.order());
            for (long long m : row) text += "," + std::to_string(m);
            text += std::string(",") + (e.exceptional ? "exceptional" : "glg") + "\n";
        }
    } else if (c.format == "g6") {
        for (const auto& e : rep.entries) text += write_graph6(e.g) + "\n";
    } else {
        for (const auto& e : rep.entries) text += to_dot(e.g);
    }
    write_output(c, text);
    if (!rep.matches_expected) {
        for (const auto& d : rep.diffs) std::cerr << "mismatch: " << d << "\n";
        return 1;
    }
    return 0;
}

// ==== spectrum ====

int run_spectrum(const CommonOpts& c, const std::string& g6) {
    Graph g = parse_input_graph(g6);
    std::optional<Spectrum> spec = integral_spectrum(adjacency_matrix(g));
    if (!spec) {
        std::cerr << "error: adjacency spectrum is not integral\n";
        return 1;
    }
    if (c.format == "json") return write_output(c, dump(spectrum_json(*spec)));
    if (c.format == "csv") {
        std::string text = "eigenvalue,multiplicity\n";
        for (auto it = spec->rbegin(); it != spec->rend(); ++it)
            text += std::to_string(it->first) + "," + std::to_string(it->second) + "\n";
        return write_output(c, text);
    }
    return unsupported_format(c);
}

// ==== recognize-glg ====

int run_recognize(const CommonOpts& c, const std::string& g6) {
    Graph g = parse_input_graph(g6);
    if (c.format != "json") return unsupported_format(c);
    std::optional<VertexWeightedGraph> root = is_generalized_line_graph(g);
    json out;
    if (root)
        out = json{{"class", "glg"}, {"root", root_json(*root)}};
    else
        out = json{{"class", "exceptional"}};
    return write_output(c, dump(out));
}

// ==== star-extend ====

int run_star_extend(const CommonOpts& c, const std::string& base_g6, int max_clique,
                    long long mu) {
    Graph base = parse_input_graph(base_g6);
    CompatGraph cg = compat_graph(base, mu);

    // every clique of compatible vectors, each extension screened the same
    // way the search screens its candidates
    struct Hit {
        Graph g;
        Spectrum spec;
        int clique = 0;
    };
    std::map<CanonicalKey, Hit> hits;
    std::vector<uint64_t> clique;
    std::vector<int> picked;
    auto screen = [&]() {
        Graph g = extend(base, clique, mu);
        StructureReport rep = structure_report(g);
        if (!rep.connected || rep.bipartite) return;
        std::optional<Spectrum> spec = integral_spectrum(adjacency_matrix(g));
        if (!spec) return;
        if (spec->rbegin()->first != 3 || spec->begin()->first < -2) return;
        if (is_generalized_line_graph(g)) return;
        CanonicalKey key = canonical_key(g);
        if (!hits.count(key)) hits.emplace(key, Hit{g, *spec, (int)clique.size()});
    };
    auto grow = [&](auto&& self, int from) -> void {
        for (int i = from; i < (int)cg.vectors.size(); ++i) {
            bool ok = true;
            for (int j : picked) ok = ok && cg.compatible(j, i);
            if (!ok) continue;
            picked.push_back(i);
            clique.push_back(cg.vectors[i]);
            screen();
            if ((int)clique.size() < max_clique) self(self, i + 1);
            clique.pop_back();
            picked.pop_back();
        }
    };
    grow(grow, 0);

    std::vector<const Hit*> ordered;
    for (const auto& [key, hit] : hits) ordered.push_back(&hit);
    std::sort(ordered.begin(), ordered.end(), [](const Hit* a, const Hit* b) {
        return std::make_pair(a->g.order(), canonical_key(a->g)) <
               std::make_pair(b->g.order(), canonical_key(b->g));
    });

    if (c.format == "json") {
        json cands = json::array();
        for (const Hit* h : ordered)
            cands.push_back(json{{"graph6", write_graph6(h->g)},
                                 {"spectrum", spectrum_json(h->spec)},
                                 {"clique_size", h->clique}});
        return write_output(c, dump(json{{"base", write_graph6(base)},
                                         {"mu", mu},
                                         {"vectors", cg.vectors.size()},
                                         {"candidates", std::move(cands)}}));
    }
    std::string text;
    if (c.format == "g6") {
        for (const Hit* h : ordered) text += write_graph6(h->g) + "\n";
    } else if (c.format == "dot") {
        for (const Hit* h : ordered) text += to_dot(h->g);
    } else {
        return unsupported_format(c);
    }
    return write_output(c, text);
}

// ==== search-glg ====

json checks_json(const SearchCertificate& cert) {
    const StructuralChecks& s = cert.checks;
    return json{{"plain_leaf_forces_singular", s.plain_leaf_forces_singular},
                {"plain_leaves_within_distance_two", s.plain_leaves_within_distance_two},
                {"at_most_two_plain_leaves", s.at_most_two_plain_leaves},
                {"has_open_plain_degree_two_pair", s.has_open_plain_degree_two_pair},
                {"open_pair_forces_singular", s.open_pair_forces_singular},
                {"no_disjoint_cycle_pair", s.no_disjoint_cycle_pair},
                {"nonsingular_forbids_plain_leaves", s.nonsingular_forbids_plain_leaves},
                {"weighted_degree_two_independent", s.weighted_degree_two_independent},
                {"no_mixed_triangle", s.no_mixed_triangle},
                {"nonsingular_diameter_bound", s.nonsingular_diameter_bound},
                {"quotient_applicable", cert.quotient.applicable},
                {"quotient_holds", cert.quotient.holds},
                {"quotient_equality", cert.quotient.equality},
                {"tree_count_ok", cert.tree_count_ok},
                {"multiplicity_row_ok", cert.multiplicity_row_ok},
                {"all_passed", cert.all_passed()}};
}

int run_search_glg(const CommonOpts& c, int max_n, const std::string& cert_path) {
    SearchCaps caps;
    caps.max_vertices = max_n;
    caps.jobs = resolved_jobs(c);
    std::vector<SearchCertificate> certs = glg_root_certificates(caps);

    if (!cert_path.empty()) {
        json arr = json::array();
        for (const auto& cert : certs)
            arr.push_back(json{{"root", root_json(cert.root)},
                               {"q_spectrum", spectrum_json(cert.q_spectrum)},
                               {"checks", checks_json(cert)}});
        std::ofstream f(cert_path);
        if (!f) throw std::runtime_error("cannot open certificate file");
        f << dump(arr);
    }

    std::string text;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& cert : certs)
            arr.push_back(json{{"h", write_graph6(cert.root.h)},
                               {"f", cert.root.f},
                               {"q_spectrum", spectrum_json(cert.q_spectrum)},
                               {"checks_passed", cert.all_passed()}});
        text = dump(json{{"version", version_stamp}, {"count", certs.size()}, {"roots", arr}});
    } else if (c.format == "g6") {
        // weights ride along after the graph6 word
        for (const auto& cert : certs) {
            text += write_graph6(cert.root.h);
            for (size_t i = 0; i < cert.root.f.size(); ++i)
                text += (i ? "," : " ") + std::to_string(cert.root.f[i]);
            text += "\n";
        }
    } else {
        return unsupported_format(c);
    }
    write_output(c, text);
    for (const auto& cert : certs)
        if (!cert.all_passed()) {
            std::cerr << "mismatch: certificate failed for " << write_graph6(cert.root.h)
                      << "\n";
            return 1;
        }
    return 0;
}

// ==== search-exceptional ====

int run_search_exceptional(const CommonOpts& c, int max_clique,
                           const std::string& foundation_path) {
    if (!foundation_path.empty()) {
        std::ofstream f(foundation_path);
        if (!f) throw std::runtime_error("cannot open foundation file");
        for (const Graph& g : enumerate_foundation()) f << write_graph6(g) << "\n";
    }

    StarSearchLimits limits;
    limits.max_clique = max_clique;
    limits.jobs = resolved_jobs(c);
    std::vector<ExceptionalCandidate> cands = exceptional_candidates(limits);

    std::string text;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& cand : cands)
            arr.push_back(json{{"graph6", write_graph6(cand.g)},
                               {"spectrum", spectrum_json(cand.spectrum)},
                               {"base_graph6", write_graph6(cand.base)},
                               {"clique_size", cand.clique_size}});
        text = dump(json{{"version", version_stamp},
                         {"count", cands.size()},
                         {"candidates", std::move(arr)}});
    } else if (c.format == "g6") {
        for (const auto& cand : cands) text += write_graph6(cand.g) + "\n";
    } else if (c.format == "dot") {
        for (const auto& cand : cands) text += to_dot(cand.g);
    } else {
        return unsupported_format(c);
    }
    return write_output(c, text);
}

// ==== crosscheck ====

int run_crosscheck(const CommonOpts& c, int max_n) {
    int jobs = resolved_jobs(c);
    std::vector<Graph> found = brute_force_crosscheck(max_n, jobs);

    // a connected root whose line graph has at most thirteen vertices has
    // at most fourteen vertices itself (|E| >= n - 1), so this cap covers
    // every classification entry the sweep can reach
    ClassifyOptions opts;
    opts.root_cap = 14;
    opts.jobs = jobs;
    ClassificationReport rep = classify_all(opts);

    std::set<CanonicalKey> swept, expected;
    for (const Graph& g : found) swept.insert(canonical_key(g));
    for (const auto& e : rep.entries)
        if (e.g.order() <= max_n) expected.insert(canonical_key(e.g));
    bool match = rep.matches_expected && swept == expected;

    std::string text;
    if (c.format == "json") {
        std::map<int, int> by_order;
        for (const Graph& g : found) by_order[g.order()]++;
        json counts = json::object();
        for (auto [n, k] : by_order) counts[std::to_string(n)] = k;
        json arr = json::array();
        for (const Graph& g : found) arr.push_back(write_graph6(g));
        text = dump(json{{"version", version_stamp},
                         {"max_n", max_n},
                         {"count", found.size()},
                         {"by_order", std::move(counts)},
                         {"graphs", std::move(arr)},
                         {"matches_classification", match}});
    } else if (c.format == "g6") {
        for (const Graph& g : found) text += write_graph6(g) + "\n";
    } else if (c.format == "dot") {
        for (const Graph& g : found) text += to_dot(g);
    } else {
        return unsupported_format(c);
    }
    write_output(c, text);
    if (!match) {
        std::cerr << "mismatch: sweep disagrees with the classification\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral graphs with spectral radius three"};
    app.set_version_flag("--version", version_stamp);
    app.require_subcommand(1);

    CommonOpts common;
    std::string arg_g6, base_g6, cert_path, foundation_path;
    int max_n_glg = 32, max_clique = 4, max_n_cross = 13;
    long long mu = -2;

    CLI::App* classify = app.add_subcommand("classify", "assemble and verify the full table");
    add_common(classify, common);

    CLI::App* spectrum = app.add_subcommand("spectrum", "integral adjacency spectrum");
    spectrum->add_option("graph6", arg_g6, "graph in graph6 form")->required();
    add_common(spectrum, common);

    CLI::App* recognize =
        app.add_subcommand("recognize-glg", "generalized line graph recognition");
    recognize->add_option("graph6", arg_g6, "graph in graph6 form")->required();
    add_common(recognize, common);

    CLI::App* star = app.add_subcommand("star-extend", "extend a star complement base");
    star->add_option("--base", base_g6, "base graph in graph6 form")->required();
    star->add_option("--max-clique", max_clique, "largest compatibility clique");
    star->add_option("--mu", mu, "eigenvalue to add");
    add_common(star, common);

    CLI::App* sglg = app.add_subcommand("search-glg", "weighted root search");
    sglg->add_option("--max-n", max_n_glg, "vertex cap for the root search");
    sglg->add_option("--emit-certificates", cert_path, "write certificate json to a file");
    add_common(sglg, common);

    CLI::App* sexc = app.add_subcommand("search-exceptional", "star complement search");
    sexc->add_option("--max-clique", max_clique, "largest extension clique");
    sexc->add_option("--foundation-out", foundation_path, "write foundation graph6 lines");
    add_common(sexc, common);

    CLI::App* cross = app.add_subcommand("crosscheck", "brute-force sweep comparison");
    cross->add_option("--max-n", max_n_cross, "vertex cap for the sweep")->required();
    add_common(cross, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(common);
        if (spectrum->parsed()) return run_spectrum(common, arg_g6);
        if (recognize->parsed()) return run_recognize(common, arg_g6);
        if (star->parsed()) return run_star_extend(common, base_g6, max_clique, mu);
        if (sglg->parsed()) return run_search_glg(common, max_n_glg, cert_path);
        if (sexc->parsed()) return run_search_exceptional(common, max_clique, foundation_path);
        if (cross->parsed()) return run_crosscheck(common, max_n_cross);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
