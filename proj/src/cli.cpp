#include "cfc/cli.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cfc/checker.hpp"
#include "cfc/enumerate.hpp"
#include "cfc/error.hpp"
#include "cfc/families.hpp"
#include "cfc/solver.hpp"
#include "cfc/tree_formulas.hpp"

namespace cfc::cli {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_graph6(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.starts_with(">>graph6<<")) return true;
        if (line.find(' ') != std::string::npos || line.find('\t') != std::string::npos) return false;
        if (line.starts_with("n=")) return false;
        return std::all_of(line.begin(), line.end(), [](char c) { return c >= 63 && c <= 126; });
    }
    return false;
}

std::vector<long long> identity_labels(int n) {
    std::vector<long long> out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    return out;
}

std::string render_graph(const Graph& g, const std::string& format) {
    if (format == "graph6") return emit_graph6(g) + "\n";
    return emit_edge_list(g);
}

std::string range_text(const json& r) {
    if (r["lo"] == r["hi"]) return std::to_string(r["lo"].get<int>());
    return "[" + std::to_string(r["lo"].get<int>()) + "," + std::to_string(r["hi"].get<int>()) + "]";
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& input, const std::string& format, bool resolve, bool certificate,
                bool as_json, bool as_dot, std::ostream& out) {
    auto parsed = read_graph(input, format);
    const auto& g = parsed.graph;
    auto report = analysis_json(g, parsed.labels, resolve, certificate || as_dot);
    if (as_json) {
        out << report.dump(2) << '\n';
        return kOk;
    }
    if (as_dot) {
        std::vector<int> edge_colors(g.size(), 0);
        bool have = report.contains("certificate");
        if (have)
            for (std::size_t i = 0; i < report["certificate"].size(); ++i) edge_colors[i] = report["certificate"][i][2];
        std::vector<int> vertex_colors;
        if (report.contains("vertex_certificate"))
            for (const auto& row : report["vertex_certificate"]) vertex_colors.push_back(row[1]);
        out << emit_dot(g, have ? std::span<const int>(edge_colors) : std::span<const int>{}, vertex_colors,
                        parsed.labels);
        return kOk;
    }
    out << "n=" << report["n"] << " m=" << report["m"] << '\n';
    out << "diameter=" << report["diameter"] << " radius=" << report["radius"] << '\n';
    out << "h=" << (report["h"].is_null() ? std::string("unsupported") : report["h"].dump()) << '\n';
    out << "cfc=" << range_text(report["cfc"]) << " (" << report["cfc"]["method"].get<std::string>() << ")";
    if (!report["cfc"]["notes"].get<std::string>().empty())
        out << "  # " << report["cfc"]["notes"].get<std::string>();
    out << '\n';
    out << "vcfc=" << range_text(report["vcfc"]) << " (" << report["vcfc"]["method"].get<std::string>() << ")";
    if (!report["vcfc"]["notes"].get<std::string>().empty())
        out << "  # " << report["vcfc"]["notes"].get<std::string>();
    out << '\n';
    if (certificate) {
        if (report.contains("certificate")) {
            out << "# edge coloring (u v c)";
            if (report.contains("certificate_recipe"))
                out << " via " << report["certificate_recipe"].get<std::string>();
            out << '\n';
            for (const auto& row : report["certificate"]) out << row[0] << ' ' << row[1] << ' ' << row[2] << '\n';
        } else {
            out << "# no edge coloring: cfc is not determined exactly (try --resolve)\n";
        }
        if (report.contains("vertex_certificate")) {
            out << "# vertex coloring (v c)\n";
            for (const auto& row : report["vertex_certificate"]) out << row[0] << ' ' << row[1] << '\n';
        }
    }
    return kOk;
}

int cmd_tree(const std::string& p_list, int ell, const std::string& input, const std::string& format,
             std::ostream& out) {
    Graph t;
    std::vector<long long> labels;
    if (!input.empty()) {
        auto parsed = read_graph(input, format);
        t = parsed.graph;
        labels = parsed.labels;
    } else {
        std::vector<int> p;
        std::stringstream ss(p_list);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) p.push_back(std::stoi(tok));
        t = diam4_tree(p, ell);
        labels = identity_labels(t.order());
    }
    if (!is_tree(t)) throw UnsupportedShape("input is not a tree");
    const int diameter = metrics(t).diameter;
    out << "n=" << t.order() << " diameter=" << diameter << '\n';
    if (diameter == 4) {
        auto f = diam4_formula(t);
        out << "center=" << labels[f.shape.center] << " k=" << f.shape.k() << " l=" << f.shape.ell() << '\n';
        out << "p=";
        for (std::size_t i = 0; i < f.shape.p.size(); ++i) out << (i ? "," : "") << f.shape.p[i];
        out << "\nc=";
        for (std::size_t i = 0; i < f.c.size(); ++i) out << (i ? "," : "") << f.c[i];
        out << "\nb=" << f.b << " d(u)=" << f.shape.center_degree() << '\n';
    } else if (diameter <= 3) {
        out << "max_degree=" << t.max_degree() << '\n';
    }
    const int value = cfc_tree(t);
    out << "cfc=" << value << '\n';
    auto coloring = construct_tree_coloring(t);
    out << "# edge coloring (u v c)\n" << emit_edge_coloring(t, coloring, labels);
    return kOk;
}

int cmd_solve(const std::string& input, const std::string& format, const std::string& mode, int max_colors,
              bool serial, std::ostream& out) {
    auto parsed = read_graph(input, format);
    const auto& g = parsed.graph;
    SolveOptions opts;
    opts.budget = budget_from_env();
    opts.parallel = !serial;
    if (mode == "cfc") {
        int lo = 1;
        try {
            lo = std::max(h_value(g), 1);
        } catch (const UnsupportedShape&) {
        }
        int hi = max_colors > 0 ? max_colors : default_cfc_hi(g);
        auto r = exact_cfc(g, lo, hi, opts);
        if (!r.found) {
            out << "cfc > " << hi << '\n';
            return kOk;
        }
        out << "cfc=" << r.value << '\n'
            << "colorings_examined=" << r.colorings_examined << '\n'
            << "elapsed_seconds=" << r.elapsed.count() << '\n'
            << "# edge coloring (u v c)\n"
            << emit_edge_coloring(g, r.certificate, parsed.labels);
    } else {
        int lo = g.order() >= 2 ? 2 : 1;
        int hi = max_colors > 0 ? max_colors : default_vcfc_hi(g);
        auto r = exact_vcfc(g, lo, hi, opts);
        if (!r.found) {
            out << "vcfc > " << hi << '\n';
            return kOk;
        }
        out << "vcfc=" << r.value << '\n'
            << "colorings_examined=" << r.colorings_examined << '\n'
            << "elapsed_seconds=" << r.elapsed.count() << '\n'
            << "# vertex coloring (v c)\n"
            << emit_vertex_coloring(r.certificate, parsed.labels);
    }
    return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const std::string& format,
               const std::string& mode, std::ostream& out) {
    auto parsed = read_graph(graph_path, format);
    const auto& g = parsed.graph;
    auto text = slurp(coloring_path);
    CheckResult result;
    int colors = 0;
    if (mode == "cfc") {
        auto c = parse_edge_coloring(g, text, parsed.labels);
        colors = color_count(c.colors);
        result = check_cfc_coloring(g, c);
    } else {
        auto c = parse_vertex_coloring(g, text, parsed.labels);
        colors = color_count(c.colors);
        result = check_vcfc_coloring(g, c);
    }
    if (result.ok) {
        out << "PASS " << mode << " coloring with " << colors << " colors\n";
        return kOk;
    }
    auto [u, v] = *result.failing_pair;
    out << "FAIL no conflict-free path between " << parsed.labels[u] << " and " << parsed.labels[v] << '\n';
    return kError;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

int cmd_gen(const std::string& family, const std::vector<int>& params, const std::string& p_list, int ell,
            const std::string& format, const std::string& coloring_path, std::ostream& out) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw Error("gen " + family + " takes " + std::to_string(count) + " integer parameter(s)");
    };
    if (family == "star") {
        need(1);
        out << render_graph(star(params[0]), format);
    } else if (family == "double-star") {
        need(2);
        out << render_graph(double_star(params[0], params[1]), format);
    } else if (family == "diam4-tree") {
        out << render_graph(diam4_tree(parse_int_list(p_list), ell), format);
    } else if (family == "figure1") {
        need(0);
        out << render_graph(figure1_graph(), format);
    } else if (family == "g") {
        need(1);
        auto [g, c] = g_family(params[0]);
        out << render_graph(g, format);
        if (!coloring_path.empty()) {
            std::ofstream f(coloring_path);
            if (!f) throw Error("cannot write " + coloring_path);
            f << emit_edge_coloring(g, c);
        } else {
            out << "# coloring (u v c)\n";
            std::istringstream rows(emit_edge_coloring(g, c));
            std::string row;
            while (std::getline(rows, row)) out << "# " << row << '\n';
        }
    } else if (family == "h") {
        need(1);
        out << render_graph(h_family(params[0]), format);
    } else if (family == "trees" || family == "connected") {
        need(1);
        auto corpus = family == "trees" ? trees(params[0]) : connected_graphs(params[0]);
        for (const auto& g : corpus) out << emit_graph6(g) << '\n';
    } else {
        throw Error("unknown family '" + family +
                    "' (star, double-star, diam4-tree, figure1, g, h, trees, connected)");
    }
    return kOk;
}

json batch_entry(const std::string& line, bool solve) {
    json e;
    e["graph6"] = line;
    try {
        Graph g = parse_graph6(line);
        e["n"] = g.order();
        e["m"] = g.size();
        if (!is_connected(g)) throw DisconnectedError();
        auto m = metrics(g);
        e["diameter"] = m.diameter;
        e["radius"] = m.radius;
        try {
            e["h"] = h_value(g);
        } catch (const UnsupportedShape&) {
            e["h"] = nullptr;
        }
        CfcResult cfc_r;
        bool have_cfc = false;
        try {
            cfc_r = classify_cfc(g);
            e["cfc"] = to_json(cfc_r);
            have_cfc = true;
        } catch (const UnsupportedShape& ex) {
            e["cfc"] = {{"error", ex.what()}};
        }
        auto vcfc_r = classify_vcfc(g);
        e["vcfc"] = to_json(vcfc_r);
        if (solve) {
            SolveOptions opts;
            opts.parallel = false;
            opts.budget = budget_from_env();
            try {
                auto s = exact_cfc(g, 1, default_cfc_hi(g), opts);
                e["solver_cfc"] = s.value;
                if (have_cfc) e["cfc_agrees"] = cfc_r.lo <= s.value && s.value <= cfc_r.hi;
            } catch (const Error& ex) {
                e["solver_cfc_error"] = ex.what();
            }
            try {
                auto s = exact_vcfc(g, 1, default_vcfc_hi(g), opts);
                e["solver_vcfc"] = s.value;
                e["vcfc_agrees"] = vcfc_r.lo <= s.value && s.value <= vcfc_r.hi;
            } catch (const Error& ex) {
                e["solver_vcfc_error"] = ex.what();
            }
        }
    } catch (const Error& ex) {
        e["error"] = ex.what();
    }
    return e;
}

int cmd_batch(const std::string& corpus_path, int jobs, const std::string& report_path, bool solve,
              std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> lines;
    {
        std::istringstream in(slurp(corpus_path));
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            lines.push_back(line);
        }
    }
    const long long count = static_cast<long long>(lines.size());
    std::vector<json> entries(lines.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < count; ++i) entries[i] = batch_entry(lines[i], solve);

    json summary = {{"graphs", count}, {"errors", 0}, {"cfc_checked", 0}, {"cfc_disagreements", 0},
                    {"vcfc_checked", 0}, {"vcfc_disagreements", 0}};
    json disagreements = json::array();
    json results = json::array();
    for (long long i = 0; i < count; ++i) {
        auto& e = entries[i];
        e["index"] = i;
        if (e.contains("error")) summary["errors"] = summary["errors"].get<int>() + 1;
        for (const char* kind : {"cfc", "vcfc"}) {
            std::string key = std::string(kind) + "_agrees";
            if (!e.contains(key)) continue;
            summary[std::string(kind) + "_checked"] = summary[std::string(kind) + "_checked"].get<int>() + 1;
            if (!e[key].get<bool>()) {
                summary[std::string(kind) + "_disagreements"] =
                    summary[std::string(kind) + "_disagreements"].get<int>() + 1;
                disagreements.push_back({{"index", i}, {"kind", kind}});
            }
        }
        results.push_back(std::move(e));
    }
    summary["disagreement_list"] = disagreements;
    json report = {{"summary", summary}, {"results", results}};
    report["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw Error("cannot write " + report_path);
        f << report.dump(2) << '\n';
    }
    out << "graphs=" << count << " errors=" << summary["errors"] << " cfc_disagreements="
        << summary["cfc_disagreements"] << " vcfc_disagreements=" << summary["vcfc_disagreements"] << '\n';
    return kOk;
}

}  // namespace

ParsedGraph read_graph(const std::string& path, const std::string& format) {
    auto text = slurp(path);
    bool g6 = format == "graph6" || (format == "auto" && looks_like_graph6(text));
    if (format != "graph6" && format != "edgelist" && format != "auto") throw Error("unknown format " + format);
    if (!g6) return parse_edge_list(text);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        ParsedGraph p;
        p.graph = parse_graph6(line);
        p.labels = identity_labels(p.graph.order());
        return p;
    }
    throw Error("no graph6 line in " + path);
}

json to_json(const CfcResult& r) {
    return {{"lo", r.lo}, {"hi", r.hi}, {"method", std::string(to_string(r.method))}, {"notes", r.notes}};
}

json analysis_json(const Graph& g, const std::vector<long long>& labels, bool resolve, bool with_certificate) {
    auto m = metrics(g);
    json report;
    report["n"] = g.order();
    report["m"] = g.size();
    report["diameter"] = m.diameter;
    report["radius"] = m.radius;
    try {
        report["h"] = h_value(g);
    } catch (const UnsupportedShape&) {
        report["h"] = nullptr;
    }
    ClassifyOptions opts;
    opts.resolve = resolve;
    opts.solver.budget = budget_from_env();
    auto cfc_r = classify_cfc(g, opts);
    auto vcfc_r = classify_vcfc(g);
    report["cfc"] = to_json(cfc_r);
    report["vcfc"] = to_json(vcfc_r);
    if (!with_certificate) return report;

    std::optional<std::vector<int>> edge_colors = cfc_r.certificate;
    if (edge_colors) {
        report["certificate_recipe"] = "exact solver";
    } else if (cfc_r.exact()) {
        auto built = construct_cfc_coloring(g, opts.solver);
        edge_colors = built.coloring.colors;
        report["certificate_recipe"] = built.recipe;
    }
    if (edge_colors) {
        json rows = json::array();
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            rows.push_back({labels[g.edges()[i].u], labels[g.edges()[i].v], (*edge_colors)[i]});
        report["certificate"] = rows;
    }
    if (vcfc_r.exact()) {
        auto built = construct_vcfc_coloring(g, opts.solver);
        json rows = json::array();
        for (int v = 0; v < g.order(); ++v) rows.push_back({labels[v], built.coloring.colors[v]});
        report["vertex_certificate"] = rows;
        report["vertex_certificate_recipe"] = built.recipe;
    }
    return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<char*> argv;
    std::vector<std::string> storage{"cfc"};
    storage.insert(storage.end(), args.begin(), args.end());
    for (auto& a : storage) argv.push_back(a.data());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conflict-free (vertex-)connection numbers of small-diameter graphs"};
    app.require_subcommand(1);

    std::string input, format = "auto", mode = "cfc", coloring, report_path, p_list, family;
    bool resolve = false, certificate = false, as_json = false, as_dot = false, serial = false, solve = false;
    int ell = 0, max_colors = 0, jobs = 0;
    std::vector<int> params;

    auto* analyze = app.add_subcommand("analyze", "Classify cfc and vcfc of a graph");
    analyze->add_option("input", input, "Graph file ('-' for stdin)")->required();
    analyze->add_option("--format", format, "edgelist, graph6 or auto")
        ->check(CLI::IsMember({"edgelist", "graph6", "auto"}));
    analyze->add_flag("--resolve", resolve, "Settle intervals with the exact solver");
    analyze->add_flag("--certificate", certificate, "Print colorings achieving the values");
    auto* json_flag = analyze->add_flag("--json", as_json, "Emit the JSON report");
    analyze->add_flag("--dot", as_dot, "Emit DOT with the edge coloring")->excludes(json_flag);

    auto* tree = app.add_subcommand("tree", "cfc of a tree of diameter <= 4, with its optimal coloring");
    tree->add_option("--p", p_list, "Branch degrees p1,p2,... of a diameter-4 tree");
    tree->add_option("--l", ell, "Pendant neighbors of the center");
    tree->add_option("input", input, "Tree file instead of --p/--l");
    tree->add_option("--format", format, "edgelist, graph6 or auto");

    auto* solve_cmd = app.add_subcommand("solve", "Exact cfc or vcfc by exhaustive search");
    solve_cmd->add_option("input", input, "Graph file")->required();
    solve_cmd->add_option("--format", format, "edgelist, graph6 or auto");
    solve_cmd->add_option("--mode", mode, "cfc or vcfc")->check(CLI::IsMember({"cfc", "vcfc"}));
    solve_cmd->add_option("--max-colors", max_colors, "Give up above this many colors");
    solve_cmd->add_flag("--serial", serial, "Single-threaded search");

    auto* verify = app.add_subcommand("verify", "Check a coloring; exit 0 on pass, 1 on fail");
    verify->add_option("graph", input, "Graph file")->required();
    verify->add_option("coloring", coloring, "Coloring file: 'u v c' or 'v c' lines")->required();
    verify->add_option("--format", format, "edgelist, graph6 or auto");
    verify->add_option("--mode", mode, "cfc or vcfc")->check(CLI::IsMember({"cfc", "vcfc"}));

    auto* gen = app.add_subcommand("gen", "Write a named graph or a corpus");
    gen->add_option("family", family, "star, double-star, diam4-tree, figure1, g, h, trees, connected")->required();
    gen->add_option("params", params, "Integer parameters");
    gen->add_option("--p", p_list, "Branch degrees for diam4-tree");
    gen->add_option("--l", ell, "Center pendants for diam4-tree");
    std::string gen_format = "edgelist";
    gen->add_option("--format", gen_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
    gen->add_option("--coloring", coloring, "Write the family coloring here (g family)");

    auto* batch = app.add_subcommand("batch", "Classify every graph6 line of a corpus");
    batch->add_option("corpus", input, "File of graph6 lines")->required();
    batch->add_option("--jobs", jobs, "Worker threads");
    batch->add_option("--report", report_path, "Write the JSON report here");
    batch->add_flag("--solve", solve, "Also run the exact solver and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*analyze) return cmd_analyze(input, format, resolve, certificate, as_json, as_dot, out);
        if (*tree) return cmd_tree(p_list, ell, input, format, out);
        if (*solve_cmd) return cmd_solve(input, format, mode, max_colors, serial, out);
        if (*verify) return cmd_verify(input, coloring, format, mode, out);
        if (*gen) return cmd_gen(family, params, p_list, ell, gen_format, coloring, out);
        if (*batch) return cmd_batch(input, jobs, report_path, solve, out);
    } catch (const UnsupportedShape& e) {
        err << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << " (proven >= " << e.proven_lo() << ")\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace cfc::cli
