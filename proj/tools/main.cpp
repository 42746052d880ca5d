// Command-line surface for the inducibility library: closed-form values for
// complete multipartite targets, density-polynomial generation and
// optimization over the simplex, brute-force oracles, blowups,
// symmetrization traces, and structural checks.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inducibility/inducibility.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitConjectural = 3;
constexpr int kExitNonconvergence = 4;

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t seed = 0;
    int threads = 1;
};

std::string frac(const ind::BigRational& q) { return ind::to_fraction_string(q); }

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

ordered_json graph_json(const ind::Graph& g) {
    ordered_json edges = ordered_json::array();
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) edges.push_back({u, v});
    return ordered_json{{"n", g.n()}, {"edges", edges}};
}

void emit_json(const std::string& command, const ordered_json& result) {
    ordered_json envelope;
    envelope["command"] = command;
    envelope["format"] = "json";
    envelope["result"] = result;
    std::cout << envelope.dump(2) << "\n";
}

std::vector<ind::BigRational> parse_point(const std::string& text) {
    std::vector<ind::BigRational> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find('/') != std::string::npos) {
            coords.push_back(ind::parse_rational(item));
        } else {
            try {
                size_t pos = 0;
                const double v = std::stod(item, &pos);
                coords.push_back(ind::rational_from_double(v));
            } catch (const std::exception&) {
                throw ind::domain_error("point: malformed coordinate '" + item + "'");
            }
        }
    }
    if (coords.empty()) throw ind::domain_error("point: empty coordinate list");
    return coords;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
        } catch (const std::exception&) {
            throw ind::domain_error(std::string(what) + ": malformed entry '" + item + "'");
        }
    }
    if (out.empty()) throw ind::domain_error(std::string(what) + ": empty list");
    return out;
}

// ----- turan -----

ordered_json turan_result_json(const ind::TuranResult& res) {
    ordered_json j;
    j["s"] = res.s;
    j["r"] = res.r;
    if (res.k) j["k"] = *res.k;
    if (res.t_infinite)
        j["t"] = "infinity";
    else
        j["t"] = res.t;
    j["parts_used"] = res.parts_used;
    j["attained"] = res.attained;
    j["value"] = frac(res.value);
    j["value_float"] = ind::to_double(res.value);
    ordered_json w = ordered_json::array();
    for (const auto& g : res.graphon) w.push_back(frac(g));
    j["graphon"] = w;
    j["certificate"] = ind::certificate_name(res.certificate);
    return j;
}

void print_turan_text(const ind::TuranResult& res) {
    std::cout << "s: " << res.s << "\n";
    std::cout << "r: " << res.r << "\n";
    if (res.k) std::cout << "k: " << *res.k << "\n";
    std::cout << "t: " << (res.t_infinite ? std::string("infinity") : std::to_string(res.t))
              << "\n";
    std::cout << "parts_used: " << res.parts_used << "\n";
    std::cout << "attained: " << (res.attained ? "true" : "false") << "\n";
    std::cout << "value: " << frac(res.value) << " (" << fmt_double(ind::to_double(res.value))
              << ")\n";
    std::cout << "graphon:";
    for (const auto& g : res.graphon) std::cout << " " << frac(g);
    std::cout << "\n";
    std::cout << "certificate: " << ind::certificate_name(res.certificate) << "\n";
}

int run_turan(const GlobalOpts& global, int s, int r, std::optional<int> k,
              const std::string& cliques) {
    ind::TuranResult res;
    if (!cliques.empty()) {
        res = ind::inducibility_clique_union(parse_int_list(cliques, "cliques"));
    } else {
        res = ind::inducibility_turan(s, r, k);
    }
    if (global.format == "json")
        emit_json("turan", turan_result_json(res));
    else
        print_turan_text(res);
    return res.proven() ? kExitOk : kExitConjectural;
}

// ----- table14 -----

int run_table14(const GlobalOpts& global) {
    if (global.format == "csv") {
        std::cout << ind::table14_csv();
        return kExitOk;
    }
    const auto rows = ind::table14();
    if (global.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) arr.push_back(turan_result_json(row));
        emit_json("table14", ordered_json{{"rows", arr}});
        return kExitOk;
    }
    std::cout << std::left << std::setw(4) << "s" << std::setw(4) << "r" << std::setw(5) << "t"
              << std::setw(50) << "value" << "certificate\n";
    for (const auto& row : rows) {
        std::cout << std::left << std::setw(4) << row.s << std::setw(4) << row.r << std::setw(5)
                  << row.t << std::setw(50) << frac(row.value)
                  << ind::certificate_name(row.certificate) << "\n";
    }
    return kExitOk;
}

// ----- poly -----

int run_poly(const GlobalOpts& global, const std::string& parts, int m,
             const std::string& point_text) {
    const ind::PartiteProfile profile = ind::PartiteProfile::parse(parts);
    const ind::DensityPolynomial poly = ind::density_polynomial(profile, m);
    const auto monomials = poly.expanded();
    std::optional<ind::BigRational> value;
    std::optional<double> value_float;
    if (!point_text.empty()) {
        const auto coords = parse_point(point_text);
        const ind::SimplexPoint point = ind::SimplexPoint::from_exact(coords);
        value = poly.evaluate_exact(point);
        value_float = ind::to_double(*value);
    }
    if (global.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [e, c] : monomials) {
            ordered_json mono;
            mono["coeff"] = c.str();
            mono["exponents"] = e;
            arr.push_back(mono);
        }
        ordered_json result;
        result["parts"] = profile.to_string();
        result["m"] = m;
        result["degree"] = poly.degree();
        result["zero"] = poly.is_zero();
        result["monomials"] = arr;
        if (value) {
            result["value"] = frac(*value);
            result["value_float"] = *value_float;
        }
        emit_json("poly", result);
        return kExitOk;
    }
    const char sep = (global.format == "csv") ? ',' : ' ';
    for (const auto& [e, c] : monomials) {
        std::cout << c.str();
        for (int exp : e) std::cout << sep << exp;
        std::cout << "\n";
    }
    if (value)
        std::cout << "value: " << frac(*value) << " (" << fmt_double(*value_float) << ")\n";
    return kExitOk;
}

// ----- opt / limit / check distinct-parts share optimizer plumbing -----

ordered_json report_json(const ind::OptimizationReport& rep) {
    ordered_json j;
    j["value"] = rep.value;
    if (rep.exact_value) j["exact"] = frac(*rep.exact_value);
    j["point"] = rep.point;
    if (rep.exact_point) {
        ordered_json pts = ordered_json::array();
        for (const auto& c : *rep.exact_point) pts.push_back(frac(c));
        j["exact_point"] = pts;
    }
    j["restarts_used"] = rep.restarts_used;
    j["iterations"] = rep.iterations;
    j["projected_gradient_norm"] = rep.projected_gradient_norm;
    j["stationary"] = rep.stationary;
    return j;
}

void print_report_text(const ind::OptimizationReport& rep) {
    std::cout << "value: " << fmt_double(rep.value) << "\n";
    if (rep.exact_value) std::cout << "exact: " << frac(*rep.exact_value) << "\n";
    std::cout << "point:";
    for (double x : rep.point) std::cout << " " << fmt_double(x);
    std::cout << "\n";
    if (rep.exact_point) {
        std::cout << "exact_point:";
        for (const auto& c : *rep.exact_point) std::cout << " " << frac(c);
        std::cout << "\n";
    }
    std::cout << "restarts_used: " << rep.restarts_used << "\n";
    std::cout << "iterations: " << rep.iterations << "\n";
    std::cout << "projected_gradient_norm: " << fmt_double(rep.projected_gradient_norm) << "\n";
    std::cout << "stationary: " << (rep.stationary ? "true" : "false") << "\n";
}

int run_opt(const GlobalOpts& global, const std::string& parts, int k,
            const ind::OptimizerConfig& cfg) {
    const ind::PartiteProfile profile = ind::PartiteProfile::parse(parts);
    try {
        const ind::OptimizationReport rep = ind::inducibility_partite(profile, k, cfg);
        if (global.format == "json")
            emit_json("opt", report_json(rep));
        else
            print_report_text(rep);
        return kExitOk;
    } catch (const ind::nonconvergence_error& e) {
        if (global.format == "json") {
            ordered_json result = report_json(e.report);
            result["error"] = e.what();
            emit_json("opt", result);
        } else {
            std::cout << "error: " << e.what() << "\n";
            print_report_text(e.report);
        }
        return kExitNonconvergence;
    }
}

int run_limit(const GlobalOpts& global, const std::string& parts, int m_max,
              const ind::OptimizerConfig& cfg) {
    const ind::PartiteProfile profile = ind::PartiteProfile::parse(parts);
    const ind::LimitResult res = ind::inducibility_limit(profile, m_max, cfg);
    if (global.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& e : res.entries) {
            ordered_json row;
            row["m"] = e.m;
            row["value"] = e.value;
            if (e.exact) row["exact"] = frac(*e.exact);
            rows.push_back(row);
        }
        ordered_json result;
        result["parts"] = profile.to_string();
        result["entries"] = rows;
        if (res.stabilized_at) result["stabilized_at"] = *res.stabilized_at;
        result["non_attainment_warning"] = res.non_attainment_warning;
        emit_json("limit", result);
        return kExitOk;
    }
    if (global.format == "csv") {
        std::cout << "m,value,exact\n";
        for (const auto& e : res.entries) {
            std::cout << e.m << "," << fmt_double(e.value) << ","
                      << (e.exact ? frac(*e.exact) : std::string()) << "\n";
        }
        return kExitOk;
    }
    for (const auto& e : res.entries) {
        std::cout << "m=" << e.m << " value=" << fmt_double(e.value);
        if (e.exact) std::cout << " exact=" << frac(*e.exact);
        std::cout << "\n";
    }
    if (res.stabilized_at) std::cout << "stabilized_at: " << *res.stabilized_at << "\n";
    if (res.non_attainment_warning)
        std::cout << "warning: profile has two singleton parts; the supremum may not be "
                     "attained at any finite part count\n";
    return kExitOk;
}

// ----- oracle -----

int run_oracle(const GlobalOpts& global, const std::string& parts, const std::string& graph_file,
               int n, std::optional<int> forbid_k, bool multipartite, int max_parts) {
    ind::Graph target(1);
    std::optional<ind::PartiteProfile> profile;
    if (!parts.empty()) {
        profile = ind::PartiteProfile::parse(parts);
        target = ind::complete_multipartite(*profile);
    } else if (!graph_file.empty()) {
        target = ind::read_graph_file(graph_file);
    } else {
        throw ind::domain_error("oracle: need --parts or --graph");
    }
    ind::OracleResult res;
    if (multipartite) {
        if (!profile)
            throw ind::domain_error("oracle: --multipartite requires a --parts target");
        const int cap = max_parts > 0 ? max_parts : n;
        res = ind::max_over_multipartite(*profile, n, cap);
    } else {
        res = ind::max_over_all_graphs(target, n, forbid_k, global.threads);
    }
    if (global.format == "json") {
        ordered_json result;
        result["density"] = frac(res.density);
        result["density_float"] = ind::to_double(res.density);
        result["witness"] = graph_json(res.witness);
        result["graphs_examined"] = res.graphs_examined;
        result["constraint"] = res.constraint;
        emit_json("oracle", result);
        return kExitOk;
    }
    std::cout << "density: " << frac(res.density) << " ("
              << fmt_double(ind::to_double(res.density)) << ")\n";
    std::cout << "graphs_examined: " << res.graphs_examined << "\n";
    std::cout << "constraint: " << res.constraint << "\n";
    std::cout << "witness:\n" << ind::graph_to_string(res.witness);
    return kExitOk;
}

// ----- blowup -----

int run_blowup(const GlobalOpts& global, const std::string& parts, const std::string& graph_file,
               int depth, const std::string& sizes_text) {
    ind::Graph f(1);
    if (!parts.empty())
        f = ind::complete_multipartite(ind::PartiteProfile::parse(parts));
    else if (!graph_file.empty())
        f = ind::read_graph_file(graph_file);
    else
        throw ind::domain_error("blowup: need --parts or --graph");
    ind::Graph result(1);
    bool nested = false;
    if (!sizes_text.empty()) {
        result = ind::blowup(f, parse_int_list(sizes_text, "sizes"));
    } else {
        nested = true;
        result = ind::nested_blowup(f, depth);
    }
    // Count induced copies of the base in the result when affordable.
    std::optional<ind::BigInt> count;
    std::optional<ind::BigRational> density;
    if (ind::binomial(result.n(), f.n()) <= 2'000'000) {
        count = ind::count_induced(f, result);
        density = ind::BigRational(*count, ind::binomial(result.n(), f.n()));
    }
    std::optional<ind::BigRational> bound;       // nested-blowup copy lower bound
    std::optional<ind::BigRational> limit_value; // generic inducibility lower bound
    if (nested) {
        const int r = f.n();
        if (r >= 2) {
            const ind::BigInt rb(r);
            ind::BigInt numerator = ind::int_pow(rb, depth - 1) *
                                    (ind::int_pow(rb, depth * (r - 1)) - 1);
            ind::BigInt denominator = ind::int_pow(rb, r - 1) - 1;
            bound = ind::BigRational(numerator, denominator);
            limit_value = ind::generic_lower_bound(r);
        }
    }
    if (global.format == "json") {
        ordered_json result_json;
        result_json["base"] = graph_json(f);
        if (nested) result_json["depth"] = depth;
        result_json["graph"] = graph_json(result);
        result_json["n"] = result.n();
        result_json["edges"] = result.edge_count();
        if (count) result_json["count"] = count->str();
        if (density) {
            result_json["density"] = frac(*density);
            result_json["density_float"] = ind::to_double(*density);
        }
        if (bound) result_json["copy_lower_bound"] = frac(*bound);
        if (limit_value) {
            result_json["limit_lower_bound"] = frac(*limit_value);
            result_json["limit_lower_bound_float"] = ind::to_double(*limit_value);
        }
        emit_json("blowup", result_json);
        return kExitOk;
    }
    std::cout << "n: " << result.n() << "\n";
    std::cout << "edges: " << result.edge_count() << "\n";
    if (count) std::cout << "count: " << count->str() << "\n";
    if (density)
        std::cout << "density: " << frac(*density) << " ("
                  << fmt_double(ind::to_double(*density)) << ")\n";
    if (bound) std::cout << "copy_lower_bound: " << frac(*bound) << "\n";
    if (limit_value)
        std::cout << "limit_lower_bound: " << frac(*limit_value) << " ("
                  << fmt_double(ind::to_double(*limit_value)) << ")\n";
    std::cout << "graph:\n" << ind::graph_to_string(result);
    return kExitOk;
}

// ----- symmetrize -----

int run_symmetrize(const GlobalOpts& global, const std::string& graph_file,
                   const std::string& family_files, const std::string& target_parts) {
    const ind::Graph g = ind::read_graph_file(graph_file);
    std::vector<ind::Graph> family;
    if (!target_parts.empty()) {
        family.push_back(ind::complete_multipartite(ind::PartiteProfile::parse(target_parts)));
    } else if (!family_files.empty()) {
        std::stringstream ss(family_files);
        std::string item;
        while (std::getline(ss, item, ',')) family.push_back(ind::read_graph_file(item));
    } else {
        throw ind::domain_error("symmetrize: need --family or --target-parts");
    }
    const ind::SymmetrizationTrace trace = ind::symmetrize_to_multipartite(g, family);
    const ind::ColoringStats before = ind::coloring_stats(trace.initial);
    const ind::ColoringStats after = ind::coloring_stats(trace.result);
    if (global.format == "json") {
        ordered_json steps = ordered_json::array();
        for (const auto& st : trace.steps) {
            ordered_json row;
            row["target"] = st.target;
            row["source"] = st.source;
            row["absorption"] = st.absorption;
            row["count_before"] = st.count_before.str();
            row["count_after"] = st.count_after.str();
            steps.push_back(row);
        }
        ordered_json result;
        result["initial_count"] = trace.initial_count.str();
        result["final_count"] = trace.final_count.str();
        result["steps"] = steps;
        result["final_profile"] =
            trace.final_profile ? trace.final_profile->to_string() : std::string();
        result["clique_number_before"] = before.omega;
        result["clique_number_after"] = after.omega;
        result["graph"] = graph_json(trace.result);
        emit_json("symmetrize", result);
        return kExitOk;
    }
    std::cout << "initial_count: " << trace.initial_count.str() << "\n";
    for (const auto& st : trace.steps) {
        std::cout << (st.absorption ? "absorb" : "clone") << " " << st.source << " -> "
                  << st.target << " count " << st.count_before.str() << " -> "
                  << st.count_after.str() << "\n";
    }
    std::cout << "final_count: " << trace.final_count.str() << "\n";
    std::cout << "final_profile: "
              << (trace.final_profile ? trace.final_profile->to_string() : std::string("?"))
              << "\n";
    std::cout << "clique_number: " << before.omega << " -> " << after.omega << "\n";
    std::cout << "graph:\n" << ind::graph_to_string(trace.result);
    return kExitOk;
}

// ----- check -----

int run_check_strongly_unbalanced(const GlobalOpts& global, const std::string& parts) {
    const ind::PartiteProfile profile = ind::PartiteProfile::parse(parts);
    const bool verdict = ind::is_strongly_unbalanced(profile);
    const auto witness = ind::strongly_unbalanced_witness(profile);
    if (global.format == "json") {
        ordered_json result;
        result["check"] = "strongly-unbalanced";
        result["parts"] = profile.to_string();
        result["verdict"] = verdict;
        if (witness) result["witness"] = ordered_json{witness->first, witness->second};
        emit_json("check", result);
        return kExitOk;
    }
    std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
    if (witness)
        std::cout << "witness: sizes " << witness->first << " and " << witness->second
                  << " violate the squared-gap condition\n";
    return kExitOk;
}

int run_check_robust(const GlobalOpts& global, const std::string& graph_file) {
    const ind::Graph f = ind::read_graph_file(graph_file);
    const auto partition = ind::fuzzy_blowup_partition(f);
    const bool verdict = !partition.has_value();
    if (global.format == "json") {
        ordered_json result;
        result["check"] = "robust";
        result["verdict"] = verdict;
        if (partition) result["witness_partition"] = *partition;
        emit_json("check", result);
        return kExitOk;
    }
    std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
    if (partition) {
        std::cout << "witness_partition:";
        for (int p : *partition) std::cout << " " << p;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_check_symmetrizable(const GlobalOpts& global, const std::string& family_files) {
    std::vector<ind::Graph> family;
    std::stringstream ss(family_files);
    std::string item;
    while (std::getline(ss, item, ',')) family.push_back(ind::read_graph_file(item));
    if (family.empty()) throw ind::domain_error("check symmetrizable: empty family");
    const auto witness = ind::symmetrizable_witness(family);
    const bool verdict = !witness.has_value();
    if (global.format == "json") {
        ordered_json result;
        result["check"] = "symmetrizable";
        result["verdict"] = verdict;
        if (witness) {
            result["witness"] = ordered_json{{"member", std::get<0>(*witness)},
                                             {"target", std::get<1>(*witness)},
                                             {"source", std::get<2>(*witness)}};
        }
        emit_json("check", result);
        return kExitOk;
    }
    std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
    if (witness)
        std::cout << "witness: member " << std::get<0>(*witness) << ", cloning vertex "
                  << std::get<2>(*witness) << " onto " << std::get<1>(*witness)
                  << " leaves the family\n";
    return kExitOk;
}

int run_check_bs_condition(const GlobalOpts& global, int s, int r) {
    const bool verdict = ind::bs_condition(s, r);
    if (global.format == "json") {
        ordered_json result;
        result["check"] = "bs-condition";
        result["s"] = s;
        result["r"] = r;
        result["verdict"] = verdict;
        emit_json("check", result);
        return kExitOk;
    }
    std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
    return kExitOk;
}

int run_check_distinct_parts(const GlobalOpts& global, const std::string& parts, int k,
                             double separation, const ind::OptimizerConfig& cfg) {
    const ind::PartiteProfile profile = ind::PartiteProfile::parse(parts);
    const ind::DistinctPartsResult res = ind::check_distinct_parts(profile, k, separation, cfg);
    if (global.format == "json") {
        ordered_json result;
        result["check"] = "distinct-parts";
        result["parts"] = profile.to_string();
        result["k"] = k;
        result["separation"] = separation;
        result["verdict"] = res.distinct;
        result["report"] = report_json(res.report);
        emit_json("check", result);
        return kExitOk;
    }
    std::cout << "verdict: " << (res.distinct ? "true" : "false") << "\n";
    print_report_text(res.report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact inducibility calculator for complete multipartite targets"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Random seed for optimizer restarts")
        ->capture_default_str();
    app.add_option("--threads", global.threads, "Worker threads for restarts and oracles")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // turan
    auto* cmd_turan = app.add_subcommand(
        "turan", "Closed-form inducibility of a balanced complete multipartite target");
    int t_s = 0, t_r = 0, t_k = 0;
    std::string t_cliques;
    auto* opt_s = cmd_turan->add_option("--s", t_s, "Vertex count of the target");
    auto* opt_r = cmd_turan->add_option("--r", t_r, "Part count of the target");
    auto* opt_k = cmd_turan->add_option("--k", t_k, "Forbidden clique size (omit for the limit)");
    auto* opt_cl = cmd_turan->add_option(
        "--cliques", t_cliques, "Clique sizes of a disjoint clique union (complement route)");
    opt_cl->excludes(opt_s)->excludes(opt_r)->excludes(opt_k);
    opt_s->needs(opt_r);

    // table14
    auto* cmd_table = app.add_subcommand(
        "table14", "All closed-form rows for targets up to 14 vertices");

    // poly
    auto* cmd_poly =
        app.add_subcommand("poly", "Induced-density polynomial of a multipartite target");
    std::string p_parts, p_point;
    int p_m = 0;
    cmd_poly->add_option("--parts", p_parts, "Part sizes, e.g. 2,1,1")->required();
    cmd_poly->add_option("--m", p_m, "Number of weight coordinates")->required();
    cmd_poly->add_option("--point", p_point, "Evaluate at these exact coordinates, e.g. 1/3,1/3,1/3");

    // opt
    auto* cmd_opt =
        app.add_subcommand("opt", "Maximize the density polynomial over the simplex");
    std::string o_parts;
    int o_k = 0;
    ind::OptimizerConfig base_cfg;
    int o_restarts = base_cfg.restarts;
    int o_max_iters = base_cfg.max_iterations;
    double o_tol = base_cfg.gradient_tolerance;
    double o_merge = base_cfg.merge_threshold;
    cmd_opt->add_option("--parts", o_parts, "Part sizes of the target")->required();
    cmd_opt->add_option("--k", o_k, "Forbidden clique size; optimizes over k-1 coordinates")
        ->required();
    cmd_opt->add_option("--restarts", o_restarts, "Multi-start count")->capture_default_str();
    cmd_opt->add_option("--max-iters", o_max_iters, "Gradient iterations per start")
        ->capture_default_str();
    cmd_opt->add_option("--tol", o_tol, "Projected-gradient stationarity tolerance")
        ->capture_default_str();
    cmd_opt->add_option("--merge-threshold", o_merge, "Coordinate merge threshold")
        ->capture_default_str();

    // limit
    auto* cmd_limit = app.add_subcommand(
        "limit", "Optimal values for increasing coordinate counts, toward the limit");
    std::string l_parts;
    int l_m_max = 0;
    cmd_limit->add_option("--parts", l_parts, "Part sizes of the target")->required();
    cmd_limit->add_option("--m-max", l_m_max, "Largest coordinate count")->required();
    int l_restarts = base_cfg.restarts;
    cmd_limit->add_option("--restarts", l_restarts, "Multi-start count per m")
        ->capture_default_str();

    // oracle
    auto* cmd_oracle =
        app.add_subcommand("oracle", "Brute-force maximum induced density on finite hosts");
    std::string or_parts, or_graph;
    int or_n = 0, or_forbid = 0, or_max_parts = 0;
    bool or_multipartite = false;
    auto* or_parts_opt = cmd_oracle->add_option("--parts", or_parts, "Multipartite target");
    auto* or_graph_opt = cmd_oracle->add_option("--graph", or_graph, "Target graph file");
    or_graph_opt->excludes(or_parts_opt);
    cmd_oracle->add_option("--n", or_n, "Host vertex count")->required();
    auto* or_forbid_opt =
        cmd_oracle->add_option("--forbid-k", or_forbid, "Restrict hosts to clique-free graphs");
    cmd_oracle->add_flag("--multipartite", or_multipartite,
                         "Search complete multipartite hosts only (exact counting)");
    cmd_oracle->add_option("--max-parts", or_max_parts,
                           "Host part-count cap for --multipartite");

    // blowup
    auto* cmd_blowup = app.add_subcommand("blowup", "Blow up a graph (nested or by sizes)");
    std::string b_parts, b_graph, b_sizes;
    int b_depth = 1;
    auto* b_parts_opt = cmd_blowup->add_option("--parts", b_parts, "Multipartite base");
    auto* b_graph_opt = cmd_blowup->add_option("--graph", b_graph, "Base graph file");
    b_graph_opt->excludes(b_parts_opt);
    auto* b_depth_opt =
        cmd_blowup->add_option("--depth", b_depth, "Nested self-substitution depth");
    auto* b_sizes_opt =
        cmd_blowup->add_option("--sizes", b_sizes, "One-shot blowup sizes, one per vertex");
    b_sizes_opt->excludes(b_depth_opt);

    // symmetrize
    auto* cmd_sym = app.add_subcommand(
        "symmetrize", "Symmetrize a graph to complete multipartite, tracing copy counts");
    std::string s_graph, s_family, s_target_parts;
    cmd_sym->add_option("--graph", s_graph, "Input graph file")->required();
    auto* s_family_opt = cmd_sym->add_option(
        "--family", s_family, "Comma-separated target family graph files");
    auto* s_target_opt = cmd_sym->add_option(
        "--target-parts", s_target_parts, "Multipartite target profile (singleton family)");
    s_target_opt->excludes(s_family_opt);

    // check
    auto* cmd_check = app.add_subcommand("check", "Structural predicates");
    cmd_check->require_subcommand(1);
    auto* chk_su = cmd_check->add_subcommand(
        "strongly-unbalanced", "Pairwise squared gaps exceed pairwise sums");
    std::string c_su_parts;
    chk_su->add_option("--parts", c_su_parts, "Part sizes")->required();
    auto* chk_robust =
        cmd_check->add_subcommand("robust", "No fuzzy blowup structure exists");
    std::string c_robust_graph;
    chk_robust->add_option("--graph", c_robust_graph, "Graph file")->required();
    auto* chk_symm = cmd_check->add_subcommand(
        "symmetrizable", "Family closed under neighborhood cloning");
    std::string c_symm_family;
    chk_symm->add_option("--family", c_symm_family, "Comma-separated graph files")->required();
    auto* chk_bs = cmd_check->add_subcommand(
        "bs-condition", "Sufficient-growth inequality for unbalanced rows");
    int c_bs_s = 0, c_bs_r = 0;
    chk_bs->add_option("--s", c_bs_s, "Vertex count")->required();
    chk_bs->add_option("--r", c_bs_r, "Part count")->required();
    auto* chk_dp = cmd_check->add_subcommand(
        "distinct-parts", "Optimal weights pairwise separated for strongly unbalanced targets");
    std::string c_dp_parts;
    int c_dp_k = 0;
    double c_dp_sep = 1e-3;
    chk_dp->add_option("--parts", c_dp_parts, "Part sizes")->required();
    chk_dp->add_option("--k", c_dp_k, "Forbidden clique size")->required();
    chk_dp->add_option("--separation", c_dp_sep, "Minimum pairwise gap")->capture_default_str();

    // Let global flags appear after the subcommand as well.
    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomain;
    }

    ind::OptimizerConfig cfg;
    cfg.restarts = o_restarts;
    cfg.max_iterations = o_max_iters;
    cfg.gradient_tolerance = o_tol;
    cfg.merge_threshold = o_merge;
    cfg.seed = global.seed;
    cfg.threads = global.threads;

    try {
        if (cmd_turan->parsed()) {
            if (t_cliques.empty() && (opt_s->count() == 0 || opt_r->count() == 0))
                throw ind::domain_error("turan: need --s and --r (or --cliques)");
            std::optional<int> k;
            if (opt_k->count() > 0) k = t_k;
            return run_turan(global, t_s, t_r, k, t_cliques);
        }
        if (cmd_table->parsed()) return run_table14(global);
        if (cmd_poly->parsed()) return run_poly(global, p_parts, p_m, p_point);
        if (cmd_opt->parsed()) return run_opt(global, o_parts, o_k, cfg);
        if (cmd_limit->parsed()) {
            cfg.restarts = l_restarts;
            return run_limit(global, l_parts, l_m_max, cfg);
        }
        if (cmd_oracle->parsed()) {
            std::optional<int> forbid;
            if (or_forbid_opt->count() > 0) forbid = or_forbid;
            return run_oracle(global, or_parts, or_graph, or_n, forbid, or_multipartite,
                              or_max_parts);
        }
        if (cmd_blowup->parsed()) return run_blowup(global, b_parts, b_graph, b_depth, b_sizes);
        if (cmd_sym->parsed()) return run_symmetrize(global, s_graph, s_family, s_target_parts);
        if (cmd_check->parsed()) {
            if (chk_su->parsed()) return run_check_strongly_unbalanced(global, c_su_parts);
            if (chk_robust->parsed()) return run_check_robust(global, c_robust_graph);
            if (chk_symm->parsed()) return run_check_symmetrizable(global, c_symm_family);
            if (chk_bs->parsed()) return run_check_bs_condition(global, c_bs_s, c_bs_r);
            if (chk_dp->parsed())
                return run_check_distinct_parts(global, c_dp_parts, c_dp_k, c_dp_sep, cfg);
        }
        throw ind::domain_error("no subcommand given");
    } catch (const ind::nonconvergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonconvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
