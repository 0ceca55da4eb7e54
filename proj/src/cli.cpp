#include "bsc/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bsc/designs.hpp"
#include "bsc/graphs.hpp"
#include "bsc/io.hpp"
#include "bsc/mc.hpp"
#include "bsc/pipeline.hpp"
#include "bsc/repr.hpp"
#include "bsc/spectral.hpp"
#include "bsc/verify.hpp"

namespace bsc {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group, left, right, connection, graph, design, kind = "cayley";
    std::string out, emit, format = "json", mode = "exhaustive", variant = "thm14", tuple;
    std::vector<std::string> subs;
    double alpha = 1, c = 0, eps = 0, tol = kDefaultTol;
    std::uint64_t k = 0, trials = 0, budget = 1000;
    std::optional<std::uint64_t> seed, gamma;
    std::optional<std::size_t> t;
    std::optional<Point> point;
    int level = 12;
    bool simple = false, blocks_as_inputs = false, golay = false, mathieu12 = false, validate = false;
    bool contract = false, spectrum = false, full = false, trial_detail = false;
};

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round_sig(x);
}

Json numbers(const Eigen::VectorXd& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(number(v(i)));
    return arr;
}

Json report_json(const ConcentrationReport& r) {
    Json j;
    j["mode"] = r.mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
    j["worst_ratio"] = number(r.worst_ratio);
    j["worst_set"] = r.worst_set;
    j["subsets_checked"] = r.subsets_checked;
    j["verdict"] = r.verdict;
    j["certified"] = r.certified;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json bibd_json(const BibdParams& p) {
    return Json{{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"lambda", p.lambda}};
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
}

void emit(const Options& o, const Json& j, std::ostream& out) { emit(o, j.dump(2) + "\n", out); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

Graph expect_graph(const std::string& path) {
    auto g = read_graph(path);
    if (auto* p = std::get_if<Graph>(&g)) return std::move(*p);
    throw UsageError(path + ": expected a graph file");
}

BipartiteGraph expect_bipartite(const std::string& path) {
    auto g = read_graph(path);
    if (auto* p = std::get_if<BipartiteGraph>(&g)) return std::move(*p);
    throw UsageError(path + ": expected a bipartite graph file");
}

void require(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

FiniteGroup subgroup_of(const FiniteGroup& g, const std::string& spec) {
    auto h = resolve_group(spec);
    require(h.is_subgroup_of(g), spec + " is not a subgroup of the group");
    return h;
}

std::vector<std::size_t> read_connection(const FiniteGroup& g, const std::string& path) {
    const auto list = read_permutations(path);
    require(list.degree == g.degree(), path + ": degree differs from the group");
    return element_indices(g, list.perms);
}

CheckMode check_mode(const Options& o, SampleOptions& sample) {
    if (o.mode == "exhaustive") return CheckMode::exhaustive;
    require(o.seed.has_value(), "sampled mode requires --seed");
    sample.seed = *o.seed;
    sample.budget = o.budget;
    return CheckMode::sampled;
}

int run_construct(const Options& o, std::ostream& out) {
    std::string text;
    if (o.kind == "gq22") {
        text = write_graph(gq22_incidence());
    } else if (o.kind == "double-cover") {
        require(!o.graph.empty(), "double-cover needs --graph");
        text = write_graph(extended_double_cover(expect_graph(o.graph)));
    } else if (o.kind == "design") {
        require(!o.design.empty(), "design incidence needs --design");
        text = write_graph(design_bipartite(read_design(o.design), o.blocks_as_inputs));
    } else {
        require(!o.group.empty() && !o.connection.empty(), o.kind + " needs --group and --S");
        const auto g = resolve_group(o.group);
        const auto s = read_connection(g, o.connection);
        if (o.kind == "cayley") {
            text = write_graph(cayley_graph(g, s));
        } else if (o.kind == "coset") {
            require(!o.left.empty(), "coset needs --L");
            text = write_graph(coset_graph(g, subgroup_of(g, o.left), s));
        } else {
            require(!o.left.empty() && !o.right.empty(), "bicoset needs --L and --N");
            text = write_graph(bicoset_graph(g, subgroup_of(g, o.left), subgroup_of(g, o.right), s, o.simple));
        }
    }
    emit(o, text, out);
    return kExitOk;
}

int run_spectrum(const Options& o, std::ostream& out) {
    const auto any = read_graph(o.graph);
    Eigen::MatrixXd m;
    if (const auto* g = std::get_if<Graph>(&any)) {
        m = adjacency_matrix(*g);
    } else {
        const auto& x = std::get<BipartiteGraph>(any);
        const auto n = x.n_in(), p = x.n_out();
        m = Eigen::MatrixXd::Zero(n + p, n + p);
        m.topRightCorner(n, p) = x.inc.cast<double>();
        m.bottomLeftCorner(p, n) = x.inc.cast<double>().transpose();
    }
    const auto rep = sym_eigenvalues(m, o.tol);
    Json j;
    j["eigenvalues"] = numbers(rep.eigenvalues);
    j["mu_star"] = number(rep.mu_star);
    j["residual"] = number(rep.residual);
    emit(o, j, out);
    return kExitOk;
}

int run_design(const Options& o, std::ostream& out) {
    require(o.golay + o.mathieu12 + !o.design.empty() == 1, "choose exactly one of --golay, --mathieu12, --file");
    Json j;
    Design d;
    if (o.golay) {
        const auto code = golay_code();
        j["codewords"] = code.codewords.size();
        Json w;
        for (std::size_t i = 0; i < code.weight_distribution.size(); ++i)
            if (code.weight_distribution[i]) w[std::to_string(i)] = code.weight_distribution[i];
        j["weight_distribution"] = w;
        d = golay_witt_design();
    } else if (o.mathieu12) {
        require(o.level >= 9 && o.level <= 12, "--level must be 9, 10, 11 or 12");
        auto chain = mathieu12_designs();
        j["group_order"] = chain.m12.order();
        d = o.level == 12 ? chain.d12 : o.level == 11 ? chain.d11 : o.level == 10 ? chain.d10 : chain.d9;
    } else {
        d = read_design(o.design);
    }
    if (o.t) d.t = *o.t;
    if (o.gamma) d.gamma = *o.gamma;
    if (o.contract) d = contraction(d, o.point);

    const auto params = bibd_params(d);
    j["v"] = d.v;
    j["b"] = d.blocks.size();
    j["k"] = d.block_size();
    j["t"] = d.t;
    j["gamma"] = d.gamma;
    j["bibd"] = bibd_json(params);
    j["identities_hold"] = params.identities_hold();

    bool ok = true;
    if (o.validate) {
        require(d.t > 0, "--validate needs the design's t (use --t and --gamma for files)");
        const auto val = validate_design(d, d.t, d.gamma);
        Json v{{"ok", val.ok}, {"subsets_checked", val.subsets_checked}};
        if (val.witness) {
            v["witness"] = *val.witness;
            v["witness_count"] = val.witness_count;
        }
        j["validation"] = v;
        ok &= val.ok;
    }
    if (o.spectrum) {
        const auto sp = bibd_spectrum_check(d);
        j["spectrum"] = Json{{"expected_top", number(sp.expected_top)},
                             {"expected_rest", number(sp.expected_rest)},
                             {"max_relative_error", number(sp.max_relative_error)},
                             {"mu1", number(sp.mu1)},
                             {"ramanujan", sp.ramanujan},
                             {"ok", sp.ok}};
        ok &= sp.ok;
    }
    if (!o.tuple.empty()) {
        std::vector<std::uint64_t> vals;
        std::stringstream ss(o.tuple);
        for (std::string part; std::getline(ss, part, ',');) vals.push_back(std::stoull(part));
        require(vals.size() == 5, "--check-tuple expects v,b,r,k,lambda");
        const BibdParams claim{vals[0], vals[1], vals[2], vals[3], vals[4]};
        const bool matches = claim == params;
        j["tuple_check"] = Json{{"claimed", bibd_json(claim)},
                                {"identities_hold", claim.identities_hold()},
                                {"matches_design", matches}};
        ok &= matches;
    }
    if (!o.emit.empty()) write_file(o.emit, write_design(d));
    emit(o, j, out);
    return ok ? kExitOk : kExitVerdictFalse;
}

int run_chartable(const Options& o, std::ostream& out) {
    const auto g = resolve_group(o.group);
    const auto table = character_table(g, 1e-8, o.seed.value_or(0x5EED));
    Json j;
    j["order"] = g.order();
    j["class_sizes"] = table.class_sizes;
    j["degrees"] = table.degrees;
    j["D"] = dim_sum(table);
    j["orthogonality_residual"] = number(table.orthogonality_residual);
    Json subs = Json::array();
    for (const auto& spec : o.subs) {
        const auto h = subgroup_of(g, spec);
        const auto rel = dim_sum_relative(g, table, h);
        subs.push_back(Json{{"subgroup", spec},
                            {"order", h.order()},
                            {"D_without_trivial", rel.without_trivial},
                            {"D_support", rel.support}});
    }
    j["subgroups"] = subs;
    emit(o, j, out);
    return kExitOk;
}

int run_verify_bsc(const Options& o, std::ostream& out) {
    SampleOptions sample;
    const auto mode = check_mode(o, sample);
    const auto rep = bsc_check(expect_bipartite(o.graph), o.alpha, o.c, mode, sample);
    Json j{{"alpha", number(o.alpha)}, {"c", number(o.c)}};
    j["report"] = report_json(rep);
    emit(o, j, out);
    return rep.verdict ? kExitOk : kExitVerdictFalse;
}

int run_verify_magnifier(const Options& o, std::ostream& out) {
    SampleOptions sample;
    const auto mode = check_mode(o, sample);
    const auto rep = magnifier_constant(expect_graph(o.graph), mode, sample, o.c);
    Json j{{"c", number(o.c)}};
    j["report"] = report_json(rep);
    emit(o, j, out);
    return rep.verdict ? kExitOk : kExitVerdictFalse;
}

int run_verify_expander(const Options& o, std::ostream& out) {
    SampleOptions sample;
    const auto mode = check_mode(o, sample);
    const auto rep = expander_check(expect_bipartite(o.graph), o.c, !o.full, mode, sample);
    Json j{{"c", number(o.c)}, {"restrict_half", !o.full}};
    j["report"] = report_json(rep);
    emit(o, j, out);
    return rep.verdict ? kExitOk : kExitVerdictFalse;
}

int run_lemma11(const Options& o, std::ostream& out) {
    const auto rep = double_cover_transfer(expect_graph(o.graph));
    Json j;
    j["magnifier"] = number(rep.magnifier);
    j["magnifier_report"] = report_json(rep.magnifier_report);
    j["expander_report"] = report_json(rep.expander_report);
    j["pass"] = rep.pass;
    emit(o, j, out);
    return rep.pass ? kExitOk : kExitVerdictFalse;
}

int run_montecarlo(const Options& o, std::ostream& out) {
    require(o.seed.has_value(), "montecarlo requires --seed");
    require(o.format == "json" || o.format == "csv", "--format must be json or csv");
    const auto variant = parse_bound_variant(o.variant);
    const auto g = resolve_group(o.group);
    TrialBatch batch;
    if (variant == BoundVariant::cayley) {
        batch = run_cayley_trials(g, o.k, o.eps, o.trials, *o.seed, o.group);
    } else if (variant == BoundVariant::coset) {
        require(!o.left.empty(), "thm15 needs --L (the subgroup H)");
        batch = run_coset_trials(g, subgroup_of(g, o.left), o.k, o.eps, o.trials, *o.seed, o.group, o.left);
    } else {
        require(!o.left.empty() && !o.right.empty(), "thm18 needs --L and --N");
        batch = run_bicoset_trials(g, subgroup_of(g, o.left), subgroup_of(g, o.right), o.k, o.eps, o.trials,
                                   *o.seed, o.group, o.left, o.right);
    }
    ReportOptions ropts;
    ropts.include_trials = o.trial_detail;
    const bool falsified = batch.falsified;
    std::vector<TrialBatch> batches{std::move(batch)};
    emit(o, o.format == "csv" ? aggregate_csv(batches, ropts) : aggregate_json(batches, ropts), out);
    return falsified ? kExitVerdictFalse : kExitOk;
}

int run_pipeline(const Options& o, std::ostream& out) {
    const auto g = resolve_group(o.group);
    const auto l = subgroup_of(g, o.left);
    const auto s = read_connection(g, o.connection);
    SampleOptions sample;
    if (g.order() > kExhaustiveCap) {
        require(o.seed.has_value(), "groups larger than 24 are sampled; pass --seed");
        sample.seed = *o.seed;
        sample.budget = o.budget;
    }
    const auto rep = pipeline63(g, l, s, sample);
    Json j;
    j["inputs"] = rep.concentrator.n_in();
    j["outputs"] = rep.concentrator.n_out();
    j["input_degree"] = rep.concentrator.input_degree(0);
    j["output_degree"] = rep.concentrator.output_degree(0);
    j["s_prime_size"] = rep.s_prime.size();
    j["magnifier"] = report_json(rep.magnifier);
    j["laplacian_gap"] = number(rep.laplacian_gap);
    j["gap_bound"] = number(rep.gap_bound);
    j["gap_check"] = rep.gap_check;
    j["lambda1"] = number(rep.lambda1);
    j["lambda2"] = number(rep.lambda2);
    j["spectral_gap"] = rep.spectral_gap;
    j["alpha"] = number(rep.alpha);
    j["tanner_bound"] = number(rep.tanner);
    if (rep.tanner_checked) j["tanner_check"] = report_json(rep.tanner_report);
    j["s_generates"] = rep.s_generates;
    j["concentrator_components"] = rep.concentrator_components;
    j["quotient_components"] = rep.quotient_components;
    j["warnings"] = rep.warnings;
    j["pass"] = rep.pass();
    emit(o, j, out);
    return rep.pass() ? kExitOk : kExitVerdictFalse;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Concentrator and expander toolkit for permutation groups", "bsc"};
    app.require_subcommand(1, 1);

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Write the report to this file"); };
    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", o.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
        cmd->add_option("--budget", o.budget, "Subsets sampled per size")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", o.seed, "Seed for sampled mode");
    };

    auto* construct = app.add_subcommand("construct", "Build a graph and print it in graph-file format");
    construct->add_option("--kind", o.kind)
        ->check(CLI::IsMember({"cayley", "coset", "bicoset", "double-cover", "gq22", "design"}));
    construct->add_option("--group", o.group, "Group file or sym:n, alt:n, cyclic:n, m12");
    construct->add_option("--S", o.connection, "Connection multiset file");
    construct->add_option("--L", o.left, "Subgroup (H for coset graphs)");
    construct->add_option("--N", o.right, "Right subgroup of a bi-coset graph");
    construct->add_option("--graph", o.graph, "Graph file for double-cover");
    construct->add_option("--design", o.design, "Design file for design incidence");
    construct->add_flag("--simple", o.simple, "Collapse bi-coset multiplicities to 0/1");
    construct->add_flag("--blocks-as-inputs", o.blocks_as_inputs);
    add_out(construct);

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a graph's adjacency matrix");
    spectrum->add_option("--graph", o.graph)->required();
    spectrum->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    add_out(spectrum);

    auto* design = app.add_subcommand("design", "Build, validate and analyse block designs");
    design->add_flag("--golay", o.golay, "5-(24,8,1) design from the extended Golay code");
    design->add_flag("--mathieu12", o.mathieu12, "Designs D12 ... D9 from M12");
    design->add_option("--level", o.level, "12, 11, 10 or 9 with --mathieu12");
    design->add_option("--file", o.design, "Design file");
    design->add_option("--t", o.t);
    design->add_option("--gamma", o.gamma);
    design->add_flag("--validate", o.validate);
    design->add_flag("--contract", o.contract);
    design->add_option("--point", o.point, "Contraction point (default: largest)");
    design->add_flag("--spectrum", o.spectrum, "Check the A A^T spectrum");
    design->add_option("--check-tuple", o.tuple, "Compare v,b,r,k,lambda with the design");
    design->add_option("--emit", o.emit, "Write the design file here");
    add_out(design);

    auto* chartable = app.add_subcommand("chartable", "Character degrees and dimension sums");
    chartable->add_option("--group", o.group)->required();
    chartable->add_option("--sub", o.subs, "Subgroup for D(G,H); repeatable");
    chartable->add_option("--seed", o.seed, "Seed for the class-algebra combination");
    add_out(chartable);

    auto* vbsc = app.add_subcommand("verify-bsc", "Check |Gamma(X)| >= c |X| for |X| <= alpha n");
    vbsc->add_option("--graph", o.graph)->required();
    vbsc->add_option("--alpha", o.alpha)->required()->check(CLI::Range(0.0, 1.0));
    vbsc->add_option("--c", o.c)->required()->check(CLI::NonNegativeNumber);
    add_mode(vbsc);
    add_out(vbsc);

    auto* vmag = app.add_subcommand("verify-magnifier", "Magnifier constant of a graph");
    vmag->add_option("--graph", o.graph)->required();
    vmag->add_option("--c", o.c)->check(CLI::NonNegativeNumber);
    add_mode(vmag);
    add_out(vmag);

    auto* vexp = app.add_subcommand("verify-expander", "Check |N(A)| >= (1 + c (1 - |A|/n)) |A|");
    vexp->add_option("--graph", o.graph)->required();
    vexp->add_option("--c", o.c)->required()->check(CLI::NonNegativeNumber);
    vexp->add_flag("--full", o.full, "Also check sets larger than n/2");
    add_mode(vexp);
    add_out(vexp);

    auto* lemma = app.add_subcommand("lemma11", "Magnifier constant carried to the extended double cover");
    lemma->add_option("--graph", o.graph)->required();
    add_out(lemma);

    auto* mc = app.add_subcommand("montecarlo", "Random Cayley, coset and bi-coset graph trials");
    mc->add_option("--group", o.group)->required();
    mc->add_option("--L", o.left);
    mc->add_option("--N", o.right);
    mc->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    mc->add_option("--eps", o.eps)->required()->check(CLI::Range(0.0, 1.0));
    mc->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
    mc->add_option("--seed", o.seed);
    mc->add_option("--variant", o.variant)->check(CLI::IsMember({"thm14", "thm15", "thm18"}));
    mc->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    mc->add_flag("--trial-detail", o.trial_detail, "Include per-trial values in JSON");
    add_out(mc);

    auto* pipe = app.add_subcommand("pipeline63", "Bi-coset concentrator from an expanding generating set");
    pipe->add_option("--group", o.group)->required();
    pipe->add_option("--L", o.left)->required();
    pipe->add_option("--S", o.connection)->required();
    pipe->add_option("--seed", o.seed, "Needed when |G| > 24");
    pipe->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
    add_out(pipe);

    std::vector<const char*> argv{"bsc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*construct) return run_construct(o, out);
        if (*spectrum) return run_spectrum(o, out);
        if (*design) return run_design(o, out);
        if (*chartable) return run_chartable(o, out);
        if (*vbsc) return run_verify_bsc(o, out);
        if (*vmag) return run_verify_magnifier(o, out);
        if (*vexp) return run_verify_expander(o, out);
        if (*lemma) return run_lemma11(o, out);
        if (*mc) return run_montecarlo(o, out);
        if (*pipe) return run_pipeline(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bsc
