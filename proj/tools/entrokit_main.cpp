// entrokit: batch command-line front end for the entropy toolkit.
//
// Subcommands: dist, series, transfer, maxent, test, oracle, simulate.
// Output is a single structured record (JSON by default, TSV with
// --format tsv). Identical flags and seed produce byte-identical output.
// Exit codes: 0 success, 2 validation/usage error, 3 numerical
// non-convergence.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "entrokit/correlation.hpp"
#include "entrokit/dynamics.hpp"
#include "entrokit/group.hpp"
#include "entrokit/huffman.hpp"
#include "entrokit/io.hpp"
#include "entrokit/markov.hpp"
#include "entrokit/maxent.hpp"
#include "entrokit/ordinal.hpp"
#include "entrokit/prob.hpp"
#include "entrokit/series.hpp"
#include "entrokit/sft.hpp"
#include "entrokit/stats.hpp"
#include "entrokit/transfer.hpp"

using json = nlohmann::ordered_json;
using namespace entrokit;

namespace {

json pattern_to_json(const OrdinalPattern& p) {
    std::string s;
    for (std::size_t i = 0; i < p.ranks().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(static_cast<int>(p[i]));
    }
    return json(s);
}

void flatten_tsv(const json& node, const std::string& prefix, std::ostream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            flatten_tsv(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node)
            flatten_tsv(value, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out << prefix << '\t' << (node.is_string() ? node.get<std::string>() : node.dump())
            << '\n';
    }
}

void emit(const json& record, const std::string& format) {
    if (format == "tsv") {
        // simulate output stays pipeable: bare values, one per line
        if (record.contains("results") && record["results"].contains("values") &&
        record["results"]["values"].is_array() && record["command"] == "simulate") {
            for (const auto& v : record["results"]["values"]) std::cout << v.dump() << '\n';
            return;
        }
        flatten_tsv(record, "", std::cout);
        return;
    }
    std::cout << record.dump(2) << '\n';
}

json base_record(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

LogBase parse_base(const std::string& text) {
    if (text == "e" || text == "nat" || text == "natural") return LogBase::natural();
    return LogBase::of(std::stod(text));
}

IntervalMap parse_map(const std::string& spec) {
    if (spec == "tent") return IntervalMap::tent();
    if (spec == "doubling") return IntervalMap::doubling();
    if (spec.rfind("logistic:", 0) == 0)
        return IntervalMap::logistic(std::stod(spec.substr(9)));
    if (spec == "logistic") return IntervalMap::logistic(4.0);
    if (spec.rfind("pwl:", 0) == 0) {
        std::vector<double> xs, ys;
        for (const auto& row : parse_matrix_inline(spec.substr(4))) {
            if (row.size() != 2)
                throw std::invalid_argument("--map pwl: each node must be x,y");
            xs.push_back(row[0]);
            ys.push_back(row[1]);
        }
        return IntervalMap::piecewise_linear(std::move(xs), std::move(ys));
    }
    throw std::invalid_argument("--map: unknown map '" + spec +
                                "' (use logistic:<a>, tent, doubling, pwl:...)");
}

std::unique_ptr<FiniteGroup> parse_group(const std::string& spec) {
    if (spec.rfind("sL:", 0) == 0) return make_symmetric_group(std::stoi(spec.substr(3)));
    if (spec.rfind("zm:", 0) == 0) return make_cyclic_group(std::stoi(spec.substr(3)));
    throw std::invalid_argument("--group: expected sL:<L> or zm:<m>, got '" + spec + "'");
}

std::vector<std::vector<double>> matrix_from_flags(const std::string& inline_text,
                                                   const std::string& file) {
    if (!inline_text.empty() && !file.empty())
        throw std::invalid_argument("give either --matrix or --matrix-file, not both");
    if (!inline_text.empty()) return parse_matrix_inline(inline_text);
    if (!file.empty()) return read_matrix_file(file);
    throw std::invalid_argument("a matrix is required (--matrix or --matrix-file)");
}

TransitionMatrix01 to_binary_matrix(const std::vector<std::vector<double>>& m) {
    std::vector<std::vector<int>> b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (double v : m[i]) {
            if (v != 0.0 && v != 1.0)
                throw std::invalid_argument("transition matrix entries must be 0 or 1");
            b[i].push_back(static_cast<int>(v));
        }
    return TransitionMatrix01(std::move(b));
}

json probvec_to_json(const ProbVec& p) {
    return json(p.probs());
}

json test_result_to_json(const TestResult& r) {
    json j;
    j["statistic"] = r.statistic;
    j["dof"] = r.dof;
    j["critical_value"] = r.critical_value;
    j["p_value"] = r.p_value;
    j["decision"] = r.decision == Decision::RejectNull ? "reject H0" : "accept H0";
    j["flags"] = r.flags;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entrokit: entropy quantities for distributions, dynamics and time series"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (results are bit-identical)")
        ->check(CLI::PositiveNumber);

    // ----- dist ------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "distribution entropies and mutual quantities");
    std::string d_probs, d_input, d_measure = "shannon", d_base = "e", d_table;
    double d_q = 2.0;
    int d_arity = 2;
    dist->add_option("--probs", d_probs, "inline distribution, e.g. 0.5,0.5");
    dist->add_option("--input", d_input, "distribution or joint-table file");
    dist->add_option("--measure", d_measure, "shannon|renyi|tsallis|mutual|huffman")
        ->check(CLI::IsMember({"shannon", "renyi", "tsallis", "mutual", "huffman"}));
    dist->add_option("--base", d_base, "log base for shannon (e, 2, 10, ...)");
    dist->add_option("--q", d_q, "order for renyi/tsallis");
    dist->add_option("--table", d_table, "inline joint table r1c1,r1c2;r2c1,...");
    dist->add_option("--arity", d_arity, "code alphabet size for huffman")
        ->check(CLI::Range(2, 64));

    // ----- series ----------------------------------------------------------
    auto* series = app.add_subcommand("series", "time-series entropy estimators");
    std::string s_input, s_op = "pe";
    int s_column = 0, s_k = 2, s_order = 3, s_stride = 1;
    double s_eps = 0.0;
    series->add_option("--input", s_input, "series file (one value per line / CSV)")->required();
    series->add_option("--column", s_column, "0-based column for delimited files");
    series->add_option("--op", s_op, "apen|sampen|h2|ci|pe|ce|census|topological")
        ->check(CLI::IsMember({"apen", "sampen", "h2", "ci", "pe", "ce", "census",
                               "topological"}));
    series->add_option("--k", s_k, "embedding length for apen/sampen/h2/ci");
    series->add_option("--eps", s_eps, "tolerance (default 0.2 * sample std)");
    series->add_option("--L", s_order, "ordinal pattern order");
    series->add_option("--stride", s_stride, "window stride for pattern counting (1 or L)");

    // ----- transfer ---------------------------------------------------------
    auto* transfer = app.add_subcommand("transfer", "transfer entropy and directionality");
    std::string t_x, t_y, t_input, t_op = "te", t_group;
    int t_lambda = 1, t_n = 1, t_k = 1;
    transfer->add_option("--x", t_x, "target-process symbol file");
    transfer->add_option("--y", t_y, "source-process symbol file");
    transfer->add_option("--input", t_input, "two-column CSV (x first, y second)");
    transfer->add_option("--op", t_op, "te|delta|algebraic")
        ->check(CLI::IsMember({"te", "delta", "algebraic"}));
    transfer->add_option("--lambda", t_lambda, "coupling delay");
    transfer->add_option("--n", t_n, "target history length");
    transfer->add_option("--k", t_k, "source history length");
    transfer->add_option("--group", t_group, "group for algebraic op: sL:<L> or zm:<m>");

    // ----- maxent -----------------------------------------------------------
    auto* maxent = app.add_subcommand("maxent", "maximum-entropy inference");
    std::string m_op = "solve", m_spec, m_energies, m_family = "uniform";
    double m_beta = 1.0, m_q = 2.0, m_a = 0.0, m_b = 1.0, m_mean = 1.0, m_m1 = 0.0, m_m2 = 1.0;
    double m_tol = 1e-10;
    int m_max_iter = 500;
    maxent->add_option("--op", m_op, "solve|gibbs|tsallis|closed-form")
        ->check(CLI::IsMember({"solve", "gibbs", "tsallis", "closed-form"}));
    maxent->add_option("--spec", m_spec, "moment-spec file for solve");
    maxent->add_option("--tol", m_tol, "moment residual tolerance");
    maxent->add_option("--max-iter", m_max_iter, "iteration cap");
    maxent->add_option("--energies", m_energies, "inline energy levels, e.g. 0,1,2");
    maxent->add_option("--beta", m_beta, "inverse temperature");
    maxent->add_option("--q", m_q, "Tsallis order");
    maxent->add_option("--family", m_family, "uniform|exponential|gaussian")
        ->check(CLI::IsMember({"uniform", "exponential", "gaussian"}));
    maxent->add_option("--a", m_a, "uniform support lower end");
    maxent->add_option("--b", m_b, "uniform support upper end");
    maxent->add_option("--m", m_mean, "exponential mean");
    maxent->add_option("--m1", m_m1, "first moment");
    maxent->add_option("--m2", m_m2, "second moment");

    // ----- test -------------------------------------------------------------
    auto* test = app.add_subcommand("test", "independence / determinism tests");
    std::string te_input, te_op = "g";
    int te_column = 0, te_order = 3, te_surrogates = 99;
    double te_alpha = 0.05;
    std::uint64_t te_seed = 1;
    test->add_option("--input", te_input, "series file")->required();
    test->add_option("--column", te_column, "0-based column");
    test->add_option("--op", te_op, "g|chi2|surrogate")
        ->check(CLI::IsMember({"g", "chi2", "surrogate"}));
    test->add_option("--L", te_order, "ordinal pattern order");
    test->add_option("--alpha", te_alpha, "test level");
    test->add_option("--surrogates", te_surrogates, "number of surrogates");
    test->add_option("--seed", te_seed, "surrogate shuffle seed");

    // ----- oracle -----------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "exact-entropy formulas");
    std::string o_op = "bernoulli", o_probs, o_matrix, o_matrix_file, o_map = "logistic:4";
    int o_nmax = 10;
    double o_x0 = 0.1234567;
    long long o_steps = 100000, o_burn = 1000;
    oracle->add_option("--op", o_op, "bernoulli|markov|sft|parry|toral|lap|lyapunov")
        ->check(CLI::IsMember({"bernoulli", "markov", "sft", "parry", "toral", "lap",
                               "lyapunov"}));
    oracle->add_option("--probs", o_probs, "distribution (bernoulli) / stationary (markov)");
    oracle->add_option("--matrix", o_matrix, "inline matrix r1c1,r1c2;r2c1,...");
    oracle->add_option("--matrix-file", o_matrix_file, "matrix file, whitespace rows");
    oracle->add_option("--map", o_map, "interval map (lap/lyapunov)");
    oracle->add_option("--n", o_nmax, "max iterate for lap counting");
    oracle->add_option("--x0", o_x0, "orbit start (lyapunov)");
    oracle->add_option("--N", o_steps, "orbit samples (lyapunov)");
    oracle->add_option("--burn-in", o_burn, "discarded transient steps");

    // ----- simulate ---------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "reproducible data generators");
    std::string si_op = "markov", si_matrix, si_matrix_file, si_probs, si_map = "logistic:4";
    long long si_n = 1000, si_burn = 0;
    double si_x0 = 0.1234567;
    std::uint64_t si_seed = 1;
    simulate->add_option("--op", si_op, "markov|map")->check(CLI::IsMember({"markov", "map"}));
    simulate->add_option("--matrix", si_matrix, "transition matrix, inline");
    simulate->add_option("--matrix-file", si_matrix_file, "transition matrix file");
    simulate->add_option("--probs", si_probs, "stationary vector (else solved)");
    simulate->add_option("--map", si_map, "interval map spec");
    simulate->add_option("--N", si_n, "sample count")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", si_seed, "generator seed");
    simulate->add_option("--x0", si_x0, "orbit start (map)");
    simulate->add_option("--burn-in", si_burn, "discarded transient steps (map)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*dist) {
            json rec = base_record("dist");
            rec["params"] = {{"measure", d_measure}};
            json results;
            if (d_measure == "mutual") {
                std::vector<std::vector<double>> rows =
                    !d_table.empty() ? parse_matrix_inline(d_table) : read_matrix_file(d_input);
                JointTable table(rows);
                rec["inputs"] = {{"rows", table.rows()}, {"cols", table.cols()}};
                const auto s = joint_conditional_mutual(table);
                results["h_joint"] = s.h_joint;
                results["h_x"] = s.h_x;
                results["h_y"] = s.h_y;
                results["h_x_given_y"] = s.h_x_given_y;
                results["h_y_given_x"] = s.h_y_given_x;
                results["mutual_information"] = s.mutual_information;
            } else {
                ProbVec p = !d_probs.empty() ? parse_prob_list(d_probs)
                                             : read_prob_file(d_input);
                rec["inputs"] = {{"size", p.size()}};
                if (d_measure == "shannon") {
                    rec["params"]["base"] = d_base;
                    results["value"] = shannon_entropy(p, parse_base(d_base));
                } else if (d_measure == "renyi") {
                    rec["params"]["q"] = d_q;
                    results["value"] = renyi_entropy(p, d_q);
                } else if (d_measure == "tsallis") {
                    rec["params"]["q"] = d_q;
                    results["value"] = tsallis_entropy(p, d_q);
                } else {  // huffman
                    rec["params"]["arity"] = d_arity;
                    const auto h = huffman_average_length(p, d_arity);
                    results["avg_length"] = h.avg_length;
                    results["entropy_base_d"] = h.entropy_base_d;
                    results["code_lengths"] = h.code_lengths;
                }
            }
            rec["results"] = results;
            emit(rec, format);
        } else if (*series) {
            const TimeSeries x(read_series_file(s_input, s_column));
            json rec = base_record("series");
            rec["inputs"] = {{"path", s_input}, {"column", s_column}, {"length", x.size()}};
            json results;
            if (s_op == "apen" || s_op == "sampen" || s_op == "h2" || s_op == "ci") {
                CorrParams p;
                p.embed_len = s_k;
                p.epsilon = s_eps > 0.0 ? s_eps : 0.2 * x.sample_std();
                rec["params"] = {{"op", s_op}, {"k", p.embed_len}, {"epsilon", p.epsilon}};
                if (s_op == "apen") {
                    results["value"] = apen(x, p);
                } else if (s_op == "ci") {
                    results["value"] = correlation_integral_estimate(x, p);
                } else {
                    const auto v = s_op == "sampen" ? sampen(x, p) : h2_estimate(x, p);
                    results["defined"] = v.has_value();
                    if (v)
                        results["value"] = *v;
                    else
                        results["value"] = "undefined";
                }
            } else {
                rec["params"] = {{"op", s_op}, {"L", s_order}};
                if (s_op == "pe") {
                    const auto pe = permutation_entropy(x, s_order);
                    results["raw"] = pe.raw;
                    results["per_symbol"] = pe.per_symbol;
                    results["normalized"] = pe.normalized;
                } else if (s_op == "ce") {
                    results["value"] = conditional_entropy_ordinal(x, s_order);
                } else if (s_op == "topological") {
                    results["value"] = topological_perm_entropy_order(x, s_order);
                } else {  // census
                    rec["params"]["stride"] = s_stride;
                    const auto census = missing_patterns(x, s_order);
                    results["observed"] = census.observed_count;
                    results["missing_count"] = census.missing_count;
                    json missing = json::array();
                    for (const auto& pat : census.missing) missing.push_back(pattern_to_json(pat));
                    results["missing"] = missing;
                }
            }
            rec["results"] = results;
            emit(rec, format);
        } else if (*transfer) {
            json rec = base_record("transfer");
            rec["params"] = {{"op", t_op}, {"lambda", t_lambda}, {"n", t_n}, {"k", t_k}};
            json results;
            auto load_pair = [&]() {
                if (!t_input.empty()) {
                    auto xv = read_series_file(t_input, 0);
                    auto yv = read_series_file(t_input, 1);
                    std::vector<int> xs(xv.begin(), xv.end()), ys(yv.begin(), yv.end());
                    int kx = 1 + *std::max_element(xs.begin(), xs.end());
                    int ky = 1 + *std::max_element(ys.begin(), ys.end());
                    return PairedSymbolSeq(SymbolSeq(std::move(xs), kx),
                                           SymbolSeq(std::move(ys), ky));
                }
                return PairedSymbolSeq(read_symbol_file(t_x), read_symbol_file(t_y));
            };
            TEParams params{t_lambda, t_n, t_k};
            if (t_op == "te") {
                const auto r = transfer_entropy(load_pair(), params);
                results["value"] = r.value;
                results["samples"] = r.samples;
                results["distinct_contexts"] = r.distinct_contexts;
                results["sparse_warning"] = r.sparse_warning;
            } else if (t_op == "delta") {
                results["value"] = directionality(load_pair(), params);
            } else {  // algebraic
                if (t_group.empty())
                    throw std::invalid_argument("--group is required for --op algebraic");
                auto g = parse_group(t_group);
                const auto pair = load_pair();
                const auto r = algebraic_transfer_entropy(*g, pair.x.symbols, pair.y.symbols,
                                                          t_lambda);
                results["lhs"] = r.lhs;
                results["rhs"] = r.rhs;
                results["coupling_c"] = r.coupling_c;
                results["h_xi"] = r.h_xi;
                results["h_eta"] = r.h_eta;
                results["hypotheses_hold"] = r.hypotheses_hold;
                if (!r.hypotheses_hold) results["note"] = "theorem inapplicable";
            }
            rec["results"] = results;
            emit(rec, format);
        } else if (*maxent) {
            json rec = base_record("maxent");
            rec["params"] = {{"op", m_op}};
            json results;
            if (m_op == "solve") {
                if (m_spec.empty()) throw std::invalid_argument("--spec is required for solve");
                const auto spec = read_moment_spec_file(m_spec);
                rec["inputs"] = {{"path", m_spec},
                                 {"alphabet", spec.alphabet_size()},
                                 {"features", spec.feature_count()}};
                rec["params"]["tol"] = m_tol;
                const auto sol = solve_discrete_maxent(spec, m_tol, m_max_iter);
                results["distribution"] = probvec_to_json(sol.distribution);
                results["multipliers"] = sol.multipliers;
                results["log_partition"] = sol.log_partition;
                results["max_residual"] = sol.max_residual;
                results["iterations"] = sol.iterations;
                results["entropy"] = shannon_entropy(sol.distribution);
            } else if (m_op == "gibbs" || m_op == "tsallis") {
                const auto energies = parse_number_list(m_energies);
                rec["params"]["beta"] = m_beta;
                ProbVec p = m_op == "gibbs"
                                ? gibbs_distribution(energies, m_beta)
                                : (rec["params"]["q"] = m_q,
                                   tsallis_maxent_distribution(energies, m_beta, m_q));
                results["distribution"] = probvec_to_json(p);
                results["entropy"] = shannon_entropy(p);
            } else {  // closed-form
                rec["params"]["family"] = m_family;
                ContinuousMaxent r{MaxentFamily::Uniform, {}, 0.0, ""};
                if (m_family == "uniform")
                    r = continuous_maxent_uniform(m_a, m_b);
                else if (m_family == "exponential")
                    r = continuous_maxent_exponential(m_mean);
                else
                    r = continuous_maxent_gaussian(m_m1, m_m2);
                results["params"] = r.params;
                results["differential_entropy"] = r.differential_entropy;
                if (!r.note.empty()) results["note"] = r.note;
            }
            rec["results"] = results;
            emit(rec, format);
        } else if (*test) {
            const TimeSeries x(read_series_file(te_input, te_column));
            json rec = base_record("test");
            rec["inputs"] = {{"path", te_input}, {"length", x.size()}};
            rec["params"] = {{"op", te_op}, {"L", te_order}};
            json results;
            if (te_op == "g") {
                rec["params"]["alpha"] = te_alpha;
                results = test_result_to_json(g_test(x, te_order, te_alpha));
            } else if (te_op == "chi2") {
                rec["params"]["alpha"] = te_alpha;
                results = test_result_to_json(method2_chi2_test(x, te_order, te_alpha));
            } else {
                rec["params"]["surrogates"] = te_surrogates;
                rec["params"]["seed"] = te_seed;
                const auto r = method1_surrogate_test(x, te_order, te_surrogates, te_seed);
                results["observed_missing"] = r.observed_missing;
                results["observed_missing_half"] = r.observed_missing_half;
                results["p_value"] = r.p_value;
                results["surrogate_missing"] = r.surrogate_missing;
                results["flags"] = r.flags;
            }
            rec["results"] = results;
            emit(rec, format);
        } else if (*oracle) {
            json rec = base_record("oracle");
            rec["params"] = {{"op", o_op}};
            json results;
            if (o_op == "bernoulli") {
                const auto p = parse_prob_list(o_probs);
                results["entropy"] = bernoulli_entropy(p);
            } else if (o_op == "markov") {
                const auto rows = matrix_from_flags(o_matrix, o_matrix_file);
                MarkovModel model = o_probs.empty()
                                        ? MarkovModel::from_transition(rows)
                                        : MarkovModel(parse_prob_list(o_probs), rows);
                results["entropy_rate"] = markov_entropy_rate(model);
                results["stationary"] = probvec_to_json(model.stationary());
            } else if (o_op == "sft") {
                const auto a = to_binary_matrix(matrix_from_flags(o_matrix, o_matrix_file));
                results["entropy"] = topological_markov_entropy(a);
                results["irreducible"] = a.irreducible();
            } else if (o_op == "parry") {
                const auto a = to_binary_matrix(matrix_from_flags(o_matrix, o_matrix_file));
                const auto model = parry_measure(a);
                results["stationary"] = probvec_to_json(model.stationary());
                results["transition"] = model.transition();
                results["entropy_rate"] = markov_entropy_rate(model);
                results["topological_entropy"] = topological_markov_entropy(a);
            } else if (o_op == "toral") {
                const auto rows = matrix_from_flags(o_matrix, o_matrix_file);
                std::vector<std::vector<long long>> m(rows.size());
                for (std::size_t i = 0; i < rows.size(); ++i)
                    for (double v : rows[i]) {
                        if (v != std::floor(v))
                            throw std::invalid_argument("toral: matrix entries must be integers");
                        m[i].push_back(static_cast<long long>(v));
                    }
                results["entropy"] = toral_automorphism_entropy(m);
            } else if (o_op == "lap") {
                rec["params"]["map"] = o_map;
                rec["params"]["n"] = o_nmax;
                json seq = json::array();
                for (const auto& est : lap_number_entropy(parse_map(o_map), o_nmax))
                    seq.push_back({{"n", est.n}, {"laps", est.laps}, {"rate", est.rate}});
                results["sequence"] = seq;
            } else {  // lyapunov
                rec["params"]["map"] = o_map;
                rec["params"]["x0"] = o_x0;
                rec["params"]["N"] = o_steps;
                rec["params"]["burn_in"] = o_burn;
                const auto est = lyapunov_entropy_estimate_1d(parse_map(o_map), o_x0, o_steps,
                                                              o_burn);
                results["value"] = est.value;
                results["raw_average"] = est.raw_average;
                results["skipped"] = est.skipped;
            }
            rec["results"] = results;
            emit(rec, format);
        } else if (*simulate) {
            json rec = base_record("simulate");
            json results;
            if (si_op == "markov") {
                const auto rows = matrix_from_flags(si_matrix, si_matrix_file);
                MarkovModel model = si_probs.empty()
                                        ? MarkovModel::from_transition(rows)
                                        : MarkovModel(parse_prob_list(si_probs), rows);
                rec["params"] = {{"op", si_op}, {"N", si_n}, {"seed", si_seed}};
                const auto seq = simulate_markov(model, static_cast<std::size_t>(si_n), si_seed);
                results["alphabet"] = seq.alphabet_size;
                results["values"] = seq.symbols;
            } else {
                rec["params"] = {{"op", si_op}, {"map", si_map}, {"N", si_n},
                                 {"x0", si_x0}, {"burn_in", si_burn}};
                const auto f = parse_map(si_map);
                double x = si_x0;
                for (long long t = 0; t < si_burn; ++t) x = f.eval(x);
                std::vector<double> values;
                values.reserve(static_cast<std::size_t>(si_n));
                for (long long t = 0; t < si_n; ++t) {
                    values.push_back(x);
                    x = f.eval(x);
                }
                results["values"] = values;
            }
            rec["results"] = results;
            emit(rec, format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
