#include "rpmsim/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpmsim/base_measure.hpp"
#include "rpmsim/constructors.hpp"
#include "rpmsim/diagnostics.hpp"
#include "rpmsim/errors.hpp"
#include "rpmsim/format.hpp"
#include "rpmsim/measure.hpp"
#include "rpmsim/parallel.hpp"

namespace rpmsim {

namespace {

using nlohmann::ordered_json;

double parse_number(const std::string& token, const char* what) {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() ||
        !std::isfinite(value)) {
        throw DomainError(std::string(what) + ": bad number '" + token + "'");
    }
    return value;
}

int decimal_places(const std::string& token) {
    if (token.find_first_of("eE") != std::string::npos) return -1;
    const std::size_t dot = token.find('.');
    if (dot == std::string::npos) return 0;
    return static_cast<int>(token.size() - dot - 1);
}

// "start:stop:step". When all three are plain decimals the points are computed
// by integer arithmetic in units of 10^-d, so 0.1:1.0:0.1 yields the doubles
// nearest 0.1, 0.2, ..., 1.0 rather than accumulated sums.
Eigen::ArrayXd make_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t colon = spec.find(':', pos);
        parts.push_back(spec.substr(
            pos, colon == std::string::npos ? std::string::npos : colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() != 3) {
        throw DomainError("grid: expected 'start:stop:step', got '" + spec + "'");
    }
    const double start = parse_number(parts[0], "grid start");
    const double stop = parse_number(parts[1], "grid stop");
    const double step = parse_number(parts[2], "grid step");
    if (!(step > 0.0)) throw DomainError("grid: step must be positive");
    if (stop < start) throw DomainError("grid: stop must not precede start");

    const int d = std::max(
        {decimal_places(parts[0]), decimal_places(parts[1]), decimal_places(parts[2])});
    Eigen::Index count;
    if (d >= 0 && d <= 12) {
        const double scale = std::pow(10.0, d);
        const long long s0 = std::llround(start * scale);
        const long long s1 = std::llround(stop * scale);
        const long long ds = std::llround(step * scale);
        if (ds <= 0) throw DomainError("grid: step must be positive");
        count = static_cast<Eigen::Index>((s1 - s0) / ds) + 1;
        if (count > 1000000) throw DomainError("grid: more than 1e6 points");
        Eigen::ArrayXd out(count);
        for (Eigen::Index j = 0; j < count; ++j) {
            out[j] = static_cast<double>(s0 + j * ds) / scale;
        }
        return out;
    }
    count = static_cast<Eigen::Index>(
                std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw DomainError("grid: more than 1e6 points");
    Eigen::ArrayXd out(count);
    for (Eigen::Index j = 0; j < count; ++j) {
        out[j] = start + static_cast<double>(j) * step;
    }
    return out;
}

std::vector<Eigen::Index> parse_index_list(const std::string& text) {
    std::vector<Eigen::Index> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string token = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        char* end = nullptr;
        const long long value = std::strtoll(token.c_str(), &end, 10);
        if (token.empty() || end != token.c_str() + token.size() || value < 1) {
            throw DomainError("index list: bad entry '" + token + "'");
        }
        out.push_back(static_cast<Eigen::Index>(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw DomainError("index list: empty");
    return out;
}

void write_output(const std::string& payload, const std::string& out_path,
                  std::ostream& out) {
    if (out_path == "-") {
        out << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open output file '" + out_path + "'");
    }
    file << payload;
    if (!file) {
        throw DomainError("failed while writing output file '" + out_path + "'");
    }
}

struct SampleOptions {
    std::string process;
    double alpha = 0.5;
    double theta = 1.0;
    long long n = 0;  // 0 = use the per-process default
    long long m = 500;
    std::optional<double> epsilon;
    std::string base = "uniform:0,1";
    std::string grid = "0.1:1.0:0.1";
    long long paths = 0;  // 0 = per-process default
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string format = "csv";
    std::string out_path = "-";
};

ProcessConfig build_config(const SampleOptions& opt) {
    ProcessConfig config;
    config.kind = process_from_name(opt.process);
    config.alpha = opt.alpha;
    config.theta = opt.theta;
    const bool nigp = config.kind == ProcessKind::nigp_new ||
                      config.kind == ProcessKind::nigp_stick;
    config.n = opt.n > 0 ? static_cast<Eigen::Index>(opt.n) : (nigp ? 50 : 100);
    config.m = static_cast<Eigen::Index>(opt.m);
    if (opt.epsilon) config.epsilon = *opt.epsilon;
    validate_process_config(config);
    return config;
}

ordered_json config_echo(const ProcessConfig& config, const BaseMeasure& H) {
    ordered_json j;
    j["process"] = process_name(config.kind);
    switch (config.kind) {
        case ProcessKind::dp_new:
        case ProcessKind::nigp_new:
        case ProcessKind::nigp_stick:
            j["theta"] = config.theta;
            break;
        case ProcessKind::stable_new:
            j["alpha"] = config.alpha;
            break;
        case ProcessKind::pdp_new:
        case ProcessKind::pdp_stick:
            j["alpha"] = config.alpha;
            j["theta"] = config.theta;
            break;
    }
    j["n"] = static_cast<std::int64_t>(config.n);
    if (config.kind == ProcessKind::pdp_new) {
        j["m"] = static_cast<std::int64_t>(config.m);
    }
    if (config.kind == ProcessKind::pdp_stick && config.epsilon) {
        j["epsilon"] = *config.epsilon;
        j["cap"] = static_cast<std::uint64_t>(config.cap);
    }
    j["base"] = H.describe();
    return j;
}

int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
    const ProcessConfig config = build_config(opt);
    const BaseMeasure H = BaseMeasure::parse(opt.base);
    const Eigen::ArrayXd grid = make_grid(opt.grid);
    const bool nigp = config.kind == ProcessKind::nigp_new ||
                      config.kind == ProcessKind::nigp_stick;
    const long long path_request = opt.paths > 0 ? opt.paths : (nigp ? 500 : 1000);
    if (path_request < 1) throw DomainError("sample: paths must be positive");
    const std::size_t paths = static_cast<std::size_t>(path_request);

    const std::size_t g = static_cast<std::size_t>(grid.size());
    std::vector<double> flat(paths * g);
    std::vector<unsigned char> degenerate(paths, 0);
    std::vector<Eigen::Index> first_index(paths, 0);
    // A failing path aborts the whole command (exit 3); partial results are
    // never written.
    parallel_for(paths, opt.workers, [&](const std::size_t j) {
        RngStream rng(opt.seed, j);
        const MeasureDraw draw = draw_measure(config, H, rng);
        const Eigen::ArrayXd f = evaluate_cdf(draw.measure, grid);
        std::copy(f.data(), f.data() + grid.size(), flat.begin() + j * g);
        degenerate[j] = draw.flag.degenerate ? 1 : 0;
        first_index[j] = draw.flag.first_index;
    });

    std::size_t degenerate_count = 0;
    for (std::size_t j = 0; j < paths; ++j) {
        if (!degenerate[j]) continue;
        ++degenerate_count;
        err << "warning: path " << j << " degenerate at fraction "
            << first_index[j] << "; stick closed there\n";
    }
    if (degenerate_count > 0) {
        err << "warning: " << degenerate_count << " of " << paths
            << " paths degenerate\n";
    }

    std::string payload;
    if (opt.format == "csv") {
        payload = "path_id,x,F\n";
        for (std::size_t j = 0; j < paths; ++j) {
            for (std::size_t k = 0; k < g; ++k) {
                payload += std::to_string(j);
                payload += ',';
                payload += format_double(grid[static_cast<Eigen::Index>(k)]);
                payload += ',';
                payload += format_double(flat[j * g + k]);
                payload += '\n';
            }
        }
    } else {
        ordered_json doc;
        doc["config"] = config_echo(config, H);
        doc["config"]["paths"] = static_cast<std::uint64_t>(paths);
        doc["config"]["seed"] = opt.seed;
        doc["grid"] = std::vector<double>(grid.data(), grid.data() + grid.size());
        ordered_json rows = ordered_json::array();
        for (std::size_t j = 0; j < paths; ++j) {
            rows.push_back(std::vector<double>(flat.begin() + j * g,
                                               flat.begin() + (j + 1) * g));
        }
        doc["paths"] = std::move(rows);
        doc["degenerate_paths"] = static_cast<std::uint64_t>(degenerate_count);
        payload = doc.dump(2);
        payload += '\n';
    }
    write_output(payload, opt.out_path, out);
    return 0;
}

struct CompareOptions {
    std::string family = "pdp";
    long long n = 0;
    long long m = 500;
    long long stick_n = 50000;
    double theta = 1.0;
    long long paths = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string format = "json";
    std::string out_path = "-";
};

ordered_json method_json(const ErrorReport& report) {
    ordered_json j;
    j["max_mean_error"] = report.max_mean_error;
    j["max_sd_error"] = report.max_sd_error;
    j["paths"] = static_cast<std::uint64_t>(report.aggregated_paths);
    j["failed_paths"] = static_cast<std::uint64_t>(report.failed_paths);
    return j;
}

int cmd_compare(const CompareOptions& opt, std::ostream& out,
                std::ostream& err) {
    (void)err;
    if (opt.format != "json") {
        throw DomainError("compare: only json output is supported");
    }
    if (opt.family != "pdp" && opt.family != "nigp") {
        throw DomainError("compare: family must be pdp or nigp");
    }
    const bool pdp = opt.family == "pdp";
    const long long path_request = opt.paths > 0 ? opt.paths : (pdp ? 1000 : 500);
    if (path_request < 2) throw DomainError("compare: need at least two paths");
    const std::size_t paths = static_cast<std::size_t>(path_request);
    const long long n = opt.n > 0 ? opt.n : (pdp ? 100 : 50);
    const BaseMeasure H = BaseMeasure::uniform(0.0, 1.0);
    const Eigen::ArrayXd grid = make_grid("0.1:1.0:0.1");

    ordered_json doc;
    doc["config"] = ordered_json{{"command", "compare"},
                                 {"family", opt.family},
                                 {"paths", static_cast<std::uint64_t>(paths)},
                                 {"base", H.describe()},
                                 {"grid", "0.1:1.0:0.1"}};
    if (pdp) {
        doc["config"]["n"] = n;
        doc["config"]["m"] = opt.m;
        doc["config"]["stick_n"] = opt.stick_n;
    } else {
        doc["config"]["n"] = n;
        doc["config"]["theta"] = opt.theta;
    }
    ordered_json cells = ordered_json::array();
    if (pdp) {
        const double alphas[3] = {0.1, 0.5, 0.9};
        const double thetas[3] = {1.0, 10.0, 50.0};
        int cell = 0;
        for (const double theta : thetas) {
            for (const double alpha : alphas) {
                const std::uint64_t offset =
                    static_cast<std::uint64_t>(cell) * paths;
                ProcessConfig new_config;
                new_config.kind = ProcessKind::pdp_new;
                new_config.alpha = alpha;
                new_config.theta = theta;
                new_config.n = static_cast<Eigen::Index>(n);
                new_config.m = static_cast<Eigen::Index>(opt.m);
                ProcessConfig stick_config;
                stick_config.kind = ProcessKind::pdp_stick;
                stick_config.alpha = alpha;
                stick_config.theta = theta;
                stick_config.n = static_cast<Eigen::Index>(opt.stick_n);
                // Common random numbers: both methods replay the same streams.
                const ErrorReport new_report = error_report(
                    new_config, paths, grid, H, opt.seed, opt.workers, offset);
                const ErrorReport stick_report = error_report(
                    stick_config, paths, grid, H, opt.seed, opt.workers, offset);
                ordered_json cj;
                cj["alpha"] = alpha;
                cj["theta"] = theta;
                cj["new"] = method_json(new_report);
                cj["stick"] = method_json(stick_report);
                cj["degenerate_paths"] = static_cast<std::uint64_t>(
                    new_report.degenerate_paths + stick_report.degenerate_paths);
                cells.push_back(std::move(cj));
                ++cell;
            }
        }
    } else {
        ProcessConfig new_config;
        new_config.kind = ProcessKind::nigp_new;
        new_config.theta = opt.theta;
        new_config.n = static_cast<Eigen::Index>(n);
        ProcessConfig stick_config = new_config;
        stick_config.kind = ProcessKind::nigp_stick;
        const ErrorReport new_report =
            error_report(new_config, paths, grid, H, opt.seed, opt.workers, 0);
        const ErrorReport stick_report =
            error_report(stick_config, paths, grid, H, opt.seed, opt.workers, 0);
        ordered_json cj;
        cj["alpha"] = nullptr;
        cj["theta"] = opt.theta;
        cj["new"] = method_json(new_report);
        cj["stick"] = method_json(stick_report);
        cj["degenerate_paths"] = static_cast<std::uint64_t>(
            new_report.degenerate_paths + stick_report.degenerate_paths);
        cells.push_back(std::move(cj));
    }
    doc["cells"] = std::move(cells);
    doc["seed"] = opt.seed;
    std::string payload = doc.dump(2);
    payload += '\n';
    write_output(payload, opt.out_path, out);
    return 0;
}

struct LemmaOptions {
    std::string indices = "1";
    double alpha = 0.1;
    double theta = 1.0;
    long long mc_reps = 0;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out_path = "-";
};

int cmd_lemma_prob(const LemmaOptions& opt, std::ostream& out) {
    const std::vector<Eigen::Index> indices = parse_index_list(opt.indices);
    const bool with_mc = opt.mc_reps > 0;
    std::string csv = with_mc ? "i,alpha,theta,prob,prob_mc,se\n"
                              : "i,alpha,theta,prob\n";
    ordered_json rows = ordered_json::array();
    std::uint64_t stream = 0;
    for (const Eigen::Index i : indices) {
        const double prob = lemma1_prob(static_cast<int>(i), opt.alpha, opt.theta);
        ordered_json row;
        row["i"] = static_cast<std::int64_t>(i);
        row["alpha"] = opt.alpha;
        row["theta"] = opt.theta;
        row["prob"] = prob;
        csv += std::to_string(i) + ',' + format_double(opt.alpha) + ',' +
               format_double(opt.theta) + ',' + format_double(prob);
        if (with_mc) {
            RngStream rng(opt.seed, stream++);
            const double mc = lemma1_prob_mc(
                static_cast<int>(i), opt.alpha, opt.theta,
                static_cast<std::size_t>(opt.mc_reps), rng);
            const double se = std::sqrt(mc * (1.0 - mc) /
                                        static_cast<double>(opt.mc_reps));
            row["prob_mc"] = mc;
            row["se"] = se;
            csv += ',' + format_double(mc) + ',' + format_double(se);
        }
        csv += '\n';
        rows.push_back(std::move(row));
    }
    std::string payload = opt.format == "csv" ? csv : rows.dump(2) + "\n";
    write_output(payload, opt.out_path, out);
    return 0;
}

struct OrderOptions {
    std::string process = "nigp-stick";
    std::string indices = "1";
    double alpha = 0.5;
    double theta = 1.0;
    long long n = 0;
    long long m = 500;
    long long reps = 500;
    std::string base = "uniform:0,1";
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out_path = "-";
};

int cmd_order_prob(const OrderOptions& opt, std::ostream& out) {
    SampleOptions shim;
    shim.process = opt.process;
    shim.alpha = opt.alpha;
    shim.theta = opt.theta;
    shim.n = opt.n;
    shim.m = opt.m;
    const ProcessConfig config = build_config(shim);
    const BaseMeasure H = BaseMeasure::parse(opt.base);
    if (opt.reps < 1) throw DomainError("order-prob: reps must be positive");
    const std::vector<Eigen::Index> indices = parse_index_list(opt.indices);
    std::string csv = "i,prob\n";
    ordered_json rows = ordered_json::array();
    for (const Eigen::Index i : indices) {
        const double prob = empirical_order_prob(
            config, H, i, static_cast<std::size_t>(opt.reps), opt.seed);
        csv += std::to_string(i) + ',' + format_double(prob) + '\n';
        rows.push_back(ordered_json{{"i", static_cast<std::int64_t>(i)},
                                    {"prob", prob}});
    }
    std::string payload = opt.format == "csv" ? csv : rows.dump(2) + "\n";
    write_output(payload, opt.out_path, out);
    return 0;
}

struct MomentOptions {
    std::string process = "pdp";
    double alpha = 0.0;
    double theta = 1.0;
    double h_a = 0.5;
    std::optional<double> eps;
    std::string format = "csv";
    std::string out_path = "-";
};

int cmd_moments(const MomentOptions& opt, std::ostream& out) {
    MomentPair mp;
    std::optional<double> bound;
    if (opt.process == "pdp") {
        mp = pdp_moments({opt.alpha, opt.theta}, opt.h_a);
        if (opt.eps) {
            bound = chebyshev_bound_pdp({opt.alpha, opt.theta}, opt.h_a, *opt.eps);
        }
    } else if (opt.process == "nigp") {
        mp = nigp_moments(opt.theta, opt.h_a);
        if (opt.eps) bound = chebyshev_bound_nigp(opt.theta, opt.h_a, *opt.eps);
    } else {
        throw DomainError("moments: process must be pdp or nigp");
    }
    std::string csv = "quantity,value\n";
    csv += "mean," + format_double(mp.mean) + '\n';
    csv += "variance," + format_double(mp.variance) + '\n';
    ordered_json doc;
    doc["mean"] = mp.mean;
    doc["variance"] = mp.variance;
    if (bound) {
        csv += "chebyshev_bound," + format_double(*bound) + '\n';
        doc["chebyshev_bound"] = *bound;
    }
    std::string payload = opt.format == "csv" ? csv : doc.dump(2) + "\n";
    write_output(payload, opt.out_path, out);
    return 0;
}

void add_common_output(CLI::App* cmd, std::string* format, std::string* out_path,
                       const std::string& default_format) {
    *format = default_format;
    cmd->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", *out_path, "output file ('-' for stdout)");
}

}  // namespace

int run_cli(const int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "finite approximations of four random probability measures "
        "(Dirichlet, stable, two-parameter Poisson-Dirichlet, normalized "
        "inverse-Gaussian)"};
    app.require_subcommand(1);

    SampleOptions sample_opt;
    CLI::App* sample = app.add_subcommand(
        "sample", "simulate CDF paths of one construction on a grid");
    sample->add_option("--process", sample_opt.process, "construction to run")
        ->required();
    sample->add_option("--alpha", sample_opt.alpha, "discount parameter");
    sample->add_option("--theta", sample_opt.theta, "concentration parameter");
    sample->add_option("--n", sample_opt.n, "truncation level");
    sample->add_option("--m", sample_opt.m, "inner truncation level (pdp-new)");
    sample->add_option("--epsilon", sample_opt.epsilon,
                       "epsilon stopping rule (pdp-stick)");
    sample->add_option("--base", sample_opt.base, "base measure spec");
    sample->add_option("--grid", sample_opt.grid, "evaluation grid start:stop:step");
    sample->add_option("--paths", sample_opt.paths, "number of independent paths");
    sample->add_option("--seed", sample_opt.seed, "master seed");
    sample->add_option("--workers", sample_opt.workers, "worker threads");
    add_common_output(sample, &sample_opt.format, &sample_opt.out_path, "csv");

    CompareOptions compare_opt;
    CLI::App* compare = app.add_subcommand(
        "compare", "new-construction vs stick-breaking error report");
    compare->add_option("--family", compare_opt.family, "pdp or nigp");
    compare->add_option("--n", compare_opt.n, "new-construction truncation level");
    compare->add_option("--m", compare_opt.m, "inner truncation level (pdp)");
    compare->add_option("--stick-n", compare_opt.stick_n,
                        "stick-breaking truncation level (pdp)");
    compare->add_option("--theta", compare_opt.theta,
                        "concentration parameter (nigp family)");
    compare->add_option("--paths", compare_opt.paths, "paths per cell");
    compare->add_option("--seed", compare_opt.seed, "master seed");
    compare->add_option("--workers", compare_opt.workers, "worker threads");
    add_common_output(compare, &compare_opt.format, &compare_opt.out_path,
                      "json");

    LemmaOptions lemma_opt;
    CLI::App* lemma = app.add_subcommand(
        "lemma-prob", "descending-order probability of stick weights "
                      "(quadrature, optional Monte Carlo check)");
    lemma->add_option("--i", lemma_opt.indices, "weight indices, comma separated");
    lemma->add_option("--alpha", lemma_opt.alpha, "discount parameter");
    lemma->add_option("--theta", lemma_opt.theta, "concentration parameter");
    lemma->add_option("--mc-reps", lemma_opt.mc_reps,
                      "add a Monte Carlo column with this many reps");
    lemma->add_option("--seed", lemma_opt.seed, "seed for the Monte Carlo column");
    add_common_output(lemma, &lemma_opt.format, &lemma_opt.out_path, "csv");

    OrderOptions order_opt;
    CLI::App* order = app.add_subcommand(
        "order-prob", "empirical P(weight_{i+1} < weight_i) for a construction");
    order->add_option("--process", order_opt.process, "construction to run");
    order->add_option("--i", order_opt.indices, "weight indices, comma separated");
    order->add_option("--alpha", order_opt.alpha, "discount parameter");
    order->add_option("--theta", order_opt.theta, "concentration parameter");
    order->add_option("--n", order_opt.n, "truncation level");
    order->add_option("--m", order_opt.m, "inner truncation level (pdp-new)");
    order->add_option("--reps", order_opt.reps, "independent draws per index");
    order->add_option("--base", order_opt.base, "base measure spec");
    order->add_option("--seed", order_opt.seed, "master seed");
    add_common_output(order, &order_opt.format, &order_opt.out_path, "csv");

    MomentOptions moment_opt;
    CLI::App* moments = app.add_subcommand(
        "moments", "closed-form mean, variance and Chebyshev bound");
    moments->add_option("--process", moment_opt.process, "pdp or nigp");
    moments->add_option("--alpha", moment_opt.alpha, "discount parameter (pdp)");
    moments->add_option("--theta", moment_opt.theta, "concentration parameter");
    moments->add_option("--hA", moment_opt.h_a, "base-measure mass of the set");
    moments->add_option("--eps", moment_opt.eps,
                        "deviation for the Chebyshev bound");
    add_common_output(moments, &moment_opt.format, &moment_opt.out_path, "csv");

    try {
        app.parse(argc, argv);
        if (sample->parsed()) return cmd_sample(sample_opt, out, err);
        if (compare->parsed()) return cmd_compare(compare_opt, out, err);
        if (lemma->parsed()) return cmd_lemma_prob(lemma_opt, out);
        if (order->parsed()) return cmd_order_prob(order_opt, out);
        if (moments->parsed()) return cmd_moments(moment_opt, out);
        err << "error: no command given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationOverflow& e) {
        err << "error: " << e.what() << " (partial length " << e.partial_length
            << ")\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace rpmsim
