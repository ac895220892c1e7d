#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantor/cdf.hpp"
#include "cantor/digit_vector.hpp"
#include "cantor/errors.hpp"
#include "cantor/expansion.hpp"
#include "cantor/interpolation.hpp"
#include "cantor/io.hpp"
#include "cantor/measure.hpp"
#include "cantor/reconstruction.hpp"
#include "cantor/verify.hpp"

namespace cantor::cli {
namespace {

struct Options {
    std::string vector;
    std::string left;
    std::string right;
    std::string x;
    std::string in;
    std::string out;
    std::string log;
    std::string oracle;
    std::string mode;
    std::string points;
    std::string suite = "all";
    std::size_t base = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t level = 1;
    std::size_t scale = 0;
    std::size_t depth = default_classify_depth;
    std::size_t count = 1;
    std::size_t samples = 1;
    std::size_t digit_count = 512;
    std::size_t m = 2;
    std::size_t h = 1;
    std::size_t lmax = 4096;
    std::uint64_t seed = 0;
    int digits = -1;
    unsigned jobs = 1;
    bool alternate = false;
    bool bruteforce = false;
};

std::string text_of(const Rational& value, int digits) { return io::format_value(value, digits); }

Rational parse_point(const std::string& text) {
    if (text.find('(') != std::string::npos) {
        return from_expansion(parse_expansion(text));
    }
    return Rational::parse(text);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot read '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error(errc::parse_error, "cannot write '" + path + "'");
    return out;
}

void emit_vector(std::ostream& out, const DigitVector& v, const std::string& json_path) {
    out << io::format_vector_text(v) << '\n';
    if (!json_path.empty()) {
        auto file = open_output(json_path);
        file << io::vector_to_json(v).dump() << '\n';
    }
}

CdfOracle load_oracle(const std::string& spec) {
    const bool table = spec.size() > 4 && spec.compare(spec.size() - 4, 4, ".csv") == 0;
    if (!table) {
        return CdfOracle::hidden(io::load_vector(spec));
    }
    auto in = open_input(spec);
    CdfOracle::SampleTable samples;
    for (auto& [x, y] : io::read_table_csv(in)) samples[x] = y;
    return CdfOracle::table(std::move(samples));
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
    CdfOracle oracle = load_oracle(o.oracle);
    std::optional<DigitVector> result;
    if (o.mode == "known-n" || o.mode == "conditional") {
        if (o.n == 0) throw error(errc::invalid_data, "--n is required for mode " + o.mode);
        result = o.mode == "known-n" ? reconstruct_known_n(oracle, o.n) : conditional_reconstruct(oracle, o.n);
    } else {
        if (o.k == 0) throw error(errc::invalid_data, "--k is required for mode bounded-k");
        result = reconstruct_bounded_k(oracle, o.k, o.depth, o.seed).vector;
    }
    emit_vector(out, *result, o.out);
    out << "queries: " << oracle.rational_queries() << '\n';
    if (o.mode == "bounded-k") out << "stream queries: " << oracle.stream_queries() << '\n';
    if (!o.log.empty()) {
        auto file = open_output(o.log);
        file << "x,Fx\n";
        for (const auto& [x, y] : oracle.query_log()) file << x << ',' << y << '\n';
    }
    return 0;
}

int cmd_uniqueness(const Options& o, std::ostream& out) {
    if (o.bruteforce) {
        for (const auto& x : bruteforce_distinguishing_set(o.k)) out << x << '\n';
        return 0;
    }
    UniquenessSet set = build_uniqueness_set(o.k, o.seed, o.depth);
    out << "# rational points: " << set.rational_points.size() << " (bound " << uniqueness_size_bound(o.k) << ")\n";
    for (const auto& x : set.rational_points) out << x << '\n';
    out << "# stream probes: " << set.stream_probes.size() << '\n';
    for (auto& p : set.stream_probes) {
        out << p.base << "\t{" << p.first << "," << p.second << "}\t";
        for (Digit d : p.stream.prefix(16)) out << d;
        out << "...\n";
    }
    return 0;
}

int cmd_mu_sample(const Options& o, std::ostream& out) {
    const DigitVector v = io::load_vector(o.vector);
    out << "index,digits,value\n";
    auto streams = sample_mu({v, o.seed}, o.count, o.depth);
    for (std::size_t i = 0; i < streams.size(); ++i) {
        out << i << ',';
        for (Digit d : streams[i].prefix(o.depth)) out << d << (v.base() > 10 ? "." : "");
        out << ',' << text_of(streams[i].prefix_value(o.depth), o.digits) << '\n';
    }
    return 0;
}

int cmd_normality(const Options& o, std::ostream& out) {
    const DigitVector v = io::load_vector(o.vector);
    const auto report = aggregate_frequency(v, o.base, o.digit_count, o.samples, o.seed, o.jobs);
    out << "digit,count,frequency\n";
    for (std::size_t d = 0; d < report.base; ++d) {
        out << d << ',' << report.counts[d] << ',' << std::fixed << std::setprecision(6) << report.frequency(d)
            << '\n';
    }
    out << "# total " << report.total << ", max deviation " << std::fixed << std::setprecision(6)
        << report.max_deviation << '\n';
    return 0;
}

int cmd_weyl(const Options& o, std::ostream& out) {
    const DigitVector v = io::load_vector(o.vector);
    out << "L,median_ratio\n";
    for (std::size_t length = 64; length <= o.lmax; length *= 2) {
        out << length << ',' << std::fixed << std::setprecision(6)
            << weyl_median_ratio(v, o.m, o.h, length, o.samples, o.seed) << '\n';
    }
    return 0;
}

int dispatch(const std::string& name, const Options& o, std::ostream& out) {
    if (name == "eval") {
        out << text_of(eval(io::load_vector(o.vector), parse_point(o.x)), o.digits) << '\n';
    } else if (name == "expand") {
        const Rational x = parse_point(o.x);
        if (x == Rational(1)) {
            out << format_expansion(*alternate_expansion(x, o.base)) << '\n';
        } else {
            out << format_expansion(to_expansion(x, o.base)) << '\n';
            if (o.alternate) {
                if (auto alt = alternate_expansion(x, o.base)) out << format_expansion(*alt) << '\n';
            }
        }
    } else if (name == "kron") {
        emit_vector(out, kronecker(io::load_vector(o.left), io::load_vector(o.right)), o.out);
    } else if (name == "power") {
        emit_vector(out, power(io::load_vector(o.vector), o.n), o.out);
    } else if (name == "reverse") {
        emit_vector(out, reverse(io::load_vector(o.vector)), o.out);
    } else if (name == "canon") {
        emit_vector(out, canonical_root(io::load_vector(o.vector)), o.out);
    } else if (name == "equiv") {
        const auto w = equivalence_witness(io::load_vector(o.left), io::load_vector(o.right));
        out << (w ? "true" : "false") << '\n';
        if (w) {
            out << "common lift: " << io::format_vector_text(w->lifted_vector) << " (powers " << w->left_power
                << ", " << w->right_power << ")\n";
        }
    } else if (name == "approx") {
        for (const auto& [x, y] : piecewise_points(io::load_vector(o.vector), o.level)) {
            out << text_of(x, o.digits) << '\t' << text_of(y, o.digits) << '\n';
        }
    } else if (name == "interp") {
        auto in = open_input(o.in);
        const auto points = io::read_dataset_csv(in);
        emit_vector(out, o.scale ? interpolate_at_scale(points, o.scale) : interpolate(points), o.out);
    } else if (name == "maxerr") {
        auto in = open_input(o.in);
        out << text_of(max_error(io::read_dataset_csv(in)), o.digits) << '\n';
    } else if (name == "reconstruct") {
        return cmd_reconstruct(o, out);
    } else if (name == "uniqueness") {
        return cmd_uniqueness(o, out);
    } else if (name == "verify-uniqueness") {
        std::vector<Rational> points;
        if (!o.in.empty()) {
            auto in = open_input(o.in);
            std::string line;
            while (std::getline(in, line)) {
                auto part = io::parse_rational_list(line);
                points.insert(points.end(), part.begin(), part.end());
            }
        } else {
            points = io::parse_rational_list(o.points);
        }
        out << (verify_uniqueness(o.k, points) ? "true" : "false") << '\n';
    } else if (name == "mu-sample") {
        return cmd_mu_sample(o, out);
    } else if (name == "normality") {
        return cmd_normality(o, out);
    } else if (name == "intersect") {
        out << std::fixed << std::setprecision(6)
            << intersection_rate(io::load_vector(o.left), io::load_vector(o.right), o.count, o.depth, o.seed, o.jobs)
            << '\n';
    } else if (name == "weyl") {
        return cmd_weyl(o, out);
    } else if (name == "verify") {
        const auto results = run_suite(o.suite, o.jobs);
        print_results(out, results);
        return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }) ? 0 : 1;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tools for Cantor-set distribution functions", "cantor-cdf"};
    app.require_subcommand(1);
    Options o;

    auto positive = CLI::PositiveNumber;
    auto add_vector = [&](CLI::App* sub) {
        sub->add_option("--vector,-v", o.vector, "digit vector: 3:101, inline JSON, or a JSON file")->required();
    };
    auto add_pair = [&](CLI::App* sub, const char* first, const char* second) {
        sub->add_option(first, o.left, "first digit vector")->required();
        sub->add_option(second, o.right, "second digit vector")->required();
    };
    auto add_digits = [&](CLI::App* sub) {
        sub->add_option("--digits", o.digits, "print truncated decimals with this many digits")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed")->required(); };
    auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs,-j", o.jobs, "worker threads")->check(positive); };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate F at a rational");
    add_vector(eval_cmd);
    eval_cmd->add_option("--x", o.x, "point, as p/q, decimal, or expansion like 3:(02)")->required();
    add_digits(eval_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "base-N expansion of a rational");
    expand_cmd->add_option("--x", o.x, "rational in [0,1]")->required();
    expand_cmd->add_option("--base,-b", o.base, "expansion base")->required()->check(CLI::Range(2, 1 << 20));
    expand_cmd->add_flag("--alternate", o.alternate, "also print the trailing-(N-1) form when there is one");

    auto* kron_cmd = app.add_subcommand("kron", "Kronecker product");
    add_pair(kron_cmd, "--left", "--right");
    kron_cmd->add_option("--out", o.out, "write JSON here");

    auto* power_cmd = app.add_subcommand("power", "Kronecker power");
    add_vector(power_cmd);
    power_cmd->add_option("--n", o.n, "exponent")->required()->check(positive);
    power_cmd->add_option("--out", o.out, "write JSON here");

    auto* reverse_cmd = app.add_subcommand("reverse", "reversed vector");
    add_vector(reverse_cmd);
    reverse_cmd->add_option("--out", o.out, "write JSON here");

    auto* canon_cmd = app.add_subcommand("canon", "canonical root");
    add_vector(canon_cmd);
    canon_cmd->add_option("--out", o.out, "write JSON here");

    auto* equiv_cmd = app.add_subcommand("equiv", "test whether two vectors share a CDF");
    add_pair(equiv_cmd, "--left", "--right");

    auto* approx_cmd = app.add_subcommand("approx", "corner points of the level-n approximant (TSV)");
    add_vector(approx_cmd);
    approx_cmd->add_option("--level,-n", o.level, "approximation level")->check(positive);
    add_digits(approx_cmd);

    auto* interp_cmd = app.add_subcommand("interp", "interpolate an x,y dataset");
    interp_cmd->add_option("--in", o.in, "dataset CSV")->required();
    interp_cmd->add_option("--out", o.out, "write JSON here");
    interp_cmd->add_option("--scale", o.scale, "use this scale instead of the smallest one")->check(positive);

    auto* maxerr_cmd = app.add_subcommand("maxerr", "worst-case reconstruction error of a dataset");
    maxerr_cmd->add_option("--in", o.in, "dataset CSV")->required();
    add_digits(maxerr_cmd);

    auto* rec_cmd = app.add_subcommand("reconstruct", "recover a vector from CDF samples");
    rec_cmd->add_option("--mode", o.mode, "known-n, conditional or bounded-k")
        ->required()
        ->check(CLI::IsMember({"known-n", "conditional", "bounded-k"}));
    rec_cmd->add_option("--oracle", o.oracle, "hidden vector (text or JSON) or sample table CSV")->required();
    rec_cmd->add_option("--n", o.n, "scale factor")->check(CLI::Range(3, 1 << 20));
    rec_cmd->add_option("--k", o.k, "bound on the scale factor")->check(CLI::Range(3, 64));
    rec_cmd->add_option("--depth", o.depth, "stream classification depth")->check(positive);
    auto* rec_seed = rec_cmd->add_option("--seed", o.seed, "probe seed (required for bounded-k)");
    rec_cmd->add_option("--out", o.out, "write JSON here");
    rec_cmd->add_option("--log", o.log, "write the query log CSV here");

    auto* uniq_cmd = app.add_subcommand("uniqueness", "sampling set for scale factors up to K");
    uniq_cmd->add_option("--k", o.k, "bound on the scale factor")->required()->check(CLI::Range(3, 64));
    uniq_cmd->add_option("--depth", o.depth, "probe depth")->check(positive);
    auto* uniq_seed = uniq_cmd->add_option("--seed", o.seed, "probe seed (required unless --bruteforce)");
    uniq_cmd->add_flag("--bruteforce", o.bruteforce, "print a greedy distinguishing set instead");

    auto* vu_cmd = app.add_subcommand("verify-uniqueness", "check that points separate every class up to K");
    vu_cmd->add_option("--k", o.k, "bound on the scale factor")->required()->check(CLI::Range(3, 12));
    auto* points_opt = vu_cmd->add_option("--points", o.points, "comma-separated rationals");
    vu_cmd->add_option("--in", o.in, "file of comma- or newline-separated rationals")->excludes(points_opt);

    auto* mu_cmd = app.add_subcommand("mu-sample", "draw points from the invariant measure");
    add_vector(mu_cmd);
    mu_cmd->add_option("--count", o.count, "number of samples")->check(positive);
    mu_cmd->add_option("--depth", o.depth, "digits per sample")->check(positive);
    add_seed(mu_cmd);
    add_digits(mu_cmd);

    auto* norm_cmd = app.add_subcommand("normality", "base-M digit frequencies of measure samples");
    add_vector(norm_cmd);
    norm_cmd->add_option("--base,-b", o.base, "target base M")->required()->check(CLI::Range(2, 1 << 16));
    norm_cmd->add_option("--digits", o.digit_count, "digits per sample")->check(positive);
    norm_cmd->add_option("--samples", o.samples, "number of samples")->check(positive);
    add_seed(norm_cmd);
    add_jobs(norm_cmd);

    auto* inter_cmd = app.add_subcommand("intersect", "fraction of mu_a samples not refuted as members of C_b");
    add_pair(inter_cmd, "--a", "--b");
    inter_cmd->add_option("--count", o.count, "number of samples")->check(positive);
    inter_cmd->add_option("--depth", o.depth, "digits checked per sample")->check(positive);
    add_seed(inter_cmd);
    add_jobs(inter_cmd);

    auto* weyl_cmd = app.add_subcommand("weyl", "median |Weyl sum|/L for doubling L");
    weyl_cmd->set_help_flag("--help", "print this help message and exit");
    add_vector(weyl_cmd);
    weyl_cmd->add_option("--m", o.m, "multiplier M")->check(CLI::Range(2, 1 << 16));
    weyl_cmd->add_option("--h", o.h, "frequency h")->check(positive);
    weyl_cmd->add_option("--lmax", o.lmax, "largest L")->check(CLI::Range(64, 1 << 16));
    weyl_cmd->add_option("--samples", o.samples, "number of samples")->check(positive);
    add_seed(weyl_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("suite", o.suite, "algebra, cdf, interpolation, reconstruction, measure or all")
        ->check(CLI::IsMember({"algebra", "cdf", "interpolation", "reconstruction", "measure", "all"}));
    add_jobs(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const bool seed_missing = (name == "reconstruct" && o.mode == "bounded-k" && rec_seed->count() == 0) ||
                              (name == "uniqueness" && !o.bruteforce && uniq_seed->count() == 0);
    if (seed_missing) {
        err << "error: --seed is required for " << name << '\n';
        return 1;
    }
    try {
        return dispatch(name, o, out);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return is_procedure_failure(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cantor::cli
