// Command-line interface: block and Kazhdan-Lusztig invariants of the
// parabolic categories attached to the four diagram families.
//
// Subcommands: realize, block, dmatrix, cartan, ext, koszul, stability,
// klambda, dualblock, characters.  Output is JSON (schema-versioned) or CSV.
// Exit codes: 0 ok, 1 certificate failure, 2 usage error.

#include "oblock/cato.hpp"
#include "oblock/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace oblock;

struct CommonOpts {
    std::string type = "a";
    int m = 1;
    int n = 1;
    std::string lambda_spec; // "head:[..] tail:[..] d:.."
    std::string levi = "all";
    std::string format = "json";
    std::string output;
    std::string config_file;
    std::string n_range;
    long long depth = 10;
    int jobs = 0;
    bool timings = false;
};

[[noreturn]] void usage_error(const std::string& msg)
{
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

// Plain-text key-value config file, one "key value" or "key: value" per line;
// explicit flags win over file values.
void merge_config_file(const CLI::App& sub, CommonOpts& opts, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        usage_error("cannot open config file '" + path + "'");
    auto unset = [&](const std::string& flag) { return sub.count(flag) == 0; };
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string key, value;
        ls >> key;
        std::getline(ls, value);
        if (!key.empty() && key.back() == ':')
            key.pop_back();
        const std::size_t b = value.find_first_not_of(" \t");
        value = (b == std::string::npos) ? "" : value.substr(b);
        if (key.empty() || value.empty())
            continue;
        try {
            if (key == "type" && unset("--type"))
                opts.type = value;
            else if (key == "m" && unset("--m"))
                opts.m = std::stoi(value);
            else if (key == "n" && unset("--n"))
                opts.n = std::stoi(value);
            else if (key == "lambda" && unset("--lambda"))
                opts.lambda_spec = value;
            else if (key == "levi" && unset("--levi"))
                opts.levi = value;
            else if (key == "depth" && unset("--depth"))
                opts.depth = std::stoll(value);
            else if (key == "format" && unset("--format"))
                opts.format = value;
            else if (key == "output" && unset("--output"))
                opts.output = value;
            else if (key == "n-range" && unset("--n-range"))
                opts.n_range = value;
            else if (key == "jobs" && unset("--jobs"))
                opts.jobs = std::stoi(value);
        } catch (const std::exception&) {
            usage_error("malformed config value for key '" + key + "'");
        }
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Half2 parse_half2(const std::string& tok)
{
    const Rat r = parse_rat(tok);
    const Rat doubled = r * Rat(2);
    if (doubled.denominator() != 1)
        usage_error("value '" + tok + "' is not a half-integer");
    return doubled.numerator();
}

// Weight syntax: "head:[-1/2,3] tail:[2,1] d:0".  Missing parts default to 0;
// the tail list is zero-padded to rank n.
Weight parse_weight(const LieDatum& datum, const std::string& spec)
{
    Weight w = zero_weight(datum);
    if (spec.empty() || spec == "zero")
        return w;
    std::istringstream in(spec);
    std::string tok;
    while (in >> tok) {
        const std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
            usage_error("weight token '" + tok + "' lacks a key");
        const std::string key = tok.substr(0, colon);
        std::string val = tok.substr(colon + 1);
        if (key == "d") {
            w.level2 = parse_half2(val);
            continue;
        }
        if (val.size() < 2 || val.front() != '[' || val.back() != ']')
            usage_error("weight key '" + key + "' expects a [..] list");
        val = val.substr(1, val.size() - 2);
        std::vector<Half2> items;
        if (!val.empty())
            for (const std::string& piece : split(val, ','))
                items.push_back(parse_half2(piece));
        if (key == "head") {
            if (static_cast<int>(items.size()) != datum.m())
                usage_error("head list must have exactly m entries");
            for (int p = 0; p < datum.m(); ++p)
                w.coords2[p] = items[p];
        } else if (key == "tail") {
            if (static_cast<int>(items.size()) > datum.n())
                usage_error("tail list longer than n");
            for (std::size_t i = 0; i < items.size(); ++i)
                w.coords2[datum.m() + i] = items[i];
        } else {
            usage_error("unknown weight key '" + key + "'");
        }
    }
    return w;
}

std::vector<std::size_t> parse_levi(const LieDatum& datum, const std::string& levi)
{
    const std::size_t bx = datum.num_simple() - datum.n();
    std::vector<std::size_t> heads;
    if (levi == "all") {
        for (std::size_t s = 0; s < bx; ++s)
            heads.push_back(s);
    } else if (levi == "none") {
        // tail-only parabolic
    } else {
        for (const std::string& piece : split(levi, ','))
            try {
                heads.push_back(static_cast<std::size_t>(std::stoul(piece)));
            } catch (const std::exception&) {
                usage_error("malformed levi spec '" + levi + "'");
            }
    }
    return heads;
}

std::pair<int, int> parse_n_range(const std::string& s)
{
    const std::size_t dots = s.find("..");
    if (dots == std::string::npos)
        usage_error("n-range must look like 2..4");
    try {
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        usage_error("malformed n-range '" + s + "'");
    }
}

void emit(const CommonOpts& opts, const std::string& text)
{
    if (opts.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << "\n";
    } else {
        std::ofstream out(opts.output, std::ios::binary);
        if (!out)
            usage_error("cannot write output file '" + opts.output + "'");
        out << text;
    }
}

Json config_json(const CommonOpts& opts, const std::string& command)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["type"] = opts.type;
    j["m"] = opts.m;
    j["n"] = opts.n;
    if (!opts.lambda_spec.empty())
        j["lambda"] = opts.lambda_spec;
    j["levi"] = opts.levi;
    if (!opts.n_range.empty())
        j["n_range"] = opts.n_range;
    j["depth"] = opts.depth;
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void finish(const CommonOpts& opts, Json& report, const Timer& timer, bool certificates_ok)
{
    if (opts.timings) {
        Json t;
        t["total_ms"] = timer.ms();
        report["timings"] = t;
    }
    emit(opts, report.dump(2));
    std::exit(certificates_ok ? 0 : 1);
}

LieType parse_type(const CommonOpts& opts)
{
    if (opts.type.size() != 1)
        usage_error("type must be one of a, b, c, d");
    try {
        return lie_type_from_char(opts.type[0]);
    } catch (const std::exception& e) {
        usage_error(e.what());
    }
}

struct BlockComputation {
    LieDatum datum;
    ParabolicSpec y;
    Weight lambda;
    BlockPoset block;
    KLTable table;

    BlockComputation(LieType t, const CommonOpts& opts)
        : datum(t, opts.m, opts.n),
          y(ParabolicSpec::from_head_subset(datum, parse_levi(datum, opts.levi))),
          lambda(parse_weight(datum, opts.lambda_spec)),
          block(orbit_block(lambda, datum, y)),
          table(datum, y.members)
    {
    }
};

int run_command(const std::string& cmd, const CommonOpts& opts)
{
    Timer timer;
    const LieType t = parse_type(opts);

    if (cmd == "realize") {
        const LieDatum datum(t, opts.m, opts.n);
        const RealizationReport verification = verify_realization(datum, 100, 20260810);
        Json report = config_json(opts, cmd);
        report["realization"] = realize_report(datum, verification);
        finish(opts, report, timer, verification.pass);
    }

    if (cmd == "block") {
        BlockComputation bc(t, opts);
        Json report = config_json(opts, cmd);
        report["block"] = block_report(bc.datum, bc.block);
        finish(opts, report, timer, true);
    }

    if (cmd == "dmatrix" || cmd == "cartan" || cmd == "ext" || cmd == "koszul") {
        BlockComputation bc(t, opts);
        const GradedMatrices gm = build_graded_matrices(bc.block, bc.datum, bc.y, bc.table);
        const KoszulReport cert = koszulity_certificate(bc.block, gm, bc.datum, bc.y, bc.table);
        if (opts.format == "csv") {
            std::vector<std::string> labels;
            for (std::size_t i : gm.labels)
                labels.push_back(weight_str(bc.datum, bc.block.elements[i].weight));
            const PolyMatrix& mat = (cmd == "cartan") ? gm.cartan
                                    : (cmd == "ext") ? gm.ext_ll
                                                     : gm.dec;
            emit(opts, matrix_csv(mat, labels));
            return cert.pass ? 0 : 1;
        }
        Json report = config_json(opts, cmd);
        report["block"] = block_report(bc.datum, bc.block);
        report["matrices"] = matrices_report(bc.datum, bc.block, gm);
        report["certificates"] = koszul_json(cert);
        finish(opts, report, timer, cert.pass);
    }

    if (cmd == "characters") {
        const LieDatum datum(t, opts.m, opts.n);
        const ParabolicSpec y =
            ParabolicSpec::from_head_subset(datum, parse_levi(datum, opts.levi));
        const Weight lambda = parse_weight(datum, opts.lambda_spec);
        const Character ch = verma_character(lambda, datum, y, opts.depth);
        if (opts.format == "csv") {
            emit(opts, character_csv(datum, ch));
            return 0;
        }
        Json report = config_json(opts, cmd);
        report["character"] = character_json(datum, ch);
        finish(opts, report, timer, true);
    }

    if (cmd == "stability") {
        const LieDatum dk(t, opts.m, opts.n);
        const Weight lambda = parse_weight(dk, opts.lambda_spec);
        const auto heads = parse_levi(dk, opts.levi);
        auto [lo, hi] = opts.n_range.empty() ? std::make_pair(opts.n + 1, opts.n + 1)
                                             : parse_n_range(opts.n_range);
        if (hi < lo)
            usage_error("empty n-range");
        // Ranks are independent computations; run them on a small pool and
        // collect into rank order, so the report is deterministic.
        std::vector<StabilityReport> reports(hi - lo + 1);
        std::vector<std::string> errors(hi - lo + 1);
        {
            unsigned pool = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                          : std::max(1u, std::thread::hardware_concurrency());
            pool = std::min<unsigned>(pool, reports.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= reports.size())
                        return;
                    try {
                        reports[i] = truncation_stability(lambda, t, opts.m, opts.n,
                                                          lo + static_cast<int>(i), heads);
                    } catch (const std::exception& e) {
                        errors[i] = e.what();
                    }
                }
            };
            std::vector<std::thread> threads;
            for (unsigned i = 1; i < pool; ++i)
                threads.emplace_back(worker);
            worker();
            for (std::thread& th : threads)
                th.join();
        }
        for (const std::string& err : errors)
            if (!err.empty())
                usage_error(err);
        Json sweeps = Json::array();
        bool all_pass = true;
        for (const StabilityReport& rep : reports) {
            all_pass = all_pass && rep.pass;
            sweeps.push_back(stability_json(rep));
        }
        Json report = config_json(opts, cmd);
        report["stability"] = sweeps;
        finish(opts, report, timer, all_pass);
    }

    if (cmd == "klambda") {
        const LieDatum datum(t, opts.m, opts.n);
        const Weight lambda = parse_weight(datum, opts.lambda_spec);
        const auto heads = parse_levi(datum, opts.levi);
        const KLambdaReport rep = find_k_lambda(lambda, t, opts.m, heads);
        Json report = config_json(opts, cmd);
        report["klambda"] = klambda_json(datum, rep);
        finish(opts, report, timer, rep.symbolic_certificate && rep.enumeration_confirms);
    }

    if (cmd == "dualblock") {
        const LieDatum d0(t, opts.m, opts.n);
        const Weight lambda = parse_weight(d0, opts.lambda_spec);
        const auto heads = parse_levi(d0, opts.levi);
        int nn = opts.n;
        if (!opts.n_range.empty())
            nn = parse_n_range(opts.n_range).second;
        const DualBlockLabels dual = dual_block_labels(lambda, t, opts.m, nn, heads);
        const LieDatum dn(t, opts.m, nn);
        Json report = config_json(opts, cmd);
        report["rank"] = nn;
        report["dualblock"] = dual_block_json(dn, dual);
        finish(opts, report, timer, dual.ok && dual.stabilizer_matches);
    }

    usage_error("unknown command '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"block and Kazhdan-Lusztig invariants of parabolic categories"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<CLI::App*> subs;
    for (const char* name : {"realize", "block", "dmatrix", "cartan", "ext", "koszul",
                             "stability", "klambda", "dualblock", "characters"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--type", opts.type, "diagram type: a, b, c or d");
        sub->add_option("--m", opts.m, "head size (>= 1)");
        sub->add_option("--n", opts.n, "tail rank (>= 1)");
        sub->add_option("--lambda", opts.lambda_spec,
                        "anchor weight, e.g. \"head:[-1/2] tail:[2,1] d:0\"");
        sub->add_option("--levi", opts.levi, "head roots in Y: all, none, or indices i,j");
        sub->add_option("--depth", opts.depth, "character depth bound");
        sub->add_option("--format", opts.format, "json or csv");
        sub->add_option("--output", opts.output, "output path (default stdout)");
        sub->add_option("--config", opts.config_file, "key-value config file");
        sub->add_option("--n-range", opts.n_range, "rank sweep, e.g. 2..4");
        sub->add_option("--jobs", opts.jobs, "parallelism degree (0 = all cores)");
        sub->add_flag("--timings", opts.timings, "include timings in the report");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 2;
    }

    for (CLI::App* sub : subs) {
        if (!sub->parsed())
            continue;
        if (!opts.config_file.empty())
            merge_config_file(*sub, opts, opts.config_file);
        try {
            return run_command(sub->get_name(), opts);
        } catch (const std::invalid_argument& e) {
            usage_error(e.what());
        } catch (const std::exception& e) {
            std::cerr << "internal error: " << e.what() << "\n";
            return 1;
        }
    }
    return 2;
}
