// Command-line driver for the corr13 shared library. Every computation goes
// through the C API; this tool only parses arguments, renders the JSON
// reports as text or CSV, and maps verdicts to exit codes:
//   0  verified / informational success
//   1  a verification stage reported a mismatch
//   2  invalid parameters or a computation error

#include <CLI11.hpp>
#include <json.hpp>

#include <corr13.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct ParamArgs {
    uint64_t p = 0;
    uint32_t n = 0;
    int64_t i = -1; // -1: not supplied
};

struct OutputArgs {
    std::string format = "text";
    std::string out_path;
};

void add_param_options(CLI::App* cmd, ParamArgs& args, bool need_i)
{
    cmd->add_option("--p", args.p, "characteristic p (prime, p = 1 mod 3)")
        ->required();
    cmd->add_option("--n", args.n, "extension degree n")->required();
    auto* opt_i = cmd->add_option("--i", args.i,
                                  "Frobenius index i in [0, n) of the "
                                  "decimation d = (q-1)/3 + p^i");
    if (need_i) opt_i->required();
}

void add_output_options(CLI::App* cmd, OutputArgs& args)
{
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out_path, "write output to PATH instead of stdout");
}

struct ParamsDeleter {
    void operator()(c13_params* p) const { c13_params_destroy(p); }
};
struct FieldDeleter {
    void operator()(c13_field* f) const { c13_field_destroy(f); }
};
using ParamsPtr = std::unique_ptr<c13_params, ParamsDeleter>;
using FieldPtr = std::unique_ptr<c13_field, FieldDeleter>;

struct JsonFree {
    void operator()(char* s) const { c13_string_free(s); }
};
using CString = std::unique_ptr<char, JsonFree>;

[[noreturn]] void die(c13_status status)
{
    std::cerr << "error (" << c13_status_name(status) << "): "
              << c13_last_error() << "\n";
    std::exit(kExitError);
}

FieldPtr build_field(const ParamArgs& args, bool need_i, uint64_t max_q)
{
    ParamsPtr params;
    c13_params* raw_params = nullptr;
    c13_status status;
    if (args.i >= 0) {
        status = c13_params_create(args.p, args.n, uint32_t(args.i), &raw_params);
    } else if (!need_i) {
        status = c13_field_params_create(args.p, args.n, &raw_params);
    } else {
        std::cerr << "error: --i is required here\n";
        std::exit(kExitError);
    }
    if (status != C13_OK) die(status);
    params.reset(raw_params);

    c13_field* raw_field = nullptr;
    status = c13_field_build(params.get(), max_q, &raw_field);
    if (status != C13_OK) die(status);
    return FieldPtr(raw_field);
}

json run_json(c13_status status, CString& text)
{
    if (status != C13_OK) die(status);
    return json::parse(text.get());
}

void write_output(const std::string& content, const OutputArgs& out)
{
    if (out.out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(out.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write " << out.out_path << "\n";
        std::exit(kExitError);
    }
    file << content;
}

std::string distribution_text(const json& dist)
{
    std::ostringstream os;
    os << dist["distinct"].get<size_t>() << " distinct values, total mass "
       << dist["total_mass"].get<std::string>() << "\n";
    char line[160];
    for (const auto& entry : dist["entries"]) {
        std::snprintf(line, sizeof line, "  %14.4f  x %s\n",
                      entry["re"].get<double>(),
                      entry["frequency"].get<std::string>().c_str());
        os << line;
    }
    return os.str();
}

std::string distribution_csv(const json& dist)
{
    std::ostringstream os;
    os << "re,im,frequency\n";
    for (const auto& entry : dist["entries"]) {
        os << entry["re"].get<double>() << ',' << entry["im"].get<double>()
           << ',' << entry["frequency"].get<std::string>() << '\n';
    }
    return os.str();
}

std::string weights_csv(const json& weights)
{
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& row : weights["rows"]) {
        os << row["weight"].get<uint64_t>() << ','
           << row["count"].get<std::string>() << '\n';
    }
    return os.str();
}

std::string quad_text(const json& quad)
{
    std::ostringstream os;
    os << "u = " << quad["u"].get<int64_t>() << ", v = "
       << quad["v"].get<int64_t>() << ", theta = "
       << quad["theta"].get<double>() << ", omega = "
       << quad["omega"].get<uint32_t>() << "\n"
       << "E = " << quad["e_sum"].get<std::string>() << ", O = "
       << quad["o_sum"].get<std::string>() << "\n";
    return os.str();
}

std::string verify_text(const json& report)
{
    std::ostringstream os;
    const auto& params = report["params"];
    os << "corr13 verify: p=" << params["p"] << " n=" << params["n"];
    if (params.contains("i")) {
        os << " i=" << params["i"] << "  (q=" << params["q"] << ", d="
           << params["d"] << ", case " << params["case"].get<std::string>()
           << ")";
    }
    os << "\n";

    const auto& stages = report["stages"];
    if (stages.contains("quad")) {
        const auto& quad = stages["quad"];
        os << "  quad:        u=" << quad["u"] << " v=" << quad["v"]
           << " E=" << quad["e_sum"].get<std::string>() << " O="
           << quad["o_sum"].get<std::string>() << "\n";
    }
    if (stages.contains("correlation")) {
        const auto& corr = stages["correlation"];
        os << "  correlation: " << corr["observed"]["distinct"]
           << " distinct values, verdict "
           << corr["match"]["verdict"].get<std::string>() << "\n";
    }
    if (stages.contains("cyclotomy")) {
        os << "  cyclotomy:   verdict "
           << stages["cyclotomy"]["verdict"].get<std::string>() << "\n";
    }
    if (stages.contains("periods")) {
        os << "  periods:     verdict "
           << stages["periods"]["verdict"].get<std::string>() << "\n";
    }
    if (stages.contains("codes")) {
        os << "  codes:       " << stages["codes"]["observed"]["distinct"]
           << " distinct weights, verdict "
           << stages["codes"]["match"]["verdict"].get<std::string>() << "\n";
    }
    if (stages.contains("partition_oracle")) {
        const auto& stage = stages["partition_oracle"];
        os << "  partition:   "
           << (stage.contains("skipped") ? "skipped"
                                         : stage["verdict"].get<std::string>())
           << "\n";
    }
    if (stages.contains("triple_sum")) {
        const auto& stage = stages["triple_sum"];
        os << "  triple sum:  "
           << (stage.contains("skipped") ? "skipped"
                                         : stage["verdict"].get<std::string>())
           << "\n";
    }
    os << "overall: " << report["verdict"].get<std::string>() << "\n";
    return os.str();
}

int emit_formatted(const json& payload, const OutputArgs& out,
                   const std::string& text_form, const std::string& csv_form)
{
    if (out.format == "json") {
        write_output(payload.dump(2) + "\n", out);
    } else if (out.format == "csv") {
        if (csv_form.empty()) {
            std::cerr << "error: no CSV form for this subcommand\n";
            return kExitError;
        }
        write_output(csv_form, out);
    } else {
        write_output(text_form, out);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact 13-valued cross-correlation verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(c13_version()));

    ParamArgs params;
    OutputArgs output;
    unsigned workers = 0;
    double tol = 0.0;
    uint64_t max_q = 0;
    uint64_t max_oracle_q = 0;
    uint64_t count = 0;
    uint32_t samples = 20;
    bool run_all = false;
    bool skip_codes = false;

    auto* verify = app.add_subcommand(
        "verify", "run the verification pipeline and report verdicts");
    add_param_options(verify, params, /*need_i=*/true);
    add_output_options(verify, output);
    verify->add_option("--workers", workers, "worker threads (0 = auto)");
    verify->add_option("--tol", tol, "absolute match tolerance (0 = default)");
    verify->add_option("--max-q", max_q, "field size ceiling");
    verify->add_option("--max-oracle-q", max_oracle_q,
                       "ceiling for the O(q^2) partition oracle");
    verify->add_flag("--all", run_all,
                     "also run the partition oracle and triple-sum checks");
    verify->add_flag("--skip-codes", skip_codes,
                     "skip the code weight distribution stage");

    auto* distribution = app.add_subcommand(
        "distribution", "brute-force cross-correlation value distribution");
    add_param_options(distribution, params, /*need_i=*/true);
    add_output_options(distribution, output);
    distribution->add_option("--workers", workers, "worker threads (0 = auto)");
    distribution->add_option("--max-q", max_q, "field size ceiling");

    auto* periods = app.add_subcommand(
        "periods", "exact Gaussian periods and their predicted value sets");
    add_param_options(periods, params, /*need_i=*/false);
    add_output_options(periods, output);
    periods->add_option("--max-q", max_q, "field size ceiling");

    auto* cyclotomy = app.add_subcommand(
        "cyclotomy", "cyclotomic pair counts and diagonal-equation samples");
    add_param_options(cyclotomy, params, /*need_i=*/false);
    add_output_options(cyclotomy, output);
    cyclotomy->add_option("--samples", samples, "diagonal-count sample size");
    cyclotomy->add_option("--max-q", max_q, "field size ceiling");

    auto* quad = app.add_subcommand(
        "quad", "quadratic partition 4p = u^2 + 3v^2 and the binomial sums");
    add_param_options(quad, params, /*need_i=*/false);
    add_output_options(quad, output);
    quad->add_option("--max-q", max_q, "field size ceiling");

    auto* code_weights = app.add_subcommand(
        "code-weights", "cyclic code weight distribution, brute vs predicted");
    add_param_options(code_weights, params, /*need_i=*/true);
    add_output_options(code_weights, output);
    code_weights->add_option("--workers", workers, "worker threads (0 = auto)");
    code_weights->add_option("--max-q", max_q, "field size ceiling");

    auto* emit_seq = app.add_subcommand(
        "emit-sequence", "emit the m-sequence and its decimation");
    add_param_options(emit_seq, params, /*need_i=*/true);
    add_output_options(emit_seq, output);
    emit_seq->add_option("--count", count, "number of terms (0 = full period)");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        FieldPtr field = build_field(params, true, max_q);
        c13_verify_options opts;
        c13_verify_options_init(&opts);
        opts.workers = workers;
        opts.tolerance = tol;
        if (max_oracle_q) opts.max_oracle_q = max_oracle_q;
        opts.run_codes = skip_codes ? 0 : 1;
        if (run_all) {
            opts.run_partition_oracle = 1;
            opts.run_triple_sum = 1;
        }
        CString text;
        char* raw = nullptr;
        c13_status status = c13_verify_json(field.get(), &opts, &raw);
        text.reset(raw);
        json report = run_json(status, text);
        emit_formatted(report, output, verify_text(report), {});
        return report["verdict"].get<std::string>() == "Verified"
                   ? kExitOk
                   : kExitMismatch;
    }

    if (distribution->parsed()) {
        FieldPtr field = build_field(params, true, max_q);
        char* raw = nullptr;
        c13_status status = c13_distribution_json(field.get(), workers, &raw);
        CString text(raw);
        json dist = run_json(status, text);
        return emit_formatted(dist, output, distribution_text(dist),
                              distribution_csv(dist));
    }

    if (periods->parsed()) {
        FieldPtr field = build_field(params, false, max_q);
        char* raw = nullptr;
        c13_status status = c13_periods_json(field.get(), &raw);
        CString text(raw);
        json j = run_json(status, text);
        std::ostringstream os;
        os << "eta = [" << j["exact"]["eta"][0].get<double>() << ", "
           << j["exact"]["eta"][1].get<double>() << ", "
           << j["exact"]["eta"][2].get<double>() << "]\n";
        return emit_formatted(j, output, os.str(), {});
    }

    if (cyclotomy->parsed()) {
        FieldPtr field = build_field(params, false, max_q);
        char* raw = nullptr;
        c13_status status = c13_cyclotomy_json(field.get(), samples, &raw);
        CString text(raw);
        json j = run_json(status, text);
        std::ostringstream os;
        os << "pair counts equal: " << (j["all_equal"].get<bool>() ? "yes" : "no")
           << "\n";
        int rc = emit_formatted(j, output, os.str(), {});
        if (rc != kExitOk) return rc;
        return j["all_equal"].get<bool>() ? kExitOk : kExitMismatch;
    }

    if (quad->parsed()) {
        FieldPtr field = build_field(params, false, max_q);
        char* raw = nullptr;
        c13_status status = c13_quad_partition_json(field.get(), &raw);
        CString text(raw);
        json j = run_json(status, text);
        return emit_formatted(j, output, quad_text(j), {});
    }

    if (code_weights->parsed()) {
        FieldPtr field = build_field(params, true, max_q);
        char* raw = nullptr;
        c13_status status = c13_code_weights_json(field.get(), workers, &raw);
        CString text(raw);
        json j = run_json(status, text);
        std::ostringstream os;
        os << j["observed"]["distinct"].get<size_t>()
           << " distinct weights, verdict "
           << j["match"]["verdict"].get<std::string>() << "\n";
        int rc = emit_formatted(j, output, os.str(), weights_csv(j["observed"]));
        if (rc != kExitOk) return rc;
        return j["match"]["verdict"].get<std::string>() == "Verified"
                   ? kExitOk
                   : kExitMismatch;
    }

    if (emit_seq->parsed()) {
        FieldPtr field = build_field(params, true, max_q);
        char* raw = nullptr;
        c13_status status = c13_sequence_json(field.get(), count, &raw);
        CString text(raw);
        json j = run_json(status, text);
        std::ostringstream text_os, csv_os;
        csv_os << "t,s,s_decimated\n";
        const auto& s = j["sequence"];
        const auto& sd = j["decimated"];
        for (size_t t = 0; t < s.size(); ++t) {
            csv_os << t << ',' << s[t].get<uint32_t>() << ','
                   << sd[t].get<uint32_t>() << '\n';
        }
        text_os << "period " << j["period"] << ", showing " << s.size()
                << " terms\n";
        return emit_formatted(j, output, text_os.str(), csv_os.str());
    }

    return kExitError;
}
