#include "geompairs/cli.hpp"

#include "geompairs/asymptotics.hpp"
#include "geompairs/closedform.hpp"
#include "geompairs/model.hpp"
#include "geompairs/montecarlo.hpp"
#include "geompairs/patterns.hpp"
#include "geompairs/series.hpp"
#include "geompairs/symbolic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace geompairs::cli {

using json = nlohmann::json;
using model::GeomParams;
using numerics::Real;

namespace {

struct Row {
    std::uint64_t n = 0;
    std::string q;
    std::string method;
    Real value{0};
    Real tail{0};
    double runtime_ms = 0.0;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string fmt_real(const Real& v) {
    return v.str(17);
}

void emit_error(std::ostream& err, const std::string& message, const json& detail = {}) {
    json obj{{"error", message}};
    if (!detail.empty()) obj["detail"] = detail;
    err << obj.dump() << "\n";
}

void emit_rows_csv(std::ostream& out, const std::string& mode,
                   const std::vector<std::string>& comments, const std::vector<Row>& rows) {
    out << "# mode: " << mode << "\n";
    for (const auto& line : comments) out << "# " << line << "\n";
    out << "n,q,method,value,tail_or_stderr,runtime_ms\n";
    for (const Row& row : rows) {
        out << row.n << "," << row.q << "," << row.method << "," << fmt_real(row.value) << ","
            << fmt_real(row.tail) << "," << row.runtime_ms << "\n";
    }
}

void emit_rows_json(std::ostream& out, const std::string& mode,
                    const std::vector<Row>& rows, json extra = {}) {
    json doc;
    doc["mode"] = mode;
    doc["rows"] = json::array();
    for (const Row& row : rows) {
        doc["rows"].push_back({{"n", row.n},
                               {"q", row.q},
                               {"method", row.method},
                               {"value", row.value.convert_to<double>()},
                               {"tail_or_stderr", row.tail.convert_to<double>()},
                               {"runtime_ms", row.runtime_ms}});
    }
    if (!extra.empty()) doc.update(extra);
    out << doc.dump(2) << "\n";
}

struct MethodGates {
    static bool direct(std::uint64_t n) { return n >= 2 && n <= 8; }
    static bool exact(std::uint64_t) { return true; }
    static bool binomial(std::uint64_t n) { return n >= 2 && n <= 512; }
    static bool series(std::uint64_t n) { return n <= 4096; }  // O(n) recurrence per pair
    static bool asymp(std::uint64_t n) { return n >= 2; }
};

Real run_direct(const GeomParams& params, std::uint64_t n) {
    const auto rf = patterns::expected_pairs_direct(static_cast<int>(n));
    return numerics::to_real(rf.evaluate_exact(params.q_exact()));
}

Row make_row(const RunSpec& spec, std::uint64_t n, const std::string& method,
             const Real& value, const Real& tail, double ms) {
    Row row;
    row.n = n;
    row.q = spec.q_text;
    row.method = method;
    row.value = value;
    row.tail = tail;
    row.runtime_ms = ms;
    return row;
}

std::vector<Row> compare_rows(const RunSpec& spec, const GeomParams& params, std::uint64_t n) {
    std::vector<Row> rows;
    auto wants = [&spec](const std::string& name) {
        return spec.methods.empty() ||
               std::find(spec.methods.begin(), spec.methods.end(), name) != spec.methods.end();
    };

    if (MethodGates::direct(n) && wants("direct")) {
        Stopwatch timer;
        const Real v = run_direct(params, n);
        rows.push_back(make_row(spec, n, "direct", v, Real(0), timer.ms()));
    }
    if (wants("exact")) {
        Stopwatch timer;
        const auto cv = closedform::expected_pairs(params, n, spec.eps);
        rows.push_back(make_row(spec, n, "exact", cv.value, cv.tail_bound, timer.ms()));
    }
    if (MethodGates::binomial(n) && wants("binomial")) {
        Stopwatch timer;
        const Real v = closedform::s_n_binomial(params, n) + closedform::t_n_binomial(params, n);
        rows.push_back(make_row(spec, n, "binomial", v, Real(0), timer.ms()));
    }
    if (MethodGates::series(n) && wants("series")) {
        Stopwatch timer;
        const auto cv = series::q_coeff(params, n, spec.eps);
        rows.push_back(make_row(spec, n, "series", cv.value, cv.tail_bound, timer.ms()));
    }
    if (MethodGates::asymp(n) && wants("asymp")) {
        Stopwatch timer;
        const auto s = asymptotics::s_n_asymptotic(params, n, spec.fluctuation_terms);
        const auto t = asymptotics::t_n_asymptotic(params, n, spec.fluctuation_terms);
        rows.push_back(make_row(spec, n, "asymp", s.total + t.total, Real(0), timer.ms()));
    }
    if (spec.with_mc && wants("mc")) {
        Stopwatch timer;
        const auto est = montecarlo::estimate_expected_pairs(params, n, spec.samples, spec.seed,
                                                             spec.workers);
        rows.push_back(
            make_row(spec, n, "mc", Real(est.mean), Real(est.stderr_), timer.ms()));
    }
    return rows;
}

// Pairwise certified-agreement gate over the rows of one n.
std::optional<json> check_discrepancy(const std::vector<Row>& rows, double tol) {
    static const std::map<std::string, int, std::less<>> kCertified{
        {"direct", 0}, {"exact", 1}, {"binomial", 2}, {"series", 3}};
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (!kCertified.count(rows[a].method)) continue;
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            if (!kCertified.count(rows[b].method)) continue;
            const Real gap = abs(rows[a].value - rows[b].value);
            const Real allowed = Real(tol) + rows[a].tail + rows[b].tail;
            if (gap > allowed) {
                return json{{"n", rows[a].n},
                            {"method_a", rows[a].method},
                            {"method_b", rows[b].method},
                            {"value_a", rows[a].value.convert_to<double>()},
                            {"value_b", rows[b].value.convert_to<double>()},
                            {"difference", gap.convert_to<double>()},
                            {"allowed", allowed.convert_to<double>()}};
            }
        }
    }
    return std::nullopt;
}

int run_table1(const RunSpec& spec, std::ostream& out) {
    const auto all = patterns::enumerate_rgs(4);
    auto type_label = [](const patterns::Rgs& rgs) {
        std::vector<unsigned> m = rgs.class_multiplicities();
        std::sort(m.begin(), m.end());
        if (m == std::vector<unsigned>{4}) return "A";
        if (m == std::vector<unsigned>{2, 2}) return "B";
        if (m == std::vector<unsigned>{1, 3}) return "C";
        if (m == std::vector<unsigned>{1, 1, 2}) return "D";
        return "E";
    };

    symbolic::RationalFunction sum;
    struct Entry {
        std::string pattern;
        int pairs;
        std::string type;
        std::string probability;
    };
    std::vector<Entry> entries;
    for (const auto& rgs : all) {
        const auto prob = patterns::pattern_probability(rgs);
        sum = sum + prob;
        entries.push_back(
            {rgs.to_letters(), patterns::pattern_distinct_pairs(rgs), type_label(rgs),
             prob.serialize()});
    }

    if (spec.format == RunSpec::Format::csv) {
        out << "# probability sum: " << sum.serialize() << "\n";
        out << "pattern,distinct_pairs,type,probability\n";
        for (const auto& e : entries) {
            out << e.pattern << "," << e.pairs << "," << e.type << ",\"" << e.probability
                << "\"\n";
        }
    } else {
        json doc;
        doc["probability_sum"] = sum.serialize();
        doc["rows"] = json::array();
        for (const auto& e : entries) {
            doc["rows"].push_back({{"pattern", e.pattern},
                                   {"distinct_pairs", e.pairs},
                                   {"type", e.type},
                                   {"probability", e.probability}});
        }
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int run_sample(const RunSpec& spec, const GeomParams& params, std::ostream& out) {
    Stopwatch timer;
    const auto word = model::sample_word(params, spec.n_lo, spec.seed);
    const auto tally = model::distinct_pairs(word);
    const double ms = timer.ms();
    const std::string mode = params.exact() ? "exact" : "float";

    if (spec.format == RunSpec::Format::csv) {
        std::ostringstream letters;
        for (std::size_t k = 0; k < word.letters.size(); ++k) {
            if (k) letters << " ";
            letters << word.letters[k];
        }
        emit_rows_csv(out, mode, {"seed: " + std::to_string(spec.seed), "word: " + letters.str()},
                      {make_row(spec, spec.n_lo, "sample",
                                Real(static_cast<double>(tally.distinct_count)), Real(0), ms)});
    } else {
        json doc;
        doc["mode"] = mode;
        doc["n"] = spec.n_lo;
        doc["q"] = spec.q_text;
        doc["seed"] = spec.seed;
        doc["letters"] = word.letters;
        doc["distinct_pairs"] = tally.distinct_count;
        out << doc.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int run(const RunSpec& spec, std::ostream& out_stream, std::ostream& err) {
    numerics::PrecisionGuard precision(numerics::kDefaultMantissaBits);

    std::ofstream file;
    if (!spec.out_path.empty()) {
        file.open(spec.out_path);
        if (!file) {
            emit_error(err, "cannot open output file: " + spec.out_path);
            return 2;
        }
    }
    std::ostream& out = spec.out_path.empty() ? out_stream : file;

    try {
        if (spec.command == RunSpec::Command::table1) {
            return run_table1(spec, out);
        }

        GeomParams params = GeomParams::from_q_text(spec.q_text);
        const std::string mode = params.exact() ? "exact" : "float";

        if (spec.n_hi < spec.n_lo) {
            emit_error(err, "empty n range");
            return 2;
        }
        if (spec.eps <= 0) {
            emit_error(err, "eps must be positive");
            return 2;
        }

        if (spec.command == RunSpec::Command::sample) {
            return run_sample(spec, params, out);
        }
        if (spec.command == RunSpec::Command::compare) {
            for (const auto& name : spec.methods) {
                static const std::vector<std::string> known{"direct", "exact",  "binomial",
                                                            "series", "asymp", "mc"};
                if (std::find(known.begin(), known.end(), name) == known.end()) {
                    emit_error(err, "unknown method: " + name);
                    return 2;
                }
            }
        }

        std::vector<Row> rows;
        for (std::uint64_t n = spec.n_lo; n <= spec.n_hi; ++n) {
            switch (spec.command) {
                case RunSpec::Command::exact: {
                    Stopwatch timer;
                    const auto cv = closedform::expected_pairs(params, n, spec.eps);
                    rows.push_back(make_row(spec, n, "exact", cv.value, cv.tail_bound, timer.ms()));
                    break;
                }
                case RunSpec::Command::binomial: {
                    if (!MethodGates::binomial(n)) {
                        emit_error(err, "binomial method requires 2 <= n <= 512");
                        return 2;
                    }
                    Stopwatch timer;
                    const Real v = closedform::s_n_binomial(params, n) +
                                   closedform::t_n_binomial(params, n);
                    rows.push_back(make_row(spec, n, "binomial", v, Real(0), timer.ms()));
                    break;
                }
                case RunSpec::Command::series: {
                    if (!MethodGates::series(n)) {
                        emit_error(err, "series method is gated to n <= 4096");
                        return 2;
                    }
                    Stopwatch timer;
                    const auto cv = series::q_coeff(params, n, spec.eps);
                    rows.push_back(make_row(spec, n, "series", cv.value, cv.tail_bound, timer.ms()));
                    break;
                }
                case RunSpec::Command::direct: {
                    if (!MethodGates::direct(n)) {
                        emit_error(err, "direct method requires 2 <= n <= 8");
                        return 2;
                    }
                    Stopwatch timer;
                    rows.push_back(
                        make_row(spec, n, "direct", run_direct(params, n), Real(0), timer.ms()));
                    break;
                }
                case RunSpec::Command::asymp: {
                    if (!MethodGates::asymp(n)) {
                        emit_error(err, "asymptotics require n >= 2");
                        return 2;
                    }
                    Stopwatch timer;
                    const auto s = asymptotics::s_n_asymptotic(params, n, spec.fluctuation_terms);
                    const auto t = asymptotics::t_n_asymptotic(params, n, spec.fluctuation_terms);
                    const double ms = timer.ms();
                    auto push = [&](const std::string& name, const Real& v) {
                        rows.push_back(make_row(spec, n, name, v, Real(0), ms));
                    };
                    push("asymp_s_leading", s.leading);
                    push("asymp_s_constant", s.constant);
                    push("asymp_s_fluctuation", s.fluctuation);
                    push("asymp_s_total", s.total);
                    push("asymp_t_leading", t.leading);
                    push("asymp_t_secondary", t.secondary);
                    push("asymp_t_constant", t.constant);
                    push("asymp_t_fluctuation", t.fluctuation);
                    push("asymp_t_total", t.total);
                    push("asymp_total", s.total + t.total);
                    break;
                }
                case RunSpec::Command::mc: {
                    Stopwatch timer;
                    const auto est = montecarlo::estimate_expected_pairs(
                        params, n, spec.samples, spec.seed, spec.workers);
                    rows.push_back(make_row(spec, n, "mc", Real(est.mean), Real(est.stderr_),
                                            timer.ms()));
                    break;
                }
                case RunSpec::Command::compare: {
                    auto batch = compare_rows(spec, params, n);
                    rows.insert(rows.end(), batch.begin(), batch.end());
                    break;
                }
                default:
                    emit_error(err, "unknown command");
                    return 2;
            }
        }

        if (spec.format == RunSpec::Format::csv) {
            emit_rows_csv(out, mode, {}, rows);
        } else {
            emit_rows_json(out, mode, rows);
        }

        if (spec.command == RunSpec::Command::compare && spec.check) {
            for (std::uint64_t n = spec.n_lo; n <= spec.n_hi; ++n) {
                std::vector<Row> batch;
                for (const Row& row : rows) {
                    if (row.n == n) batch.push_back(row);
                }
                if (auto bad = check_discrepancy(batch, spec.check_tol)) {
                    emit_error(err, "cross-method discrepancy beyond certified tolerance", *bad);
                    return 1;
                }
            }
        }
        return 0;
    } catch (const std::exception& e) {
        emit_error(err, e.what());
        return 2;
    }
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

namespace {

bool parse_n_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi) {
    // digits and ".." only; stoull would silently wrap a negative value
    if (text.empty() || text.find_first_not_of("0123456789.") != std::string::npos) {
        return false;
    }
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            if (text.find('.') != std::string::npos) return false;
            lo = hi = std::stoull(text);
        } else {
            lo = std::stoull(text.substr(0, dots));
            hi = std::stoull(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"expected distinct adjacent pairs in geometric random words"};
    app.require_subcommand(1);

    RunSpec spec;
    std::string n_text;
    std::string format_text = "csv";

    auto add_common = [&](CLI::App* sub, bool needs_q, bool needs_n) {
        auto* q_opt = sub->add_option("--q", spec.q_text,
                                      "parameter q, fraction a/b (exact) or decimal (float)");
        if (needs_q) q_opt->required();
        auto* n_opt = sub->add_option("--n", n_text, "word length, single value or range a..b");
        if (needs_n) n_opt->required();
        sub->add_option("--format", format_text, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", spec.out_path, "write the report to a file");
        return sub;
    };

    auto* sample = add_common(app.add_subcommand("sample", "draw one random word"), true, true);
    sample->add_option("--seed", spec.seed, "RNG seed");

    auto* exact = add_common(app.add_subcommand("exact", "truncated per-pair sums"), true, true);
    exact->add_option("--eps", spec.eps, "certified tail target");

    add_common(app.add_subcommand("binomial", "finite alternating binomial formulas"), true, true);

    auto* seriescmd =
        add_common(app.add_subcommand("series", "generating-function coefficients"), true, true);
    seriescmd->add_option("--eps", spec.eps, "certified tail target");

    add_common(app.add_subcommand("direct", "exact set-partition enumeration"), true, true);

    auto* asymp = add_common(app.add_subcommand("asymp", "asymptotic expansions"), true, true);
    asymp->add_option("--K", spec.fluctuation_terms, "fluctuation truncation");

    auto* mc = add_common(app.add_subcommand("mc", "Monte Carlo estimate"), true, true);
    mc->add_option("--samples", spec.samples, "number of simulated words");
    mc->add_option("--seed", spec.seed, "RNG seed");
    mc->add_option("--workers", spec.workers, "worker count (recorded, reproducible)");

    auto* compare =
        add_common(app.add_subcommand("compare", "run all applicable methods"), true, true);
    compare->add_option("--eps", spec.eps, "certified tail target");
    compare->add_flag("--check", spec.check, "fail (exit 1) on cross-method discrepancy");
    compare->add_option("--tol", spec.check_tol, "base tolerance added to certified tails");
    compare->add_option("--methods", spec.methods, "restrict to these methods")
        ->delimiter(',');
    compare->add_flag("--with-mc", spec.with_mc, "include the Monte Carlo row");
    compare->add_option("--samples", spec.samples, "Monte Carlo sample count");
    compare->add_option("--seed", spec.seed, "Monte Carlo seed");
    compare->add_option("--workers", spec.workers, "Monte Carlo worker count");
    compare->add_option("--K", spec.fluctuation_terms, "fluctuation truncation");

    auto* table1 = app.add_subcommand("table1", "the fifteen length-4 patterns");
    table1->add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    table1->add_option("--out", spec.out_path, "write the report to a file");

    std::vector<const char*> argv;
    argv.push_back("geompairs");
    for (const auto& a : args) argv.push_back(a.c_str());

    ParseResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.status = 0;
        result.message = "help";
        return result;
    } catch (const CLI::ParseError& e) {
        emit_error(err, std::string("usage error: ") + e.what());
        result.status = 2;
        return result;
    }

    const std::map<std::string, RunSpec::Command, std::less<>> commands{
        {"sample", RunSpec::Command::sample},     {"exact", RunSpec::Command::exact},
        {"binomial", RunSpec::Command::binomial}, {"series", RunSpec::Command::series},
        {"direct", RunSpec::Command::direct},     {"asymp", RunSpec::Command::asymp},
        {"mc", RunSpec::Command::mc},             {"compare", RunSpec::Command::compare},
        {"table1", RunSpec::Command::table1}};
    spec.command = commands.at(app.get_subcommands().front()->get_name());

    spec.format = (format_text == "json") ? RunSpec::Format::json : RunSpec::Format::csv;
    if (!n_text.empty() && !parse_n_range(n_text, spec.n_lo, spec.n_hi)) {
        emit_error(err, "invalid n range: " + n_text);
        result.status = 2;
        return result;
    }
    result.spec = spec;
    return result;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ParseResult parsed = parse_args(args, std::cout, std::cerr);
    if (parsed.status != 0 || !parsed.spec) {
        return parsed.status;
    }
    return run(*parsed.spec, std::cout, std::cerr);
}

}  // namespace geompairs::cli
