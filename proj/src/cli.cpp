#include "volkenborn/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "volkenborn/identities.hpp"
#include "volkenborn/integrals.hpp"
#include "volkenborn/padic.hpp"
#include "volkenborn/polynomial.hpp"
#include "volkenborn/sequences.hpp"

namespace volkenborn {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { table, csv, json };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw UsageError("unknown format '" + s + "' (expected table, csv or json)");
}

// --format wins over VOLK_FORMAT, which wins over the command's default.
Format resolve_format(const std::string& flag, Format fallback) {
    if (!flag.empty()) return parse_format(flag);
    if (const char* env = std::getenv("VOLK_FORMAT"); env != nullptr && *env != '\0') return parse_format(env);
    return fallback;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string valuation_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

json valuation_json(const std::optional<long>& v) { return v ? json(*v) : json("inf"); }

// One-index families.
using SeqFn = std::function<Rational(long)>;
// Two-index families, rows 0..n with entries 0..n.
using TriFn = std::function<Rational(long, long)>;

struct SeqOptions {
    std::string family;
    long n = 10;
    std::string lambda;
    std::string u;
    long v = -1;
    std::string format;
};

Rational required(const std::string& text, const std::string& flag, const std::string& family) {
    if (text.empty()) throw UsageError("family '" + family + "' requires " + flag);
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

const std::vector<std::string>& one_index_families() {
    static const std::vector<std::string> names = {"bernoulli", "euler",  "daehee",  "daehee2",
                                                   "changhee",  "changhee2", "fubini", "cauchy", "harmonic"};
    return names;
}

SeqFn one_index(const std::string& family) {
    static const std::map<std::string, SeqFn> table = {
        {"bernoulli", bernoulli}, {"euler", euler},         {"daehee", daehee},
        {"daehee2", daehee_hat},  {"changhee", changhee},   {"changhee2", changhee_hat},
        {"fubini", fubini},       {"cauchy", cauchy},       {"harmonic", harmonic},
    };
    auto it = table.find(family);
    return it == table.end() ? SeqFn{} : it->second;
}

TriFn two_index(const std::string& family) {
    static const std::map<std::string, TriFn> table = {
        {"stirling1", stirling1}, {"stirling2", stirling2},           {"lah", lah},
        {"eulerian", eulerian},   {"assoc-stirling1", assoc_stirling1}, {"assoc-stirling2", assoc_stirling2},
    };
    auto it = table.find(family);
    return it == table.end() ? TriFn{} : it->second;
}

void emit_sequence(const std::string& family, const json& params, const std::vector<Rational>& values, Format f,
                   std::ostream& out) {
    switch (f) {
        case Format::csv:
            out << "n,value\n";
            for (size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
            break;
        case Format::json: {
            json j;
            j["family"] = family;
            j["params"] = params;
            j["values"] = json::array();
            for (const auto& v : values) j["values"].push_back(v.str());
            out << j.dump(2) << '\n';
            break;
        }
        case Format::table: {
            size_t width = 5;
            for (const auto& v : values) width = std::max(width, v.str().size());
            out << std::setw(4) << "n" << "  " << std::setw(static_cast<int>(width)) << "value" << '\n';
            for (size_t i = 0; i < values.size(); ++i) {
                out << std::setw(4) << i << "  " << std::setw(static_cast<int>(width)) << values[i].str() << '\n';
            }
            break;
        }
    }
}

void emit_triangle(const std::string& family, const json& params, const std::vector<std::vector<Rational>>& rows,
                   Format f, std::ostream& out) {
    switch (f) {
        case Format::csv:
            out << "n,k,value\n";
            for (size_t n = 0; n < rows.size(); ++n) {
                for (size_t k = 0; k < rows[n].size(); ++k) out << n << ',' << k << ',' << rows[n][k] << '\n';
            }
            break;
        case Format::json: {
            json j;
            j["family"] = family;
            j["params"] = params;
            j["rows"] = json::array();
            for (const auto& row : rows) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.str());
                j["rows"].push_back(r);
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::table:
            for (const auto& row : rows) {
                std::string line;
                for (const auto& v : row) {
                    if (!line.empty()) line += "  ";
                    line += v.str();
                }
                out << line << '\n';
            }
            break;
    }
}

int cmd_seq(const SeqOptions& o, std::ostream& out) {
    const Format f = resolve_format(o.format, Format::table);
    if (o.n < 0) throw UsageError("--n must be nonnegative");
    const std::string& fam = o.family;
    json params = json::object();
    std::vector<Rational> values;

    if (SeqFn fn = one_index(fam)) {
        for (long i = 0; i <= o.n; ++i) values.push_back(fn(i));
    } else if (fam == "apostol-bernoulli" || fam == "apostol-euler") {
        const Rational lambda = required(o.lambda, "--lambda", fam);
        params["lambda"] = lambda.str();
        for (long i = 0; i <= o.n; ++i) values.push_back(fam == "apostol-bernoulli" ? apostol_bernoulli(i, lambda) : apostol_euler(i, lambda));
    } else if (fam == "frobenius-euler") {
        const Rational u = required(o.u, "--u", fam);
        params["u"] = u.str();
        for (long i = 0; i <= o.n; ++i) values.push_back(frobenius_euler(i, u));
    } else if (TriFn fn = two_index(fam)) {
        std::vector<std::vector<Rational>> rows;
        for (long i = 0; i <= o.n; ++i) {
            std::vector<Rational> row;
            for (long k = 0; k <= i; ++k) row.push_back(fn(i, k));
            rows.push_back(std::move(row));
        }
        emit_triangle(fam, params, rows, f, out);
        return kExitOk;
    } else if (fam == "array-poly") {
        const Rational lambda = required(o.lambda, "--lambda", fam);
        if (o.v < 0) throw UsageError("family 'array-poly' requires --v");
        params["lambda"] = lambda.str();
        params["v"] = o.v;
        std::vector<std::vector<Rational>> rows;
        for (long i = 0; i <= o.n; ++i) {
            const Polynomial p = array_poly(i, o.v, lambda);
            std::vector<Rational> row;
            for (long k = 0; k <= i; ++k) row.push_back(p.coeff(k));
            rows.push_back(std::move(row));
        }
        emit_triangle(fam, params, rows, f, out);
        return kExitOk;
    } else {
        throw UsageError("unknown family '" + fam + "'");
    }
    emit_sequence(fam, params, values, f, out);
    return kExitOk;
}

struct IntegralOptions {
    std::string measure;
    std::string poly;
    bool exact = false;
    bool level = false;
    long p = 0;
    long N = 0;
    std::string q;
    std::string format;
};

Polynomial parse_poly(const std::string& text) {
    if (text.empty()) throw UsageError("--poly is required (comma-separated coefficients, constant term first)");
    try {
        return Polynomial::parse_list(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--poly: ") + e.what());
    }
}

Measure parse_measure(const std::string& m, const std::string& q) {
    if (m == "b") return Measure::bosonic();
    if (m == "f") return Measure::fermionic();
    if (m == "q") {
        if (q.empty()) throw UsageError("measure q requires --q");
        return Measure::q_weighted(Rational::parse(q));
    }
    throw UsageError("unknown measure '" + m + "' (expected b, f or q)");
}

int cmd_integral(const IntegralOptions& o, std::ostream& out) {
    const Format f = resolve_format(o.format, Format::table);
    const Polynomial poly = parse_poly(o.poly);
    const Measure measure = parse_measure(o.measure, o.q);
    if (o.exact && o.level) throw UsageError("--exact and --level are exclusive");
    const bool level = o.level || measure.kind == MeasureKind::q_weighted;
    if (measure.kind == MeasureKind::q_weighted && o.exact) throw UsageError("the q-weighted measure has level sums only");

    json j;
    j["measure"] = measure.name();
    j["polynomial"] = json::parse(poly.to_json());
    if (!level) {
        const Rational v = exact_integral(poly, measure.kind);
        j["mode"] = "exact";
        j["value"] = v.str();
        if (f == Format::json) out << j.dump(2) << '\n';
        else if (f == Format::csv) out << "value\n" << v << '\n';
        else out << v << '\n';
        return kExitOk;
    }
    if (o.p <= 0 || o.N <= 0) throw UsageError("level mode requires --p and --N");
    const Rational v = level_integral(poly, measure, o.p, o.N);
    j["mode"] = "level";
    j["p"] = o.p;
    j["N"] = o.N;
    j["value"] = v.str();
    std::optional<std::optional<long>> err_val;
    if (measure.kind != MeasureKind::q_weighted) {
        err_val = valuation(v - exact_integral(poly, measure.kind), o.p);
        j["err_valuation"] = valuation_json(*err_val);
    }
    switch (f) {
        case Format::json: out << j.dump(2) << '\n'; break;
        case Format::csv:
            out << (err_val ? "value,err_valuation\n" : "value\n") << v;
            if (err_val) out << ',' << valuation_text(*err_val);
            out << '\n';
            break;
        case Format::table:
            out << v;
            if (err_val) out << " (err valuation " << valuation_text(*err_val) << ')';
            out << '\n';
            break;
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string ids;
    long n_max = 0;
    int jobs = 1;
    std::string format;
};

std::string verify_csv(const IdentityReport& r) {
    std::ostringstream os;
    os << "id,status,points,mismatches,unadjudicated\n";
    for (const auto& rec : r.records) {
        os << rec.id << ',' << (rec.corrected ? "corrected" : "verified") << ',' << rec.points() << ','
           << rec.mismatches() << ',' << rec.unadjudicated() << '\n';
    }
    return os.str();
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const Format f = resolve_format(o.format, Format::json);
    RunOptions run;
    run.ids = split_list(o.ids);
    if (o.n_max < 0) throw UsageError("--n-max must be at least 1");
    if (o.n_max > 0) run.n_max = o.n_max;
    if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
    run.jobs = o.jobs;
    IdentityReport report;
    try {
        report = verify(run);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (f == Format::json) out << report.to_json();
    else if (f == Format::csv) out << verify_csv(report);
    else out << report.to_table();
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

struct ConvergeOptions {
    std::string poly;
    std::string measure;
    long p = 0;
    long N_max = 0;
    std::string q;
    std::string format;
};

int cmd_converge(const ConvergeOptions& o, std::ostream& out) {
    const Format f = resolve_format(o.format, Format::table);
    const Polynomial poly = parse_poly(o.poly);
    const Measure measure = parse_measure(o.measure, o.q);
    if (o.p <= 0 || o.N_max <= 0) throw UsageError("converge requires --p and --N-max");
    const ConvergenceReport r = convergence_report(poly, measure, o.p, o.N_max);
    if (f == Format::json) out << r.to_json();
    else if (f == Format::csv) out << r.to_csv();
    else out << r.to_table();
    return kExitOk;
}

struct DumpOptions {
    long n = 10;
    std::string families;
    std::string format;
};

int cmd_table_dump(const DumpOptions& o, std::ostream& out) {
    const Format f = resolve_format(o.format, Format::table);
    if (o.n < 0) throw UsageError("--n must be nonnegative");
    std::vector<std::string> names = o.families.empty() ? one_index_families() : split_list(o.families);
    std::vector<SeqFn> fns;
    for (const auto& name : names) {
        SeqFn fn = one_index(name);
        if (!fn) throw UsageError("table-dump takes one-index families only; got '" + name + "'");
        fns.push_back(fn);
    }
    std::vector<std::vector<std::string>> cells(static_cast<size_t>(o.n) + 1);
    for (long i = 0; i <= o.n; ++i) {
        for (const auto& fn : fns) cells[static_cast<size_t>(i)].push_back(fn(i).str());
    }
    if (f == Format::json) {
        json j;
        j["n"] = o.n;
        j["columns"] = json::object();
        for (size_t c = 0; c < names.size(); ++c) {
            json col = json::array();
            for (const auto& row : cells) col.push_back(row[c]);
            j["columns"][names[c]] = col;
        }
        out << j.dump(2) << '\n';
    } else if (f == Format::csv) {
        out << 'n';
        for (const auto& name : names) out << ',' << name;
        out << '\n';
        for (size_t i = 0; i < cells.size(); ++i) {
            out << i;
            for (const auto& c : cells[i]) out << ',' << c;
            out << '\n';
        }
    } else {
        std::vector<size_t> width(names.size());
        for (size_t c = 0; c < names.size(); ++c) {
            width[c] = names[c].size();
            for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
        }
        out << std::setw(4) << 'n';
        for (size_t c = 0; c < names.size(); ++c) out << "  " << std::setw(static_cast<int>(width[c])) << names[c];
        out << '\n';
        for (size_t i = 0; i < cells.size(); ++i) {
            out << std::setw(4) << i;
            for (size_t c = 0; c < names.size(); ++c) out << "  " << std::setw(static_cast<int>(width[c])) << cells[i][c];
            out << '\n';
        }
    }
    return kExitOk;
}

std::vector<std::string> all_families() {
    std::vector<std::string> v = one_index_families();
    for (const char* s : {"stirling1", "stirling2", "lah", "eulerian", "assoc-stirling1", "assoc-stirling2",
                          "apostol-bernoulli", "apostol-euler", "frobenius-euler", "array-poly"}) {
        v.emplace_back(s);
    }
    return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact special numbers, p-adic integrals and identity checks", "volk"};
    app.require_subcommand(1);

    SeqOptions seq;
    auto* seq_cmd = app.add_subcommand("seq", "Print a number family for indices 0..n");
    seq_cmd->add_option("family", seq.family, "Family name")->required()->check(CLI::IsMember(all_families()));
    seq_cmd->add_option("--n", seq.n, "Largest index");
    seq_cmd->add_option("--lambda", seq.lambda, "Rational parameter of the Apostol families and array-poly");
    seq_cmd->add_option("--u", seq.u, "Rational parameter of frobenius-euler");
    seq_cmd->add_option("--v", seq.v, "Order of array-poly");
    seq_cmd->add_option("--format", seq.format, "table, csv or json");

    IntegralOptions integ;
    auto* int_cmd = app.add_subcommand("integral", "Integrate a polynomial against b, f or q");
    int_cmd->add_option("measure", integ.measure, "b (Volkenborn), f (fermionic) or q")->required();
    int_cmd->add_option("--poly", integ.poly, "Coefficients, constant term first")->required();
    int_cmd->add_flag("--exact", integ.exact, "Exact value (default for b and f)");
    int_cmd->add_flag("--level", integ.level, "Level-N Riemann sum");
    int_cmd->add_option("--p", integ.p, "Prime");
    int_cmd->add_option("--N", integ.N, "Level");
    int_cmd->add_option("--q", integ.q, "Weight of the q measure");
    int_cmd->add_option("--format", integ.format, "table, csv or json");

    VerifyOptions ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run the identity catalog");
    ver_cmd->add_option("--ids", ver.ids, "Comma-separated record ids");
    ver_cmd->add_option("--n-max", ver.n_max, "Upper bound for n in every record");
    ver_cmd->add_option("--jobs", ver.jobs, "Worker threads");
    ver_cmd->add_option("--format", ver.format, "table, csv or json (default json)");

    ConvergeOptions conv;
    auto* conv_cmd = app.add_subcommand("converge", "Level sums for N = 1..N-max");
    conv_cmd->add_option("--poly", conv.poly, "Coefficients, constant term first")->required();
    conv_cmd->add_option("--measure", conv.measure, "b, f or q")->required();
    conv_cmd->add_option("--p", conv.p, "Prime")->required();
    conv_cmd->add_option("--N-max", conv.N_max, "Largest level")->required();
    conv_cmd->add_option("--q", conv.q, "Weight of the q measure");
    conv_cmd->add_option("--format", conv.format, "table, csv or json");

    DumpOptions dump;
    auto* dump_cmd = app.add_subcommand("table-dump", "Side-by-side table of one-index families");
    dump_cmd->add_option("--n", dump.n, "Largest index");
    dump_cmd->add_option("--families", dump.families, "Comma-separated families (default: all one-index)");
    dump_cmd->add_option("--format", dump.format, "table, csv or json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (seq_cmd->parsed()) return cmd_seq(seq, out);
        if (int_cmd->parsed()) return cmd_integral(integ, out);
        if (ver_cmd->parsed()) return cmd_verify(ver, out);
        if (conv_cmd->parsed()) return cmd_converge(conv, out);
        if (dump_cmd->parsed()) return cmd_table_dump(dump, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace volkenborn
