#include "volkenborn/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "json.hpp"

namespace volkenborn {

namespace {

long& slot(Params& p, ParamName name) {
    switch (name) {
        case ParamName::n: return p.n;
        case ParamName::m: return p.m;
        case ParamName::k: return p.k;
        case ParamName::l: return p.l;
        case ParamName::r: return p.r;
        case ParamName::x: return p.x;
        case ParamName::y: return p.y;
    }
    throw std::logic_error("unknown parameter");
}

const char* label(ParamName name) {
    switch (name) {
        case ParamName::n: return "n";
        case ParamName::m: return "m";
        case ParamName::k: return "k";
        case ParamName::l: return "l";
        case ParamName::r: return "r";
        case ParamName::x: return "x";
        case ParamName::y: return "y";
    }
    return "?";
}

long upper(const ParamRange& r, std::optional<long> n_max) { return r.scalable && n_max ? *n_max : r.hi; }

void grid(const Domain& d, std::optional<long> n_max, size_t depth, Params& cur, std::vector<Params>& out) {
    if (depth == d.ranges.size()) {
        if (!d.filter || d.filter(cur)) out.push_back(cur);
        return;
    }
    const ParamRange& r = d.ranges[depth];
    for (long v = r.lo; v <= upper(r, n_max); ++v) {
        slot(cur, r.name) = v;
        grid(d, n_max, depth + 1, cur, out);
    }
}

// Evaluates every side at p; returns a counterexample when they disagree.
std::optional<Counterexample> check_point(const Clause& c, const Params& p) {
    Counterexample ce;
    ce.params = p;
    bool differ = false;
    for (const auto& side : c.sides) {
        try {
            ce.values.push_back({side.label, side.eval(p)});
        } catch (const std::exception& e) {
            ce.error = side.label + ": " + e.what();
            return ce;
        }
        if (ce.values.back().value != ce.values.front().value) differ = true;
    }
    if (!differ) return std::nullopt;
    return ce;
}

LiteralResult check_literal(const LiteralReading& lit) {
    LiteralResult out;
    out.statement = lit.statement;
    out.counterexample = lit.counterexample;
    try {
        out.lhs = lit.lhs(lit.counterexample);
        out.rhs = lit.rhs(lit.counterexample);
        out.reproduced = out.lhs != out.rhs && out.lhs == lit.expected_lhs && out.rhs == lit.expected_rhs;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

struct Task {
    size_t record;
    size_t clause;
    Params point;
};

}  // namespace

std::string Params::str() const {
    std::ostringstream os;
    os << "n=" << n << " m=" << m << " k=" << k << " l=" << l << " r=" << r << " x=" << x << " y=" << y;
    return os.str();
}

std::vector<Params> Domain::points(std::optional<long> n_max) const {
    std::vector<Params> out;
    Params cur;
    grid(*this, n_max, 0, cur, out);
    return out;
}

std::string Domain::describe(std::optional<long> n_max) const {
    std::string s;
    for (const auto& r : ranges) {
        if (!s.empty()) s += ", ";
        s += std::to_string(r.lo) + " <= " + label(r.name) + " <= " + std::to_string(upper(r, n_max));
    }
    if (filter) s += " (filtered)";
    return s;
}

bool IdentityRecord::corrected() const {
    return std::any_of(clauses.begin(), clauses.end(),
                       [](const Clause& c) { return c.status == ClauseStatus::corrected; });
}

long ClauseResult::unadjudicated() const {
    long bad = mismatches;
    if (status == ClauseStatus::corrected && literals.empty()) ++bad;
    for (const auto& l : literals) {
        if (!l.reproduced) ++bad;
    }
    return bad;
}

long RecordResult::points() const {
    long s = 0;
    for (const auto& c : clauses) s += c.points;
    return s;
}

long RecordResult::mismatches() const {
    long s = 0;
    for (const auto& c : clauses) s += c.mismatches;
    return s;
}

long RecordResult::unadjudicated() const {
    long s = 0;
    for (const auto& c : clauses) s += c.unadjudicated();
    return s;
}

long IdentityReport::points() const {
    long s = 0;
    for (const auto& r : records) s += r.points();
    return s;
}

long IdentityReport::mismatches() const {
    long s = 0;
    for (const auto& r : records) s += r.mismatches();
    return s;
}

long IdentityReport::unadjudicated() const {
    long s = 0;
    for (const auto& r : records) s += r.unadjudicated();
    return s;
}

IdentityReport verify(const std::vector<IdentityRecord>& records, const RunOptions& options) {
    std::vector<const IdentityRecord*> selected;
    if (options.ids.empty()) {
        for (const auto& r : records) selected.push_back(&r);
    } else {
        for (const auto& id : options.ids) {
            auto it = std::find_if(records.begin(), records.end(), [&](const IdentityRecord& r) { return r.id == id; });
            if (it == records.end()) throw std::invalid_argument("unknown identity id '" + id + "'");
            selected.push_back(&*it);
        }
    }

    std::vector<Task> tasks;
    for (size_t ri = 0; ri < selected.size(); ++ri) {
        const auto& clauses = selected[ri]->clauses;
        for (size_t ci = 0; ci < clauses.size(); ++ci) {
            for (const auto& p : clauses[ci].domain.points(options.n_max)) tasks.push_back({ri, ci, p});
        }
    }

    std::vector<std::optional<Counterexample>> outcome(tasks.size());
    const auto run_task = [&](size_t i) {
        const Task& t = tasks[i];
        outcome[i] = check_point(selected[t.record]->clauses[t.clause], t.point);
    };
    if (options.jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(options.jobs)
        for (long i = 0; i < count; ++i) run_task(static_cast<size_t>(i));
    }

    IdentityReport report;
    for (const auto* rec : selected) {
        RecordResult rr;
        rr.id = rec->id;
        rr.title = rec->title;
        rr.corrected = rec->corrected();
        for (const auto& c : rec->clauses) {
            ClauseResult cr;
            cr.name = c.name;
            cr.status = c.status;
            cr.note = c.note;
            cr.domain = c.domain.describe(options.n_max);
            for (const auto& lit : c.literals) cr.literals.push_back(check_literal(lit));
            rr.clauses.push_back(std::move(cr));
        }
        report.records.push_back(std::move(rr));
    }
    for (size_t i = 0; i < tasks.size(); ++i) {
        ClauseResult& cr = report.records[tasks[i].record].clauses[tasks[i].clause];
        ++cr.points;
        if (outcome[i]) {
            ++cr.mismatches;
            if (!cr.first_counterexample) cr.first_counterexample = std::move(outcome[i]);
        }
    }
    return report;
}

IdentityReport verify(const RunOptions& options) { return verify(catalog(), options); }

IdentityReport verify_all(long max_n, int jobs) {
    if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
    RunOptions o;
    o.n_max = max_n;
    o.jobs = jobs;
    return verify(o);
}

namespace {

nlohmann::json params_json(const Params& p) {
    return {{"n", p.n}, {"m", p.m}, {"k", p.k}, {"l", p.l}, {"r", p.r}, {"x", p.x}, {"y", p.y}};
}

const char* status_text(ClauseStatus s) { return s == ClauseStatus::verified ? "verified" : "corrected"; }

}  // namespace

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json jr;
        jr["id"] = r.id;
        jr["title"] = r.title;
        jr["status"] = r.corrected ? "corrected" : "verified";
        jr["passed"] = r.passed();
        jr["points"] = r.points();
        jr["mismatches"] = r.mismatches();
        jr["clauses"] = nlohmann::json::array();
        for (const auto& c : r.clauses) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["status"] = status_text(c.status);
            jc["domain"] = c.domain;
            jc["points"] = c.points;
            jc["mismatches"] = c.mismatches;
            if (!c.note.empty()) jc["note"] = c.note;
            if (c.first_counterexample) {
                nlohmann::json ce;
                ce["params"] = params_json(c.first_counterexample->params);
                ce["values"] = nlohmann::json::object();
                for (const auto& v : c.first_counterexample->values) ce["values"][v.label] = v.value.str();
                if (!c.first_counterexample->error.empty()) ce["error"] = c.first_counterexample->error;
                jc["first_counterexample"] = ce;
            }
            if (!c.literals.empty()) {
                jc["literal_readings"] = nlohmann::json::array();
                for (const auto& l : c.literals) {
                    nlohmann::json jl;
                    jl["statement"] = l.statement;
                    jl["counterexample"] = params_json(l.counterexample);
                    jl["lhs"] = l.lhs.str();
                    jl["rhs"] = l.rhs.str();
                    jl["reproduced"] = l.reproduced;
                    if (!l.error.empty()) jl["error"] = l.error;
                    jc["literal_readings"].push_back(jl);
                }
            }
            jr["clauses"].push_back(jc);
        }
        j["records"].push_back(jr);
    }
    j["totals"] = {{"records", records.size()},
                   {"points", points()},
                   {"mismatches", mismatches()},
                   {"unadjudicated", unadjudicated()},
                   {"passed", passed()}};
    return j.dump(2) + "\n";
}

std::string IdentityReport::to_table() const {
    std::ostringstream os;
    for (const auto& r : records) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << (r.corrected ? "corrected" : "verified ") << "  "
           << r.points() << " points  " << r.title << '\n';
        for (const auto& c : r.clauses) {
            if (c.unadjudicated() == 0 && c.status == ClauseStatus::verified) continue;
            os << "    " << c.name << ": " << status_text(c.status) << ", " << c.mismatches << " mismatches";
            if (c.first_counterexample) os << ", first at " << c.first_counterexample->params.str();
            os << '\n';
            for (const auto& l : c.literals) {
                os << "      literal \"" << l.statement << "\" " << (l.reproduced ? "fails" : "DOES NOT FAIL") << " at "
                   << l.counterexample.str() << " (" << l.lhs.str() << " vs " << l.rhs.str() << ")\n";
            }
        }
    }
    os << "total: " << records.size() << " records, " << points() << " points, " << unadjudicated()
       << " unadjudicated failures\n";
    return os.str();
}

}  // namespace volkenborn
