#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "volkenborn/rational.hpp"

namespace volkenborn {

/// Parameters an identity can depend on. x and y are sample points for
/// polynomial identities; the rest are summation bounds and indices.
struct Params {
    long n = 0, m = 0, k = 0, l = 0, r = 0, x = 0, y = 0;

    std::string str() const;
};

enum class ParamName { n, m, k, l, r, x, y };

struct ParamRange {
    ParamName name;
    long lo;
    long hi;
    /// A scalable range follows the n-max override of the runner.
    bool scalable = false;
};

/// Cartesian product of ranges, optionally thinned by a filter.
struct Domain {
    std::vector<ParamRange> ranges;
    std::function<bool(const Params&)> filter;

    /// All grid points; scalable ranges end at n_max when it is given.
    std::vector<Params> points(std::optional<long> n_max = std::nullopt) const;
    std::string describe(std::optional<long> n_max = std::nullopt) const;
};

using Evaluator = std::function<Rational(const Params&)>;

struct Side {
    std::string label;
    Evaluator eval;
};

enum class ClauseStatus { verified, corrected };

/// A literal reading that fails. The runner re-evaluates it at the stored
/// counterexample and expects exactly the stored values.
struct LiteralReading {
    std::string statement;
    Evaluator lhs;
    Evaluator rhs;
    Params counterexample;
    Rational expected_lhs;
    Rational expected_rhs;
};

struct Clause {
    std::string name;
    /// Every side must agree at every grid point.
    std::vector<Side> sides;
    Domain domain;
    ClauseStatus status = ClauseStatus::verified;
    /// For corrected clauses: what changed relative to the literal reading.
    std::string note;
    std::vector<LiteralReading> literals;
};

struct IdentityRecord {
    std::string id;
    std::string title;
    std::vector<Clause> clauses;

    bool corrected() const;
};

struct SideValue {
    std::string label;
    Rational value;
};

struct Counterexample {
    Params params;
    std::vector<SideValue> values;
    /// Set when a side threw instead of returning a value.
    std::string error;
};

struct LiteralResult {
    std::string statement;
    Params counterexample;
    Rational lhs;
    Rational rhs;
    /// The stored values came back and the two sides differ.
    bool reproduced = false;
    std::string error;
};

struct ClauseResult {
    std::string name;
    ClauseStatus status = ClauseStatus::verified;
    std::string note;
    std::string domain;
    long points = 0;
    long mismatches = 0;
    std::optional<Counterexample> first_counterexample;
    std::vector<LiteralResult> literals;

    /// Failures that no adjudication accounts for.
    long unadjudicated() const;
};

struct RecordResult {
    std::string id;
    std::string title;
    bool corrected = false;
    std::vector<ClauseResult> clauses;

    long points() const;
    long mismatches() const;
    long unadjudicated() const;
    bool passed() const { return unadjudicated() == 0; }
};

struct IdentityReport {
    std::vector<RecordResult> records;

    long points() const;
    long mismatches() const;
    long unadjudicated() const;
    bool passed() const { return unadjudicated() == 0; }

    std::string to_json() const;
    std::string to_table() const;
};

struct RunOptions {
    /// Restricts the run to these ids; empty means the whole catalog.
    std::vector<std::string> ids;
    std::optional<long> n_max;
    /// 1 runs the serial reference loop; more uses OpenMP over grid points.
    int jobs = 1;
};

/// Every record, in id order.
const std::vector<IdentityRecord>& catalog();

/// Throws std::invalid_argument naming the first id not in the catalog.
IdentityReport verify(const std::vector<IdentityRecord>& records, const RunOptions& options);
IdentityReport verify(const RunOptions& options);
IdentityReport verify_all(long max_n, int jobs = 1);

}  // namespace volkenborn
