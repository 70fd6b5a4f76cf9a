#include <set>

#include "doctest.h"
#include "json.hpp"
#include "volkenborn/identities.hpp"
#include "volkenborn/sequences.hpp"

using namespace volkenborn;

namespace {

const IdentityRecord& record(const std::string& id) {
    for (const auto& r : catalog())
        if (r.id == id) return r;
    throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& cat = catalog();
    CHECK(cat.size() >= 35);
    std::set<std::string> ids;
    for (const auto& r : cat) {
        CHECK(ids.insert(r.id).second);
        CHECK_FALSE(r.clauses.empty());
        for (const auto& c : r.clauses) {
            CHECK(c.sides.size() >= 2);
            CHECK_FALSE(c.domain.points().empty());
            if (c.status == ClauseStatus::corrected) {
                CHECK_FALSE(c.note.empty());
                CHECK_FALSE(c.literals.empty());
            }
        }
    }
    for (int i = 1; i <= 35; ++i) {
        const std::string id = (i < 10 ? "I0" : "I") + std::to_string(i);
        CHECK(ids.count(id) == 1);
    }
}

TEST_CASE("I01 at n = 4 gives 24/5 on every side") {
    const auto& clause = record("I01").clauses.front();
    for (const auto& side : clause.sides) CHECK(side.eval(Params{.n = 4}) == Rational(24, 5));
}

TEST_CASE("I13 at n = 3 gives 1/12") {
    const auto& clause = record("I13").clauses.front();
    for (const auto& side : clause.sides) CHECK(side.eval(Params{.n = 3}) == Rational(1, 12));
}

TEST_CASE("I34 at n = 1") {
    const auto& clause = record("I34").clauses.front();
    for (const auto& side : clause.sides) CHECK(side.eval(Params{.n = 1}) == Rational(-1, 2));
    const auto& literal = clause.literals.front();
    CHECK(literal.lhs(literal.counterexample) == Rational(-1, 2));
    CHECK(literal.rhs(literal.counterexample) == 0);
}

TEST_CASE("verify single records with an n-max override") {
    const IdentityReport r = verify(RunOptions{{"I01"}, 20, 1});
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].points() == 21);
    CHECK(r.mismatches() == 0);
    CHECK(r.passed());

    const IdentityReport two = verify(RunOptions{{"I01", "I34"}, 20, 1});
    REQUIRE(two.records.size() == 2);
    CHECK(two.passed());
}

TEST_CASE("I16 measure adjudication") {
    const IdentityReport r = verify(RunOptions{{"I16"}, std::nullopt, 1});
    REQUIRE(r.records.size() == 1);
    const RecordResult& rec = r.records[0];
    CHECK(rec.corrected);
    CHECK(rec.passed());
    const ClauseResult& measure = rec.clauses.front();
    CHECK(measure.mismatches == 0);
    REQUIRE(measure.literals.size() == 2);
    for (const auto& lit : measure.literals) CHECK(lit.reproduced);
    const auto& clause = record("I16").clauses.front();
    for (long n = 1; n <= 10; ++n) {
        const Params p{.n = n};
        CHECK(clause.sides[0].eval(p) == harmonic(n));
        CHECK(clause.literals[0].lhs(p) != clause.literals[0].rhs(p));
    }
}

TEST_CASE("every corrected clause reproduces its literal counterexample") {
    const IdentityReport r = verify_all(15);
    long corrected = 0;
    for (const auto& rec : r.records)
        for (const auto& c : rec.clauses) {
            CHECK(c.mismatches == 0);
            if (c.status != ClauseStatus::corrected) continue;
            ++corrected;
            REQUIRE_FALSE(c.literals.empty());
            for (const auto& lit : c.literals) {
                INFO(rec.id << " " << lit.statement);
                CHECK(lit.reproduced);
                CHECK(lit.lhs != lit.rhs);
            }
        }
    CHECK(corrected > 0);
    CHECK(r.passed());
    CHECK(r.unadjudicated() == 0);
}

TEST_CASE("a perturbed right-hand side fails only its own record") {
    std::vector<IdentityRecord> mutated = catalog();
    for (auto& rec : mutated)
        if (rec.id == "I02") {
            auto original = rec.clauses[0].sides[1].eval;
            rec.clauses[0].sides[1].eval = [original](const Params& p) { return original(Params{.n = p.n + 1}); };
        }
    const IdentityReport r = verify(mutated, RunOptions{{}, 8, 1});
    for (const auto& rec : r.records) {
        INFO(rec.id);
        if (rec.id == "I02") {
            CHECK_FALSE(rec.passed());
            CHECK(rec.mismatches() > 0);
        } else {
            CHECK(rec.passed());
        }
    }
    CHECK_FALSE(r.passed());
}

TEST_CASE("a literal that stops failing is unadjudicated") {
    std::vector<IdentityRecord> mutated{record("I34")};
    auto& lit = mutated[0].clauses[0].literals[0];
    lit.rhs = lit.lhs;
    const IdentityReport r = verify(mutated, RunOptions{});
    CHECK_FALSE(r.passed());
    CHECK(r.mismatches() == 0);
}

TEST_CASE("parallel and serial runs agree") {
    const IdentityReport serial = verify_all(10, 1);
    const IdentityReport parallel = verify_all(10, 4);
    CHECK(serial.to_json() == parallel.to_json());
    CHECK(serial.to_table() == parallel.to_table());
}

TEST_CASE("verdicts survive cache clearing") {
    const std::string first = verify_all(10).to_json();
    clear_caches();
    CHECK(verify_all(10).to_json() == first);
}

TEST_CASE("report serialization") {
    const IdentityReport r = verify(RunOptions{{"I16", "I34"}, 6, 1});
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["records"].size() == 2);
    CHECK(j["totals"]["passed"] == true);
    CHECK(j["totals"]["points"] == r.points());
    CHECK(j["records"][0]["id"] == "I16");
    CHECK(j["records"][0]["clauses"][0].contains("literal_readings"));
    CHECK(r.to_table().find("I34") != std::string::npos);
}

TEST_CASE("errors") {
    CHECK_THROWS_WITH_AS(verify(RunOptions{{"BOGUS"}}), doctest::Contains("BOGUS"), std::invalid_argument);
    CHECK_THROWS_AS(verify_all(0), std::invalid_argument);
}
