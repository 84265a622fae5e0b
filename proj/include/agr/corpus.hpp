#pragma once

#include <string>
#include <vector>

#include "agr/dsl.hpp"
#include "agr/scalar.hpp"

namespace agr {

// Built-in worked examples with their known invariants.  Each case is an
// ordinary analysis script plus a list of (json pointer, value) expectations
// diffed against the structured report.

struct CorpusCase {
    std::string name;
    std::string description;
    std::string script;
    RunOptions opts;
    std::vector<std::pair<std::string, Json>> expected;
};

struct CorpusOutcome {
    std::string name;
    bool ok = false;
    std::vector<std::string> diffs;
    Json report;
};

inline const std::vector<CorpusCase>& corpus_cases() {
    static const std::vector<CorpusCase> cases = [] {
        std::vector<CorpusCase> v;

        v.push_back({
            "gorenstein-4-9-10",
            "S = <4,9,10>, I = (t^8,t^9,t^10), J = (t^8): G(I) Gorenstein, B quasi-Gorenstein",
            "ring semigroup 4 9 10\n"
            "ideal I = t^8, t^9, t^10\n"
            "ideal J = t^8\n"
            "check gorenstein-G I J\n"
            "check quasi-gorenstein I J\n"
            "analyze filtration I J\n"
            "present G I\n"
            "present F I\n",
            {},
            {
                {"/results/0/verdicts/0/value", true},
                {"/results/0/verdicts/1/value", true},
                {"/results/0/verdicts/2/value", true},
                {"/results/0/invariants/r", 2},
                {"/results/0/tables/socle", Json::array({0, 0, 1})},
                {"/results/0/tables/quotient_hilb", Json::array({2, 4, 2})},
                {"/results/1/verdicts/0/value", true},
                {"/results/1/invariants/u", 0},
                {"/results/1/invariants/a", 2},
                {"/results/1/invariants/w", 0},
                {"/results/1/invariants/s", 2},
                {"/results/2/invariants/e_I", 8},
                {"/results/2/invariants/e_F", 4},
                {"/results/2/invariants/lengths/colength", 2},
                {"/results/2/invariants/lengths/mu", 3},
                {"/results/2/tables/hilb_G", Json::array({2, 6, 8, 8, 8, 8, 8})},
                {"/results/2/tables/hilb_F", Json::array({1, 3, 4, 4, 4, 4, 4})},
                {"/results/2/verdicts/0/value", true},   // normally flat
                {"/results/2/verdicts/1/value", true},   // G Cohen-Macaulay
                {"/results/2/verdicts/2/value", true},   // F Cohen-Macaulay
                {"/results/2/verdicts/3/value", true},   // Ratliff-Rush closed
                {"/results/3/invariants/generator_degrees", Json::array({2, 2})},
                {"/results/3/tables/presentation/2/representatives",
                 Json::array({"w*X^2 - Z^2", "X*Z - Y^2"})},
                {"/results/3/verdicts/0/value", true},   // Hilbert evidence
                {"/results/3/verdicts/1/value", true},   // complete intersection
                {"/results/4/invariants/generator_degrees", Json::array({2, 2})},
                {"/results/4/verdicts/1/value", true},
            },
        });

        v.push_back({
            "cm-not-gorenstein-5-6-9",
            "S = <5,6,9>, I = m, J = (t^5): G(m) Cohen-Macaulay but not Gorenstein",
            "ring semigroup 5 6 9\n"
            "ideal M = t^5, t^6, t^9\n"
            "ideal J = t^5\n"
            "check gorenstein-G M J\n",
            {},
            {
                {"/results/0/verdicts/0/value", false},
                {"/results/0/verdicts/1/value", false},
                {"/results/0/verdicts/2/value", true},  // still Cohen-Macaulay
                {"/results/0/invariants/r", 3},
                {"/results/0/tables/quotient_hilb", Json::array({1, 2, 1, 1})},
                {"/results/0/tables/socle/1", 1},
            },
        });

        v.push_back({
            "two-reductions-4-5-6",
            "S = <4,5,6>, I = (t^4,t^5): two reductions with different nilpotency indices",
            "ring semigroup 4 5 6\n"
            "ideal I = t^4, t^5\n"
            "ideal J = t^4\n"
            "ideal Jp = t^4 - t^5\n"
            "analyze filtration I J\n"
            "analyze filtration I Jp\n"
            "check quasi-gorenstein I J\n",
            {},
            {
                {"/results/0/invariants/r", 3},
                {"/results/0/invariants/s", 1},
                {"/results/0/verdicts/3/value", false},  // not Ratliff-Rush closed
                {"/results/1/invariants/r", 3},
                {"/results/1/invariants/s", 2},
                {"/results/1/tables/quotient_hilb", Json::array({2, 1, 1})},
                {"/results/2/verdicts/0/value", false},
            },
        });

        v.push_back({
            "ratliff-rush-lift-4-5-6",
            "S = <4,5,6>, the Ratliff-Rush closure m of (t^4,t^5) has Gorenstein G(m)",
            "ring semigroup 4 5 6\n"
            "ideal M = t^4, t^5, t^6\n"
            "ideal J = t^4\n"
            "check gorenstein-G M J\n"
            "check quasi-gorenstein M J\n",
            {},
            {
                {"/results/0/verdicts/0/value", true},
                {"/results/0/invariants/r", 2},
                {"/results/1/verdicts/0/value", true},
                {"/results/1/invariants/u", 0},
                {"/results/1/invariants/a", 2},
                {"/results/1/invariants/s", 2},
            },
        });

        v.push_back({
            "conductor-5-6-7-8",
            "S = <5,6,7,8>, I = (t^5,t^6,t^7), J = (t^5): blowup conductor equals I^2, "
            "yet B is not quasi-Gorenstein",
            "ring semigroup 5 6 7 8\n"
            "ideal I = t^5, t^6, t^7\n"
            "ideal J = t^5\n"
            "ideal M = t^5, t^6, t^7, t^8\n"
            "check quasi-gorenstein I J\n"
            "analyze filtration I J\n"
            "check quasi-gorenstein M J\n"
            "check gorenstein-G M J\n",
            {},
            {
                {"/results/0/verdicts/0/value", false},
                {"/results/0/invariants/r", 2},
                {"/results/1/verdicts/1/value", false},  // G not Cohen-Macaulay
                {"/results/1/verdicts/3/value", false},  // not Ratliff-Rush closed
                {"/results/2/verdicts/0/value", true},   // Rees algebra of m
                {"/results/2/invariants/u", 0},
                {"/results/3/verdicts/0/value", true},   // G(m) Gorenstein
            },
        });

        v.push_back({
            "fiber-not-cm-3-7-11",
            "S = <3,7,11>, I = (t^6,t^7,t^11): fiber cone not Cohen-Macaulay",
            "ring semigroup 3 7 11\n"
            "ideal I = t^6, t^7, t^11\n"
            "analyze filtration I\n"
            "present G I\n"
            "present F I\n",
            {},
            {
                {"/results/0/invariants/e_I", 6},
                {"/results/0/invariants/e_F", 3},
                {"/results/0/invariants/lengths/colength", 2},
                {"/results/0/tables/hilb_G/1", 5},
                {"/results/0/verdicts/0/value", false},  // not normally flat
                {"/results/0/verdicts/1/value", true},   // G Cohen-Macaulay
                {"/results/0/verdicts/2/value", false},  // F not Cohen-Macaulay
                {"/results/1/invariants/generator_degrees", Json::array({1, 2, 2, 2, 3})},
                {"/results/1/tables/presentation/1/representatives", Json::array({"w*Z"})},
                {"/results/1/tables/presentation/2/representatives",
                 Json::array({"X*Z - w*Y^2", "Y*Z", "Z^2"})},
                {"/results/1/tables/presentation/3/representatives",
                 Json::array({"w*X^3 - Y^3"})},
                {"/results/1/verdicts/0/value", true},
                {"/results/1/verdicts/1/value", false},
                {"/results/2/invariants/generator_degrees", Json::array({2, 2, 2, 3})},
                {"/results/2/tables/presentation/2/representatives",
                 Json::array({"X*Z", "Y*Z", "Z^2"})},
                {"/results/2/tables/presentation/3/representatives", Json::array({"Y^3"})},
                {"/results/2/verdicts/1/value", false},
            },
        });

        v.push_back({
            "torsion-3-4-5",
            "S = <3,4,5>, I = (t^3,t^4): G(I) has depth zero while F(I) is a hypersurface",
            "ring semigroup 3 4 5\n"
            "ideal I = t^3, t^4\n"
            "present G I\n"
            "present F I\n"
            "analyze filtration I\n",
            {},
            {
                {"/results/0/invariants/generator_degrees", Json::array({1, 1, 3})},
                {"/results/0/tables/presentation/1/representatives",
                 Json::array({"w*X", "w*Y"})},
                {"/results/0/tables/presentation/3/representatives", Json::array({"Y^3"})},
                {"/results/0/verdicts/1/value", false},
                {"/results/1/invariants/generator_degrees", Json::array({3})},
                {"/results/1/verdicts/1/value", true},
                {"/results/2/invariants/e_I", 3},
                {"/results/2/invariants/e_F", 3},
                {"/results/2/invariants/lengths/colength", 2},
                {"/results/2/verdicts/1/value", false},  // G not Cohen-Macaulay
                {"/results/2/verdicts/2/value", true},   // F Cohen-Macaulay
            },
        });

        v.push_back({
            "quotient-plane",
            "k[x,y]/(x^2 y, y^3), I = (x): more defining relations for G than for F",
            "ring quotient x y mod x^2*y, y^3\n"
            "ideal I = x\n"
            "present G I\n"
            "present F I\n"
            "analyze filtration I\n",
            {},
            {
                {"/results/0/invariants/generator_degrees", Json::array({2})},
                {"/results/0/tables/presentation/2/representatives", Json::array({"y*X^2"})},
                {"/results/0/verdicts/1/value", false},
                {"/results/1/invariants/generator_degrees", Json::array()},
                {"/results/1/verdicts/1/value", true},  // polynomial ring
                {"/results/2/invariants/lengths/colength", 3},
                {"/results/2/tables/hilb_G/0", 3},
                {"/results/2/tables/hilb_G/1", 3},
                {"/results/2/verdicts/0/value", false},  // not normally flat
            },
        });

        v.push_back({
            "quotient-space",
            "k[x,y,z]/(x^2, y^2, x y z^2), I = (y,z): relation degrees of G exceed those of F",
            "ring quotient x y z mod x^2, y^2, x*y*z^2\n"
            "ideal I = y, z\n"
            "present G I\n"
            "present F I\n"
            "analyze filtration I\n",
            {},
            {
                {"/results/0/invariants/generator_degrees", Json::array({2, 3})},
                {"/results/0/tables/presentation/2/representatives", Json::array({"X^2"})},
                {"/results/0/tables/presentation/3/representatives", Json::array({"x*X*Y^2"})},
                {"/results/0/verdicts/1/value", false},
                {"/results/1/invariants/generator_degrees", Json::array({2})},
                {"/results/1/tables/presentation/2/representatives", Json::array({"X^2"})},
                {"/results/1/verdicts/1/value", true},
                {"/results/2/invariants/lengths/colength", 2},
                {"/results/2/tables/hilb_G/1", 4},
                {"/results/2/tables/hilb_G/2", 4},
                {"/results/2/invariants/e_I", 3},
                {"/results/2/invariants/e_F", 2},
                {"/results/2/verdicts/0/value", false},  // not normally flat
            },
        });

        return v;
    }();
    return cases;
}

inline Json run_corpus_case(const CorpusCase& c) {
    AnalysisScript sc = parse_script(c.script);
    if (sc.semigroup_ring) return run_script_semigroup(sc, Rational(1), c.opts);
    return run_script_monomial(sc, c.opts);
}

inline std::vector<std::string> diff_corpus_case(const CorpusCase& c, const Json& report) {
    std::vector<std::string> diffs;
    for (const auto& [ptr, want] : c.expected) {
        Json::json_pointer p(ptr);
        if (!report.contains(p)) {
            diffs.push_back(c.name + ": " + ptr + ": expected " + want.dump() + ", missing");
            continue;
        }
        const Json& got = report.at(p);
        if (got != want)
            diffs.push_back(c.name + ": " + ptr + ": expected " + want.dump() + ", got " +
                            got.dump());
    }
    return diffs;
}

// Runs every case whose name contains `filter`; throws CorpusMismatch listing
// all deviations unless `throw_on_mismatch` is cleared.
inline std::vector<CorpusOutcome> run_corpus(const std::string& filter = "",
                                             bool throw_on_mismatch = true) {
    std::vector<CorpusOutcome> out;
    std::string all_diffs;
    for (const CorpusCase& c : corpus_cases()) {
        if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
        CorpusOutcome o;
        o.name = c.name;
        o.report = run_corpus_case(c);
        o.diffs = diff_corpus_case(c, o.report);
        o.ok = o.diffs.empty();
        for (const std::string& d : o.diffs) all_diffs += (all_diffs.empty() ? "" : "; ") + d;
        out.push_back(std::move(o));
    }
    if (out.empty() && !filter.empty()) throw UnknownName("no corpus case matches '" + filter + "'");
    if (throw_on_mismatch && !all_diffs.empty()) throw CorpusMismatch(all_diffs);
    return out;
}

// Perturbs one expectation per case and checks that the diffing notices;
// guards against vacuous comparisons.
inline void corpus_self_test() {
    for (const CorpusCase& c : corpus_cases()) {
        Json report = run_corpus_case(c);
        if (!diff_corpus_case(c, report).empty())
            throw CorpusMismatch(c.name + ": unexpected mismatch during self test");
        CorpusCase broken = c;
        for (auto& [ptr, want] : broken.expected) {
            if (want.is_boolean()) want = !want.get<bool>();
            else if (want.is_number_integer()) want = want.get<long>() + 1;
            else if (want.is_array()) want.push_back(999);
            else want = want.dump() + "?";
        }
        std::vector<std::string> diffs = diff_corpus_case(broken, report);
        if (diffs.size() != broken.expected.size())
            throw CorpusMismatch(c.name + ": perturbed expectations were not all detected");
    }
}

}  // namespace agr
