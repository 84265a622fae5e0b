#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "agr/errors.hpp"
#include "agr/filtration.hpp"
#include "agr/gorenstein.hpp"
#include "agr/parse.hpp"
#include "agr/presentation.hpp"

namespace agr {

using Json = nlohmann::json;

// --- script model -----------------------------------------------------------

struct ScriptCommand {
    enum class Kind { CheckGorensteinG, CheckQuasiGorenstein, AnalyzeFiltration, PresentG, PresentF };
    Kind kind;
    std::string a;  // first ideal name
    std::string b;  // optional second ideal name
    int line = 0;
};

struct IdealDecl {
    std::string name;
    std::vector<std::pair<std::string, int>> elems;  // raw text + column
    int line = 0;
};

struct AnalysisScript {
    bool semigroup_ring = false;
    std::vector<int> generators;                           // semigroup case
    std::vector<std::string> variables;                    // quotient case
    std::vector<std::pair<std::string, int>> relations;    // quotient case, raw monomials
    std::vector<IdealDecl> ideals;
    std::vector<ScriptCommand> commands;
};

namespace dsl_detail {

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace dsl_detail

// Line-oriented grammar:
//   ring semigroup <g1> <g2> ...
//   ring quotient <vars...> mod <monomial>, <monomial>, ...
//   ideal <Name> = <elem>, <elem>, ...
//   check gorenstein-G <I> <J>
//   check quasi-gorenstein <I> <J>
//   analyze filtration <I> [<J>]
//   present G|F <I>
//   # comment
inline AnalysisScript parse_script(const std::string& text) {
    AnalysisScript sc;
    bool have_ring = false;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    auto known = [&](const std::string& name) {
        for (const auto& d : sc.ideals)
            if (d.name == name) return true;
        return false;
    };
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        if (size_t h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
        std::vector<std::string> w = dsl_detail::words(s);
        if (w.empty()) continue;

        if (w[0] == "ring") {
            if (have_ring) throw ParseError("duplicate ring declaration", line, 1);
            if (w.size() < 2) throw ParseError("expected 'semigroup' or 'quotient'", line, 5);
            if (w[1] == "semigroup") {
                sc.semigroup_ring = true;
                for (size_t i = 2; i < w.size(); ++i) {
                    try {
                        sc.generators.push_back(std::stoi(w[i]));
                    } catch (...) {
                        throw ParseError("expected a generator integer, got '" + w[i] + "'", line, 1);
                    }
                }
                if (sc.generators.empty())
                    throw ParseError("semigroup needs at least one generator", line, 1);
                NumericalSemigroup validate(sc.generators);  // fail fast on gcd != 1
                (void)validate;
            } else if (w[1] == "quotient") {
                size_t m = 2;
                while (m < w.size() && w[m] != "mod") sc.variables.push_back(w[m++]);
                if (sc.variables.empty())
                    throw ParseError("quotient ring needs variables", line, 1);
                if (m == w.size()) throw ParseError("expected 'mod'", line, 1);
                size_t tail_pos = s.find("mod");
                std::string rest = s.substr(tail_pos + 3);
                for (auto& [piece, col] : split_commas(rest, static_cast<int>(tail_pos) + 3)) {
                    std::string trimmed = piece;
                    if (trimmed.find_first_not_of(" \t") == std::string::npos)
                        throw ParseError("empty relation", line, col + 1);
                    sc.relations.emplace_back(piece, col);
                }
            } else {
                throw ParseError("expected 'semigroup' or 'quotient', got '" + w[1] + "'", line, 6);
            }
            have_ring = true;
            continue;
        }
        if (!have_ring) throw ParseError("a ring declaration must come first", line, 1);

        if (w[0] == "ideal") {
            size_t eq = s.find('=');
            if (w.size() < 2 || eq == std::string::npos)
                throw ParseError("expected 'ideal <Name> = <elements>'", line, 1);
            IdealDecl d;
            d.name = w[1];
            d.line = line;
            if (known(d.name)) throw ParseError("duplicate ideal name '" + d.name + "'", line, 7);
            std::string rest = s.substr(eq + 1);
            for (auto& [piece, col] : split_commas(rest, static_cast<int>(eq) + 1)) {
                if (piece.find_first_not_of(" \t") == std::string::npos)
                    throw ParseError("empty element", line, col + 1);
                d.elems.emplace_back(piece, col);
            }
            sc.ideals.push_back(std::move(d));
            continue;
        }
        if (w[0] == "check") {
            if (w.size() != 4 || (w[1] != "gorenstein-G" && w[1] != "quasi-gorenstein"))
                throw ParseError("expected 'check gorenstein-G|quasi-gorenstein <I> <J>'", line, 1);
            if (!known(w[2])) throw UnknownName("unknown ideal '" + w[2] + "' on line " + std::to_string(line));
            if (!known(w[3])) throw UnknownName("unknown ideal '" + w[3] + "' on line " + std::to_string(line));
            sc.commands.push_back({w[1] == "gorenstein-G" ? ScriptCommand::Kind::CheckGorensteinG
                                                          : ScriptCommand::Kind::CheckQuasiGorenstein,
                                   w[2], w[3], line});
            continue;
        }
        if (w[0] == "analyze") {
            if (w.size() < 3 || w.size() > 4 || w[1] != "filtration")
                throw ParseError("expected 'analyze filtration <I> [<J>]'", line, 1);
            if (!known(w[2])) throw UnknownName("unknown ideal '" + w[2] + "' on line " + std::to_string(line));
            if (w.size() == 4 && !known(w[3]))
                throw UnknownName("unknown ideal '" + w[3] + "' on line " + std::to_string(line));
            sc.commands.push_back({ScriptCommand::Kind::AnalyzeFiltration, w[2],
                                   w.size() == 4 ? w[3] : "", line});
            continue;
        }
        if (w[0] == "present") {
            if (w.size() != 3 || (w[1] != "G" && w[1] != "F"))
                throw ParseError("expected 'present G|F <I>'", line, 1);
            if (!known(w[2])) throw UnknownName("unknown ideal '" + w[2] + "' on line " + std::to_string(line));
            sc.commands.push_back({w[1] == "G" ? ScriptCommand::Kind::PresentG
                                               : ScriptCommand::Kind::PresentF,
                                   w[2], "", line});
            continue;
        }
        throw ParseError("unknown directive '" + w[0] + "'", line, 1);
    }
    if (!have_ring) throw ParseError("script has no ring declaration", std::max(line, 1), 1);
    return sc;
}

// --- execution ----------------------------------------------------------------

struct RunOptions {
    int precision = 0;      // initial precision override (semigroup rings)
    int precision_cap = 1 << 16;
    int degree_bound = 6;   // presentations
    int window = -1;        // filtration Hilbert window; -1 means r + 4
};

namespace dsl_detail {

// Krull dimension of the presented graded ring, read off the tail of its
// Hilbert function: eventually zero means dimension 0, eventually a nonzero
// constant means dimension 1.  -1 when the tail has not settled.
inline int detected_dimension(const std::vector<long>& hf) {
    size_t n = hf.size();
    if (n >= 1 && hf[n - 1] == 0) return 0;
    if (n >= 3 && hf[n - 1] == hf[n - 2] && hf[n - 2] == hf[n - 3]) return 1;
    return -1;
}

inline Json verdict(const std::string& name, bool value, const std::string& witness = "") {
    Json v{{"name", name}, {"value", value}};
    if (!witness.empty()) v["witness"] = witness;
    return v;
}

template <class B, class Elem>
Json exec_commands(const B& bk, const AnalysisScript& sc,
                   const std::map<std::string, typename B::Ideal>& ideals,
                   const std::map<std::string, std::vector<Elem>>& gens,
                   const std::map<std::string, std::vector<std::string>>& gen_texts,
                   const RunOptions& opt) {
    const auto& ops = bk.ops;
    Json results = Json::array();
    for (const ScriptCommand& cmd : sc.commands) {
        const typename B::Ideal& I = ideals.at(cmd.a);
        Json r;
        Json verdicts = Json::array();
        Json invariants = Json::object();
        Json tables = Json::object();
        Json witnesses = Json::array();
        Json certified = Json::object();

        switch (cmd.kind) {
            case ScriptCommand::Kind::CheckGorensteinG: {
                r["command"] = "check gorenstein-G " + cmd.a + " " + cmd.b;
                const typename B::Ideal& J = ideals.at(cmd.b);
                GradedGorensteinResult g = graded_gorenstein_check(ops, I, J);
                SevenWayResult q = seven_way_check(ops, I, J);
                Verdict cm = cm_check_G(ops, I, J);
                invariants["r"] = g.r;
                invariants["s"] = index_of_nilpotency(ops, J, I);
                verdicts.push_back(verdict("gorenstein_G", g.gorenstein, g.witness));
                verdicts.push_back(verdict("gorenstein_G_quotient", q.gorenstein, q.witness));
                verdicts.push_back(verdict("cm_G", cm.value, cm.witness));
                tables["socle"] = q.socle_dims;
                tables["quotient_hilb"] = q.graded_lengths;
                if (!g.witness.empty()) witnesses.push_back(g.witness);
                if (!q.witness.empty()) witnesses.push_back(q.witness);
                certified["exact"] = true;
                break;
            }
            case ScriptCommand::Kind::CheckQuasiGorenstein: {
                r["command"] = "check quasi-gorenstein " + cmd.a + " " + cmd.b;
                const typename B::Ideal& J = ideals.at(cmd.b);
                CanonicalSliceResult q = quasi_gorenstein_check(ops, I, J);
                invariants["r"] = q.r;
                invariants["s"] = q.s;
                invariants["w"] = q.w;
                if (q.quasi_gorenstein) {
                    invariants["u"] = q.u;
                    invariants["a"] = q.a;
                }
                verdicts.push_back(verdict("quasi_gorenstein", q.quasi_gorenstein, q.witness));
                if (!q.witness.empty()) witnesses.push_back(q.witness);
                certified["slice_propagation"] = true;
                break;
            }
            case ScriptCommand::Kind::AnalyzeFiltration: {
                r["command"] = "analyze filtration " + cmd.a + (cmd.b.empty() ? "" : " " + cmd.b);
                std::optional<typename B::Ideal> J;
                if (!cmd.b.empty()) J = ideals.at(cmd.b);
                else if (auto pr = ops.principal_reduction(I)) J = *pr;

                int rnum = -1;
                if (J) {
                    rnum = reduction_number(ops, *J, I);
                    invariants["r"] = rnum;
                    invariants["s"] = index_of_nilpotency(ops, *J, I);
                }
                int N = opt.window > 0 ? opt.window : (rnum >= 0 ? rnum + 4 : 8);
                HilbertData h = [&] {
                    try {
                        return hilbert_functions(ops, I, J, N);
                    } catch (const StabilizationNotReached&) {
                        return hilbert_functions(ops, I, J, 2 * N + 4);
                    }
                }();
                tables["hilb_G"] = h.hilb_G;
                tables["hilb_F"] = h.hilb_F;
                if (J && !h.hilb_G_quot.empty()) tables["quotient_hilb"] = h.hilb_G_quot;
                invariants["e_I"] = h.e_I;
                invariants["e_F"] = h.e_F;
                invariants["lengths"] = Json{{"colength", ops.colength(I)}, {"mu", mu_of(ops, I)}};
                FreenessData nf = normal_flatness(ops, I, N);
                verdicts.push_back(verdict("normally_flat", nf.normally_flat));
                tables["conormal_ranks"] = nf.ranks;
                tables["conormal_free"] = nf.free_flags;
                if (J) {
                    Verdict cm = cm_check_G(ops, I, *J);
                    verdicts.push_back(verdict("cm_G", cm.value, cm.witness));
                    Verdict fcm = fiber_cm_dim1(ops, I, *J);
                    verdicts.push_back(verdict("cm_F", fcm.value, fcm.witness));
                    tables["socle"] = socle_table(ops, *J, I);
                    auto rr = ratliff_rush(ops, I);
                    verdicts.push_back(verdict("ratliff_rush_closed", ops.equal(rr.closure, I)));
                    certified["ratliff_rush"] = rr.certified;
                }
                break;
            }
            case ScriptCommand::Kind::PresentG:
            case ScriptCommand::Kind::PresentF: {
                bool fiber = cmd.kind == ScriptCommand::Kind::PresentF;
                r["command"] = std::string("present ") + (fiber ? "F" : "G") + " " + cmd.a;
                GradedPresentation p =
                    present(bk, I, gens.at(cmd.a), opt.degree_bound, fiber);
                invariants["relation_type_lower_bound"] = p.relation_type_lower_bound;
                invariants["generator_degrees"] = p.generator_degrees();
                Json degs = Json::array();
                for (size_t d = 0; d < p.degrees.size(); ++d)
                    degs.push_back(Json{{"degree", d},
                                        {"ambient_dim", p.degrees[d].ambient_dim},
                                        {"kernel_dim", p.degrees[d].kernel_dim},
                                        {"new_generators", p.degrees[d].new_generators},
                                        {"representatives", p.degrees[d].representatives}});
                tables["presentation"] = degs;
                tables["hf_quotient"] = p.hf_quotient;
                tables["hf_true"] = p.hf_true;
                verdicts.push_back(verdict("hilbert_match", p.hilbert_match));
                int dim = dsl_detail::detected_dimension(p.hf_true);
                if (dim < 0) {
                    witnesses.push_back("Hilbert function tail not settled; dimension unknown");
                } else {
                    invariants["dimension"] = dim;
                    try {
                        CiVerdict ci = ci_assess(p, dim);
                        verdicts.push_back(
                            verdict("complete_intersection", ci == CiVerdict::CompleteIntersection));
                    } catch (const InconclusiveAtBound& e) {
                        witnesses.push_back(e.what());
                    }
                }
                certified["lower_bound_only"] = true;
                break;
            }
        }
        r["verdicts"] = verdicts;
        r["invariants"] = invariants;
        r["tables"] = tables;
        r["witnesses"] = witnesses;
        r["certified_flags"] = certified;
        results.push_back(std::move(r));
    }

    Json ideals_json = Json::object();
    for (const auto& [name, texts] : gen_texts) ideals_json[name] = texts;
    Json out;
    out["ideals"] = ideals_json;
    out["results"] = results;
    return out;
}

}  // namespace dsl_detail

// Runs a script on the power-series backend over the field of the prototype.
template <class K>
Json run_script_semigroup(const AnalysisScript& sc, const K& proto, const RunOptions& opt) {
    SemigroupRing<K> ring(NumericalSemigroup(sc.generators), proto.make(1), opt.precision,
                          opt.precision_cap);
    SemigroupPresentationBackend<K> bk{SemigroupOps<K>{ring}};
    std::map<std::string, RingIdeal<K>> ideals;
    std::map<std::string, std::vector<Series<K>>> gens;
    std::map<std::string, std::vector<std::string>> texts;
    for (const IdealDecl& d : sc.ideals) {
        std::vector<Series<K>> elems;
        for (const auto& [piece, col] : d.elems) {
            Series<K> e = parse_series_element(piece, proto, d.line, col);
            for (const auto& [exp, c] : e.terms())
                if (!ring.semigroup().contains(exp))
                    throw NotInRing("element '" + piece + "' (line " + std::to_string(d.line) +
                                    ") uses t^" + std::to_string(exp) + " outside the semigroup");
            elems.push_back(std::move(e));
            texts[d.name].push_back(elems.back().str());
        }
        ideals.emplace(d.name, echelonize(ring, elems));
        gens.emplace(d.name, std::move(elems));
    }
    Json out = dsl_detail::exec_commands(bk, sc, ideals, gens, texts, opt);
    Json rj;
    rj["kind"] = "semigroup";
    rj["generators"] = sc.generators;
    rj["field"] = K::field_name();
    rj["conductor"] = ring.conductor();
    rj["symmetric"] = ring.semigroup().symmetric();
    out["ring"] = rj;
    out["precision"] = Json{{"working", ring.working_precision()}, {"cap", ring.precision_cap()}};
    return out;
}

// Monomial quotient rings: the calculus is field-independent.
inline Json run_script_monomial(const AnalysisScript& sc, const RunOptions& opt) {
    std::vector<Exponents> rels;
    for (const auto& [piece, col] : sc.relations)
        rels.push_back(parse_monomial_element(piece, sc.variables, 0, col));
    MonomialQuotientRing ring(sc.variables, MonomialIdeal(static_cast<int>(sc.variables.size()), rels));
    MonomialPresentationBackend bk{MonomialOps{ring}};
    std::map<std::string, MonomialIdeal> ideals;
    std::map<std::string, std::vector<Exponents>> gens;
    std::map<std::string, std::vector<std::string>> texts;
    for (const IdealDecl& d : sc.ideals) {
        std::vector<Exponents> elems;
        for (const auto& [piece, col] : d.elems) {
            elems.push_back(parse_monomial_element(piece, sc.variables, d.line, col));
            texts[d.name].push_back(MonomialIdeal::monomial_str(elems.back(), sc.variables));
        }
        ideals.emplace(d.name, ring.lift(MonomialIdeal(ring.nvars(), elems)));
        gens.emplace(d.name, std::move(elems));
    }
    Json out = dsl_detail::exec_commands(bk, sc, ideals, gens, texts, opt);
    Json rj;
    rj["kind"] = "quotient";
    rj["variables"] = sc.variables;
    std::vector<std::string> rel_strs;
    for (const Exponents& e : rels) rel_strs.push_back(MonomialIdeal::monomial_str(e, sc.variables));
    rj["relations"] = rel_strs;
    out["ring"] = rj;
    out["precision"] = Json{{"working", nullptr}, {"cap", nullptr}};
    return out;
}

// --- text rendering (derived from the structured report) ---------------------

inline std::string render_text(const Json& report) {
    std::ostringstream os;
    const Json& ring = report.at("ring");
    os << "ring: ";
    if (ring.at("kind") == "semigroup") {
        os << "k[[t^S]], S = <";
        const auto& g = ring.at("generators");
        for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i].get<int>();
        os << ">, field " << ring.at("field").get<std::string>()
           << ", conductor " << ring.at("conductor").get<int>()
           << (ring.at("symmetric").get<bool>() ? " (symmetric)" : " (not symmetric)") << "\n";
    } else {
        os << "k[";
        const auto& v = ring.at("variables");
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get<std::string>();
        os << "] / (";
        const auto& rel = ring.at("relations");
        for (size_t i = 0; i < rel.size(); ++i) os << (i ? ", " : "") << rel[i].get<std::string>();
        os << ")\n";
    }
    for (const auto& [name, g] : report.at("ideals").items()) {
        os << "ideal " << name << " = ";
        for (size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i].get<std::string>();
        os << "\n";
    }
    if (!report.at("precision").at("working").is_null())
        os << "precision: working " << report["precision"]["working"].get<int>() << ", cap "
           << report["precision"]["cap"].get<int>() << "\n";

    for (const Json& r : report.at("results")) {
        os << "\n== " << r.at("command").get<std::string>() << " ==\n";
        for (const Json& v : r.at("verdicts")) {
            os << "  " << v.at("name").get<std::string>() << ": "
               << (v.at("value").get<bool>() ? "yes" : "no");
            if (v.contains("witness")) os << "  [" << v["witness"].get<std::string>() << "]";
            os << "\n";
        }
        for (const auto& [k, v] : r.at("invariants").items()) os << "  " << k << " = " << v.dump() << "\n";
        for (const auto& [k, v] : r.at("tables").items()) os << "  " << k << ": " << v.dump() << "\n";
        for (const Json& w : r.at("witnesses")) os << "  note: " << w.get<std::string>() << "\n";
        for (const auto& [k, v] : r.at("certified_flags").items())
            os << "  certified/" << k << ": " << v.dump() << "\n";
    }
    return os.str();
}

}  // namespace agr
