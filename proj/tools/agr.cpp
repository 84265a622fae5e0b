#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agr/corpus.hpp"
#include "agr/dsl.hpp"
#include "agr/scalar.hpp"

namespace {

std::string read_source(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw agr::ParseError("cannot open script '" + path + "'", 0, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_corpus_mode(const std::string& filter, bool json, bool self_test) {
    if (self_test) {
        agr::corpus_self_test();
        std::cout << (json ? "{\"self_test\":\"ok\"}" : "corpus self test: ok") << "\n";
        return 0;
    }
    std::vector<agr::CorpusOutcome> out = agr::run_corpus(filter, /*throw_on_mismatch=*/false);
    bool all_ok = true;
    if (json) {
        agr::Json j = agr::Json::array();
        for (const auto& o : out) {
            j.push_back({{"name", o.name}, {"ok", o.ok}, {"diffs", o.diffs}});
            all_ok = all_ok && o.ok;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& o : out) {
            std::cout << (o.ok ? "ok    " : "FAIL  ") << o.name << "\n";
            for (const std::string& d : o.diffs) std::cout << "      " << d << "\n";
            all_ok = all_ok && o.ok;
        }
        std::cout << (all_ok ? "all corpus cases passed" : "corpus mismatches found") << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded-ring analyzer for one-dimensional semigroup power-series rings "
                 "and Artinian monomial quotients"};
    std::string script_path;
    std::string field = "q";
    std::string format = "text";
    std::vector<std::string> corpus_args;
    bool self_test = false;
    long seed = 0;
    agr::RunOptions opt;

    app.add_option("script", script_path, "analysis script (default: stdin)");
    app.add_option("--field", field, "coefficient field: q or gf:<p>")->capture_default_str();
    app.add_option("--precision", opt.precision, "initial series truncation horizon");
    app.add_option("--degree-bound", opt.degree_bound, "presentation degree bound")
        ->capture_default_str();
    app.add_option("--window", opt.window, "Hilbert/filtration window (default r+4)");
    app.add_option("--seed", seed, "seed echoed into the report");
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    auto* corpus_opt = app.add_option("--corpus", corpus_args,
                                      "run the built-in example corpus (optional name filter)")
                           ->expected(0, 1);
    app.add_flag("--self-test", self_test, "perturb corpus expectations and verify detection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*corpus_opt || self_test)
            return run_corpus_mode(corpus_args.empty() ? "" : corpus_args[0], format == "json",
                                   self_test);

        agr::AnalysisScript sc = agr::parse_script(read_source(script_path));
        agr::Json report;
        if (!sc.semigroup_ring) {
            report = agr::run_script_monomial(sc, opt);
            if (field != "q")
                report["notes"] = agr::Json::array(
                    {"monomial quotient calculus is field independent; --field ignored"});
        } else if (field == "q") {
            report = agr::run_script_semigroup(sc, agr::Rational(1), opt);
        } else if (field.rfind("gf:", 0) == 0) {
            long p = std::stol(field.substr(3));
            if (p < 2) throw agr::ParseError("gf modulus must be a prime >= 2", 0, 0);
            report = agr::run_script_semigroup(sc, agr::PrimeField(static_cast<uint32_t>(p), 1),
                                               opt);
        } else {
            std::cerr << "unknown field '" << field << "' (use q or gf:<p>)\n";
            return 2;
        }
        report["seed"] = seed;
        if (format == "json") std::cout << report.dump(2) << "\n";
        else std::cout << agr::render_text(report);
        return 0;
    } catch (const agr::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const agr::UnknownName& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const agr::PrecisionExhausted& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
