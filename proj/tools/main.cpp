// Command-line front end for the recipalg library.
//
// Subcommands: lattice, poincare, nbc, series, verify, decompose.
// Input is an arrangement file or a builtin family ("braid:3", "boolean:2",
// "generic:5,2"). Output is text by default, a single JSON object with
// --json. Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 input or usage error.

#include "recipalg/recipalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace recipalg;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct InputOpts {
    std::string inputPath;
    std::string builtinSpec;
    std::string order;
    bool jsonOut = false;
};

void addInputOptions(CLI::App* cmd, InputOpts& opts) {
    auto* input = cmd->add_option("-i,--input", opts.inputPath, "arrangement file to read");
    auto* builtin =
        cmd->add_option("-b,--builtin", opts.builtinSpec,
                        "builtin family: braid:L, boolean:L, generic:N,L");
    input->excludes(builtin);
    cmd->add_option("--order", opts.order,
                    "form order as a comma list of 1-based original indices");
    cmd->add_flag("--json", opts.jsonOut, "emit a JSON report instead of text");
}

std::vector<int> parseIndexList(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index '" + tok + "' in list '" + text + "'");
        }
    }
    if (out.empty())
        throw std::invalid_argument("empty index list");
    return out;
}

Arrangement loadArrangement(const InputOpts& opts) {
    std::optional<Arrangement> arr;
    if (!opts.builtinSpec.empty()) {
        arr = builtinArrangement(opts.builtinSpec);
    } else if (!opts.inputPath.empty()) {
        std::ifstream in(opts.inputPath);
        if (!in)
            throw Error("cannot open input file '" + opts.inputPath + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        arr = parseArrangementFile(buffer.str());
    } else {
        throw Error("no input: give --input FILE or --builtin NAME:PARAMS");
    }
    if (!opts.order.empty()) {
        std::vector<int> order = parseIndexList(opts.order);
        for (int& i : order)
            --i; // 1-based on the command line
        arr = arr->permuted(order);
    }
    return *arr;
}

std::string describeInput(const InputOpts& opts) {
    return !opts.builtinSpec.empty() ? opts.builtinSpec : opts.inputPath;
}

std::string supportToString(const std::vector<int>& support) {
    std::string s = "{";
    for (std::size_t i = 0; i < support.size(); ++i)
        s += (i ? "," : "") + std::to_string(support[i] + 1);
    return s + "}";
}

std::string tupleToString(const std::vector<int>& indices) {
    std::string s = "(";
    for (std::size_t i = 0; i < indices.size(); ++i)
        s += (i ? "," : "") + std::to_string(indices[i] + 1);
    return s + ")";
}

json supportToJson(const std::vector<int>& support) {
    json a = json::array();
    for (int i : support)
        a.push_back(i + 1);
    return a;
}

template <typename Coeffs>
std::string coefficientLine(const Coeffs& coeffs) {
    std::string line;
    for (const auto& c : coeffs) {
        if (!line.empty())
            line += " ";
        line += c.str();
    }
    return line;
}

template <typename Coeffs>
json coefficientsToJson(const Coeffs& coeffs) {
    json a = json::array();
    for (const auto& c : coeffs)
        a.push_back(c.str());
    return a;
}

int runLattice(const Arrangement& arr, const InputOpts& opts) {
    const Lattice lat = mobius(intersectionLattice(arr));
    if (opts.jsonOut) {
        json out;
        out["command"] = "lattice";
        out["input"] = describeInput(opts);
        out["dim"] = arr.dim();
        out["formCount"] = arr.size();
        json flats = json::array();
        for (const Flat& f : lat.flats()) {
            json jf;
            jf["id"] = f.id;
            jf["codim"] = f.codim;
            jf["mobius"] = f.mobius.str();
            jf["support"] = supportToJson(f.support);
            flats.push_back(std::move(jf));
        }
        out["flats"] = std::move(flats);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "arrangement " << describeInput(opts) << ": " << arr.size()
                  << " forms in dimension " << arr.dim() << ", " << lat.size() << " flats\n";
        for (const Flat& f : lat.flats())
            std::cout << "flat " << f.id << ": codim " << f.codim << ", mobius " << f.mobius
                      << ", support " << supportToString(f.support) << "\n";
    }
    return kExitOk;
}

int runPoincare(const Arrangement& arr, const InputOpts& opts) {
    const UnivariatePolynomial poin = poincarePolynomial(arr);
    if (opts.jsonOut) {
        json out;
        out["command"] = "poincare";
        out["input"] = describeInput(opts);
        out["coefficients"] = coefficientsToJson(poin.coeffs);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << coefficientLine(poin.coeffs) << "\n";
    }
    return kExitOk;
}

int runNbc(const Arrangement& arr, const InputOpts& opts) {
    const Lattice lat = mobius(intersectionLattice(arr));
    const auto perFlat = nbcSets(arr, lat);
    const NbcCountReport report = checkNbcCount(arr, lat);
    const auto broken = brokenCircuits(arr);

    if (opts.jsonOut) {
        json out;
        out["command"] = "nbc";
        out["input"] = describeInput(opts);
        json jbroken = json::array();
        for (const auto& bc : broken)
            jbroken.push_back(supportToJson(bc));
        out["brokenCircuits"] = std::move(jbroken);
        json flats = json::array();
        for (const NbcCountRow& row : report.rows) {
            json jf;
            jf["id"] = row.flatId;
            jf["codim"] = row.codim;
            jf["mobius"] = lat.flat(row.flatId).mobius.str();
            json sets = json::array();
            for (const NbcSet& s : perFlat[row.flatId])
                sets.push_back(supportToJson(s.indices));
            jf["nbcSets"] = std::move(sets);
            jf["count"] = row.nbcCount;
            jf["expected"] = row.expected.str();
            jf["pass"] = row.pass;
            flats.push_back(std::move(jf));
        }
        out["flats"] = std::move(flats);
        out["allPass"] = report.allPass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "broken circuits:";
        if (broken.empty())
            std::cout << " none";
        for (const auto& bc : broken)
            std::cout << " " << supportToString(bc);
        std::cout << "\n";
        for (const NbcCountRow& row : report.rows) {
            std::cout << "flat " << row.flatId << ": codim " << row.codim << ", count "
                      << row.nbcCount << ", expected " << row.expected << ", "
                      << (row.pass ? "ok" : "MISMATCH") << ", sets:";
            if (perFlat[row.flatId].empty())
                std::cout << " none";
            for (const NbcSet& s : perFlat[row.flatId])
                std::cout << " " << tupleToString(s.indices);
            std::cout << "\n";
        }
        std::cout << "nbc counts " << (report.allPass ? "all match" : "MISMATCH") << "\n";
    }
    return report.allPass ? kExitOk : kExitVerificationFailure;
}

int runSeries(const InputOpts& opts, int degree, const std::string& freeExponents,
              const std::vector<long long>& genericParams) {
    TruncatedSeries series;
    std::string source;
    if (!freeExponents.empty() && !genericParams.empty())
        throw Error("--free and --generic are mutually exclusive");
    if ((!freeExponents.empty() || !genericParams.empty()) &&
        (!opts.inputPath.empty() || !opts.builtinSpec.empty()))
        throw Error("closed-form flags do not take an arrangement input");
    if (!freeExponents.empty()) {
        std::vector<int> exps = parseIndexList(freeExponents);
        series = freePoincareSeries(exps, degree);
        source = "free exponents " + freeExponents;
    } else if (!genericParams.empty()) {
        series = genericSeries(genericParams[0], genericParams[1], degree);
        source = "generic n=" + std::to_string(genericParams[0]) +
                 " dim=" + std::to_string(genericParams[1]);
    } else {
        series = seriesOfC(loadArrangement(opts), degree);
        source = describeInput(opts);
    }

    if (opts.jsonOut) {
        json out;
        out["command"] = "series";
        out["input"] = source;
        out["truncationOrder"] = series.truncationOrder;
        out["coefficients"] = coefficientsToJson(series.coeffs);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << coefficientLine(series.coeffs) << "\n";
    }
    return kExitOk;
}

int runVerify(const Arrangement& arr, const InputOpts& opts, int maxDegree,
              unsigned long long budget) {
    OracleOptions oopts;
    oopts.entryBudget = budget;

    const auto start = std::chrono::steady_clock::now();
    GradedReport structure = verifyModuleStructure(arr, maxDegree, oopts);
    GradedReport decomposition = verifyFlatDecomposition(arr, maxDegree, oopts);
    const Lattice lat = mobius(intersectionLattice(arr));
    const NbcCountReport counts = checkNbcCount(arr, lat);
    const TruncatedSeries series = seriesOfC(arr, maxDegree);

    for (int p = 0; p <= maxDegree; ++p) {
        const bool ok = BigInt(structure.dimCs[p]) == series.coefficient(p);
        structure.record("series-agreement", p, ok,
                         std::to_string(structure.dimCs[p]) + " vs " +
                             series.coefficient(p).str());
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

    const bool allPass = structure.allPass && decomposition.allPass && counts.allPass;

    if (opts.jsonOut) {
        json out;
        out["command"] = "verify";
        out["input"] = describeInput(opts);
        out["maxDegree"] = maxDegree;
        json dims;
        dims["C"] = structure.dimCs;
        dims["AO"] = structure.dimAOs;
        dims["J"] = structure.dimJs;
        dims["derivativeSpan"] = structure.dimDerivativeSpans;
        out["dims"] = std::move(dims);
        out["flatDims"] = decomposition.dimCXs;
        out["seriesCoefficients"] = coefficientsToJson(series.coeffs);
        json checks = json::array();
        auto appendChecks = [&checks](const GradedReport& rep) {
            for (const ClauseCheck& c : rep.checks) {
                json jc;
                jc["clause"] = c.clause;
                jc["degree"] = c.degree;
                jc["pass"] = c.pass;
                if (!c.detail.empty())
                    jc["detail"] = c.detail;
                checks.push_back(std::move(jc));
            }
        };
        appendChecks(structure);
        appendChecks(decomposition);
        for (const NbcCountRow& row : counts.rows) {
            json jc;
            jc["clause"] = "nbc-count";
            jc["flat"] = row.flatId;
            jc["pass"] = row.pass;
            jc["detail"] =
                std::to_string(row.nbcCount) + " nbc sets vs mu " + row.expected.str();
            checks.push_back(std::move(jc));
        }
        out["checks"] = std::move(checks);
        out["allPass"] = allPass;
        out["elapsedSeconds"] = elapsed.count();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verify " << describeInput(opts) << " up to degree " << maxDegree << "\n";
        std::cout << "p | dim C | dim AO | dim J | dim dC | sum_X | series\n";
        for (int p = 0; p <= maxDegree; ++p) {
            std::size_t flatSum = 0;
            for (std::size_t d : decomposition.dimCXs[p])
                flatSum += d;
            std::cout << p << " | " << structure.dimCs[p] << " | " << structure.dimAOs[p] << " | "
                      << structure.dimJs[p] << " | " << structure.dimDerivativeSpans[p] << " | "
                      << flatSum << " | " << series.coefficient(p) << "\n";
        }
        const ClauseCheck* firstFail = nullptr;
        auto scan = [&firstFail](const GradedReport& rep) {
            for (const ClauseCheck& c : rep.checks)
                if (!c.pass && firstFail == nullptr)
                    firstFail = &c;
        };
        scan(structure);
        scan(decomposition);
        auto printCheck = [](const ClauseCheck& c) {
            std::cout << "check " << c.clause << " p=" << c.degree << ": ";
            if (c.pass)
                std::cout << "pass";
            else
                std::cout << "FAIL" << (c.detail.empty() ? "" : " (" + c.detail + ")");
            std::cout << "\n";
        };
        for (const ClauseCheck& c : structure.checks)
            printCheck(c);
        for (const ClauseCheck& c : decomposition.checks)
            printCheck(c);
        for (const NbcCountRow& row : counts.rows)
            std::cout << "check nbc-count flat=" << row.flatId << ": "
                      << (row.pass ? "pass" : "FAIL") << "\n";
        std::cout << "elapsed: " << elapsed.count() << " s\n";
        if (allPass) {
            std::cout << "result: ALL PASS\n";
        } else {
            std::cout << "result: FAIL";
            if (firstFail)
                std::cout << " (first failing: " << firstFail->clause << " at degree "
                          << firstFail->degree << ")";
            std::cout << "\n";
        }
    }
    return allPass ? kExitOk : kExitVerificationFailure;
}

std::string operatorToString(const std::vector<int>& exponents) {
    std::string s;
    for (std::size_t d = 0; d < exponents.size(); ++d) {
        if (exponents[d] == 0)
            continue;
        if (!s.empty())
            s += " ";
        s += "D" + std::to_string(d + 1);
        if (exponents[d] > 1)
            s += "^" + std::to_string(exponents[d]);
    }
    return s.empty() ? "1" : s;
}

int runDecompose(const Arrangement& arr, const InputOpts& opts, const std::string& tupleSpec,
                 unsigned long long budget) {
    OracleOptions oopts;
    oopts.entryBudget = budget;
    std::vector<int> indices = parseIndexList(tupleSpec);
    for (int& i : indices)
        --i;
    const ReciprocalTuple target(indices);

    const Lattice lat = mobius(intersectionLattice(arr));
    const auto nbcPerFlat = nbcSets(arr, lat);
    const JkDecomposition dec = jkDecompose(arr, lat, nbcPerFlat, target, oopts);
    const bool exact = jkReconstructionExact(arr, dec);

    if (opts.jsonOut) {
        json out;
        out["command"] = "decompose";
        out["input"] = describeInput(opts);
        out["target"] = supportToJson(dec.target.indices);
        json basis = json::array();
        for (const JkBasisElement& b : dec.basis) {
            json jb;
            jb["index"] = b.index;
            jb["flat"] = b.flatId;
            jb["tuple"] = supportToJson(b.tuple);
            basis.push_back(std::move(jb));
        }
        out["basis"] = std::move(basis);
        json terms = json::array();
        for (const JkTerm& t : dec.terms) {
            json jt;
            jt["basisIndex"] = t.basisIndex;
            jt["operatorExponents"] = t.operatorExponents;
            jt["coefficient"] = toString(t.coefficient);
            terms.push_back(std::move(jt));
        }
        out["terms"] = std::move(terms);
        out["residueApplicable"] = dec.residueApplicable;
        if (dec.residueApplicable) {
            json res = json::array();
            for (const Rational& r : dec.residue)
                res.push_back(toString(r));
            out["residue"] = std::move(res);
            out["topFlat"] = dec.topFlatId;
        }
        out["reconstructionExact"] = exact;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "target: " << tupleToString(dec.target.indices) << "\n";
        for (const JkTerm& t : dec.terms) {
            const JkBasisElement& b = dec.basis[t.basisIndex];
            std::cout << "term: basis " << b.index << ", flat " << b.flatId << ", tuple "
                      << tupleToString(b.tuple) << ", operator " << operatorToString(t.operatorExponents)
                      << ", coefficient " << toString(t.coefficient) << "\n";
        }
        if (dec.residueApplicable) {
            std::cout << "residue:";
            for (const Rational& r : dec.residue)
                std::cout << " " << toString(r);
            std::cout << "\n";
        } else {
            std::cout << "residue: not applicable (forms do not span the dual space)\n";
        }
        std::cout << "reconstruction: " << (exact ? "exact" : "MISMATCH") << "\n";
    }
    return exact ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of hyperplane arrangements and their reciprocal algebras"};
    app.require_subcommand(1);

    int exitCode = kExitOk;

    InputOpts latticeOpts;
    auto* latticeCmd = app.add_subcommand("lattice", "intersection lattice with Mobius values");
    addInputOptions(latticeCmd, latticeOpts);
    latticeCmd->callback([&]() { exitCode = runLattice(loadArrangement(latticeOpts), latticeOpts); });

    InputOpts poincareOpts;
    auto* poincareCmd = app.add_subcommand("poincare", "Poincare polynomial coefficients");
    addInputOptions(poincareCmd, poincareOpts);
    poincareCmd->callback(
        [&]() { exitCode = runPoincare(loadArrangement(poincareOpts), poincareOpts); });

    InputOpts nbcOpts;
    auto* nbcCmd = app.add_subcommand("nbc", "nbc sets per flat and the Mobius count check");
    addInputOptions(nbcCmd, nbcOpts);
    nbcCmd->callback([&]() { exitCode = runNbc(loadArrangement(nbcOpts), nbcOpts); });

    InputOpts seriesOpts;
    int seriesDegree = 10;
    std::string freeExponents;
    std::vector<long long> genericParams;
    auto* seriesCmd = app.add_subcommand("series", "Poincare series of the reciprocal algebra");
    addInputOptions(seriesCmd, seriesOpts);
    seriesCmd->add_option("--degree", seriesDegree, "truncation degree (default 10)");
    seriesCmd->add_option("--free", freeExponents,
                          "closed form for exponents d1,...,dl instead of an arrangement");
    seriesCmd->add_option("--generic", genericParams,
                          "closed form for a generic arrangement: N L")
        ->expected(2);
    seriesCmd->callback(
        [&]() { exitCode = runSeries(seriesOpts, seriesDegree, freeExponents, genericParams); });

    InputOpts verifyOpts;
    int maxDegree = 3;
    unsigned long long budget = OracleOptions{}.entryBudget;
    auto* verifyCmd =
        app.add_subcommand("verify", "brute-force verification of the structure theorems");
    addInputOptions(verifyCmd, verifyOpts);
    verifyCmd->add_option("--max-degree", maxDegree, "largest degree to verify (default 3)");
    verifyCmd->add_option("--budget", budget, "matrix entry budget for the oracle");
    verifyCmd->callback(
        [&]() { exitCode = runVerify(loadArrangement(verifyOpts), verifyOpts, maxDegree, budget); });

    InputOpts decomposeOpts;
    std::string tupleSpec;
    unsigned long long decomposeBudget = OracleOptions{}.entryBudget;
    auto* decomposeCmd =
        app.add_subcommand("decompose", "decompose a reciprocal over the nbc basis");
    addInputOptions(decomposeCmd, decomposeOpts);
    decomposeCmd->add_option("--tuple", tupleSpec, "target as 1-based form indices i1,i2,...")
        ->required();
    decomposeCmd->add_option("--budget", decomposeBudget, "matrix entry budget");
    decomposeCmd->callback([&]() {
        exitCode = runDecompose(loadArrangement(decomposeOpts), decomposeOpts, tupleSpec,
                                decomposeBudget);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return exitCode;
}
