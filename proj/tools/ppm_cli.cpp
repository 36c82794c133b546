// ppm: command-line front end for power-product matrices.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or configuration
// error (including a size-cap breach).

#include "ppm/basis.hpp"
#include "ppm/determinant.hpp"
#include "ppm/identities.hpp"
#include "ppm/matrix_io.hpp"
#include "ppm/power_matrices.hpp"
#include "ppm/structure.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace ppm;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Global {
    std::string format = "json";
    std::size_t size_cap = 5000;
    std::string output;
};

// Output of one command: the text to emit and whether every check passed.
struct Result {
    std::string text;
    bool passed = true;
};

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

void enforce_cap(const Global& g, unsigned n, unsigned d)
{
    Integer s = count_weak_compositions(n, d);
    if (s > g.size_cap)
        throw UsageError("s(" + std::to_string(n) + "," + std::to_string(d) + ") = " + to_string(s) +
                         " exceeds the size cap " + std::to_string(g.size_cap));
}

void require_positive(unsigned n, unsigned d)
{
    if (n == 0 || d == 0)
        throw UsageError("--n and --d must be at least 1");
}

std::pair<unsigned, unsigned> parse_range(const std::string& text)
{
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            unsigned v = static_cast<unsigned>(std::stoul(text));
            return {v, v};
        }
        return {static_cast<unsigned>(std::stoul(text.substr(0, colon))),
                static_cast<unsigned>(std::stoul(text.substr(colon + 1)))};
    } catch (const std::exception&) {
        throw UsageError("malformed range '" + text + "', expected N or LO:HI");
    }
}

Json factors_json(const FactoredInteger& f)
{
    Json list = Json::array();
    for (const auto& [p, e] : f.factors)
        list.push_back({{"prime", to_string(p)}, {"exponent", std::to_string(e)}});
    Json j;
    j["text"] = f.to_string();
    j["sign"] = f.sign;
    j["factors"] = std::move(list);
    j["complete"] = f.complete;
    if (!f.complete)
        j["cofactor"] = to_string(f.cofactor);
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

// gen

struct GenOptions {
    unsigned n = 0, d = 0;
    std::string order = "canonical-block";
    std::string what = "v";
};

Result cmd_gen(const GenOptions& o, const Global& g)
{
    require_positive(o.n, o.d);
    ExponentSet set = enumerate_B(o.n, o.d);
    if (parse_order(o.order) == Order::canonical_block)
        set = canonical_block_order(set);

    if (o.what == "b") {
        if (g.format == "csv") {
            std::string out;
            for (const auto& e : set.members) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    out += (i ? "," : "") + std::to_string(e[i]);
                out += "\n";
            }
            return {out};
        }
        return {dump(to_json(set))};
    }

    enforce_cap(g, o.n, o.d);
    IntMatrix m = o.what == "vhat" ? build_Vhat(set) : build_V(set);
    if (g.format == "csv")
        return {to_csv(m)};
    Json j;
    j["what"] = o.what == "vhat" ? "Vhat" : "V";
    Json body = to_json(m);
    for (auto& [key, value] : body.items())
        j[key] = value;
    return {dump(j)};
}

// det

struct DetOptions {
    unsigned n = 0, d = 0;
    std::string method = "blocks";
    bool check_closed_form = false;
};

Result cmd_det(const DetOptions& o, const Global& g)
{
    require_positive(o.n, o.d);
    if (o.check_closed_form && o.n != 2)
        throw UsageError("--check-closed-form applies to n = 2 only");
    if (o.method != "blocks")
        enforce_cap(g, o.n, o.d);

    bool passed = true;
    Json j;
    j["n"] = o.n;
    j["d"] = o.d;
    j["method"] = o.method;

    Integer value;
    FactoredInteger factored;
    Json blocks = Json::array();
    if (o.method != "bareiss") {
        DetV dv = det_V_blocks(o.n, o.d);
        value = dv.value;
        factored = dv.factored;
        for (const auto& b : dv.blocks)
            blocks.push_back({{"k", b.k},
                              {"multiplicity", to_string(binomial(o.n, b.k))},
                              {"det", to_string(b.det)},
                              {"factorization", b.factored.to_string()}});
    }
    if (o.method != "blocks") {
        Integer full = det_V_full(o.n, o.d);
        if (o.method == "both") {
            bool agree = full == value;
            j["bareiss"] = to_string(full);
            j["agree"] = agree;
            passed = passed && agree;
        } else {
            value = full;
            factored = factorize(full);
        }
    }
    j["value"] = to_string(value);
    j["sign"] = sgn(value);
    j["factorization"] = factors_json(factored);
    if (!blocks.empty())
        j["blocks"] = std::move(blocks);

    std::string closed_text;
    if (o.check_closed_form) {
        Integer closed = det_V2_closed(o.d);
        bool matches = closed == value;
        j["closed_form"] = {{"value", to_string(closed)}, {"matches", matches}};
        closed_text = matches ? "match" : "mismatch";
        passed = passed && matches;
    }

    if (g.format == "csv") {
        std::string out = "n,d,method,value,factorization,agree,closed_form\n";
        out += std::to_string(o.n) + "," + std::to_string(o.d) + "," + o.method + "," + to_string(value) + "," +
               csv_field(factored.to_string()) + "," +
               (o.method == "both" ? (j["agree"].get<bool>() ? "true" : "false") : "") + "," + closed_text + "\n";
        return {out, passed};
    }
    return {dump(j), passed};
}

// sparsity

struct SparsityOptions {
    std::string n, d;
    bool count = false;
    bool inverse = false;
};

Result cmd_sparsity(const SparsityOptions& o, const Global& g)
{
    auto nr = parse_range(o.n);
    auto dr = parse_range(o.d);
    if (nr.first == 0 || dr.first == 0 || nr.first > nr.second || dr.first > dr.second)
        throw UsageError("ranges must satisfy 1 <= LO <= HI");
    if (o.count || o.inverse)
        enforce_cap(g, nr.second, dr.second);

    auto rows = sparsity_table(nr, dr);
    bool passed = true;
    Json list = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        row["d"] = r.d;
        row["nnz"] = to_string(r.nnz);
        row["s"] = to_string(r.side);
        row["sparsity"] = to_decimal(r.sparsity, 6);
        row["fraction"] = to_string(r.sparsity);
        if (o.count) {
            std::size_t counted = nnz_count(build_V(r.n, r.d));
            bool ok = Integer(counted) == r.nnz;
            row["counted_nnz"] = std::to_string(counted);
            row["count_matches"] = ok;
            passed = passed && ok;
        }
        if (o.inverse) {
            auto rep = inverse_pattern_check(r.n, r.d, g.size_cap);
            row["inverse_nnz"] = std::to_string(rep.nnz_inverse);
            row["inverse_pattern_holds"] = rep.holds;
            if (rep.counterexample)
                row["inverse_counterexample"] = {rep.counterexample->first, rep.counterexample->second};
            passed = passed && rep.holds;
        }
        list.push_back(std::move(row));
    }
    if (g.format == "csv") {
        if (!o.count && !o.inverse)
            return {sparsity_csv(rows), passed};
        std::ostringstream out;
        out << "n,d,nnz,s,sparsity,fraction";
        if (o.count)
            out << ",counted_nnz";
        if (o.inverse)
            out << ",inverse_nnz,inverse_pattern_holds";
        out << "\n";
        for (const auto& row : list) {
            out << row["n"].get<unsigned>() << "," << row["d"].get<unsigned>() << ","
                << row["nnz"].get<std::string>() << "," << row["s"].get<std::string>() << ","
                << row["sparsity"].get<std::string>() << "," << row["fraction"].get<std::string>();
            if (o.count)
                out << "," << row["counted_nnz"].get<std::string>();
            if (o.inverse)
                out << "," << row["inverse_nnz"].get<std::string>() << ","
                    << (row["inverse_pattern_holds"].get<bool>() ? "true" : "false");
            out << "\n";
        }
        return {out.str(), passed};
    }
    Json j;
    j["rows"] = std::move(list);
    if (o.count || o.inverse)
        j["passed"] = passed;
    return {dump(j), passed};
}

// basis

struct BasisOptions {
    std::string input;
    std::string to = "linear-power";
    unsigned product_monomial = 0;
    bool check = false;
};

Json read_json_input(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
}

Result cmd_basis(const BasisOptions& o, const Global& g)
{
    if (o.input.empty() == (o.product_monomial == 0))
        throw UsageError("give exactly one of --input or --product-monomial");

    PolyCoeffs p;
    if (o.product_monomial) {
        p = product_monomial_coeffs(o.product_monomial);
    } else {
        p = poly_from_json(read_json_input(o.input));
    }
    BasisKind target = parse_basis(o.to);

    enforce_cap(g, p.n, p.d);
    BasisConverter conv(p.n, p.d);
    PolyCoeffs out = p;
    if (p.basis != target)
        out = target == BasisKind::linear_power ? conv.to_linear_power(p) : conv.from_linear_power(p);

    bool passed = true;
    if (o.check) {
        PolyCoeffs back = out;
        if (out.basis != p.basis)
            back = p.basis == BasisKind::linear_power ? conv.to_linear_power(out) : conv.from_linear_power(out);
        passed = back == p;
        // Re-expand the linear-power side term by term.
        const PolyCoeffs& lp = out.basis == BasisKind::linear_power ? out : p;
        const PolyCoeffs mono = out.basis == BasisKind::monomial ? out : conv.from_linear_power(lp);
        std::vector<Rational> sum(conv.order().size());
        for (std::size_t j = 0; j < lp.coeffs.size(); ++j) {
            if (lp.coeffs[j] == 0)
                continue;
            auto e = monomial_expansion_of_power(conv.order()[j]);
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += lp.coeffs[j] * e.coeffs[i];
        }
        passed = passed && sum == mono.coeffs;
    }

    if (g.format == "csv") {
        std::ostringstream csv;
        for (unsigned i = 1; i <= out.n; ++i)
            csv << "x" << i << ",";
        csv << "coeff\n";
        for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
            if (out.coeffs[i] == 0)
                continue;
            for (std::size_t k = 0; k < out.n; ++k)
                csv << conv.order()[i][k] << ",";
            csv << to_string(out.coeffs[i]) << "\n";
        }
        return {csv.str(), passed};
    }
    Json j = to_json(out);
    if (o.check)
        j["check"] = passed;
    return {dump(j), passed};
}

// verify

struct VerifyOptions {
    std::string suite = "all";
    unsigned n_max = 0;
    unsigned m_max = 8;
};

Result cmd_verify(const VerifyOptions& o, const Global& g)
{
    auto pick = [&](unsigned fallback) { return o.n_max ? o.n_max : fallback; };
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return o.suite == "all" || o.suite == name; };
    if (want("gf"))
        results.push_back(run_gf_suite(o.m_max, pick(12)));
    if (want("rearrangement"))
        results.push_back(run_rearrangement_suite(pick(7)));
    if (want("delta"))
        results.push_back(run_delta_suite(pick(7)));
    if (want("couples"))
        results.push_back(run_couples_suite(pick(6)));
    if (want("involution"))
        results.push_back(run_involution_suite(pick(5)));

    bool passed = true;
    for (const auto& r : results)
        passed = passed && r.passed();

    if (g.format == "csv") {
        std::string out = "suite,range,cases,failures,passed,first_counterexample\n";
        for (const auto& r : results)
            out += r.name + "," + csv_field(r.range) + "," + std::to_string(r.cases) + "," +
                   std::to_string(r.failures) + "," + (r.passed() ? "true" : "false") + "," +
                   csv_field(r.first_counterexample.value_or("")) + "\n";
        return {out, passed};
    }
    Json list = Json::array();
    for (const auto& r : results) {
        Json s;
        s["suite"] = r.name;
        s["range"] = r.range;
        s["cases"] = r.cases;
        s["failures"] = r.failures;
        s["passed"] = r.passed();
        if (r.first_counterexample)
            s["first_counterexample"] = *r.first_counterexample;
        list.push_back(std::move(s));
    }
    Json j;
    j["suites"] = std::move(list);
    j["passed"] = passed;
    return {dump(j), passed};
}

// conjecture

struct ConjectureOptions {
    unsigned d = 0;
    unsigned n_max = 0;
};

Json polynomials_json(const std::vector<ExponentPolynomial>& polys)
{
    Json list = Json::array();
    for (const auto& ep : polys) {
        Json coeffs = Json::array();
        for (const auto& c : ep.poly.coefficients())
            coeffs.push_back(to_string(c));
        list.push_back({{"prime", to_string(ep.prime)}, {"polynomial", ep.poly.to_string()}, {"coefficients", coeffs}});
    }
    return list;
}

Result cmd_conjecture(const ConjectureOptions& o, const Global& g)
{
    unsigned n_max = o.n_max ? o.n_max : o.d + 2;
    if (o.d < 2 || n_max < o.d + 2)
        throw UsageError("conjecture needs --d >= 2 and --n-max >= d + 2");
    auto report = conjecture_explore(o.d, n_max);

    if (g.format == "csv") {
        std::string out = "prime,polynomial\n";
        for (const auto& ep : report.valuation_polynomials)
            out += to_string(ep.prime) + "," + csv_field(ep.poly.to_string()) + "\n";
        return {out, report.verified()};
    }
    Json per_n = Json::array();
    for (const auto& c : report.per_n) {
        Json outside = Json::array();
        for (const auto& p : c.outside)
            outside.push_back(to_string(p));
        per_n.push_back({{"n", c.n},
                         {"det", to_string(c.det.value())},
                         {"factorization", factors_json(c.det)},
                         {"within_small_primes", c.within_small_primes},
                         {"outside", outside}});
    }
    Json j;
    j["d"] = report.d;
    j["n_max"] = report.n_max;
    j["per_n"] = std::move(per_n);
    j["polynomials"] = polynomials_json(report.valuation_polynomials);
    j["interpolated"] = polynomials_json(report.interpolated_polynomials);
    j["routes_agree"] = report.routes_agree;
    j["cross_check_passed"] = report.cross_check_passed;
    j["counterexample_found"] = report.counterexample_found;
    j["factorizations_complete"] = report.factorizations_complete;
    j["verified"] = report.verified();
    return {dump(j), report.verified()};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact power-product matrices: generation, determinants, sparsity, basis conversion, "
                 "identity checks"};
    app.name("ppm");
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--size-cap", g.size_cap, "Largest s(n,d) for which an s x s matrix may be built")
        ->envname("PPM_SIZE_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", g.output, "Write to this file instead of stdout");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit B(n,d), V(n,d) or V̂(n,d)");
    gen_cmd->add_option("--n", gen.n, "Number of variables")->required();
    gen_cmd->add_option("--d", gen.d, "Degree")->required();
    gen_cmd->add_option("--order", gen.order, "Exponent order")
        ->check(CLI::IsMember({"lex", "canonical-block"}));
    gen_cmd->add_option("--what", gen.what, "b, v or vhat")->check(CLI::IsMember({"b", "v", "vhat"}));

    DetOptions det;
    auto* det_cmd = app.add_subcommand("det", "Exact determinant of V(n,d)");
    det_cmd->add_option("--n", det.n)->required();
    det_cmd->add_option("--d", det.d)->required();
    det_cmd->add_option("--method", det.method, "blocks, bareiss or both")
        ->check(CLI::IsMember({"blocks", "bareiss", "both"}));
    det_cmd->add_flag("--check-closed-form", det.check_closed_form, "Compare with the n = 2 closed form");

    SparsityOptions spa;
    auto* spa_cmd = app.add_subcommand("sparsity", "nnz and sparsity of V(n,d) over a grid");
    spa_cmd->add_option("--n", spa.n, "N or LO:HI")->required();
    spa_cmd->add_option("--d", spa.d, "D or LO:HI")->required();
    spa_cmd->add_flag("--count", spa.count, "Also count nonzeros of the built matrix");
    spa_cmd->add_flag("--inverse", spa.inverse, "Also check supp(V^-1) within supp(V)");

    BasisOptions basis;
    auto* basis_cmd = app.add_subcommand("basis", "Convert between the monomial and linear-power bases");
    basis_cmd->add_option("--input", basis.input, "Polynomial JSON file, or - for stdin");
    basis_cmd->add_option("--to", basis.to, "Target basis")->check(CLI::IsMember({"monomial", "linear-power"}));
    basis_cmd->add_option("--product-monomial", basis.product_monomial,
                          "Use x1...xN in the linear-power basis as input");
    basis_cmd->add_flag("--check", basis.check, "Verify the round trip and the term-wise expansion");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the combinatorial identity suites");
    verify_cmd->add_option("--suite", verify.suite)
        ->check(CLI::IsMember({"all", "gf", "rearrangement", "delta", "couples", "involution"}));
    verify_cmd->add_option("--n-max", verify.n_max, "Upper bound on n (suite default when omitted)");
    verify_cmd->add_option("--m-max", verify.m_max, "Upper bound on m for the gf suite");

    ConjectureOptions conj;
    auto* conj_cmd = app.add_subcommand("conjecture", "Exponent polynomials of det V(n,d)");
    conj_cmd->add_option("--d", conj.d)->required();
    conj_cmd->add_option("--n-max", conj.n_max, "Defaults to d + 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    Result result;
    try {
        if (*gen_cmd)
            result = cmd_gen(gen, g);
        else if (*det_cmd)
            result = cmd_det(det, g);
        else if (*spa_cmd)
            result = cmd_sparsity(spa, g);
        else if (*basis_cmd)
            result = cmd_basis(basis, g);
        else if (*verify_cmd)
            result = cmd_verify(verify, g);
        else
            result = cmd_conjecture(conj, g);
    } catch (const NonsingularityViolation& e) {
        std::cerr << "ppm: " << e.what() << "\n";
        return exit_failed;
    } catch (const StructureError& e) {
        std::cerr << "ppm: " << e.what() << "\n";
        return exit_failed;
    } catch (const UsageError& e) {
        std::cerr << "ppm: " << e.what() << "\n";
        return exit_usage;
    } catch (const SizeLimitError& e) {
        std::cerr << "ppm: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ppm: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "ppm: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "ppm: internal error: " << e.what() << "\n";
        return exit_usage;
    }

    if (g.output.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(g.output, std::ios::binary);
        if (!out) {
            std::cerr << "ppm: cannot write '" << g.output << "'\n";
            return exit_usage;
        }
        out << result.text;
    }
    return result.passed ? exit_ok : exit_failed;
}
