#include <jvoa/io.hpp>
#include <jvoa/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace jvoa;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kPole = 3;

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

std::map<VarTag, Rational> parse_points(const std::string& spec)
{
    std::map<VarTag, Rational> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad point assignment: " + item);
        std::string name = item.substr(0, eq);
        if (name.size() < 2 || (name[0] != 'z' && name[0] != 'w'))
            throw std::invalid_argument("bad variable name: " + name);
        VarTag v{std::stoi(name.substr(1)), name[0]};
        out[v] = parse_rational(item.substr(eq + 1));
    }
    return out;
}

std::vector<VarTag> default_domain(int n, bool two_variable)
{
    std::vector<VarTag> dom;
    for (int i = 1; i <= n; ++i) {
        dom.push_back({i, 'z'});
        if (two_variable)
            dom.push_back({i, 'w'});
    }
    return dom;
}

int run_correlator(const PairSequence& T, bool prop2, const std::string& points,
                   const std::string& r_value, bool expand, int bound,
                   const std::string& format)
{
    auto terms = prop2 ? prop2_terms(T) : theorem1_terms(T);

    if (!points.empty()) {
        CentralPoly value = evaluate_terms(terms, parse_points(points));
        if (!r_value.empty()) {
            Rational v = value.eval(parse_rational(r_value));
            if (format == "json")
                std::cout << json{{"value", rational_to_json(v)}}.dump(2) << "\n";
            else
                std::cout << "value: " << to_string(v) << "\n";
        } else {
            if (format == "json")
                std::cout << json{{"value", poly_to_json(value)}}.dump(2) << "\n";
            else
                std::cout << "value: " << value.str() << "\n";
        }
        return kOk;
    }

    if (expand) {
        auto series = iota_expand(terms, default_domain(T.n(), prop2), bound);
        if (format == "json") {
            std::cout << series_to_json(series).dump(2) << "\n";
        } else {
            std::cout << "domain:";
            for (const auto& v : series.domain)
                std::cout << " " << v.name();
            std::cout << "  bound: " << series.bound << "\n";
            for (const auto& [exps, c] : series.coeffs) {
                if (c.is_zero())
                    continue;
                std::cout << "[";
                for (std::size_t i = 0; i < exps.size(); ++i)
                    std::cout << (i ? "," : "") << exps[i];
                std::cout << "] " << c.str() << "\n";
            }
        }
        return kOk;
    }

    if (format == "json") {
        std::cout << terms_to_json(terms).dump(2) << "\n";
    } else {
        std::cout << (prop2 ? "diagram sum" : "derangement sum") << ", n = " << T.n()
                  << ", " << terms.size() << " terms\n";
        for (const auto& t : terms)
            std::cout << term_to_text(t) << "\n";
    }
    return kOk;
}

int run_diagrams(const PairSequence& T, const std::string& format)
{
    auto diagrams = enumerate_diagrams(T.n());
    if (format == "json") {
        json out = json::array();
        for (const auto& D : diagrams) {
            json entry = {{"edges", diagram_to_json(D)}};
            if (T.n() >= 2)
                entry["contraction"] = derangement_to_json(diagram_to_derangement(D));
            out.push_back(entry);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << diagrams.size() << " diagrams on " << T.n() << " pairs\n";
        for (const auto& D : diagrams) {
            for (const auto& [u, v] : D.edges)
                std::cout << "{" << u.name() << "," << v.name() << "} ";
            if (T.n() >= 2)
                std::cout << "-> " << diagram_to_derangement(D).cycle_notation();
            std::cout << "\n";
        }
    }
    return kOk;
}

int run_verify(const PairSequence& T, std::uint64_t seed, int bound, bool corrupt,
               const std::string& format)
{
    const int n = T.n();
    std::vector<std::pair<std::string, VerifyReport>> checks;
    checks.push_back({"two-variable oracle", verify_prop2_oracle(T, bound, corrupt)});
    checks.push_back({"one-variable oracle", verify_theorem1_oracle(T, bound, corrupt)});
    checks.push_back({"contraction fibres", verify_fibres(n)});
    checks.push_back({"sign partition", verify_sign_partition(n)});

    // seeded diagonal comparison of the two closed forms
    VerifyReport diag;
    if (n >= 1) {
        RandomSource rnd(seed);
        auto th = theorem1_terms(T);
        auto p2 = prop2_terms(T);
        for (int trial = 0; trial < 10; ++trial) {
            auto vals = rnd.distinct_rationals(n);
            std::map<VarTag, Rational> assign;
            for (int i = 0; i < n; ++i) {
                assign[{i + 1, 'z'}] = vals[i];
                assign[{i + 1, 'w'}] = vals[i];
            }
            ++diag.cases;
            if (diag.ok && !(evaluate_terms(p2, assign) == evaluate_terms(th, assign))) {
                diag.ok = false;
                diag.first_mismatch = "diagonal values disagree on trial " +
                                      std::to_string(trial);
            }
        }
    }
    checks.push_back({"diagonal consistency", diag});

    bool all_ok = true;
    if (format == "json") {
        json out;
        out["seed"] = seed;
        out["bound"] = bound;
        json results = json::array();
        for (const auto& [name, rep] : checks) {
            all_ok = all_ok && rep.ok;
            results.push_back({{"check", name},
                               {"cases", rep.cases},
                               {"status", rep.ok ? "PASS" : "FAIL"},
                               {"mismatch", rep.first_mismatch}});
        }
        out["results"] = results;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verify: n = " << n << ", seed = " << seed << ", bound = " << bound
                  << "\n";
        for (const auto& [name, rep] : checks) {
            all_ok = all_ok && rep.ok;
            if (rep.ok)
                std::cout << "PASS " << name << " (" << rep.cases << " cases)\n";
            else
                std::cout << "FAIL " << name << ": " << rep.first_mismatch << "\n";
        }
    }
    return all_ok ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact correlation functions of quadratic generating fields"};

    std::string command;
    std::string input;
    std::string r_value;
    std::string points;
    std::string format = "text";
    int bound = 6;
    std::uint64_t seed = 1;
    bool prop2 = false;
    bool expand = false;
    bool corrupt = false;

    app.add_option("--command", command, "correlator | diagrams | verify | virasoro")
        ->required();
    app.add_option("--input", input, "input dataset (json)")->required();
    app.add_option("--r", r_value, "specialize the central parameter");
    app.add_option("--points", points, "evaluation point, e.g. z1=1,z2=0");
    app.add_option("--bound", bound, "series truncation bound");
    app.add_option("--seed", seed, "seed for the randomized checks");
    app.add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--prop2", prop2, "use the two-variable diagram sum");
    app.add_flag("--expand", expand, "print the truncated series instead of terms");
    app.add_flag("--corrupt-gamma", corrupt, "deliberately corrupt one coefficient");

    CLI11_PARSE(app, argc, argv);

    try {
        json j = load_json(input);
        if (command == "virasoro" && !j.contains("n"))
            throw std::invalid_argument("virasoro input must provide {\"n\": N}");
        PairSequence T = command == "virasoro"
                             ? virasoro_sequence(j.at("n").get<int>())
                             : pair_sequence_from_json(j);

        if (command == "correlator" || command == "virasoro")
            return run_correlator(T, prop2, points, r_value, expand, bound, format);
        if (command == "diagrams")
            return run_diagrams(T, format);
        if (command == "verify")
            return run_verify(T, seed, bound, corrupt, format);
        std::cerr << "unknown command: " << command << "\n";
        return kInputError;
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPole;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
