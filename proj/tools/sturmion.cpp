// Command-line front end: chain tables, root counts, and the verification suite.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

#include "sturmion/error.hpp"
#include "sturmion/serialize.hpp"
#include "sturmion/sturm_chain.hpp"

using nlohmann::json;
using namespace sturmion;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kDegenerate = 3, kChain = 4, kEndpoint = 5 };

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidArgument: return kParse;
        case ErrorKind::DegenerateGrid: return kDegenerate;
        case ErrorKind::EndpointIsRoot: return kEndpoint;
        default: return kChain;
    }
}

long default_precision() {
    if (const char* env = std::getenv("STURMION_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= kMinPrecisionBits) return v;
        std::cerr << "ignoring STURMION_PRECISION='" << env << "'\n";
    }
    return kDefaultPrecisionBits;
}

void emit(const std::string& command, json inputs, json payload, long precision) {
    json envelope{{"command", command},
                  {"inputs", std::move(inputs)},
                  {"payload", std::move(payload)},
                  {"versions", {{"engine", kEngineVersion}, {"default_precision", precision}}}};
    std::cout << envelope.dump(2) << "\n";
}

std::string cell(const Scalar& x) { return x.to_string(); }

int cmd_chain(const std::string& grid_text, int N, const std::string& tau, const std::string& format, long precision) {
    std::optional<Scalar> tau_value;
    if (!tau.empty()) tau_value = Scalar::parse(tau);
    const GridSpec spec = parse_grid(grid_text, N, precision, tau_value);
    const auto xs = nodes(spec);
    const SturmChain chain = oracle_chain(spec);
    const SpectralData primal = primal_weights(chain, xs);
    const SpectralData dual = dual_weights(chain.top(), chain.next(), xs);
    if (format == "csv") {
        std::cout << "index,node,primal_weight,dual_weight,b,u\n";
        for (int n = 0; n <= N; ++n) {
            const auto i = static_cast<size_t>(n);
            std::cout << n << "," << cell(xs[i]) << "," << cell(primal.weights[i]) << "," << cell(dual.weights[i]) << ","
                      << cell(chain.b[i]) << "," << (n == 0 ? std::string() : cell(chain.u[i - 1])) << "\n";
        }
        return kOk;
    }
    json payload{{"grid", to_json(spec)},
                 {"b", to_json(chain.b)},
                 {"u", to_json(chain.u)},
                 {"nodes", to_json(xs)},
                 {"primal_weights", to_json(primal.weights)},
                 {"dual_weights", to_json(dual.weights)}};
    emit("chain", {{"grid", grid_text}, {"n", N}, {"tau", tau}, {"format", format}, {"precision", precision}},
         std::move(payload), precision);
    return kOk;
}

int cmd_count(const std::string& poly, const std::string& lo, const std::string& hi, long precision) {
    const Polynomial p = parse_polynomial(poly);
    const Scalar a = Scalar::parse(lo);
    const Scalar b = Scalar::parse(hi);
    if (!(a < b)) throw Error(ErrorKind::InvalidArgument, "need lo < hi");
    const int count = count_roots(p, a, b);
    emit("count", {{"poly", poly}, {"lo", lo}, {"hi", hi}}, {{"count", count}, {"interval", "(lo, hi]"}}, precision);
    return kOk;
}

int cmd_verify(int nmax, const std::vector<std::string>& q_text, long precision, unsigned threads) {
    std::vector<Scalar> qs;
    for (const auto& t : q_text) qs.push_back(Scalar::parse(t));
    const auto reports = run_all(nmax, qs, precision, threads);
    int known = 0;
    for (const auto& r : reports) {
        for (const auto& s : r.subchecks) known += s.known_discrepancy && s.status == Status::Mismatch ? 1 : 0;
    }
    const bool ok = all_passed(reports);
    json payload{{"passed", ok}, {"known_discrepancies", known}, {"reports", to_json(reports)}};
    emit("verify", {{"nmax", nmax}, {"q", q_text}, {"precision", precision}}, std::move(payload), precision);
    return ok ? kOk : kVerifyFailed;
}

Scalar random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> num(lo * den, hi * den);
    return Scalar::ratio(num(rng), den);
}

int cmd_roots_check(unsigned long seed, int nmax, int trials, long precision) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> grids{"linear", "quad:tau=1", "quad:tau=2", "exp:q=1/2", "exp:q=2/3"};
    long checks = 0;
    json failures = json::array();
    for (const auto& g : grids) {
        for (int N = 1; N <= nmax; ++N) {
            const GridSpec spec = parse_grid(g, N, precision);
            const auto xs = nodes(spec);
            const SturmSequence seq(characteristic_polynomial(spec));
            const long top = static_cast<long>(xs.back().to_double()) + 2;
            for (int t = 0; t < trials; ++t) {
                Scalar a = random_rational(rng, -2, top, 7);
                Scalar b = random_rational(rng, -2, top, 7);
                if (b < a) std::swap(a, b);
                if (a == b || std::find(xs.begin(), xs.end(), a) != xs.end() ||
                    std::find(xs.begin(), xs.end(), b) != xs.end()) {
                    --t;
                    continue;
                }
                const auto direct = std::count_if(xs.begin(), xs.end(), [&](const Scalar& x) { return a < x && !(b < x); });
                const int sturm = seq.count(a, b);
                ++checks;
                if (sturm != direct) {
                    failures.push_back({{"grid", g}, {"N", N}, {"lo", to_json(a)}, {"hi", to_json(b)},
                                        {"sturm", sturm}, {"direct", direct}});
                }
            }
        }
    }
    emit("roots-check", {{"seed", seed}, {"nmax", nmax}, {"trials", trials}},
         {{"checks", checks}, {"failures", failures}}, precision);
    return failures.empty() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sturm chains, Legendre-type duals and classical-grid verification"};
    app.require_subcommand(1);
    long precision = default_precision();

    std::string grid, tau, format = "json";
    int n = 0;
    auto* chain = app.add_subcommand("chain", "Euclidean chain, nodes and weights on a grid");
    chain->add_option("--grid", grid, "linear | quad:tau=.. | exp:q=.. | trig1 | trig2 | aw:.. | bi:..")->required();
    chain->add_option("--n", n, "grid has N+1 nodes")->required()->check(CLI::NonNegativeNumber);
    chain->add_option("--tau", tau, "quadratic grid parameter when --grid is a bare 'quad'");
    chain->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    chain->add_option("--precision", precision, "BigFloat bits for trigonometric grids")->check(CLI::Range(64L, 1L << 20));

    std::string poly, lo, hi;
    auto* count = app.add_subcommand("count", "number of roots of a polynomial in (lo, hi]");
    count->add_option("--poly", poly)->required();
    count->add_option("--lo", lo)->required();
    count->add_option("--hi", hi)->required();

    int nmax = 1;
    std::vector<std::string> qs;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "run every closed-form check against the Euclidean chain");
    verify->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--q", qs, "exponential grid ratio, repeatable");
    verify->add_option("--precision", precision)->check(CLI::Range(64L, 1L << 20));
    verify->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

    unsigned long seed = 1;
    int trials = 50;
    int roots_nmax = 12;
    auto* roots = app.add_subcommand("roots-check", "random intervals: Sturm count vs direct node count");
    roots->add_option("--seed", seed);
    roots->add_option("--nmax", roots_nmax)->check(CLI::PositiveNumber);
    roots->add_option("--trials", trials)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*chain) return cmd_chain(grid, n, tau, format, precision);
        if (*count) return cmd_count(poly, lo, hi, precision);
        if (*verify) return cmd_verify(nmax, qs, precision, threads);
        if (*roots) return cmd_roots_check(seed, roots_nmax, trials, precision);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e);
    }
    return kParse;
}
