// SPDX-License-Identifier: Apache-2.0
//
// ellcomb CLI: compute the polynomial families, run the identity sweeps, or
// drive the brute-force curve oracle.  Exit codes: 0 success, 1 verification
// or oracle mismatch, 2 argument errors.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/curve_oracle.hpp"
#include "ellcomb/cyclotomic.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/matrix_cheb.hpp"
#include "ellcomb/point_counts.hpp"
#include "ellcomb/poly_json.hpp"
#include "ellcomb/qt_combinatorics.hpp"
#include "ellcomb/verify.hpp"

namespace {

using namespace ellcomb;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct PolyRequest {
    std::string family;
    std::vector<long> indices;
    std::string format = "text";
    std::string var = "v";
};

unsigned expect_index(const PolyRequest& req, std::size_t pos, long min_value) {
    if (pos >= req.indices.size())
        throw std::invalid_argument("family '" + req.family + "' needs more index arguments");
    const long v = req.indices[pos];
    if (v < min_value)
        throw std::invalid_argument("index " + std::to_string(v) + " out of range");
    return static_cast<unsigned>(v);
}

BivarPoly compute_family(const PolyRequest& req) {
    const std::string& f = req.family;
    const auto one_index = [&](long lo) { return expect_index(req, 0, lo); };
    if (f == "nk") return n_k_recurrence(one_index(1));
    if (f == "hk") return h_k(one_index(0));
    if (f == "ek") return e_k_recurrence(one_index(0));
    if (f == "lucas") return lucas_qt(one_index(1));
    if (f == "lucas-twisted") return lucas_twisted(one_index(1));
    if (f == "fib") return fib_qt(one_index(1));
    if (f == "fib-twisted") return fib_twisted(one_index(1));
    if (f == "wheel") {
        const unsigned n = one_index(1);
        return n == 1 ? wheel_poly_partition(1) : wheel_poly_enum(n);
    }
    if (f == "ecyc") return ecyc_d(one_index(1));
    if (f == "wcyc") return wcyc_d(one_index(1));
    if (f == "cyc") return BivarPoly::from_univar_in_q(cyc_d(one_index(1)));
    if (f == "cheb") return BivarPoly::from_univar_in_q(chebyshev_t(one_index(0)));
    if (f == "pik") {
        const unsigned i = expect_index(req, 0, 1), k = expect_index(req, 1, 1);
        return BivarPoly::from_univar_in_q(p_ik(i, k));
    }
    if (f == "qid") {
        const unsigned i = expect_index(req, 0, 1), d = expect_index(req, 1, 1);
        return BivarPoly::from_univar_in_q(q_id(i, d));
    }
    throw std::invalid_argument("unknown family '" + f + "'");
}

int run_poly(const PolyRequest& req) {
    const BivarPoly p = compute_family(req);
    if (req.format == "json") {
        nlohmann::json out;
        out["family"] = req.family;
        out["index"] = req.indices;
        out["terms"] = to_json_terms(p);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << p.render(req.var == "N1" ? "N1" : req.var == "t" ? "t" : "v") << "\n";
    }
    return kExitOk;
}

int run_verify(const VerifyOptions& opts) {
    const auto results = run_verify_all(opts);
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    const VerifyResult* first_fail = nullptr;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
        if (!r.pass) {
            std::cout << std::string(width - r.name.size() + 2, ' ') << r.detail;
            if (!first_fail) first_fail = &r;
        }
        std::cout << "\n";
    }
    std::cout << (first_fail ? "verification FAILED\n" : "all identities verified\n");
    if (first_fail) {
        std::cerr << "first failing identity: " << first_fail->name << " (" << first_fail->detail
                  << ")\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int run_oracle_check(const std::string& spec, unsigned max_k) {
    const Curve c = parse_curve_spec(spec);
    const std::uint64_t n1 = count_points(c, 1);
    std::cout << "curve y^2 = x^3 + " << c.a << "x + " << c.b << " over F_" << c.p << "\n";
    std::cout << "N1 = " << n1 << (hasse_bound_holds(c, n1) ? "  (Hasse bound OK)" : "") << "\n";
    if (!hasse_bound_holds(c, n1)) {
        std::cerr << "Hasse bound violated\n";
        return kExitVerifyFail;
    }
    bool all_match = true;
    std::uint64_t pk = c.p;
    for (unsigned k = 1; k <= max_k && pk <= 3000; ++k, pk *= c.p) {
        const std::uint64_t counted = count_points(c, k);
        const BigInt predicted = predict_nk(c.p, BigInt(static_cast<unsigned long>(n1)), k);
        const bool match = BigInt(static_cast<unsigned long>(counted)) == predicted;
        all_match = all_match && match;
        std::cout << "k=" << k << "  count=" << counted << "  predict=" << predicted.get_str()
                  << "  " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    if (!all_match) {
        std::cerr << "oracle mismatch\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int run_oracle_kernel(const std::string& spec, unsigned max_d) {
    const Curve c = parse_curve_spec(spec);
    const BigInt n1(static_cast<unsigned long>(count_points(c, 1)));
    std::cout << "curve y^2 = x^3 + " << c.a << "x + " << c.b << " over F_" << c.p
              << "  N1 = " << n1.get_str() << "\n";
    bool all_match = true;
    std::uint64_t pd = c.p;
    for (unsigned d = 1; d <= max_d && pd <= 3000; ++d, pd *= c.p) {
        const std::uint64_t kernel = endo_kernel_count(c, d);
        const BigInt expect = ecyc_d(d).eval(c.p, n1);
        const bool match = BigInt(static_cast<unsigned long>(kernel)) == expect;
        all_match = all_match && match;
        std::cout << "d=" << d << "  kernel=" << kernel << "  ecyc=" << expect.get_str() << "  "
                  << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    if (!all_match) {
        std::cerr << "kernel mismatch\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int run_table(const std::string& family, unsigned index) {
    if (family == "pik") {
        for (unsigned i = 1; i <= index; ++i)
            std::cout << "P[" << i << "," << index << "] = " << p_ik(i, index).render("q") << "\n";
        return kExitOk;
    }
    if (family == "qid") {
        const unsigned long phi = euler_phi(index);
        for (unsigned i = 1; i <= phi; ++i)
            std::cout << "Q[" << i << "," << index << "] = " << q_id(i, index).render("q") << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("table family must be pik or qid");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact elliptic-curve point-count polynomials, (q,t)-combinatorics, "
                 "and the brute-force curve oracle"};
    app.require_subcommand(1);

    PolyRequest poly_req;
    auto* poly = app.add_subcommand("poly", "print one polynomial from a family");
    poly->add_option("family", poly_req.family,
                     "nk|hk|ek|pik|lucas|lucas-twisted|fib|fib-twisted|wheel|cyc|ecyc|wcyc|qid|cheb")
        ->required();
    poly->add_option("index", poly_req.indices, "index arguments (two for pik/qid)")->required();
    poly->add_option("--format", poly_req.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    poly->add_option("--var", poly_req.var, "label for the second variable: v|N1|t")
        ->check(CLI::IsMember({"v", "N1", "t"}));

    VerifyOptions vopts;
    std::string verify_what;
    auto* verify = app.add_subcommand("verify", "run the cross-identity sweeps");
    verify->add_option("what", verify_what, "only 'all' is supported")->required();
    verify->add_option("--max-k", vopts.max_k, "depth of the k-indexed sweeps (default 12)");
    verify->add_option("--max-d", vopts.max_d, "depth of the cyclotomic sweeps (default 30)");
    verify->add_option("--rounds", vopts.rounds, "randomized property-test rounds (default 300)");

    auto* oracle = app.add_subcommand("oracle", "brute-force point counts on a curve");
    std::string curve_spec;
    unsigned oracle_max_k = 6;
    auto* ocheck = oracle->add_subcommand("check", "count points vs. the N_k prediction");
    ocheck->add_option("--curve", curve_spec, "curve as p,a,b")->required();
    ocheck->add_option("--max-k", oracle_max_k, "largest extension degree (default: all with p^k <= 3000)");
    std::string kernel_spec;
    unsigned oracle_max_d = 4;
    auto* okernel = oracle->add_subcommand("kernel", "Frobenius kernel counts vs. ECyc_d");
    okernel->add_option("--curve", kernel_spec, "curve as p,a,b")->required();
    okernel->add_option("--max-d", oracle_max_d, "largest divisor degree (default 4)");
    oracle->require_subcommand(1);

    auto* table = app.add_subcommand("table", "print a coefficient triangle");
    std::string table_family;
    unsigned table_k = 0, table_d = 0;
    table->add_option("family", table_family, "pik|qid")->required();
    table->add_option("--k", table_k, "row index for pik");
    table->add_option("--d", table_d, "index for qid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (poly->parsed()) return run_poly(poly_req);
        if (verify->parsed()) {
            if (verify_what != "all")
                throw std::invalid_argument("only 'verify all' is supported");
            return run_verify(vopts);
        }
        if (oracle->parsed()) {
            if (ocheck->parsed()) return run_oracle_check(curve_spec, oracle_max_k);
            if (okernel->parsed()) return run_oracle_kernel(kernel_spec, oracle_max_d);
        }
        if (table->parsed()) {
            if (table_family == "pik") {
                if (table_k == 0) throw std::invalid_argument("table pik needs --k");
                return run_table("pik", table_k);
            }
            if (table_family == "qid") {
                if (table_d == 0) throw std::invalid_argument("table qid needs --d");
                return run_table("qid", table_d);
            }
            throw std::invalid_argument("table family must be pik or qid");
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
