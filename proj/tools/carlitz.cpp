// carlitz: exact function-field arithmetic and identity verification.
//
// Subcommands compute Bernoulli-Carlitz numbers, Goss zeta values, and the
// fundamental period, and verify the Euler-Carlitz formula, the two-variable
// main identity, the reciprocal expansion of ell, the telescoping identity,
// and the classical floating-point analogues.
//
// Exit codes: 0 success (verifications passed), 1 domain error or a
// verification that ran and failed, 2 usage error, 3 precision/capacity/
// convergence failure.

#include "carlitz/carlitz_tables.hpp"
#include "carlitz/classical.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/period.hpp"
#include "carlitz/ramanujan.hpp"
#include "carlitz/selftest.hpp"
#include "carlitz/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace carlitz;

namespace {

int default_threads() {
    const char* env = std::getenv("CARLITZ_THREADS");
    if (!env) return 1;
    try {
        const int n = std::stoi(env);
        if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    return 1;
}

FieldPtr make_field(long long q, const std::string& modulus_csv) {
    if (q == 0) throw std::invalid_argument("--q is required for this command");
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 3");
    long long p = 0;
    for (long long i = 2; i * i <= q; ++i)
        if (q % i == 0) {
            p = i;
            break;
        }
    if (p == 0) p = q;
    long long e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw std::invalid_argument("q must be a prime power");

    if (e == 1) {
        if (!modulus_csv.empty())
            throw std::invalid_argument("--modulus only applies to extension fields");
        return FieldCtx::make_prime(static_cast<std::uint32_t>(p));
    }
    if (modulus_csv.empty())
        throw std::invalid_argument("q = " + std::to_string(p) + "^" + std::to_string(e) +
                                    " needs --modulus (e+1 coefficients, constant first)");
    std::vector<std::uint32_t> digits;
    std::stringstream ss(modulus_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const long long c = std::stoll(tok);
        if (c < 0) throw std::invalid_argument("modulus coefficients must be nonnegative");
        digits.push_back(static_cast<std::uint32_t>(c));
    }
    return FieldCtx::make_extension(static_cast<std::uint32_t>(p),
                                    static_cast<std::uint32_t>(e), digits);
}

json laurent_json(const Laurent& a) {
    json j;
    j["display"] = a.render();
    json terms = json::array();
    for (const auto& [e, c] : a.terms()) terms.push_back({e, c.v});
    j["terms"] = terms;
    if (a.is_exact_zero())
        j["exact_zero"] = true;
    else
        j["floor"] = a.floor();
    j["valuation"] = a.valuation().to_string();
    return j;
}

json diag_json(const std::vector<DegreeDiag>& diag) {
    json arr = json::array();
    for (const auto& d : diag)
        arr.push_back({{"d", d.d},
                       {"terms", d.terms},
                       {"predicted_bound", d.predicted_bound},
                       {"valuation", d.block_valuation.to_string()}});
    return arr;
}

struct Output {
    std::string command;
    json params = json::object();
    json result = json::object();
    std::vector<std::string> notes;
    std::vector<std::string> text;
};

void emit(const Output& o, const std::string& format, const std::string& out_path,
          long long elapsed_ms) {
    std::string rendered;
    if (format == "json") {
        json env;
        env["command"] = o.command;
        env["params"] = o.params;
        env["result"] = o.result;
        env["notes"] = o.notes;
        env["elapsed_ms"] = elapsed_ms;
        rendered = env.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& line : o.text) os << line << "\n";
        for (const auto& note : o.notes) os << "note: " << note << "\n";
        rendered = os.str();
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << rendered;
    } else {
        std::cout << rendered;
    }
}

std::string pass_str(bool pass) { return pass ? "PASS" : "FAIL"; }

int tables_imax_for_w(const FieldPtr& F, int wfloor, long long series_mmax) {
    return std::max({CarlitzTables::series_imax(F, series_mmax), period_kernel_imax(F, wfloor),
                     period_product_imax(F, wfloor), 3});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Carlitz module arithmetic over F_q[T]"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "carlitz 0.1.0");

    long long q = 0;
    std::string modulus;
    int prec = 60;
    int threads = default_threads();
    std::string format = "text";
    std::string out_path;
    std::optional<int> dmax;

    long long bc_mmax = 10, zeta_m = 1, ec_i = 1, ram_j = 1, tel_jmax = 4;
    int dmax_flag = -1;
    int tel_trials = 8;
    std::uint64_t tel_seed = 0x5eedULL;
    std::string period_method = "kernel", classical_kind = "euler";
    int classical_m = 1;
    double classical_alpha = 3.14159265358979323846;

    app.add_option("--q", q, "field size, an odd prime power");
    app.add_option("--modulus", modulus,
                   "modulus for extension fields: e+1 comma-separated coefficients, "
                   "constant first");
    CLI::Option* prec_opt =
        app.add_option("--prec", prec, "certified U-adic digits (default 60)")
            ->check(CLI::Range(20, 4000));
    app.add_option("--threads", threads,
                   "worker threads (default: CARLITZ_THREADS or 1; results are "
                   "thread-count independent)")
        ->check(CLI::Range(1, 256));
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    CLI::App* cmd_bc = app.add_subcommand("bc", "Bernoulli-Carlitz numbers BC_0..BC_mmax");
    cmd_bc->fallthrough();
    cmd_bc->add_option("--mmax", bc_mmax, "largest index (default 10)")
        ->check(CLI::Range(0LL, 100000LL));

    CLI::App* cmd_zeta = app.add_subcommand("zeta", "Goss zeta value at a positive integer");
    cmd_zeta->fallthrough();
    cmd_zeta->add_option("--m", zeta_m, "zeta argument, a positive integer")->required();
    cmd_zeta->add_option("--dmax", dmax_flag, "override the degree cutoff of the A-sum")
        ->check(CLI::Range(0, 64));

    CLI::App* cmd_period = app.add_subcommand("period", "fundamental period datum w = pi^(q-1)");
    cmd_period->fallthrough();
    cmd_period->add_option("--method", period_method, "kernel, product, or both")
        ->check(CLI::IsMember({"kernel", "product", "both"}));

    CLI::App* cmd_verify = app.add_subcommand("verify", "verify an identity to precision");
    cmd_verify->fallthrough();
    cmd_verify->require_subcommand(1);

    CLI::App* cmd_ec = cmd_verify->add_subcommand(
        "euler-carlitz", "zeta((q-1)i) = w^i BC_{(q-1)i} / Gamma_{(q-1)i}");
    cmd_ec->fallthrough();
    cmd_ec->add_option("--i", ec_i, "index i >= 1 (zeta weight (q-1)i)")->required();

    CLI::App* cmd_ram = cmd_verify->add_subcommand(
        "ramanujan", "two-variable main identity at weight j");
    cmd_ram->fallthrough();
    cmd_ram->add_option("--j", ram_j, "weight j >= 1")->required();
    cmd_ram->add_option("--dmax", dmax_flag, "override the lattice-sum degree cutoff")
        ->check(CLI::Range(0, 64));

    CLI::App* cmd_rec = cmd_verify->add_subcommand(
        "reciprocal", "1/ell(z) = 1/z - z^{q-2} sum_A 1/(z^{q-1} - A^{q-1})");
    cmd_rec->fallthrough();

    CLI::App* cmd_tel = cmd_verify->add_subcommand(
        "telescoping", "exact partial-fraction telescoping over F_q(T)");
    cmd_tel->fallthrough();
    cmd_tel->add_option("--jmax", tel_jmax, "largest exponent (default 4)")
        ->check(CLI::Range(1LL, 64LL));
    cmd_tel->add_option("--trials", tel_trials, "random pairs per exponent (default 8)")
        ->check(CLI::Range(1, 10000));
    cmd_tel->add_option("--seed", tel_seed, "RNG seed");

    CLI::App* cmd_cls = cmd_verify->add_subcommand(
        "classical", "floating-point analogues over the rationals");
    cmd_cls->fallthrough();
    cmd_cls->add_option("--kind", classical_kind, "euler (even zeta) or odd-zeta")
        ->check(CLI::IsMember({"euler", "odd-zeta"}));
    cmd_cls->add_option("--m", classical_m, "index m >= 1")->required();
    cmd_cls->add_option("--alpha", classical_alpha, "alpha parameter (odd-zeta; default pi)");

    CLI::App* cmd_self = app.add_subcommand("selftest", "named end-to-end battery");
    cmd_self->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1
    }

    if (dmax_flag >= 0) dmax = dmax_flag;
    // selftest runs at reduced depth unless the user pins --prec explicitly
    const int selftest_prec = prec_opt->count() > 0 ? prec : 40;

    const auto t0 = std::chrono::steady_clock::now();
    Output o;
    int rc = 0;
    try {
        if (cmd_bc->parsed()) {
            o.command = "bc";
            o.params = {{"q", q}, {"mmax", bc_mmax}};
            const FieldPtr F = make_field(q, modulus);
            const CarlitzTables tables =
                CarlitzTables::build(F, std::max(CarlitzTables::series_imax(F, bc_mmax), 1));
            const auto bc = bc_numbers(tables, bc_mmax);
            json values = json::array();
            for (long long m = 0; m <= bc_mmax; ++m) {
                const RatFunc& v = bc.at(m);
                values.push_back({{"m", m},
                                  {"bc", v.to_string()},
                                  {"gamma", gamma_factorial(tables, m).to_string()}});
                o.text.push_back("BC_" + std::to_string(m) + " = " + v.to_string());
            }
            o.result["values"] = values;
        } else if (cmd_zeta->parsed()) {
            o.command = "zeta";
            o.params = {{"q", q}, {"m", zeta_m}, {"prec", prec}};
            const FieldPtr F = make_field(q, modulus);
            const ZetaValue zv = zeta_pos(F, zeta_m, -prec, dmax, threads);
            o.result = {{"m", zv.m},
                        {"dmax_used", zv.dmax_used},
                        {"value", laurent_json(zv.value)}};
            o.text.push_back("zeta(" + std::to_string(zeta_m) + ") = " + zv.value.render());
            o.text.push_back("degree cutoff: " + std::to_string(zv.dmax_used));
        } else if (cmd_period->parsed()) {
            o.command = "period";
            o.params = {{"q", q}, {"prec", prec}, {"method", period_method}};
            const FieldPtr F = make_field(q, modulus);
            const int floor = -prec;
            const CarlitzTables tables =
                CarlitzTables::build(F, tables_imax_for_w(F, floor, 1));
            const auto describe = [&](const PeriodValue& pv) {
                const WValidation val = validate_w(pv.w, tables, floor, prec - 6);
                json j = {{"method", pv.method},
                          {"iterations", pv.iterations},
                          {"sign_corrected", pv.sign_corrected},
                          {"w", laurent_json(pv.w)},
                          {"validation",
                           {{"ell_one", val.ell_one.to_string()},
                            {"ell_t", val.ell_t.to_string()},
                            {"ell_t_plus_1", val.ell_t1.to_string()},
                            {"pass", val.pass}}}};
                o.text.push_back(pv.method + ": w = " + pv.w.render());
                o.text.push_back("  lattice zeros (1, T, T+1): " + val.ell_one.to_string() +
                                 ", " + val.ell_t.to_string() + ", " + val.ell_t1.to_string() +
                                 " -> " + pass_str(val.pass));
                if (!val.pass) rc = 2;
                return j;
            };
            if (period_method == "both") {
                const PeriodValue a = period_w_kernel(tables, floor);
                const PeriodValue b = period_w_product(tables, floor);
                o.result["kernel"] = describe(a);
                o.result["product"] = describe(b);
                const Val agree = agreement_valuation(a.w, b.w);
                o.result["agreement"] = agree.to_string();
                o.text.push_back("methods agree to valuation " + agree.to_string());
            } else {
                const PeriodValue pv = period_method == "kernel"
                                           ? period_w_kernel(tables, floor)
                                           : period_w_product(tables, floor);
                o.result = describe(pv);
            }
        } else if (cmd_ec->parsed()) {
            o.command = "verify euler-carlitz";
            o.params = {{"q", q}, {"i", ec_i}, {"prec", prec}};
            const FieldPtr F = make_field(q, modulus);
            const int wf = -(prec + 10);
            const CarlitzTables tables =
                CarlitzTables::build(F, tables_imax_for_w(F, wf, (q - 1) * ec_i));
            const PeriodValue pv = period_w_kernel(tables, wf);
            const EulerCarlitzReport r = verify_euler_carlitz(tables, pv.w, ec_i, prec, threads);
            o.result = {{"q", r.q},
                        {"i", r.i},
                        {"weight", (q - 1) * ec_i},
                        {"prec", r.prec},
                        {"residual", r.residual.to_string()},
                        {"lhs_valuation", r.lhs_valuation.to_string()},
                        {"rhs_valuation", r.rhs_valuation.to_string()},
                        {"dmax_used", r.dmax_used},
                        {"pass", r.pass}};
            o.text.push_back(pass_str(r.pass) + " euler-carlitz q=" + std::to_string(q) +
                             " i=" + std::to_string(ec_i) + " prec=" + std::to_string(prec));
            o.text.push_back("  residual valuation " + r.residual.to_string());
            if (!r.pass) rc = 2;
        } else if (cmd_ram->parsed()) {
            o.command = "verify ramanujan";
            o.params = {{"q", q}, {"j", ram_j}, {"prec", prec}};
            const FieldPtr F = make_field(q, modulus);
            const int wf = ramanujan_w_floor(F, ram_j, prec);
            const CarlitzTables tables =
                CarlitzTables::build(F, tables_imax_for_w(F, wf, (q - 1) * (ram_j + 1)));
            const PeriodValue pv = period_w_kernel(tables, wf);
            const RamanujanReport r =
                verify_ramanujan(tables, pv.w, ram_j, prec, dmax, threads);
            o.notes = r.notes;
            o.result = {{"q", r.q},
                        {"j", r.j},
                        {"prec", r.prec},
                        {"shape", identity_shape(F, ram_j).summary},
                        {"residual", r.residual.to_string()},
                        {"lhs_valuation", r.lhs_valuation.to_string()},
                        {"rhs_valuation", r.rhs_valuation.to_string()},
                        {"lhs_digits", r.lhs_digits},
                        {"rhs_digits", r.rhs_digits},
                        {"dmax_used", r.dmax_used},
                        {"exponent_audit_ok", r.exponent_audit_ok},
                        {"odd_parity_ok", r.odd_parity_ok},
                        {"diag_u", diag_json(r.diag_u)},
                        {"diag_v", diag_json(r.diag_v)},
                        {"pass", r.pass}};
            o.text.push_back(pass_str(r.pass) + " ramanujan q=" + std::to_string(q) +
                             " j=" + std::to_string(ram_j) + " prec=" + std::to_string(prec));
            o.text.push_back("  residual valuation " + r.residual.to_string() +
                             ", lhs/rhs digits " + std::to_string(r.lhs_digits) + "/" +
                             std::to_string(r.rhs_digits));
            if (!r.pass) rc = 2;
        } else if (cmd_rec->parsed()) {
            o.command = "verify reciprocal";
            o.params = {{"q", q}, {"prec", prec}};
            const FieldPtr F = make_field(q, modulus);
            const int wf = -(prec + 8);
            const CarlitzTables tables = CarlitzTables::build(F, tables_imax_for_w(F, wf, 1));
            const PeriodValue pv = period_w_kernel(tables, wf);
            const ReciprocalReport r =
                verify_reciprocal(tables, pv.w, prec, std::nullopt, std::nullopt, threads);
            o.result = {{"q", r.q},
                        {"prec", r.prec},
                        {"residual", r.residual.to_string()},
                        {"lhs_valuation", r.lhs_valuation.to_string()},
                        {"rhs_valuation", r.rhs_valuation.to_string()},
                        {"dmax_used", r.dmax_used},
                        {"pass", r.pass}};
            o.text.push_back(pass_str(r.pass) + " reciprocal q=" + std::to_string(q) +
                             " prec=" + std::to_string(prec));
            o.text.push_back("  residual valuation " + r.residual.to_string());
            if (!r.pass) rc = 2;
        } else if (cmd_tel->parsed()) {
            o.command = "verify telescoping";
            o.params = {{"q", q}, {"jmax", tel_jmax}, {"trials", tel_trials}, {"seed", tel_seed}};
            const FieldPtr F = make_field(q, modulus);
            const TelescopingResult r = telescoping_check(F, tel_jmax, tel_trials, tel_seed);
            o.result = {{"trials", r.trials}, {"failures", r.failures}, {"pass", r.pass}};
            o.text.push_back(pass_str(r.pass) + " telescoping q=" + std::to_string(q) + ": " +
                             std::to_string(r.trials) + " exact trials, " +
                             std::to_string(r.failures) + " failures");
            if (!r.pass) rc = 2;
        } else if (cmd_cls->parsed()) {
            o.command = "verify classical";
            o.params = {{"kind", classical_kind}, {"m", classical_m}};
            if (classical_kind == "euler") {
                const ClassicalEulerReport r = verify_classical_euler(classical_m);
                o.notes.push_back(r.notes);
                o.result = {{"m", r.m},
                            {"lhs", static_cast<double>(r.lhs)},
                            {"rhs", static_cast<double>(r.rhs)},
                            {"residual", static_cast<double>(r.residual)},
                            {"pass", r.pass}};
                o.text.push_back(pass_str(r.pass) + " classical euler m=" +
                                 std::to_string(classical_m));
                o.text.push_back("  zeta(" + std::to_string(2 * classical_m) + ") = " +
                                 std::to_string(static_cast<double>(r.lhs)));
                if (!r.pass) rc = 2;
            } else {
                o.params["alpha"] = classical_alpha;
                const ClassicalRamanujanReport r =
                    verify_classical_ramanujan(classical_m, classical_alpha);
                o.notes.push_back(r.notes);
                o.result = {{"m", r.m},
                            {"alpha", static_cast<double>(r.alpha)},
                            {"beta", static_cast<double>(r.beta)},
                            {"lhs", static_cast<double>(r.lhs)},
                            {"rhs", static_cast<double>(r.rhs)},
                            {"residual", static_cast<double>(r.residual)},
                            {"pass", r.pass}};
                o.text.push_back(pass_str(r.pass) + " classical odd-zeta m=" +
                                 std::to_string(classical_m));
                o.text.push_back("  residual = " +
                                 std::to_string(static_cast<double>(r.residual)));
                if (!r.pass) rc = 2;
            }
        } else if (cmd_self->parsed()) {
            o.command = "selftest";
            o.params = {{"q", q}, {"prec", selftest_prec}};
            const FieldPtr F = make_field(q, modulus);
            const SelfTestReport r = run_selftest(F, selftest_prec, threads);
            json cases = json::array();
            for (const auto& c : r.cases) {
                cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                o.text.push_back((c.pass ? "ok   " : "FAIL ") + c.name + " - " + c.detail);
            }
            o.result = {{"q", r.q}, {"prec", r.prec}, {"cases", cases}, {"pass", r.pass}};
            o.text.push_back(std::string(r.pass ? "PASS" : "FAIL") + " selftest q=" +
                             std::to_string(q));
            if (!r.pass) rc = 2;
        }
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }

    const auto t1 = std::chrono::steady_clock::now();
    const long long elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    try {
        emit(o, format, out_path, elapsed_ms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
