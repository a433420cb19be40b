// Command-line front end: exact convergents, reference tables, the
// verification suites, and the matrix-product benchmark.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 bit cap exceeded (APERY_ZETA_MAX_BITS).

#include "apery/aux_verify.hpp"
#include "apery/decimal.hpp"
#include "apery/enclose.hpp"
#include "apery/gosper.hpp"
#include "apery/series.hpp"
#include "apery/zeta.hpp"
#include "apery/zeta23.hpp"
#include "apery/zeta5.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace apery;
using nlohmann::json;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

VerificationReport timed(const std::function<VerificationReport()>& fn) {
    double t0 = now_seconds();
    VerificationReport r = fn();
    r.seconds = now_seconds() - t0;
    return r;
}

/// [t, t + 10^-d] for t >= 0, [t - 10^-d, t] otherwise: the set of values
/// whose truncation to d fractional digits is t.
Interval truncation_interval(const Rat& t, unsigned long d) {
    Rat ulp = pow10_neg(d);
    return t >= 0 ? Interval(t, t + ulp) : Interval(t - ulp, t);
}

std::string magnitude_string(const Rat& x) {
    DecimalMagnitude m = decimal_magnitude(x);
    if (m.zero) return "0";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2fe%+ld", m.mantissa, m.exp10);
    return buf;
}

// ---------------------------------------------------------------- compute

struct Convergent {
    long n = 0;
    Rat fraction;
    Interval value;  // encloses the target constant
};

/// Target constant reached through the recursion: for zeta5 the pair
/// (zeta(5), zeta(3)); for zeta23 the pair (zeta(3), zeta(2)).
Convergent convergent(const std::string& system, int which, long n) {
    Convergent c;
    c.n = n;
    if (system == "zeta5") {
        auto s = zeta5::sequences(std::max(n, 2l));
        const Rat& p = which == 0 ? s.p[n] : s.pt[n];
        long zs = which == 0 ? 5 : 3;
        Rat q(s.q[n]);
        c.fraction = p / q;
        long hint = static_cast<long>(3.85 * static_cast<double>(n)) + 20;
        auto l = linear_form_enclosure(q, p, zs, hint, 3);
        if (!l) throw std::runtime_error("sign resolution budget exhausted");
        c.value = (*l + p) * (Rat(1) / q);
    } else {
        auto s = zeta23::sequences(std::max(n, 2l));
        const Rat& p = which == 0 ? s.p[n] : s.pt[n];
        long zs = which == 0 ? 3 : 2;
        Rat q(s.q[n]);
        c.fraction = p / q;
        long hint = 3 * n + 20;
        auto l = linear_form_enclosure(q, p, zs, hint, 3);
        if (!l) throw std::runtime_error("sign resolution budget exhausted");
        c.value = (*l + p) * (Rat(1) / q);
    }
    return c;
}

/// Smallest index (starting from a rate-based estimate) whose convergent
/// certifies `digits` fractional digits; returns the certified decimal.
Convergent certified_to(const std::string& system, int which, int digits, std::string& decimal) {
    double rate = system == "zeta5" ? 3.8 : 2.9;
    long n = std::max(3l, static_cast<long>(static_cast<double>(digits + 4) / rate) + 3);
    for (;;) {
        Convergent c = convergent(system, which, n);
        decimal = to_decimal(c.value, digits);
        if (decimal.find("±") == std::string::npos) return c;
        n += std::max(4l, n / 4);
    }
}

int run_compute(const std::string& system, std::optional<long> n, int digits,
                const std::string& format) {
    const char* names[2] = {system == "zeta5" ? "zeta(5)" : "zeta(3)",
                            system == "zeta5" ? "zeta(3)" : "zeta(2)"};
    json out{{"system", system}, {"digits", digits}};
    for (int which = 0; which < 2; ++which) {
        Convergent c;
        std::string dec;
        if (n) {
            c = convergent(system, which, *n);
            dec = to_decimal(c.value, digits);
        } else {
            c = certified_to(system, which, digits, dec);
        }
        Rat err = (c.value - c.fraction).abs().hi;
        if (format == "json") {
            json entry{{"n", c.n},
                       {"value", dec},
                       {"fraction", c.fraction.get_str()},
                       {"error", magnitude_string(err)}};
            out[names[which]] = entry;
        } else {
            std::cout << names[which] << " = " << dec << "\n"
                      << "  convergent index n = " << c.n
                      << ", |error| <= " << magnitude_string(err) << "\n";
        }
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------ table

int run_table(const std::string& system, long n_max, bool annotate, const std::string& format) {
    json rows = json::array();
    for (long n = 0; n <= n_max; ++n) {
        Convergent c = convergent(system, 0, n);
        Rat err = (c.value - c.fraction).abs().hi;
        std::string note;
        if (annotate && system == "zeta5") {
            for (const auto& row : zeta5::reference_table()) {
                if (row.n != n) continue;
                bool ok = true;
                if (row.fraction) ok = ok && *row.fraction == c.fraction;
                if (row.error_bound) ok = ok && err < *row.error_bound;
                if (row.error_truncated) {
                    Interval e = (c.value - c.fraction).abs();
                    ok = ok && truncation_interval(*row.error_truncated, 9).contains(e);
                }
                note = ok ? "ref:PASS" : "ref:FAIL";
            }
        }
        if (format == "json") {
            json r{{"n", n},
                   {"fraction", c.fraction.get_str()},
                   {"value", to_decimal(c.fraction, 20)},
                   {"error", magnitude_string(err)}};
            if (!note.empty()) r["reference"] = note;
            rows.push_back(r);
        } else {
            std::cout << "n=" << n << "  " << to_decimal(c.fraction, 20)
                      << "  |error| <= " << magnitude_string(err);
            if (!note.empty()) std::cout << "  [" << note << "]";
            std::cout << "\n";
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return 0;
}

// ----------------------------------------------------------------- verify

VerificationReport roots_printed_zeta5(long digits) {
    VerificationReport rep;
    rep.check = "zeta5-roots-printed";
    rep.range_lo = rep.range_hi = 0;
    auto mu = zeta5::char_roots_mu(digits);
    auto expect = [&](const Interval& got, const char* dec, const char* name) {
        Rat t(0);
        // parse a plain signed decimal into an exact rational
        std::string s(dec);
        bool neg = s[0] == '-';
        if (neg) s.erase(0, 1);
        auto dot = s.find('.');
        std::string frac = s.substr(dot + 1);
        Int scaled(s.substr(0, dot) + frac, 10);  // base forced: leading zeros must not mean octal
        t = make_rat(neg ? -scaled : scaled, pow10_int(frac.size()));
        if (!truncation_interval(t, frac.size()).contains(got))
            rep.fail(0, std::string(name) + " does not match the reference truncation " + dec);
    };
    expect(mu.mu1, "-0.02001512", "mu_1");
    expect(mu.mu2, "0.33753726", "mu_2");
    expect(mu.mu3, "-2368.31752213", "mu_3");
    return rep;
}

VerificationReport roots_printed_zeta23(long digits) {
    VerificationReport rep;
    rep.check = "zeta23-roots-printed";
    rep.range_lo = rep.range_hi = 0;
    auto mu = zeta23::char_roots_mu_prime(digits);
    Rat t = make_rat(Int("21985478039"), pow10_int(8));
    if (!truncation_interval(t, 8).contains(mu.mu3))
        rep.fail(0, "real root does not match the reference truncation 219.85478039");
    double lg = std::log(mu.pair_modulus.mid().get_d());
    if (std::abs(lg - (-1.31018925)) > 1e-6)
        rep.fail(0, "log of the complex pair modulus is " + std::to_string(lg) +
                        ", expected -1.31018925");
    return rep;
}

VerificationReport rates_report(const std::string& system, long n) {
    VerificationReport rep;
    rep.check = system + "-rates";
    rep.range_lo = rep.range_hi = n;
    double log_l, log_lt, log_q, tf, tc;
    bool resolved = true;
    if (system == "zeta5") {
        auto r = zeta5::rate_report(n);
        resolved = r.log_l && r.log_lt;
        log_l = r.log_l.value_or(0);
        log_lt = r.log_lt.value_or(0);
        log_q = r.log_q;
        tf = r.target_forms;
        tc = r.target_coeffs;
    } else {
        auto r = zeta23::rate_report(n);
        resolved = r.log_l && r.log_lt;
        log_l = r.log_l.value_or(0);
        log_lt = r.log_lt.value_or(0);
        log_q = r.log_q;
        tf = r.target_forms;
        tc = r.target_coeffs;
    }
    if (!resolved) {
        rep.status = VerificationReport::Status::Indeterminate;
        rep.counterexample = "n=" + std::to_string(n) + ": form sign unresolved";
        return rep;
    }
    auto within = [&](double got, double want, const char* what) {
        if (std::abs(got - want) > 0.02)
            rep.fail(n, std::string(what) + " rate " + std::to_string(got) + " vs target " +
                            std::to_string(want));
    };
    within(log_l, tf, "l_n");
    within(log_lt, tf, "l~_n");
    within(log_q, tc, "q_n");
    return rep;
}

int run_verify(const std::vector<std::string>& selectors, bool all, std::optional<long> n_max,
               const std::string& format) {
    static const std::set<std::string> known{"signs", "integrality", "oracle",
                                             "recursions", "roots", "rates"};
    std::set<std::string> wanted(selectors.begin(), selectors.end());
    for (const auto& s : wanted)
        if (!known.count(s)) {
            std::cerr << "unknown check selector '" << s << "'\n";
            return 2;
        }
    if (all) wanted = known;
    if (wanted.empty()) {
        std::cerr << "no checks selected (pass --all or selector names)\n";
        return 2;
    }
    auto cap = [&](long dflt) { return n_max ? *n_max : dflt; };

    std::vector<VerificationReport> reports;
    auto add = [&](std::function<VerificationReport()> fn) { reports.push_back(timed(fn)); };

    if (wanted.count("signs")) {
        add([&] { return zeta5::sign_check(cap(200)); });
        add([&] { return zeta5::alternation_check(cap(300)); });
        add([&] { return zeta23::positivity_check(cap(300)); });
        add([&] { return wp_sign_check(cap(25)); });
    }
    if (wanted.count("integrality")) {
        add([&] { return zeta5::integrality_check(cap(300)); });
        add([&] { return zeta23::integrality_check(cap(300)); });
        add([&] { return wp_integrality_check(cap(25)); });
    }
    if (wanted.count("oracle")) {
        add([&] { return zeta5::oracle_check(cap(25)); });
        add([&] { return zeta23::oracle_check(cap(15)); });
        add([&] { return structure_check(cap(25)); });
    }
    if (wanted.count("recursions")) {
        add([&] { return aux::verify_recursion_8(cap(25)); });
        add([&] { return aux::verify_recursion_9(cap(25)); });
    }
    if (wanted.count("roots")) {
        add([&] { return aux::verify_root_products(12); });
        add([&] { return roots_printed_zeta5(12); });
        add([&] { return roots_printed_zeta23(12); });
    }
    if (wanted.count("rates")) {
        add([&] { return rates_report("zeta5", cap(400)); });
        add([&] { return rates_report("zeta23", cap(400)); });
    }

    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.check < b.check;
              });

    bool ok = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            ok = ok && r.passed();
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << VerificationReport::status_name(r.status) << "  " << r.check << "  ["
                      << r.range_lo << "," << r.range_hi << "]  "
                      << std::fixed << std::setprecision(2) << r.seconds << "s";
            if (r.counterexample) std::cout << "  " << *r.counterexample;
            std::cout << "\n";
            ok = ok && r.passed();
        }
    }
    return ok ? 0 : 1;
}

// ------------------------------------------------------------------ bench

int run_bench(long factors, long index, const std::string& format) {
    auto cmp = gosper::compare_with_recursion(factors, index);
    if (format == "json") {
        json j{{"factors", cmp.factors},
               {"index", cmp.index},
               {"gosper_digits_zeta5", cmp.gosper_digits_zeta5},
               {"gosper_digits_zeta3", cmp.gosper_digits_zeta3},
               {"recursion_digits_zeta5", cmp.recursion_digits_zeta5},
               {"gosper_bits", cmp.gosper_bits},
               {"recursion_bits", cmp.recursion_bits}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "matrix product, " << cmp.factors << " factors: " << cmp.gosper_digits_zeta5
                  << " digits of zeta(5), " << cmp.gosper_digits_zeta3
                  << " digits of zeta(3), " << cmp.gosper_bits << " bits\n"
                  << "recursion, index " << cmp.index << ": " << cmp.recursion_digits_zeta5
                  << " digits of zeta(5), " << cmp.recursion_bits << " bits\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("APERY_ZETA_MAX_BITS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(cap, &end, 10);
        if (end == cap || *end != '\0') {
            std::cerr << "APERY_ZETA_MAX_BITS must be a nonnegative integer\n";
            return 2;
        }
        set_max_bits(static_cast<std::size_t>(v));
    }

    CLI::App app{"Exact simultaneous rational approximations to zeta(5), zeta(3) and zeta(2)"};
    app.require_subcommand(1);

    std::string system = "zeta5";
    std::string format = "text";
    int digits = 30;
    std::optional<long> n_opt;
    long n_max_table = 10;
    std::optional<long> n_max_verify;
    bool annotate = false;
    bool all = false;
    std::vector<std::string> selectors;
    long bench_factors = 50;
    std::optional<long> bench_index;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--system", system, "zeta5 (targets zeta(5), zeta(3)) or zeta23")
            ->check(CLI::IsMember({"zeta5", "zeta23"}));
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "certified decimal expansions");
    add_common(compute);
    compute->add_option("--digits", digits, "certified fractional digits")
        ->check(CLI::PositiveNumber);
    compute->add_option("--n", n_opt, "report the convergent at a fixed index instead");

    CLI::App* table = app.add_subcommand("table", "convergents and error enclosures by index");
    add_common(table);
    table->add_option("--n-max", n_max_table, "last index")->check(CLI::NonNegativeNumber);
    table->add_flag("--annotate", annotate, "mark rows that have published reference values");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--n-max", n_max_verify, "override the per-suite index caps");
    verify->add_flag("--all", all, "run every suite");
    verify->add_option("checks", selectors,
                       "suites: signs integrality oracle recursions roots rates");

    CLI::App* bench = app.add_subcommand("bench", "matrix product vs recursion cost/accuracy");
    bench->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    bench->add_option("--factors", bench_factors, "number of product factors")
        ->check(CLI::PositiveNumber);
    bench->add_option("--n", bench_index, "recursion index to compare against");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(system, n_opt, digits, format);
        if (table->parsed()) return run_table(system, n_max_table, annotate, format);
        if (verify->parsed()) return run_verify(selectors, all, n_max_verify, format);
        if (bench->parsed())
            return run_bench(bench_factors, bench_index.value_or(bench_factors / 2 + 2), format);
    } catch (const apery::BitLimitError& e) {
        std::cerr << "bit cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
