// Command-line front end: point evaluation, parameter derivatives with an
// optional finite-difference check, seeded verification sweeps, and
// boundary-curve CSV emission.
//
// Exit codes: 0 ok, 1 parse error, 2 domain/constraint error,
// 3 check failure, 4 I/O error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alf/alf.hpp"

using namespace alf;
using nlohmann::json;

namespace {

// Complex literals: "a", "bi", "a+bi", "a-bi", no spaces; signed zero
// ("+0i" / "-0i") selects the side of a cut.
bool parse_complex(const std::string& s, Complex& out) {
    if (s.empty()) return false;
    auto to_double = [](const std::string& t, double& v) {
        if (t.empty()) return false;
        char* end = nullptr;
        v = std::strtod(t.c_str(), &end);
        return end == t.c_str() + t.size();
    };
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        for (size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                double re, im;
                std::string imag = body.substr(i);
                if (imag == "+") imag = "+1";
                if (imag == "-") imag = "-1";
                if (to_double(body.substr(0, i), re) && to_double(imag, im)) {
                    out = Complex(re, im);
                    return true;
                }
                return false;
            }
        }
        std::string imag = body.empty() ? "1" : body;
        if (imag == "+") imag = "+1";
        if (imag == "-") imag = "-1";
        double im;
        if (!to_double(imag, im)) return false;
        out = Complex(0.0, im);
        return true;
    }
    double re;
    if (!to_double(s, re)) return false;
    out = Complex(re, 0.0);
    return true;
}

Complex require_complex(const std::string& s, const char* name) {
    Complex z;
    if (!parse_complex(s, z))
        throw CLI::ValidationError(std::string(name) + ": cannot parse complex literal '" + s +
                                   "' (expected a, bi, a+bi or a-bi)");
    return z;
}

void print_value(const Complex& v, double abs_err, const std::string& format) {
    if (format == "csv") {
        std::printf("re,im,abs_err\n%.17g,%.17g,%.3g\n", v.real(), v.imag(), abs_err);
    } else {
        json j;
        j["re"] = v.real();
        j["im"] = v.imag();
        j["abs_err"] = abs_err;
        std::printf("%s\n", j.dump().c_str());
    }
}

double default_tol(double fallback) {
    if (const char* env = std::getenv("ALF_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return fallback;
}

// ---- verification sweeps ---------------------------------------------------

struct SuiteReport {
    std::string suite;
    long cases_run = 0;
    long cases_passed = 0;
    long failures = 0;
    long skipped_poles = 0;
    double worst_relative_error = 0.0;
    double elapsed = 0.0;

    void record(double err, double tol) {
        cases_run++;
        worst_relative_error = std::max(worst_relative_error, err);
        if (err <= tol)
            cases_passed++;
        else
            failures++;
    }
    void record_pass() {
        cases_run++;
        cases_passed++;
    }
    void record_fail() {
        cases_run++;
        failures++;
    }
    void record_skip() {
        cases_run++;
        skipped_poles++;
    }
};

double rel_err(const Complex& a, const Complex& b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

SuiteReport run_map_suite(long samples, double tol, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "map";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-8.0, 8.0);
    auto sample_off_cut = [&]() {
        for (;;) {
            Complex z(box(rng), box(rng));
            if (distance_to_cut_pm1(z) > 1e-6) return z;
        }
    };
    // evenness f(-z) = f(z)
    for (long i = 0; i < samples / 4; ++i) {
        Complex z = sample_off_cut();
        rep.record(rel_err(f_map(-z), f_map(z)), std::max(tol, 1e-13));
    }
    // Re f > 0 on C \ [-1,1], including near-cut points
    std::uniform_real_distribution<double> ux(-0.999, 0.999), ueps(1e-6, 1e-2);
    for (long i = 0; i < samples / 2; ++i) {
        Complex z = (i % 8 == 0) ? Complex(ux(rng), ueps(rng)) : sample_off_cut();
        if (f_map(z).real() > 0.0)
            rep.record_pass();
        else
            rep.record_fail();
    }
    // quadrant I -> closed quadrant IV
    std::uniform_real_distribution<double> up(1e-3, 8.0);
    for (long i = 0; i < samples / 4; ++i) {
        Complex z(up(rng), up(rng));
        if (distance_to_cut_pm1(z) <= 1e-9) {
            rep.record_skip();
            continue;
        }
        Complex w = f_map(z);
        if (w.real() > 0.0 && w.imag() <= 1e-12)
            rep.record_pass();
        else
            rep.record_fail();
    }
    // w involution on the strip |Im z| < pi
    std::uniform_real_distribution<double> ustrip(-3.0, 3.0), ure(0.05, 4.0);
    for (long i = 0; i < samples / 4; ++i) {
        Complex z(ure(rng) * (i % 2 == 0 ? 1.0 : -1.0), ustrip(rng));
        if (z.real() < 0.0 && std::abs(z.imag()) < 1e-3) {
            rep.record_skip();
            continue;
        }
        rep.record(rel_err(w_map(w_map(z)), z), std::max(tol, 1e-11));
    }
    return rep;
}

SuiteReport run_whipple_suite(long samples, double tol, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "whipple";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> upar(-1.5, 1.5), ure(0.2, 4.0), uim(-2.5, 2.5);
    for (long i = 0; i < samples; ++i) {
        Complex nu(upar(rng), upar(rng)), mu(upar(rng), upar(rng));
        Complex z(ure(rng), uim(rng));
        try {
            Complex w = f_map(z);
            double e1 = rel_err(legendre_p(-mu - 0.5, -nu - 0.5, w), whipple_p_from_q(nu, mu, z));
            double e2 = rel_err(legendre_q(-mu - 0.5, -nu - 0.5, w), whipple_q_from_p(nu, mu, z));
            // round trip: apply whippleb at the interchanged indices to land
            // back on Q_nu^mu(z)
            Complex p_at_w = whipple_p_from_q(nu, mu, z);
            Complex round = Complex(0.0, -1.0) * std::sqrt(0.5 * pi) * gamma_c(nu + mu + 1.0) *
                            half_power(w, Complex(0.25, 0.0)) *
                            std::exp(Complex(0.0, -pi) * (-mu - 0.5)) * p_at_w;
            double e3 = rel_err(round, legendre_q(nu, mu, z));
            rep.record(e1, tol);
            rep.record(e2, tol);
            rep.record(e3, std::max(tol, 1e-8));
        } catch (const pole_error&) {
            rep.record_skip();
        }
    }
    return rep;
}

SuiteReport run_integrals_suite(long samples, double tol, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "integrals";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> upar(0.0, 2.5), uim(-1.0, 1.0), ure(1.3, 4.0);
    for (long i = 0; i < samples; ++i) {
        Complex nu(upar(rng), 0.3 * uim(rng));
        Complex mu(upar(rng), 0.3 * uim(rng));
        Complex z(ure(rng), uim(rng));
        try {
            if (nu.real() > std::abs(mu.real()) - 0.4) {
                auto r = q_via_k_integral(nu, mu, z);
                rep.record(rel_err(r.value, legendre_q(nu - 0.5, mu, z)), tol);
            }
            if (mu.real() > std::abs(nu.real()) - 0.4) {
                auto r = p_via_k_integral(nu, mu, z);
                rep.record(rel_err(r.value, legendre_p(nu - 0.5, -mu, z)), tol);
            }
            if (z.real() > 1.05 && mu.real() > -nu.real() - 0.4) {
                auto r = q_via_i_integral(nu, mu, z);
                rep.record(rel_err(r.value, legendre_q(nu - 0.5, mu, z)), tol);
            }
            if (classify_region(z).re_f_gt_one && mu.real() > -nu.real() - 0.4) {
                auto r = p_via_i_integral(nu, mu, z);
                rep.record(rel_err(r.value, legendre_p(nu - 0.5, mu, z)), tol);
            }
            // a rejection probe: z inside [-1,1] must be refused
            try {
                q_via_k_integral(nu, mu, Complex(0.4, 0.0));
                rep.record_fail();
            } catch (const domain_error&) {
                rep.record_pass();
            }
        } catch (const pole_error&) {
            rep.record_skip();
        } catch (const constraint_error&) {
            rep.record_skip();
        }
    }
    return rep;
}

SuiteReport run_derivatives_suite(long samples, double tol, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "derivatives";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> upar(0.0, 2.5), uim(-1.5, 1.5), ure(1.2, 4.0);
    std::uniform_int_distribution<int> uidx(0, 3), upick(0, 3), usign(0, 1);
    for (long i = 0; i < samples; ++i) {
        int which = upick(rng);
        int idx = uidx(rng);
        int sign = usign(rng) ? 1 : -1;
        if (idx == 0) sign = 1;
        Complex par(upar(rng), 0.0);
        Complex z(ure(rng), uim(rng));
        try {
            DerivativeResult cf;
            LegendreParams at;
            LegendreKind kind;
            DerivWrt wrt;
            switch (which) {
                case 0:
                    cf = dq_dorder_at_int(par, idx, sign, z);
                    at = {par - 0.5, Complex(sign * idx, 0.0), z};
                    kind = LegendreKind::Q;
                    wrt = DerivWrt::order;
                    break;
                case 1:
                    cf = dp_dorder_at_int(par, idx, sign, z);
                    at = {par - 0.5, Complex(sign * idx, 0.0), z};
                    kind = LegendreKind::P;
                    wrt = DerivWrt::order;
                    break;
                case 2:
                    cf = dp_ddegree_at_halfint(idx, sign, par, z);
                    at = {Complex(sign * idx - 0.5, 0.0), par, z};
                    kind = LegendreKind::P;
                    wrt = DerivWrt::degree;
                    break;
                default:
                    cf = dq_ddegree_at_halfint(idx, sign, par, z);
                    at = {Complex(sign * idx - 0.5, 0.0), par, z};
                    kind = LegendreKind::Q;
                    wrt = DerivWrt::degree;
                    break;
            }
            auto fd = fd_param_derivative(kind, wrt, at);
            double gap = std::abs(cf.value - fd.value) / std::max(1.0, std::abs(cf.value));
            rep.record(gap, std::max(tol, 3.0 * fd.error_estimate));
        } catch (const pole_error&) {
            rep.record_skip();
        } catch (const domain_error&) {
            rep.record_skip();
        }
    }
    return rep;
}

json report_to_json(const SuiteReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["cases_run"] = rep.cases_run;
    j["cases_passed"] = rep.cases_passed;
    j["failures"] = rep.failures;
    j["skipped_poles"] = rep.skipped_poles;
    j["worst_relative_error"] = rep.worst_relative_error;
    j["elapsed"] = rep.elapsed;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alf: associated Legendre functions of complex degree and order, their "
                 "parameter derivatives, and the Whipple machinery"};
    app.require_subcommand(1);

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
    std::string func, s_deg = "0", s_ord = "0", s_z, s_t, format = "json";
    eval->add_option("--func", func, "P, Q, besselI, besselK, fmap or wmap")->required();
    eval->add_option("--deg", s_deg, "degree nu (complex literal)");
    eval->add_option("--ord", s_ord, "order mu (complex literal)");
    eval->add_option("--z", s_z, "argument z (complex literal)");
    eval->add_option("--t", s_t, "positive real argument (Bessel)");
    eval->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // ---- deriv ----
    auto* deriv = app.add_subcommand("deriv", "parameter derivative via the closed forms");
    std::string d_func, d_wrt, d_sign = "+", d_deg_param = "0", d_ord_param = "0", d_z,
                d_format = "json";
    int d_index = 0;
    bool d_check = false;
    deriv->add_option("--func", d_func, "P or Q")->required()->check(CLI::IsMember({"P", "Q"}));
    deriv->add_option("--wrt", d_wrt, "degree or order")
        ->required()
        ->check(CLI::IsMember({"degree", "order"}));
    deriv->add_option("--index", d_index, "integer m (order) or n (degree), >= 0")->required();
    deriv->add_option("--sign", d_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    deriv->add_option("--deg-param", d_deg_param, "nu parameter (for order derivatives)");
    deriv->add_option("--ord-param", d_ord_param, "mu parameter (for degree derivatives)");
    deriv->add_option("--z", d_z, "argument z")->required();
    deriv->add_flag("--check", d_check, "also run the finite-difference oracle");
    deriv->add_option("--format", d_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "seeded verification sweeps");
    std::string v_suite = "all";
    long v_samples = 1000;
    double v_tol = 0.0;
    std::uint64_t v_seed = 1;
    verify->add_option("--suite", v_suite, "whipple, integrals, derivatives, map or all")
        ->check(CLI::IsMember({"whipple", "integrals", "derivatives", "map", "all"}));
    verify->add_option("--samples", v_samples, "sample count");
    verify->add_option("--tol", v_tol, "pass tolerance (default per suite)");
    verify->add_option("--seed", v_seed, "RNG seed");

    // ---- map-curve ----
    auto* curve = app.add_subcommand("map-curve", "emit the boundary curve as CSV");
    double c_tmin = 1e-3, c_tmax = 1e3;
    long c_steps = 200;
    std::string c_out;
    curve->add_option("--tmin", c_tmin, "smallest t");
    curve->add_option("--tmax", c_tmax, "largest t");
    curve->add_option("--steps", c_steps, "number of log-spaced rows (>= 2)");
    curve->add_option("--out", c_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*eval) {
            Complex v;
            double abs_err = 0.0;
            if (func == "P" || func == "Q") {
                if (s_z.empty()) throw CLI::ValidationError("--z is required for P/Q");
                Complex nu = require_complex(s_deg, "--deg");
                Complex mu = require_complex(s_ord, "--ord");
                Complex z = require_complex(s_z, "--z");
                v = (func == "P") ? legendre_p(nu, mu, z) : legendre_q(nu, mu, z);
                abs_err = 1e-10 * std::abs(v);
            } else if (func == "besselI" || func == "besselK") {
                if (s_t.empty()) throw CLI::ValidationError("--t is required for Bessel");
                Complex nu = require_complex(s_ord, "--ord");
                char* end = nullptr;
                double t = std::strtod(s_t.c_str(), &end);
                if (end != s_t.c_str() + s_t.size())
                    throw CLI::ValidationError("--t: cannot parse real literal");
                v = (func == "besselI") ? bessel_i(nu, t) : bessel_k(nu, t);
                abs_err = 1e-12 * std::abs(v);
            } else if (func == "fmap" || func == "wmap") {
                if (s_z.empty()) throw CLI::ValidationError("--z is required");
                Complex z = require_complex(s_z, "--z");
                v = (func == "fmap") ? f_map(z) : w_map(z);
                abs_err = 1e-15 * std::abs(v);
            } else {
                throw CLI::ValidationError("--func must be P, Q, besselI, besselK, fmap or wmap");
            }
            print_value(v, abs_err, format);
            return 0;
        }

        if (*deriv) {
            if (d_index < 0) throw CLI::ValidationError("--index must be >= 0");
            int sign = (d_sign == "-") ? -1 : 1;
            Complex z = require_complex(d_z, "--z");
            Complex deg_param = require_complex(d_deg_param, "--deg-param");
            Complex ord_param = require_complex(d_ord_param, "--ord-param");
            DerivativeResult cf;
            LegendreParams at;
            LegendreKind kind = (d_func == "P") ? LegendreKind::P : LegendreKind::Q;
            DerivWrt wrt = (d_wrt == "order") ? DerivWrt::order : DerivWrt::degree;
            if (wrt == DerivWrt::order) {
                cf = (kind == LegendreKind::Q) ? dq_dorder_at_int(deg_param, d_index, sign, z)
                                               : dp_dorder_at_int(deg_param, d_index, sign, z);
                at = {deg_param - 0.5, Complex(sign * d_index, 0.0), z};
            } else {
                cf = (kind == LegendreKind::P)
                         ? dp_ddegree_at_halfint(d_index, sign, ord_param, z)
                         : dq_ddegree_at_halfint(d_index, sign, ord_param, z);
                at = {Complex(sign * d_index - 0.5, 0.0), ord_param, z};
            }
            json j;
            j["re"] = cf.value.real();
            j["im"] = cf.value.imag();
            j["abs_err"] = cf.error_estimate;
            if (d_check) {
                auto fd = fd_param_derivative(kind, wrt, at);
                double gap = std::abs(cf.value - fd.value) / std::max(1.0, std::abs(cf.value));
                j["oracle_re"] = fd.value.real();
                j["oracle_im"] = fd.value.imag();
                j["oracle_err"] = fd.error_estimate;
                j["rel_gap"] = gap;
                if (d_format == "csv")
                    std::printf("re,im,abs_err,oracle_re,oracle_im,rel_gap\n"
                                "%.17g,%.17g,%.3g,%.17g,%.17g,%.3g\n",
                                cf.value.real(), cf.value.imag(), cf.error_estimate,
                                fd.value.real(), fd.value.imag(), gap);
                else
                    std::printf("%s\n", j.dump().c_str());
                if (gap > 1e-4) return 3;
                return 0;
            }
            if (d_format == "csv")
                std::printf("re,im,abs_err\n%.17g,%.17g,%.3g\n", cf.value.real(),
                            cf.value.imag(), cf.error_estimate);
            else
                std::printf("%s\n", j.dump().c_str());
            return 0;
        }

        if (*verify) {
            std::vector<SuiteReport> reports;
            auto chrono_run = [&](auto&& fn, long samples, double tol, std::uint64_t seed) {
                auto t0 = std::chrono::steady_clock::now();
                SuiteReport rep = fn(samples, tol, seed);
                rep.elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                return rep;
            };
            if (v_suite == "map" || v_suite == "all")
                reports.push_back(chrono_run(run_map_suite, v_samples,
                                             v_tol > 0 ? v_tol : default_tol(1e-12), v_seed));
            if (v_suite == "whipple" || v_suite == "all")
                reports.push_back(chrono_run(run_whipple_suite, v_samples,
                                             v_tol > 0 ? v_tol : default_tol(1e-9), v_seed));
            if (v_suite == "integrals" || v_suite == "all")
                reports.push_back(chrono_run(run_integrals_suite, v_samples,
                                             v_tol > 0 ? v_tol : default_tol(1e-8), v_seed));
            if (v_suite == "derivatives" || v_suite == "all")
                reports.push_back(chrono_run(run_derivatives_suite, v_samples,
                                             v_tol > 0 ? v_tol : default_tol(1e-5), v_seed));
            json out = json::array();
            long failures = 0;
            for (const auto& rep : reports) {
                out.push_back(report_to_json(rep));
                failures += rep.failures;
            }
            std::printf("%s\n", out.dump(2).c_str());
            return failures == 0 ? 0 : 3;
        }

        if (*curve) {
            if (!(c_tmin > 0.0) || !(c_tmin < c_tmax))
                throw domain_error("map-curve: requires 0 < tmin < tmax");
            if (c_steps < 2) throw domain_error("map-curve: requires steps >= 2");
            std::ofstream f(c_out);
            if (!f) {
                std::fprintf(stderr, "map-curve: cannot open '%s' for writing\n", c_out.c_str());
                return 4;
            }
            f << "t,x,y,dist_sq,tag\n";
            char buf[256];
            const double lmin = std::log(c_tmin), lmax = std::log(c_tmax);
            for (long i = 0; i < c_steps; ++i) {
                double t = std::exp(lmin + (lmax - lmin) * double(i) / double(c_steps - 1));
                auto p = boundary_curve(t);
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,\n", p.t, p.x, p.y,
                              p.dist_sq);
                f << buf;
            }
            auto sp = special_points();
            const BoundaryCurvePoint* pts[3] = {&sp.A, &sp.B, &sp.C};
            const char* tags[3] = {"A", "B", "C"};
            for (int i = 0; i < 3; ++i) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%s\n", pts[i]->t,
                              pts[i]->x, pts[i]->y, pts[i]->dist_sq, tags[i]);
                f << buf;
            }
            if (!f.good()) {
                std::fprintf(stderr, "map-curve: write failed for '%s'\n", c_out.c_str());
                return 4;
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 1;
    } catch (const pole_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const constraint_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const overflow_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const convergence_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    }
    return 0;
}
