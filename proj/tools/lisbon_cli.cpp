#include <complex>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lisbon/contour.hpp"
#include "lisbon/entire_fn.hpp"
#include "lisbon/report.hpp"
#include "lisbon/systems.hpp"
#include "lisbon/traces.hpp"

using namespace lisbon;
using cplx = std::complex<double>;

namespace {

constexpr const char* kToolVersion = "1.0.0";

cplx parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty complex literal");
    auto to_num = [](std::string t) {
        if (t.empty() || t == "+") t += "1";
        if (t == "-") t = "-1";
        size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw ParseError("bad numeric literal: " + t);
        return v;
    };
    if (s.back() != 'i') return {to_num(s), 0.0};
    s.pop_back();
    // Split real and imaginary at the last top-level +/- (not an exponent sign).
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            return {to_num(s.substr(0, i)), to_num(s.substr(i))};
    }
    return {0.0, to_num(s)};
}

SigmaPoint parse_sigma_arg(const std::string& text) {
    std::vector<cplx> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_complex(item));
    Eigen::VectorXcd v(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) v(static_cast<int>(i)) = vals[i];
    return SigmaPoint(std::move(v));
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os << std::setprecision(12);
    if (std::abs(z.imag()) < 1e-9 * (1.0 + std::abs(z.real()))) {
        os << z.real();
    } else {
        os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

std::string fmt(const Eigen::VectorXcd& v) {
    std::string out = "(";
    for (int i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt(v(i));
    }
    return out + ")";
}

struct GlobalOpts {
    QuadratureSpec quad;
    unsigned seed = 0;
    bool json = false;
};

int emit(const std::vector<Report>& reports, const GlobalOpts& g) {
    if (g.json) {
        std::cout << reports_to_json(reports).dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.check;
            for (const auto& [key, val] : r.params) std::cout << " " << key << "=" << val;
            std::cout << " residual=" << std::setprecision(6) << r.residual
                      << " tol=" << r.tolerance << "\n";
        }
    }
    return all_pass(reports) ? 0 : 1;
}

Report value_report(const std::string& check, std::map<std::string, std::string> params) {
    Report r;
    r.check = check;
    r.params = std::move(params);
    r.pass = true;
    return r;
}

int run_table(bool dn, int k, int max_m, const GlobalOpts& g) {
    std::vector<Report> reports;
    int lo = dn ? -k + 1 : 0;
    for (int m = lo; m <= max_m; ++m) {
        SigmaPoly p = dn ? derived_newton_symbolic(k, m) : newton_symbolic(k, m);
        std::string label = (dn ? "DN_" : "N_") + std::to_string(m);
        if (!g.json) std::cout << label << " = " << p.to_string() << "\n";
        reports.push_back(value_report(dn ? "dn-table" : "newton-table",
                                       {{"k", std::to_string(k)},
                                        {"m", std::to_string(m)},
                                        {"polynomial", p.to_string()}}));
    }
    if (g.json) std::cout << reports_to_json(reports).dump(2) << "\n";
    return 0;
}

int run_eval(const std::string& kind, const std::string& fspec, const SigmaPoint& sigma,
             bool cross, const GlobalOpts& g) {
    EntireFn f = EntireFn::parse(fspec);
    std::vector<Report> reports;
    std::string value;
    double deviation = -1.0;
    if (kind == "F") {
        cplx v = lisbon_F(f, sigma, g.quad);
        value = fmt(v);
        if (cross) deviation = std::abs(v - trace_T(f, sigma));
    } else if (kind == "Ftilde") {
        cplx v = lisbon_Ftilde(f, sigma, g.quad);
        value = fmt(v);
        if (cross) deviation = std::abs(v - trace_form(f, sigma));
    } else if (kind == "Phi") {
        Eigen::VectorXcd v = lisbon_Phi(f, sigma, g.quad);
        value = fmt(v);
        if (cross) deviation = (v - vector_trace(f, sigma)).cwiseAbs().maxCoeff();
    } else if (kind == "T") {
        value = fmt(trace_T(f, sigma));
    } else if (kind == "Ttilde") {
        value = fmt(trace_form(f, sigma));
    } else if (kind == "VT") {
        value = fmt(vector_trace(f, sigma));
    } else if (kind == "interp") {
        value = fmt(lagrange_interp(f, sigma, g.quad).coeffs);
    } else {
        throw CLI::ValidationError("unknown eval kind: " + kind);
    }
    if (!g.json) {
        std::cout << kind << " = " << value << "\n";
        if (deviation >= 0.0)
            std::cout << "cross-check |L-T| = " << std::setprecision(6) << deviation << "\n";
    } else {
        std::map<std::string, std::string> params{{"kind", kind}, {"f", f.describe()},
                                                  {"value", value}};
        Report r = value_report("eval", std::move(params));
        if (deviation >= 0.0) r.residual = deviation;
        reports.push_back(std::move(r));
        std::cout << reports_to_json(reports).dump(2) << "\n";
    }
    return 0;
}

void suite_equivalence(std::vector<Report>& out, int k, const std::string& fspec, int nsamples,
                       const GlobalOpts& g) {
    EntireFn f = EntireFn::parse(fspec);
    auto samples = make_sigma_samples(k, nsamples, g.seed);
    double dF = 0, dFt = 0, dPhi = 0;
    for (const auto& pt : samples) {
        dF = std::max(dF, std::abs(lisbon_F(f, pt, g.quad) - trace_T(f, pt)));
        dFt = std::max(dFt, std::abs(lisbon_Ftilde(f, pt, g.quad) - trace_form(f, pt)));
        dPhi = std::max(dPhi, (lisbon_Phi(f, pt, g.quad) - vector_trace(f, pt))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    std::map<std::string, std::string> params{{"k", std::to_string(k)},
                                              {"f", f.describe()},
                                              {"samples", std::to_string(nsamples)},
                                              {"seed", std::to_string(g.seed)}};
    auto mk = [&](const std::string& name, double residual) {
        Report r;
        r.check = name;
        r.params = params;
        r.residual = residual;
        r.tolerance = 1e-9;
        r.pass = residual < r.tolerance;
        out.push_back(std::move(r));
    };
    mk("equivalence/F", dF);
    mk("equivalence/Ftilde", dFt);
    mk("equivalence/Phi", dPhi);
}

void suite_systems(std::vector<Report>& out, int k, int max_m, int nsamples,
                   const GlobalOpts& g) {
    OperatorSystem s1 = make_S1(k), s2 = make_S2(k);
    for (int m = 0; m <= max_m; ++m) {
        Report a = check_system_symbolic(s1, newton_symbolic(k, m));
        a.check = "systems/S1-newton";
        a.params["m"] = std::to_string(m);
        out.push_back(std::move(a));
        Report b = check_system_symbolic(s2, derived_newton_symbolic(k, m));
        b.check = "systems/S2-derived-newton";
        b.params["m"] = std::to_string(m);
        out.push_back(std::move(b));
    }
    if (nsamples > 0) {
        auto samples = make_sigma_samples(k, nsamples, g.seed);
        SigmaFunctional trF = [&g](const SigmaPoint& s) {
            return lisbon_F(EntireFn::exponential(1.0), s, g.quad);
        };
        Report n = check_system_numeric(s1, trF, samples, 1e-6, g.quad);
        n.check = "systems/S1-exp-numeric";
        n.params["seed"] = std::to_string(g.seed);
        out.push_back(std::move(n));
    }
}

void suite_kernels(std::vector<Report>& out, int k, int max_w) {
    for (long w = 0; w <= max_w; ++w) {
        Report r;
        r.check = "kernels/graded";
        r.params = {{"k", std::to_string(k)}, {"w", std::to_string(w)}};
        KernelBasis s2b = graded_kernel(make_S2(k), w);
        KernelBasis s0b = graded_kernel(make_S0(k), w);
        bool ok = s2b.basis.size() == 1 && s0b.basis.size() == 1;
        if (ok && w > 0) {
            SigmaPoly dn = derived_newton_symbolic(k, static_cast<int>(w));
            SigmaPoly nn = newton_symbolic(k, static_cast<int>(w));
            // Span check: each basis element must be proportional to DN_w / N_w.
            auto prop = [](const SigmaPoly& a, const SigmaPoly& b) {
                if (a.terms().size() != b.terms().size()) return false;
                GaussianRational ratio = a.terms().begin()->second / b.terms().begin()->second;
                for (const auto& [e, c] : b.terms()) {
                    auto it = a.terms().find(e);
                    if (it == a.terms().end() || it->second != ratio * c) return false;
                }
                return true;
            };
            ok = prop(s2b.basis[0], dn) && prop(s0b.basis[0], nn);
        }
        r.params["dim_S2"] = std::to_string(s2b.basis.size());
        r.params["dim_S0"] = std::to_string(s0b.basis.size());
        r.pass = ok;
        out.push_back(std::move(r));
    }
}

void suite_lemmas(std::vector<Report>& out, const std::string& lemma, int k, int max_m) {
    bool all = lemma == "all";
    if (all || lemma == "derive") {
        Report r;
        r.check = "lemmas/derive";
        r.params = {{"k", std::to_string(k)}, {"max_m", std::to_string(max_m)}};
        r.pass = true;
        for (int m = 1; m <= max_m; ++m) {
            SigmaPoly lhs = weyl_apply(make_U_minus1(k), derived_newton_symbolic(k, m));
            SigmaPoly rhs = GaussianRational(static_cast<long>(m + k - 1)) *
                            derived_newton_symbolic(k, m - 1);
            if (lhs != rhs) r.pass = false;
        }
        out.push_back(std::move(r));
    }
    if (all || lemma == "cste") {
        Report r;
        r.check = "lemmas/cste-sol";
        r.params = {{"k", std::to_string(k)}};
        auto sols = constant_S3_solutions(k);
        r.pass = sols.size() == 1;
        if (r.pass)
            for (int i = 0; i < k; ++i)
                if (sols[0][i] != (i == k - 1 ? Rational(1) : Rational(0))) r.pass = false;
        out.push_back(std::move(r));
    }
    if (all || lemma == "closed") {
        Report r;
        r.check = "lemmas/closedness";
        r.params = {{"k", std::to_string(k)}, {"max_m", std::to_string(max_m)}};
        r.pass = true;
        for (int n = 0; n <= max_m; ++n)
            if (!closedness_check_symbolic(phi_symbolic_power(k, n)).pass) r.pass = false;
        out.push_back(std::move(r));
    }
    if (all || lemma == "poids") {
        for (int m = 1; m <= max_m; ++m) {
            Report r = u_minus1_injectivity(k, m);
            r.check = "lemmas/poids";
            out.push_back(std::move(r));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lisbon integrals: trace identities, holonomic systems, and tables"};
    app.require_subcommand(1);

    GlobalOpts g;
    int m_start = g.quad.m_start, m_cap = g.quad.m_cap;
    app.add_option("--tol", g.quad.tol, "quadrature tolerance");
    app.add_option("--m-start", m_start, "initial node count (power of two)");
    app.add_option("--m-cap", m_cap, "node-count cap");
    app.add_option("--seed", g.seed, "RNG seed for sampling suites");
    app.add_flag("--json", g.json, "machine-readable JSON output");

    int k = 2, max_m = 6, max_w = 4, nsamples = 5;
    std::string fspec = "exp:1", sigma_text, kind, suite, lemma = "all";
    bool cross = false;

    CLI::App* dn = app.add_subcommand("dn-table", "derived Newton polynomial table");
    dn->add_option("--k", k)->required();
    dn->add_option("--max-m", max_m)->required();

    CLI::App* nt = app.add_subcommand("newton-table", "Newton power-sum table");
    nt->add_option("--k", k)->required();
    nt->add_option("--max-m", max_m)->required();

    CLI::App* ev = app.add_subcommand("eval", "evaluate an integral or trace at sigma");
    ev->add_option("kind", kind, "F|Ftilde|Phi|T|Ttilde|VT|interp")->required();
    ev->add_option("--f", fspec, "poly:c0,c1,... or exp:a")->required();
    ev->add_option("--sigma", sigma_text, "comma-separated complex literals a+bi")->required();
    ev->add_option("--k", k, "expected arity (checked against sigma)");
    ev->add_flag("--cross-check", cross, "also print the |L-T| deviation");

    CLI::App* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite, "equivalence|systems|kernels|lemmas|all")->required();
    vf->add_option("--k", k);
    vf->add_option("--max-m", max_m);
    vf->add_option("--max-w", max_w);
    vf->add_option("--samples", nsamples);
    vf->add_option("--f", fspec);
    vf->add_option("--lemma", lemma, "derive|cste|closed|poids|all");

    CLI11_PARSE(app, argc, argv);
    g.quad.m_start = m_start;
    g.quad.m_cap = m_cap;

    try {
        if (dn->parsed()) return run_table(true, k, max_m, g);
        if (nt->parsed()) return run_table(false, k, max_m, g);
        if (ev->parsed()) {
            SigmaPoint sigma = parse_sigma_arg(sigma_text);
            if (ev->count("--k") && k != sigma.k())
                throw CLI::ValidationError("--k does not match the sigma arity");
            return run_eval(kind, fspec, sigma, cross, g);
        }
        std::vector<Report> reports;
        if (suite == "equivalence" || suite == "all")
            suite_equivalence(reports, k, fspec, nsamples, g);
        if (suite == "systems" || suite == "all") suite_systems(reports, k, max_m, nsamples, g);
        if (suite == "kernels" || suite == "all") suite_kernels(reports, k, max_w);
        if (suite == "lemmas" || suite == "all") suite_lemmas(reports, lemma, k, max_m);
        if (reports.empty()) throw CLI::ValidationError("unknown suite: " + suite);
        return emit(reports, g);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
