// cli.cpp - argument handling, literal parsing and record emission.

#include "debyekit/cli.hpp"

#include "debyekit/coeffs.hpp"
#include "debyekit/debye.hpp"
#include "debyekit/hyper.hpp"
#include "debyekit/latecoeff.hpp"
#include "debyekit/oracle.hpp"
#include "debyekit/terminant.hpp"
#include "debyekit/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace dk::cli {

using json = nlohmann::ordered_json;

// ------------------------------------------------------------ literals

namespace {

class LiteralParser {
public:
    explicit LiteralParser(const std::string& s) : s_(s) {}

    Polar parse() {
        Polar v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("cannot parse '" + s_ + "': " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool starts_primary() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '(';
    }

    static Polar real(const Real& x) { return x < 0 ? Polar{-x, pi()} : Polar{x, Real(0)}; }
    static bool is_real(const Polar& v) { return v.r == 0 || abs(sin(v.theta)) * v.r <= eps_digits(30) * v.r; }
    Real as_real(const Polar& v) const {
        if (!is_real(v)) fail("expected a real value");
        return v.value().re;
    }
    static Polar add(const Polar& a, const Polar& b) {
        if (a.r == 0) return b;
        if (b.r == 0) return a;
        if (a.theta == b.theta) return Polar{a.r + b.r, a.theta};
        Cpx z = a.value() + b.value();
        Real r = abs(z);
        return Polar{r, r == 0 ? Real(0) : arg(z)};
    }
    static Polar neg(const Polar& a) {
        if (a.r == 0) return a;
        return Polar{a.r, a.theta > 0 ? Real(a.theta - pi()) : Real(a.theta + pi())};
    }

    Polar expr() {
        Polar v = term();
        for (;;) {
            if (peek('+')) {
                ++i_;
                v = add(v, term());
            } else if (peek('-')) {
                ++i_;
                v = add(v, neg(term()));
            } else {
                return v;
            }
        }
    }
    Polar term() {
        Polar v = unary();
        for (;;) {
            if (peek('*')) {
                ++i_;
                Polar w = unary();
                v = Polar{v.r * w.r, v.theta + w.theta};
            } else if (peek('/')) {
                ++i_;
                Polar w = unary();
                if (w.r == 0) fail("division by zero");
                v = Polar{v.r / w.r, v.theta - w.theta};
            } else if (starts_primary()) {
                Polar w = power();
                v = Polar{v.r * w.r, v.theta + w.theta};
            } else {
                return v;
            }
        }
    }
    Polar unary() {
        if (peek('-')) {
            ++i_;
            return neg(unary());
        }
        if (peek('+')) {
            ++i_;
            return unary();
        }
        return power();
    }
    Polar power() {
        Polar b = primary();
        if (peek('^')) {
            ++i_;
            Real e = as_real(unary());
            if (b.r == 0) return b;
            return Polar{pow(b.r, e), b.theta * e};
        }
        return b;
    }
    Polar primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Polar v = expr();
            if (!peek(')')) fail("missing ')'");
            ++i_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
            std::string id = s_.substr(i_, j - i_);
            i_ = j;
            if (id == "pi") return Polar{pi(), Real(0)};
            if (id == "i") return Polar{Real(1), pi() / 2};
            if (id == "inf") fail("infinite values are not accepted");
            if (!peek('(')) fail("unknown name '" + id + "'");
            ++i_;
            Polar a = expr();
            if (!peek(')')) fail("missing ')'");
            ++i_;
            if (id == "exp") {
                Cpx z = a.value();
                return Polar{exp(z.re), a.r == 0 ? Real(0) : z.im};
            }
            if (id == "sqrt") return Polar{sqrt(a.r), a.theta / 2};
            Real x = as_real(a);
            if (id == "cos") return real(cos(x));
            if (id == "sin") return real(sin(x));
            if (id == "tan") return real(tan(x));
            if (id == "sec") return real(1 / cos(x));
            if (id == "log") {
                if (!(x > 0)) fail("log needs a positive argument");
                return real(log(x));
            }
            fail("unknown function '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
    Polar number() {
        size_t j = i_;
        while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '.')) ++j;
        if (j < s_.size() && (s_[j] == 'e' || s_[j] == 'E')) {
            size_t k = j + 1;
            if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
            if (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) {
                j = k;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            }
        }
        std::string tok = s_.substr(i_, j - i_);
        i_ = j;
        if (std::count(tok.begin(), tok.end(), '.') > 1) fail("malformed number '" + tok + "'");
        return real(Real(tok));
    }
};

}  // namespace

Polar parse_complex(const std::string& text) {
    if (text.empty()) throw DomainError("empty literal");
    return LiteralParser(text).parse();
}

Real parse_real(const std::string& text) {
    Polar v = parse_complex(text);
    if (v.r != 0 && abs(sin(v.theta)) > eps_digits(30)) throw DomainError("'" + text + "' is not real");
    return v.value().re;
}

int default_digits() {
    if (const char* e = std::getenv("DEBYEKIT_DIGITS")) {
        try {
            return std::stoi(e);
        } catch (const std::exception&) {
            throw DomainError("DEBYEKIT_DIGITS is not an integer");
        }
    }
    return 60;
}

// --------------------------------------------------------------- output

namespace {

enum class Format { Text, Json, Csv };

struct Record {
    json fields = json::object();
    std::string text;  // replaces the default key: value rendering in text mode
};

class Emitter {
public:
    Emitter(std::ostream& out, Format f, bool paper, int digits) : out_(out), fmt_(f), paper_(paper), digits_(digits) {}

    std::string real(const Real& x) const {
        if (paper_ && fmt_ != Format::Json) return mantissa_format(x, 23);
        if (x == 0) return "0";
        return x.str(digits_ - 1, std::ios_base::scientific);
    }
    void complex(json& j, const std::string& key, const Cpx& z) const {
        j[key + "_re"] = real(z.re);
        j[key + "_im"] = real(z.im);
    }
    void add(Record r) { recs_.push_back(std::move(r)); }

    void flush() {
        switch (fmt_) {
            case Format::Json:
                for (const auto& r : recs_) out_ << r.fields.dump() << "\n";
                break;
            case Format::Text:
                for (size_t k = 0; k < recs_.size(); ++k) {
                    const auto& r = recs_[k];
                    if (!r.text.empty()) {
                        out_ << r.text << "\n";
                        continue;
                    }
                    if (k) out_ << "\n";
                    for (const auto& [key, v] : r.fields.items()) out_ << key << ": " << plain(v) << "\n";
                }
                break;
            case Format::Csv: {
                std::vector<std::string> cols;
                for (const auto& r : recs_)
                    for (const auto& [key, v] : r.fields.items())
                        if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
                for (size_t c = 0; c < cols.size(); ++c) out_ << (c ? "," : "") << cols[c];
                out_ << "\n";
                for (const auto& r : recs_) {
                    for (size_t c = 0; c < cols.size(); ++c) {
                        if (c) out_ << ",";
                        if (r.fields.contains(cols[c])) out_ << csv_cell(plain(r.fields[cols[c]]));
                    }
                    out_ << "\n";
                }
                break;
            }
        }
        recs_.clear();
    }

private:
    std::ostream& out_;
    Format fmt_;
    bool paper_;
    int digits_;
    std::vector<Record> recs_;

    static std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }
    static std::string csv_cell(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
};

// ------------------------------------------------------------- commands

struct Global {
    int digits = 60;
    bool json = false, csv = false, paper = false;
    std::uint64_t seed = 1;
};

struct FnArgs {
    std::string fn = "H1", nu, x, beta, method = "debye";
    std::optional<int> N, M, K, L;
};

struct Point {
    Polar nu;
    Real x, beta;  // beta = 0 at the turning point
    Regime regime;
};

Point resolve_point(const FnArgs& a) {
    if (a.nu.empty()) throw DomainError("--nu is required");
    if (a.x.empty() == a.beta.empty()) throw DomainError("give exactly one of --x and --beta");
    Point p;
    p.nu = parse_complex(a.nu);
    if (!a.beta.empty()) {
        p.beta = parse_real(a.beta);
        if (!(p.beta > 0 && p.beta < pi() / 2)) throw DomainError("beta must lie in (0, pi/2)");
        p.x = 1 / cos(p.beta);
        p.regime = Regime::Oblique;
    } else {
        p.x = parse_real(a.x);
        if (p.x < 1) throw DomainError("x below 1 is not covered; x must be at least 1");
        p.regime = p.x == 1 ? Regime::Turning : Regime::Oblique;
        p.beta = p.x == 1 ? Real(0) : Real(acos(1 / p.x));
    }
    return p;
}

json point_fields(const Emitter& em, const Point& p) {
    json j;
    j["nu_abs"] = em.real(p.nu.r);
    j["nu_arg"] = em.real(p.nu.theta);
    j["x"] = em.real(p.x);
    j["regime"] = p.regime == Regime::Oblique ? "oblique" : "turning";
    return j;
}

void cmd_eval(const FnArgs& a, const Global& g, Emitter& em) {
    PrecisionContext ctx(g.digits);
    Point p = resolve_point(a);
    Fn fn = parse_fn(a.fn);
    Record r;
    r.fields["command"] = "eval";
    r.fields["fn"] = fn_name(fn);
    r.fields.update(point_fields(em, p));
    r.fields["method"] = a.method;
    if (a.method == "debye") {
        int N = a.N.value_or(optimal_N(p.regime, p.nu.r, p.beta));
        BoundedValue b = debye_eval(fn, p.regime, p.nu, p.beta, N, ctx);
        em.complex(r.fields, "value", b.value);
        r.fields["abs_bound"] = em.real(b.abs_bound);
        r.fields["bound_rule"] = b.bound_rule;
        r.fields["N"] = N;
    } else if (a.method == "oracle") {
        OracleValue o = function_reference(fn, p.nu, p.x, ctx);
        em.complex(r.fields, "value", o.value);
        r.fields["est_err"] = em.real(o.est_err);
    } else if (a.method == "improved") {
        if (fn != Fn::H1) throw DomainError("the improved expansion is available for H1 only");
        int K = a.K.value_or(3), L = a.L.value_or(3);
        ImprovedExpansion e = p.regime == Regime::Oblique
                                  ? hankel1_improved_oblique(p.nu, p.beta, K, L, ctx, a.N, a.M)
                                  : hankel1_improved_turning(p.nu, K, L, ctx, a.N, a.M);
        em.complex(r.fields, "value", e.value);
        if (e.rigorous_bound) r.fields["abs_bound"] = em.real(*e.rigorous_bound);
        r.fields["est_err"] = em.real(e.est_remainder);
        r.fields["N"] = e.N;
        r.fields["M"] = e.M;
        r.fields["K"] = e.K;
        r.fields["L"] = e.L;
        em.complex(r.fields, "head", e.head);
        em.complex(r.fields, "terminant_part", e.terminant_part);
    } else {
        throw DomainError("unknown method '" + a.method + "' (debye, oracle, improved)");
    }
    r.fields["digits"] = g.digits;
    em.add(std::move(r));
}

struct CoeffArgs {
    std::string kind, beta, at;
    int n = 0;
};

void cmd_coeffs(const CoeffArgs& a, const Global& g, Emitter& em) {
    PrecisionContext ctx(g.digits);
    if (a.n < 0) throw DomainError("--n must be non-negative");
    Record r;
    r.fields["command"] = "coeffs";
    r.fields["kind"] = a.kind;
    r.fields["n"] = a.n;
    if (a.kind == "u") {
        r.fields["exact"] = qpoly_to_string(u_poly(a.n).dense());
        if (!a.beta.empty() || !a.at.empty()) {
            Cpx v = a.beta.empty() ? u_eval(a.n, parse_complex(a.at).value(), ctx)
                                   : u_at_beta(a.n, parse_real(a.beta), ctx);
            em.complex(r.fields, "value", v);
        }
    } else if (a.kind == "d") {
        const DCoefficient& d = d_coeff(a.n);
        r.fields["exact"] = d.to_string();
        em.complex(r.fields, "value", Cpx(d.value()));
    } else {
        throw DomainError("coeffs kind must be u or d");
    }
    r.fields["digits"] = g.digits;
    em.add(std::move(r));
}

struct TermArgs {
    std::string p, z, method = "quadrature";
};

void cmd_terminant(const TermArgs& a, const Global& g, Emitter& em) {
    PrecisionContext ctx(g.digits);
    Real p = parse_real(a.p);
    Polar z = parse_complex(a.z);
    Record r;
    r.fields["command"] = "terminant";
    r.fields["p"] = em.real(p);
    r.fields["z_abs"] = em.real(z.r);
    r.fields["z_arg"] = em.real(z.theta);
    if (a.method == "quadrature") {
        TerminantEval t = terminant(p, z, ctx);
        em.complex(r.fields, "value", t.value);
        r.fields["est_err"] = em.real(t.est_err);
        r.fields["method"] = method_name(t.method);
    } else if (a.method == "incgamma") {
        em.complex(r.fields, "value", terminant_via_incgamma(p, z, ctx));
        r.fields["method"] = "incgamma";
    } else if (a.method == "erf") {
        em.complex(r.fields, "value", smoothing_asymptotic(p, z, ctx));
        r.fields["est_err"] = em.real(smoothing_error_scale(z, ctx));
        r.fields["method"] = "erf-asymptotic";
    } else {
        throw DomainError("terminant method must be quadrature, incgamma or erf");
    }
    r.fields["digits"] = g.digits;
    em.add(std::move(r));
}

struct StokesArgs {
    std::string nu_abs = "20", beta = "pi/3";
    bool turning = false;
    int points = 41;
    std::string half_width = "0.8";
};

void cmd_stokes(const StokesArgs& a, const Global& g, Emitter& em) {
    PrecisionContext ctx(g.digits);
    Real nu = parse_real(a.nu_abs), beta = parse_real(a.beta), w = parse_real(a.half_width);
    if (a.points < 2) throw DomainError("--points must be at least 2");
    std::vector<Real> grid;
    for (int k = 0; k < a.points; ++k) grid.push_back(-pi() / 2 + w * (Real(2 * k) / (a.points - 1) - 1));
    Regime rg = a.turning ? Regime::Turning : Regime::Oblique;
    for (const StokesPoint& s : stokes_profile(rg, nu, beta, grid, ctx)) {
        Record r;
        r.fields["command"] = "stokes";
        r.fields["regime"] = a.turning ? "turning" : "oblique";
        r.fields["nu_abs"] = em.real(nu);
        r.fields["theta"] = em.real(s.theta);
        em.complex(r.fields, "measured", s.measured);
        r.fields["predicted"] = em.real(s.predicted);
        r.fields["deviation"] = em.real(abs(s.measured - Cpx(s.predicted)));
        r.fields["digits"] = g.digits;
        em.add(std::move(r));
    }
}

struct LateArgs {
    std::string kind, beta = "pi/3";
    int n = 50, M = -1;
    bool dingle = false;
};

void cmd_late(const LateArgs& a, const Global& g, Emitter& em) {
    PrecisionContext ctx(g.digits);
    Record r;
    r.fields["command"] = "late";
    r.fields["kind"] = a.kind;
    r.fields["n"] = a.n;
    if (a.kind == "u") {
        Real beta = parse_real(a.beta);
        int M = a.M >= 0 ? a.M : optimal_M(a.n, LateKind::U, beta);
        LatePrediction lp = u_late(a.n, beta, M, ctx);
        Cpx exact = u_at_beta(a.n, beta, ctx);
        Cpx v = a.dingle ? lp.first : lp.value;
        r.fields["beta"] = em.real(beta);
        r.fields["M"] = M;
        r.fields["method"] = a.dingle ? "first-singulant-only" : "both-singulants";
        em.complex(r.fields, "value", v);
        em.complex(r.fields, "exact", exact);
        em.complex(r.fields, "error", exact - v);
        if (!a.dingle) {
            r.fields["err_bound"] = em.real(lp.err_bound);
            r.fields["bound_rule"] = lp.bound_rule;
        }
    } else if (a.kind == "d") {
        int M = a.M >= 0 ? a.M : optimal_M(a.n, LateKind::D);
        LatePrediction lp = d_late(a.n, M, ctx);
        Real exact;
        {
            PrecisionGuard pg(g.digits);
            exact = d_coeff(a.n).value();
        }
        r.fields["M"] = M;
        em.complex(r.fields, "value", lp.value);
        em.complex(r.fields, "exact", Cpx(exact));
        em.complex(r.fields, "error", Cpx(exact) - lp.value);
        r.fields["err_bound"] = em.real(lp.err_bound);
        r.fields["bound_rule"] = lp.bound_rule;
    } else if (a.kind == "meissel") {
        MeisselLambda m = meissel_lambda(a.n, ctx);
        r.fields["exact"] = em.real(m.exact);
        r.fields["asymptotic"] = em.real(m.asymptotic);
        r.fields["ratio"] = em.real(m.exact / m.asymptotic);
    } else if (a.kind == "optimal") {
        bool u = !a.beta.empty() && a.beta != "none";
        r.fields["M"] = u ? optimal_M(a.n, LateKind::U, parse_real(a.beta)) : optimal_M(a.n, LateKind::D);
        r.fields["family"] = u ? "U" : "d";
    } else {
        throw DomainError("late kind must be u, d, meissel or optimal");
    }
    r.fields["digits"] = g.digits;
    em.add(std::move(r));
}

void cmd_table(int which, const Global& g, Emitter& em) {
    PrecisionContext ctx(std::max(g.digits, 40));
    auto quantity = [&](const std::string& key, int M, bool first, const std::string& q, const std::string& label,
                        const Real& v) {
        Record r;
        r.fields["command"] = "tables";
        r.fields["table"] = which;
        r.fields["key"] = key;
        r.fields["M"] = M;
        r.fields["quantity"] = q;
        r.fields["value"] = em.real(v);
        std::ostringstream os;
        if (first)
            os << "\n" << (which == 1 ? "beta = " : "n = ") << key << ", M = " << M << "\n";
        os << "  " << label;
        for (size_t k = label.size(); k < 44; ++k) os << ' ';
        os << em.real(v);
        r.text = os.str();
        em.add(std::move(r));
    };
    if (which == 1) {
        for (const Table1Row& t : table1(ctx)) {
            quantity(t.beta_label, t.M, true, "exact", "exact value of U_50(i cot beta)", t.exact);
            quantity(t.beta_label, t.M, false, "first_series", "first singulant series only", t.dingle);
            quantity(t.beta_label, t.M, false, "first_series_error", "error", t.dingle_error);
            quantity(t.beta_label, t.M, false, "both_series", "both singulant series", t.approx);
            quantity(t.beta_label, t.M, false, "both_series_error", "error", t.approx_error);
            quantity(t.beta_label, t.M, false, "bound", "error bound", t.bound);
        }
    } else if (which == 2) {
        for (const Table2Row& t : table2(ctx)) {
            std::string key = std::to_string(t.n);
            quantity(key, t.M, true, "exact", "exact value of d_2n", t.exact);
            quantity(key, t.M, false, "approx", "inverse factorial approximation", t.approx);
            quantity(key, t.M, false, "error", "error", t.error);
            quantity(key, t.M, false, "bound", "error bound (" + t.bound_rule + ")", t.bound);
        }
    } else {
        throw DomainError("table must be 1 or 2");
    }
}

int cmd_verify(const std::string& suite, bool full, const Global& g, Emitter& em) {
    auto results = verify_suite(suite, g.digits, g.seed, full);
    bool all = true;
    for (const CheckResult& c : results) {
        all = all && c.pass;
        Record r;
        r.fields["command"] = "verify";
        r.fields["suite"] = c.suite;
        r.fields["check"] = c.name;
        r.fields["pass"] = c.pass;
        r.fields["measured"] = c.measured;
        r.fields["threshold"] = c.threshold;
        r.fields["count"] = c.count;
        r.fields["seed"] = g.seed;
        r.fields["digits"] = g.digits;
        r.text = std::string(c.pass ? "PASS " : "FAIL ") + c.suite + ": " + c.name + " (measured " + c.measured +
                 ", threshold " + c.threshold + ", " + std::to_string(c.count) + " samples)";
        em.add(std::move(r));
    }
    return all ? Ok : Failure;
}

void error_line(std::ostream& err, const std::string& kind, const std::string& msg, int code) {
    json j;
    j["error"] = kind;
    j["message"] = msg;
    j["exit_code"] = code;
    err << j.dump() << "\n";
}

void add_fn_options(CLI::App* c, FnArgs& a, bool with_method) {
    c->add_option("--fn", a.fn, "H1, H2, J or Y")->check(CLI::IsMember({"H1", "H2", "J", "Y"}));
    c->add_option("--nu", a.nu, "order, e.g. 10, 3+4i, 10*exp(0.3i*pi)")->required();
    c->add_option("--x", a.x, "argument ratio x >= 1 (argument is nu x)");
    c->add_option("--beta", a.beta, "x = sec(beta), e.g. pi/3");
    if (with_method) c->add_option("--method", a.method, "debye, oracle or improved");
    c->add_option("--N", a.N, "truncation (default: near the least term)");
    c->add_option("--M", a.M, "second truncation (improved)");
    c->add_option("--K", a.K, "re-expansion order of the first exponential (improved)");
    c->add_option("--L", a.L, "re-expansion order of the second exponential (improved)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Large-order asymptotics of Bessel and Hankel functions with error bounds"};
    app.name("debyekit");
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    std::optional<int> digits;
    app.add_option("--digits", digits, "working decimal digits (default: DEBYEKIT_DIGITS or 60)");
    app.add_flag("--json", g.json, "one JSON record per line");
    app.add_flag("--csv", g.csv, "comma-separated rows");
    app.add_flag("--paper-format", g.paper, "text/CSV reals as 0.ddd x 10^E with 23 significant digits");
    app.add_option("--seed", g.seed, "seed for randomised sweeps");

    FnArgs eval_a, oracle_a, debye_a, hyper_a;
    auto* eval = app.add_subcommand("eval", "evaluate H1, H2, J or Y at order nu and argument nu x");
    add_fn_options(eval, eval_a, true);
    auto* oracle = app.add_subcommand("oracle", "reference value by quadrature");
    add_fn_options(oracle, oracle_a, false);
    auto* debye = app.add_subcommand("debye", "truncated expansion with its error bound");
    add_fn_options(debye, debye_a, false);

    CoeffArgs co;
    auto* coeffs = app.add_subcommand("coeffs", "exact expansion coefficients");
    coeffs->add_option("kind", co.kind, "u or d")->required();
    coeffs->add_option("--n", co.n, "index")->required();
    coeffs->add_option("--beta", co.beta, "evaluate U_n at i cot(beta)");
    coeffs->add_option("--at", co.at, "evaluate U_n at this point");

    TermArgs ta;
    auto* term = app.add_subcommand("terminant", "scaled Terminant function T_p(z)");
    term->add_option("--p", ta.p, "order p > 0")->required();
    term->add_option("--z", ta.z, "argument, arg z in (-3 pi, 3 pi)")->required();
    term->add_option("--method", ta.method, "quadrature, incgamma or erf");

    auto* hyper = app.add_subcommand("hyper", "exponentially improved expansions");
    hyper->require_subcommand(1);
    auto* hyper_eval = hyper->add_subcommand("eval", "improved expansion of H1");
    add_fn_options(hyper_eval, hyper_a, false);
    StokesArgs sa;
    auto* stokes = hyper->add_subcommand("stokes", "switching profile across arg nu = -pi/2");
    stokes->add_option("--nu-abs", sa.nu_abs, "|nu| (at least 10)");
    stokes->add_option("--beta", sa.beta, "x = sec(beta)");
    stokes->add_flag("--turning", sa.turning, "use x = 1");
    stokes->add_option("--points", sa.points, "grid points");
    stokes->add_option("--half-width", sa.half_width, "grid half-width in arg nu (at most 1)");

    LateArgs la;
    int late_table = 0;
    auto* late = app.add_subcommand("late", "late-coefficient approximations");
    late->add_option("kind", la.kind, "u, d, meissel, optimal, table1, table2")->required();
    late->add_option("--n", la.n, "index");
    late->add_option("--M", la.M, "truncation (default: least bound)");
    late->add_option("--beta", la.beta, "beta for U_n; 'none' selects d for optimal");
    late->add_flag("--dingle", la.dingle, "first singulant series only");

    int which = 0;
    auto* tables = app.add_subcommand("tables", "worked-example tables");
    tables->add_option("which", which, "1 (U_50) or 2 (d_2n)")->required();

    std::string suite = "all";
    bool full = false;
    auto* verify = app.add_subcommand("verify", "self-check suites");
    verify->add_option("suite", suite, "bounds, resurgence, coeffs, terminant, stokes, inequalities or all");
    verify->add_flag("--full", full, "acceptance-sized grids");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        error_line(err, "parse", e.what(), ParseFailure);
        return ParseFailure;
    }

    int code = Ok;
    try {
        g.digits = digits.value_or(default_digits());
        if (g.digits < 15) throw DomainError("--digits must be at least 15");
        if (g.json && g.csv) throw DomainError("choose one of --json and --csv");
        Format f = g.json ? Format::Json : g.csv ? Format::Csv : Format::Text;
        PrecisionGuard pg(g.digits);
        Emitter em(out, f, g.paper, g.digits);
        if (*eval) {
            cmd_eval(eval_a, g, em);
        } else if (*oracle) {
            oracle_a.method = "oracle";
            cmd_eval(oracle_a, g, em);
        } else if (*debye) {
            debye_a.method = "debye";
            cmd_eval(debye_a, g, em);
        } else if (*coeffs) {
            cmd_coeffs(co, g, em);
        } else if (*term) {
            cmd_terminant(ta, g, em);
        } else if (*hyper_eval) {
            hyper_a.method = "improved";
            cmd_eval(hyper_a, g, em);
        } else if (*stokes) {
            cmd_stokes(sa, g, em);
        } else if (*late) {
            if (la.kind == "table1" || la.kind == "table2")
                late_table = la.kind == "table1" ? 1 : 2;
            if (late_table)
                cmd_table(late_table, g, em);
            else
                cmd_late(la, g, em);
        } else if (*tables) {
            cmd_table(which, g, em);
        } else if (*verify) {
            code = cmd_verify(suite, full, g, em);
        }
        em.flush();
    } catch (const SectorError& e) {
        error_line(err, "sector", e.what(), SectorViolation);
        return SectorViolation;
    } catch (const BranchError& e) {
        error_line(err, "sector", e.what(), SectorViolation);
        return SectorViolation;
    } catch (const QuadratureError& e) {
        error_line(err, "quadrature", e.what(), QuadratureFailure);
        return QuadratureFailure;
    } catch (const DomainError& e) {
        error_line(err, "domain", e.what(), ParseFailure);
        return ParseFailure;
    } catch (const RangeError& e) {
        error_line(err, "domain", e.what(), ParseFailure);
        return ParseFailure;
    } catch (const std::exception& e) {
        error_line(err, "internal", e.what(), Failure);
        return Failure;
    }
    return code;
}

}  // namespace dk::cli
