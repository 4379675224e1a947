#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ringhelm/coeffs.hpp"
#include "ringhelm/ringfield.hpp"

namespace ringhelm::cli {

namespace {

using json = nlohmann::json;

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// One output row: ordered (column, value) pairs rendered as CSV or a JSON object.
class Record {
public:
    Record& add(const std::string& key, double v)
    {
        cols_.emplace_back(key, fmt(v));
        obj_[key] = num(v);
        return *this;
    }
    Record& add(const std::string& key, int v)
    {
        cols_.emplace_back(key, std::to_string(v));
        obj_[key] = v;
        return *this;
    }
    Record& add(const std::string& key, bool v)
    {
        cols_.emplace_back(key, v ? "1" : "0");
        obj_[key] = v;
        return *this;
    }
    Record& add(const std::string& key, const std::string& v)
    {
        cols_.emplace_back(key, v);
        obj_[key] = v;
        return *this;
    }
    std::string header() const { return join(true); }
    std::string row() const { return join(false); }
    const json& object() const { return obj_; }

private:
    std::string join(bool keys) const
    {
        std::string s;
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (i) s += ',';
            s += keys ? cols_[i].first : cols_[i].second;
        }
        return s;
    }
    std::vector<std::pair<std::string, std::string>> cols_;
    json obj_ = json::object();
};

class Emitter {
public:
    Emitter(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}
    void emit(const Record& r)
    {
        if (json_) {
            out_ << r.object().dump() << '\n';
            return;
        }
        if (!header_done_) {
            out_ << r.header() << '\n';
            header_done_ = true;
        }
        out_ << r.row() << '\n';
    }

private:
    std::ostream& out_;
    bool json_;
    bool header_done_ = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --tol, else RING_HELMHOLTZ_TOL, else `fallback`.
SeriesPolicy make_policy(const std::optional<double>& tol, double fallback)
{
    SeriesPolicy p;
    p.rel_tol = fallback;
    if (tol) {
        p.rel_tol = *tol;
    } else if (const char* env = std::getenv("RING_HELMHOLTZ_TOL"); env && *env) {
        char* end = nullptr;
        p.rel_tol = std::strtod(env, &end);
        if (end == env || *end != '\0') throw InputError("RING_HELMHOLTZ_TOL is not a number");
    }
    try {
        p.validate();
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    return p;
}

Record coeff_record(const RingConfig& c, const CoeffResult& r)
{
    Record rec;
    rec.add("method", std::string(to_string(r.report.method)))
        .add("m", c.m)
        .add("beta_re", c.beta.real())
        .add("beta_im", c.beta.imag())
        .add("r", c.r)
        .add("R", c.R)
        .add("z", c.z)
        .add("Z", c.Z)
        .add("re", r.value.total.real())
        .add("im", r.value.total.imag())
        .add("plus_re", r.value.plus.real())
        .add("plus_im", r.value.plus.imag())
        .add("minus_re", r.value.minus.real())
        .add("minus_im", r.value.minus.imag())
        .add("terms_used", r.report.terms_used)
        .add("est_error", r.report.est_error)
        .add("converged", r.report.converged)
        .add("digits", r.report.working_digits);
    return rec;
}

// Largest pairwise difference relative to the largest magnitude.
double spread(const std::vector<cplx>& v)
{
    double worst = 0, scale = 0;
    for (const cplx& a : v) {
        scale = std::max(scale, std::abs(a));
        for (const cplx& b : v) worst = std::max(worst, std::abs(a - b));
    }
    return scale > 0 ? worst / scale : worst;
}

// ---- coeff ----------------------------------------------------------------

struct CoeffArgs {
    int m = 0;
    double beta_re = 0, beta_im = 0, r = 1, R = 1, z = 0, Z = 0;
    std::string method = "auto";
    std::optional<double> tol;
    bool json = false;
};

int cmd_coeff(const CoeffArgs& a, std::ostream& out, std::ostream& err)
{
    const RingConfig c{a.m, cplx(a.beta_re, a.beta_im), a.r, a.R, a.z, a.Z};
    c.validate();
    derive(c);
    const SeriesPolicy policy = make_policy(a.tol, 1e-13);
    Emitter em(out, a.json);
    if (a.method != "all") {
        const CoeffResult r = compute_coefficient(c, method_from_string(a.method), policy);
        em.emit(coeff_record(c, r));
        return r.report.converged ? kOk : kNotConverged;
    }
    std::vector<cplx> values;
    bool all_converged = true;
    for (Method m : coefficient_methods()) {
        if (!admits(m, c)) continue;
        const CoeffResult r = compute_coefficient(c, m, policy);
        em.emit(coeff_record(c, r));
        all_converged = all_converged && r.report.converged;
        if (r.report.converged) values.push_back(r.value.total);
    }
    const double s = spread(values);
    if (a.json)
        out << json{{"max_spread", num(s)}, {"methods_compared", int(values.size())}}.dump() << '\n';
    else
        err << "max_spread," << fmt(s) << '\n';
    return all_converged ? kOk : kNotConverged;
}

// ---- table ----------------------------------------------------------------

int cmd_table(int which, const std::optional<double>& tol, bool as_json, std::ostream& out)
{
    const SeriesPolicy policy = make_policy(tol, 1e-10);
    Emitter em(out, as_json);
    bool ok = true;
    auto tail = [&](Record& rec, const CoeffResult& v) {
        rec.add("re", v.value.total.real())
            .add("im", v.value.total.imag())
            .add("method", std::string(to_string(v.report.method)))
            .add("est_error", v.report.est_error)
            .add("converged", v.report.converged);
        ok = ok && v.report.converged;
        em.emit(rec);
    };
    if (which == 2) {
        struct Row {
            int m;
            double beta, r, z;
        };
        const Row rows[] = {{0, 2, 0.5, 0.5}, {0, 2, 0.5, 1.5}, {0, 2, 0.5, 5},  {0, 2, 0.5, 10}, {0, 2, 0.5, 20},
                            {3, 5, 1.5, 0.5}, {3, 5, 1.5, 1},   {3, 5, 1.5, 5},  {3, 5, 1.5, 10}, {3, 5, 1.5, 20}};
        for (const Row& row : rows) {
            const RingConfig c{row.m, row.beta, row.r, 1.0, row.z, 0.0};
            const CoeffResult h = compute_coefficient(c, Method::hankel, policy);
            const CoeffResult l = compute_coefficient(c, Method::legendre, policy);
            Record rec;
            rec.add("m", row.m).add("beta", row.beta).add("r", row.r).add("z", row.z);
            rec.add("N1", h.report.terms_used).add("N2", l.report.terms_used);
            ok = ok && h.report.converged;
            tail(rec, l);
        }
    } else if (which == 3) {
        for (double z : {0.5, 1.0, 5.0, 50.0, 100.0, 200.0, 1000.0, 5000.0, 10000.0, 1e7}) {
            const RingConfig c{1, 6.0, 1.5, 1.0, z, 0.0};
            const CoeffResult h = compute_coefficient(c, Method::hankel, policy);
            Record rec;
            rec.add("z", z).add("N1", h.report.terms_used);
            tail(rec, h);
        }
    } else if (which == 4) {
        for (int e = 0; e <= 9; ++e) {
            const double z = std::pow(10.0, -e);
            const RingConfig c{1, 1.0, 1.0, 1.0, z, 0.0};
            const CoeffResult l = compute_coefficient(c, Method::legendre, policy);
            Record rec;
            rec.add("z", z).add("N2", l.report.terms_used);
            tail(rec, l);
        }
    } else {
        throw InputError("table must be 2, 3 or 4");
    }
    return ok ? kOk : kNotConverged;
}

// ---- crosscheck -----------------------------------------------------------

struct CrossArgs {
    int count = 20;
    int imaginary = 5;
    unsigned long seed = 1;
    double limit = 1e-8;
    double limit_imag = 1e-9;
    std::optional<double> tol;
    bool json = false;
};

int cmd_crosscheck(const CrossArgs& a, std::ostream& out)
{
    const SeriesPolicy policy = make_policy(a.tol, 1e-13);
    std::mt19937_64 rng(a.seed);
    Emitter em(out, a.json);
    bool ok = true;
    const std::vector<Method> real_set = {Method::closed_form, Method::hankel,   Method::bessel_jy, Method::legendre_q,
                                          Method::p_series,    Method::angular, Method::spectral};
    const std::vector<Method> imag_set = {Method::closed_form, Method::hankel,  Method::bessel_jy, Method::legendre,
                                          Method::p_series,    Method::angular, Method::evanescent};
    for (int i = 0; i < a.count + a.imaginary; ++i) {
        RingConfig c = moderate_config(rng);
        const bool imag = i >= a.count;
        if (imag) c.beta = cplx(0, std::abs(c.beta));
        const Dimensionless d = derive(c);
        std::vector<cplx> values;
        bool converged = true;
        for (Method m : imag ? imag_set : real_set) {
            const CoeffResult r = compute_coefficient(c, m, policy);
            values.push_back(r.value.total);
            converged = converged && r.report.converged;
        }
        const double s = spread(values);
        const bool pass = std::isfinite(s) && s <= (imag ? a.limit_imag : a.limit);
        ok = ok && pass;
        Record rec;
        rec.add("case", i)
            .add("m", c.m)
            .add("beta_re", c.beta.real())
            .add("beta_im", c.beta.imag())
            .add("r", c.r)
            .add("z", c.z)
            .add("omega", d.omega)
            .add("gamma_abs", std::abs(d.gamma))
            .add("methods", int(values.size()))
            .add("spread", s)
            .add("all_converged", converged)
            .add("pass", pass);
        em.emit(rec);
    }
    return ok ? kOk : kNotConverged;
}

// ---- field ----------------------------------------------------------------

std::vector<double> parse_range(const std::string& spec, const char* what)
{
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InputError(std::string("bad ") + what + " range: " + spec);
        return v;
    };
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() == 1) return {number(parts[0])};
    if (parts.size() != 3) throw InputError(std::string("bad ") + what + " range: " + spec);
    const double lo = number(parts[0]), hi = number(parts[1]);
    const double nd = number(parts[2]);
    if (!(nd >= 1) || nd != std::floor(nd)) throw InputError(std::string("bad ") + what + " count: " + spec);
    const int n = int(nd);
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return v;
}

// CSV of (phi, f) samples with phi_j = 2 pi j / N. An optional header and
// '#' comment lines are skipped.
std::vector<double> read_source(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open source file " + path);
    std::vector<double> phi, f;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string a, b, extra;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || std::getline(ss, extra, ','))
            throw InputError("source line " + std::to_string(lineno) + ": expected two columns");
        char* end_a = nullptr;
        char* end_b = nullptr;
        const double pa = std::strtod(a.c_str(), &end_a);
        const double fb = std::strtod(b.c_str(), &end_b);
        const bool numeric = end_a != a.c_str() && *end_a == '\0' && end_b != b.c_str() && *end_b == '\0';
        if (!numeric) {
            if (phi.empty() && lineno == 1) continue;  // header
            throw InputError("source line " + std::to_string(lineno) + ": not numeric");
        }
        if (!std::isfinite(pa) || !std::isfinite(fb))
            throw InputError("source line " + std::to_string(lineno) + ": non-finite value");
        phi.push_back(pa);
        f.push_back(fb);
    }
    const int N = int(f.size());
    if (N < 4) throw InputError("source needs at least 4 samples");
    for (int j = 0; j < N; ++j) {
        const double expect = 2 * std::numbers::pi * j / N;
        if (std::abs(phi[j] - expect) > 1e-8)
            throw InputError("source samples must lie on phi_j = 2 pi j / N (row " + std::to_string(j + 1) + ")");
    }
    return f;
}

struct FieldArgs {
    std::string source;
    std::string r = "1.5", phi = "0", z = "0.5";
    double beta_re = 0, beta_im = 0, R = 1, Z = 0;
    std::optional<int> M;
    std::string method = "auto";
    std::optional<double> tol;
    bool json = false;
};

int cmd_field(const FieldArgs& a, std::ostream& out, std::ostream& err)
{
    const std::vector<double> f = read_source(a.source);
    const int N = int(f.size());
    const int M = a.M ? *a.M : std::min(40, (N - 4) / 4);
    if (M < 0 || M > N / 2 - 1)
        throw InputError("M = " + std::to_string(M) + " needs more than " + std::to_string(2 * M + 1) + " samples");
    const FourierSource src = analyze_source(f, M);
    if (src.aliasing_warning) err << "warning: fewer than 4M+4 samples; high modes may be aliased\n";
    const Method method = method_from_string(a.method);
    const SeriesPolicy policy = make_policy(a.tol, 1e-13);
    const std::vector<double> rs = parse_range(a.r, "r"), phis = parse_range(a.phi, "phi"), zs = parse_range(a.z, "z");
    const cplx beta(a.beta_re, a.beta_im);
    RingConfig{0, beta, 1.0, a.R, 0.0, a.Z}.validate();

    Emitter em(out, a.json);
    bool ok = true;
    for (double r : rs)
        for (double phi : phis)
            for (double z : zs) {
                Record rec;
                rec.add("r", r).add("phi", phi).add("z", z);
                const FieldPoint p{beta, r, phi, z, a.R, a.Z};
                try {
                    RingConfig{0, beta, r, a.R, z, a.Z}.validate();
                    const FieldValue v = ring_solution(src, p, method, policy);
                    std::string names;
                    std::set<Method> seen;
                    for (Method m : v.methods) {
                        if (m == Method::automatic || !seen.insert(m).second) continue;
                        if (!names.empty()) names += '+';
                        names += to_string(m);
                    }
                    if (names.empty()) names = "none";
                    rec.add("re", v.value.real()).add("im", v.value.imag()).add("est_error", v.est_error);
                    rec.add("method", names).add("status", std::string(v.converged ? "ok" : "not_converged"));
                    ok = ok && v.converged;
                } catch (const geometry_error&) {
                    const double nan = std::nan("");
                    rec.add("re", nan).add("im", nan).add("est_error", nan);
                    rec.add("method", std::string("none")).add("status", std::string("on_ring"));
                }
                em.emit(rec);
            }
    return ok ? kOk : kNotConverged;
}

}  // namespace

RingConfig moderate_config(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::uniform_int_distribution<int> Um(0, 4);
    const int m = Um(rng);
    const double omega = 1.2 + 3.8 * U(rng);
    const double gamma = 0.5 + 7.5 * U(rng);
    const double r = 0.7 + 0.8 * U(rng);
    // 2 r omega = r^2 + 1 + h^2 and far^2 = 2 r (omega + 1) with R = 1.
    const double h = std::sqrt(2 * r * omega - r * r - 1);
    const double beta = gamma / std::sqrt(2 * r * (omega + 1));
    return RingConfig{m, beta, r, 1.0, h, 0.0};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fourier coefficients of the ring-source Helmholtz Green function", "ringhelm"};
    app.require_subcommand(1);

    CoeffArgs ca;
    auto* coeff = app.add_subcommand("coeff", "Evaluate one coefficient G_H^m");
    coeff->add_option("-m", ca.m, "Azimuthal mode")->check(CLI::NonNegativeNumber);
    coeff->add_option("--beta,--beta-re", ca.beta_re, "Re(beta)");
    coeff->add_option("--beta-im", ca.beta_im, "Im(beta), >= 0");
    coeff->add_option("-r", ca.r, "Field radius")->required();
    coeff->add_option("-R", ca.R, "Ring radius");
    coeff->add_option("-z", ca.z, "Field height")->required();
    coeff->add_option("-Z", ca.Z, "Ring height");
    coeff->add_option("--method", ca.method, "Method name, 'auto' or 'all'");
    coeff->add_option("--tol", ca.tol, "Relative tolerance");
    coeff->add_flag("--json", ca.json, "JSON records instead of CSV");

    int which = 0;
    std::optional<double> table_tol;
    bool table_json = false;
    auto* table = app.add_subcommand("table", "Regenerate one of the reference tables");
    table->add_option("which", which, "2, 3 or 4")->required();
    table->add_option("--tol", table_tol, "Relative tolerance (default 1e-10)");
    table->add_flag("--json", table_json, "JSON records instead of CSV");

    CrossArgs xa;
    auto* cross = app.add_subcommand("crosscheck", "Compare all methods on random moderate configurations");
    cross->add_option("--count", xa.count, "Configurations with real beta")->check(CLI::NonNegativeNumber);
    cross->add_option("--imaginary", xa.imaginary, "Configurations with imaginary beta")->check(CLI::NonNegativeNumber);
    cross->add_option("--seed", xa.seed, "Random seed");
    cross->add_option("--limit", xa.limit, "Allowed relative spread, real beta");
    cross->add_option("--limit-imag", xa.limit_imag, "Allowed relative spread, imaginary beta");
    cross->add_option("--tol", xa.tol, "Relative tolerance");
    cross->add_flag("--json", xa.json, "JSON records instead of CSV");

    FieldArgs fa;
    auto* field = app.add_subcommand("field", "Field of a ring source with a sampled angular profile");
    field->add_option("--source", fa.source, "CSV of (phi, f) samples on phi_j = 2 pi j / N")->required();
    field->add_option("--r", fa.r, "r values, 'a' or 'a:b:n'");
    field->add_option("--phi", fa.phi, "phi values, 'a' or 'a:b:n'");
    field->add_option("--z", fa.z, "z values, 'a' or 'a:b:n'");
    field->add_option("--beta,--beta-re", fa.beta_re, "Re(beta)");
    field->add_option("--beta-im", fa.beta_im, "Im(beta), >= 0");
    field->add_option("-R", fa.R, "Ring radius");
    field->add_option("-Z", fa.Z, "Ring height");
    field->add_option("-M", fa.M, "Highest mode (default min(40, (N - 4) / 4))");
    field->add_option("--method", fa.method, "Method name or 'auto'");
    field->add_option("--tol", fa.tol, "Relative tolerance");
    field->add_flag("--json", fa.json, "JSON records instead of CSV");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*coeff) return cmd_coeff(ca, out, err);
        if (*table) return cmd_table(which, table_tol, table_json, out);
        if (*cross) return cmd_crosscheck(xa, out);
        if (*field) return cmd_field(fa, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNotConverged;
    }
    return kUsage;
}

}  // namespace ringhelm::cli
