#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spo/asymptotics.hpp"
#include "spo/errors.hpp"
#include "spo/identities.hpp"
#include "spo/kernels.hpp"
#include "spo/measures.hpp"
#include "spo/toeplitz_hankel.hpp"

namespace {

using namespace spo;

// ---- value parsing ---------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

long to_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("expected an integer, got '" + s + "'");
    return v;
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("expected a number, got '" + s + "'");
    return v;
}

// "3", "1,4,9", "-5..5", "0..2,7"
std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    for (const std::string& item : split(text, ',')) {
        if (item.empty()) continue;
        if (auto dots = item.find(".."); dots != std::string::npos) {
            const long lo = to_long(item.substr(0, dots)), hi = to_long(item.substr(dots + 2));
            if (hi < lo) throw ConfigError("empty range '" + item + "'");
            if (hi - lo > 100000) throw ConfigError("range '" + item + "' is too long");
            for (long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
        } else {
            out.push_back(static_cast<int>(to_long(item)));
        }
    }
    if (out.empty()) throw ConfigError("empty integer list");
    return out;
}

// "0.5", "50,200,800", "-2:2:1" (start:stop:step, stop included)
std::vector<double> real_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& item : split(text, ',')) {
        if (item.empty()) continue;
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(to_double(item));
        } else if (parts.size() == 3) {
            const double lo = to_double(parts[0]), hi = to_double(parts[1]), step = to_double(parts[2]);
            if (!(step > 0) || hi < lo) throw ConfigError("bad grid '" + item + "'");
            const long count = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
            if (count > 100000) throw ConfigError("grid '" + item + "' is too long");
            for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
        } else {
            throw ConfigError("bad grid '" + item + "', expected start:stop:step");
        }
    }
    if (out.empty()) throw ConfigError("empty number list");
    return out;
}

// "0;1,2;-3,4"
std::vector<std::vector<int>> point_sets(const std::string& text) {
    std::vector<std::vector<int>> out;
    for (const std::string& set : split(text, ';')) {
        if (set.empty()) continue;
        std::vector<int> pts;
        for (const std::string& p : split(set, ',')) pts.push_back(static_cast<int>(to_long(p)));
        out.push_back(pts);
    }
    return out;
}

std::string spec_text(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ConfigError("cannot read " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- CSV -------------------------------------------------------------------

std::string num(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

class Csv {
public:
    explicit Csv(std::ostream& os) : os_(os) {}
    template <class... T>
    void row(const T&... cells) {
        bool first = true;
        ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
        os_ << '\n';
    }

private:
    static std::string cell(const std::string& s) { return field(s); }
    static std::string cell(const char* s) { return field(s); }
    static std::string cell(double v) { return num(v); }
    static std::string cell(int v) { return std::to_string(v); }
    std::ostream& os_;
};

// ---- shared option groups ----------------------------------------------------

struct SymbolArgs {
    std::string theta = "1";
    std::string plus, minus;
    bool custom() const { return !plus.empty() || !minus.empty(); }
    double theta_value() const {
        const double t = to_double(theta);
        if (!(t > 0)) throw ConfigError("theta must be > 0");
        return t;
    }
    std::string plus_text() const { return plus.empty() ? "{\"powersums\":{}}" : spec_text(plus); }
    std::string minus_text() const { return minus.empty() ? "{\"powersums\":{}}" : spec_text(minus); }
};

void add_symbol_options(CLI::App* sub, SymbolArgs& s, const std::string& theta_default) {
    s.theta = theta_default;
    sub->add_option("--theta", s.theta, "Plancherel parameter (rho+ = pl(2 theta), rho- = pl(theta))");
    sub->add_option("--plus", s.plus, "rho+ as specialization JSON, or @file");
    sub->add_option("--minus", s.minus, "rho- as specialization JSON, or @file");
}

KernelFamily kfamily(const std::string& name) { return parse_kernel_family(name); }

// ---- subcommands -----------------------------------------------------------

struct IdentitiesArgs {
    int degree = 8, trials = 5, max_size = 4;
    std::uint64_t seed = 1;
    std::string plus, minus;
};

int run_identities(const IdentitiesArgs& a, std::ostream& os) {
    IdentitySuiteConfig cfg;
    cfg.degree = a.degree;
    cfg.trials = a.trials;
    cfg.max_size = a.max_size;
    cfg.seed = a.seed;
    if (a.plus.empty() != a.minus.empty()) throw ConfigError("--plus and --minus go together");
    if (!a.plus.empty()) {
        cfg.plus = specialization_from_json(spec_text(a.plus));
        cfg.minus = specialization_from_json(spec_text(a.minus));
    }
    Csv csv(os);
    csv.row("identity", "degree", "result", "detail");
    bool ok = true;
    for (const auto& r : run_identity_suite(cfg)) {
        csv.row(r.name, r.degree, r.passed ? "PASS" : "FAIL", r.detail);
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

struct KernelArgs {
    SymbolArgs sym;
    std::string family = "sp", reps = "contour,bessel,fourier", range = "-5..5", a, b;
    std::string symbol = "lifted", load_cache, save_cache;
    KernelConfig kernel;
    double agreement = 1e-8;
};

SymbolF make_symbol(const SymbolArgs& s, const std::string& kind) {
    if (!s.custom()) return SymbolF::plancherel(s.theta_value());
    FloatSpec p = FloatSpec::from_json(s.plus_text()), q = FloatSpec::from_json(s.minus_text());
    if (kind == "lifted") return SymbolF::lifted(p, q);
    if (kind == "dual") return SymbolF::dual(p, q);
    if (kind == "dual-corollary") return SymbolF::dual_corollary(p, q);
    throw ConfigError("unknown symbol kind '" + kind + "'");
}

int run_kernel(const KernelArgs& k, std::ostream& os) {
    const KernelFamily fam = kfamily(k.family);
    const std::vector<int> as = int_list(k.a.empty() ? k.range : k.a);
    const std::vector<int> bs = int_list(k.b.empty() ? k.range : k.b);
    const SymbolF f = make_symbol(k.sym, k.symbol);
    std::vector<Representation> reps;
    for (const std::string& r : split(k.reps, ',')) reps.push_back(parse_representation(r));

    std::vector<std::vector<std::vector<double>>> tables;
    std::vector<double> errors;
    for (Representation rep : reps) {
        std::vector<std::vector<double>> t(as.size(), std::vector<double>(bs.size()));
        double err = 0.0;
        if (rep == Representation::Contour) {
            const KernelBatch batch = kernel_contour_batch(k.kernel, f, fam, as, bs);
            t = batch.value;
            err = batch.est_error;
        } else if (rep == Representation::Bessel) {
            if (k.sym.custom()) throw ConfigError("the Bessel representation needs a Plancherel symbol (--theta)");
            const auto [lo, hi] = std::minmax({*std::min_element(as.begin(), as.end()), *std::max_element(as.begin(), as.end()),
                                               *std::min_element(bs.begin(), bs.end()), *std::max_element(bs.begin(), bs.end())});
            const BesselKernel bk(k.sym.theta_value(), fam, lo, hi);
            for (std::size_t i = 0; i < as.size(); ++i)
                for (std::size_t j = 0; j < bs.size(); ++j) t[i][j] = bk(as[i], bs[j]);
            err = bk.truncation_error();
        } else {
            ModeCache cache = k.load_cache.empty() ? ModeCache::compute(f) : ModeCache::load(k.load_cache);
            FourierOptions opts;
            opts.allow_recompute = k.load_cache.empty();
            for (std::size_t i = 0; i < as.size(); ++i)
                for (std::size_t j = 0; j < bs.size(); ++j) t[i][j] = kernel_fourier(f, fam, as[i], bs[j], cache, opts);
            err = cache.edge_magnitude();
            if (!k.save_cache.empty()) cache.save(k.save_cache);
        }
        tables.push_back(std::move(t));
        errors.push_back(err);
    }

    Csv csv(os);
    csv.row("family", "representation", "a", "b", "value", "est_error");
    for (std::size_t r = 0; r < reps.size(); ++r)
        for (std::size_t i = 0; i < as.size(); ++i)
            for (std::size_t j = 0; j < bs.size(); ++j)
                csv.row(to_string(fam), to_string(reps[r]), as[i], bs[j], tables[r][i][j], errors[r]);

    double worst = 0.0;
    for (std::size_t r = 1; r < reps.size(); ++r)
        for (std::size_t i = 0; i < as.size(); ++i)
            for (std::size_t j = 0; j < bs.size(); ++j) worst = std::max(worst, std::abs(tables[r][i][j] - tables[0][i][j]));
    if (worst > k.agreement) {
        std::cerr << "representations disagree by " << worst << '\n';
        return 1;
    }
    return 0;
}

struct CorrelationArgs {
    SymbolArgs sym;
    std::string family = "sp", points, range = "-4..4";
    int max_points = 2;
    double tolerance = 1e-7, agreement = 1e-6;
    long budget = 1000000;
    KernelConfig kernel;
};

int run_correlations(const CorrelationArgs& c, std::ostream& os) {
    const Family fam = parse_family(c.family);
    std::vector<std::vector<int>> sets;
    if (!c.points.empty()) {
        sets = point_sets(c.points);
    } else {
        const std::vector<int> sites = int_list(c.range);
        if (c.max_points < 1 || c.max_points > 3) throw ConfigError("--max-points must be 1, 2 or 3");
        std::vector<int> cur;
        std::function<void(std::size_t)> grow = [&](std::size_t from) {
            if (!cur.empty()) sets.push_back(cur);
            if (static_cast<int>(cur.size()) == c.max_points) return;
            for (std::size_t i = from; i < sites.size(); ++i) {
                cur.push_back(sites[i]);
                grow(i + 1);
                cur.pop_back();
            }
        };
        grow(0);
    }
    if (sets.empty()) throw ConfigError("no point sets");
    for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[i] == s[j]) throw ConfigError("points within a set must be distinct");
    }

    MeasureSpec spec;
    spec.family = fam;
    spec.mode = NumericMode::Float;
    SymbolF f = SymbolF::trivial();
    if (c.sym.custom()) {
        spec.rho_plus = specialization_from_json(c.sym.plus_text()).with_degree(0);
        spec.rho_minus = specialization_from_json(c.sym.minus_text()).with_degree(0);
        const FloatSpec p = FloatSpec::from_json(c.sym.plus_text()), q = FloatSpec::from_json(c.sym.minus_text());
        f = is_dual(fam) ? SymbolF::dual(p, q) : SymbolF::lifted(p, q);
    } else {
        const Rational theta = parse_rational(c.sym.theta);
        if (theta <= 0) throw ConfigError("theta must be > 0");
        spec.rho_plus = Specialization::plancherel(2 * theta, 0);
        spec.rho_minus = Specialization::plancherel(theta, 0);
        f = is_dual(fam) ? SymbolF::dual(FloatSpec::plancherel(2 * theta.get_d()), FloatSpec::plancherel(theta.get_d()))
                         : SymbolF::plancherel(theta.get_d());
    }
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& s : sets)
        for (int p : s) {
            lo = first ? p : std::min(lo, p);
            hi = first ? p : std::max(hi, p);
            first = false;
        }
    std::vector<int> sites;
    for (int v = lo; v <= hi; ++v) sites.push_back(v);
    const KernelFamily kfam = kernel_family(fam);
    const KernelBatch batch = kernel_contour_batch(c.kernel, f, kfam, sites, sites);
    const KernelFn kfn = [&](int a, int b) {
        return batch.value[static_cast<std::size_t>(a - lo)][static_cast<std::size_t>(b - lo)];
    };

    OracleOptions opts;
    opts.tolerance = c.tolerance;
    opts.partition_budget = c.budget;
    BruteForceOracle oracle(spec, opts);
    Csv csv(os);
    csv.row("family", "points", "kernel_det", "oracle", "abs_error", "est_tail");
    bool ok = true;
    for (const auto& s : sets) {
        const double det = correlation_det(kfn, s);
        const CorrelationEstimate est = oracle.correlation(s);
        std::string label;
        for (int p : s) label += (label.empty() ? "" : " ") + std::to_string(p);
        const double err = std::abs(det - est.value);
        csv.row(to_string(fam), label, det, est.value, err, est.est_tail);
        ok = ok && err <= std::max(c.agreement, est.est_tail);
    }
    return ok ? 0 : 1;
}

struct THArgs {
    SymbolArgs sym;
    std::string which = "D1,D2,D3,D4", sizes = "1..12";
    bool exact = false;
    int degree = 8;
    double tolerance = 0.0;
};

Symbol make_th_symbol(const SymbolArgs& s, int degree) {
    if (!s.custom()) {
        const Rational theta = parse_rational(s.theta);
        if (theta <= 0) throw ConfigError("theta must be > 0");
        return Symbol::plancherel(theta, degree);
    }
    return Symbol(specialization_from_json(s.plus_text()).with_degree(degree),
                  specialization_from_json(s.minus_text()).with_degree(degree));
}

int run_th_dets(const THArgs& t, std::ostream& os) {
    std::vector<THDet> dets;
    for (const std::string& w : split(t.which, ',')) dets.push_back(parse_th_det(w));
    const std::vector<int> sizes = int_list(t.sizes);
    for (int n : sizes)
        if (n < 0) throw ConfigError("sizes must be >= 0");
    const Symbol sym = make_th_symbol(t.sym, t.degree);
    Csv csv(os);
    csv.row("family", "n_or_m", "lhs", "rhs", "gap", "tail_bound");
    bool ok = true;
    if (t.exact) {
        for (THDet d : dets)
            for (int n : sizes) {
                const GesselSides s = gessel_sides(sym, d, n, t.degree);
                const bool equal = s.det_side == s.sum_side;
                csv.row(to_string(d), n, s.det_side.evaluate(1.0), s.sum_side.evaluate(1.0),
                        (s.det_side - s.sum_side).evaluate(1.0), 0.0);
                ok = ok && equal;
            }
        return ok ? 0 : 1;
    }
    const auto [z_sp, z_o] = szego_limits_float(sym);
    for (THDet d : dets) {
        const bool half = d == THDet::D1 || d == THDet::D4;
        const double z = (d == THDet::D1 || d == THDet::D2) ? z_sp : z_o;
        double prev = std::nan("");
        for (int n : sizes) {
            double v = th_det_float(sym, d, n);
            if (half && n > 0) v *= 0.5;
            csv.row(to_string(d), n, v, z, v - z, std::abs(v - prev));
            prev = v;
        }
        if (t.tolerance > 0 && std::abs(prev - z) > t.tolerance) ok = false;
    }
    return ok ? 0 : 1;
}

struct BOArgs {
    SymbolArgs sym;
    std::string family = "sp", m = "2..8";
    FredholmConfig fred;
    double tolerance = 1e-8;
};

int run_bo(const BOArgs& b, std::ostream& os) {
    const KernelFamily fam = kfamily(b.family);
    const std::vector<int> ms = int_list(b.m);
    std::optional<Symbol> sym;
    if (b.sym.custom()) sym = make_th_symbol(b.sym, 0);
    Csv csv(os);
    csv.row("family", "n_or_m", "lhs", "rhs", "gap", "tail_bound");
    bool ok = true;
    for (int m : ms) {
        if (m < 0) throw ConfigError("m must be >= 0");
        const BOResult r = sym ? bo_check(*sym, fam, m, b.fred) : bo_check_plancherel(b.sym.theta_value(), fam, m, b.fred);
        csv.row(to_string(fam), m, r.lhs, r.rhs, r.gap, r.tail_bound);
        ok = ok && std::abs(r.gap) <= b.tolerance;
    }
    return ok ? 0 : 1;
}

void scan_rows(std::ostream& os, const char* param, const std::vector<ScanRow>& rows) {
    Csv csv(os);
    csv.row(param, "x", "y", "discrete", "limit", "abs_error");
    for (const ScanRow& r : rows) csv.row(r.param, r.x, r.y, r.discrete, r.limit, r.abs_error);
}

struct ScanArgs {
    std::string family = "sp", theta = "50,200,800", offsets = "-3..3", grid = "-2:2:1";
    double alpha = 0.0;
    bool lattice = false, nicholson = false;
};

int run_bulk(const ScanArgs& s, std::ostream& os) {
    if (!(std::abs(s.alpha) < 2)) throw ConfigError("--alpha must lie in (-2, 2)");
    scan_rows(os, "theta", bulk_scan(kfamily(s.family), real_list(s.theta), s.alpha, int_list(s.offsets)));
    return 0;
}

int run_edge(const ScanArgs& s, std::ostream& os) {
    const auto thetas = real_list(s.theta);
    const auto grid = real_list(s.grid);
    if (s.nicholson) scan_rows(os, "theta", nicholson_scan(thetas, grid));
    else scan_rows(os, "theta", edge_scan(kfamily(s.family), thetas, grid, s.lattice));
    return 0;
}

struct TWArgs {
    std::string sign = "+", s = "-6:4:0.5", theta;
    TWConfig tw;
};

int run_tw(const TWArgs& t, std::ostream& os) {
    const AirySign sign = parse_airy_sign(t.sign);
    const auto ss = real_list(t.s);
    Csv csv(os);
    csv.row("s", "x", "y", "discrete", "limit", "abs_error");
    const double nan = std::nan("");
    for (double s : ss) {
        const TWResult r = tw_2to1(sign, s, t.tw);
        if (t.theta.empty()) {
            csv.row(s, nan, nan, nan, r.value, t.tw.check ? r.est_error : nan);
            continue;
        }
        const KernelFamily fam = sign == AirySign::Plus ? KernelFamily::Sp : KernelFamily::O;
        for (double theta : real_list(t.theta)) {
            const DiscreteEdgeCdf d = discrete_edge_cdf(fam, theta, s);
            csv.row(s, theta, d.m, d.value, r.value, std::abs(d.value - r.value));
        }
    }
    return 0;
}

// ---- config plumbing ---------------------------------------------------------

// Turns a JSON object into "--key value" tokens placed ahead of the command
// line, so explicit flags (parsed later, last one wins) override the file.
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("invalid config JSON: ") + ex.what());
    }
    if (!j.is_object()) throw ConfigError("config JSON must be an object");
    std::vector<std::string> out;
    for (const auto& [key, value] : j.items()) {
        if (key == "subcommand") continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back("--" + key);
            continue;
        }
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_array()) {
            for (const auto& v : value) text += (text.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        } else if (value.is_object()) {
            text = value.dump();
        } else {
            text = value.dump();
        }
        out.push_back("--" + key + "=" + text);
    }
    return out;
}

std::string config_echo(const CLI::App* sub) {
    nlohmann::ordered_json j;
    j["subcommand"] = sub->get_name();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string key = opt->get_lnames().front();
        if (key == "help" || key == "help-all" || key == "config" || key == "output") continue;
        if (opt->get_items_expected_max() == 0) {
            j[key] = opt->count() > 0;
            continue;
        }
        if (opt->count() > 0) j[key] = opt->results().back();
        else j[key] = opt->get_default_str();
    }
    return j.dump();
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const PreconditionViolation*>(&e) ||
        dynamic_cast<const ContourViolation*>(&e) || dynamic_cast<const DomainTooLarge*>(&e))
        return 2;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic and orthogonal Schur measures: identities, kernels, asymptotics"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string config_path, output_path;
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON file of option values; flags override it");
        sub->add_option("-o,--output", output_path, "Write CSV here instead of stdout");
    };

    IdentitiesArgs ids;
    auto* s_ids = app.add_subcommand("verify-identities", "Exact graded identity suites (PASS/FAIL per identity)");
    s_ids->add_option("--degree", ids.degree, "Truncation degree");
    s_ids->add_option("--trials", ids.trials, "Random specialization pairs");
    s_ids->add_option("--seed", ids.seed, "Seed for the random pairs");
    s_ids->add_option("--max-size", ids.max_size, "Largest Gessel determinant size");
    s_ids->add_option("--plus", ids.plus, "rho+ JSON or @file (replaces the random pairs)");
    s_ids->add_option("--minus", ids.minus, "rho- JSON or @file");
    common(s_ids);

    KernelArgs ker;
    auto* s_ker = app.add_subcommand("kernel", "Evaluate K(a, b) in one or more representations")->alias("kernel-eval");
    add_symbol_options(s_ker, ker.sym, "1");
    s_ker->add_option("--family", ker.family, "sp or o");
    s_ker->add_option("--rep", ker.reps, "Comma list of contour, bessel, fourier");
    s_ker->add_option("--symbol", ker.symbol, "lifted, dual or dual-corollary (with --plus/--minus)");
    s_ker->add_option("--range", ker.range, "Sites for both a and b");
    s_ker->add_option("--a", ker.a, "Sites for a (overrides --range)");
    s_ker->add_option("--b", ker.b, "Sites for b (overrides --range)");
    s_ker->add_option("--r-z", ker.kernel.r_z, "Contour radius for z");
    s_ker->add_option("--r-w", ker.kernel.r_w, "Contour radius for w");
    s_ker->add_option("--nodes", ker.kernel.nodes, "Initial nodes per circle");
    s_ker->add_option("--max-nodes", ker.kernel.max_nodes, "Node cap");
    s_ker->add_option("--tolerance", ker.kernel.tolerance, "Contour doubling tolerance");
    s_ker->add_option("--agreement", ker.agreement, "Allowed disagreement between representations");
    s_ker->add_option("--load-cache", ker.load_cache, "Read Fourier modes from this file");
    s_ker->add_option("--save-cache", ker.save_cache, "Write Fourier modes to this file");
    common(s_ker);

    CorrelationArgs cor;
    auto* s_cor = app.add_subcommand("correlations", "det[K] against brute-force correlations");
    add_symbol_options(s_cor, cor.sym, "1/5");
    s_cor->add_option("--family", cor.family, "sp, o, sp-dual or o-dual");
    s_cor->add_option("--points", cor.points, "Point sets, e.g. \"0;1,2\" (default: all subsets of --range)");
    s_cor->add_option("--range", cor.range, "Sites used when --points is empty");
    s_cor->add_option("--max-points", cor.max_points, "Largest subset size when --points is empty");
    s_cor->add_option("--tolerance", cor.tolerance, "Oracle cutoff tolerance");
    s_cor->add_option("--budget", cor.budget, "Oracle partition budget");
    s_cor->add_option("--agreement", cor.agreement, "Allowed |det - oracle| beyond the tail estimate");
    s_cor->add_option("--r-z", cor.kernel.r_z, "Contour radius for z");
    s_cor->add_option("--r-w", cor.kernel.r_w, "Contour radius for w");
    common(s_cor);

    THArgs th;
    auto* s_th = app.add_subcommand("th-dets", "Toeplitz+Hankel determinants against Szego limits or Gessel sums");
    add_symbol_options(s_th, th.sym, "1/2");
    s_th->add_option("--which", th.which, "Comma list of D1..D4");
    s_th->add_option("--sizes", th.sizes, "Determinant sizes");
    s_th->add_flag("--exact", th.exact, "Exact Gessel comparison in Q[t]/t^{D+1}");
    s_th->add_option("--degree", th.degree, "Truncation degree for --exact");
    s_th->add_option("--tolerance", th.tolerance, "Fail if the last gap exceeds this (0: no check)");
    common(s_th);

    BOArgs bo;
    auto* s_bo = app.add_subcommand("bo", "D2_m, D4_m/2 against Z det(I - K)")->alias("bo-check");
    add_symbol_options(s_bo, bo.sym, "0.5");
    s_bo->add_option("--family", bo.family, "sp or o");
    s_bo->add_option("--m", bo.m, "Values of m");
    s_bo->add_option("--window", bo.fred.window, "Initial Fredholm section size");
    s_bo->add_option("--max-window", bo.fred.max_window, "Section size cap");
    s_bo->add_option("--tail-tolerance", bo.fred.tail_tolerance, "Section growth stops below this kernel mass");
    s_bo->add_option("--tolerance", bo.tolerance, "Fail if any |gap| exceeds this");
    s_bo->add_option("--r-z", bo.fred.kernel.r_z, "Contour radius for z (non-Plancherel symbols)");
    s_bo->add_option("--r-w", bo.fred.kernel.r_w, "Contour radius for w (non-Plancherel symbols)");
    common(s_bo);

    ScanArgs bulk;
    auto* s_bulk = app.add_subcommand("bulk", "Plancherel kernel against the discrete sine kernel")->alias("bulk-scan");
    s_bulk->add_option("--family", bulk.family, "sp or o");
    s_bulk->add_option("--theta", bulk.theta, "Comma list of theta values");
    s_bulk->add_option("--alpha", bulk.alpha, "Bulk position a / theta");
    s_bulk->add_option("--offsets", bulk.offsets, "Offsets around floor(alpha theta)");
    common(s_bulk);

    ScanArgs edge;
    auto* s_edge = app.add_subcommand("edge", "theta^{1/3} K against the Airy 2->1 kernels")->alias("edge-scan");
    s_edge->add_option("--family", edge.family, "sp or o");
    s_edge->add_option("--theta", edge.theta, "Comma list of theta values");
    s_edge->add_option("--grid", edge.grid, "Edge coordinates, start:stop:step or a list");
    s_edge->add_flag("--lattice-coordinates", edge.lattice, "Evaluate the limit at the rounded lattice point");
    s_edge->add_flag("--nicholson", edge.nicholson, "Scan theta^{1/3} J against Ai instead");
    common(s_edge);

    TWArgs tw;
    auto* s_tw = app.add_subcommand("tw", "Airy 2->1 gap probabilities, optionally against the discrete edge")->alias("tw-cdf");
    s_tw->add_option("--sign", tw.sign, "+ or -");
    s_tw->add_option("--s", tw.s, "Values of s, start:stop:step or a list");
    s_tw->add_option("--theta", tw.theta, "Also compute the discrete CDF at these theta (x = theta, y = m)");
    s_tw->add_option("--length", tw.tw.length, "Section length (0: automatic)");
    s_tw->add_option("--panel-width", tw.tw.panel_width, "Quadrature panel width");
    s_tw->add_option("--order", tw.tw.order, "Gauss-Legendre order per panel");
    s_tw->add_flag("--check", tw.tw.check, "Also run the doubled discretization");
    s_tw->add_option("--tolerance", tw.tw.tolerance, "Allowed change under doubling");
    common(s_tw);

    // splice config file values in front of the explicit flags
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::vector<std::string> rest;
        std::vector<std::string> injected;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size()) {
                injected = config_tokens(args[++i]);
            } else if (args[i].rfind("--config=", 0) == 0) {
                injected = config_tokens(args[i].substr(9));
            } else {
                rest.push_back(args[i]);
            }
        }
        if (!injected.empty() && !rest.empty()) rest.insert(rest.begin() + 1, injected.begin(), injected.end());
        args = rest;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::ostringstream body;
    int code = 0;
    try {
        body << "# " << config_echo(sub) << '\n';
        if (sub == s_ids) code = run_identities(ids, body);
        else if (sub == s_ker) code = run_kernel(ker, body);
        else if (sub == s_cor) code = run_correlations(cor, body);
        else if (sub == s_th) code = run_th_dets(th, body);
        else if (sub == s_bo) code = run_bo(bo, body);
        else if (sub == s_bulk) code = run_bulk(bulk, body);
        else if (sub == s_edge) code = run_edge(edge, body);
        else code = run_tw(tw, body);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }

    if (output_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << output_path << '\n';
            return 2;
        }
        out << body.str();
    }
    return code;
}
