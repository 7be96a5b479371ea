#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "spo/asymptotics.hpp"
#include "spo/errors.hpp"
#include "spo/identities.hpp"
#include "spo/kernels.hpp"
#include "spo/measures.hpp"
#include "spo/symfunc.hpp"
#include "spo/toeplitz_hankel.hpp"

namespace py = pybind11;
using namespace spo;

namespace {

// Specializations are given as JSON text or as a dict in the same format.
std::string spec_json(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

Specialization spec_from(const py::object& obj, int degree) {
    return specialization_from_json(spec_json(obj)).with_degree(degree);
}

py::list fractions(const GradedScalar& g) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::list out;
    for (const Rational& q : g.coefficients()) out.append(fraction(q.get_str()));
    return out;
}

SymbolF symbol(std::optional<double> theta, const py::object& plus, const py::object& minus, bool dual) {
    if (theta) {
        if (dual) return SymbolF::dual(FloatSpec::plancherel(2 * *theta), FloatSpec::plancherel(*theta));
        return SymbolF::plancherel(*theta);
    }
    if (plus.is_none() || minus.is_none()) throw ConfigError("give theta, or both plus and minus");
    FloatSpec p = FloatSpec::from_json(spec_json(plus)), q = FloatSpec::from_json(spec_json(minus));
    return dual ? SymbolF::dual(p, q) : SymbolF::lifted(p, q);
}

py::list scan_rows(const std::vector<ScanRow>& rows) {
    py::list out;
    for (const ScanRow& r : rows) out.append(py::make_tuple(r.param, r.x, r.y, r.discrete, r.limit, r.abs_error));
    return out;
}

} // namespace

PYBIND11_MODULE(_spo, m) {
    m.doc() = "Symplectic and orthogonal Schur measures";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    static py::exception<ConfigError> config(m, "ConfigError", base.ptr());
    static py::exception<PreconditionViolation> precondition(m, "PreconditionViolation", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ConfigError& e) {
            py::set_error(config, e.what());
        } catch (const PreconditionViolation& e) {
            py::set_error(precondition, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def(
        "schur",
        [](const std::vector<int>& lambda, const py::object& rho, int degree) {
            return fractions(schur(Partition(lambda), spec_from(rho, degree)));
        },
        py::arg("partition"), py::arg("rho"), py::arg("degree") = 8,
        "s_lambda(rho) in Q[t]/t^{degree+1} as Fraction coefficients");
    m.def(
        "sp_char",
        [](const std::vector<int>& lambda, const py::object& rho, int degree) {
            return fractions(sp_char(Partition(lambda), spec_from(rho, degree)));
        },
        py::arg("partition"), py::arg("rho"), py::arg("degree") = 8);
    m.def(
        "o_char",
        [](const std::vector<int>& lambda, const py::object& rho, int degree) {
            return fractions(o_char(Partition(lambda), spec_from(rho, degree)));
        },
        py::arg("partition"), py::arg("rho"), py::arg("degree") = 8);
    m.def(
        "partition_function",
        [](const std::string& family, const py::object& plus, const py::object& minus, int degree) {
            return fractions(partition_function({parse_family(family), spec_from(plus, degree), spec_from(minus, degree)}));
        },
        py::arg("family"), py::arg("plus"), py::arg("minus"), py::arg("degree") = 8);

    m.def(
        "verify_identities",
        [](int degree, int trials, int max_size, std::uint64_t seed) {
            IdentitySuiteConfig cfg;
            cfg.degree = degree;
            cfg.trials = trials;
            cfg.max_size = max_size;
            cfg.seed = seed;
            py::list out;
            for (const auto& r : run_identity_suite(cfg)) {
                py::dict d;
                d["identity"] = r.name;
                d["degree"] = r.degree;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("degree") = 8, py::arg("trials") = 5, py::arg("max_size") = 4, py::arg("seed") = 1);

    m.def(
        "kernel",
        [](const std::string& family, int a, int b, std::optional<double> theta, const std::string& rep,
           const py::object& plus, const py::object& minus) {
            const KernelFamily fam = parse_kernel_family(family);
            switch (parse_representation(rep)) {
            case Representation::Bessel:
                if (!theta) throw ConfigError("the Bessel representation needs theta");
                return kernel_bessel(*theta, fam, a, b);
            case Representation::Fourier:
                return kernel_fourier(symbol(theta, plus, minus, false), fam, a, b);
            default:
                return kernel_contour(KernelConfig{}, symbol(theta, plus, minus, false), fam, a, b);
            }
        },
        py::arg("family"), py::arg("a"), py::arg("b"), py::arg("theta") = py::none(), py::arg("rep") = "contour",
        py::arg("plus") = py::none(), py::arg("minus") = py::none(),
        "K(a, b) on sites lambda_i - i; theta selects the Plancherel symbol");
    m.def(
        "kernel_matrix",
        [](const std::string& family, const std::vector<int>& sites, std::optional<double> theta, bool dual,
           const py::object& plus, const py::object& minus) {
            const KernelBatch batch =
                kernel_contour_batch(KernelConfig{}, symbol(theta, plus, minus, dual), parse_kernel_family(family), sites, sites);
            py::array_t<double> out({sites.size(), sites.size()});
            auto view = out.mutable_unchecked<2>();
            for (std::size_t i = 0; i < sites.size(); ++i)
                for (std::size_t j = 0; j < sites.size(); ++j) view(i, j) = batch.value[i][j];
            return out;
        },
        py::arg("family"), py::arg("sites"), py::arg("theta") = py::none(), py::arg("dual") = false,
        py::arg("plus") = py::none(), py::arg("minus") = py::none());
    m.def(
        "correlation",
        [](const std::string& family, const std::vector<int>& points, const std::string& theta, double tolerance) {
            const Rational th = parse_rational(theta);
            MeasureSpec spec{parse_family(family), Specialization::plancherel(2 * th, 0), Specialization::plancherel(th, 0),
                             NumericMode::Float};
            OracleOptions opts;
            opts.tolerance = tolerance;
            const CorrelationEstimate est = correlation_bruteforce(spec, points, opts);
            py::dict d;
            d["value"] = est.value;
            d["est_tail"] = est.est_tail;
            d["cutoff"] = est.cutoff;
            return d;
        },
        py::arg("family"), py::arg("points"), py::arg("theta"), py::arg("tolerance") = 1e-7,
        "Brute-force correlation of the Plancherel-type measure (theta as a rational string)");

    m.def(
        "th_det",
        [](const std::string& which, int size, const std::string& theta) {
            return th_det_float(Symbol::plancherel(parse_rational(theta), 0), parse_th_det(which), size);
        },
        py::arg("which"), py::arg("size"), py::arg("theta"));
    m.def(
        "gessel_check",
        [](const std::string& which, int size, const py::object& plus, const py::object& minus, int degree) {
            return gessel_check(Symbol(spec_from(plus, degree), spec_from(minus, degree)), parse_th_det(which), size, degree);
        },
        py::arg("which"), py::arg("size"), py::arg("plus"), py::arg("minus"), py::arg("degree") = 8);
    m.def(
        "bo_check",
        [](const std::string& family, int m_value, double theta) {
            const BOResult r = bo_check_plancherel(theta, parse_kernel_family(family), m_value);
            py::dict d;
            d["lhs"] = r.lhs;
            d["rhs"] = r.rhs;
            d["gap"] = r.gap;
            d["tail_bound"] = r.tail_bound;
            d["window"] = r.window;
            return d;
        },
        py::arg("family"), py::arg("m"), py::arg("theta"));

    m.def(
        "airy_2to1", [](const std::string& sign, double x, double y) { return airy_2to1(parse_airy_sign(sign), x, y); },
        py::arg("sign"), py::arg("x"), py::arg("y"));
    m.def(
        "tw_cdf", [](const std::string& sign, double s) { return tw_2to1_cdf(parse_airy_sign(sign), s); }, py::arg("sign"),
        py::arg("s"));
    m.def(
        "discrete_edge_cdf",
        [](const std::string& family, double theta, double s) {
            return discrete_edge_cdf(parse_kernel_family(family), theta, s).value;
        },
        py::arg("family"), py::arg("theta"), py::arg("s"));
    m.def(
        "edge_scan",
        [](const std::string& family, const std::vector<double>& thetas, const std::vector<double>& grid) {
            return scan_rows(edge_scan(parse_kernel_family(family), thetas, grid));
        },
        py::arg("family"), py::arg("thetas"), py::arg("grid"), "Rows (theta, x, y, discrete, limit, abs_error)");
    m.def(
        "bulk_scan",
        [](const std::string& family, const std::vector<double>& thetas, double alpha, const std::vector<int>& offsets) {
            return scan_rows(bulk_scan(parse_kernel_family(family), thetas, alpha, offsets));
        },
        py::arg("family"), py::arg("thetas"), py::arg("alpha"), py::arg("offsets"));
}
