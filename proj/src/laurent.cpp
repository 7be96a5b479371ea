#include "laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fftw3.h>

namespace spo::detail {

LaurentModes laurent_modes(const std::vector<LogFn>& log_g, double radius, double threshold, int max_size) {
    using cplx = std::complex<double>;
    LaurentModes out;
    for (int n = 256; n <= max_size; n *= 2) {
        const auto size = static_cast<std::size_t>(n);
        std::vector<std::vector<cplx>> spectra;
        double edge = 0.0;
        for (const auto& lg : log_g) {
            std::vector<cplx> in(size), spec(size);
            for (int k = 0; k < n; ++k) in[static_cast<std::size_t>(k)] = std::exp(lg(std::polar(radius, 2.0 * std::numbers::pi * k / n)));
            fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                              reinterpret_cast<fftw_complex*>(spec.data()), FFTW_FORWARD, FFTW_ESTIMATE);
            fftw_execute(plan);
            fftw_destroy_plan(plan);
            double peak = 0.0, band = 0.0;
            for (int k = 0; k < n; ++k) {
                const int m = k <= n / 2 ? k : k - n;
                const double mag = std::abs(spec[static_cast<std::size_t>(k)]);
                peak = std::max(peak, mag);
                if (std::abs(m) >= 3 * n / 8) band = std::max(band, mag);
            }
            edge = std::max(edge, peak > 0.0 ? band / peak : 0.0);
            spectra.push_back(std::move(spec));
        }
        out.edge = edge;
        out.converged = edge <= threshold;
        if (!out.converged && 2 * n <= max_size) continue;
        out.max_mode = n / 2 - 1;
        out.coeffs.clear();
        for (const auto& spec : spectra) {
            std::vector<cplx> c(static_cast<std::size_t>(2 * out.max_mode + 1));
            for (int m = -out.max_mode; m <= out.max_mode; ++m)
                c[static_cast<std::size_t>(m + out.max_mode)] =
                    spec[static_cast<std::size_t>(m >= 0 ? m : m + n)] * (std::pow(radius, -m) / n);
            out.coeffs.push_back(std::move(c));
        }
        return out;
    }
    return out;
}

} // namespace spo::detail
