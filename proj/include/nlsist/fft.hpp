#pragma once

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "nlsist/fn.hpp"

namespace nlsist {

// e^{i pi num/den} with num an exact integer residue: the phase argument never
// exceeds 2*pi, so no large-argument reduction error enters the twiddles.
inline cplx cis_pi(std::int64_t num, std::int64_t den) {
    const double a = M_PI * double(num) / double(den);
    return {std::cos(a), std::sin(a)};
}

inline std::int64_t imod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

namespace detail {

struct FftwBuffer {
    fftw_complex* data = nullptr;
    std::int64_t n = 0;
    explicit FftwBuffer(std::int64_t n_) : n(n_) {
        data = fftw_alloc_complex(std::size_t(n_));
        if (!data) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    cplx* cdata() { return reinterpret_cast<cplx*>(data); }
};

inline std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

// In-place DFT pair bound to an owned buffer. FFTW_ESTIMATE keeps planning
// deterministic (plan choice never depends on runtime measurement).
class InplaceFft {
  public:
    explicit InplaceFft(std::int64_t n) : buf_(n) {
        std::lock_guard<std::mutex> lock(detail::planner_mutex());
        fwd_ = fftw_plan_dft_1d(int(n), buf_.data, buf_.data, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_1d(int(n), buf_.data, buf_.data, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!fwd_ || !bwd_) throw std::runtime_error("fftw plan failed");
    }
    ~InplaceFft() {
        std::lock_guard<std::mutex> lock(detail::planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    InplaceFft(const InplaceFft&) = delete;
    InplaceFft& operator=(const InplaceFft&) = delete;

    std::int64_t size() const { return buf_.n; }
    cplx* data() { return buf_.cdata(); }
    void forward() { fftw_execute(fwd_); }    // sum_k f_k e^{-2pi i jk/n}
    void backward() { fftw_execute(bwd_); }   // sum_j F_j e^{+2pi i jk/n}, unnormalized

  private:
    detail::FftwBuffer buf_;
    fftw_plan fwd_ = nullptr;
    fftw_plan bwd_ = nullptr;
};

namespace detail {

inline InplaceFft& cached_fft(std::int64_t n) {
    static std::mutex m;
    static std::map<std::int64_t, std::unique_ptr<InplaceFft>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<InplaceFft>(n);
    return *slot;
}

inline std::mutex& cached_fft_use_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

// DFT through the shared per-size plan cache; copies in and out, serialized.
inline void dft_inplace(std::vector<cplx>& v, int sign) {
    std::lock_guard<std::mutex> lock(detail::cached_fft_use_mutex());
    auto& fft = detail::cached_fft(std::int64_t(v.size()));
    std::copy(v.begin(), v.end(), fft.data());
    if (sign < 0)
        fft.forward();
    else
        fft.backward();
    std::copy(fft.data(), fft.data() + v.size(), v.begin());
}

// Continuum-normalized transform fhat(xi) = (1/sqrt(2pi)) int f(z) e^{-i xi z} dz
// on the dual grid:
//   fhat_j = (h/sqrt(2pi)) e^{-i xi_j x_min} DFT_j[f_k e^{-i xi_min k h}].
// Twiddle phases are exact-integer multiples of pi/n:
//   -xi_min k h = 2pi (m k)/n  and  -xi_j x_min = pi (n-1)(j-m)/n, m = floor(n/2).
inline SampledFn fourier_forward(const SampledFn& f) {
    f.check();
    const auto g = f.grid;
    const std::int64_t n = g.n, m = n / 2;
    std::vector<cplx> v(f.values);
    for (std::int64_t k = 0; k < n; ++k) v[std::size_t(k)] *= cis_pi(2 * imod(m * k, n), n);
    dft_inplace(v, -1);
    const double scale = g.step / std::sqrt(2.0 * M_PI);
    for (std::int64_t j = 0; j < n; ++j)
        v[std::size_t(j)] *= scale * cis_pi(imod((n - 1) * (j - m), 2 * n), n);
    return {g.dual(), std::move(v)};
}

// Inverse of fourier_forward on the primal grid (exact round trip):
//   f_k = (dxi/sqrt(2pi)) e^{+i x_k xi_min} IDFT_k[fhat_j e^{+i x_min j dxi}].
inline SampledFn fourier_inverse(const SampledFn& fh) {
    fh.check();
    const auto gd = fh.grid;
    const std::int64_t n = gd.n, m = n / 2;
    // primal grid whose dual is gd
    const double h = 2.0 * M_PI / (double(n) * gd.step);
    const auto g = UniformGrid::centered(h, n);
    std::vector<cplx> v(fh.values);
    for (std::int64_t j = 0; j < n; ++j) v[std::size_t(j)] *= cis_pi(-imod((n - 1) * j, 2 * n), n);
    dft_inplace(v, +1);
    const double scale = gd.step / std::sqrt(2.0 * M_PI);
    const cplx fixed = cis_pi(imod(m * (n - 1), 2 * n), n);
    for (std::int64_t k = 0; k < n; ++k)
        v[std::size_t(k)] *= scale * fixed * cis_pi(-2 * imod(m * k, n), n);
    return {g, std::move(v)};
}

}  // namespace nlsist
