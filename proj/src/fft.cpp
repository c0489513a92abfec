#include "semigrav/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>

namespace semigrav {

namespace {
// FFTW's planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

FftPlan::FftPlan(std::size_t n, Direction dir) : n_(n) {
    buf_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * std::max<std::size_t>(n, 1)));
    if (!buf_) throw std::bad_alloc();
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto* p = reinterpret_cast<fftw_complex*>(buf_);
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), p, p,
                             dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    }
    fftw_free(buf_);
}

void FftPlan::execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

HermitianPlan::HermitianPlan(std::size_t n) : n_(n) {
    in_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1)));
    out_ = static_cast<double*>(fftw_malloc(sizeof(double) * std::max<std::size_t>(n, 1)));
    if (!in_ || !out_) {
        fftw_free(in_);
        fftw_free(out_);
        throw std::bad_alloc();
    }
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in_), out_,
                                 FFTW_ESTIMATE);
}

HermitianPlan::~HermitianPlan() {
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    }
    fftw_free(in_);
    fftw_free(out_);
}

// c2r transforms overwrite their input.
void HermitianPlan::execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

std::size_t next_fast_size(std::size_t n) {
    for (std::size_t m = std::max<std::size_t>(n, 1);; ++m) {
        std::size_t r = m;
        for (const std::size_t p : {2, 3, 5})
            while (r % p == 0) r /= p;
        if (r == 1) return m;
    }
}

namespace {
std::vector<std::complex<double>> transform(const std::vector<std::complex<double>>& x,
                                            FftPlan::Direction dir) {
    if (x.empty()) return {};
    FftPlan plan(x.size(), dir);
    std::copy(x.begin(), x.end(), plan.data());
    plan.execute();
    return {plan.data(), plan.data() + x.size()};
}
}  // namespace

std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& x) {
    return transform(x, FftPlan::Direction::Forward);
}

std::vector<std::complex<double>> fft_backward(const std::vector<std::complex<double>>& x) {
    return transform(x, FftPlan::Direction::Backward);
}

std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
    std::vector<std::complex<double>> c(x.begin(), x.end());
    auto full = fft_forward(c);
    full.resize(x.size() / 2 + 1);
    return full;
}

}  // namespace semigrav
