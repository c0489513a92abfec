#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace semigrav {

/// Unnormalized complex DFT, X_k = sum_j x_j exp(-2 pi i j k / n).
std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& x);

/// Unnormalized inverse, x_j = sum_k X_k exp(+2 pi i j k / n).
std::vector<std::complex<double>> fft_backward(const std::vector<std::complex<double>>& x);

/// Forward transform of a real sequence; returns the n/2 + 1 non-negative bins.
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

/// Reusable in-place complex plan of fixed size. Not safe to execute from
/// several threads at once; create one per worker.
class FftPlan {
public:
    enum class Direction { Forward, Backward };

    FftPlan(std::size_t n, Direction dir);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    std::size_t size() const { return n_; }
    std::complex<double>* data() { return buf_; }
    void execute();

private:
    std::size_t n_;
    std::complex<double>* buf_;
    void* plan_;
};

/// Complex-to-real inverse transform of size n: Hermitian half spectrum
/// (n/2 + 1 bins) in, n real samples out, unnormalized.
class HermitianPlan {
public:
    explicit HermitianPlan(std::size_t n);
    ~HermitianPlan();
    HermitianPlan(const HermitianPlan&) = delete;
    HermitianPlan& operator=(const HermitianPlan&) = delete;

    std::size_t size() const { return n_; }
    std::complex<double>* input() { return in_; }
    const double* output() const { return out_; }
    void execute();

private:
    std::size_t n_;
    std::complex<double>* in_;
    double* out_;
    void* plan_;
};

/// Smallest integer >= n whose only prime factors are 2, 3 and 5.
std::size_t next_fast_size(std::size_t n);

}  // namespace semigrav
