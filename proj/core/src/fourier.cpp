#include "dzx/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace dzx {

namespace {

std::size_t log2_exact(std::size_t len) {
    if (len == 0 || !std::has_single_bit(len)) throw FourierError("length must be a power of two");
    return static_cast<std::size_t>(std::countr_zero(len));
}

}  // namespace

void walsh_hadamard(std::span<double> u) {
    log2_exact(u.size());
    for (std::size_t h = 1; h < u.size(); h <<= 1U) {
        for (std::size_t i = 0; i < u.size(); i += h << 1U) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = u[j];
                const double b = u[j + h];
                u[j] = a + b;
                u[j + h] = a - b;
            }
        }
    }
}

std::vector<double> walsh_hadamard(std::vector<double> u) {
    walsh_hadamard(std::span<double>(u));
    return u;
}

FourierData fourier_synthesize(std::span<const double> v) {
    const std::size_t n = log2_exact(v.size());
    const double vmax = *std::max_element(v.begin(), v.end());
    for (double x : v)
        if (!(x > full_support_epsilon * vmax) || !std::isfinite(x)) throw FourierError("full support required");

    std::vector<double> logs(v.size());
    for (std::size_t x = 0; x < v.size(); ++x) logs[x] = std::log(v[x] / v[0]);
    walsh_hadamard(std::span<double>(logs));

    FourierData fd;
    fd.n = n;
    fd.big_lambda = v[0];
    fd.lambda.resize(v.size() - 1);
    const double scale = -2.0 / static_cast<double>(v.size());
    for (std::size_t y = 1; y < v.size(); ++y) fd.lambda[y - 1] = std::exp(scale * logs[y]);
    return fd;
}

std::vector<double> fourier_evaluate(const FourierData& fd) {
    const std::size_t size = std::size_t{1} << fd.n;
    if (fd.lambda.size() != size - 1) throw FourierError("lambda must have 2^n - 1 entries");
    std::vector<double> logs(fd.lambda.size());
    for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = std::log(fd.lambda[i]);
    std::vector<double> v(size);
    for (std::size_t x = 0; x < size; ++x) {
        double acc = 0.0;
        for (std::size_t y = 1; y < size; ++y)
            if (std::popcount(x & y) % 2 == 1) acc += logs[y - 1];
        v[x] = fd.big_lambda * std::exp(acc);
    }
    return v;
}

}  // namespace dzx
