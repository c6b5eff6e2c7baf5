#pragma once

#include <complex>

namespace bolab::detail {

// Unnormalized complex DFT, out-of-place (in != out), any even length.
// forward: out_k = sum_j in_j e^{-2 pi i jk/n};  backward: conjugate sign.
// Plans are cached per length and shared across threads.
void dft_forward(const std::complex<double>* in, std::complex<double>* out, int n);
void dft_backward(const std::complex<double>* in, std::complex<double>* out, int n);

} // namespace bolab::detail
