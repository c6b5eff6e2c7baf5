#include "bolab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

// FFTW plan creation is not thread-safe; fftw_execute_dft on distinct buffers is.
// Plans are created once per (length, direction) with FFTW_ESTIMATE|FFTW_UNALIGNED
// so they can be executed on arbitrary caller-owned storage, and so planning is
// deterministic (no run-to-run tuning).

namespace bolab::detail {

namespace {

class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        std::scoped_lock lock(mutex_);
        auto key = std::pair{n, sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(2) * n);
        fftw_plan p = fftw_plan_dft_1d(n, buf, buf + n, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(const std::complex<double>* in, std::complex<double>* out, int n, int sign) {
    fftw_plan p = cache().get(n, sign);
    // Out-of-place c2c execution leaves the input untouched.
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace

void dft_forward(const std::complex<double>* in, std::complex<double>* out, int n) {
    execute(in, out, n, FFTW_FORWARD);
}

void dft_backward(const std::complex<double>* in, std::complex<double>* out, int n) {
    execute(in, out, n, FFTW_BACKWARD);
}

} // namespace bolab::detail
