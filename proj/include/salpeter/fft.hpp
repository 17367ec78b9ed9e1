#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace salpeter::detail {

using cplx = std::complex<double>;

// Plan cache keyed by (size, sign). Plans are created FFTW_UNALIGNED so they
// can be executed on any caller buffer via fftw_execute_dft; planning is
// serialized (the FFTW planner is not thread-safe), execution is reentrant.
inline fftw_plan plan_for(int n, int sign) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(n, sign);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    // Planned out-of-place; every execution below is out-of-place too.
    std::vector<cplx> din(static_cast<size_t>(n)), dout(static_cast<size_t>(n));
    auto* bin = reinterpret_cast<fftw_complex*>(din.data());
    auto* bout = reinterpret_cast<fftw_complex*>(dout.data());
    fftw_plan p = fftw_plan_dft_1d(n, bin, bout, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
    cache.emplace(key, p);
    return p;
}

/// Unnormalized DFT, out[k] = sum_n in[n] exp(sign * 2*pi*i*k*n/N).
inline void dft(std::span<const cplx> in, std::span<cplx> out, int sign) {
    if (in.size() != out.size()) throw std::invalid_argument("dft: size mismatch");
    const int n = static_cast<int>(in.size());
    fftw_plan p = plan_for(n, sign == +1 ? FFTW_BACKWARD : FFTW_FORWARD);
    if (in.data() == out.data()) {
        std::vector<cplx> tmp(in.begin(), in.end());
        dft(tmp, out, sign);
        return;
    }
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(p, src, dst);
}

inline std::vector<cplx> dft(std::span<const cplx> in, int sign) {
    std::vector<cplx> out(in.size());
    dft(in, out, sign);
    return out;
}

}  // namespace salpeter::detail
