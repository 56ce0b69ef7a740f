#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qgan {

enum class MeasureMode {
    MeanPhoton,   // <n> = |alpha|^2
    XQuadrature,  // <x> = 2 Re(alpha), hbar = 2 convention
};

// Single qumode prepared from vacuum by displacement and rotation only,
// so the full Gaussian state is a coherent state: one complex amplitude.
class QumodeState {
public:
    QumodeState() = default;

    static QumodeState vacuum() { return QumodeState{}; }

    std::complex<double> disp() const { return disp_; }
    bool is_vacuum() const { return disp_ == std::complex<double>{}; }

    QumodeState& displace(double alpha) {
        if (!std::isfinite(alpha))
            throw std::domain_error("displacement must be finite");
        disp_ += alpha;
        return *this;
    }

    QumodeState& rotate(double phi) {
        if (!std::isfinite(phi))
            throw std::domain_error("rotation angle must be finite");
        disp_ *= std::polar(1.0, phi);
        return *this;
    }

    double measure(MeasureMode mode) const {
        switch (mode) {
        case MeasureMode::MeanPhoton: return std::norm(disp_);
        case MeasureMode::XQuadrature: return 2.0 * disp_.real();
        }
        throw std::logic_error("unknown measure mode");
    }

private:
    std::complex<double> disp_{};
};

} // namespace qgan
