#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgan {

using cplx = std::complex<double>;

// Dense n-qubit state vector. Qubit 0 is the most significant bit of the
// basis index, so amplitude i corresponds to |i> with i = sum b_k 2^(n-1-k).
class StateVector {
public:
    explicit StateVector(int qubits)
        : n_(check_qubits(qubits)), amps_(std::size_t{1} << qubits) {
        amps_[0] = cplx{1.0, 0.0};
    }

    StateVector(int qubits, std::vector<cplx> amps)
        : n_(check_qubits(qubits)), amps_(std::move(amps)) {
        if (amps_.size() != (std::size_t{1} << n_))
            throw std::domain_error("amplitude vector length must be 2^n");
    }

    static StateVector basis_state(int qubits, std::size_t index) {
        StateVector s(qubits);
        if (index >= s.amps_.size())
            throw std::domain_error("basis index " + std::to_string(index) +
                                    " out of range for " + std::to_string(qubits) +
                                    " qubits");
        s.amps_[0] = cplx{0.0, 0.0};
        s.amps_[index] = cplx{1.0, 0.0};
        return s;
    }

    int qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amps() const { return amps_; }
    cplx amp(std::size_t i) const { return amps_.at(i); }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    // u is a 2x2 matrix in row-major order {u00, u01, u10, u11}.
    void apply_single_qubit(int wire, const std::array<cplx, 4>& u) {
        const std::size_t mask = wire_mask(wire);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & mask) continue;
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i | mask];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i | mask] = u[2] * a0 + u[3] * a1;
        }
    }

    void apply_rx(int wire, double theta) {
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        apply_single_qubit(wire, {cplx{c, 0}, cplx{0, -s}, cplx{0, -s}, cplx{c, 0}});
    }

    void apply_ry(int wire, double theta) {
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        apply_single_qubit(wire, {cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0}});
    }

    void apply_rz(int wire, double theta) {
        const cplx em = std::polar(1.0, -theta / 2.0);
        const cplx ep = std::polar(1.0, theta / 2.0);
        apply_single_qubit(wire, {em, cplx{0, 0}, cplx{0, 0}, ep});
    }

    // Rz(az) . Ry(ay) . Rx(ax), x rotation first.
    void apply_rot(int wire, double ax, double ay, double az) {
        check_angles(ax, ay, az);
        apply_rx(wire, ax);
        apply_ry(wire, ay);
        apply_rz(wire, az);
    }

    void apply_cnot(int control, int target) {
        if (control == target)
            throw std::domain_error("cnot control and target must differ");
        const std::size_t cmask = wire_mask(control);
        const std::size_t tmask = wire_mask(target);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cmask) && !(i & tmask))
                std::swap(amps_[i], amps_[i | tmask]);
        }
    }

    // <Z> on a wire: +1 weight when the wire's bit is 0, -1 when 1.
    double expect_z(int wire) const {
        const std::size_t mask = wire_mask(wire);
        double e = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i)
            e += (i & mask) ? -std::norm(amps_[i]) : std::norm(amps_[i]);
        return e;
    }

private:
    static int check_qubits(int qubits) {
        if (qubits < 1 || qubits > 30)
            throw std::domain_error("qubit count must be in [1, 30]");
        return qubits;
    }

    static void check_angles(double ax, double ay, double az) {
        if (!std::isfinite(ax) || !std::isfinite(ay) || !std::isfinite(az))
            throw std::domain_error("rotation angles must be finite");
    }

    std::size_t wire_mask(int wire) const {
        if (wire < 0 || wire >= n_)
            throw std::domain_error("wire " + std::to_string(wire) +
                                    " out of range for " + std::to_string(n_) +
                                    " qubits");
        return std::size_t{1} << (n_ - 1 - wire);
    }

    int n_;
    std::vector<cplx> amps_;
};

// Three-axis rotation angles for one qubit.
struct RotTriple {
    double ax = 0.0;
    double ay = 0.0;
    double az = 0.0;
};

} // namespace qgan
