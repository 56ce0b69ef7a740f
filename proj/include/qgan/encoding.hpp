#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "statevec.hpp"

namespace qgan {

// Raw data values together with their cached Euclidean norm mu.
// The normalized form values[i] / mu is what gets amplitude-encoded.
struct DataVector {
    std::vector<double> values;
    double mu = 0.0;

    std::vector<double> normalized() const {
        std::vector<double> v(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i] / mu;
        return v;
    }
};

inline DataVector normalize(const std::vector<double>& values) {
    double sq = 0.0;
    for (double x : values) sq += x * x;
    const double mu = std::sqrt(sq);
    if (mu == 0.0)
        throw degenerate_input_error("cannot normalize all-zero vector (mu = 0)");
    return DataVector{values, mu};
}

// Places the normalized values into the first amplitudes of an n-qubit
// state, padding the remainder with exact zeros.
inline StateVector amplitude_encode(const DataVector& data, int qubits) {
    const std::size_t dim = std::size_t{1} << qubits;
    if (data.values.size() > dim)
        throw capacity_error(std::to_string(data.values.size()) +
                             " values exceed the 2^" + std::to_string(qubits) +
                             " amplitude capacity");
    std::vector<cplx> amps(dim);
    for (std::size_t i = 0; i < data.values.size(); ++i)
        amps[i] = cplx{data.values[i] / data.mu, 0.0};
    return StateVector(qubits, std::move(amps));
}

} // namespace qgan
