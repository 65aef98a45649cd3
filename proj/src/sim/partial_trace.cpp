// Copyright 2026 The qcnn-reupload Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcnn/core/error.hpp"
#include "qcnn/sim/state_vector.hpp"

#include <algorithm>
#include <vector>

namespace qcnn::sim {

namespace {
constexpr std::size_t kMaxReducedQubits = 12;
}

double reduced_expectation_oracle(const StateVector &state, std::size_t qubit,
                                  std::span<const std::size_t> traced_qubits) {
    const std::size_t n = state.num_qubits();
    std::vector<bool> traced(n, false);
    for (const std::size_t t : traced_qubits) {
        if (t >= n) {
            throw SizeError("reduced_expectation_oracle: traced qubit out of range");
        }
        traced[t] = true;
    }
    if (qubit >= n) {
        throw SizeError("reduced_expectation_oracle: qubit out of range");
    }
    if (traced[qubit]) {
        throw SizeError("reduced_expectation_oracle: measured qubit is traced out");
    }

    std::vector<std::size_t> kept;
    std::vector<std::size_t> gone;
    for (std::size_t q = 0; q < n; ++q) {
        (traced[q] ? gone : kept).push_back(q);
    }
    if (kept.size() > kMaxReducedQubits) {
        throw SizeError("reduced_expectation_oracle: reduced state too large");
    }

    // Split a full basis index into (kept index, traced index), each using the
    // same most-significant-first ordering as StateVector.
    auto sub_index = [&](std::size_t full, const std::vector<std::size_t> &qs) {
        std::size_t idx = 0;
        for (const std::size_t q : qs) {
            idx = (idx << 1) | ((full >> state.bit_of(q)) & 1U);
        }
        return idx;
    };

    const std::size_t dim_kept = std::size_t{1} << kept.size();
    const std::size_t dim_gone = std::size_t{1} << gone.size();

    // psi[a][t]: amplitudes rearranged as kept x traced.
    std::vector<Amplitude> psi(dim_kept * dim_gone);
    for (std::size_t i = 0; i < state.size(); ++i) {
        psi[sub_index(i, kept) * dim_gone + sub_index(i, gone)] = state[i];
    }

    // rho[a][b] = sum_t psi[a][t] conj(psi[b][t])
    std::vector<Amplitude> rho(dim_kept * dim_kept);
    for (std::size_t a = 0; a < dim_kept; ++a) {
        for (std::size_t b = 0; b < dim_kept; ++b) {
            Amplitude acc = 0.0;
            for (std::size_t t = 0; t < dim_gone; ++t) {
                acc += psi[a * dim_gone + t] * std::conj(psi[b * dim_gone + t]);
            }
            rho[a * dim_kept + b] = acc;
        }
    }

    // Tr(rho Z_q): Z is diagonal in the computational basis.
    const auto pos = static_cast<std::size_t>(
        std::find(kept.begin(), kept.end(), qubit) - kept.begin());
    const std::size_t z_bit = kept.size() - 1 - pos;
    double value = 0.0;
    for (std::size_t a = 0; a < dim_kept; ++a) {
        const double sign = ((a >> z_bit) & 1U) != 0U ? -1.0 : 1.0;
        value += sign * rho[a * dim_kept + a].real();
    }
    return value;
}

} // namespace qcnn::sim
