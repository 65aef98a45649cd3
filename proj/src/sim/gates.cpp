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

#include "qcnn/sim/gates.hpp"

#include <cmath>

namespace qcnn::sim {

Mat2 rotation_matrix(Axis axis, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (axis) {
    case Axis::X:
        return {Amplitude{c, 0.0}, Amplitude{0.0, -s}, Amplitude{0.0, -s},
                Amplitude{c, 0.0}};
    case Axis::Y:
        return {Amplitude{c, 0.0}, Amplitude{-s, 0.0}, Amplitude{s, 0.0},
                Amplitude{c, 0.0}};
    case Axis::Z:
        return {Amplitude{c, -s}, Amplitude{0.0, 0.0}, Amplitude{0.0, 0.0},
                Amplitude{c, s}};
    }
    return {};
}

} // namespace qcnn::sim
