// Copyright 2026 The frmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "frmsim/spin_core.hpp"

// Optical bench elements as SU(2) rotations with a forward/backward
// propagation rule.
//
// A reciprocal element (wave plate, birefringent fiber, Pockels cell) seen
// from the reversed direction acts as exp[-i (theta/2) (n' . sigma)] with
// n' = (n1, -n2, -n3), which closes to sigma_1 U^dagger sigma_1.  A Faraday
// element keeps its rotation axis (the magnetization pseudo-vector is blind
// to the reversal) and only flips the phase sign, i.e. retraces as U^dagger.

namespace frmsim {

enum class ElementKind { Reciprocal, Faraday };
enum class Direction { Forward, Backward };

/// What terminates the round trip: a bare mirror or the Faraday mirror.
enum class Turn { Mirror, Frm };

struct OpticalElement {
  OpticalElement(ElementKind kind, const AxisAngle& aa, std::string label);

  ElementKind kind;
  AxisAngle aa;
  std::string label;

  Unitary2 forward_unitary() const { return axis_angle_unitary(aa); }
};

/// Ordered bench elements; front() sits nearest the source.
struct ElementChain {
  std::vector<OpticalElement> elements;
};

/// Mirror reflection on the Poincare sphere: i sigma_3.
Unitary2 mirror_reflection();

/// Single 45-degree Faraday-rotator pass: exp(+- i (pi/4) sigma_2).
/// The backward pass inverts the phase, not the axis.
Unitary2 faraday_pass(Direction d);

/// U2- U3 U2+ with a built-in consistency check that it equals i sigma_1.
Unitary2 frm_unitary();

Unitary2 turn_unitary(Turn t);

/// Backward-pass unitary of an element.
Unitary2 retrace(const OpticalElement& e);

/// The element whose forward pass equals retrace(e); retracing it twice
/// recovers the original forward unitary.
OpticalElement retraced_element(const OpticalElement& e);

/// Reciprocal retarder with fast axis at `physical_angle` to horizontal.
/// Spin-space axis is (sin 2a, 0, cos 2a); the angle is the retardance.
OpticalElement linear_retarder(double physical_angle, double retardance,
                               std::string label = "retarder");

/// Faraday element with spin-space rotation angle theta; axis pinned to
/// sigma_2 (the device rotates polarization without changing its character).
OpticalElement faraday_rotator(double theta, std::string label = "FR");

/// Forward through the chain, the turn unitary, then every element retraced
/// in reverse order.
Unitary2 round_trip_unitary(const ElementChain& chain, Turn turn);

}  // namespace frmsim
