// Copyright 2026 The realvar Authors
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

#include <iosfwd>
#include <string>

#include "realvar/sdp.hpp"

namespace realvar {

/// Writes a DenseSdp as an SDPA sparse file (one block). The SDPA primal
/// variable x is our y with objective -b and F_0 = -C, F_i = -A_i.
void write_sdpa(std::ostream& os, const DenseSdp& sdp, const std::string& comment = "realvar");

/// Reads back a DenseSdp from SDPA sparse format (single block only).
DenseSdp read_sdpa(std::istream& is);

struct SdpaSolution {
  Eigen::VectorXd x;  // our y
  Eigen::MatrixXd X;  // SDPA primal matrix = our Z
  Eigen::MatrixXd Y;  // SDPA dual matrix = our X
};

/// Parses the "xVec", "xMat" and "yMat" sections of an SDPA result file.
SdpaSolution read_sdpa_solution(std::istream& is, Eigen::Index block_size);

/// Backend that runs `command <input.dat-s> <output>` and reads the result.
/// The command must produce an SDPA-style result file.
SdpBackend external_sdpa_backend(const std::string& command, const std::string& work_dir = "");

}  // namespace realvar
