// Copyright 2026 The MagicLab Authors
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

#include "magiclab/error.h"

namespace magiclab {

const char *errc_name(Errc code) {
    switch (code) {
        case Errc::ZeroInverse:
            return "ZeroInverse";
        case Errc::NotOddPrime:
            return "NotOddPrime";
        case Errc::NotSymplectic:
            return "NotSymplectic";
        case Errc::Unsupported:
            return "Unsupported";
        case Errc::DimensionMismatch:
            return "DimensionMismatch";
        case Errc::NotFiniteOrder:
            return "NotFiniteOrder";
        case Errc::ZeroVector:
            return "ZeroVector";
        case Errc::TooLarge:
            return "TooLarge";
        case Errc::ClosureOverflow:
            return "ClosureOverflow";
        case Errc::NotHermitian:
            return "NotHermitian";
        case Errc::NotNormalized:
            return "NotNormalized";
        case Errc::NotUnitary:
            return "NotUnitary";
        case Errc::UnknownName:
            return "UnknownName";
        case Errc::NonDepolarizedResidual:
            return "NonDepolarizedResidual";
        case Errc::NotInFixedSpace:
            return "NotInFixedSpace";
        case Errc::InfeasiblePattern:
            return "InfeasiblePattern";
        case Errc::UnknownSuite:
            return "UnknownSuite";
        case Errc::BadInput:
            return "BadInput";
    }
    return "Unknown";
}

MagicError::MagicError(Errc code, const std::string &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {
}

}  // namespace magiclab
