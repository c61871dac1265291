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

#ifndef MAGICLAB_ERROR_H
#define MAGICLAB_ERROR_H

#include <stdexcept>
#include <string>

namespace magiclab {

enum class Errc {
    ZeroInverse,
    NotOddPrime,
    NotSymplectic,
    Unsupported,
    DimensionMismatch,
    NotFiniteOrder,
    ZeroVector,
    TooLarge,
    ClosureOverflow,
    NotHermitian,
    NotNormalized,
    NotUnitary,
    UnknownName,
    NonDepolarizedResidual,
    NotInFixedSpace,
    InfeasiblePattern,
    UnknownSuite,
    BadInput,
};

const char *errc_name(Errc code);

class MagicError : public std::runtime_error {
   public:
    MagicError(Errc code, const std::string &what);
    Errc code() const noexcept {
        return code_;
    }

   private:
    Errc code_;
};

}  // namespace magiclab

#endif
