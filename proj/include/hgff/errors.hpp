/*
* Copyright 2026 The hgff Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace hgff {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define HGFF_ERROR(Name)                                              \
    struct Name : Error {                                             \
        using Error::Error;                                           \
        const char* kind() const noexcept override { return #Name; } \
    }

HGFF_ERROR(DivisionByZero);
HGFF_ERROR(ConductorMismatch);
HGFF_ERROR(NotCoprime);
HGFF_ERROR(NotDivisor);
HGFF_ERROR(NonPrimeP);
HGFF_ERROR(BoundExceeded);
HGFF_ERROR(ZeroHasNoDlog);
HGFF_ERROR(PairingViolation);
HGFF_ERROR(ArityMismatch);
HGFF_ERROR(UnsatisfiableInField);
HGFF_ERROR(BadLambda);
HGFF_ERROR(NonIntegerPowerSum);
HGFF_ERROR(UnknownIdentity);
HGFF_ERROR(UsageError);

#undef HGFF_ERROR

}  // namespace hgff
