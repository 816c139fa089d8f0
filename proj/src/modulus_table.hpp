/*
   Copyright 2026 The ascyc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

namespace ascyc::detail {

struct ModulusEntry {
    std::uint32_t p;
    std::uint32_t t;
    std::vector<std::uint32_t> coeffs;  // low-to-high, monic
};

const std::vector<ModulusEntry>& modulus_table();

}  // namespace ascyc::detail
