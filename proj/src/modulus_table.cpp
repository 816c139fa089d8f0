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

// Generated by tools/gen_modulus_table.py. Do not edit.

#include "modulus_table.hpp"

namespace ascyc::detail {

const std::vector<ModulusEntry>& modulus_table() {
    static const std::vector<ModulusEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 12, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 14, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 15, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 16, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 1, 0, 0, 0, 0, 1}},
        {3, 7, {2, 0, 1, 0, 0, 0, 0, 1}},
        {3, 8, {2, 0, 1, 0, 0, 0, 0, 0, 1}},
        {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
        {3, 10, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
        {5, 2, {2, 0, 1}},
        {5, 3, {1, 1, 0, 1}},
        {5, 4, {2, 0, 0, 0, 1}},
        {5, 5, {1, 4, 0, 0, 0, 1}},
        {5, 6, {2, 1, 0, 0, 0, 0, 1}},
        {7, 2, {1, 0, 1}},
        {7, 3, {2, 0, 0, 1}},
        {7, 4, {1, 1, 0, 0, 1}},
        {7, 5, {3, 1, 0, 0, 0, 1}},
        {11, 2, {1, 0, 1}},
        {11, 3, {4, 1, 0, 1}},
        {11, 4, {2, 1, 0, 0, 1}},
        {13, 2, {2, 0, 1}},
        {13, 3, {2, 0, 0, 1}},
        {13, 4, {2, 0, 0, 0, 1}},
        {17, 2, {3, 0, 1}},
        {17, 3, {3, 1, 0, 1}},
        {19, 2, {1, 0, 1}},
        {19, 3, {2, 0, 0, 1}},
        {23, 2, {1, 0, 1}},
        {23, 3, {3, 1, 0, 1}},
        {29, 2, {2, 0, 1}},
        {29, 3, {4, 1, 0, 1}},
        {31, 2, {1, 0, 1}},
        {31, 3, {3, 0, 0, 1}},
        {37, 2, {2, 0, 1}},
        {37, 3, {2, 0, 0, 1}},
        {41, 2, {3, 0, 1}},
        {43, 2, {1, 0, 1}},
        {47, 2, {1, 0, 1}},
        {53, 2, {2, 0, 1}},
        {59, 2, {1, 0, 1}},
        {61, 2, {2, 0, 1}},
        {67, 2, {1, 0, 1}},
        {71, 2, {1, 0, 1}},
        {73, 2, {5, 0, 1}},
        {79, 2, {1, 0, 1}},
        {83, 2, {1, 0, 1}},
        {89, 2, {3, 0, 1}},
        {97, 2, {5, 0, 1}},
        {101, 2, {2, 0, 1}},
        {103, 2, {1, 0, 1}},
        {107, 2, {1, 0, 1}},
        {109, 2, {2, 0, 1}},
        {113, 2, {3, 0, 1}},
        {127, 2, {1, 0, 1}},
        {131, 2, {1, 0, 1}},
        {137, 2, {3, 0, 1}},
        {139, 2, {1, 0, 1}},
        {149, 2, {2, 0, 1}},
        {151, 2, {1, 0, 1}},
        {157, 2, {2, 0, 1}},
        {163, 2, {1, 0, 1}},
        {167, 2, {1, 0, 1}},
        {173, 2, {2, 0, 1}},
        {179, 2, {1, 0, 1}},
        {181, 2, {2, 0, 1}},
        {191, 2, {1, 0, 1}},
        {193, 2, {5, 0, 1}},
        {197, 2, {2, 0, 1}},
        {199, 2, {1, 0, 1}},
        {211, 2, {1, 0, 1}},
        {223, 2, {1, 0, 1}},
        {227, 2, {1, 0, 1}},
        {229, 2, {2, 0, 1}},
        {233, 2, {3, 0, 1}},
        {239, 2, {1, 0, 1}},
        {241, 2, {7, 0, 1}},
        {251, 2, {1, 0, 1}},
    };
    return table;
}

}  // namespace ascyc::detail
