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
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ascyc/report.hpp"

namespace ascyc {

enum class GridMode { Census, Units, Identity, Splitting };

std::string_view mode_name(GridMode m);

/**
 * Line-oriented grid file:
 *
 *   # comment
 *   budget 1048576          census equations per entry
 *   units_budget 65536      residues per unit-group scan
 *   smoke_degree 6          degree bound of the splitting test
 *   p t prime_expr mode params
 *
 * prime_expr is a polynomial without spaces (T^2+T+g) or all<=N for every
 * monic irreducible of degree at most N. params is a comma list of values
 * and ranges a..b. In census and identity mode every value must be prime
 * to p.
 */
struct GridEntry {
    std::uint32_t p = 0, t = 0;
    std::string prime_expr;
    GridMode mode = GridMode::Census;
    std::vector<std::int64_t> params;
    std::size_t line = 0;
};

struct GridSpec {
    std::vector<GridEntry> entries;
    std::uint64_t budget = 1U << 20;
    std::uint64_t units_budget = 1U << 16;
    std::int64_t smoke_degree = 6;
};

GridSpec parse_grid(std::string_view text);
GridSpec load_grid(const std::filesystem::path& path);

std::vector<PrimePoly> expand_primes(const FieldPtr& field, std::string_view prime_expr);

struct GridRow {
    std::size_t entry;
    GridMode mode;
    std::string field;
    std::string prime;
    std::int64_t param;
    bool passed;
    std::string note;  // short human summary
    report::json detail;
};

/// Runs every entry in grid order; progress sees each finished row.
std::vector<GridRow> run_grid(const GridSpec& grid, const std::function<void(const GridRow&)>& progress = {});

}  // namespace ascyc
