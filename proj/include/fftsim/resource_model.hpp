#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fftsim/errors.hpp"

namespace fftsim {

enum class Design { proposed, traditional };
enum class Scope { fft1d, fft2d };

const char* to_string(Design d);
const char* to_string(Scope s);

// Butterfly/multiplier/adder budget of one design point. Every butterfly
// carries one complex multiplier and two adder/subtractors, so the three
// counts are locked together.
struct ResourceReport {
    int n = 0;
    Design design = Design::proposed;
    Scope scope = Scope::fft2d;
    std::int64_t butterfly_units = 0;
    std::int64_t multipliers = 0;
    std::int64_t adders = 0;
};

// Exact rational, used for the reduction factor.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Fraction&) const = default;
};

// Butterfly-unit budgets:
//   proposed    1D: n/2          2D: n
//   traditional 1D: (n/2)*log2n  2D: n*log2n
ResourceReport resources(int n, Design design, Scope scope);

// Proposed-over-traditional butterfly ratio, exactly 1/log2(n).
Fraction reduction_factor(int n);

struct SweepRow {
    int n = 0;
    ResourceReport proposed;
    ResourceReport traditional;
    Fraction ratio;
};

// One row per n, sorted ascending, both designs side by side.
std::vector<SweepRow> sweep_report(std::vector<int> n_values, Scope scope = Scope::fft2d);

std::string report_to_json(const ResourceReport& r);
std::string resources_to_json(int n); // both designs, both scopes, plus the ratio
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

} // namespace fftsim
