#include "fftsim/resource_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fftsim/util.hpp"

#include <json.hpp>

namespace fftsim {

const char* to_string(Design d) { return d == Design::proposed ? "proposed" : "traditional"; }
const char* to_string(Scope s) { return s == Scope::fft1d ? "fft1d" : "fft2d"; }

ResourceReport resources(int n, Design design, Scope scope) {
    require_fft_length(n, "resource_model");
    const std::int64_t half = n / 2;
    const std::int64_t stages = log2_exact(n);

    ResourceReport r;
    r.n = n;
    r.design = design;
    r.scope = scope;
    const std::int64_t blocks = (scope == Scope::fft2d) ? 2 : 1;
    r.butterfly_units = (design == Design::proposed) ? blocks * half : blocks * half * stages;
    r.multipliers = r.butterfly_units;
    r.adders = 2 * r.butterfly_units;
    return r;
}

Fraction reduction_factor(int n) {
    require_fft_length(n, "resource_model");
    if (n < 4)
        throw ConfigError("resource_model: reduction factor needs n >= 4 (more than one stage)");
    return Fraction{1, log2_exact(n)};
}

std::vector<SweepRow> sweep_report(std::vector<int> n_values, Scope scope) {
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
    std::vector<SweepRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        SweepRow row;
        row.n = n;
        row.proposed = resources(n, Design::proposed, scope);
        row.traditional = resources(n, Design::traditional, scope);
        row.ratio = reduction_factor(n);
        rows.push_back(row);
    }
    return rows;
}

namespace {

nlohmann::json report_json(const ResourceReport& r) {
    return nlohmann::json{{"n", r.n},
                          {"design", to_string(r.design)},
                          {"scope", to_string(r.scope)},
                          {"butterfly_units", r.butterfly_units},
                          {"multipliers", r.multipliers},
                          {"adders", r.adders}};
}

} // namespace

std::string report_to_json(const ResourceReport& r) { return report_json(r).dump(2); }

std::string resources_to_json(int n) {
    const Fraction alpha = reduction_factor(n);
    nlohmann::json j;
    j["n"] = n;
    j["reports"] = nlohmann::json::array();
    for (Scope scope : {Scope::fft1d, Scope::fft2d})
        for (Design design : {Design::proposed, Design::traditional})
            j["reports"].push_back(report_json(resources(n, design, scope)));
    j["reduction_factor"] = {{"num", alpha.num}, {"den", alpha.den}, {"value", alpha.value()}};
    return j.dump(2);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "n,proposed_bu,proposed_mult,proposed_add,"
           "traditional_bu,traditional_mult,traditional_add,ratio_num,ratio_den,ratio\n";
    for (const SweepRow& r : rows) {
        out << r.n << ',' << r.proposed.butterfly_units << ',' << r.proposed.multipliers << ','
            << r.proposed.adders << ',' << r.traditional.butterfly_units << ','
            << r.traditional.multipliers << ',' << r.traditional.adders << ',' << r.ratio.num
            << ',' << r.ratio.den << ',' << r.ratio.value() << '\n';
    }
    return out.str();
}

} // namespace fftsim
