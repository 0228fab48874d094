#include "fracdyn/models.hpp"

#include <cmath>

namespace fracdyn {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw DomainError(std::string(what) + " must be finite");
}

std::map<std::string, double> merge_defaults(
    PresetName name, const std::map<std::string, double>& given) {
    std::map<std::string, double> params;
    switch (name) {
        case PresetName::zeeman: params = {{"omega_L", 2.0}}; break;
        case PresetName::yang_lee_one_site: params = {{"xi", 0.5}}; break;
        case PresetName::pt_waveguide:
            params = {{"varsigma", 1.0}, {"epsilon", 0.5}};
            break;
    }
    for (const auto& [key, value] : given) {
        auto it = params.find(key);
        if (it == params.end())
            throw DomainError("preset '" + std::string(to_string(name)) +
                              "' has no parameter '" + key + "'");
        require_finite(value, key.c_str());
        it->second = value;
    }
    return params;
}

StateVector default_state(PresetName name) {
    switch (name) {
        case PresetName::zeeman: return {1.0, 0.0};
        case PresetName::yang_lee_one_site: return {0.0, 1.0};
        case PresetName::pt_waveguide: return {kInvSqrt2, kInvSqrt2};
    }
    throw DomainError("unknown preset");
}

} // namespace

OmegaVector zeeman(double omega_L) {
    require_finite(omega_L, "omega_L");
    return {0.0, 0.0, -0.5 * omega_L};
}

OmegaVector yang_lee_one_site(double xi) {
    require_finite(xi, "xi");
    return {Complex{0.0, -0.5 * xi}, 0.0, -0.5};
}

OmegaVector yang_lee_chain(int n_sites, double coupling, double xi) {
    if (n_sites != 1 || coupling != 0.0)
        throw UnsupportedModel(
            "yang_lee_chain: only the one-site (N=1), zero-coupling (J=0) "
            "reduction is supported");
    return yang_lee_one_site(xi);
}

OmegaVector pt_waveguide(double varsigma, double epsilon) {
    require_finite(varsigma, "varsigma");
    require_finite(epsilon, "epsilon");
    return {varsigma, 0.0, Complex{0.0, -epsilon}};
}

const char* to_string(PresetName name) {
    switch (name) {
        case PresetName::zeeman: return "zeeman";
        case PresetName::yang_lee_one_site: return "yang_lee_one_site";
        case PresetName::pt_waveguide: return "pt_waveguide";
    }
    return "?";
}

OmegaVector Preset::omega() const {
    switch (name) {
        case PresetName::zeeman: return zeeman(parameters.at("omega_L"));
        case PresetName::yang_lee_one_site:
            return yang_lee_one_site(parameters.at("xi"));
        case PresetName::pt_waveguide:
            return pt_waveguide(parameters.at("varsigma"),
                                parameters.at("epsilon"));
    }
    throw DomainError("unknown preset");
}

Preset make_preset(PresetName name) { return make_preset(name, {}); }

Preset make_preset(PresetName name, const std::map<std::string, double>& parameters) {
    return Preset{name, merge_defaults(name, parameters), default_state(name),
                  DysonInit{0.0, Complex{1.5, 0.0}, 2.0}};
}

} // namespace fracdyn
