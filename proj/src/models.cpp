#include "cosp/models.hpp"

#include <cmath>

#include "cosp/errors.hpp"
#include "cosp/option.hpp"

namespace cosp {

namespace {

bool finite(double x) { return std::isfinite(x); }

void check(bool cond, const char* msg) {
    if (!cond) throw ValidationError(msg);
}

void validate_heston(const HestonParams& p, const char* tag) {
    check(finite(p.kappa) && p.kappa > 0.0, tag);
    check(finite(p.theta) && p.theta >= 0.0, tag);
    check(finite(p.sigma) && p.sigma >= 0.0, tag);
    check(finite(p.rho) && std::abs(p.rho) <= 1.0, tag);
    check(finite(p.v0) && p.v0 >= 0.0, tag);
}

}  // namespace

ModelKind model_kind(const ModelParams& model) {
    return std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BlackParams>) return ModelKind::Black;
            else if constexpr (std::is_same_v<T, HestonParams>) return ModelKind::Heston;
            else if constexpr (std::is_same_v<T, SvjParams>) return ModelKind::Svj;
            else return ModelKind::DoubleHeston;
        },
        model);
}

std::string model_name(const ModelParams& model) {
    switch (model_kind(model)) {
        case ModelKind::Black: return "black";
        case ModelKind::Heston: return "heston";
        case ModelKind::Svj: return "svj";
        case ModelKind::DoubleHeston: return "double-heston";
    }
    return "?";
}

void validate(const OptionSpec& spec) {
    check(finite(spec.forward) && spec.forward > 0.0, "option: forward must be > 0");
    check(finite(spec.strike) && spec.strike > 0.0, "option: strike must be > 0");
    check(finite(spec.maturity) && spec.maturity > 0.0, "option: maturity must be > 0");
    check(finite(spec.discount) && spec.discount > 0.0 && spec.discount <= 1.0,
          "option: discount must be in (0, 1]");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::Classic: return "classic";
        case Method::Improved: return "improved";
        case Method::Reference: return "reference";
    }
    return "?";
}

const char* to_string(Fallback f) {
    switch (f) {
        case Fallback::None: return "none";
        case Fallback::Intrinsic: return "intrinsic";
        case Fallback::Zero: return "zero";
    }
    return "?";
}

void validate(const ModelParams& model) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BlackParams>) {
                check(finite(p.sigma) && p.sigma > 0.0, "black: sigma must be > 0");
            } else if constexpr (std::is_same_v<T, HestonParams>) {
                validate_heston(p, "heston: need kappa > 0, theta >= 0, sigma >= 0, |rho| <= 1, v0 >= 0");
            } else if constexpr (std::is_same_v<T, SvjParams>) {
                validate_heston(p.heston, "svj: invalid heston leg");
                check(finite(p.lambda) && p.lambda >= 0.0, "svj: lambda must be >= 0");
                check(finite(p.kbar) && p.kbar > -1.0, "svj: kbar must be > -1");
                check(finite(p.delta) && p.delta >= 0.0, "svj: delta must be >= 0");
            } else {
                validate_heston(p.leg1, "double-heston: invalid leg 1");
                validate_heston(p.leg2, "double-heston: invalid leg 2");
            }
        },
        model);
}

}  // namespace cosp
