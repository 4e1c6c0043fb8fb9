#pragma once

#include <string>
#include <variant>

namespace cosp {

// Lognormal forward dynamics with constant volatility.
struct BlackParams {
    double sigma;  // volatility per sqrt(year), > 0
};

struct HestonParams {
    double kappa;  // mean-reversion speed (1/year), > 0
    double theta;  // long-run variance, >= 0
    double sigma;  // vol-of-vol, >= 0
    double rho;    // correlation, in [-1, 1]
    double v0;     // initial variance, >= 0
};

// Heston diffusion plus lognormal jumps (Bates).
struct SvjParams {
    HestonParams heston;
    double lambda;  // jump intensity (1/year), >= 0
    double kbar;    // mean relative jump size, > -1
    double delta;   // jump-size log-volatility, >= 0
};

// Two independent variance processes driving one asset.
struct DoubleHestonParams {
    HestonParams leg1;
    HestonParams leg2;
};

using ModelParams = std::variant<BlackParams, HestonParams, SvjParams, DoubleHestonParams>;

enum class ModelKind { Black, Heston, Svj, DoubleHeston };

ModelKind model_kind(const ModelParams& model);
std::string model_name(const ModelParams& model);

// Throws ValidationError when a parameter set breaks its invariants.
void validate(const ModelParams& model);

}  // namespace cosp
