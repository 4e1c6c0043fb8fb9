#pragma once

#include <string>

#include "cosp/cumulants.hpp"

namespace cosp {

enum class OptionKind { Put, Call };

struct OptionSpec {
    double forward;   // F(0,T), > 0
    double strike;    // > 0
    double maturity;  // year fraction, > 0
    double discount;  // B(T), in (0, 1]
    OptionKind kind = OptionKind::Put;
};

void validate(const OptionSpec& spec);

enum class Method { Classic, Improved, Reference };

enum class Fallback { None, Intrinsic, Zero };

const char* to_string(Method m);
const char* to_string(Fallback f);

struct PriceResult {
    double price;
    Method method;
    int n;  // series length, or node count for the reference pricer
    TruncationRange range;
    Fallback fallback = Fallback::None;
};

}  // namespace cosp
