#pragma once

// Printed genus-6 data, transcribed verbatim.

#include <array>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace golden {

// a_0 ... a_13; the x^14 coefficient is 1.
inline constexpr std::array<const char*, 14> kF0Coeffs = {
    "1323672381818030813822668800",
    "1276845913825955586899050496",
    "595803405154942945879752704",
    "533014336994715937945092096",
    "1820210247550502007557029888",
    "607434202225985243206107136",
    "585983998625429997308035072",
    "1422826957983635547417870336",
    "387529952672653585935499264",
    "1685990245699349559300014080",
    "186398290364786000921886720",
    "1120184609916242124087443456",
    "10247323490706358348644352",
    "1122976550518058592759939074",
};

inline constexpr const char* kN = "2201590757511816436065484800";

inline maxgal::ZPoly f0() {
    std::vector<maxgal::Integer> c;
    for (const char* s : kF0Coeffs) c.push_back(maxgal::parse_integer(s));
    c.emplace_back(1);
    return maxgal::ZPoly(c);
}

inline maxgal::Integer N() { return maxgal::parse_integer(kN); }

} // namespace golden
